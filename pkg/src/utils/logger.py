"""
Logging configuration and utilities
"""

import logging
import logging.handlers
import os
from pathlib import Path

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def parse_size(size):
    """
    Parse a human readable size such as "10MB" into bytes

    Args:
        size (str|int): Size string ("10MB", "512KB") or plain byte count

    Returns:
        int: Size in bytes
    """
    if isinstance(size, int):
        return size
    size = str(size).strip().upper()
    if size.endswith('MB'):
        return int(size[:-2]) * 1024 * 1024
    if size.endswith('KB'):
        return int(size[:-2]) * 1024
    return int(size)


def setup_logging(config=None):
    """
    Setup logging configuration

    Args:
        config (dict): Logging configuration (the ``logging`` config section)

    Returns:
        logging.Logger: Configured root logger
    """
    if config is None:
        config = {}

    log_level = os.environ.get('MBN_LOG_LEVEL') or config.get('log_level', 'INFO')
    log_file = config.get('log_file')
    max_log_size = config.get('max_log_size', '10MB')
    backup_count = config.get('backup_count', 5)

    numeric_level = getattr(logging, str(log_level).upper(), logging.INFO)

    logger = logging.getLogger()
    logger.setLevel(numeric_level)
    logger.handlers.clear()

    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    # Console goes to stderr so stdout stays clean for piped results
    console_handler = logging.StreamHandler()
    console_handler.setLevel(numeric_level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        try:
            log_path = Path(log_file)
            log_path.parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.handlers.RotatingFileHandler(
                log_path,
                maxBytes=parse_size(max_log_size),
                backupCount=backup_count
            )
            file_handler.setLevel(numeric_level)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
        except Exception as e:
            logger.warning(f"Could not setup file logging: {e}")

    return logger
