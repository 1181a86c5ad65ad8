"""
Configuration management utilities
"""

import copy
import json
import logging
import os
from pathlib import Path

import yaml
from dotenv import load_dotenv

VALID_LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']


def _deep_merge(base, override):
    """Recursively merge ``override`` into a copy of ``base``"""
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ConfigManager:
    def __init__(self, config_path=None):
        """
        Initialize configuration manager

        Args:
            config_path (str): Path to a JSON or YAML settings file. Falls back
                to the MBN_CONFIG environment variable (``.env`` honoured),
                then to built-in defaults.
        """
        load_dotenv()
        config_path = config_path or os.environ.get('MBN_CONFIG')
        self.config_path = Path(config_path) if config_path else None
        self.config = {}
        self.logger = logging.getLogger(__name__)

        self.load_config()

    def load_config(self):
        """Load configuration from file, layered over the defaults"""
        defaults = self.get_default_config()
        if self.config_path is None:
            self.config = defaults
            return

        try:
            if self.config_path.exists():
                with open(self.config_path, 'r') as f:
                    if self.config_path.suffix.lower() in ('.yml', '.yaml'):
                        loaded = yaml.safe_load(f) or {}
                    else:
                        loaded = json.load(f)
                self.config = _deep_merge(defaults, loaded)
                self.logger.info(f"Configuration loaded from {self.config_path}")
            else:
                self.logger.warning(f"Configuration file not found: {self.config_path}")
                self.config = defaults

        except Exception as e:
            self.logger.error(f"Failed to load configuration: {e}")
            self.config = defaults

    def get_default_config(self):
        """Get default configuration"""
        return {
            "generator": {
                "motif_size": 3,
                "adapt_weights": True,
                "tie_tolerance": 1e-9
            },
            "metrics": {
                "reference_samples": 20,
                "modularity_include_diagonal": True
            },
            "optimizer": {
                "population_size": 40,
                "generations": 60,
                "tournament_size": 3,
                "crossover_rate": 0.8,
                "mutation_scale": 0.3,
                "mutation_shrink": 1.0,
                "elite_count": 2,
                "init_range": 2.0,
                "networks_per_evaluation": 20,
                "smallworld_n": 100,
                "smallworld_k": [2, 3, 4, 5, 6],
                "modularity_n": 60,
                "modularity_clusters": list(range(2, 21))
            },
            "experiments": {
                "samples": 20,
                "p_grid": [0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5],
                "jobs": 1,
                "format": "csv"
            },
            "logging": {
                "log_level": "INFO",
                "log_file": None,
                "max_log_size": "10MB",
                "backup_count": 5
            }
        }

    def get(self, key, default=None):
        """
        Get configuration value

        Args:
            key (str): Configuration key (supports dot notation)
            default: Default value if key not found

        Returns:
            Configuration value or default
        """
        value = self.config
        for k in key.split('.'):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def set(self, key, value):
        """
        Set configuration value

        Args:
            key (str): Configuration key (supports dot notation)
            value: Value to set
        """
        keys = key.split('.')
        config = self.config
        for k in keys[:-1]:
            config = config.setdefault(k, {})
        config[keys[-1]] = value

    def validate_config(self):
        """
        Validate configuration

        Returns:
            dict: Validation results
        """
        validation = {
            'valid': True,
            'errors': [],
            'warnings': []
        }

        try:
            required_sections = ['generator', 'metrics', 'optimizer', 'experiments', 'logging']
            for section in required_sections:
                if section not in self.config:
                    validation['errors'].append(f"Missing required section: {section}")
                    validation['valid'] = False

            motif_size = self.get('generator.motif_size', 3)
            if motif_size not in (3, 4):
                validation['errors'].append("Motif size must be 3 or 4")
                validation['valid'] = False

            tolerance = self.get('generator.tie_tolerance', 1e-9)
            if not (0 <= tolerance < 1e-3):
                validation['errors'].append("Tie tolerance must be in [0, 1e-3)")
                validation['valid'] = False

            for key in ('generator.adapt_weights', 'metrics.modularity_include_diagonal'):
                if not isinstance(self.get(key, True), bool):
                    validation['errors'].append(f"{key} must be true or false")
                    validation['valid'] = False

            reference = self.get('metrics.reference_samples', 20)
            if reference < 1:
                validation['errors'].append("Reference sample count must be at least 1")
                validation['valid'] = False
            elif reference < 10:
                validation['warnings'].append("Fewer than 10 reference networks make S noisy")

            for key in ('population_size', 'generations', 'tournament_size', 'networks_per_evaluation'):
                if self.get(f'optimizer.{key}', 1) < 1:
                    validation['errors'].append(f"optimizer.{key} must be positive")
                    validation['valid'] = False

            samples = self.get('experiments.samples', 20)
            if samples < 1:
                validation['errors'].append("Sample count must be at least 1")
                validation['valid'] = False
            elif samples < 20:
                validation['warnings'].append("Fewer than 20 samples weakens the rank-sum comparisons")

            if any(not (0 < p <= 1) for p in self.get('experiments.p_grid', [])):
                validation['errors'].append("Connection probabilities must lie in (0, 1]")
                validation['valid'] = False

            log_level = self.get('logging.log_level', 'INFO')
            if str(log_level).upper() not in VALID_LOG_LEVELS:
                validation['errors'].append(f"Invalid log level: {log_level}")
                validation['valid'] = False

        except Exception as e:
            validation['errors'].append(f"Configuration validation error: {e}")
            validation['valid'] = False

        return validation
