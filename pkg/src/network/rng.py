"""
Seedable random streams

Every stochastic operation takes an explicit RngStream. Streams are built on
numpy's PCG64 bit generator seeded through a SeedSequence, so a stream is fully
determined by its seed and its spawn key; independent child streams for
parallel work are derived by extending the key instead of sharing state.
"""

import zlib

import numpy as np

from utils.errors import InvalidSpecError


def label_key(label):
    """
    Map a text label (condition name, measure name) to a stable spawn key entry

    Args:
        label (str): Any text

    Returns:
        int: Unsigned 32-bit key, identical across runs and platforms
    """
    return zlib.crc32(str(label).encode('utf-8'))


class RngStream:
    def __init__(self, seed=0, key=()):
        """
        Initialize random stream

        Args:
            seed (int): Non-negative 64-bit seed
            key (tuple): Spawn key of non-negative integers identifying a child stream
        """
        seed = int(seed)
        if seed < 0 or seed >= 2 ** 64:
            raise InvalidSpecError(f"Seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        self.key = tuple(int(k) for k in key)
        if any(k < 0 for k in self.key):
            raise InvalidSpecError(f"Spawn key entries must be non-negative: {self.key}")
        self.generator = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence(self.seed, spawn_key=self.key))
        )

    def derive(self, *keys):
        """
        Derive an independent child stream

        Args:
            *keys: Integers (or strings, hashed with label_key) appended to the spawn key

        Returns:
            RngStream: Child stream; its draws do not depend on how much this stream was used
        """
        extra = tuple(label_key(k) if isinstance(k, str) else int(k) for k in keys)
        return RngStream(self.seed, self.key + extra)

    def integers(self, high, size=None):
        """Uniform integers in [0, high)"""
        return self.generator.integers(0, high, size=size)

    def random(self, size=None):
        """Uniform floats in [0, 1)"""
        return self.generator.random(size)

    def uniform(self, low, high, size=None):
        return self.generator.uniform(low, high, size)

    def normal(self, scale=1.0, size=None):
        return self.generator.normal(0.0, scale, size)

    def binomial(self, trials, p, size=None):
        return self.generator.binomial(trials, p, size)

    def choice(self, options, size=None, replace=True):
        return self.generator.choice(options, size=size, replace=replace)

    def permutation(self, n):
        return self.generator.permutation(n)

    def __repr__(self):
        return f"RngStream(seed={self.seed}, key={self.key})"
