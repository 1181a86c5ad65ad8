"""
Optimized three-node weight presets and search masks
"""

import numpy as np

from utils.errors import InvalidSpecError

# Motifs with bidirected edges only: empty, mutual dyad, double dyad, complete
SMALLWORLD_MASK = (1, 4, 12, 16)
MODULARITY_MASK = (1, 2, 4, 9, 12, 16)
# Divergent and input-to-dyad in place of single edge and output-from-dyad
MODULARITY_ALT_MASK = (1, 4, 6, 7, 12, 16)

PRESETS = {
    'smallworld': (-1.351, 0, 0, 1.407, 0, 0, 0, 0, 0, 0, 0, 1.755, 0, 0, 0, 0.567),
    'modularity': (1.852, 1.3, 0, 0.838, 0, 0, 0, 0, 0.084, 0, 0, -2.111, 0, 0, 0, 0.1317),
}

MASKS = {
    'smallworld': SMALLWORLD_MASK,
    'modularity': MODULARITY_MASK,
    'modularity-alt': MODULARITY_ALT_MASK,
}


def get_preset(name):
    """
    Preferred weights of a named preset

    Args:
        name (str): 'smallworld' or 'modularity'

    Returns:
        numpy.ndarray: 16 weights
    """
    try:
        return np.array(PRESETS[name], dtype=float)
    except KeyError:
        raise InvalidSpecError(f"Unknown preset {name!r}, expected one of {sorted(PRESETS)}") from None


def get_mask(name):
    try:
        return MASKS[name]
    except KeyError:
        raise InvalidSpecError(f"Unknown mask {name!r}, expected one of {sorted(MASKS)}") from None


class WeightTemplate:
    """Weight vector with free entries on a mask of class ids and zeros elsewhere"""

    def __init__(self, mask, n_classes=16):
        mask = tuple(sorted(int(m) for m in mask))
        if not mask:
            raise InvalidSpecError("Weight mask is empty")
        if len(set(mask)) != len(mask) or mask[0] < 1 or mask[-1] > n_classes:
            raise InvalidSpecError(f"Mask {mask} must hold distinct class ids in [1, {n_classes}]")
        self.mask = mask
        self.n_classes = n_classes
        self._index = np.array(mask) - 1

    @property
    def dimension(self):
        return len(self.mask)

    def expand(self, alpha):
        """Full weight vector from the free values"""
        alpha = np.asarray(alpha, dtype=float)
        if alpha.shape != (self.dimension,):
            raise InvalidSpecError(f"Expected {self.dimension} free values, got shape {alpha.shape}")
        w = np.zeros(self.n_classes)
        w[self._index] = alpha
        return w

    def restrict(self, w):
        """Free values of a full weight vector"""
        return np.asarray(w, dtype=float)[self._index].copy()

    def __repr__(self):
        return f"WeightTemplate(mask={self.mask})"
