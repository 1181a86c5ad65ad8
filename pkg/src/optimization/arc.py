"""
Great-arc interpolation between weight vectors
"""

import numpy as np

from utils.errors import InvalidSpecError

_EPS = 1e-12


def _unit(w, name):
    w = np.asarray(w, dtype=float)
    norm = np.linalg.norm(w)
    if norm < _EPS:
        raise InvalidSpecError(f"{name} is the zero vector")
    return w / norm


def angle(w_a, w_b):
    """Angle phi = arccos(w_a . w_b / (|w_a| |w_b|)) in radians"""
    cosine = np.dot(_unit(w_a, 'w_a'), _unit(w_b, 'w_b'))
    return float(np.arccos(np.clip(cosine, -1.0, 1.0)))


def arc_interpolate(w_a, w_b, t):
    """
    Point at parameter t on the unit-sphere great arc from w_a to w_b

    Args:
        w_a (array-like): Start vector, nonzero
        w_b (array-like): End vector, nonzero and not antiparallel to w_a
        t (float): Arc parameter in [0, 1]

    Returns:
        numpy.ndarray: Unit vector; normalized w_a at t=0, normalized w_b at t=1
    """
    if not 0.0 <= t <= 1.0:
        raise InvalidSpecError(f"Arc parameter must lie in [0, 1], got {t}")
    a = _unit(w_a, 'w_a')
    b = _unit(w_b, 'w_b')
    phi = angle(a, b)
    if np.pi - phi < 1e-9:
        raise InvalidSpecError("Antiparallel vectors do not define a unique arc")
    if phi < 1e-9:
        return a.copy()
    point = (np.sin((1.0 - t) * phi) * a + np.sin(t * phi) * b) / np.sin(phi)
    return point / np.linalg.norm(point)


def arc_points(w_opt, w_left, w_right, steps=38):
    """
    Continuum of weight vectors on both sides of an optimum

    Args:
        w_opt (array-like): Optimized weights, placed at phi = 0
        w_left (array-like): End vector for negative phi
        w_right (array-like): End vector for positive phi
        steps (int): Points per side, the end vector included

    Returns:
        list: (phi, unit weight vector) pairs ordered by phi
    """
    if steps < 1:
        raise InvalidSpecError(f"Arc needs at least one step per side, got {steps}")
    points = [(0.0, _unit(w_opt, 'w_opt'))]
    for sign, end in ((-1.0, w_left), (1.0, w_right)):
        for t in np.linspace(0.0, 1.0, steps + 1)[1:]:
            w = arc_interpolate(w_opt, end, float(t))
            points.append((sign * angle(w_opt, w), w))
    return sorted(points, key=lambda item: item[0])
