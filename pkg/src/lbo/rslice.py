"""Radius slices of the light-cone orbits and their topology certificates.

Fixing the common split norm sqrt(spatial) = r cuts each orbit along a
compact slice.  Along the reduction surface the radius dips to a minimum
sqrt(2 |cos phi|) (for the sqrt2-normalised base point), reached exactly at
the reduced element; a neutral orbit therefore misses slices below r0, meets
the slice at r0 in a two-sphere, and meets every larger slice in a copy of
real projective 3-space.  Degenerate orbits are scaled into themselves by a
boost, so every positive radius meets them in the projective-space pattern.
"""
from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import NotInLightConeError
from .minkowski import (
    DEFAULT_TOL,
    ToleranceConfig,
    boost_matrix,
    random_proper_lorentz,
    rotation_matrix,
)
from .orbit import OrbitClass, OrbitKind, base_point, canonical_form
from .wedge import _apply, _compound, as_bivector, in_light_cone, split_norms


class SliceTopology(Enum):
    EMPTY = "Empty"
    SPHERE_2 = "Sphere2"
    RP3 = "RP3"


_HALF_PI = np.pi / 2


def critical_rapidity(phi: float) -> float:
    """Rapidity at which the surface sweep reaches its minimal radius.

    Uses tan of the half angle below the right angle and its reciprocal
    above; symmetric under phi -> pi - phi.  Undefined at the right angle,
    where the minimising rapidity runs away to infinity.
    """
    if not 0.0 <= phi <= np.pi:
        raise ValueError("phi must lie in [0, pi]")
    if phi == _HALF_PI:
        raise ValueError("no finite minimising rapidity at phi = pi/2")
    if phi < _HALF_PI:
        return float(np.arctanh(np.tan(0.5 * phi)))
    return float(np.arctanh(1.0 / np.tan(0.5 * phi)))


def min_slice_radius(phi: float) -> float:
    """Minimal radius along the orbit of base_point(phi); simplifies to sqrt(2 |cos phi|)."""
    if not 0.0 <= phi <= np.pi:
        raise ValueError("phi must lie in [0, pi]")
    if phi == _HALF_PI:
        return 0.0
    t = critical_rapidity(phi)
    if phi < _HALF_PI:
        return float(np.sqrt(2.0) * np.cos(0.5 * phi) / np.cosh(t))
    return float(np.sqrt(2.0) * np.sin(0.5 * phi) / np.cosh(t))


def in_slice(w, r: float, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True iff w is a light-cone bivector whose split norm matches r*r relatively."""
    if r <= 0:
        raise ValueError("slice radius must be positive")
    w = as_bivector(w)
    if not in_light_cone(w, tol):
        return False
    spatial, _ = split_norms(w)
    return abs(spatial - r * r) <= tol.rel_tol * r * r


def slice_topology(klass: OrbitClass, r: float, tol: ToleranceConfig = DEFAULT_TOL) -> SliceTopology:
    """Topology certificate of the radius-r slice of an orbit.

    Neutral orbits: empty below r0, a two-sphere inside the band
    |r - r0| <= abs_tol * max(r0, 1), projective 3-space above.  Degenerate
    orbits meet every positive radius in projective 3-space.
    """
    if r <= 0:
        raise ValueError("slice radius must be positive")
    if klass.kind == OrbitKind.DEGENERATE:
        return SliceTopology.RP3
    band = tol.abs_tol * max(klass.r0, 1.0)
    if abs(r - klass.r0) <= band:
        return SliceTopology.SPHERE_2
    if r < klass.r0:
        return SliceTopology.EMPTY
    return SliceTopology.RP3


def empirical_min_radius(
    w, samples: int, seed: int, tol: ToleranceConfig = DEFAULT_TOL
) -> float:
    """Running minimum of the slice radius over sampled points of the orbit of w.

    Combines three deterministic-given-seed searches: a grid over the
    two-parameter reduction surface through w (grid density grows with
    samples and always contains the identity), a deep one-sided rapidity
    sweep that chases the shrinking radius of degenerate orbits, and random
    generator-word pushforwards of w itself.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    w = as_bivector(w)
    if not in_light_cone(w, tol):
        raise NotInLightConeError("empirical_min_radius requires a light-cone bivector")
    form = canonical_form(w, tol)
    scaled = (form.r / np.sqrt(2.0)) * base_point(form.phi)

    best = float(np.sqrt(split_norms(w)[0]))

    n = max(40, int(np.sqrt(samples)))
    if n % 2 == 0:
        n += 1  # odd count keeps 0 on the rapidity grid
    thetas = np.linspace(0.0, np.pi, n)
    ts = np.linspace(-2.5, 2.5, n)
    for theta in thetas:
        rot = rotation_matrix(2, theta)
        for t in ts:
            c = _apply(rot @ boost_matrix(2, t), scaled)
            best = min(best, float(np.sqrt(split_norms(c)[0])))

    for t in np.linspace(0.0, 10.0, 1001):
        c = _apply(boost_matrix(2, t), scaled)
        best = min(best, float(np.sqrt(split_norms(c)[0])))

    rng = np.random.default_rng(seed)
    for _ in range(samples):
        p = random_proper_lorentz(rng, 4)
        c = _compound(p) @ w
        best = min(best, float(np.sqrt(split_norms(c)[0])))
    return best
