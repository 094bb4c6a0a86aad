"""Exterior square of Minkowski 4-space.

A bivector is stored as six coefficients over the coordinate 2-forms
e_i ^ e_j in lexicographic order:

    (c12, c13, c14, c23, c24, c34).

The inner product induced from the base metric is diagonal in this basis with
signs (+, +, -, +, -, -): planes spanned by two spatial axes are space-like,
planes containing the time axis are time-like, so the signature is (3, 3).

A linear map of the base space pushes forward to the exterior square through
its 2x2 minors; for proper Lorentz maps the pushforward is an isometry of the
induced metric and preserves the pfaffian c12*c34 - c13*c24 + c14*c23.

The null basis pairs each space-like plane with its time-like complement into
self-dual (+) and anti-self-dual (-) combinations, e.g. (e1^e2 +/- e3^e4)/sqrt2.
All six null-basis vectors are isotropic for the induced metric, which makes
the light cone and its tangent spaces easy to coordinatise.
"""
from __future__ import annotations

import numpy as np

from .errors import InvariantViolationError
from .minkowski import DEFAULT_TOL, ToleranceConfig, is_proper_lorentz

# Lexicographic 0-based index pairs for the six coordinate planes.
PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_PAIR_INDEX = {p: k for k, p in enumerate(PAIRS)}

# Diagonal of the induced metric over (c12, c13, c14, c23, c24, c34).
HAT_DIAG = np.array([1.0, 1.0, -1.0, 1.0, -1.0, -1.0])


def as_bivector(w) -> np.ndarray:
    v = np.asarray(w, dtype=float)
    if v.shape != (6,):
        raise ValueError(f"expected 6 bivector coefficients, got shape {v.shape}")
    return v


def wedge(x, y) -> np.ndarray:
    """Coefficients of x ^ y."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != (4,) or y.shape != (4,):
        raise ValueError("wedge expects two 4-vectors")
    return np.array([x[i] * y[j] - x[j] * y[i] for i, j in PAIRS])


def basis_bivector(i: int, j: int) -> np.ndarray:
    """Coefficient vector of e_i ^ e_j for 1-based i != j (sign flips if i > j)."""
    if i == j or not (1 <= i <= 4 and 1 <= j <= 4):
        raise ValueError(f"need distinct indices in 1..4, got ({i}, {j})")
    sign = 1.0
    if i > j:
        i, j = j, i
        sign = -1.0
    out = np.zeros(6)
    out[_PAIR_INDEX[(i - 1, j - 1)]] = sign
    return out


def hat_inner(u, v) -> float:
    """Induced inner product of two bivectors."""
    u = as_bivector(u)
    v = as_bivector(v)
    return float(np.sum(HAT_DIAG * u * v))


def split_norms(w) -> tuple[float, float]:
    """Squared coefficient norms of the spatial-plane and time-plane parts.

    Returns (spatial, temporal) where spatial covers (c12, c13, c23) and
    temporal covers (c14, c24, c34).  Their difference is the induced
    square norm of w, and they agree exactly on the light cone.
    """
    w = as_bivector(w)
    spatial = float(w[0] ** 2 + w[1] ** 2 + w[3] ** 2)
    temporal = float(w[2] ** 2 + w[4] ** 2 + w[5] ** 2)
    return spatial, temporal


def in_light_cone(w, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True iff w is isotropic and nonzero: the two split norms agree and do not vanish."""
    spatial, temporal = split_norms(w)
    return abs(spatial - temporal) <= tol.rel_tol * max(spatial, temporal, 1.0) and spatial > tol.abs_tol


def pfaffian(w) -> float:
    """The degree-2 invariant c12*c34 - c13*c24 + c14*c23.

    Twice the wedge of w with itself against the volume form; invariant under
    every determinant-1 pushforward, so constant on orbits.
    """
    w = as_bivector(w)
    return float(w[0] * w[5] - w[1] * w[4] + w[2] * w[3])


def _compound(P: np.ndarray) -> np.ndarray:
    """Second compound matrix: entry ((k,l),(i,j)) is the minor P[k,i]P[l,j] - P[k,j]P[l,i]."""
    m = np.empty((6, 6))
    for row, (k, l) in enumerate(PAIRS):
        for col, (i, j) in enumerate(PAIRS):
            m[row, col] = P[k, i] * P[l, j] - P[k, j] * P[l, i]
    return m


def pushforward_matrix(P, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """6x6 matrix of the induced action of a proper Lorentz matrix on bivectors."""
    P = np.asarray(P, dtype=float)
    if not is_proper_lorentz(P, tol):
        raise ValueError("pushforward requires a proper Lorentz matrix")
    return _compound(P)


def pushforward(P, w, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Apply the induced action of P to a bivector."""
    return pushforward_matrix(P, tol) @ as_bivector(w)


def _apply(P: np.ndarray, w: np.ndarray) -> np.ndarray:
    # Trusted path for matrices the library built itself; skips revalidation
    # so large-rapidity compositions are not rejected by the fixed tolerance.
    return _compound(np.asarray(P, dtype=float)) @ np.asarray(w, dtype=float)


def lie_pushforward_matrix(X) -> np.ndarray:
    """Induced action of a Lie algebra element: derivative at 0 of the pushforward.

    Acts on a decomposable x ^ y as (Xx) ^ y + x ^ (Xy); columns here are that
    rule applied to the coordinate planes.
    """
    X = np.asarray(X, dtype=float)
    if X.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    eye = np.eye(4)
    m = np.empty((6, 6))
    for col, (i, j) in enumerate(PAIRS):
        m[:, col] = wedge(X[:, i], eye[:, j]) + wedge(eye[:, i], X[:, j])
    return m


def _null_basis_matrix() -> np.ndarray:
    s = 1.0 / np.sqrt(2.0)
    cols = [
        basis_bivector(1, 2) + basis_bivector(3, 4),  # self-dual partners of e1^e2
        basis_bivector(1, 3) + basis_bivector(4, 2),
        basis_bivector(1, 4) + basis_bivector(2, 3),
        basis_bivector(1, 2) - basis_bivector(3, 4),  # anti-self-dual partners
        basis_bivector(1, 3) - basis_bivector(4, 2),
        basis_bivector(1, 4) - basis_bivector(2, 3),
    ]
    return s * np.column_stack(cols)


# Columns: the three self-dual then the three anti-self-dual null combinations.
NULL_BASIS_MATRIX = _null_basis_matrix()


def null_basis_vector(sign: int, i: int) -> np.ndarray:
    """Lexicographic coefficients of one null-basis vector; sign +1/-1, i in 1..3."""
    if sign not in (1, -1) or i not in (1, 2, 3):
        raise ValueError("sign must be +1/-1 and i in 1..3")
    col = (0 if sign == 1 else 3) + (i - 1)
    return NULL_BASIS_MATRIX[:, col].copy()


def to_null_basis(w) -> np.ndarray:
    """Coefficients of w over the null basis (columns of NULL_BASIS_MATRIX)."""
    return NULL_BASIS_MATRIX.T @ as_bivector(w)


def from_null_basis(w) -> np.ndarray:
    """Inverse of to_null_basis; the basis matrix is orthogonal so this is exact."""
    v = np.asarray(w, dtype=float)
    if v.shape != (6,):
        raise ValueError(f"expected 6 null-basis coefficients, got shape {v.shape}")
    return NULL_BASIS_MATRIX @ v


def _check_isometry(P: np.ndarray, tol: ToleranceConfig) -> None:
    # Cheap self-check used by code paths that promise exit-code-4 semantics.
    m = _compound(P)
    defect = np.max(np.abs(m.T @ np.diag(HAT_DIAG) @ m - np.diag(HAT_DIAG)))
    if defect > 1e3 * tol.abs_tol * max(1.0, np.max(np.abs(m)) ** 2):
        raise InvariantViolationError(f"pushforward lost the induced metric (defect {defect:.3e})")
