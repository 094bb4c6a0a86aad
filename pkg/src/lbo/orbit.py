"""Orbit geometry of light-cone bivectors under the proper Lorentz group.

Every light-cone bivector splits into a pair of 3-vectors of equal length: an
axial vector collecting the spatial-plane coefficients and a polar vector
collecting the time-plane coefficients.  Rotating the spatial frame so the
polar vector becomes the third axis and the axial vector lies in the 1-3
plane reduces the bivector to the one-angle normal form

    r * (cos(phi) e1^e2 + sin(phi) e2^e3 + e3^e4),    r > 0, phi in [0, pi].

The sign of the pfaffian then splits the light cone into three orbit types:
two open families of "neutral" orbits (pfaffian positive or negative), each
containing exactly one fully reduced element r0 * (e1^e2 +/- e3^e4), and the
borderline "degenerate" family (pfaffian zero) which contains no such element
and is scaled into itself by boosts.

The module also carries the tangent frame of the orbit surface along the
angle/rapidity coordinate lines, which is where the degenerate family shows
its rank-2 induced metric.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateOrbitError, NotInLightConeError
from .minkowski import (
    DEFAULT_TOL,
    ToleranceConfig,
    boost_matrix,
    lorentz_inverse,
    rotation_matrix,
)
from .wedge import (
    HAT_DIAG,
    _apply,
    as_bivector,
    basis_bivector,
    from_null_basis,
    hat_inner,
    in_light_cone,
    pfaffian,
    split_norms,
)

# Residual ceilings for the transported-frame checks.  The first bounds both
# tangential components and derivative-field matches; the second bounds
# quantities that vanish identically rather than merely tangentially.
PARALLEL_RESIDUAL_TOL = 1e-4
NULL_RESIDUAL_TOL = 1e-6


def to_vector_pair(w) -> tuple[np.ndarray, np.ndarray]:
    """Split a bivector into its axial and polar 3-vectors.

    The axial vector a reads the spatial-plane coefficients with the cyclic
    orientation (a1, a2, a3) = (c23, -c13, c12); the polar vector b is the
    time column (c14, c24, c34).  On the light cone |a| = |b| != 0.
    """
    w = as_bivector(w)
    a = np.array([w[3], -w[1], w[0]])
    b = np.array([w[2], w[4], w[5]])
    return a, b


def from_vector_pair(a, b) -> np.ndarray:
    """Inverse of to_vector_pair."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != (3,) or b.shape != (3,):
        raise ValueError("expected two 3-vectors")
    return np.array([a[2], -a[1], b[0], a[0], b[1], b[2]])


def canonical_bivector(r: float, phi: float) -> np.ndarray:
    """r * (cos(phi) e1^e2 + sin(phi) e2^e3 + e3^e4)."""
    return r * (
        np.cos(phi) * basis_bivector(1, 2)
        + np.sin(phi) * basis_bivector(2, 3)
        + basis_bivector(3, 4)
    )


def base_point(phi: float) -> np.ndarray:
    """Normal form scaled so both split norms equal 2; base point for frames below."""
    return canonical_bivector(np.sqrt(2.0), phi)


def normal_form_bivector(r0: float, epsilon: int) -> np.ndarray:
    """The fully reduced element r0 * (e1^e2 + epsilon * e3^e4) of a neutral orbit."""
    if epsilon not in (1, -1):
        raise ValueError("epsilon must be +1 or -1")
    return r0 * (basis_bivector(1, 2) + epsilon * basis_bivector(3, 4))


@dataclass(frozen=True)
class CanonicalForm:
    """Scale r, angle phi and the adapted basis realising the normal form.

    The basis is a proper Lorentz matrix whose columns are the adapted frame;
    pushing canonical_bivector(r, phi) forward through it reproduces the
    original bivector.
    """

    r: float
    phi: float
    basis: np.ndarray


def canonical_form(w, tol: ToleranceConfig = DEFAULT_TOL) -> CanonicalForm:
    """Reduce a light-cone bivector to the one-angle normal form.

    The angle is the angle between the axial and polar vectors, fixed to
    [0, pi] by demanding a nonnegative sine.  The adapted spatial frame is
    (u1, u2, u3) with u3 the polar direction, u2 the normalised cross product
    of polar with axial (so the sine comes out nonnegative), and u1 = u2 x u3.
    When the two vectors are parallel the cross product degenerates and u2
    falls back to the smallest-index coordinate axis not parallel to u3,
    orthogonalised against it; any such choice yields the same normal form.
    """
    w = as_bivector(w)
    if not in_light_cone(w, tol):
        raise NotInLightConeError("canonical_form requires a light-cone bivector")
    a, b = to_vector_pair(w)
    spatial = float(a @ a)
    r = float(np.sqrt(spatial))
    cos_phi = float(np.clip((a @ b) / spatial, -1.0, 1.0))
    phi = float(np.arccos(cos_phi))

    u3 = b / np.linalg.norm(b)
    cross = np.cross(b, a)
    cross_norm = np.linalg.norm(cross)
    if cross_norm > tol.abs_tol * spatial:
        u2 = cross / cross_norm
    else:
        for k in range(3):
            axis = np.zeros(3)
            axis[k] = 1.0
            if abs(axis @ u3) < 1.0 - 1e-9:
                break
        v = axis - (axis @ u3) * u3
        u2 = v / np.linalg.norm(v)
    u1 = np.cross(u2, u3)

    basis = np.eye(4)
    basis[:3, :3] = np.column_stack([u1, u2, u3])
    return CanonicalForm(r=r, phi=phi, basis=basis)


def reconstruct(form: CanonicalForm) -> np.ndarray:
    """Push the normal form back through the adapted basis."""
    return _apply(form.basis, canonical_bivector(form.r, form.phi))


class OrbitKind:
    """Orbit type labels; plain strings so they serialise directly."""

    NEUTRAL_PLUS = "NeutralPlus"
    NEUTRAL_MINUS = "NeutralMinus"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class OrbitClass:
    """Orbit type with its invariants: reduced scale r0 and sign epsilon."""

    kind: str
    r0: float
    epsilon: int | None


def orbit_class(w, tol: ToleranceConfig = DEFAULT_TOL) -> OrbitClass:
    """Classify by the pfaffian: sign picks the neutral family, zero is degenerate.

    The degenerate band is |pfaffian| <= abs_tol * max(spatial_norm, 1); for
    neutral orbits r0 = sqrt(|pfaffian|) is the scale of the reduced element.
    """
    w = as_bivector(w)
    if not in_light_cone(w, tol):
        raise NotInLightConeError("orbit_class requires a light-cone bivector")
    pf = pfaffian(w)
    spatial, _ = split_norms(w)
    if abs(pf) <= tol.abs_tol * max(spatial, 1.0):
        return OrbitClass(OrbitKind.DEGENERATE, 0.0, None)
    if pf > 0:
        return OrbitClass(OrbitKind.NEUTRAL_PLUS, float(np.sqrt(pf)), 1)
    return OrbitClass(OrbitKind.NEUTRAL_MINUS, float(np.sqrt(-pf)), -1)


def canonical_representative(w, tol: ToleranceConfig = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Carry a neutral bivector to its reduced element; returns (element, witness).

    After the basis reduction, a rotation in the 1-3 plane by half the angle
    composed with a boost along the second axis whose rapidity has hyperbolic
    tangent tan(phi/2) kills the e2^e3 and e1^e4 components.  Past the right
    angle the roles of sine and cosine swap: the rotation gains a quarter
    turn and the rapidity uses the cotangent.  The witness is the accumulated
    Lorentz matrix, so pushing w through it yields the returned element
    r0 * (e1^e2 + epsilon * e3^e4).
    """
    klass = orbit_class(w, tol)
    if klass.kind == OrbitKind.DEGENERATE:
        raise DegenerateOrbitError("degenerate orbits contain no fully reduced element")
    form = canonical_form(w, tol)
    half = 0.5 * form.phi
    if form.phi < np.pi / 2:
        theta, t = half, float(np.arctanh(np.tan(half)))
    else:
        theta, t = half + np.pi / 2, float(np.arctanh(1.0 / np.tan(half)))
    witness = rotation_matrix(2, theta) @ boost_matrix(2, t) @ lorentz_inverse(form.basis)
    return _apply(witness, w), witness


# --- tangent frames along the normal-form curve ---------------------------


@dataclass(frozen=True)
class TangentFrame:
    """Frame (x_plus, x_minus, y_plus, y_minus) spanning the orbit tangent space."""

    x_plus: np.ndarray
    x_minus: np.ndarray
    y_plus: np.ndarray
    y_minus: np.ndarray
    base_point: np.ndarray

    def stack(self) -> np.ndarray:
        """6x4 matrix with the frame fields as columns."""
        return np.column_stack([self.x_plus, self.x_minus, self.y_plus, self.y_minus])


def tangent_frame(phi: float) -> TangentFrame:
    """Tangent frame of the orbit at base_point(phi), in lexicographic coordinates.

    Written over the null basis the four fields are sparse: the x fields mix
    the first and third null pairs with weights (sin, -cos) plus a fixed unit
    leg in the opposite half, and the y fields are single null vectors.
    """
    c, s = np.cos(phi), np.sin(phi)
    x_plus = from_null_basis(np.array([s, 0.0, -c, 0.0, 0.0, -1.0]))
    x_minus = from_null_basis(np.array([0.0, 0.0, -1.0, s, 0.0, c]))
    y_plus = from_null_basis(np.array([0.0, 1.0, 0.0, 0.0, 0.0, 0.0]))
    y_minus = from_null_basis(np.array([0.0, 0.0, 0.0, 0.0, 1.0, 0.0]))
    return TangentFrame(x_plus, x_minus, y_plus, y_minus, base_point(phi))


def normal_directions(phi: float) -> tuple[np.ndarray, np.ndarray]:
    """The two normal fields closing the derivative system of the x fields."""
    c, s = np.cos(phi), np.sin(phi)
    n_plus = from_null_basis(np.array([-c, 0.0, -s, 1.0, 0.0, 0.0]))
    n_minus = from_null_basis(np.array([-1.0, 0.0, 0.0, -c, 0.0, s]))
    return n_plus, n_minus


def tangent_gram(phi: float) -> np.ndarray:
    """Induced-metric Gram matrix of the tangent frame at base_point(phi).

    Diagonal on the x block with entries -2cos(phi) and +2cos(phi), hyperbolic
    on the y block; signature (2, 2) away from the right angle, rank 2 at it.
    """
    frame = tangent_frame(phi).stack()
    return frame.T @ (HAT_DIAG[:, None] * frame)


def orthonormal_tangent_frame(phi: float, tol: ToleranceConfig = DEFAULT_TOL):
    """Pseudo-orthonormal tangent frame (x1, x2, y1, y2) with square norms (+1, -1, +1, -1).

    Only defined away from the right angle, where the x block of the Gram
    matrix is invertible; inside the cutoff band a ValueError is raised.
    """
    c, s = np.cos(phi), np.sin(phi)
    if abs(c) <= tol.abs_tol:
        raise ValueError("orthonormal frame undefined where the x block degenerates")
    w12 = basis_bivector(1, 2)
    w14 = basis_bivector(1, 4)
    w23 = basis_bivector(2, 3)
    w34 = basis_bivector(3, 4)
    x1 = (c * s * w12 - (1.0 + c * c) * w23 - s * w34) / (2.0 * c)
    x2 = (c * s * w12 - 2.0 * c * w14 + s * s * w23 + s * w34) / (2.0 * c)
    y1 = basis_bivector(1, 3)
    y2 = -basis_bivector(2, 4)
    return x1, x2, y1, y2


def surface_point(phi: float, theta: float, t: float) -> np.ndarray:
    """Image of base_point(phi) under the 1-3 plane rotation and axis-2 boost.

    The sweep over (theta, t) fills out the two-parameter surface inside the
    orbit on which the reduction of canonical_representative takes place.
    """
    return _apply(rotation_matrix(2, theta) @ boost_matrix(2, t), base_point(phi))


def _surface_matrix(theta: float, t: float) -> np.ndarray:
    from .wedge import _compound

    return _compound(rotation_matrix(2, theta) @ boost_matrix(2, t))


@dataclass(frozen=True)
class ParallelFrameReport:
    """Residual summary of the transported-frame derivative checks.

    Neutral branch: tangential_residuals holds the tangential component norms
    of the eight derivative fields, derivative_match_residuals the distance of
    the x-field derivatives from the transported normal fields.  Degenerate
    branch: y_derivative_norms must vanish, x_null_defects are the induced
    square norms of the x-field derivatives, x_span_residuals their distance
    from the span of the transported x fields, and tangential_residuals holds
    the projections onto the y block (the only block with invertible Gram).
    """

    phi: float
    theta: float
    t: float
    degenerate: bool
    tangential_residuals: dict
    derivative_match_residuals: dict
    y_derivative_norms: dict
    x_null_defects: dict
    x_span_residuals: dict
    passed: bool


def parallel_frame_check(
    phi: float, theta: float, t: float, tol: ToleranceConfig = DEFAULT_TOL
) -> ParallelFrameReport:
    """Verify the transported tangent frame is parallel along the surface sweep.

    Central differences give the derivatives of the transported frame fields;
    in the neutral branch their tangential parts must vanish and the x-field
    derivatives must coincide with the transported normal fields.  At the
    right angle the normal fields fold into the x block, so instead the x
    derivatives must be isotropic and lie in the transported x span while the
    y fields stay constant.
    """
    frame0 = tangent_frame(phi).stack()
    h = tol.fd_step
    m_center = _surface_matrix(theta, t)
    d_theta = (_surface_matrix(theta + h, t) - _surface_matrix(theta - h, t)) @ frame0 / (2.0 * h)
    d_t = (_surface_matrix(theta, t + h) - _surface_matrix(theta, t - h)) @ frame0 / (2.0 * h)
    moved = m_center @ frame0

    names = ("x_plus", "x_minus", "y_plus", "y_minus")
    deriv = {}
    for k, name in enumerate(names):
        deriv[f"{name}/theta"] = d_theta[:, k]
        deriv[f"{name}/t"] = d_t[:, k]

    degenerate = abs(np.cos(phi)) <= tol.abs_tol
    tangential: dict = {}
    match: dict = {}
    y_norms: dict = {}
    x_null: dict = {}
    x_span: dict = {}

    if not degenerate:
        gram = moved.T @ (HAT_DIAG[:, None] * moved)
        for key, v in deriv.items():
            beta = np.linalg.solve(gram, moved.T @ (HAT_DIAG * v))
            tangential[key] = float(np.linalg.norm(moved @ beta))
        n_plus, n_minus = normal_directions(phi)
        moved_np = m_center @ n_plus
        moved_nm = m_center @ n_minus
        match["x_plus/theta"] = float(np.linalg.norm(deriv["x_plus/theta"] - moved_np))
        match["x_minus/theta"] = float(np.linalg.norm(deriv["x_minus/theta"] - moved_nm))
        match["x_plus/t"] = float(np.linalg.norm(deriv["x_plus/t"] - moved_nm))
        match["x_minus/t"] = float(np.linalg.norm(deriv["x_minus/t"] + moved_np))
        passed = (
            max(tangential.values()) <= PARALLEL_RESIDUAL_TOL
            and max(match.values()) <= PARALLEL_RESIDUAL_TOL
        )
    else:
        y_block = moved[:, 2:4]
        gram_y = y_block.T @ (HAT_DIAG[:, None] * y_block)
        x_block = moved[:, 0:2]
        for key in ("y_plus/theta", "y_plus/t", "y_minus/theta", "y_minus/t"):
            y_norms[key] = float(np.linalg.norm(deriv[key]))
        for key in ("x_plus/theta", "x_plus/t", "x_minus/theta", "x_minus/t"):
            v = deriv[key]
            beta = np.linalg.solve(gram_y, y_block.T @ (HAT_DIAG * v))
            tangential[key] = float(np.linalg.norm(y_block @ beta))
            x_null[key] = float(abs(hat_inner(v, v)))
            coef, *_ = np.linalg.lstsq(x_block, v, rcond=None)
            x_span[key] = float(np.linalg.norm(x_block @ coef - v))
        passed = (
            max(y_norms.values()) <= NULL_RESIDUAL_TOL
            and max(x_null.values()) <= NULL_RESIDUAL_TOL
            and max(x_span.values()) <= PARALLEL_RESIDUAL_TOL
            and max(tangential.values()) <= PARALLEL_RESIDUAL_TOL
        )

    return ParallelFrameReport(
        phi=phi,
        theta=theta,
        t=t,
        degenerate=degenerate,
        tangential_residuals=tangential,
        derivative_match_residuals=match,
        y_derivative_norms=y_norms,
        x_null_defects=x_null,
        x_span_residuals=x_span,
        passed=passed,
    )
