import numpy as np
import pytest

from conftest import random_light_cone_bivector
from lbo.minkowski import (
    BOOST,
    ROTATION,
    GeneratorKind,
    generator,
    lie_generator,
    random_proper_lorentz,
)
from lbo.wedge import (
    HAT_DIAG,
    NULL_BASIS_MATRIX,
    PAIRS,
    basis_bivector,
    from_null_basis,
    hat_inner,
    in_light_cone,
    lie_pushforward_matrix,
    null_basis_vector,
    pfaffian,
    pushforward,
    pushforward_matrix,
    split_norms,
    to_null_basis,
    wedge,
)


def test_wedge_of_coordinate_planes():
    e = np.eye(4)
    for k, (i, j) in enumerate(PAIRS):
        expected = np.zeros(6)
        expected[k] = 1.0
        np.testing.assert_allclose(wedge(e[i], e[j]), expected, atol=0)
        np.testing.assert_allclose(basis_bivector(i + 1, j + 1), expected, atol=0)


def test_wedge_antisymmetric_and_bilinear(rng):
    x, y, z = rng.normal(size=(3, 4))
    np.testing.assert_allclose(wedge(x, y), -wedge(y, x), atol=0)
    np.testing.assert_allclose(
        wedge(x, 2.0 * y + z), 2.0 * wedge(x, y) + wedge(x, z), atol=1e-12
    )
    np.testing.assert_allclose(wedge(x, x), np.zeros(6), atol=0)


def test_basis_bivector_sign_flip_and_errors():
    np.testing.assert_allclose(basis_bivector(3, 1), -basis_bivector(1, 3), atol=0)
    with pytest.raises(ValueError):
        basis_bivector(2, 2)
    with pytest.raises(ValueError):
        basis_bivector(0, 1)


def test_hat_inner_diagonal():
    e = np.eye(6)
    signs = [hat_inner(e[k], e[k]) for k in range(6)]
    assert signs == [1.0, 1.0, -1.0, 1.0, -1.0, -1.0]
    np.testing.assert_allclose(HAT_DIAG, signs, atol=0)


def test_split_norms_frozen():
    spatial, temporal = split_norms([1.0, 2.0, 3.0, 4.0, 5.0, 6.0])
    assert spatial == 1.0 + 4.0 + 16.0
    assert temporal == 9.0 + 25.0 + 36.0


def test_hat_norm_is_split_difference(rng):
    for _ in range(30):
        w = rng.normal(size=6)
        spatial, temporal = split_norms(w)
        assert abs(hat_inner(w, w) - (spatial - temporal)) < 1e-12


def test_pfaffian_frozen_and_plucker(rng):
    assert pfaffian([1.0, 2.0, 3.0, 4.0, 5.0, 6.0]) == 1 * 6 - 2 * 5 + 3 * 4
    # simple bivectors satisfy the quadric identity exactly
    for _ in range(50):
        x, y = rng.normal(size=(2, 4))
        assert abs(pfaffian(wedge(x, y))) < 1e-12 * (1 + x @ x) * (1 + y @ y)


def test_in_light_cone_band():
    assert in_light_cone([1.0, 0.0, 0.0, 0.0, 0.0, 1.0])
    assert not in_light_cone(np.zeros(6))
    assert not in_light_cone([1.0, 0, 0, 0, 0, 0])
    base = np.array([1.0, 0.0, 0.0, 0.0, 0.0, 1.0])
    inside = base.copy()
    inside[5] = np.sqrt(1.0 + 0.4e-9)
    assert in_light_cone(inside)
    outside = base.copy()
    outside[5] = np.sqrt(1.0 + 4e-9)
    assert not in_light_cone(outside)
    # scale-free: tiny light-cone bivectors below abs_tol count as zero
    assert not in_light_cone(1e-6 * base)


def test_pushforward_preserves_inner_and_cone(rng):
    for _ in range(40):
        p = random_proper_lorentz(rng, 3)
        u, v = rng.normal(size=(2, 6))
        scale = 1.0 + np.linalg.norm(u) * np.linalg.norm(v)
        assert abs(hat_inner(pushforward(p, u), pushforward(p, v)) - hat_inner(u, v)) < 1e-10 * scale
        w = random_light_cone_bivector(rng)
        assert in_light_cone(pushforward(p, w))


def test_pushforward_matrix_is_homomorphism(rng):
    p = random_proper_lorentz(rng, 3)
    q = random_proper_lorentz(rng, 3)
    np.testing.assert_allclose(
        pushforward_matrix(p) @ pushforward_matrix(q),
        pushforward_matrix(p @ q),
        atol=1e-12,
    )
    np.testing.assert_allclose(pushforward_matrix(np.eye(4)), np.eye(6), atol=0)


def test_pushforward_rejects_non_lorentz():
    with pytest.raises(ValueError):
        pushforward_matrix(2.0 * np.eye(4))
    with pytest.raises(ValueError):
        pushforward(np.diag([-1.0, 1.0, 1.0, 1.0]), np.zeros(6))


def test_pushforward_is_wedge_equivariant(rng):
    for _ in range(20):
        p = random_proper_lorentz(rng, 3)
        x, y = rng.normal(size=(2, 4))
        np.testing.assert_allclose(
            pushforward(p, wedge(x, y)), wedge(p @ x, p @ y), atol=1e-10
        )


def test_lie_pushforward_is_derivative():
    h = 1e-5
    for axis in (1, 2, 3):
        for family in (ROTATION, BOOST):
            plus = generator(GeneratorKind(axis, family, h))
            minus = generator(GeneratorKind(axis, family, -h))
            fd = (pushforward_matrix(plus) - pushforward_matrix(minus)) / (2 * h)
            lp = lie_pushforward_matrix(lie_generator(GeneratorKind(axis, family)))
            np.testing.assert_allclose(fd, lp, atol=1e-8)


def test_lie_pushforward_leibniz(rng):
    x = rng.normal(size=(4, 4))
    u, v = rng.normal(size=(2, 4))
    np.testing.assert_allclose(
        lie_pushforward_matrix(x) @ wedge(u, v),
        wedge(x @ u, v) + wedge(u, x @ v),
        atol=1e-12,
    )
    with pytest.raises(ValueError):
        lie_pushforward_matrix(np.eye(3))


def test_null_basis_is_orthogonal_and_round_trips(rng):
    np.testing.assert_allclose(
        NULL_BASIS_MATRIX.T @ NULL_BASIS_MATRIX, np.eye(6), atol=1e-15
    )
    w = rng.normal(size=6)
    np.testing.assert_allclose(from_null_basis(to_null_basis(w)), w, atol=1e-14)


def test_null_basis_vectors_are_isotropic():
    for sign in (1, -1):
        for i in (1, 2, 3):
            v = null_basis_vector(sign, i)
            assert abs(hat_inner(v, v)) < 1e-15
    with pytest.raises(ValueError):
        null_basis_vector(0, 1)
    with pytest.raises(ValueError):
        null_basis_vector(1, 4)


def test_hat_metric_in_null_coordinates():
    # the induced metric pairs the two halves: off-diagonal blocks diag(1, 1, -1)
    m = NULL_BASIS_MATRIX
    gram = m.T @ (HAT_DIAG[:, None] * m)
    expected = np.zeros((6, 6))
    d = np.diag([1.0, 1.0, -1.0])
    expected[:3, 3:] = d
    expected[3:, :3] = d
    np.testing.assert_allclose(gram, expected, atol=1e-15)
