import math

import numpy as np
import pytest

from kreinext.boundary_space import (
    E_MM,
    E_MP,
    E_PM,
    E_PP,
    J,
    R,
    Z,
    BoundarySubspace,
    BoundaryVector,
    apply_matrix,
    basis,
    defect_curve,
    extension_subspace,
    inner,
    intersection_dim,
    is_hypermaximal_neutral,
    map_subspace,
    metric_jz,
    metric_z,
)
from kreinext.charfn import CharacteristicData, degenerate_sl
from kreinext.errors import DomainError
from kreinext.extensions import ExtensionParams, random_extension


def test_symmetry_algebra_exact():
    eye = np.eye(4)
    for m in (Z, J, R):
        assert np.array_equal(m @ m, eye)
        assert np.array_equal(m, m.conj().T)
    # J and R anticommute, so their product squares to -I
    assert np.array_equal(J @ R + R @ J, np.zeros((4, 4)))
    assert np.array_equal((J @ R) @ (J @ R), -eye)
    assert np.array_equal(Z @ J, J @ Z)
    assert np.array_equal(Z @ R, R @ Z)


def test_metric_signatures_on_basis():
    signs_z = [metric_z(e, e).real for e in basis()]
    signs_jz = [metric_jz(e, e).real for e in basis()]
    assert signs_z == [1.0, 1.0, -1.0, -1.0]
    assert signs_jz == [1.0, -1.0, -1.0, 1.0]


def test_inner_is_linear_first_conjugate_second():
    rng = np.random.default_rng(7)
    for _ in range(20):
        x = BoundaryVector.from_array(rng.normal(size=4) + 1j * rng.normal(size=4))
        y = BoundaryVector.from_array(rng.normal(size=4) + 1j * rng.normal(size=4))
        a = complex(rng.normal(), rng.normal())
        assert abs(inner(a * x, y) - a * inner(x, y)) < 1e-12
        assert abs(inner(x, a * y) - a.conjugate() * inner(x, y)) < 1e-12
        assert abs(inner(x, y) - inner(y, x).conjugate()) < 1e-12


def test_vector_arithmetic_and_validation():
    v = E_PP + 2.0 * E_MM
    assert v.coords == (1, 0, 0, 2)
    assert (v - E_PP).coords == (0, 0, 0, 2)
    assert (-E_PM).coords == (0, -1, 0, 0)
    assert abs(v.norm() - math.sqrt(5)) < 1e-15
    with pytest.raises(ValueError):
        BoundaryVector.from_array(np.array([np.nan, 0, 0, 0]))
    with pytest.raises(ValueError):
        BoundaryVector.from_array(np.zeros(3))


def test_subspace_rejects_dependent_spanning_set():
    with pytest.raises(ValueError, match="linearly dependent"):
        BoundarySubspace((E_PP, E_PP + 0j * E_MM))
    s = BoundarySubspace((E_PP, E_MM))
    assert s.dim == 2
    assert s.matrix.shape == (4, 2)


def test_apply_and_map():
    v = apply_matrix(J, E_PM)
    assert v.coords == (0, -1, 0, 0)
    s = map_subspace(J, BoundarySubspace((E_PM, E_MM)))
    # span is preserved even though both vectors flipped sign
    assert intersection_dim(s, BoundarySubspace((E_PM, E_MM))) == 2


def test_intersection_dim_matches_rank_oracle():
    rng = np.random.default_rng(11)
    for _ in range(50):
        a = BoundarySubspace(
            tuple(
                BoundaryVector.from_array(rng.normal(size=4) + 1j * rng.normal(size=4))
                for _ in range(2)
            )
        )
        b = BoundarySubspace(
            tuple(
                BoundaryVector.from_array(rng.normal(size=4) + 1j * rng.normal(size=4))
                for _ in range(2)
            )
        )
        stacked = np.hstack([a.matrix, b.matrix])
        oracle = a.dim + b.dim - np.linalg.matrix_rank(stacked, tol=1e-10)
        assert intersection_dim(a, b) == oracle


def test_intersection_dim_constructed_overlap():
    shared = BoundaryVector.from_array(np.array([1.0, 2.0, 3.0 + 1j, 0.0]))
    a = BoundarySubspace((shared, E_PP))
    b = BoundarySubspace((shared, E_MM))
    assert intersection_dim(a, b) == 1
    assert intersection_dim(a, a) == 2


def test_extension_subspace_is_hypermaximal_neutral():
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(300):
        params = random_extension(rng)
        sub = extension_subspace(params)
        assert is_hypermaximal_neutral(sub)
        g = sub.matrix.conj().T @ (J @ Z) @ sub.matrix
        worst = max(worst, float(np.max(np.abs(g))))
    assert worst < 1e-12


def test_extension_subspace_spec_member():
    params = ExtensionParams.from_q(0.6, phi=0.4, gamma=1.2, xi=0.3)
    sub = extension_subspace(params)
    d1 = sub.vectors[0].array
    assert abs(d1[0] - 1.0) < 1e-15
    assert abs(d1[1] - 0.6 * np.exp(1.6j)) < 1e-15
    assert abs(d1[2] - 0.8 * np.exp(0.7j)) < 1e-15
    assert d1[3] == 0.0
    d2 = sub.vectors[1].array
    assert d2[0] == 0.0
    assert abs(d2[1] + 0.8 * np.exp(0.1j)) < 1e-15
    assert abs(d2[2] - 0.6 * np.exp(-0.8j)) < 1e-15
    assert abs(d2[3] - 1.0) < 1e-15


def test_defect_curve_values_and_domain():
    cd = degenerate_sl()
    mu = 1.0 + 1.0j
    curve = defect_curve(cd, mu)
    s = cd.s_plus(mu)
    c1 = curve.vectors[0].array
    assert abs(c1[0] - 1.0) < 1e-15 and abs(c1[2] + s) < 1e-15
    c2 = curve.vectors[1].array
    assert abs(c2[1] - 1.0) < 1e-15 and abs(c2[3] + s) < 1e-15
    with pytest.raises(DomainError):
        defect_curve(cd, 1.0 - 1.0j)
    with pytest.raises(DomainError):
        defect_curve(cd, 2.0)


def test_engineered_eigenvalue_shows_up_as_intersection():
    # choose s_plus so the defining determinant vanishes; the extension
    # subspace must then meet the defect curve
    from kreinext.spectral import det_f

    mu = 2.0 + 1.5j
    params = ExtensionParams.from_q(0.7, phi=0.9, gamma=0.4, xi=1.3)
    s_minus = 0.31 - 0.42j
    e_pp = np.exp(1j * (params.phi + params.xi))
    e_pm = np.exp(1j * (params.phi - params.xi))
    s_plus = (np.exp(2j * params.phi) * s_minus - params.r * e_pp) / (
        1.0 - params.r * e_pm * s_minus
    )
    assert abs(s_plus) < 1.0
    synthetic = CharacteristicData(
        s_plus=lambda m, v=s_plus: v, s_minus=lambda m, v=s_minus: v
    )
    sub = extension_subspace(params)
    assert abs(det_f(params, synthetic, mu)) < 1e-12
    assert intersection_dim(sub, defect_curve(synthetic, mu)) >= 1
    # breaking the relation kills both the zero and the intersection
    bumped = CharacteristicData(
        s_plus=lambda m, v=s_plus + 0.02: v, s_minus=lambda m, v=s_minus: v
    )
    assert abs(det_f(params, bumped, mu)) > 1e-4
    assert intersection_dim(sub, defect_curve(bumped, mu)) == 0
