"""Acceptance suite: one test per numbered criterion A1-A9.

Every test certifies a single end-to-end guarantee of the package and
prints a one-line ``A<k> ...: PASS`` verdict on success; the timed
criteria also enforce their wall-clock budget.  Expensive providers are
shared through module-scoped fixtures so the characteristic-data caches
are reused across criteria.
"""

import cmath
import math
import time

import numpy as np
import pytest

from kreinext.boundary_space import (
    J,
    Z,
    defect_curve,
    extension_subspace,
    intersection_dim,
    is_hypermaximal_neutral,
    map_subspace,
)
from kreinext.charfn import (
    CharacteristicData,
    EquivalenceVerdict,
    SturmLiouvilleModel,
    branch_sqrt,
    degenerate_sl,
    indefinite_sl,
    nonequivalence_residual,
    phase_candidate,
    potential_zero,
    tw_mfunction,
    zero_chardata,
)
from kreinext.clifford import CSymmetryParams, csym_matrix, verify_c_axioms
from kreinext.errors import KreinExtError
from kreinext.extensions import (
    QR_TOL,
    ExtensionClass,
    ExtensionParams,
    classify,
    empty_resolvent_family,
    random_extension,
    weyl_from_sh,
)
from kreinext.spectral import (
    SearchBox,
    SpectralVerdict,
    det_f,
    empty_resolvent_verdict,
    isolate_roots,
    nonreal_eigenvalues,
    shooting_char_entry,
    shooting_determinant,
    shooting_residual,
)

GRID = [
    complex(re, im)
    for re in np.linspace(0.5, 4.5, 5)
    for im in np.linspace(0.5, 4.5, 5)
]

A8_PARAMS = ExtensionParams.from_q(1 / math.sqrt(2), phi=1.0, gamma=0.0, xi=0.0)
A8_EIGENVALUE = 19.202085106920425 + 1.7081089258494573j


def _disk_draw(rng, radius=0.95):
    return radius * math.sqrt(rng.uniform()) * cmath.exp(2j * math.pi * rng.uniform())


def _random_unitary(rng):
    g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


@pytest.fixture(scope="module")
def degenerate_cd():
    return degenerate_sl()


@pytest.fixture(scope="module")
def wholeline():
    model = SturmLiouvilleModel(potential=potential_zero(), label="zero potential")
    return model, indefinite_sl(model)


@pytest.fixture(scope="module")
def zero_partition():
    """1000 classified draws against identically vanishing data.

    Every tenth draw is pinned to the q = 0 and r = 0 walls so all
    classes are guaranteed to appear.
    """
    rng = np.random.default_rng(466)
    cd = zero_chardata()
    rows = []
    for k in range(1000):
        if k % 10 == 7:
            params = ExtensionParams.from_q(
                0.0, phi=rng.uniform(0, 2 * math.pi), xi=rng.uniform(0, 2 * math.pi)
            )
        elif k % 10 == 3:
            params = ExtensionParams.from_q(
                1.0,
                phi=rng.uniform(0, 2 * math.pi),
                gamma=rng.uniform(0, 2 * math.pi),
            )
        else:
            params = random_extension(rng)
        rows.append((params, classify(params, cd)))
    return rows


# ---------------------------------------------------------------------------


def test_a1_interval_model_empty_resolvent_family(degenerate_cd):
    start = time.perf_counter()
    fam = empty_resolvent_family(degenerate_cd)
    assert fam.exists and fam.r == 0.0 and fam.gamma_free
    assert fam.phi_values == pytest.approx((0.0, math.pi), abs=1e-9)

    members = [
        ExtensionParams.from_q(1.0, phi=phi, gamma=gamma)
        for gamma in (0.0, 1.0, 2.0)
        for phi in (0.0, math.pi)
    ]
    for member in members:
        worst = max(abs(det_f(member, degenerate_cd, mu)) for mu in GRID)
        assert worst < 1e-9
        verdict = empty_resolvent_verdict(member, degenerate_cd)
        assert verdict is SpectralVerdict.IDENTICALLY_ZERO_DETERMINANT
        for mu in GRID[::6][:5]:
            assert shooting_residual(member, mu) < 1e-8

    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    print(f"A1 interval-model empty-resolvent family: PASS ({elapsed:.2f}s)")


def test_a2_wholeline_model_stays_separated(wholeline):
    model, cd = wholeline
    start = time.perf_counter()

    equiv = cd.equivalence()
    assert equiv.verdict is EquivalenceVerdict.NOT_EQUIVALENT
    assert equiv.residual > 0.01

    rng = np.random.default_rng(252)
    for _ in range(1000):
        params = random_extension(rng)
        try:
            verdict = empty_resolvent_verdict(params, cd)
        except KreinExtError as exc:  # pragma: no cover - diagnostic
            pytest.fail(f"verdict failed at {params}: {exc}")
        assert verdict is SpectralVerdict.DISCRETE_SET

    candidate = phase_candidate(model)
    assert abs(candidate + 1.0) < 1e-6
    separation = nonequivalence_residual(model, 4j)
    assert abs(separation) > 0.01

    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    print(
        "A2 whole-line model stays separated: PASS "
        f"(residual={equiv.residual:.4f}, |D(4i)|={abs(separation):.4f}, "
        f"{elapsed:.1f}s)"
    )


def test_a3_characteristic_entries_match_independent_oracles(
    degenerate_cd, wholeline
):
    model, _ = wholeline
    rng = np.random.default_rng(33)
    for _ in range(10):
        mu = complex(rng.uniform(0.5, 4.0), rng.uniform(0.5, 4.0))
        assert abs(shooting_char_entry(mu) - degenerate_cd.s_plus(mu)) < 1e-8
    for mu in (1j, 2j, 1 + 1j):
        assert abs(tw_mfunction(model, "plus", mu) - 1j / branch_sqrt(mu)) < 1e-6
        assert abs(tw_mfunction(model, "minus", mu) + 1j / branch_sqrt(-mu)) < 1e-6
    print("A3 characteristic entries match independent oracles: PASS")


def test_a4_neutral_domains_and_c_operator_axioms():
    rng = np.random.default_rng(44)

    worst_gram = 0.0
    for _ in range(1000):
        sub = extension_subspace(random_extension(rng))
        assert is_hypermaximal_neutral(sub)
        gram = sub.matrix.conj().T @ (J @ Z) @ sub.matrix
        worst_gram = max(worst_gram, float(np.max(np.abs(gram))))
    assert worst_gram < 1e-12

    for _ in range(1000):
        chi = rng.uniform(-2.0, 2.0)
        omega = rng.uniform(0.0, 2 * math.pi)
        params = CSymmetryParams.collapsed(chi, omega)
        assert verify_c_axioms(params)
        c = csym_matrix(params)
        assert np.max(np.abs(c @ c - np.eye(4))) < 1e-12
        jc = J @ c
        assert np.max(np.abs(jc - jc.conj().T)) < 1e-12
        assert np.min(np.linalg.eigvalsh(jc)) > 0.0

    eye = np.eye(4)
    for m in (Z, J):
        assert np.max(np.abs(m @ m - eye)) < 1e-15

    print(f"A4 neutral domains and C-operator axioms: PASS (gram={worst_gram:.2e})")


def test_a5_determinant_zeros_coincide_with_defect_intersections():
    rng = np.random.default_rng(55)
    mu = 1.3 + 0.8j
    engineered = 0
    for k in range(200):
        params = random_extension(rng)
        s_minus = _disk_draw(rng)
        s_plus = _disk_draw(rng)
        if k % 4 == 0:
            # force a zero of the determinant at mu
            e_pp = cmath.exp(1j * (params.phi + params.xi))
            e_pm = cmath.exp(1j * (params.phi - params.xi))
            candidate = (cmath.exp(2j * params.phi) * s_minus - params.r * e_pp) / (
                1.0 - params.r * e_pm * s_minus
            )
            if abs(candidate) < 1.0 - 1e-6:
                s_plus = candidate
                engineered += 1
        cd = CharacteristicData(
            s_plus=lambda m, v=s_plus: v, s_minus=lambda m, v=s_minus: v
        )
        has_zero = abs(det_f(params, cd, mu)) < 1e-9
        meets = intersection_dim(extension_subspace(params), defect_curve(cd, mu)) >= 1
        assert has_zero == meets
    assert engineered >= 30
    print(
        "A5 determinant zeros coincide with defect intersections: PASS "
        f"({engineered} engineered zeros)"
    )


def test_a6_classification_partition(zero_partition):
    counts = {cls: 0 for cls in ExtensionClass}
    for params, res in zero_partition:
        counts[res.extension_class] += 1
        if params.q <= QR_TOL:
            assert res.extension_class is ExtensionClass.UPSILON_J
        elif params.r <= QR_TOL:
            assert res.extension_class is ExtensionClass.EMPTY_RESOLVENT
        else:
            assert res.extension_class is ExtensionClass.SIGMA_JST_PROPER
    assert counts[ExtensionClass.UPSILON_U] == 0
    assert counts[ExtensionClass.UPSILON_J] >= 100
    assert counts[ExtensionClass.EMPTY_RESOLVENT] >= 100
    assert counts[ExtensionClass.SIGMA_JST_PROPER] >= 700

    # inequivalent entries leave only the q = 0 wall and the bulk
    base = degenerate_sl()
    scaled = CharacteristicData(
        s_plus=base.s_plus, s_minus=lambda m: 0.5 * base.s_plus(m)
    )
    rng = np.random.default_rng(65)
    for k in range(200):
        if k % 5 == 0:
            params = ExtensionParams.from_q(0.0, phi=rng.uniform(0, 2 * math.pi))
        else:
            params = random_extension(rng)
        res = classify(params, scaled)
        if params.q <= QR_TOL:
            assert res.extension_class is ExtensionClass.UPSILON_J
        else:
            assert res.extension_class is ExtensionClass.GENERIC

    print(
        "A6 classification partition: PASS "
        f"(J={counts[ExtensionClass.UPSILON_J]}, "
        f"empty={counts[ExtensionClass.EMPTY_RESOLVENT]}, "
        f"proper={counts[ExtensionClass.SIGMA_JST_PROPER]})"
    )


def test_a7_certificates_map_domains_onto_themselves(zero_partition):
    checked = 0
    for params, res in zero_partition:
        if res.csym is None:
            continue
        sub = extension_subspace(params)
        c = csym_matrix(res.csym)
        assert intersection_dim(map_subspace(c, sub), sub) == 2
        checked += 1
    assert checked >= 900

    # gauged, non-vanishing data inside the stable wedge
    base = degenerate_sl()
    rng = np.random.default_rng(77)
    for _ in range(100):
        alpha = rng.uniform(0.2, 6.0)
        phi0 = rng.uniform(0.0, 1.2)
        q = rng.uniform(0.02, 0.93 * math.cos(phi0))
        gamma0 = rng.uniform(0.0, 2 * math.pi)
        xi0 = rng.uniform(0.0, 2 * math.pi)
        cd = CharacteristicData(
            s_plus=base.s_plus,
            s_minus=lambda m, a=alpha: cmath.exp(-1j * a) * base.s_plus(m),
        )
        params = ExtensionParams(
            phi=phi0 + alpha / 2,
            gamma=gamma0 + alpha / 2,
            xi=xi0 - alpha / 2,
            q=q,
            r=math.sqrt(1.0 - q * q),
        )
        res = classify(params, cd)
        assert res.extension_class is ExtensionClass.SIGMA_JST_PROPER
        shifted = ExtensionParams(
            phi=phi0, gamma=gamma0, xi=xi0, q=q, r=math.sqrt(1.0 - q * q)
        )
        sub = extension_subspace(shifted)
        c = csym_matrix(res.csym)
        assert intersection_dim(map_subspace(c, sub), sub) == 2
        checked += 1

    print(f"A7 certificates map domains onto themselves: PASS ({checked} checked)")


def test_a8_argument_principle_agrees_with_shooting(degenerate_cd):
    start = time.perf_counter()
    box = SearchBox(0.5, 30.0, 0.5, 30.0)

    report = nonreal_eigenvalues(A8_PARAMS, degenerate_cd, box)
    assert report.verdict is SpectralVerdict.DISCRETE_SET

    oracle = isolate_roots(
        lambda mu: shooting_determinant(A8_PARAMS, mu), box, n0=16
    )

    assert report.winding_total == oracle.winding_total == 1
    assert len(report.eigenvalues) == len(oracle.roots) == 1
    found = report.eigenvalues[0].mu
    assert abs(found - oracle.roots[0]) < 1e-6
    assert abs(found - A8_EIGENVALUE) < 1e-8
    assert shooting_residual(A8_PARAMS, found) < 1e-8

    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    print(
        "A8 argument principle agrees with shooting: PASS "
        f"(mu={found.real:.6f}{found.imag:+.6f}i, {elapsed:.1f}s)"
    )


def test_a9_induced_coefficients_are_dissipative(degenerate_cd, wholeline):
    _, indefinite_cd = wholeline
    rng = np.random.default_rng(99)
    providers = [
        ("zero", zero_chardata()),
        ("interval", degenerate_cd),
        ("wholeline", indefinite_cd),
    ]
    for name, cd in providers:
        for _ in range(50):
            v = _random_unitary(rng)
            if name == "wholeline":
                mu = GRID[int(rng.integers(len(GRID)))]
            else:
                mu = complex(rng.uniform(0.5, 4.5), rng.uniform(0.5, 4.5))
            m = weyl_from_sh(cd, v, mu)
            herm = (m - m.conj().T) / 2j
            assert np.min(np.linalg.eigvalsh(herm)) > -1e-9
            if name == "zero":
                assert np.array_equal(m, 1j * np.eye(2))
    print("A9 induced coefficient matrices are dissipative: PASS")
