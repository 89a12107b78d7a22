"""Classification of proper extensions commuting with the symmetry.

Every extension in the commutant class corresponds to a unitary 2x2
matrix, parametrised by

    U = e^{i phi} [[ q e^{i gamma},  r e^{i xi}],
                   [-r e^{-i xi},    q e^{-i gamma}]],

with q, r >= 0, q^2 + r^2 = 1 and angles in [0, 2*pi).  Given
characteristic data the extension falls into exactly one of five
classes: empty resolvent, membership in the family certified by every
Clifford symmetry, membership certified by J itself, a proper stable
class with a hyperbolic certificate, or none of these.

The parametrisation is two-to-one: shifting (phi, gamma, xi) each by pi
reproduces the same unitary matrix, so phase conditions are always
tested on e^{2 i phi} rather than on phi itself.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .charfn import (
    DEFAULT_TOL,
    ApproxEqualResult,
    CharacteristicData,
    EquivalenceVerdict,
)
from .clifford import CSymmetryParams
from .errors import DomainError, PoleError

__all__ = [
    "ExtensionParams",
    "ExtensionClass",
    "ClassificationResult",
    "EmptyResolventFamily",
    "classify",
    "csymmetry_of",
    "empty_resolvent_family",
    "weyl_from_sh",
    "upsilon_u_member",
    "random_extension",
]

_TWO_PI = 2.0 * math.pi

#: Tolerance for q = 0 / r = 0 decisions.
QR_TOL = 1e-10

#: Tolerance for unimodular phase matching.
PHASE_TOL = 1e-7


@dataclass(frozen=True)
class ExtensionParams:
    """Parameters (phi, gamma, xi, q, r) of the defining unitary matrix.

    Angles are wrapped into [0, 2*pi); q and r must be non-negative
    with q^2 + r^2 = 1 up to 1e-12.
    """

    phi: float
    gamma: float
    xi: float
    q: float
    r: float

    def __post_init__(self) -> None:
        for name in ("phi", "gamma", "xi"):
            object.__setattr__(self, name, float(getattr(self, name)) % _TWO_PI)
        q, r = float(self.q), float(self.r)
        if q < -1e-12 or r < -1e-12:
            raise ValueError("q and r must be non-negative")
        q, r = max(q, 0.0), max(r, 0.0)
        if abs(q * q + r * r - 1.0) > 1e-12:
            raise ValueError(f"q^2 + r^2 must equal 1, got {q*q + r*r}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)

    @classmethod
    def from_q(
        cls, q: float, phi: float = 0.0, gamma: float = 0.0, xi: float = 0.0
    ) -> "ExtensionParams":
        """Construct with r derived from q via the unit-circle constraint."""
        q = float(q)
        if not 0.0 <= q <= 1.0:
            raise ValueError("q must lie in [0, 1]")
        return cls(phi=phi, gamma=gamma, xi=xi, q=q, r=math.sqrt(1.0 - q * q))

    @property
    def unitary_matrix(self) -> np.ndarray:
        ephi = cmath.exp(1j * self.phi)
        return ephi * np.array(
            [
                [self.q * cmath.exp(1j * self.gamma), self.r * cmath.exp(1j * self.xi)],
                [-self.r * cmath.exp(-1j * self.xi), self.q * cmath.exp(-1j * self.gamma)],
            ],
            dtype=complex,
        )


def random_extension(rng: np.random.Generator) -> ExtensionParams:
    """Draw parameters with uniform angles and uniform q in [0, 1]."""
    phi, gamma, xi = rng.uniform(0.0, _TWO_PI, size=3)
    return ExtensionParams.from_q(rng.uniform(0.0, 1.0), phi, gamma, xi)


class ExtensionClass(enum.Enum):
    EMPTY_RESOLVENT = "EmptyResolvent"
    UPSILON_U = "UpsilonU"
    UPSILON_J = "UpsilonJ"
    SIGMA_JST_PROPER = "SigmaJstProper"
    GENERIC = "Generic"


@dataclass(frozen=True)
class ClassificationResult:
    """Class label, certifying parameters when they exist, and notes."""

    extension_class: ExtensionClass
    csym: CSymmetryParams | None
    notes: str
    gauge_phase: float | None = None


def _gauge_shift(params: ExtensionParams, alpha: float) -> ExtensionParams:
    """Rewrite parameters in the basis rescaled by the gauge phase.

    Rescaling e_pm by e^{i alpha} leaves the extension subspace fixed
    but shifts its coordinates: phi and gamma decrease by alpha/2 while
    xi increases by alpha/2.
    """
    if alpha == 0.0:
        return params
    half = 0.5 * alpha
    return ExtensionParams(
        phi=params.phi - half,
        gamma=params.gamma - half,
        xi=params.xi + half,
        q=params.q,
        r=params.r,
    )


def _boundary_notes(u: ExtensionParams, cos_gap: float | None) -> str:
    flags = []
    if 0.0 < u.q < 10 * QR_TOL or 0.0 < u.r < 10 * QR_TOL:
        flags.append("q or r within an order of magnitude of the branch tolerance")
    if cos_gap is not None and abs(cos_gap) < 1e-8:
        flags.append("q sits at the |cos phi| boundary of the stable family")
    if not flags:
        return ""
    return " boundary: " + "; ".join(flags) + "."


def classify(
    params: ExtensionParams,
    cd: CharacteristicData,
    tol: float = DEFAULT_TOL,
) -> ClassificationResult:
    """Assign the extension to exactly one spectral/symmetry class.

    Entries equal up to a phase alpha are handled by rescaling the
    e_pm basis direction: ``params`` is rewritten in the rescaled
    basis (already-gauged data fits alpha = 0 and is left alone), the
    applied shift is reported in ``gauge_phase``, and the certifying
    parameters refer to the rescaled basis.  Tolerance policy: q and r
    comparisons at 1e-10, phase comparisons at 1e-7, strict
    inequalities at the stable-family boundary (boundary contact is
    flagged in the notes).  ``tol`` governs the equality-up-to-phase
    test on the characteristic entries only.
    """
    equiv = cd.equivalence(tol)
    if equiv.verdict is EquivalenceVerdict.IDENTICALLY_ZERO:
        return _classify_zero(params)
    if equiv.verdict is EquivalenceVerdict.NOT_EQUIVALENT:
        return _classify_inequivalent(params, equiv)
    alpha = float(equiv.alpha)
    return _classify_equivalent(_gauge_shift(params, alpha), alpha)


def _classify_zero(u: ExtensionParams) -> ClassificationResult:
    if u.r <= QR_TOL:
        return ClassificationResult(
            ExtensionClass.EMPTY_RESOLVENT,
            None,
            "vanishing characteristic function with r = 0: the defining"
            " determinant vanishes identically and the spectrum fills the"
            " plane (phi and gamma arbitrary)." + _boundary_notes(u, None),
            gauge_phase=0.0,
        )
    if u.q <= QR_TOL:
        return ClassificationResult(
            ExtensionClass.UPSILON_J,
            CSymmetryParams.collapsed(0.0, 0.0),
            "q = 0: the extension commutes with the fundamental symmetry"
            " itself." + _boundary_notes(u, None),
            gauge_phase=0.0,
        )
    chi = -math.atanh(u.q)
    csym = CSymmetryParams(
        chi1=chi,
        omega1=u.gamma + u.phi,
        chi2=chi,
        omega2=u.gamma - u.phi,
    )
    return ClassificationResult(
        ExtensionClass.SIGMA_JST_PROPER,
        csym,
        "vanishing characteristic function with q, r > 0: certified by a"
        " block operator acting with distinct rotation angles on the two"
        " defect halves; no member of this regime is certified by every"
        " Clifford symmetry." + _boundary_notes(u, None),
        gauge_phase=0.0,
    )


def _classify_inequivalent(
    u: ExtensionParams, equiv: ApproxEqualResult
) -> ClassificationResult:
    residual = equiv.residual if equiv.residual is not None else float("nan")
    if u.q <= QR_TOL:
        return ClassificationResult(
            ExtensionClass.UPSILON_J,
            CSymmetryParams.collapsed(0.0, 0.0),
            "entries differ beyond any phase (residual"
            f" {residual:.3g}); no extension has empty resolvent and the"
            " stable family collapses onto the J-commuting extensions."
            + _boundary_notes(u, None),
            gauge_phase=None,
        )
    return ClassificationResult(
        ExtensionClass.GENERIC,
        None,
        "entries differ beyond any phase (residual"
        f" {residual:.3g}) and q > 0: no stable certificate exists."
        + _boundary_notes(u, None),
        gauge_phase=None,
    )


def _classify_equivalent(u: ExtensionParams, alpha: float) -> ClassificationResult:
    e2phi = cmath.exp(2j * u.phi)
    if u.r <= QR_TOL:
        if abs(e2phi - 1.0) <= PHASE_TOL:
            return ClassificationResult(
                ExtensionClass.EMPTY_RESOLVENT,
                None,
                "r = 0 with matching phase: the defining determinant"
                " vanishes identically and the spectrum fills the plane."
                + _boundary_notes(u, None),
                gauge_phase=alpha,
            )
        return ClassificationResult(
            ExtensionClass.GENERIC,
            None,
            "r = 0 but the diagonal phase misses the empty-resolvent"
            " condition; no stable certificate exists."
            + _boundary_notes(u, None),
            gauge_phase=alpha,
        )
    if u.q <= QR_TOL:
        if abs(e2phi + 1.0) <= PHASE_TOL:
            return ClassificationResult(
                ExtensionClass.UPSILON_U,
                CSymmetryParams.collapsed(0.0, 0.0),
                "q = 0 with e^{2 i phi} = -1: certified by every Clifford"
                " fundamental symmetry." + _boundary_notes(u, None),
                gauge_phase=alpha,
            )
        return ClassificationResult(
            ExtensionClass.UPSILON_J,
            CSymmetryParams.collapsed(0.0, 0.0),
            "q = 0: the extension commutes with the fundamental symmetry"
            " itself." + _boundary_notes(u, None),
            gauge_phase=alpha,
        )
    cos_phi = math.cos(u.phi)
    gap = u.q - abs(cos_phi)
    if gap < 0.0:
        chi = -math.atanh(u.q / cos_phi)
        return ClassificationResult(
            ExtensionClass.SIGMA_JST_PROPER,
            CSymmetryParams.collapsed(chi, u.gamma),
            "0 < q < |cos phi|: certified by the hyperbolic Clifford"
            " symmetry with omega = gamma." + _boundary_notes(u, gap),
            gauge_phase=alpha,
        )
    return ClassificationResult(
        ExtensionClass.GENERIC,
        None,
        "q >= |cos phi| with q, r > 0: outside the stable family."
        + _boundary_notes(u, gap),
        gauge_phase=alpha,
    )


def csymmetry_of(params: ExtensionParams, cd: CharacteristicData) -> CSymmetryParams:
    """Certifying parameters for extensions that admit one.

    Raises ``DomainError`` for classes without a certificate (empty
    resolvent and the generic class).
    """
    result = classify(params, cd)
    if result.csym is None:
        raise DomainError(
            f"extensions of class {result.extension_class.value} carry no"
            " certifying symmetry"
        )
    return result.csym


@dataclass(frozen=True)
class EmptyResolventFamily:
    """Description of all extensions whose resolvent set is empty.

    When ``exists`` is true the members are exactly r = 0 with gamma
    free and phi restricted to ``phi_values``; ``phi_values`` is None
    when phi is unconstrained (vanishing characteristic function).
    """

    exists: bool
    r: float | None = None
    phi_values: tuple[float, ...] | None = None
    gamma_free: bool = True
    notes: str = ""


def empty_resolvent_family(
    cd: CharacteristicData,
    tol: float = DEFAULT_TOL,
) -> EmptyResolventFamily:
    """All extension parameters with empty resolvent, if any.

    Equivalent entries with fitted phase alpha force e^{2 i phi} =
    e^{i alpha}, leaving the two solutions alpha/2 and alpha/2 + pi;
    identically vanishing data frees phi entirely; genuinely different
    entries admit no empty-resolvent extension at all.
    """
    equiv = cd.equivalence(tol)
    if equiv.verdict is EquivalenceVerdict.IDENTICALLY_ZERO:
        return EmptyResolventFamily(
            exists=True,
            r=0.0,
            phi_values=None,
            notes="phi and gamma arbitrary",
        )
    if equiv.verdict is EquivalenceVerdict.NOT_EQUIVALENT:
        return EmptyResolventFamily(
            exists=False,
            notes=f"entries differ beyond any phase (residual {equiv.residual:.3g})",
        )
    alpha = float(equiv.alpha)
    phis = tuple(sorted(((0.5 * alpha) % _TWO_PI, (0.5 * alpha + math.pi) % _TWO_PI)))
    return EmptyResolventFamily(
        exists=True,
        r=0.0,
        phi_values=phis,
        notes="gamma arbitrary",
    )


def weyl_from_sh(
    cd: CharacteristicData, v: np.ndarray, mu: complex
) -> np.ndarray:
    """Weyl function of the extension attached to a unitary gauge ``v``.

    Evaluates ``i (I + V Sh(mu)) (I - V Sh(mu))^{-1}`` with ``Sh`` the
    diagonal characteristic matrix.  The result is dissipative on the
    upper half-plane (positive semi-definite imaginary part); for
    identically vanishing data it is exactly ``i I``.

    Raises:
        DomainError: ``Im mu <= 0`` or ``v`` not unitary.
        PoleError: ``I - V Sh(mu)`` is numerically singular.
    """
    mu = complex(mu)
    if mu.imag <= 0.0:
        raise DomainError(f"Weyl function needs Im mu > 0, got {mu}")
    v = np.asarray(v, dtype=complex)
    if v.shape != (2, 2):
        raise DomainError("gauge matrix must be 2x2")
    if np.max(np.abs(v.conj().T @ v - np.eye(2))) > 1e-10:
        raise DomainError("gauge matrix must be unitary")
    sh = np.diag([complex(cd.s_plus(mu)), complex(cd.s_minus(mu))])
    w = v @ sh
    denom = np.eye(2, dtype=complex) - w
    if abs(np.linalg.det(denom)) < 1e-12:
        raise PoleError(f"Weyl function has a pole at mu={mu} for this gauge")
    return 1j * (np.eye(2, dtype=complex) + w) @ np.linalg.inv(denom)


def upsilon_u_member(
    cd: CharacteristicData, mu: complex, tol: float = 1e-10
) -> ExtensionParams:
    """An extension certified by every Clifford fundamental symmetry.

    Built from the unitary polar factor of the characteristic matrix at
    ``mu``: with v_pm = s_pm(mu)/|s_pm(mu)| the member has q = 0 and
    phases solving e^{i(phi+xi)} = v_plus, e^{i(phi-xi)} =
    -conj(v_minus).  For gauge-normalised data this lands at
    phi = pi/2.  Requires both entries to be non-degenerate at ``mu``.
    """
    mu = complex(mu)
    if mu.imag <= 0.0:
        raise DomainError(f"polar factor needs Im mu > 0, got {mu}")
    sp = complex(cd.s_plus(mu))
    sm = complex(cd.s_minus(mu))
    if abs(sp) <= tol or abs(sm) <= tol:
        raise DomainError(
            f"characteristic entries too small at mu={mu}; polar factor undefined"
        )
    a1 = cmath.phase(sp / abs(sp)) % _TWO_PI
    a2 = cmath.phase(-(sm / abs(sm)).conjugate()) % _TWO_PI
    phi = (0.5 * (a1 + a2)) % _TWO_PI
    xi = (0.5 * (a1 - a2)) % _TWO_PI
    if phi >= math.pi:
        # same unitary under the two-to-one parametrisation
        phi -= math.pi
        xi = (xi + math.pi) % _TWO_PI
    return ExtensionParams(phi=phi, gamma=0.0, xi=xi, q=0.0, r=1.0)
