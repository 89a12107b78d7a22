"""Characteristic-function data for concrete operator models.

The classification machinery consumes a pair of scalar functions
``s_plus``, ``s_minus`` on the open upper half-plane: the diagonal
entries of the characteristic function of the underlying symmetric
operator with respect to the boundary basis.  Both are holomorphic
contractions vanishing at ``i``.

Three providers are implemented:

* ``degenerate_sl``     -- a finite-interval problem with sign-indefinite
  weight whose two entries coincide; closed form.
* ``indefinite_sl``     -- a whole-line problem with indefinite weight,
  expressed through half-line Titchmarsh-Weyl coefficients which are
  computed by truncated initial-value integration.
* ``zero_chardata``     -- the identically vanishing case.

Square roots of spectral parameters use the branch cut along
``[0, inf)`` with positive imaginary part off the cut and non-negative
values on it.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import solve_ivp

from .errors import AccuracyError, DomainError, IndeterminateError

__all__ = [
    "branch_sqrt",
    "CharacteristicData",
    "EquivalenceVerdict",
    "ApproxEqualResult",
    "DEFAULT_SAMPLES",
    "DEFAULT_TOL",
    "approx_equal_test",
    "gauge_normalize",
    "degenerate_sl",
    "SturmLiouvilleModel",
    "tw_mfunction",
    "indefinite_sl",
    "zero_chardata",
    "potential_zero",
    "potential_constant",
    "potential_step",
    "potential_from_spec",
    "phase_candidate",
    "nonequivalence_residual",
]

_TWO_PI = 2.0 * math.pi

#: Default tolerance for phase fits and equality-up-to-phase residuals.
DEFAULT_TOL = 1e-7

#: Default sample set for equality tests: a 4x4 grid in the upper
#: half-plane away from the common zero at i.
DEFAULT_SAMPLES: tuple[complex, ...] = tuple(
    0.5 * k + 0.5j * j for k in range(1, 5) for j in range(1, 5)
)


def branch_sqrt(z: complex) -> complex:
    """Square root with branch cut along [0, inf).

    The argument of ``z`` is taken in (0, 2*pi), so the result has a
    positive imaginary part off the cut; on the cut the non-negative
    root is returned.  Consequently ``branch_sqrt(1j) = e^{i pi/4}``
    and ``branch_sqrt(-1j) = e^{3 i pi/4}``.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real >= 0.0:
        return complex(math.sqrt(z.real), 0.0)
    theta = math.atan2(z.imag, z.real)
    if theta <= 0.0:
        theta += _TWO_PI
    return math.sqrt(abs(z)) * cmath.exp(0.5j * theta)


class EquivalenceVerdict(enum.Enum):
    EQUIVALENT_WITH_PHASE = "EquivalentWithPhase"
    NOT_EQUIVALENT = "NotEquivalent"
    IDENTICALLY_ZERO = "IdenticallyZero"


@dataclass(frozen=True)
class ApproxEqualResult:
    """Outcome of the equality-up-to-phase test.

    ``alpha`` is the fitted phase and ``residual`` the maximal deviation
    ``|e^{i alpha} s_minus - s_plus|`` over the samples; both are None
    for identically vanishing data.
    """

    verdict: EquivalenceVerdict
    alpha: float | None = None
    residual: float | None = None


@dataclass
class CharacteristicData:
    """Diagonal entries of a characteristic function plus bookkeeping.

    ``gauge_phase`` is None until gauge normalisation has been applied
    (or found inapplicable); afterwards it records the phase by which
    the e_pm basis direction was rescaled.  Provider caches make
    repeated evaluation cheap; they assume single-threaded use or
    concurrent readers only.
    """

    s_plus: Callable[[complex], complex]
    s_minus: Callable[[complex], complex]
    identically_zero: bool = False
    gauge_phase: float | None = None
    label: str = ""
    _equiv_memo: ApproxEqualResult | None = field(
        default=None, repr=False, compare=False
    )

    def equivalence(self, tol: float = DEFAULT_TOL) -> ApproxEqualResult:
        """Equality-up-to-phase verdict at default samples.

        Memoised for the default tolerance; a non-default ``tol``
        re-runs the test.
        """
        if tol != DEFAULT_TOL:
            return approx_equal_test(self, tol=tol)
        if self._equiv_memo is None:
            self._equiv_memo = approx_equal_test(self)
        return self._equiv_memo


def approx_equal_test(
    cd: CharacteristicData,
    samples: Sequence[complex] | None = None,
    tol: float = DEFAULT_TOL,
) -> ApproxEqualResult:
    """Decide whether s_plus equals s_minus up to a unimodular constant.

    Fits ``e^{i alpha} = s_plus(mu0) / s_minus(mu0)`` at the first
    sample where ``|s_minus| > tol`` and reports the maximal residual
    ``|e^{i alpha} s_minus(mu) - s_plus(mu)|`` over all samples.

    Raises:
        DomainError: fewer than 8 samples, or samples clustered at i
            (where both entries vanish and the fit is vacuous).
        IndeterminateError: data is not flagged identically zero but
            ``|s_minus|`` stays below ``tol`` on every sample.
    """
    if samples is None:
        samples = DEFAULT_SAMPLES
    samples = [complex(m) for m in samples]
    if len(samples) < 8:
        raise DomainError("equality test needs at least 8 samples")
    if all(abs(m - 1j) < 1e-3 for m in samples):
        raise DomainError("samples must not all sit at the common zero i")
    if cd.identically_zero:
        return ApproxEqualResult(EquivalenceVerdict.IDENTICALLY_ZERO)

    sp = [complex(cd.s_plus(m)) for m in samples]
    sm = [complex(cd.s_minus(m)) for m in samples]
    pivot = next((k for k, v in enumerate(sm) if abs(v) > tol), None)
    if pivot is None:
        raise IndeterminateError(
            "s_minus is below tolerance at every sample; cannot fit a phase"
        )
    alpha = cmath.phase(sp[pivot] / sm[pivot]) % _TWO_PI
    rot = cmath.exp(1j * alpha)
    residual = max(abs(rot * b - a) for a, b in zip(sp, sm))
    if residual < tol:
        return ApproxEqualResult(
            EquivalenceVerdict.EQUIVALENT_WITH_PHASE, alpha, residual
        )
    return ApproxEqualResult(EquivalenceVerdict.NOT_EQUIVALENT, alpha, residual)


def gauge_normalize(
    cd: CharacteristicData,
    samples: Sequence[complex] | None = None,
    tol: float = DEFAULT_TOL,
) -> tuple[CharacteristicData, ApproxEqualResult]:
    """Rescale the e_pm direction so that equivalent entries coincide.

    When the entries agree up to the phase ``alpha``, rescaling the
    e_pm basis vector by ``e^{i alpha}`` turns ``s_minus`` into
    ``e^{i alpha} s_minus = s_plus``; the returned data stores
    ``s_plus`` for both entries so the identity is exact.  Data that is
    identically zero or genuinely non-equivalent is returned unchanged
    apart from the recorded gauge phase (0 for zero data, None
    otherwise).  Already-gauged data passes through untouched.
    """
    result = (
        cd.equivalence()
        if samples is None and tol == DEFAULT_TOL
        else approx_equal_test(cd, samples, tol)
    )
    if cd.gauge_phase is not None:
        return cd, result
    if result.verdict is EquivalenceVerdict.IDENTICALLY_ZERO:
        return replace(cd, gauge_phase=0.0, _equiv_memo=result), result
    if result.verdict is EquivalenceVerdict.NOT_EQUIVALENT:
        return cd, result
    gauged = replace(
        cd,
        s_minus=cd.s_plus,
        gauge_phase=float(result.alpha),
        _equiv_memo=None,
    )
    return gauged, result


# ---------------------------------------------------------------------------
# provider: degenerate finite-interval model
# ---------------------------------------------------------------------------

_SQ_I = branch_sqrt(1j)
_SQ_MI = branch_sqrt(-1j)
_SIN_I, _COS_I = cmath.sin(_SQ_I), cmath.cos(_SQ_I)
_SIN_MI, _COS_MI = cmath.sin(_SQ_MI), cmath.cos(_SQ_MI)


def _degenerate_entry(mu: complex) -> complex:
    mu = complex(mu)
    if mu.imag <= 0.0:
        raise DomainError(f"characteristic entry needs Im mu > 0, got {mu}")
    z = branch_sqrt(mu)
    sz, cz = cmath.sin(z), cmath.cos(z)
    num = _SQ_I * sz * _COS_I - z * cz * _SIN_I
    den = _SQ_MI * sz * _COS_MI - z * cz * _SIN_MI
    return num / den


def degenerate_sl() -> CharacteristicData:
    """Finite-interval model with sign-indefinite weight on (-1, 1).

    Both diagonal entries coincide with the single closed-form function

        s(mu) = (sqrt(i) sin(sqrt(mu)) cos(sqrt(i))
                   - sqrt(mu) cos(sqrt(mu)) sin(sqrt(i)))
              / (sqrt(-i) sin(sqrt(mu)) cos(sqrt(-i))
                   - sqrt(mu) cos(sqrt(mu)) sin(sqrt(-i))),

    so the equality-up-to-phase test returns phase 0 and the model
    supports a one-parameter family of extensions with empty resolvent.
    """
    return CharacteristicData(
        s_plus=_degenerate_entry,
        s_minus=_degenerate_entry,
        identically_zero=False,
        label="degenerate_sl",
    )


# ---------------------------------------------------------------------------
# provider: whole-line model through Titchmarsh-Weyl coefficients
# ---------------------------------------------------------------------------


@dataclass
class SturmLiouvilleModel:
    """Half-line data for -f'' + potential f = lambda f.

    The potential is assumed limit point at infinity (true for the
    bounded presets shipped here); this is documented, not verified.
    ``x_truncation`` is the initial Dirichlet cap, doubled as needed up
    to ``x_max``; a Weyl coefficient is accepted once the caps at X and
    2X agree within ``m_accept_tol``.
    """

    potential: Callable[[float], float]
    x_truncation: float = 40.0
    x_max: float = 320.0
    rtol: float = 1e-11
    atol: float = 1e-14
    m_accept_tol: float = 10.0 * DEFAULT_TOL
    label: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.x_truncation <= 0 or self.x_max < 2 * self.x_truncation:
            raise ValueError("need 0 < x_truncation and x_max >= 2*x_truncation")
        if self.rtol <= 0 or self.atol <= 0 or self.m_accept_tol <= 0:
            raise ValueError("tolerances must be positive")


def _capped_m(model: SturmLiouvilleModel, side: str, mu: complex, x_cap: float) -> complex:
    """Dirichlet-capped Weyl coefficient at truncation radius ``x_cap``.

    Integrates the cosine/sine pair jointly on [0, x_cap] with periodic
    renormalisation; the common factor cancels in the final ratio, which
    keeps the growing fundamental system inside floating-point range.
    """
    key = (side, mu, x_cap)
    hit = model._cache.get(key)
    if hit is not None:
        return hit
    if side == "plus":
        lam = mu
        pot = model.potential
    else:
        lam = -mu
        pot = lambda t: model.potential(-t)  # noqa: E731

    def rhs(t, y):
        f = pot(t) - lam
        return [y[1], f * y[0], y[3], f * y[2]]

    nseg = max(4, int(math.ceil(x_cap / 5.0)))
    edges = np.linspace(0.0, x_cap, nseg + 1)
    y = np.array([1.0, 0.0, 0.0, 1.0], dtype=complex)
    for a, b in zip(edges[:-1], edges[1:]):
        sol = solve_ivp(rhs, (a, b), y, method="DOP853", rtol=model.rtol, atol=model.atol)
        if not sol.success:
            raise AccuracyError(f"integration failed on [{a}, {b}]: {sol.message}")
        y = sol.y[:, -1]
        mag = np.max(np.abs(y))
        if mag > 1.0:
            y = y / mag
    if y[0] == 0:
        raise AccuracyError("cosine solution vanished at the cap")
    m = complex(y[2] / y[0])
    if side == "minus":
        # reflecting the axis flips the sign of the boundary derivative
        m = -m
    model._cache[key] = m
    return m


def tw_mfunction(model: SturmLiouvilleModel, side: str, mu: complex) -> complex:
    """Titchmarsh-Weyl coefficient of one half line at non-real ``mu``.

    For ``side="plus"`` this is M with psi = s - M c in L^2(0, inf) for
    the spectral parameter ``mu``; for ``side="minus"`` the half line
    (-inf, 0) with parameter ``-mu``.  Computed from Dirichlet caps at
    increasing radius; raises ``AccuracyError`` when consecutive caps
    do not settle before ``x_max``.
    """
    mu = complex(mu)
    if mu.imag == 0.0:
        raise DomainError("Weyl coefficients need a non-real spectral parameter")
    if side not in ("plus", "minus"):
        raise DomainError(f"side must be 'plus' or 'minus', got {side!r}")
    x = model.x_truncation
    while 2 * x <= model.x_max:
        m1 = _capped_m(model, side, mu, x)
        m2 = _capped_m(model, side, mu, 2 * x)
        if abs(m1 - m2) < model.m_accept_tol:
            return m2
        x *= 2
    raise AccuracyError(
        f"Weyl coefficient did not converge for mu={mu} within cap {model.x_max}"
    )


def indefinite_sl(model: SturmLiouvilleModel | None = None) -> CharacteristicData:
    """Whole-line model with indefinite weight, one entry per half line.

    Each characteristic entry is the Cayley-type quotient

        s(mu) = (M(mu) - M(i)) / (M(mu) - M(-i))

    of the corresponding half-line Weyl coefficient.  For the zero
    potential the two entries differ genuinely (not merely by a phase),
    so no extension has empty resolvent.
    """
    if model is None:
        model = SturmLiouvilleModel(potential=potential_zero(), label="zero potential")

    def make_entry(side: str) -> Callable[[complex], complex]:
        m_at_i = tw_mfunction(model, side, 1j)
        m_at_mi = tw_mfunction(model, side, -1j)

        def entry(mu: complex) -> complex:
            mu = complex(mu)
            if mu.imag <= 0.0:
                raise DomainError(f"characteristic entry needs Im mu > 0, got {mu}")
            m = tw_mfunction(model, side, mu)
            return (m - m_at_i) / (m - m_at_mi)

        return entry

    return CharacteristicData(
        s_plus=make_entry("plus"),
        s_minus=make_entry("minus"),
        identically_zero=False,
        label=f"indefinite_sl({model.label})" if model.label else "indefinite_sl",
    )


def zero_chardata() -> CharacteristicData:
    """Identically vanishing characteristic function."""

    def zero(mu: complex) -> complex:
        return 0j

    return CharacteristicData(
        s_plus=zero,
        s_minus=zero,
        identically_zero=True,
        gauge_phase=0.0,
        label="zero",
    )


# ---------------------------------------------------------------------------
# potential presets
# ---------------------------------------------------------------------------


def potential_zero() -> Callable[[float], float]:
    return lambda x: 0.0


def potential_constant(c: float) -> Callable[[float], float]:
    c = float(c)
    return lambda x: c


def potential_step(
    segments: Sequence[tuple[float, float, float]]
) -> Callable[[float], float]:
    """Sum of box profiles ``height`` on ``[left, right]``, zero outside."""
    segs = [(float(a), float(b), float(h)) for a, b, h in segments]
    for a, b, _ in segs:
        if not a < b:
            raise ValueError(f"step segment needs left < right, got [{a}, {b}]")

    def pot(x: float) -> float:
        return sum(h for a, b, h in segs if a <= x <= b)

    return pot


def potential_from_spec(spec: str) -> Callable[[float], float]:
    """Parse a potential preset string.

    Grammar::

        zero
        constant:<value>
        step:<left>:<right>:<height>[,<left>:<right>:<height>...]

    Plain data, no code execution.
    """
    spec = spec.strip()
    if spec == "zero":
        return potential_zero()
    if spec.startswith("constant:"):
        try:
            return potential_constant(float(spec.split(":", 1)[1]))
        except ValueError as exc:
            raise ValueError(f"bad constant potential {spec!r}") from exc
    if spec.startswith("step:"):
        body = spec[len("step:"):]
        segments = []
        for part in body.split(","):
            fields = part.split(":")
            if len(fields) != 3:
                raise ValueError(f"bad step segment {part!r} in {spec!r}")
            try:
                segments.append(tuple(float(v) for v in fields))
            except ValueError as exc:
                raise ValueError(f"bad step segment {part!r} in {spec!r}") from exc
        return potential_step(segments)
    raise ValueError(f"unknown potential preset {spec!r}")


# ---------------------------------------------------------------------------
# diagnostics for the whole-line model
# ---------------------------------------------------------------------------


def phase_candidate(model: SturmLiouvilleModel) -> complex:
    """The only unimodular constant that could relate the two entries.

    If the entries satisfied ``s_plus = e^{2 i phi} s_minus``, comparing
    the Cayley quotients at the normalisation points forces

        e^{2 i phi} = M_plus(i) M_minus(-i) / (M_plus(-i) M_minus(i)).

    The value is reported so it can be tested against the actual data.
    """
    mp_i = tw_mfunction(model, "plus", 1j)
    mp_mi = tw_mfunction(model, "plus", -1j)
    mm_i = tw_mfunction(model, "minus", 1j)
    mm_mi = tw_mfunction(model, "minus", -1j)
    return (mp_i * mm_mi) / (mp_mi * mm_i)


def nonequivalence_residual(model: SturmLiouvilleModel, mu: complex) -> complex:
    """Obstruction separating the two entries of the whole-line model.

    With theta_pm the arguments of M_pm(i), evaluates

        M_plus(mu) M_minus(mu) sin(theta_plus - theta_minus)
          - M_plus(mu) |M_minus(i)| sin(theta_plus)
          + M_minus(mu) |M_plus(i)| sin(theta_minus).

    A non-zero value certifies that no unimodular constant relates the
    two Weyl coefficients' Cayley quotients, hence no extension of the
    model has empty resolvent.
    """
    mp_i = tw_mfunction(model, "plus", 1j)
    mm_i = tw_mfunction(model, "minus", 1j)
    th_p = cmath.phase(mp_i)
    th_m = cmath.phase(mm_i)
    mp = tw_mfunction(model, "plus", mu)
    mm = tw_mfunction(model, "minus", mu)
    return (
        mp * mm * math.sin(th_p - th_m)
        - mp * abs(mm_i) * math.sin(th_p)
        + mm * abs(mp_i) * math.sin(th_m)
    )
