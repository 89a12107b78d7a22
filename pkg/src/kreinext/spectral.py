"""Non-real point spectra of extensions via the defining determinant.

A non-real number is an eigenvalue of the extension with parameters
(phi, gamma, xi, q, r) exactly when

    F(mu) = r e^{i(phi+xi)} + s_plus(mu)
            - r e^{i(phi-xi)} s_plus(mu) s_minus(mu)
            - e^{2 i phi} s_minus(mu)

vanishes.  ``F`` is holomorphic on the upper half-plane, so zeros
inside a rectangle are counted by the argument principle and then
polished individually; the winding total certifies that none were
missed.  Two failure modes are guarded: ``F`` may vanish identically
(empty resolvent -- detected structurally and by sampling before any
contour work), and a zero may sit on the requested contour (reported,
not silently mistreated).

For the degenerate finite-interval model an independent shooting route
is provided: eigenvalues are the points where boundary data of the
half-interval solutions become linearly dependent on the extension's
domain data, measured by a 4x4 determinant or by the smallest singular
value of the column-normalised matrix.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.integrate import solve_ivp

from .charfn import CharacteristicData, branch_sqrt
from .errors import DomainError, NumericalFailure
from .extensions import ExtensionClass, ExtensionParams, classify

__all__ = [
    "SearchBox",
    "SpectralVerdict",
    "Eigenvalue",
    "SpectralReport",
    "RootIsolation",
    "det_f",
    "empty_resolvent_verdict",
    "winding_number",
    "isolate_roots",
    "nonreal_eigenvalues",
    "shooting_residual",
    "shooting_determinant",
    "shooting_char_entry",
]

#: Determinant magnitude accepted as "vanishes identically" when sampled.
F_ZERO_TOL = 1e-9

#: Default acceptance threshold for polished roots.
POLISH_TOL = 1e-10

#: Contour refinement stops once a segment turns the argument by less
#: than this many radians (safe branch tracking needs < pi).
_MAX_TURN = 1.0

_MIN_BOX_DIAM = 1e-6


@dataclass(frozen=True)
class SearchBox:
    """Axis-aligned rectangle in the open upper half-plane."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float

    def __post_init__(self) -> None:
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError("box edges must satisfy re_min < re_max, im_min < im_max")
        if self.im_min <= 0.0:
            raise ValueError("box must lie strictly inside the upper half-plane")

    @property
    def center(self) -> complex:
        return complex(0.5 * (self.re_min + self.re_max), 0.5 * (self.im_min + self.im_max))

    @property
    def diameter(self) -> float:
        return math.hypot(self.re_max - self.re_min, self.im_max - self.im_min)

    def corners(self) -> list[complex]:
        """Counter-clockwise, starting at the lower-left corner."""
        return [
            complex(self.re_min, self.im_min),
            complex(self.re_max, self.im_min),
            complex(self.re_max, self.im_max),
            complex(self.re_min, self.im_max),
        ]

    def contains(self, z: complex, pad: float = 0.0) -> bool:
        return (
            self.re_min - pad <= z.real <= self.re_max + pad
            and self.im_min - pad <= z.imag <= self.im_max + pad
        )

    def split(self, t: float = 0.5) -> tuple["SearchBox", "SearchBox"]:
        """Cut across the longer side at fraction ``t``."""
        if self.re_max - self.re_min >= self.im_max - self.im_min:
            m = self.re_min + (self.re_max - self.re_min) * t
            return (
                SearchBox(self.re_min, m, self.im_min, self.im_max),
                SearchBox(m, self.re_max, self.im_min, self.im_max),
            )
        m = self.im_min + (self.im_max - self.im_min) * t
        return (
            SearchBox(self.re_min, self.re_max, self.im_min, m),
            SearchBox(self.re_min, self.re_max, m, self.im_max),
        )


class SpectralVerdict(enum.Enum):
    DISCRETE_SET = "DiscreteSet"
    IDENTICALLY_ZERO_DETERMINANT = "IdenticallyZeroDeterminant"


@dataclass(frozen=True)
class Eigenvalue:
    """A polished zero of the defining determinant."""

    mu: complex
    residual: float


@dataclass(frozen=True)
class RootIsolation:
    """Zeros of a holomorphic function in a box, certified by winding."""

    roots: tuple[complex, ...]
    winding_total: int
    evaluations: int


@dataclass(frozen=True)
class SpectralReport:
    """Outcome of an eigenvalue search over one box."""

    verdict: SpectralVerdict
    box: SearchBox
    winding_total: int
    eigenvalues: tuple[Eigenvalue, ...]
    evaluations: int


def det_f(params: ExtensionParams, cd: CharacteristicData, mu: complex) -> complex:
    """Defining determinant of the extension at ``mu`` (upper half-plane)."""
    mu = complex(mu)
    if mu.imag <= 0.0:
        raise DomainError(f"determinant needs Im mu > 0, got {mu}")
    sp = complex(cd.s_plus(mu))
    sm = complex(cd.s_minus(mu))
    r, phi, xi = params.r, params.phi, params.xi
    return (
        r * cmath.exp(1j * (phi + xi))
        + sp
        - r * cmath.exp(1j * (phi - xi)) * sp * sm
        - cmath.exp(2j * phi) * sm
    )


_SAMPLE_GRID: tuple[complex, ...] = tuple(
    complex(a, b)
    for a in (0.5, 1.5, 2.5, 3.5, 4.5)
    for b in (0.5, 1.5, 2.5, 3.5, 4.5)
)


def empty_resolvent_verdict(
    params: ExtensionParams, cd: CharacteristicData, tol: float = F_ZERO_TOL
) -> SpectralVerdict:
    """Decide whether the defining determinant vanishes identically.

    Two independent routes must agree: the structural classification of
    the parameters, and sampling ``F`` on a 5x5 grid.  Disagreement is
    a ``NumericalFailure`` -- it means the characteristic data violates
    the tolerance model rather than the caller picking a bad box.
    """
    structural = (
        classify(params, cd).extension_class is ExtensionClass.EMPTY_RESOLVENT
    )
    sampled_max = max(abs(det_f(params, cd, mu)) for mu in _SAMPLE_GRID)
    sampled = sampled_max < tol
    if structural != sampled:
        raise NumericalFailure(
            "empty-resolvent check disagrees: classification says"
            f" {structural}, max sampled |F| = {sampled_max:.3e} against"
            f" tolerance {tol:g}"
        )
    if structural:
        return SpectralVerdict.IDENTICALLY_ZERO_DETERMINANT
    return SpectralVerdict.DISCRETE_SET


def _winding(
    f: Callable[[complex], complex],
    box: SearchBox,
    cache: dict,
    n0: int,
    max_evals: int,
) -> int:
    def fv(z: complex) -> complex:
        v = cache.get(z)
        if v is None:
            v = f(z)
            cache[z] = v
        return v

    corners = box.corners()
    total = 0.0
    evals = 0
    for k in range(4):
        za, zb = corners[k], corners[(k + 1) % 4]
        ts = np.linspace(0.0, 1.0, n0 + 1)
        pts = [za + (zb - za) * t for t in ts]
        vals = [fv(z) for z in pts]
        segments = list(zip(pts[:-1], pts[1:], vals[:-1], vals[1:]))
        while segments:
            z1, z2, f1, f2 = segments.pop()
            if abs(f1) == 0.0 or abs(f2) == 0.0:
                raise NumericalFailure(
                    f"determinant vanishes on the contour near {z1}"
                )
            turn = cmath.phase(f2 / f1)
            if abs(turn) > _MAX_TURN and abs(z2 - z1) > 1e-13 * max(1.0, abs(z1)):
                zm = 0.5 * (z1 + z2)
                fm = fv(zm)
                evals += 1
                if evals > max_evals:
                    raise NumericalFailure("contour refinement budget exceeded")
                segments.append((z1, zm, f1, fm))
                segments.append((zm, z2, fm, f2))
            else:
                total += turn
    k = total / (2.0 * math.pi)
    if abs(k - round(k)) > 0.01:
        raise NumericalFailure(f"winding number not integral: {k}")
    return int(round(k))


def winding_number(
    f: Callable[[complex], complex],
    box: SearchBox,
    *,
    n0: int = 32,
    max_evals: int = 400000,
) -> int:
    """Zeros of ``f`` inside ``box``, counted with multiplicity.

    Tracks the argument of ``f`` along the boundary with adaptive
    segment refinement; fails rather than returning a non-integral or
    contour-contaminated count.
    """
    return _winding(f, box, {}, n0, max_evals)


def _newton(
    f: Callable[[complex], complex],
    z0: complex,
    keep: Callable[[complex], bool],
    tol: float,
    maxit: int = 60,
) -> complex | None:
    z = z0
    try:
        for _ in range(maxit):
            fz = f(z)
            if abs(fz) < tol:
                # two extra corrections sharpen the root well below tol
                for _ in range(2):
                    h = 1e-7 * max(1.0, abs(z))
                    d = (f(z + h) - f(z - h)) / (2.0 * h)
                    if d != 0:
                        z = z - f(z) / d
                return z if keep(z) else None
            h = 1e-7 * max(1.0, abs(z))
            d = (f(z + h) - f(z - h)) / (2.0 * h)
            if d == 0:
                return None
            zn = z - fz / d
            if not keep(zn):
                return None
            z = zn
    except DomainError:
        # the iteration left the function's domain: treat as an escape
        return None
    return None


def _refine_one(
    f: Callable[[complex], complex],
    box: SearchBox,
    cache: dict,
    polish_tol: float,
    n0: int,
    max_evals: int,
) -> complex:
    """Polish the single zero of a winding-1 box.

    Newton from the centre and quadrant points; if every start escapes,
    shrink the box by winding-guided bisection and retry.  The slightly
    off-centre split fractions dodge the case where the zero sits on a
    median.
    """
    b = box
    while True:
        def keep(z: complex, _b: SearchBox = b) -> bool:
            # stay in the upper half-plane: the central-difference step
            # evaluates f a real offset away from z
            return z.imag > 1e-7 and _b.contains(z, pad=4.0 * _b.diameter + 1e-9)

        starts = [b.center] + [
            complex(
                b.re_min + (b.re_max - b.re_min) * a,
                b.im_min + (b.im_max - b.im_min) * c,
            )
            for a in (0.25, 0.75)
            for c in (0.25, 0.75)
        ]
        for z0 in starts:
            z = _newton(f, z0, keep, polish_tol)
            if (
                z is not None
                and box.contains(z, pad=1e-7 * max(1.0, box.diameter))
                and abs(f(z)) < polish_tol
            ):
                return z
        if b.diameter < _MIN_BOX_DIAM:
            raise NumericalFailure(
                f"root polish failed on a box of diameter {b.diameter:.2e}"
            )
        shrunk = False
        for t in (0.5, 0.53, 0.47, 0.61):
            b1, b2 = b.split(t)
            try:
                w1 = _winding(f, b1, cache, n0, max_evals)
            except NumericalFailure:
                continue
            if w1 == 1:
                b = b1
                shrunk = True
                break
            try:
                w2 = _winding(f, b2, cache, n0, max_evals)
            except NumericalFailure:
                continue
            if w1 == 0 and w2 == 1:
                b = b2
                shrunk = True
                break
        if not shrunk:
            raise NumericalFailure("winding-guided bisection could not shrink the box")


def _isolate(
    f: Callable[[complex], complex],
    box: SearchBox,
    count: int,
    cache: dict,
    polish_tol: float,
    n0: int,
    max_evals: int,
) -> list[complex]:
    if count == 0:
        return []
    if count == 1:
        return [_refine_one(f, box, cache, polish_tol, n0, max_evals)]
    if box.diameter < _MIN_BOX_DIAM:
        raise NumericalFailure("zero cluster could not be resolved")
    for t in (0.5, 0.53, 0.47, 0.59):
        b1, b2 = box.split(t)
        try:
            w1 = _winding(f, b1, cache, n0, max_evals)
            w2 = _winding(f, b2, cache, n0, max_evals)
        except NumericalFailure:
            continue
        if w1 + w2 == count:
            return _isolate(f, b1, w1, cache, polish_tol, n0, max_evals) + _isolate(
                f, b2, w2, cache, polish_tol, n0, max_evals
            )
    raise NumericalFailure("subdivision failed to split the winding count")


def isolate_roots(
    f: Callable[[complex], complex],
    box: SearchBox,
    *,
    polish_tol: float = POLISH_TOL,
    n0: int = 32,
    max_evals: int = 400000,
) -> RootIsolation:
    """All zeros of a holomorphic ``f`` in ``box``, winding-certified.

    The number of returned roots always equals the boundary winding
    number; a shortfall (lost root, merged pair) raises
    ``NumericalFailure`` instead of returning a silently wrong list.
    """
    cache: dict = {}
    total = _winding(f, box, cache, n0, max_evals)
    if total < 0:
        raise NumericalFailure(
            f"negative winding number {total}: function is not holomorphic here"
        )
    roots = _isolate(f, box, total, cache, polish_tol, n0, max_evals)
    roots.sort(key=lambda z: (z.real, z.imag))
    for a, b in zip(roots[:-1], roots[1:]):
        if abs(a - b) < 1e-8:
            raise NumericalFailure(
                f"two polished roots coincide near {a}; cluster unresolved"
            )
    return RootIsolation(
        roots=tuple(roots), winding_total=total, evaluations=len(cache)
    )


def nonreal_eigenvalues(
    params: ExtensionParams,
    cd: CharacteristicData,
    box: SearchBox,
    *,
    polish_tol: float = POLISH_TOL,
    n0: int = 32,
    max_evals: int = 400000,
) -> SpectralReport:
    """Eigenvalues of the extension inside ``box``.

    Runs the empty-resolvent guard first; when the determinant is not
    identically zero, isolates its zeros with winding certification.
    Eigenvalues are sorted by real then imaginary part and carry the
    determinant residual after polish.
    """
    verdict = empty_resolvent_verdict(params, cd)
    if verdict is SpectralVerdict.IDENTICALLY_ZERO_DETERMINANT:
        return SpectralReport(
            verdict=verdict, box=box, winding_total=0, eigenvalues=(), evaluations=0
        )

    def f(mu: complex) -> complex:
        return det_f(params, cd, mu)

    iso = isolate_roots(f, box, polish_tol=polish_tol, n0=n0, max_evals=max_evals)
    eigs = tuple(Eigenvalue(mu=z, residual=abs(f(z))) for z in iso.roots)
    return SpectralReport(
        verdict=SpectralVerdict.DISCRETE_SET,
        box=box,
        winding_total=iso.winding_total,
        eigenvalues=eigs,
        evaluations=iso.evaluations,
    )


# ---------------------------------------------------------------------------
# shooting route for the degenerate finite-interval model
# ---------------------------------------------------------------------------

_SQ_I = branch_sqrt(1j)
_SQ_MI = branch_sqrt(-1j)


@lru_cache(maxsize=None)
def _halfline_data(mu: complex, slope: complex, rtol: float = 1e-12) -> tuple[complex, complex]:
    """Integrate w'' = -mu w on [0, 1] with w(0) = 0, w'(0) = slope."""

    def rhs(t, y):
        return [y[1], -mu * y[0]]

    sol = solve_ivp(
        rhs,
        (0.0, 1.0),
        np.array([0.0, slope], dtype=complex),
        method="DOP853",
        rtol=rtol,
        atol=1e-14,
    )
    if not sol.success:
        raise NumericalFailure(f"interval integration failed at mu={mu}: {sol.message}")
    return complex(sol.y[0, -1]), complex(sol.y[1, -1])


@lru_cache(maxsize=1)
def _defect_boundary_data() -> tuple[np.ndarray, ...]:
    """Boundary data (f(0+), f'(0+), f(0-), f'(0-)) of the defect basis.

    Each basis function solves -f'' = lam f on one half of (-1, 1) with
    a Dirichlet end, lam = i for the first index "+" and lam = -i for
    "-".  The right-half functions are integrated in the reflected
    variable, which flips the sign of the derivative data.
    """
    w, wp = _halfline_data(1j, -_SQ_I)
    e_pp = np.array([w, -wp, 0, 0], dtype=complex)
    w, wp = _halfline_data(-1j, -_SQ_MI)
    e_mp = np.array([w, -wp, 0, 0], dtype=complex)
    v, vp = _halfline_data(1j, -_SQ_I)
    e_pm = np.array([0, 0, v, vp], dtype=complex)
    v, vp = _halfline_data(-1j, -_SQ_MI)
    e_mm = np.array([0, 0, v, vp], dtype=complex)
    return e_pp, e_pm, e_mp, e_mm


@lru_cache(maxsize=64)
def _domain_boundary_data(params: ExtensionParams) -> tuple[np.ndarray, np.ndarray]:
    e_pp, e_pm, e_mp, e_mm = _defect_boundary_data()
    phi, gam, xi, q, r = params.phi, params.gamma, params.xi, params.q, params.r
    d1 = e_pp + q * cmath.exp(1j * (phi + gam)) * e_pm + r * cmath.exp(1j * (phi + xi)) * e_mp
    d2 = e_mm - r * cmath.exp(1j * (phi - xi)) * e_pm + q * cmath.exp(1j * (phi - gam)) * e_mp
    return d1, d2


def _shooting_matrix(params: ExtensionParams, mu: complex) -> np.ndarray:
    mu = complex(mu)
    if mu.imag <= 0.0:
        raise DomainError(f"shooting needs Im mu > 0, got {mu}")
    w, wp = _halfline_data(mu, -1.0)
    v, vp = _halfline_data(mu, 1.0)
    col_plus = np.array([w, -wp, 0, 0], dtype=complex)
    col_minus = np.array([0, 0, v, vp], dtype=complex)
    d1, d2 = _domain_boundary_data(params)
    return np.column_stack([col_plus, col_minus, d1, d2])


def shooting_residual(params: ExtensionParams, mu: complex) -> float:
    """Eigenvalue indicator for the degenerate model, scale-free.

    Collects boundary data of the two Dirichlet solutions at ``mu`` and
    of the extension's domain pair, normalises the four columns and
    returns the smallest singular value: near zero exactly when ``mu``
    is an eigenvalue, order one otherwise.  Independent of the
    closed-form characteristic function, so it cross-checks the
    determinant route.
    """
    k = _shooting_matrix(params, mu)
    k = k / np.linalg.norm(k, axis=0)
    return float(np.linalg.svd(k, compute_uv=False)[-1])


def shooting_determinant(params: ExtensionParams, mu: complex) -> complex:
    """Raw boundary determinant of the degenerate model at ``mu``.

    Holomorphic in ``mu`` (no normalisation), hence usable with the
    winding machinery as an independent eigenvalue count.
    """
    return complex(np.linalg.det(_shooting_matrix(params, mu)))


def shooting_char_entry(mu: complex) -> complex:
    """Characteristic entry of the degenerate model by shooting alone.

    Expands the right-half Dirichlet solution at ``mu`` in the two
    right-half defect functions and returns the negative coefficient
    ratio; agrees with the closed form but shares none of its algebra.
    """
    mu = complex(mu)
    if mu.imag <= 0.0:
        raise DomainError(f"characteristic entry needs Im mu > 0, got {mu}")
    w, wp = _halfline_data(mu, -1.0)
    b = np.array([w, -wp], dtype=complex)
    e_pp, _, e_mp, _ = _defect_boundary_data()
    a = np.column_stack([e_pp[:2], e_mp[:2]])
    coef = np.linalg.solve(a, b)
    return complex(-coef[1] / coef[0])
