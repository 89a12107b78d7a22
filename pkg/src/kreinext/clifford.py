"""Clifford algebra of boundary symmetries and the C-symmetry family.

The identity together with the canonical symmetries J and R of the
boundary model generates a real Clifford algebra with basis
{I, J, R, JR}.  All bounded fundamental symmetries of the model that
anticommute-decompose over this algebra have the form

    alpha_1 J + alpha_2 R + alpha_3 iJR,   alpha real, |alpha| = 1,

and the operators certifying stable similarity to a self-adjoint
operator form the two-parameter family

    C(chi, omega) = cosh(chi) J + sinh(chi) cos(omega) JR
                    - i sinh(chi) sin(omega) R.

For extensions with identically vanishing characteristic function the
certifying operator may act with different (chi, omega) pairs on the
two defect halves; ``CSymmetryParams`` carries both pairs and
``csym_matrix`` builds the resulting block operator, which in general
lies outside the Clifford span.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import boundary_space as bs
from .errors import DomainError

__all__ = [
    "CliffordElement",
    "CSymmetryParams",
    "CL_I",
    "CL_J",
    "CL_R",
    "CL_JR",
    "as_matrix",
    "is_fundamental_symmetry",
    "anticommuting_partner",
    "c_chi_omega",
    "csym_matrix",
    "verify_c_axioms",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CliffordElement:
    """Element a0 I + a1 J + a2 R + a3 JR with complex coefficients."""

    coefficients: tuple[complex, complex, complex, complex]

    def __post_init__(self) -> None:
        cs = tuple(complex(c) for c in self.coefficients)
        if len(cs) != 4:
            raise ValueError("a Clifford element has exactly 4 coefficients")
        object.__setattr__(self, "coefficients", cs)

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        return CliffordElement(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __sub__(self, other: "CliffordElement") -> "CliffordElement":
        return CliffordElement(
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __mul__(self, scalar: complex) -> "CliffordElement":
        s = complex(scalar)
        return CliffordElement(tuple(s * a for a in self.coefficients))

    __rmul__ = __mul__


CL_I = CliffordElement((1, 0, 0, 0))
CL_J = CliffordElement((0, 1, 0, 0))
CL_R = CliffordElement((0, 0, 1, 0))
CL_JR = CliffordElement((0, 0, 0, 1))


def as_matrix(e: CliffordElement) -> bs.SymmetryMatrix:
    """Coordinate matrix of a Clifford element on the boundary model."""
    a0, a1, a2, a3 = e.coefficients
    return (
        a0 * np.eye(4, dtype=complex) + a1 * bs.J + a2 * bs.R + a3 * (bs.J @ bs.R)
    )


def is_fundamental_symmetry(e: CliffordElement, tol: float = 1e-12) -> bool:
    """Whether ``e`` is a nontrivial fundamental symmetry of the model.

    Checks the matrix identities M^2 = I and M = M* (for the Hilbert
    inner product) and excludes the identity itself.  Equivalently the
    coefficients are (0, a1, a2, i a3) with real (a1, a2, a3) on the
    unit sphere.
    """
    m = as_matrix(e)
    eye = np.eye(4)
    if np.max(np.abs(m @ m - eye)) > tol:
        return False
    if np.max(np.abs(m - m.conj().T)) > tol:
        return False
    return bool(np.max(np.abs(m - eye)) > math.sqrt(tol))


def _sphere_coords(e: CliffordElement, tol: float) -> np.ndarray:
    a0, a1, a2, a3 = e.coefficients
    vec = np.array([a1.real, a2.real, (a3 / 1j).real])
    checks = (abs(a0), abs(a1.imag), abs(a2.imag), abs(a3.real))
    if max(checks) > tol or abs(np.dot(vec, vec) - 1.0) > 10 * tol:
        raise DomainError("element is not a fundamental symmetry of the model")
    return vec


def anticommuting_partner(e: CliffordElement, tol: float = 1e-12) -> CliffordElement:
    """A fundamental symmetry anticommuting with ``e``.

    In sphere coordinates (a1, a2, a3) of J, R, iJR the partners form a
    great circle; the returned representative is the normalised
    projection of a fixed reference axis onto the orthogonal plane.
    The reference axis is the R direction, replaced by the J direction
    whenever ``e`` is parallel to R.  This makes the choice
    deterministic: J maps to R, R maps to J.
    """
    if not is_fundamental_symmetry(e, tol):
        raise DomainError("anticommuting partner requires a fundamental symmetry")
    a = _sphere_coords(e, tol)
    ref = np.array([0.0, 1.0, 0.0])
    if abs(np.dot(a, ref)) > 1.0 - 1e-9:
        ref = np.array([1.0, 0.0, 0.0])
    b = ref - np.dot(ref, a) * a
    b = b / np.linalg.norm(b)
    return CliffordElement((0.0, b[0], b[1], 1j * b[2]))


@dataclass(frozen=True)
class CSymmetryParams:
    """Hyperbolic parameters of a certifying C operator.

    ``(chi1, omega1)`` acts on the +i defect half and ``(chi2, omega2)``
    on the -i half.  Whenever the characteristic function does not
    vanish identically the two pairs coincide and the operator lies in
    the Clifford family; the ``collapsed`` constructor covers that case.
    """

    chi1: float
    omega1: float
    chi2: float
    omega2: float

    def __post_init__(self) -> None:
        for name in ("chi1", "chi2"):
            object.__setattr__(self, name, float(getattr(self, name)))
        for name in ("omega1", "omega2"):
            object.__setattr__(self, name, float(getattr(self, name)) % _TWO_PI)

    @classmethod
    def collapsed(cls, chi: float, omega: float) -> "CSymmetryParams":
        return cls(chi, omega, chi, omega)

    @property
    def is_collapsed(self) -> bool:
        return self.chi1 == self.chi2 and self.omega1 == self.omega2

    @property
    def chi(self) -> float:
        if not self.is_collapsed:
            raise ValueError("parameters differ between the defect halves")
        return self.chi1

    @property
    def omega(self) -> float:
        if not self.is_collapsed:
            raise ValueError("parameters differ between the defect halves")
        return self.omega1


def c_chi_omega(p: CSymmetryParams) -> CliffordElement:
    """Clifford element of a collapsed C-symmetry parameter pair.

    Returns cosh(chi) J + sinh(chi) cos(omega) JR - i sinh(chi)
    sin(omega) R.  Raises for non-collapsed parameters, whose operator
    leaves the Clifford span; use ``csym_matrix`` for those.
    """
    if not p.is_collapsed:
        raise DomainError(
            "parameters act differently on the defect halves; "
            "the operator is not a Clifford element, use csym_matrix"
        )
    chi, omega = p.chi, p.omega
    return CliffordElement(
        (
            0.0,
            math.cosh(chi),
            -1j * math.sinh(chi) * math.sin(omega),
            math.sinh(chi) * math.cos(omega),
        )
    )


def _half_block(chi: float, omega: float) -> np.ndarray:
    return np.array(
        [
            [math.cosh(chi), math.sinh(chi) * cmath.exp(-1j * omega)],
            [-math.sinh(chi) * cmath.exp(1j * omega), -math.cosh(chi)],
        ],
        dtype=complex,
    )


def csym_matrix(p: CSymmetryParams) -> bs.SymmetryMatrix:
    """Coordinate matrix of the certifying operator, block per defect half.

    Agrees with ``as_matrix(c_chi_omega(p))`` when ``p`` is collapsed.
    """
    m = np.zeros((4, 4), dtype=complex)
    m[:2, :2] = _half_block(p.chi1, p.omega1)
    m[2:, 2:] = _half_block(p.chi2, p.omega2)
    return m


def _matrix_c_axioms(m: np.ndarray, tol: float) -> bool:
    if np.max(np.abs(m @ m - np.eye(4))) > tol * max(1.0, np.max(np.abs(m)) ** 2):
        return False
    jm = bs.J @ m
    if np.max(np.abs(jm - jm.conj().T)) > tol * max(1.0, np.max(np.abs(jm))):
        return False
    # positivity threshold guards against zero modes masquerading as C
    return bool(np.min(np.linalg.eigvalsh(jm)) > 1e-10)


def verify_c_axioms(c: CliffordElement | CSymmetryParams, tol: float = 1e-10) -> bool:
    """Check C^2 = I and positivity of JC for a candidate C operator.

    Accepts either a Clifford element or C-symmetry parameters (the
    latter are expanded with ``csym_matrix`` so that block operators
    with distinct parameter pairs are also covered).
    """
    if isinstance(c, CSymmetryParams):
        m = csym_matrix(c)
    else:
        m = as_matrix(c)
    return _matrix_c_axioms(m, tol)
