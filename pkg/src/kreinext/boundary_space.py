"""Four-dimensional boundary model of the defect space.

A symmetric operator with deficiency indices <2,2> that commutes with a
fundamental symmetry admits a boundary space spanned by four defect
elements, written here in the fixed order

    (e_pp, e_pm, e_mp, e_mm),

where the first sign labels the defect half (+i or -i) and the second
labels the eigenspace of the fundamental symmetry.  The basis is gauged
to be orthonormal for the Hilbert inner product, so coordinates carry
all the geometry: the canonical symmetries become constant 4x4 matrices
and extension subspaces become 2-dimensional coordinate subspaces.

Sign conventions: ``inner`` is linear in its first argument and
conjugate-linear in the second.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .errors import DomainError

if TYPE_CHECKING:
    from .charfn import CharacteristicData
    from .extensions import ExtensionParams

__all__ = [
    "BoundaryVector",
    "BoundarySubspace",
    "SymmetryMatrix",
    "Z",
    "J",
    "R",
    "E_PP",
    "E_PM",
    "E_MP",
    "E_MM",
    "basis",
    "apply_matrix",
    "inner",
    "metric_z",
    "metric_jz",
    "extension_subspace",
    "defect_curve",
    "intersection_dim",
    "is_hypermaximal_neutral",
]

#: Relative singular-value threshold used in all rank decisions.
RANK_RTOL = 1e-10

#: A symmetry operator on the boundary model, stored as a plain 4x4
#: complex array acting on coordinate columns.
SymmetryMatrix = np.ndarray

#: Parity of the defect half: +1 on span{e_pp, e_pm}, -1 on the rest.
Z: SymmetryMatrix = np.diag([1.0, 1.0, -1.0, -1.0]).astype(complex)

#: The fundamental symmetry: +1 on span{e_pp, e_mp}, -1 on the rest.
J: SymmetryMatrix = np.diag([1.0, -1.0, 1.0, -1.0]).astype(complex)

#: The anticommuting partner symmetry; swaps the two eigenspaces of J
#: inside each defect half.  The free unimodular gauge is fixed to 1.
R: SymmetryMatrix = np.array(
    [
        [0.0, 1.0, 0.0, 0.0],
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 1.0, 0.0],
    ],
    dtype=complex,
)

_JZ: SymmetryMatrix = J @ Z


@dataclass(frozen=True)
class BoundaryVector:
    """Element of the boundary model, held as four complex coordinates."""

    coords: tuple[complex, complex, complex, complex]

    def __post_init__(self) -> None:
        cs = tuple(complex(c) for c in self.coords)
        if len(cs) != 4:
            raise ValueError("a boundary vector has exactly 4 coordinates")
        if not all(cmath.isfinite(c) for c in cs):
            raise ValueError("boundary vector coordinates must be finite")
        object.__setattr__(self, "coords", cs)

    @classmethod
    def from_array(cls, a: np.ndarray) -> "BoundaryVector":
        a = np.asarray(a, dtype=complex).reshape(-1)
        return cls(tuple(a))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coords, dtype=complex)

    def norm(self) -> float:
        return float(np.linalg.norm(self.array))

    def __add__(self, other: "BoundaryVector") -> "BoundaryVector":
        return BoundaryVector.from_array(self.array + other.array)

    def __sub__(self, other: "BoundaryVector") -> "BoundaryVector":
        return BoundaryVector.from_array(self.array - other.array)

    def __neg__(self) -> "BoundaryVector":
        return BoundaryVector.from_array(-self.array)

    def __mul__(self, scalar: complex) -> "BoundaryVector":
        return BoundaryVector.from_array(complex(scalar) * self.array)

    __rmul__ = __mul__


E_PP = BoundaryVector((1, 0, 0, 0))
E_PM = BoundaryVector((0, 1, 0, 0))
E_MP = BoundaryVector((0, 0, 1, 0))
E_MM = BoundaryVector((0, 0, 0, 1))


def basis() -> tuple[BoundaryVector, BoundaryVector, BoundaryVector, BoundaryVector]:
    """The ordered orthonormal basis (e_pp, e_pm, e_mp, e_mm)."""
    return E_PP, E_PM, E_MP, E_MM


@dataclass(frozen=True)
class BoundarySubspace:
    """Subspace of the boundary model given by a spanning tuple.

    The spanning vectors must be linearly independent; this is enforced
    at construction through the smallest singular value of the
    coordinate matrix.
    """

    vectors: tuple[BoundaryVector, ...]

    def __post_init__(self) -> None:
        vs = tuple(self.vectors)
        if not 1 <= len(vs) <= 4:
            raise ValueError("a subspace needs between 1 and 4 spanning vectors")
        object.__setattr__(self, "vectors", vs)
        sv = np.linalg.svd(self.matrix, compute_uv=False)
        if sv[-1] <= RANK_RTOL * sv[0]:
            raise ValueError("spanning vectors are linearly dependent")

    @property
    def matrix(self) -> np.ndarray:
        """4 x dim coordinate matrix with spanning vectors as columns."""
        return np.column_stack([v.array for v in self.vectors])

    @property
    def dim(self) -> int:
        return len(self.vectors)


def apply_matrix(m: SymmetryMatrix, v: BoundaryVector) -> BoundaryVector:
    """Apply a 4x4 coordinate matrix to a boundary vector."""
    return BoundaryVector.from_array(np.asarray(m, dtype=complex) @ v.array)


def map_subspace(m: SymmetryMatrix, s: BoundarySubspace) -> BoundarySubspace:
    """Image of a subspace under an invertible coordinate matrix."""
    return BoundarySubspace(tuple(apply_matrix(m, v) for v in s.vectors))


def inner(x: BoundaryVector, y: BoundaryVector) -> complex:
    """Hilbert inner product; linear in ``x``, conjugate-linear in ``y``."""
    return complex(np.vdot(y.array, x.array))


def metric_z(x: BoundaryVector, y: BoundaryVector) -> complex:
    """Indefinite metric induced by the defect-half parity, (Zx, y)."""
    return complex(np.vdot(y.array, Z @ x.array))


def metric_jz(x: BoundaryVector, y: BoundaryVector) -> complex:
    """Indefinite metric (JZx, y); signature (+, -, -, +) on the basis."""
    return complex(np.vdot(y.array, _JZ @ x.array))


def extension_subspace(params: "ExtensionParams") -> BoundarySubspace:
    """Boundary subspace of the extension attached to a unitary parameter.

    The two spanning vectors are

        d1 = e_pp + q e^{i(phi+gamma)} e_pm + r e^{i(phi+xi)} e_mp,
        d2 = e_mm - r e^{i(phi-xi)} e_pm + q e^{i(phi-gamma)} e_mp,

    and the result is hypermaximal neutral for ``metric_jz``.
    """
    phi, gamma, xi = params.phi, params.gamma, params.xi
    q, r = params.q, params.r
    d1 = BoundaryVector(
        (1.0, q * cmath.exp(1j * (phi + gamma)), r * cmath.exp(1j * (phi + xi)), 0.0)
    )
    d2 = BoundaryVector(
        (0.0, -r * cmath.exp(1j * (phi - xi)), q * cmath.exp(1j * (phi - gamma)), 1.0)
    )
    return BoundarySubspace((d1, d2))


def defect_curve(cd: "CharacteristicData", mu: complex) -> BoundarySubspace:
    """Defect subspace of the adjoint at a non-real point ``mu``.

    Spanned by ``e_pp - s_plus(mu) e_mp`` and ``e_pm - s_minus(mu) e_mm``
    where ``s_plus``/``s_minus`` are the diagonal entries of the
    characteristic function.  Requires ``Im mu > 0``.
    """
    mu = complex(mu)
    if mu.imag <= 0.0:
        raise DomainError(f"defect curve needs Im mu > 0, got mu={mu}")
    sp = complex(cd.s_plus(mu))
    sm = complex(cd.s_minus(mu))
    c1 = BoundaryVector((1.0, 0.0, -sp, 0.0))
    c2 = BoundaryVector((0.0, 1.0, 0.0, -sm))
    return BoundarySubspace((c1, c2))


def intersection_dim(a: BoundarySubspace, b: BoundarySubspace) -> int:
    """Dimension of the intersection of two subspaces.

    Computed as ``dim a + dim b - rank([a | b])`` with the rank taken
    from singular values above ``RANK_RTOL`` times the largest one.
    """
    stacked = np.hstack([a.matrix, b.matrix])
    sv = np.linalg.svd(stacked, compute_uv=False)
    rank = int(np.count_nonzero(sv > RANK_RTOL * sv[0]))
    return a.dim + b.dim - rank


def is_hypermaximal_neutral(s: BoundarySubspace, tol: float = 1e-10) -> bool:
    """Whether ``s`` is neutral for ``metric_jz`` and of half dimension.

    Hypermaximality in the 4-dimensional model is equivalent to being a
    2-dimensional neutral subspace of the signature (+,-,-,+) metric.
    """
    if s.dim != 2:
        return False
    g = s.matrix.conj().T @ _JZ @ s.matrix
    return bool(np.max(np.abs(g)) < tol)
