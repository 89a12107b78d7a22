"""Classification and spectra of symmetry-commuting operator extensions.

The package models extensions of a symmetric operator with deficiency
indices (2, 2) that commute with a fundamental symmetry, through a
four-dimensional boundary space:

* :mod:`kreinext.boundary_space` -- the boundary model, its canonical
  symmetries and the subspaces attached to extensions;
* :mod:`kreinext.clifford` -- the family of fundamental symmetries
  generated by two anticommuting ones, and certificate operators;
* :mod:`kreinext.charfn` -- characteristic-function data for concrete
  interval and whole-line models;
* :mod:`kreinext.extensions` -- the five-way classification and the
  empty-resolvent family;
* :mod:`kreinext.spectral` -- non-real eigenvalue searches with winding
  certification and an independent shooting route;
* :mod:`kreinext.cli` -- the ``kreinext`` command.
"""

from .boundary_space import (
    E_MM,
    E_MP,
    E_PM,
    E_PP,
    J,
    R,
    RANK_RTOL,
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
from .charfn import (
    DEFAULT_SAMPLES,
    DEFAULT_TOL,
    ApproxEqualResult,
    CharacteristicData,
    EquivalenceVerdict,
    SturmLiouvilleModel,
    approx_equal_test,
    branch_sqrt,
    degenerate_sl,
    gauge_normalize,
    indefinite_sl,
    nonequivalence_residual,
    phase_candidate,
    potential_constant,
    potential_from_spec,
    potential_step,
    potential_zero,
    tw_mfunction,
    zero_chardata,
)
from .clifford import (
    CL_I,
    CL_J,
    CL_JR,
    CL_R,
    CliffordElement,
    CSymmetryParams,
    anticommuting_partner,
    as_matrix,
    c_chi_omega,
    csym_matrix,
    is_fundamental_symmetry,
    verify_c_axioms,
)
from .errors import (
    AccuracyError,
    DomainError,
    IndeterminateError,
    KreinExtError,
    NumericalFailure,
    PoleError,
)
from .extensions import (
    PHASE_TOL,
    QR_TOL,
    ClassificationResult,
    EmptyResolventFamily,
    ExtensionClass,
    ExtensionParams,
    classify,
    csymmetry_of,
    empty_resolvent_family,
    random_extension,
    upsilon_u_member,
    weyl_from_sh,
)
from .spectral import (
    Eigenvalue,
    RootIsolation,
    SearchBox,
    SpectralReport,
    SpectralVerdict,
    det_f,
    empty_resolvent_verdict,
    isolate_roots,
    nonreal_eigenvalues,
    shooting_char_entry,
    shooting_determinant,
    shooting_residual,
    winding_number,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # boundary space
    "BoundaryVector",
    "BoundarySubspace",
    "E_PP",
    "E_PM",
    "E_MP",
    "E_MM",
    "Z",
    "J",
    "R",
    "RANK_RTOL",
    "basis",
    "inner",
    "metric_z",
    "metric_jz",
    "apply_matrix",
    "map_subspace",
    "extension_subspace",
    "defect_curve",
    "intersection_dim",
    "is_hypermaximal_neutral",
    # clifford
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
    # characteristic data
    "CharacteristicData",
    "ApproxEqualResult",
    "EquivalenceVerdict",
    "SturmLiouvilleModel",
    "DEFAULT_TOL",
    "DEFAULT_SAMPLES",
    "branch_sqrt",
    "approx_equal_test",
    "gauge_normalize",
    "degenerate_sl",
    "indefinite_sl",
    "tw_mfunction",
    "zero_chardata",
    "potential_zero",
    "potential_constant",
    "potential_step",
    "potential_from_spec",
    "phase_candidate",
    "nonequivalence_residual",
    # extensions
    "ExtensionParams",
    "ExtensionClass",
    "ClassificationResult",
    "EmptyResolventFamily",
    "QR_TOL",
    "PHASE_TOL",
    "classify",
    "csymmetry_of",
    "empty_resolvent_family",
    "weyl_from_sh",
    "upsilon_u_member",
    "random_extension",
    # spectral
    "SearchBox",
    "SpectralVerdict",
    "SpectralReport",
    "Eigenvalue",
    "RootIsolation",
    "det_f",
    "empty_resolvent_verdict",
    "winding_number",
    "isolate_roots",
    "nonreal_eigenvalues",
    "shooting_residual",
    "shooting_determinant",
    "shooting_char_entry",
    # errors
    "KreinExtError",
    "DomainError",
    "AccuracyError",
    "IndeterminateError",
    "NumericalFailure",
    "PoleError",
]
