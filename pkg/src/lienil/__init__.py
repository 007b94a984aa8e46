__version__ = "0.1.0"

from lienil.core.algebra.base import (
    LieAlgebra,
    change_of_basis,
    direct_sum,
    from_brackets,
    is_ideal,
    is_subalgebra,
    quotient,
    zero_algebra,
)
from lienil.core.algebra.fingerprint import (
    Fingerprint,
    fingerprint,
    fingerprint_many,
    matches_fingerprint,
)
from lienil.core.algebra.series import (
    SemidirectReport,
    center,
    centralizer,
    derived_subalgebra,
    is_nilpotent,
    is_semidirect,
    lower_central_series,
    nilpotency_class,
    upper_central_series,
)
from lienil.core.catalog.entries import CatalogEntry, get, identify, list_entries
from lienil.core.catalog.generators import abelian, heisenberg, heisenberg_plus_abelian
from lienil.core.catalog.table import (
    CorankRow,
    GrowthLawCheck,
    corank_row,
    corank_table,
    growth_law,
)
from lienil.core.cohomology.complex import (
    CohomologyReport,
    ce_differential,
    cohomology_report,
    corank,
    schur_multiplier_dim,
)
from lienil.core.cohomology.extension import (
    TwoCocycle,
    central_extension,
    cocycle_space,
    find_extension_to,
    is_cocycle,
)
from lienil.core.config import Settings, current_settings, get_settings, set_settings
from lienil.core.errors import (
    IndexOutOfRange,
    InputError,
    JacobiViolation,
    LienilError,
    ModeMismatch,
    NotACocycle,
    NotAnIdeal,
    NotAntisymmetric,
    ParseError,
    SingularMatrix,
    UnknownName,
)
from lienil.core.fock.rep import (
    FockRep,
    FockReport,
    PairSpec,
    build_rep,
    check_realization,
    safe_commutator_check,
    to_matrix,
)
from lienil.core.linalg.matrix import Matrix, kernel_basis, rank, rref
from lienil.core.linalg.scalar import I, Scalar
from lienil.core.linalg.subspace import Subspace, intersect, span
from lienil.core.serializer.base import Serializer, get_serializer_by_name, get_serializer_by_type
from lienil.core.serializer.json import JsonSerializer, json_serializer, json_sorted_serializer
from lienil.core.serializer.text import (
    algebra_serializer,
    format_algebra,
    format_realization,
    parse_algebra,
    parse_realization,
    realization_serializer,
)
from lienil.core.weyl.element import WeylElement, adjoint, commutator, generators, multiply
from lienil.core.weyl.hamiltonian import hamiltonian, squeezing_hamiltonian
from lienil.core.weyl.realization import (
    Realization,
    RealizationReport,
    named_realization,
    verify_realization,
)
from lienil.extras import load_extras

__all__ = (
    "abelian",
    "adjoint",
    "algebra_serializer",
    "build_rep",
    "CatalogEntry",
    "ce_differential",
    "center",
    "central_extension",
    "centralizer",
    "change_of_basis",
    "check_realization",
    "cocycle_space",
    "CohomologyReport",
    "cohomology_report",
    "commutator",
    "corank_row",
    "corank_table",
    "corank",
    "CorankRow",
    "current_settings",
    "derived_subalgebra",
    "direct_sum",
    "find_extension_to",
    "Fingerprint",
    "fingerprint_many",
    "fingerprint",
    "FockReport",
    "FockRep",
    "format_algebra",
    "format_realization",
    "from_brackets",
    "generators",
    "get_serializer_by_name",
    "get_serializer_by_type",
    "get_settings",
    "get",
    "growth_law",
    "GrowthLawCheck",
    "hamiltonian",
    "heisenberg_plus_abelian",
    "heisenberg",
    "I",
    "identify",
    "IndexOutOfRange",
    "InputError",
    "intersect",
    "is_cocycle",
    "is_ideal",
    "is_nilpotent",
    "is_semidirect",
    "is_subalgebra",
    "JacobiViolation",
    "json_serializer",
    "json_sorted_serializer",
    "JsonSerializer",
    "kernel_basis",
    "LieAlgebra",
    "LienilError",
    "list_entries",
    "load_extras",
    "lower_central_series",
    "matches_fingerprint",
    "Matrix",
    "ModeMismatch",
    "multiply",
    "named_realization",
    "nilpotency_class",
    "NotACocycle",
    "NotAnIdeal",
    "NotAntisymmetric",
    "PairSpec",
    "parse_algebra",
    "parse_realization",
    "ParseError",
    "quotient",
    "rank",
    "Realization",
    "realization_serializer",
    "RealizationReport",
    "rref",
    "safe_commutator_check",
    "Scalar",
    "schur_multiplier_dim",
    "SemidirectReport",
    "Serializer",
    "set_settings",
    "Settings",
    "SingularMatrix",
    "span",
    "squeezing_hamiltonian",
    "Subspace",
    "to_matrix",
    "TwoCocycle",
    "UnknownName",
    "upper_central_series",
    "verify_realization",
    "WeylElement",
    "zero_algebra",
)
