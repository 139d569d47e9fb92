"""Finite group actions on Riemann surfaces and non-normal equisymmetric strata."""

from .errors import (
    BudgetError,
    CatalogError,
    EquisymError,
    GroupSpecError,
    InternalCheckError,
    InvalidVectorError,
    OrderBoundError,
    RiemannHurwitzError,
    SignatureError,
    SubgroupError,
)
from .groups import FiniteGroup, GroupElement, GroupFingerprint, construct
from .signatures import (
    ExtensionCandidate,
    Signature,
    is_maximal_signature,
    list_extensions,
    riemann_hurwitz_genus,
    teich_dimension,
)
from .ske import GeneratingVector, enumerate_vectors, is_valid, validate
from .equivalence import (
    TopologicalClass,
    are_equivalent,
    braid_move,
    handle_moves,
    topological_classes,
)
from .restriction import (
    CosetAction,
    InducedActionData,
    coset_action,
    induced_classes,
    induced_rotation_data,
    induced_signature,
)
from .strata import (
    StratumDescriptor,
    StratumReport,
    detect,
    family_check,
    scan_genus,
    verify_catalog,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CatalogError",
    "CosetAction",
    "EquisymError",
    "ExtensionCandidate",
    "FiniteGroup",
    "GeneratingVector",
    "GroupElement",
    "GroupFingerprint",
    "GroupSpecError",
    "InducedActionData",
    "InternalCheckError",
    "InvalidVectorError",
    "OrderBoundError",
    "RiemannHurwitzError",
    "Signature",
    "SignatureError",
    "StratumDescriptor",
    "StratumReport",
    "SubgroupError",
    "TopologicalClass",
    "are_equivalent",
    "braid_move",
    "construct",
    "coset_action",
    "detect",
    "enumerate_vectors",
    "family_check",
    "handle_moves",
    "induced_classes",
    "induced_rotation_data",
    "induced_signature",
    "is_maximal_signature",
    "is_valid",
    "list_extensions",
    "riemann_hurwitz_genus",
    "scan_genus",
    "teich_dimension",
    "topological_classes",
    "validate",
    "verify_catalog",
]
