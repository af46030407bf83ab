"""Congruence lattices of finite lines."""

from .congruence import (
    Congruence,
    CongruenceParseError,
    canonicalize,
    enumerate_congruences,
    parse,
    restrict,
    validate,
    with_frequency,
)
from .errors import ContractViolation, DomainError, EnumerationCapExceeded, UndefinedOperation
from .frame import Frame, Partition, compose, equivalence_closure, is_congruence, quotient
from .lattice import (
    CatalogCase,
    RestProfile,
    catalog_case,
    common_extremes,
    compatible,
    criterion,
    divisor_embedding,
    join,
    join_is_nontrivial,
    leq,
    meet,
    n_from_step_frequency,
    permutes,
    rest_profile,
    simplified_relation,
    step_of_join,
)
from .trajectory import build_trajectory, crossing_counts, folding

__version__ = "0.1.0"
