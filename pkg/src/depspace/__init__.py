"""Finite dependence spaces and exhaustive checks of their exchange properties."""

from depspace.axioms import (
    AxiomReport,
    TransitivityCounterexample,
    Verdict,
    check_transitivity,
    check_transitivity_direct,
    check_transitivity_idempotence,
    check_well_formed,
)
from depspace.core import (
    ContractError,
    DependenceError,
    DependenceSpace,
    DomainError,
    RawSpace,
    SizeLimitError,
    WellFormednessError,
    depends_on,
    is_basis,
    is_dependent,
    is_directly_dependent,
    is_independent,
    iterated_span,
    span,
)
from depspace.properties import (
    BasisReport,
    EisCounterexample,
    SteinitzCounterexample,
    eis_check_triple,
    eis_scan,
    enumerate_bases,
    extend_independent,
    extend_to_basis,
    steinitz_scan,
)

__all__ = [name for name in dir() if not name.startswith("_")]
