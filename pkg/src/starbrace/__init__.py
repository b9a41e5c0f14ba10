"""Finite regular star-semigroups, semibraces, weak star-braces and
set-theoretic solutions of the Yang-Baxter equation."""

from .catalog import CatalogEntry, NotFoundError, get_entry, list_entries
from .document import AlgebraDocument, DocumentError, emit_algebra_document, parse_algebra_document
from .registry import VerificationReport, registered_ids, verify_proposition
from .search import SearchQuery, enumerate_models, find_model, star_semigroups
from .semibrace import (
    AdditionKind,
    SemibraceReport,
    TwoTwoOneAlgebra,
    check_left_axiom,
    check_right_axiom,
    classify_semibrace,
    induce_addition,
    morphism_diagnostics,
)
from .star_semigroup import (
    ClassReport,
    InvalidStructure,
    StarSemigroup,
    classify,
    equational_crosscheck,
    green_relation,
    star_semigroup,
    validate_star,
)
from .table_core import CapacityError, ConsistencyError, InputError, MalformedTableError, StarbraceError, Witness
from .weak_brace import (
    ClassPreconditionError,
    WeakStarBrace,
    bridge_check,
    construct_from_semigroup,
    inverse_equivalents,
    structure_report,
    validate_wsb,
    wsb_identity_suite,
)
from .ybe import YbeReport, check_solution, derive_maps

__version__ = "0.1.0"
