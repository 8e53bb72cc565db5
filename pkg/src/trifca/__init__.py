"""Dyadic and triadic formal concept analysis on integer bitsets.

Sets of objects, attributes and conditions are ``frozenset`` of roster
indices in the public API; the algorithms work on Python ints as bitmasks.
"""

from .context import (
    ConceptLattice,
    FormalConcept,
    FormalContext,
    all_concepts_bruteforce,
    closure_intent,
    concept_lattice,
    concept_leq,
    cover_relation,
    derive_attributes,
    derive_objects,
)
from .errors import CapacityError, FCAError, InconsistentInputError, InvalidInputError, ParseError
from .formats import export_dot, parse_cxt, parse_triadic, serialize_cxt, serialize_triadic
from .implications import (
    ConditionalBaseTable,
    ImplicationAggregate,
    build_implication_aggregate,
    conditional_base_composed,
    conditional_base_generic,
    conditional_implication_holds,
    implication_holds,
    union_premise_candidates,
    transfer_base_delete,
    transfer_base_remove,
    triadic_base_composed,
    triadic_base_generic,
    triadic_implication_holds,
)
from .meta import (
    MetaModel,
    PaddingReport,
    compose,
    conditional_context,
    conditional_from_composition,
    delete_attributes,
    pad_for_extent_iso,
    pad_for_modus_iso,
    remove_incidences,
    transfer_concepts_delete,
    transfer_intents_remove,
    verify_extent_iso,
    verify_modus_iso,
)
from .stem_base import (
    Implication,
    StemBase,
    is_pseudo_intent,
    l_closure,
    lectic_less,
    lectic_less_i,
    modified_next_closure,
    next_closure,
    plus,
)
from .triadic import (
    QuotientOrder,
    TriadicConcept,
    TriadicContext,
    all_tri_concepts,
    geometric_structure,
    i_derive,
    i_derive_pairs,
    quotient_order,
)

__version__ = "0.1.0"
