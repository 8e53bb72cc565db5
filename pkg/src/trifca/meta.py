"""Meta-attribute models: two dyadic contexts sharing the attribute roster.

``k1`` relates objects to attributes and ``k2`` relates those attributes to
meta-attributes. Composing them gives a triadic context whose conditions are
the meta-attributes. This module also holds the padding that makes the
dyadic lattices recoverable from the triadic structure, conditional
contexts, and the attribute deletion/removal transfers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import _bits
from .context import FormalConcept, FormalContext, make_concept
from .errors import InconsistentInputError, InvalidInputError
from .stem_base import concept_intents
from .triadic import TriadicContext, all_tri_concepts

E_M = "__E_m__"
B_UNIV = "__b_univ__"
G_UNIV = "__g_univ__"
B_EMPTY = "__b_empty__"
M_UNIV = "__m_univ__"
RESERVED_NAMES = frozenset({E_M, B_UNIV, G_UNIV, B_EMPTY, M_UNIV})


@dataclass(frozen=True)
class MetaModel:
    k1: FormalContext
    k2: FormalContext

    def __post_init__(self):
        if self.k1.attributes != self.k2.objects:
            raise InvalidInputError(
                "attribute roster of k1 must equal the object roster of k2, name for name"
            )

    @property
    def objects(self) -> tuple[str, ...]:
        return self.k1.objects

    @property
    def attributes(self) -> tuple[str, ...]:
        return self.k1.attributes

    @property
    def conditions(self) -> tuple[str, ...]:
        return self.k2.attributes

    def dual(self) -> "MetaModel":
        return MetaModel(self.k2.dual(), self.k1.dual())


@dataclass(frozen=True)
class PaddingReport:
    added_attribute: str | None = None
    added_meta_attribute: str | None = None
    added_object: str | None = None
    reasons: tuple[str, ...] = field(default=())

    @property
    def empty(self) -> bool:
        return self.added_attribute is None and self.added_meta_attribute is None and self.added_object is None


def compose(mm: MetaModel) -> TriadicContext:
    """Triadic context with ``(g, m, b)`` present iff ``g`` has ``m`` and ``m`` has ``b``."""
    triples = frozenset(
        (g, m, b)
        for g, row in enumerate(mm.k1.rows)
        for m in _bits.bits(row)
        for b in _bits.bits(mm.k2.rows[m])
    )
    return TriadicContext(mm.objects, mm.attributes, mm.conditions, triples)


def has_universal_meta_attribute(mm: MetaModel) -> bool:
    top = _bits.full(mm.k2.n_objects)
    return any(col == top for col in mm.k2.cols)


def bottom_is_full(ctx: FormalContext) -> bool:
    """True iff ``(empty, M)`` is a concept, i.e. no object has every attribute."""
    return ctx.extent_of(_bits.full(ctx.n_attributes)) == 0


def extent_iso_preconditions(mm: MetaModel) -> list[str]:
    """Unmet preconditions for recovering the k1 lattice from the extent order."""
    problems = []
    if not has_universal_meta_attribute(mm):
        problems.append("no meta-attribute is held by every attribute")
    if not bottom_is_full(mm.k1):
        problems.append("some object has every attribute, so (empty, M) is not a concept of k1")
    return problems


def modus_iso_preconditions(mm: MetaModel) -> list[str]:
    problems = []
    if not has_universal_meta_attribute(mm.dual()):
        problems.append("no object has every attribute")
    if not bottom_is_full(mm.k2.dual()):
        problems.append("some meta-attribute is held by every attribute, so (M, empty) is not a concept of k2")
    return problems


def _pad_extent(mm: MetaModel, univ_name: str, empty_name: str) -> tuple[MetaModel, list[str], list[str]]:
    k1, k2 = mm.k1, mm.k2
    added_univ, added_empty = [], []
    if not has_universal_meta_attribute(mm):
        _reject_collision(univ_name, k2.attributes)
        k2 = FormalContext(
            k2.objects,
            k2.attributes + (univ_name,),
            tuple(r | 1 << k2.n_attributes for r in k2.rows),
            k2.name,
        )
        added_univ.append(univ_name)
    if not bottom_is_full(k1):
        _reject_collision(empty_name, k1.attributes)
        # held by no object, carries every meta-attribute
        k1 = FormalContext(k1.objects, k1.attributes + (empty_name,), k1.rows, k1.name)
        k2 = FormalContext(
            k2.objects + (empty_name,), k2.attributes, k2.rows + (_bits.full(k2.n_attributes),), k2.name
        )
        added_empty.append(empty_name)
    return MetaModel(k1, k2), added_univ, added_empty


def _reject_collision(name: str, roster: tuple[str, ...]) -> None:
    if name in roster:
        raise InvalidInputError(f"reserved name {name!r} already present in the input")


def pad_for_extent_iso(mm: MetaModel) -> tuple[MetaModel, PaddingReport]:
    """Add a universal meta-attribute and/or an attribute nobody has, as needed.

    Afterwards the extents of ``k1`` coincide with the extents of the
    composed triadic context. Idempotent.
    """
    reasons = tuple(extent_iso_preconditions(mm))
    padded, univ, empty = _pad_extent(mm, B_UNIV, E_M)
    report = PaddingReport(
        added_attribute=empty[0] if empty else None,
        added_meta_attribute=univ[0] if univ else None,
        reasons=reasons,
    )
    return padded, report


def pad_for_modus_iso(mm: MetaModel) -> tuple[MetaModel, PaddingReport]:
    """Dual padding, applied to the transposed model.

    Adds an object having every attribute and, when some meta-attribute is
    shared by all attributes, an extra attribute held by every object and
    carrying no meta-attribute.
    """
    reasons = tuple(modus_iso_preconditions(mm))
    padded_dual, univ, empty = _pad_extent(mm.dual(), G_UNIV, M_UNIV)
    report = PaddingReport(
        added_attribute=empty[0] if empty else None,
        added_object=univ[0] if univ else None,
        reasons=reasons,
    )
    return padded_dual.dual(), report


def strip_padding(mm: MetaModel, report: PaddingReport) -> MetaModel:
    """Remove the elements recorded in ``report``, recovering the unpadded model."""
    k1, k2 = mm.k1, mm.k2
    if report.added_attribute is not None:
        m = k1.attribute_index(report.added_attribute)
        k1 = delete_attributes(k1, [m])
        k2 = delete_attributes(k2.dual(), [m]).dual()
    if report.added_meta_attribute is not None:
        k2 = delete_attributes(k2, [k2.attribute_index(report.added_meta_attribute)])
    if report.added_object is not None:
        k1 = delete_attributes(k1.dual(), [k1.object_index(report.added_object)]).dual()
    return MetaModel(k1, k2)


def conditional_context(ctx: TriadicContext, conditions: Iterable[int], name: str = "") -> FormalContext:
    """Objects x attributes, incident when related under every given condition.

    An empty condition set yields the full cross table.
    """
    cmask = 0
    for b in conditions:
        if not isinstance(b, int) or not 0 <= b < len(ctx.conditions):
            raise InvalidInputError(f"condition index {b!r} out of range")
        cmask |= 1 << b
    rows = tuple(
        _bits.to_mask(m for m in range(len(ctx.attributes)) if ctx.cells[g][m] & cmask == cmask)
        for g in range(len(ctx.objects))
    )
    return FormalContext(ctx.objects, ctx.attributes, rows, name)


def attributes_under(mm: MetaModel, conditions: Iterable[int]) -> frozenset[int]:
    """Attributes carrying every meta-attribute in ``conditions``."""
    return _bits.to_set(mm.k2.extent_of(mm.k2.attribute_mask(conditions)))


def conditional_from_composition(mm: MetaModel, conditions: Iterable[int]) -> FormalContext:
    """``k1`` with the incidences of attributes lacking some given condition removed.

    With no conditions every attribute qualifies and ``k1`` is returned as is.
    """
    keep = attributes_under(mm, conditions)
    return remove_incidences(mm.k1, set(range(mm.k1.n_attributes)) - keep)


def delete_attributes(ctx: FormalContext, m_remove: Iterable[int]) -> FormalContext:
    drop = ctx.attribute_mask(m_remove)
    kept = [m for m in range(ctx.n_attributes) if not drop >> m & 1]
    rows = tuple(_bits.to_mask(new for new, m in enumerate(kept) if row >> m & 1) for row in ctx.rows)
    return FormalContext(ctx.objects, tuple(ctx.attributes[m] for m in kept), rows, ctx.name)


def remove_incidences(ctx: FormalContext, m_remove: Iterable[int]) -> FormalContext:
    drop = ctx.attribute_mask(m_remove)
    return FormalContext(ctx.objects, ctx.attributes, tuple(r & ~drop for r in ctx.rows), ctx.name)


def _reindex(mask: int, kept: list[int]) -> int:
    return _bits.to_mask(new for new, m in enumerate(kept) if mask >> m & 1)


def transfer_concepts_delete(
    ctx: FormalContext,
    m_remove: Iterable[int],
    concepts: Iterable[FormalConcept],
    verify: bool = False,
) -> set[FormalConcept]:
    """Concepts of ``delete_attributes(ctx, m_remove)`` from the concepts of ``ctx``.

    Each concept keeps its extent when its intent avoids the deleted
    attributes, switches to the extent of the shrunken intent when that is an
    intent of ``ctx``, and otherwise keeps its extent with the shrunken
    intent. Several concepts can shrink onto one intent when more than one
    attribute is deleted; only the largest of their extents is kept.
    """
    drop = ctx.attribute_mask(m_remove)
    reduced = delete_attributes(ctx, _bits.bits(drop))
    concepts = list(concepts)
    if not drop:
        return {make_concept(reduced, ctx.object_mask(c.extent), ctx.attribute_mask(c.intent)) for c in concepts}
    kept = [m for m in range(ctx.n_attributes) if not drop >> m & 1]
    intents = {ctx.attribute_mask(c.intent) for c in concepts}
    by_intent: dict[int, int] = {}
    for c in concepts:
        ext, intent = ctx.object_mask(c.extent), ctx.attribute_mask(c.intent)
        if not intent & drop:
            new_ext, new_int = ext, intent
        else:
            new_int = intent & ~drop
            new_ext = ctx.extent_of(new_int) if new_int in intents else ext
        by_intent[new_int] = by_intent.get(new_int, 0) | new_ext
    result = {make_concept(reduced, e, _reindex(i, kept)) for i, e in by_intent.items()}
    if verify:
        truth = {make_concept(reduced, reduced.extent_of(b), b) for b in concept_intents(reduced)}
        if truth != result:
            raise InconsistentInputError("supplied concepts are not the full concept set of the context")
    return result


def transfer_intents_remove(
    ctx: FormalContext,
    m_remove: Iterable[int],
    intents: Iterable[Iterable[int]],
    has_bottom_full: bool,
) -> set[frozenset[int]]:
    """Intents after removing every incidence of ``m_remove`` (attributes stay in the roster)."""
    drop = ctx.attribute_mask(m_remove)
    top = _bits.full(ctx.n_attributes)
    masks = {ctx.attribute_mask(s) for s in intents}
    if has_bottom_full:
        masks.discard(top)
    out = {m & ~drop for m in masks}
    out.add(top)
    return {_bits.to_set(m) for m in out}


@dataclass(frozen=True)
class IsoVerdict:
    """Outcome of an isomorphism check.

    ``precondition_ok`` is False when the check could not run; ``witness`` is
    the lectically first set present on one side only.
    """

    holds: bool
    precondition_ok: bool
    witness: frozenset[int] | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds

    @property
    def status(self) -> str:
        if not self.precondition_ok:
            return "precondition-failure"
        return "iso" if self.holds else "iso-failure"


def _compare(left: set[int], right: set[int], n: int, what: str) -> IsoVerdict:
    diff = sorted(left ^ right, key=lambda m: _bits.lectic_key(m, n))
    if not diff:
        return IsoVerdict(True, True)
    w = diff[0]
    side = "dyadic" if w in left else "triadic"
    return IsoVerdict(False, True, _bits.to_set(w), f"{what} only on the {side} side")


def verify_extent_iso(mm: MetaModel, K: TriadicContext | None = None) -> IsoVerdict:
    """Check that the extents of ``k1`` are exactly the extents of the composed context."""
    problems = extent_iso_preconditions(mm)
    if problems:
        return IsoVerdict(False, False, None, "; ".join(problems))
    K = compose(mm) if K is None else K
    dyadic = {mm.k1.extent_of(b) for b in concept_intents(mm.k1)}
    triadic = {_bits.to_mask(c.extent) for c in all_tri_concepts(K)}
    return _compare(dyadic, triadic, mm.k1.n_objects, "extent")


def verify_modus_iso(mm: MetaModel, K: TriadicContext | None = None) -> IsoVerdict:
    """Check that the intents of ``k2`` are exactly the modi of the composed context."""
    problems = modus_iso_preconditions(mm)
    if problems:
        return IsoVerdict(False, False, None, "; ".join(problems))
    K = compose(mm) if K is None else K
    dyadic = set(concept_intents(mm.k2))
    triadic = {_bits.to_mask(c.modus) for c in all_tri_concepts(K)}
    return _compare(dyadic, triadic, mm.k2.n_attributes, "modus")
