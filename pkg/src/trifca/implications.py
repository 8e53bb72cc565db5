"""Dyadic, triadic and conditional implications and their bases.

The composed drivers (:func:`triadic_base_composed`,
:func:`conditional_base_composed`) derive each conditional context from
``k1`` by removing incidences, carry intents and part of the base across
that removal, finish with the modified Next Closure, and reuse a base
whenever two condition sets select the same attributes. The generic drivers
run plain Next Closure on every conditional context of an arbitrary triadic
context and serve as their cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import _bits
from .context import FormalContext
from .errors import InconsistentInputError
from .meta import (
    MetaModel,
    attributes_under,
    bottom_is_full,
    conditional_context,
    remove_incidences,
    transfer_intents_remove,
)
from .stem_base import Implication, StemBase, lectic_walk, modified_next_closure, next_closure
from .triadic import TriadicContext


def implication_holds(ctx: FormalContext, premise: Iterable[int], conclusion: Iterable[int]) -> bool:
    p, c = ctx.attribute_mask(premise), ctx.attribute_mask(conclusion)
    return c & ~ctx.close(p) == 0


def triadic_implication_holds(
    K: TriadicContext, premise: Iterable[int], conclusion: Iterable[int], conditions: Iterable[int]
) -> bool:
    """Whoever has ``premise`` under all ``conditions`` has ``conclusion`` under all of them."""
    cs = frozenset(conditions)
    premise, conclusion = frozenset(premise), frozenset(conclusion)
    for g in range(len(K.objects)):
        if all(K.has(g, m, b) for m in premise for b in cs):
            if not all(K.has(g, m, b) for m in conclusion for b in cs):
                return False
    return True


def conditional_implication_holds(
    K: TriadicContext, premise: Iterable[int], conclusion: Iterable[int], conditions: Iterable[int]
) -> bool:
    premise, conclusion = frozenset(premise), frozenset(conclusion)
    return all(triadic_implication_holds(K, premise, conclusion, [c]) for c in conditions)


def transfer_base_delete(ctx: FormalContext, m_remove: Iterable[int], base: Iterable[Implication]) -> list[Implication]:
    """Members of the stem base after deleting ``m_remove``, read off the old base.

    Indices in the result refer to the reduced attribute roster.
    """
    drop = ctx.attribute_mask(m_remove)
    kept = [m for m in range(ctx.n_attributes) if not drop >> m & 1]
    renumber = lambda mask: frozenset(new for new, m in enumerate(kept) if mask >> m & 1)
    return [Implication(renumber(p), renumber(c)) for p, c in _transfer_masks(ctx, drop, base)]


def _transfer_masks(
    ctx: FormalContext, drop: int, base: Iterable[Implication], keep_empty: bool = False
) -> Iterator[tuple[int, int]]:
    for imp in base:
        p, c = ctx.attribute_mask(imp.premise), ctx.attribute_mask(imp.conclusion)
        if not c & drop:
            yield p, c
        elif keep_empty and not p & drop and ctx.extent_of(p) == 0:
            # emptied columns still close an empty extent to all of M
            yield p, c
        elif not p & drop and p != c & ~drop:
            yield p, c & ~drop


def transfer_base_remove(
    ctx: FormalContext, m_remove: Iterable[int], base: Iterable[Implication], strict: bool = True
) -> list[Implication]:
    """Members of the stem base after removing the incidences of ``m_remove``.

    Besides the carried-over implications, each removed attribute ``m``
    contributes ``{m} -> M``. With ``strict`` (the default) two corrections
    apply: a premise no object satisfies keeps its full conclusion, since the
    emptied columns still contain the empty extent, and ``{m} -> M`` is only
    emitted when the empty set is closed in the reduced context and ``M`` has
    more than one element. ``strict=False`` follows the unrefined rules, whose
    output can include non-members.
    """
    drop = ctx.attribute_mask(m_remove)
    top = _bits.full(ctx.n_attributes)
    carried = _transfer_masks(ctx, drop, base, keep_empty=strict)
    out = [Implication(_bits.to_set(p), _bits.to_set(c)) for p, c in carried]
    singletons_ok = True
    if strict:
        reduced = remove_incidences(ctx, _bits.bits(drop))
        singletons_ok = ctx.n_attributes > 1 and reduced.close(0) == 0
    if singletons_ok:
        out.extend(Implication(frozenset([m]), _bits.to_set(top)) for m in _bits.bits(drop))
    return out


def union_premise_candidates(
    ctx: FormalContext, m: int, base: Iterable[Implication], reduced_intents: Iterable[Iterable[int]]
) -> list[Implication]:
    """Implications of ``ctx`` with column ``m`` deleted, built from premises containing ``m``.

    For ``A -> B`` with ``m`` in ``A`` and each ``Ai -> Bi`` with ``m`` not
    in ``Ai``, ``m`` in ``Bi`` and ``Bi`` inside ``B``, emit
    ``(A | Ai) - m -> B - m`` unless the premise is already closed. These all
    hold in the reduced context but need not belong to its stem base.
    ``reduced_intents`` and the result use the reduced roster numbering.
    """
    bit = ctx.attribute_mask([m])
    kept = [a for a in range(ctx.n_attributes) if a != m]
    renumber = lambda mask: _bits.to_mask(new for new, a in enumerate(kept) if mask >> a & 1)
    closed = {_bits.to_mask(s) for s in reduced_intents}
    rules = [(ctx.attribute_mask(i.premise), ctx.attribute_mask(i.conclusion)) for i in base]
    out: list[Implication] = []
    seen = set()
    for a, b in rules:
        if not a & bit:
            continue
        for ai, bi in rules:
            if ai & bit or not bi & bit or bi & ~b:
                continue
            premise = renumber((a | ai) & ~bit)
            if premise in closed:
                continue
            imp = (premise, renumber(b & ~bit))
            if imp not in seen:
                seen.add(imp)
                out.append(Implication(_bits.to_set(imp[0]), _bits.to_set(imp[1])))
    return out


@dataclass(frozen=True)
class BaseEntry:
    """One row of a conditional base table.

    ``attributes`` is the set of attributes carrying every condition (only
    known for composed models). ``reused_from`` points at the entry whose
    base was shared instead of recomputed.
    """

    conditions: frozenset[int]
    attributes: frozenset[int] | None
    base: StemBase
    reused_from: int | None = None
    context: FormalContext | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class ConditionalBaseTable:
    entries: tuple[BaseEntry, ...]
    condition_names: tuple[str, ...]
    attribute_names: tuple[str, ...]
    seeded: bool = False

    def conditional(self) -> tuple[BaseEntry, ...]:
        """Entries for nonempty condition sets (drops the seed row)."""
        return self.entries[1:] if self.seeded else self.entries

    def by_conditions(self) -> dict[frozenset[int], BaseEntry]:
        return {e.conditions: e for e in self.conditional()}

    def reuse_pairs(self) -> list[tuple[int, int]]:
        return [(k, e.reused_from) for k, e in enumerate(self.entries) if e.reused_from is not None]


def _subsets_lectic(n: int) -> Iterator[int]:
    walk = lectic_walk(n, lambda x: x)
    next(walk)
    yield from walk


def _composed_table(mm: MetaModel, condition_sets: Iterable[int], validate: bool) -> ConditionalBaseTable:
    k1 = mm.k1
    n = k1.n_attributes
    top = _bits.full(n)
    intents0, base0 = next_closure(k1)
    full_bottom = bottom_is_full(k1)
    entries = [BaseEntry(frozenset(), _bits.to_set(top), base0, None, k1)]
    for cmask in condition_sets:
        conditions = _bits.to_set(cmask)
        keep = attributes_under(mm, conditions)
        drop = top & ~_bits.to_mask(keep)
        kc = remove_incidences(k1, _bits.bits(drop))
        reuse = next((j for j, e in enumerate(entries) if e.attributes == keep), None)
        if reuse is not None:
            if entries[reuse].context != kc:
                raise InconsistentInputError(
                    f"condition sets {sorted(conditions)} and {sorted(entries[reuse].conditions)}"
                    " share attributes but not their conditional context"
                )
            entries.append(BaseEntry(conditions, keep, entries[reuse].base, reuse, kc))
            continue
        intents_c = transfer_intents_remove(k1, _bits.bits(drop), intents0, full_bottom)
        partial = transfer_base_remove(k1, _bits.bits(drop), base0)
        base = modified_next_closure(kc, intents_c, partial, validate=validate)
        entries.append(BaseEntry(conditions, keep, base, None, kc))
    return ConditionalBaseTable(tuple(entries), mm.conditions, mm.attributes, seeded=True)


def triadic_base_composed(mm: MetaModel, validate: bool = False) -> ConditionalBaseTable:
    """Conditional stem bases for every nonempty condition set, in lectic order.

    Entry 0 is ``k1`` itself (the empty condition set).
    """
    return _composed_table(mm, _subsets_lectic(len(mm.conditions)), validate)


def conditional_base_composed(mm: MetaModel, validate: bool = False) -> ConditionalBaseTable:
    """Conditional stem bases for single conditions, highest roster index first."""
    singles = (1 << c for c in reversed(range(len(mm.conditions))))
    return _composed_table(mm, singles, validate)


def _generic_table(K: TriadicContext, condition_sets: Iterable[int]) -> ConditionalBaseTable:
    entries = []
    for cmask in condition_sets:
        conditions = _bits.to_set(cmask)
        kc = conditional_context(K, conditions)
        _, base = next_closure(kc)
        entries.append(BaseEntry(conditions, None, base, None, kc))
    return ConditionalBaseTable(tuple(entries), K.conditions, K.attributes)


def triadic_base_generic(K: TriadicContext) -> ConditionalBaseTable:
    return _generic_table(K, _subsets_lectic(len(K.conditions)))


def conditional_base_generic(K: TriadicContext) -> ConditionalBaseTable:
    return _generic_table(K, (1 << c for c in reversed(range(len(K.conditions)))))


@dataclass(frozen=True)
class ImplicationAggregate:
    """Dyadic context of implications (objects) against conditions (attributes).

    An implication is incident with a condition when it holds in that
    condition's conditional context.
    """

    implications: tuple[Implication, ...]
    context: FormalContext

    def conditions_for(self, imp: Implication) -> frozenset[int]:
        return _bits.to_set(self.context.rows[self.implications.index(imp)])


def build_implication_aggregate(K: TriadicContext, table: ConditionalBaseTable | None = None) -> ImplicationAggregate:
    """Collect the nontrivial stem-base members of all single-condition bases.

    ``table`` defaults to :func:`conditional_base_generic` of ``K``.
    """
    if table is None:
        table = conditional_base_generic(K)
    n = len(K.attributes)
    imps = {imp for e in table.conditional() for imp in e.base if not imp.is_trivial()}
    key = lambda i: (_bits.lectic_key(_bits.to_mask(i.premise), n), _bits.lectic_key(_bits.to_mask(i.conclusion), n))
    ordered = tuple(sorted(imps, key=key))
    single = [conditional_context(K, [c]) for c in range(len(K.conditions))]
    rows = tuple(
        _bits.to_mask(c for c, kc in enumerate(single) if implication_holds(kc, imp.premise, imp.conclusion))
        for imp in ordered
    )
    labels = tuple(_label(imp, K.attributes) for imp in ordered)
    return ImplicationAggregate(ordered, FormalContext(labels, K.conditions, rows, "implications"))


def _label(imp: Implication, names: tuple[str, ...]) -> str:
    p, c = imp.names(names)
    return "{" + ",".join(p) + "} -> {" + ",".join(c) + "}"
