"""Triadic contexts, (i)-derivations and tri-concepts.

Axes are numbered 1 (objects), 2 (attributes) and 3 (conditions). A
tri-concept is a maximal box ``extent x intent x modus`` inside the ternary
relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import _bits
from .context import FormalContext, _cover_indices
from .errors import CapacityError, InvalidInputError
from .stem_base import concept_intents

MAX_ENUM_AXIS = 18

_OTHER = {1: (2, 3), 2: (1, 3), 3: (1, 2)}


@dataclass(frozen=True)
class TriadicContext:
    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    conditions: tuple[str, ...]
    triples: frozenset[tuple[int, int, int]]
    name: str = field(default="", compare=False)
    # cells[g][m]: bitmask over conditions
    cells: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for roster, what in ((self.objects, "object"), (self.attributes, "attribute"), (self.conditions, "condition")):
            if len(set(roster)) != len(roster):
                raise InvalidInputError(f"{what} names must be unique")
        cells = [[0] * len(self.attributes) for _ in self.objects]
        for g, m, b in self.triples:
            if not (0 <= g < len(self.objects) and 0 <= m < len(self.attributes) and 0 <= b < len(self.conditions)):
                raise InvalidInputError(f"triple ({g}, {m}, {b}) out of range")
            cells[g][m] |= 1 << b
        object.__setattr__(self, "triples", frozenset(self.triples))
        object.__setattr__(self, "cells", tuple(map(tuple, cells)))

    @classmethod
    def from_named_triples(
        cls,
        objects: Sequence[str],
        attributes: Sequence[str],
        conditions: Sequence[str],
        triples: Iterable[tuple[str, str, str]],
        name: str = "",
    ) -> "TriadicContext":
        idx = [{n: i for i, n in enumerate(r)} for r in (objects, attributes, conditions)]
        try:
            ys = {(idx[0][g], idx[1][m], idx[2][b]) for g, m, b in triples}
        except KeyError as exc:
            raise InvalidInputError(f"unknown name {exc.args[0]!r}") from None
        return cls(tuple(objects), tuple(attributes), tuple(conditions), frozenset(ys), name)

    def roster(self, axis: int) -> tuple[str, ...]:
        _check_axis(axis)
        return (self.objects, self.attributes, self.conditions)[axis - 1]

    def index(self, axis: int, name: str) -> int:
        try:
            return self.roster(axis).index(name)
        except ValueError:
            raise InvalidInputError(f"unknown name {name!r} on axis {axis}") from None

    def indices(self, axis: int, *names: str) -> frozenset[int]:
        return frozenset(self.index(axis, n) for n in names)

    def has(self, g: int, m: int, b: int) -> bool:
        return bool(self.cells[g][m] >> b & 1)

    def size(self, axis: int) -> int:
        return len(self.roster(axis))

    def named_triples(self) -> list[tuple[str, str, str]]:
        return [(self.objects[g], self.attributes[m], self.conditions[b]) for g, m, b in sorted(self.triples)]

    def permuted(self, order: tuple[int, int, int]) -> "TriadicContext":
        """Context whose axes 1, 2, 3 are this context's axes ``order``."""
        rosters = [self.roster(a) for a in order]
        ys = frozenset(tuple(t[a - 1] for a in order) for t in self.triples)
        return TriadicContext(rosters[0], rosters[1], rosters[2], ys, self.name)


def _check_axis(axis: int) -> None:
    if axis not in (1, 2, 3):
        raise InvalidInputError(f"axis must be 1, 2 or 3, got {axis!r}")


@dataclass(frozen=True)
class TriadicConcept:
    extent: frozenset[int]
    intent: frozenset[int]
    modus: frozenset[int]

    def component(self, axis: int) -> frozenset[int]:
        _check_axis(axis)
        return (self.extent, self.intent, self.modus)[axis - 1]

    def names(self, ctx: TriadicContext) -> tuple[list[str], list[str], list[str]]:
        return tuple(  # type: ignore[return-value]
            [ctx.roster(a)[i] for i in sorted(self.component(a))] for a in (1, 2, 3)
        )


def _validate(ctx: TriadicContext, axis: int, items: Iterable[int]) -> frozenset[int]:
    size = ctx.size(axis)
    out = frozenset(items)
    for i in out:
        if not isinstance(i, int) or not 0 <= i < size:
            raise InvalidInputError(f"index {i!r} out of range on axis {axis}")
    return out


def i_derive(ctx: TriadicContext, axis: int, xs: Iterable[int]) -> frozenset[tuple[int, int]]:
    """Pairs on the two remaining axes (ascending axis order) related to every element of ``xs``."""
    _check_axis(axis)
    xs = _validate(ctx, axis, xs)
    j, k = _OTHER[axis]
    out = set()
    for aj in range(ctx.size(j)):
        for ak in range(ctx.size(k)):
            if all(ctx.has(*_place(axis, ai, j, aj, k, ak)) for ai in xs):
                out.add((aj, ak))
    return frozenset(out)


def i_derive_pairs(ctx: TriadicContext, axis: int, pairs: Iterable[tuple[int, int]]) -> frozenset[int]:
    """Elements of ``axis`` related to every pair in ``pairs``."""
    _check_axis(axis)
    j, k = _OTHER[axis]
    pairs = frozenset(pairs)
    for aj, ak in pairs:
        _validate(ctx, j, [aj])
        _validate(ctx, k, [ak])
    return frozenset(
        ai for ai in range(ctx.size(axis)) if all(ctx.has(*_place(axis, ai, j, aj, k, ak)) for aj, ak in pairs)
    )


def _place(i: int, ai: int, j: int, aj: int, k: int, ak: int) -> tuple[int, int, int]:
    slot = [0, 0, 0]
    slot[i - 1], slot[j - 1], slot[k - 1] = ai, aj, ak
    return slot[0], slot[1], slot[2]


def modus_of(ctx: TriadicContext, extent: Iterable[int], intent: Iterable[int]) -> frozenset[int]:
    mask = _bits.full(len(ctx.conditions))
    for g in extent:
        for m in intent:
            mask &= ctx.cells[g][m]
    return _bits.to_set(mask)


def is_box(ctx: TriadicContext, c: TriadicConcept) -> bool:
    return all(ctx.has(g, m, b) for g in c.extent for m in c.intent for b in c.modus)


def is_maximal_box(ctx: TriadicContext, c: TriadicConcept) -> bool:
    if not is_box(ctx, c):
        return False
    for axis in (1, 2, 3):
        for extra in set(range(ctx.size(axis))) - c.component(axis):
            parts = [set(c.extent), set(c.intent), set(c.modus)]
            parts[axis - 1].add(extra)
            if all(ctx.has(g, m, b) for g in parts[0] for m in parts[1] for b in parts[2]):
                return False
    return True


def all_tri_concepts(ctx: TriadicContext, max_axis: int = MAX_ENUM_AXIS) -> list[TriadicConcept]:
    """Every tri-concept, in canonical order (extent, then intent, then modus masks).

    The smallest axis is enumerated exhaustively. For each subset ``X`` of it
    the dyadic context of pairs related under all of ``X`` is formed; its
    concepts ``(A, B)`` give the box ``(A, B, (A x B)-derivation)`` which is
    a tri-concept exactly when that derivation returns ``X``.
    """
    sizes = {a: ctx.size(a) for a in (1, 2, 3)}
    pivot = min((1, 2, 3), key=lambda a: (sizes[a], -a))
    if sizes[pivot] > max_axis:
        raise CapacityError(f"smallest axis has {sizes[pivot]} elements, guard is {max_axis}")
    i, j = _OTHER[pivot]
    # cell(ai, aj) -> mask over the pivot axis
    cell = [[0] * sizes[j] for _ in range(sizes[i])]
    for t in ctx.triples:
        cell[t[i - 1]][t[j - 1]] |= 1 << t[pivot - 1]
    found = set()
    for x in range(1 << sizes[pivot]):
        rows = tuple(_bits.to_mask(aj for aj in range(sizes[j]) if cell[ai][aj] & x == x) for ai in range(sizes[i]))
        dyadic = FormalContext(
            tuple(map(str, range(sizes[i]))), tuple(map(str, range(sizes[j]))), rows
        )
        for b in concept_intents(dyadic):
            a = dyadic.extent_of(b)
            derived = _bits.full(sizes[pivot])
            for ai in _bits.bits(a):
                for aj in _bits.bits(b):
                    derived &= cell[ai][aj]
            if derived == x:
                parts = {i: a, j: b, pivot: x}
                found.add((parts[1], parts[2], parts[3]))
    return [TriadicConcept(*map(_bits.to_set, t)) for t in sorted(found)]


def tri_concepts_bruteforce(ctx: TriadicContext, max_cells: int = 16) -> list[TriadicConcept]:
    """Filter every (extent, intent) pair for maximal boxes; a test oracle."""
    ng, nm = len(ctx.objects), len(ctx.attributes)
    if ng + nm > max_cells:
        raise CapacityError(f"{ng}+{nm} objects and attributes exceed brute-force guard {max_cells}")
    found = []
    for x1 in range(1 << ng):
        for x2 in range(1 << nm):
            ext, itt = _bits.to_set(x1), _bits.to_set(x2)
            c = TriadicConcept(ext, itt, modus_of(ctx, ext, itt))
            if is_maximal_box(ctx, c):
                found.append((x1, x2, _bits.to_mask(c.modus)))
    return [TriadicConcept(*map(_bits.to_set, t)) for t in sorted(found)]


@dataclass(frozen=True)
class QuotientOrder:
    """Tri-concepts grouped by one component, ordered by inclusion of that component.

    ``classes[k]`` is ``(component, member ids)``; ``edges`` are cover pairs
    ``(lower, upper)`` of class indices.
    """

    axis: int
    classes: tuple[tuple[frozenset[int], tuple[int, ...]], ...]
    edges: tuple[tuple[int, int], ...]

    def components(self) -> list[frozenset[int]]:
        return [comp for comp, _ in self.classes]


def _classes(concepts: Sequence[TriadicConcept], axis: int, n: int) -> list[tuple[frozenset[int], tuple[int, ...]]]:
    groups: dict[frozenset[int], list[int]] = {}
    for cid, c in enumerate(concepts):
        groups.setdefault(c.component(axis), []).append(cid)
    keys = sorted(groups, key=lambda s: (len(s), _bits.lectic_key(_bits.to_mask(s), n)))
    return [(k, tuple(groups[k])) for k in keys]


def quotient_order(concepts: Sequence[TriadicConcept], axis: int) -> QuotientOrder:
    """Ids are positions in ``concepts`` (pass the canonical list from :func:`all_tri_concepts`)."""
    _check_axis(axis)
    n = max((max(c.component(axis), default=-1) for c in concepts), default=-1) + 1
    classes = _classes(concepts, axis, n)
    edges = sorted(_cover_indices([comp for comp, _ in classes]))
    return QuotientOrder(axis, tuple(classes), tuple(edges))


@dataclass(frozen=True)
class GeometricStructure:
    """Equivalence classes of the three relations "same extent/intent/modus"."""

    concept_count: int
    partitions: dict[int, tuple[tuple[frozenset[int], tuple[int, ...]], ...]]


def geometric_structure(concepts: Sequence[TriadicConcept]) -> GeometricStructure:
    parts = {}
    for axis in (1, 2, 3):
        n = max((max(c.component(axis), default=-1) for c in concepts), default=-1) + 1
        parts[axis] = tuple(_classes(concepts, axis, n))
    return GeometricStructure(len(concepts), parts)

