"""Formal contexts, derivation operators and concepts.

Objects and attributes are identified by their position in the context's
rosters; names are for presentation only. Attribute index 0 is the smallest
element for lectic comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import _bits
from .errors import CapacityError, InvalidInputError

DEFAULT_MAX_BRUTE = 20


@dataclass(frozen=True)
class FormalContext:
    """Immutable object/attribute cross table.

    ``rows[g]`` is the attribute bitmask of object ``g``. Use one of the
    ``from_*`` constructors rather than building rows by hand.
    """

    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    rows: tuple[int, ...]
    name: str = field(default="", compare=False)
    cols: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(set(self.objects)) != len(self.objects):
            raise InvalidInputError("object names must be unique")
        if len(set(self.attributes)) != len(self.attributes):
            raise InvalidInputError("attribute names must be unique")
        if len(self.rows) != len(self.objects):
            raise InvalidInputError("one row per object required")
        limit = _bits.full(len(self.attributes))
        if any(r & ~limit for r in self.rows):
            raise InvalidInputError("row references an attribute outside the roster")
        cols = [0] * len(self.attributes)
        for g, row in enumerate(self.rows):
            for m in _bits.bits(row):
                cols[m] |= 1 << g
        object.__setattr__(self, "cols", tuple(cols))

    @classmethod
    def from_pairs(
        cls,
        objects: Sequence[str],
        attributes: Sequence[str],
        incidence: Iterable[tuple[int, int]],
        name: str = "",
    ) -> "FormalContext":
        rows = [0] * len(objects)
        for g, m in incidence:
            if not (0 <= g < len(objects) and 0 <= m < len(attributes)):
                raise InvalidInputError(f"incidence ({g}, {m}) out of range")
            rows[g] |= 1 << m
        return cls(tuple(objects), tuple(attributes), tuple(rows), name)

    @classmethod
    def from_cross_table(
        cls, objects: Sequence[str], attributes: Sequence[str], table: Sequence[str], name: str = ""
    ) -> "FormalContext":
        """Build from rows like ``"xx.x"`` (any of ``xX`` marks a cross)."""
        if len(table) != len(objects):
            raise InvalidInputError("one table row per object required")
        rows = []
        for line in table:
            if len(line) != len(attributes):
                raise InvalidInputError(f"row {line!r} does not match attribute count")
            rows.append(_bits.to_mask(i for i, ch in enumerate(line) if ch in "xX"))
        return cls(tuple(objects), tuple(attributes), tuple(rows), name)

    @classmethod
    def from_named_pairs(
        cls,
        objects: Sequence[str],
        attributes: Sequence[str],
        incidence: Iterable[tuple[str, str]],
        name: str = "",
    ) -> "FormalContext":
        gi = {n: i for i, n in enumerate(objects)}
        mi = {n: i for i, n in enumerate(attributes)}
        try:
            pairs = [(gi[g], mi[m]) for g, m in incidence]
        except KeyError as exc:
            raise InvalidInputError(f"unknown name {exc.args[0]!r}") from None
        return cls.from_pairs(objects, attributes, pairs, name)

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    @property
    def incidence(self) -> frozenset[tuple[int, int]]:
        return frozenset((g, m) for g, row in enumerate(self.rows) for m in _bits.bits(row))

    def has(self, g: int, m: int) -> bool:
        return bool(self.rows[g] >> m & 1)

    def object_index(self, name: str) -> int:
        try:
            return self.objects.index(name)
        except ValueError:
            raise InvalidInputError(f"unknown object {name!r}") from None

    def attribute_index(self, name: str) -> int:
        try:
            return self.attributes.index(name)
        except ValueError:
            raise InvalidInputError(f"unknown attribute {name!r}") from None

    def attrs(self, *names: str) -> frozenset[int]:
        """Attribute indices for ``names``; convenience for callers and tests."""
        return frozenset(self.attribute_index(n) for n in names)

    def objs(self, *names: str) -> frozenset[int]:
        return frozenset(self.object_index(n) for n in names)

    def attribute_names(self, idx: Iterable[int]) -> list[str]:
        return [self.attributes[i] for i in sorted(idx)]

    def object_names(self, idx: Iterable[int]) -> list[str]:
        return [self.objects[i] for i in sorted(idx)]

    def dual(self) -> "FormalContext":
        return FormalContext(self.attributes, self.objects, self.cols, self.name)

    # mask-level operators used by the algorithm modules

    def intent_of(self, objmask: int) -> int:
        result = _bits.full(self.n_attributes)
        for g in _bits.bits(objmask):
            result &= self.rows[g]
        return result

    def extent_of(self, attrmask: int) -> int:
        result = _bits.full(self.n_objects)
        for m in _bits.bits(attrmask):
            result &= self.cols[m]
        return result

    def close(self, attrmask: int) -> int:
        return self.intent_of(self.extent_of(attrmask))

    def close_objects(self, objmask: int) -> int:
        return self.extent_of(self.intent_of(objmask))

    def attribute_mask(self, items: Iterable[int]) -> int:
        return _checked_mask(items, self.n_attributes, "attribute")

    def object_mask(self, items: Iterable[int]) -> int:
        return _checked_mask(items, self.n_objects, "object")


def _checked_mask(items: Iterable[int], size: int, what: str) -> int:
    mask = 0
    for i in items:
        if not isinstance(i, int) or not 0 <= i < size:
            raise InvalidInputError(f"{what} index {i!r} out of range 0..{size - 1}")
        mask |= 1 << i
    return mask


@dataclass(frozen=True)
class FormalConcept:
    extent: frozenset[int]
    intent: frozenset[int]
    context: FormalContext | None = field(default=None, compare=False, repr=False)

    def describe(self) -> tuple[list[str], list[str]]:
        if self.context is None:
            return sorted(map(str, self.extent)), sorted(map(str, self.intent))
        return self.context.object_names(self.extent), self.context.attribute_names(self.intent)


def derive_objects(ctx: FormalContext, objects: Iterable[int]) -> frozenset[int]:
    """Attributes shared by every object in ``objects``."""
    return _bits.to_set(ctx.intent_of(ctx.object_mask(objects)))


def derive_attributes(ctx: FormalContext, attributes: Iterable[int]) -> frozenset[int]:
    """Objects having every attribute in ``attributes``."""
    return _bits.to_set(ctx.extent_of(ctx.attribute_mask(attributes)))


def closure_intent(ctx: FormalContext, attributes: Iterable[int]) -> frozenset[int]:
    return _bits.to_set(ctx.close(ctx.attribute_mask(attributes)))


def make_concept(ctx: FormalContext, extent_mask: int, intent_mask: int) -> FormalConcept:
    return FormalConcept(_bits.to_set(extent_mask), _bits.to_set(intent_mask), ctx)


def all_concepts_bruteforce(ctx: FormalContext, max_attributes: int = DEFAULT_MAX_BRUTE) -> set[FormalConcept]:
    """Close every attribute subset; a test oracle, exponential in |M|."""
    n = ctx.n_attributes
    if n > max_attributes:
        raise CapacityError(f"{n} attributes exceed brute-force guard {max_attributes}")
    intents = {ctx.close(mask) for mask in range(1 << n)}
    return {make_concept(ctx, ctx.extent_of(b), b) for b in intents}


def concept_leq(c1: FormalConcept, c2: FormalConcept) -> bool:
    if c1.context is not None and c2.context is not None and c1.context != c2.context:
        raise InvalidInputError("concepts belong to different contexts")
    return c1.extent <= c2.extent


def cover_relation(concepts: Iterable[FormalConcept]) -> set[tuple[FormalConcept, FormalConcept]]:
    """Pairs ``(lower, upper)`` of the transitive reduction of the concept order."""
    items = sorted(set(concepts), key=lambda c: (len(c.extent), sorted(c.extent)))
    return {(items[a], items[b]) for a, b in _cover_indices([c.extent for c in items])}


def _cover_indices(keys: Sequence[frozenset]) -> list[tuple[int, int]]:
    # keys must be distinct; ordering by inclusion
    n = len(keys)
    upper = [[j for j in range(n) if j != i and keys[i] < keys[j]] for i in range(n)]
    edges = []
    for i in range(n):
        ups = upper[i]
        for j in ups:
            if not any(keys[k] < keys[j] for k in ups if k != j):
                edges.append((i, j))
    return edges


@dataclass(frozen=True)
class ConceptLattice:
    """Concepts of one context with their cover edges.

    ``concepts`` are ordered from the top (largest extent) downwards, ties
    broken lectically on the intent, so node ids are deterministic.
    """

    context: FormalContext
    concepts: tuple[FormalConcept, ...]
    edges: tuple[tuple[int, int], ...]

    def attribute_concept(self, m: int) -> int:
        ext = derive_attributes(self.context, [m])
        return next(i for i, c in enumerate(self.concepts) if c.extent == ext)

    def object_concept(self, g: int) -> int:
        intent = derive_objects(self.context, [g])
        return next(i for i, c in enumerate(self.concepts) if c.intent == intent)


def concept_lattice(ctx: FormalContext, concepts: Iterable[FormalConcept] | None = None) -> ConceptLattice:
    if concepts is None:
        from .stem_base import concept_intents

        concepts = [make_concept(ctx, ctx.extent_of(b), b) for b in concept_intents(ctx)]
    n = ctx.n_attributes
    ordered = sorted(
        set(concepts), key=lambda c: (len(c.intent), _bits.lectic_key(_bits.to_mask(c.intent), n))
    )
    edges = sorted(_cover_indices([c.extent for c in ordered]))
    return ConceptLattice(ctx, tuple(ordered), tuple(edges))

