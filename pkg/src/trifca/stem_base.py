"""Lectic enumeration, implication closure and the Duquenne-Guigues base.

:func:`next_closure` walks all sets closed under the implications found so
far in lectic order and sorts each one into an intent or a pseudo-intent.
:func:`modified_next_closure` performs the same walk but trusts a list of
known intents and a partial base instead of deriving ``A''`` for every set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from . import _bits
from .context import DEFAULT_MAX_BRUTE, FormalContext
from .errors import CapacityError, InconsistentInputError


@dataclass(frozen=True)
class Implication:
    premise: frozenset[int]
    conclusion: frozenset[int]

    @classmethod
    def of(cls, premise: Iterable[int], conclusion: Iterable[int]) -> "Implication":
        return cls(frozenset(premise), frozenset(conclusion))

    def is_trivial(self) -> bool:
        return self.conclusion <= self.premise

    def names(self, attributes: Sequence[str]) -> tuple[list[str], list[str]]:
        return [attributes[i] for i in sorted(self.premise)], [attributes[i] for i in sorted(self.conclusion)]

    def __str__(self) -> str:
        fmt = lambda s: "{" + ",".join(map(str, sorted(s))) + "}"
        return f"{fmt(self.premise)} -> {fmt(self.conclusion)}"


@dataclass(frozen=True)
class StemBase:
    """Implications ordered lectically by premise."""

    implications: tuple[Implication, ...]
    attribute_roster_size: int

    def __iter__(self) -> Iterator[Implication]:
        return iter(self.implications)

    def __len__(self) -> int:
        return len(self.implications)

    def __contains__(self, item: object) -> bool:
        return item in self.implications

    def premises(self) -> list[frozenset[int]]:
        return [imp.premise for imp in self.implications]


def lectic_less_i(a: Iterable[int], b: Iterable[int], i: int) -> bool:
    """``a <_i b``: ``i`` is the smallest index where the sets differ and it lies in ``b``."""
    am, bm = _bits.to_mask(a), _bits.to_mask(b)
    low = _bits.below(i)
    return bool(bm >> i & 1) and not am >> i & 1 and (am & low) == (bm & low)


def lectic_less(a: Iterable[int], b: Iterable[int]) -> bool:
    am, bm = _bits.to_mask(a), _bits.to_mask(b)
    diff = am ^ bm
    if not diff:
        return False
    smallest = diff & -diff
    return bool(bm & smallest)


def plus(a: Iterable[int], i: int) -> frozenset[int]:
    return _bits.to_set((_bits.to_mask(a) & _bits.below(i)) | 1 << i)


def _as_masks(implications: Iterable[Implication]) -> list[tuple[int, int]]:
    return [(_bits.to_mask(imp.premise), _bits.to_mask(imp.conclusion)) for imp in implications]


def _close_masks(x: int, rules: Sequence[tuple[int, int]]) -> int:
    changed = True
    while changed:
        changed = False
        for premise, conclusion in rules:
            if premise & x == premise and conclusion & ~x:
                x |= conclusion
                changed = True
    return x


def l_closure(x: Iterable[int], implications: Iterable[Implication]) -> frozenset[int]:
    """Smallest superset of ``x`` respecting every implication."""
    return _bits.to_set(_close_masks(_bits.to_mask(x), _as_masks(implications)))


def lectic_walk(n: int, close: Callable[[int], int]) -> Iterator[int]:
    """Yield the sets closed under ``close`` in lectic order, starting from ``0``.

    ``close`` is re-read after each yield, so a caller may grow the
    implication set it closes under between steps. The first yielded set is
    the empty set as-is; the caller classifies it like every other.
    """
    top = _bits.full(n)
    a = 0
    yield a
    while a != top:
        # i runs from max(M \ A) downwards over attributes not in A
        for i in reversed(range(n)):
            if a >> i & 1:
                continue
            low = _bits.below(i)
            candidate = close((a & low) | 1 << i)
            if candidate & low == a & low:
                a = candidate
                break
        else:  # pragma: no cover - unreachable for a closure operator
            raise AssertionError("lectic walk stalled")
        yield a


def concept_intents(ctx: FormalContext) -> list[int]:
    """All intents of ``ctx`` as masks, lectically ordered."""
    walk = lectic_walk(ctx.n_attributes, ctx.close)
    if ctx.close(0) != 0:
        next(walk)  # the bare empty set is not closed here
    return list(walk)


def next_closure(ctx: FormalContext) -> tuple[list[frozenset[int]], StemBase]:
    """Intents (lectic order) and the stem base of ``ctx``."""
    intents, rules = _next_closure_masks(ctx)
    base = StemBase(
        tuple(Implication(_bits.to_set(p), _bits.to_set(c)) for p, c in rules), ctx.n_attributes
    )
    return [_bits.to_set(a) for a in intents], base


def _next_closure_masks(ctx: FormalContext) -> tuple[list[int], list[tuple[int, int]]]:
    rules: list[tuple[int, int]] = []
    intents: list[int] = []
    for a in lectic_walk(ctx.n_attributes, lambda x: _close_masks(x, rules)):
        closed = ctx.close(a)
        if closed == a:
            intents.append(a)
        else:
            rules.append((a, closed))
    return intents, rules


def modified_next_closure(
    ctx: FormalContext,
    known_intents: Iterable[Iterable[int]],
    partial: Iterable[Implication],
    validate: bool = False,
) -> StemBase:
    """Stem base of ``ctx`` reusing its intents and part of its base.

    A set reached by the walk takes its conclusion from ``partial`` when it
    appears there as a premise; otherwise it is a pseudo-intent exactly when
    it is missing from ``known_intents``, and only then is ``A''`` derived.
    With ``validate`` every reused conclusion is checked against the context.
    """
    intents = {_bits.to_mask(s) for s in known_intents}
    pending = {p: c for p, c in _as_masks(partial)}
    rules: list[tuple[int, int]] = []
    for a in lectic_walk(ctx.n_attributes, lambda x: _close_masks(x, rules)):
        if a in pending:
            conclusion = pending.pop(a)
            if validate and conclusion != ctx.close(a):
                raise InconsistentInputError(
                    f"partial implication {sorted(_bits.bits(a))} -> {sorted(_bits.bits(conclusion))}"
                    " does not match the closure in the context"
                )
            rules.append((a, conclusion))
        elif a not in intents:
            rules.append((a, ctx.close(a)))
    if validate:
        if intents != set(concept_intents(ctx)):
            raise InconsistentInputError("known intents differ from the intents of the context")
    return StemBase(
        tuple(Implication(_bits.to_set(p), _bits.to_set(c)) for p, c in rules), ctx.n_attributes
    )


def pseudo_intents_bruteforce(ctx: FormalContext, max_attributes: int = DEFAULT_MAX_BRUTE) -> list[frozenset[int]]:
    """Evaluate the recursive pseudo-intent definition bottom-up over all subsets."""
    n = ctx.n_attributes
    if n > max_attributes:
        raise CapacityError(f"{n} attributes exceed brute-force guard {max_attributes}")
    return [_bits.to_set(p) for p in _pseudo_masks(ctx, range(1 << n))]


def _pseudo_masks(ctx: FormalContext, candidates: Iterable[int]) -> list[int]:
    found: list[tuple[int, int]] = []
    for p in sorted(candidates, key=int.bit_count):
        closed = ctx.close(p)
        if closed == p:
            continue
        if all(q_closed & ~p == 0 for q, q_closed in found if q & p == q and q != p):
            found.append((p, closed))
    return sorted((p for p, _ in found), key=lambda m: _bits.lectic_key(m, ctx.n_attributes))


def is_pseudo_intent(ctx: FormalContext, p: Iterable[int], max_attributes: int = DEFAULT_MAX_BRUTE) -> bool:
    pm = ctx.attribute_mask(p)
    if pm.bit_count() > max_attributes:
        raise CapacityError(f"premise of size {pm.bit_count()} exceeds brute-force guard {max_attributes}")
    subsets = _submasks(pm)
    return pm in _pseudo_masks(ctx, subsets)


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def stem_base_bruteforce(ctx: FormalContext, max_attributes: int = DEFAULT_MAX_BRUTE) -> StemBase:
    pseudo = pseudo_intents_bruteforce(ctx, max_attributes)
    return StemBase(
        tuple(Implication(p, _bits.to_set(ctx.close(_bits.to_mask(p)))) for p in pseudo),
        ctx.n_attributes,
    )
