"""Integer bitmask helpers.

Sets of roster indices are held internally as Python ints: bit ``i`` set
means index ``i`` is a member. Public functions convert to and from
``frozenset[int]`` at their boundaries.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def full(n: int) -> int:
    return (1 << n) - 1


def to_mask(items: Iterable[int]) -> int:
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


def bits(mask: int) -> Iterator[int]:
    """Yield member indices of ``mask`` in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def to_set(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


def below(i: int) -> int:
    """Mask of indices ``0..i-1``."""
    return (1 << i) - 1


def lectic_key(mask: int, n: int) -> tuple[int, ...]:
    """Sort key realising the lectic order on subsets of ``range(n)``.

    The smallest differing index decides, and the set containing it is the
    larger one.
    """
    return tuple((mask >> i) & 1 for i in range(n))
