"""Small helpers for subsets of {0..n-1} stored as int bitmasks."""

from __future__ import annotations

from typing import Iterable, Iterator


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(points: Iterable[int]) -> int:
    mask = 0
    for p in points:
        mask |= 1 << p
    return mask


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def iter_submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` in increasing numeric order, starting with 0."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def fmt(mask: int, labels: list[str] | None = None) -> list:
    if labels is None:
        return list(iter_bits(mask))
    return [labels[p] for p in iter_bits(mask)]
