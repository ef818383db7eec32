"""Subsets of a finite carrier encoded as integer bitmasks.

Element i of the carrier corresponds to bit ``1 << i``.  All hyperproduct,
ideal and closed-set computations in this package move these masks around,
so the helpers here are deliberately small and allocation-free.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def elements_of(mask: int) -> list[int]:
    return list(bits(mask))


def singleton(element: int) -> int:
    return 1 << element


def is_subset(inner: int, outer: int) -> bool:
    return inner & ~outer == 0


def full_mask(size: int) -> int:
    return (1 << size) - 1


def subset_key(mask: int) -> tuple[int, int]:
    """Canonical sort key: cardinality first, then mask value."""
    return (mask.bit_count(), mask)
