"""Vertex sets packed into Python ints.

Bit ``v`` of a mask is set iff vertex ``v`` belongs to the set. Union is ``|``,
difference is ``a & ~b`` and cardinality is :func:`popcount`.
"""

from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    """Pack vertex ids into a mask."""
    mask = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"vertex id must be non-negative, got {v}")
        mask |= 1 << v
    return mask


def full_mask(size: int) -> int:
    """Mask containing vertices ``0 .. size - 1``."""
    return (1 << size) - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def members(mask: int) -> Iterator[int]:
    """Yield the vertex ids in ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
