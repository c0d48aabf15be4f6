"""Python-int bitsets over the integer codes of projective Pauli classes."""
from functools import cache
from typing import Iterator

from contextual.pauli.observable import symplectic_form


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def above(index: int) -> int:
    """Mask clearing bits 0..index, for intersecting with a finite bitset."""
    return ~((1 << (index + 1)) - 1)


@cache
def commutation_masks(n: int) -> tuple[int, ...]:
    """For every code c, the bitset of non-identity classes commuting with c."""
    size = 1 << (2 * n)
    low = (1 << n) - 1
    masks = []
    for c in range(size):
        mask = 0
        for d in range(1, size):
            if not symplectic_form(c >> n, c & low, d >> n, d & low):
                mask |= 1 << d
        masks.append(mask)
    return tuple(masks)
