"""Compositions of n, encoded as n-1 boxes between n ones.

Box bit 0 is a comma (start a new part), bit 1 is a plus (merge with the
previous one), so ``"010"`` for n = 4 reads ``1, 1+1, 1`` = 1+2+1.
Compositions with k parts have exactly k-1 commas.  They are enumerated
in lexicographic order of the box string, which is numeric order of the
string read as a binary number; the successor is the next integer with
the same popcount.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(d < 1 for d in self.parts):
            raise ValueError(f"composition parts must be positive, got {self.parts!r}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def __str__(self):
        return "+".join(map(str, self.parts))


def from_boxes(boxes, n=None):
    """Decode a box string (or bit sequence) of length n-1."""
    bits = [int(b) for b in boxes]
    if n is not None and len(bits) != n - 1:
        raise ValueError(f"expected {n - 1} boxes for n={n}, got {len(bits)}")
    parts = [1]
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"box values must be 0 or 1, got {b!r}")
        if b:
            parts[-1] += 1
        else:
            parts.append(1)
    return Composition(tuple(parts))


def to_boxes(comp):
    return "".join("1" * (d - 1) + "0" for d in comp.parts)[:-1]


def count(n, k):
    """C(n-1, k-1); zero when k is outside 1..n."""
    if n < 1 or k < 1 or k > n:
        return 0
    return comb(n - 1, k - 1)


def first_composition(n, k):
    if count(n, k) == 0:
        return None
    return from_boxes("0" * (k - 1) + "1" * (n - k))


def next_composition(comp):
    n = comp.n
    if n == 1:
        return None
    v = int(to_boxes(comp), 2)
    if v == 0:
        return None
    low = v & -v
    r = v + low
    nxt = r | (((v ^ r) >> 2) // low)
    if nxt >> (n - 1):
        return None
    return from_boxes(format(nxt, f"0{n - 1}b"))


def compositions(n, k):
    """Yield every composition of ``n`` into exactly ``k`` parts."""
    c = first_composition(n, k)
    while c is not None:
        yield c
        c = next_composition(c)
