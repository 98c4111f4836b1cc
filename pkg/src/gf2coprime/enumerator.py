"""Enumeration and counting of coprime pairs with nonzero constant term.

Every pair in A_n (ordered pairs of degree-n polynomials with constant
term 1 and gcd 1) comes from exactly one triple

* a composition ``(d_1, ..., d_k)`` of n with k >= 2 parts (quotient degrees),
* ``n - k`` free bits (the intermediate coefficients of the quotients),
* an accepted constant word ``s_1 ... s_k``,

where index j always means the j-th quotient applied by dilcuE.  Quotient
j is ``x^d_j + (d_j - 1 intermediate bits) + s_j``; the bits are taken in
quotient order, highest exponent first.  After the k assembled quotients a
final quotient 1 is applied, and the whole sequence is replayed from
``(1, 0)``.

Emission order: k ascending, then compositions in box order, then
intermediate bits as an ascending binary counter, then constant words in
lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import compositions as _comp
from . import constlang
from .gf2poly import ONE, Gf2Poly, _mul


def _check(comp, inter_bits, word):
    n, k = comp.n, comp.k
    if len(inter_bits) != n - k:
        raise ValueError(f"expected {n - k} intermediate bits, got {len(inter_bits)}")
    if len(word) != k:
        raise ValueError(f"expected a constant word of length {k}, got {len(word)}")
    if any(b not in "01" for b in inter_bits):
        raise ValueError(f"intermediate bits must be '0'/'1', got {inter_bits!r}")
    if not constlang.accepts(word):
        raise ValueError(f"constant word {word!r} is not accepted by the automaton")


def _quotient_bits(parts, inter_bits, word):
    # inter_bits and word as strings; returns raw int quotients in dilcuE order
    out = []
    pos = 0
    for d, s in zip(parts, word):
        block = inter_bits[pos:pos + d - 1]
        pos += d - 1
        q = (1 << d) | int(s)
        if block:
            q |= int(block, 2) << 1
        out.append(q)
    return out


def assemble(comp, inter_bits, word):
    """The k+1 quotients in dilcuE application order, ending with 1."""
    if not isinstance(inter_bits, str):
        inter_bits = "".join(str(int(b)) for b in inter_bits)
    _check(comp, inter_bits, word)
    return [Gf2Poly(q) for q in _quotient_bits(comp.parts, inter_bits, word)] + [ONE]


def _replay(quotients):
    a, b = 1, 0
    for q in quotients:
        a, b = _mul(q, a) ^ b, a
    # final quotient 1
    return a ^ b, a


def build_pair(comp, inter_bits, word):
    """Run dilcuE from ``(1, 0)`` over :func:`assemble`'s quotients."""
    quotients = assemble(comp, inter_bits, word)
    f, g = _replay([q.bits for q in quotients[:-1]])
    return Gf2Poly(f), Gf2Poly(g)


@dataclass
class PairCursor:
    """Resumable iterator over A_n.

    ``position`` is the (k, composition, intermediate counter, word) of the
    last pair emitted.  A cursor built with ``start=position`` begins at
    exactly that pair.  ``k_only`` restricts the walk to one quotient count.
    """

    n: int
    start: tuple | None = None
    k_only: int | None = None
    position: tuple | None = field(default=None, init=False)
    exhausted: bool = field(default=False, init=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.start is not None:
            k, comp, counter, word = self.start
            if (
                k not in self._k_range()
                or comp.n != self.n
                or comp.k != k
                or not 0 <= counter < 2 ** (self.n - k)
                or len(word) != k
                or not constlang.accepts(word)
            ):
                raise ValueError(f"invalid cursor position {self.start!r} for n={self.n}")
        self._gen = self._walk()

    def _k_range(self):
        if self.k_only is not None:
            return range(self.k_only, self.k_only + 1) if 2 <= self.k_only <= self.n else range(0)
        return range(2, self.n + 1)

    def _walk(self):
        n = self.n
        skip = self.start
        for k in self._k_range():
            if skip is not None and k < skip[0]:
                continue
            word_list = [(w, [int(c) for c in w]) for w in constlang.words(k)]
            width = n - k
            for comp in _comp.compositions(n, k):
                if skip is not None and comp != skip[1]:
                    continue
                for counter in range(skip[2] if skip is not None else 0, 2**width):
                    inter = format(counter, f"0{width}b") if width else ""
                    bodies = _quotient_bits(comp.parts, inter, "0" * k)
                    for word, consts in word_list:
                        if skip is not None:
                            if word != skip[3]:
                                continue
                            skip = None
                        self.position = (k, comp, counter, word)
                        f, g = _replay([q | s for q, s in zip(bodies, consts)])
                        yield Gf2Poly(f), Gf2Poly(g)
        self.exhausted = True

    def __iter__(self):
        return self

    def __next__(self):
        return next(self._gen)


def enumerate_pairs(n, k=None, unordered=False):
    """Stream A_n (or its k-quotient slice).

    With ``unordered=True`` only pairs with ``f < g`` in the integer
    encoding are kept, one representative per ``{f, g}``.
    """
    cursor = PairCursor(n, k_only=k)
    if not unordered:
        return cursor
    return ((f, g) for f, g in cursor if f < g)


def count_pairs_by_k(n, k):
    """2^(n-k) * C(n-1, k-1) * l_k; zero outside 2 <= k <= n."""
    if n < 1 or k < 2 or k > n:
        return 0
    return 2 ** (n - k) * _comp.count(n, k) * constlang.count_words_closed(k)


def count_pairs(n):
    """|A_n| = 2 (4^(n-1) - 1) / 3."""
    if n < 1:
        raise ValueError("count_pairs is defined for n >= 1")
    return 2 * (4 ** (n - 1) - 1) // 3
