"""Euclid's algorithm with recorded quotients, its reversal (dilcuE), and
the Benjamin-Bennett bijection between coprime and non-coprime pairs.

Quotients are always stored in Euclid order (first division first).
:func:`dilcue_apply` does the reversal itself, so callers never reverse.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2poly import ONE, ZERO, Gf2Poly, _divmod, _mul, to_text


@dataclass(frozen=True)
class EuclidTrace:
    start: tuple[Gf2Poly, Gf2Poly]
    quotients: tuple[Gf2Poly, ...]
    final_pair: tuple[Gf2Poly, Gf2Poly]

    @property
    def coprime(self) -> bool:
        return self.final_pair[0] == ONE

    def steps(self):
        """Yield ``(pair, quotient, next_pair)`` for every division."""
        a, b = self.start
        for q in self.quotients:
            nxt = (b, a + q * b)
            yield (a, b), q, nxt
            a, b = nxt

    def render(self, fmt="bin"):
        """Lines in arrow notation, ``(r_i, r_i+1) --q=<q>--> (r_i+1, r_i+2)``."""
        t = lambda p: to_text(p, fmt)  # noqa: E731
        return [
            f"({t(a)}, {t(b)}) --q={t(q)}--> ({t(c)}, {t(d)})"
            for (a, b), q, (c, d) in self.steps()
        ]


def euclid_trace(f, g):
    """Run Euclid's algorithm on ``(f, g)`` until the remainder vanishes.

    For coprime inputs the last division is ``(r_k, 1) -> (1, 0)`` with
    quotient ``r_k``, so every coprime trace ends at ``(1, 0)``.
    """
    if g.is_zero():
        raise ValueError("euclid_trace needs a nonzero second polynomial")
    if f.is_zero() or f.degree < g.degree:
        raise ValueError("euclid_trace needs degree(f) >= degree(g); swap the inputs")
    a, b = f.bits, g.bits
    quotients = []
    while b:
        q, r = _divmod(a, b)
        quotients.append(Gf2Poly(q))
        a, b = b, r
    return EuclidTrace((f, g), tuple(quotients), (Gf2Poly(a), ZERO))


def dilcue_apply(start, quotients):
    """Replay ``quotients`` backwards from ``start``.

    Each step maps ``(a, b)`` to ``(q*a + b, a)``; the last quotient of
    ``quotients`` is applied first.
    """
    a, b = start[0].bits, start[1].bits
    for q in reversed(quotients):
        a, b = _mul(q.bits, a) ^ b, a
    return Gf2Poly(a), Gf2Poly(b)


def bijection_flip(f, g):
    """Swap a pair between the coprime and non-coprime sides of the bijection.

    A non-coprime trace ending at ``(r, 0)`` is replayed from ``(r, 1)``.
    A coprime trace ends with ``(r_k, 1) -> (1, 0)``; that last division is
    dropped and the rest is replayed from ``(r_k, 0)``.  The map is an
    involution on equal-degree pairs.
    """
    if f.degree != g.degree or f.degree is None or f.degree < 1:
        raise ValueError("bijection_flip needs two polynomials of the same degree n >= 1")
    trace = euclid_trace(f, g)
    if trace.coprime:
        *rest, last = trace.quotients
        return dilcue_apply((last, ZERO), rest)
    return dilcue_apply((trace.final_pair[0], ONE), trace.quotients)
