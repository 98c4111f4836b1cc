"""Brute-force ground truth.

Nothing here touches the automaton, composition or enumerator code: the
only shared piece is GF(2) arithmetic.  The pair scan is quadratic in
|S_n| = 2^(n-1), so the default bound for :func:`verify` is n <= 10.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import asdict, dataclass, field
from itertools import product

from .gf2poly import Gf2Poly, _gcd, to_text

DEFAULT_MAX_N = 10

# The admissible constant words as a regular expression, matched directly.
CONST_WORD_RE = re.compile(r"(?:0[01]|10*1[01])*")


def enumerate_sn(n):
    """All degree-n polynomials with constant term 1, ascending."""
    if n < 1:
        raise ValueError("n must be at least 1")
    top = 1 << n
    return [Gf2Poly(top | (mid << 1) | 1) for mid in range(1 << (n - 1))]


def enumerate_monic(n):
    """All 2^n polynomials of degree exactly n."""
    top = 1 << n
    return [Gf2Poly(top | low) for low in range(top)]


def brute_force_an(n):
    """Ordered coprime pairs over S_n, by direct gcd filtering."""
    sn = [p.bits for p in enumerate_sn(n)]
    return {
        (Gf2Poly(f), Gf2Poly(g))
        for f in sn
        for g in sn
        if _gcd(f, g) == 1
    }


def count_coprime_monic(n):
    """Coprime ordered pairs among all degree-n polynomials (no constant-term restriction)."""
    polys = [p.bits for p in enumerate_monic(n)]
    return sum(1 for f in polys for g in polys if _gcd(f, g) == 1)


def brute_force_words(k):
    """Length-k words matching the constant-word regex, ascending."""
    return [
        w
        for w in ("".join(t) for t in product("01", repeat=k))
        if CONST_WORD_RE.fullmatch(w)
    ]


@dataclass
class VerifyReport:
    n: int
    oracle_count: int
    enumerator_count: int
    formula_count: int
    missing: list = field(default_factory=list)
    extra: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            not self.missing
            and not self.extra
            and self.oracle_count == self.enumerator_count == self.formula_count
        )

    def to_dict(self, fmt="bin"):
        d = asdict(self)
        d["missing"] = [[to_text(f, fmt), to_text(g, fmt)] for f, g in self.missing]
        d["extra"] = [[to_text(f, fmt), to_text(g, fmt)] for f, g in self.extra]
        d["ok"] = self.ok
        return d


def verify(n, pairs=None, max_n=DEFAULT_MAX_N):
    """Compare the enumerator stream with the oracle and the closed form.

    ``pairs`` overrides the stream under test (used to self-test the
    harness).  Duplicates in the stream are reported in ``extra``.
    """
    from .enumerator import count_pairs, enumerate_pairs

    if n > max_n:
        raise ValueError(f"n={n} exceeds the brute-force bound {max_n}; pass a larger max_n")
    expected = brute_force_an(n)
    stream = list(enumerate_pairs(n) if pairs is None else pairs)
    seen = Counter(stream)
    missing = sorted(expected - seen.keys(), key=_key)
    extra = [p for p in seen if p not in expected]
    extra += [p for p, c in seen.items() if c > 1 for _ in range(c - 1)]
    return VerifyReport(
        n=n,
        oracle_count=len(expected),
        enumerator_count=len(stream),
        formula_count=count_pairs(n),
        missing=missing,
        extra=sorted(extra, key=_key),
    )


def _key(pair):
    return pair[0].bits, pair[1].bits
