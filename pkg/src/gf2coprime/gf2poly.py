"""Polynomials over GF(2).

A polynomial is stored as a nonnegative integer whose bit i is the
coefficient of x^i, so x^3 + x + 1 is 0b1011.  Addition is XOR and
multiplication is the carry-less product.  The raw-integer helpers
(``_mul``, ``_divmod``, ...) are used directly by the hot loops of the
enumerator and the oracle; :class:`Gf2Poly` is the public value type.
"""

from __future__ import annotations

import re


class PolyParseError(ValueError):
    """Raised when a polynomial text is malformed."""

    def __init__(self, text, pos, reason):
        super().__init__(f"{reason} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


FORMATS = ("bin", "hex", "human")


def _mul(a, b):
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod(a, b):
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    n = b.bit_length()
    q = 0
    while True:
        shift = a.bit_length() - n
        if shift < 0:
            return q, a
        q ^= 1 << shift
        a ^= b << shift


def _mod(a, b):
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    n = b.bit_length()
    while True:
        shift = a.bit_length() - n
        if shift < 0:
            return a
        a ^= b << shift


def _gcd(a, b):
    while b:
        a, b = b, _mod(a, b)
    return a


class Gf2Poly:
    """Immutable binary polynomial.

    Supports ``+``, ``-`` (same as ``+``), ``*``, ``//``, ``%`` and
    ``divmod``.  Ordering follows the integer encoding, which for two
    polynomials of equal degree is the lexicographic order of their
    ``bin`` text.
    """

    __slots__ = ("_bits",)

    def __init__(self, bits=0):
        if isinstance(bits, Gf2Poly):
            bits = bits._bits
        if not isinstance(bits, int) or bits < 0:
            raise ValueError(f"coefficient bitset must be a nonnegative int, got {bits!r}")
        object.__setattr__(self, "_bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("Gf2Poly is immutable")

    @classmethod
    def from_exponents(cls, exponents):
        bits = 0
        for e in exponents:
            bits ^= 1 << e
        return cls(bits)

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def degree(self) -> int | None:
        """Index of the leading coefficient, or ``None`` for the zero polynomial."""
        if self._bits == 0:
            return None
        return self._bits.bit_length() - 1

    def exponents(self):
        """Exponents with coefficient 1, highest first."""
        return [i for i in range(self._bits.bit_length() - 1, -1, -1) if self._bits >> i & 1]

    def is_zero(self) -> bool:
        return self._bits == 0

    def __bool__(self):
        return self._bits != 0

    def __int__(self):
        return self._bits

    def __index__(self):
        return self._bits

    def __hash__(self):
        return hash(self._bits)

    def __eq__(self, other):
        if isinstance(other, Gf2Poly):
            return self._bits == other._bits
        return NotImplemented

    def __lt__(self, other):
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return self._bits < other._bits

    def __le__(self, other):
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return self._bits <= other._bits

    def __add__(self, other):
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(self._bits ^ other._bits)

    __sub__ = __add__

    def __mul__(self, other):
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(_mul(self._bits, other._bits))

    def __divmod__(self, other):
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        q, r = _divmod(self._bits, other._bits)
        return Gf2Poly(q), Gf2Poly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(_mod(self._bits, other._bits))

    def __repr__(self):
        return f"Gf2Poly({to_text(self, 'human')})"

    def __str__(self):
        return to_text(self, "human")


ZERO = Gf2Poly(0)
ONE = Gf2Poly(1)
X = Gf2Poly(2)


_TERM = re.compile(r"x(?:\^(\d+))?|1")


def _parse_human(text):
    if text == "0":
        return 0
    bits = 0
    pos = 0
    while True:
        m = _TERM.match(text, pos)
        if m is None:
            raise PolyParseError(text, pos, "expected a term 'x^i', 'x' or '1'")
        if m.group(0) == "1":
            e = 0
        elif m.group(1) is None:
            e = 1
        else:
            e = int(m.group(1))
        if bits >> e & 1:
            raise PolyParseError(text, pos, f"repeated term x^{e}")
        bits |= 1 << e
        pos = m.end()
        if pos == len(text):
            return bits
        if text[pos] != "+":
            raise PolyParseError(text, pos, "expected '+'")
        pos += 1


def parse(text, fmt="bin"):
    """Parse ``text`` in one of the ``bin``, ``hex`` or ``human`` formats.

    >>> parse("1011") == parse("x^3+x+1", "human") == parse("b", "hex")
    True
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if not text:
        raise PolyParseError(text, 0, "empty polynomial text")
    if fmt == "human":
        return Gf2Poly(_parse_human(text))
    digits = "01" if fmt == "bin" else "0123456789abcdefABCDEF"
    for i, ch in enumerate(text):
        if ch not in digits:
            raise PolyParseError(text, i, f"invalid {fmt} digit {ch!r}")
    return Gf2Poly(int(text, 2 if fmt == "bin" else 16))


def to_text(p, fmt="bin"):
    if fmt == "bin":
        return format(p.bits, "b")
    if fmt == "hex":
        return format(p.bits, "x")
    if fmt == "human":
        if p.is_zero():
            return "0"
        terms = []
        for e in p.exponents():
            terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return "+".join(terms)
    raise ValueError(f"unknown format {fmt!r}")


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def poly_divmod(dividend, divisor):
    """Euclidean division; raises ZeroDivisionError for a zero divisor."""
    return divmod(dividend, divisor)


def gcd(a, b):
    """Greatest common divisor, with gcd(a, 0) = a."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return Gf2Poly(_gcd(a.bits, b.bits))


def constant_term(p):
    return p.bits & 1


def in_sn(p, n):
    """True iff ``p`` has degree ``n`` and constant term 1."""
    return p.degree == n and p.bits & 1 == 1
