import itertools

import pytest
from hypothesis import given, strategies as st

from gf2coprime import gf2poly
from gf2coprime.gf2poly import ONE, ZERO, Gf2Poly, PolyParseError, gcd, parse, to_text


def ref_mul(a, b):
    # schoolbook convolution on coefficient lists, reduced mod 2
    ca = [a >> i & 1 for i in range(a.bit_length())]
    cb = [b >> i & 1 for i in range(b.bit_length())]
    out = [0] * max(len(ca) + len(cb) - 1, 0)
    for i, x in enumerate(ca):
        for j, y in enumerate(cb):
            out[i + j] += x * y
    return sum((c % 2) << i for i, c in enumerate(out))


polys = st.integers(min_value=0, max_value=(1 << 25) - 1).map(Gf2Poly)
nonzero = st.integers(min_value=1, max_value=(1 << 25) - 1).map(Gf2Poly)


class TestText:
    @pytest.mark.parametrize(
        "text, fmt, bits",
        [
            ("1011", "bin", 0b1011),
            ("x^3+x^2+x+1", "human", 0b1111),
            ("0", "bin", 0),
            ("0", "human", 0),
            ("b", "hex", 0b1011),
            ("1F", "hex", 0b11111),
            ("x", "human", 0b10),
            ("1", "human", 1),
        ],
    )
    def test_parse(self, text, fmt, bits):
        assert parse(text, fmt).bits == bits

    @pytest.mark.parametrize(
        "bits, fmt, text",
        [
            (0b1001, "bin", "1001"),
            (0, "bin", "0"),
            (0b111, "human", "x^2+x+1"),
            (0b1011, "hex", "b"),
            (0, "hex", "0"),
            (0b10, "human", "x"),
            (0, "human", "0"),
        ],
    )
    def test_to_text(self, bits, fmt, text):
        assert to_text(Gf2Poly(bits), fmt) == text

    @pytest.mark.parametrize(
        "text, fmt, pos",
        [
            ("10a1", "bin", 2),
            ("x^2 + 1", "human", 3),
            ("x^2++1", "human", 4),
            ("x^2+x^2", "human", 4),
            ("g", "hex", 0),
            ("", "bin", 0),
        ],
    )
    def test_parse_errors_name_position(self, text, fmt, pos):
        with pytest.raises(PolyParseError) as err:
            parse(text, fmt)
        assert err.value.pos == pos

    @given(polys, st.sampled_from(gf2poly.FORMATS))
    def test_round_trip(self, p, fmt):
        assert parse(to_text(p, fmt), fmt) == p


def test_add(h):
    assert h("x^2+1") + h("x^2+x") == h("x+1")


@given(polys)
def test_add_self_and_zero(p):
    assert p + p == ZERO
    assert p + ZERO == p


def test_mul_examples(h):
    assert h("x+1") * h("x^2+x+1") == h("x^3+1")
    assert h("x+1") * h("x+1") * h("x+1") == h("x^3+x^2+x+1")


@given(polys, polys)
def test_mul_matches_convolution(a, b):
    assert (a * b).bits == ref_mul(a.bits, b.bits)


@given(polys)
def test_mul_identity(p):
    assert p * ONE == p


def test_divmod_examples(h):
    assert divmod(h("x^3+x^2+x+1"), h("x^3+1")) == (ONE, h("x^2+x"))
    assert divmod(h("x^3+1"), h("x^2+x")) == (h("x+1"), h("x+1"))
    f = h("x^5+x^2+1")
    assert divmod(f, f) == (ONE, ZERO)


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(ONE, ZERO)


def _division_holds(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


def test_division_identity_exhaustive_small():
    for a, b in itertools.product(range(1 << 7), range(1, 1 << 6)):
        _division_holds(Gf2Poly(a), Gf2Poly(b))


@given(polys, nonzero)
def test_division_identity_random(a, b):
    _division_holds(a, b)


def test_gcd_examples(h):
    assert gcd(h("x^3+x^2+x+1"), h("x^3+1")) == h("x+1")
    assert gcd(h("x^3+x+1"), h("x^3+x^2")) == ONE
    f = h("x^4+x+1")
    assert gcd(f, f) == f
    assert gcd(f, ZERO) == f


def test_gcd_zero_zero():
    with pytest.raises(ValueError):
        gcd(ZERO, ZERO)


@given(nonzero, nonzero)
def test_gcd_commutes_and_divides(a, b):
    d = gcd(a, b)
    assert d == gcd(b, a)
    assert (a % d).is_zero() and (b % d).is_zero()


def test_degree_sentinel():
    assert ZERO.degree is None
    assert ONE.degree == 0
    assert Gf2Poly(0b1000).degree == 3


def test_constant_term(h):
    assert gf2poly.constant_term(h("x^3+1")) == 1
    assert gf2poly.constant_term(h("x^3+x^2")) == 0
    assert gf2poly.constant_term(ZERO) == 0


def test_in_sn(h):
    assert gf2poly.in_sn(h("x^3+x+1"), 3)
    assert not gf2poly.in_sn(h("x^3+x^2"), 3)
    assert not gf2poly.in_sn(h("x+1"), 3)


@pytest.mark.parametrize("n", range(1, 12))
def test_sn_size(n):
    assert sum(gf2poly.in_sn(Gf2Poly(b), n) for b in range(1 << (n + 1))) == 2 ** (n - 1)


def test_immutable():
    with pytest.raises(AttributeError):
        ONE._bits = 3
