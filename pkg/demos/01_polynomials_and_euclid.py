# Binary polynomials, Euclid's algorithm and its reversal.
#
# Run with:  python demos/01_polynomials_and_euclid.py

from gf2coprime import Gf2Poly, bijection_flip, dilcue_apply, euclid_trace, gcd, parse, to_text

# Polynomials are bitsets: bit i is the coefficient of x^i.  Three text
# formats are understood; "bin" writes the leading coefficient first.
f = parse("x^3+x^2+x+1", "human")
g = parse("1001")  # x^3 + 1
print(to_text(f, "bin"), to_text(f, "hex"), to_text(f, "human"))

# Arithmetic is over GF(2): addition is XOR, so f + f == 0.
print("f + g =", f + g)
print("(x+1)^3 =", parse("x+1", "human") * parse("x+1", "human") * parse("x+1", "human"))
print("divmod(f, g) =", divmod(f, g))
print("gcd(f, g) =", gcd(f, g))

# Euclid's algorithm records every quotient.  The last nonzero remainder is
# the gcd; for a coprime pair the trace always ends at (1, 0).
trace = euclid_trace(f, g)
for line in trace.render("human"):
    print(line)

# dilcuE replays the quotients backwards and rebuilds the pair.
print("replayed:", dilcue_apply(trace.final_pair, trace.quotients))

# Replacing the terminal 0 by 1 gives a coprime pair of the same degree,
# and doing it again comes back.  This is a bijection between coprime and
# non-coprime pairs.
f2, g2 = bijection_flip(f, g)
print("flipped:", f2, g2, "gcd =", gcd(f2, g2))
print("flipped back:", bijection_flip(f2, g2))

# Degrees are plain ints; the zero polynomial has no degree.
print(Gf2Poly(0).degree, Gf2Poly(1).degree, f.degree)
