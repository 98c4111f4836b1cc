# Enumerating all coprime pairs of degree n with nonzero constant terms.
#
# Run with:  python demos/04_enumerate_and_count.py

from itertools import islice

from gf2coprime import build_pair, count_pairs, count_pairs_by_k, enumerate_pairs
from gf2coprime.compositions import Composition
from gf2coprime.oracle import verify

# One pair from one independent choice of degrees, free bits and constants.
print(build_pair(Composition((2, 1)), "1", "01"))

# The whole stream for n = 3.
for f, g in enumerate_pairs(3):
    print(f, "\t", g)

# Counts per number of quotients, and the closed form 2(4^(n-1) - 1)/3.
n = 8
print([count_pairs_by_k(n, k) for k in range(2, n + 1)], count_pairs(n))

# The stream is lazy, so large n is usable as a prefix generator.
print(list(islice(enumerate_pairs(30), 2)))

# Cross-check against brute force.
report = verify(8)
print(report.ok, report.oracle_count, report.enumerator_count, report.formula_count)
