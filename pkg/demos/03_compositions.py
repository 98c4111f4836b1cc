# Quotient degrees are compositions of n.
#
# Run with:  python demos/03_compositions.py

from gf2coprime import compositions

# n - 1 boxes between n ones: 0 is a comma, 1 is a plus.
print(compositions.from_boxes("010"))  # 1+2+1

# Compositions into k parts, in box-string order; there are C(n-1, k-1).
for k in range(1, 6):
    listed = [str(c) for c in compositions.compositions(5, k)]
    print(k, compositions.count(5, k), listed)

# Altogether 2^(n-1); the single-part composition never occurs in a
# coprime pair's quotient sequence, so the enumerator starts at k = 2.
print(sum(compositions.count(5, k) for k in range(1, 6)))
