# The constant terms of admissible quotient sequences form a regular language.
#
# Run with:  python demos/02_constant_term_language.py

import itertools

from gf2coprime import constlang

# The automaton follows the constant terms of two adjacent remainders.  In
# the dilcuE direction it starts in (1, 0) and must return there.
dfa = constlang.inverse_dfa()
for (state, bit), nxt in sorted(dfa.transition.items()):
    print(f"{state} --{bit}--> {nxt}")
print("permutative:", dfa.is_permutative())

# Counting words of length k: path counting over the automaton agrees with
# the closed form (2^k + 2(-1)^k) / 3 and with brute force.
for k in range(11):
    brute = sum(constlang.accepts("".join(t)) for t in itertools.product("01", repeat=k))
    print(k, constlang.count_words_dfa(k), constlang.count_words_closed(k), brute)

# Lexicographic enumeration with O(k) successor steps, plus ranking.
print(list(constlang.words(4)))
print(constlang.unrank(12, 500), constlang.rank(constlang.unrank(12, 500)))
