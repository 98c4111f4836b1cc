"""The constant-term automaton and its regular language.

A state is the pair of constant terms ``(c_i, c_i+1)`` of two adjacent
remainders; ``(0, 0)`` cannot occur.  Reading the constant term of a
quotient moves the state forward through Euclid's algorithm.  Reversing
every arrow gives the automaton that follows dilcuE's algorithm instead;
its words (start and accept at ``(1, 0)``) are exactly the admissible
constant-term sequences of the quotients, listed in dilcuE order.

Words are strings over ``"0"`` and ``"1"``.  Lexicographic enumeration
uses a per-length table of completion counts, so each successor costs
O(k) table lookups.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType

ConstState = tuple  # (c_i, c_i+1) with values in {0, 1}, never (0, 0)

STATES = ((1, 1), (1, 0), (0, 1))

# Euclid direction: (state, quotient constant term) -> next state.
_FORWARD = {
    ((1, 1), 0): (1, 1),
    ((1, 1), 1): (1, 0),
    ((1, 0), 0): (0, 1),
    ((1, 0), 1): (0, 1),
    ((0, 1), 0): (1, 0),
    ((0, 1), 1): (1, 1),
}


def forward_delta(state, s):
    """Euclid-direction transition on constant terms."""
    try:
        return _FORWARD[tuple(state), int(s)]
    except KeyError:
        raise ValueError(f"no transition from {state!r} on {s!r}") from None


@dataclass(frozen=True)
class ConstDfa:
    states: tuple
    transition: dict
    start: tuple
    accepting: frozenset

    def step(self, state, bit):
        return self.transition[state, bit]

    def run(self, word, state=None):
        state = self.start if state is None else state
        for ch in word:
            state = self.transition[state, int(ch)]
        return state

    def is_permutative(self):
        return all(
            len({self.transition[q, b] for q in self.states}) == len(self.states)
            for b in (0, 1)
        )


def _reverse_arrows():
    inverse = {}
    for (src, bit), dst in _FORWARD.items():
        if (dst, bit) in inverse:
            raise AssertionError("forward automaton is not permutative")
        inverse[dst, bit] = src
    return MappingProxyType(inverse)


_INVERSE = ConstDfa(STATES, _reverse_arrows(), (1, 0), frozenset({(1, 0)}))


def inverse_dfa():
    """The dilcuE-direction automaton: start and only accepting state ``(1, 0)``."""
    return _INVERSE


def _check_word(word):
    if any(ch not in "01" for ch in word):
        raise ValueError(f"constant word must be a string over '0'/'1', got {word!r}")


def accepts(word):
    if not isinstance(word, str):
        word = "".join(str(int(b)) for b in word)
    _check_word(word)
    return _INVERSE.run(word) in _INVERSE.accepting


def count_words_closed(k):
    """Number of accepted words of length ``k``: (2^k + 2(-1)^k) / 3."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    num = 2**k + (2 if k % 2 == 0 else -2)
    assert num % 3 == 0
    return num // 3


@lru_cache(maxsize=None)
def _completion_table(k):
    # table[m][state] = number of length-m words leading from state to acceptance
    dfa = _INVERSE
    table = [{q: int(q in dfa.accepting) for q in dfa.states}]
    for _ in range(k):
        prev = table[-1]
        table.append({q: prev[dfa.step(q, 0)] + prev[dfa.step(q, 1)] for q in dfa.states})
    return tuple(table)


def count_words_dfa(k):
    """Accepted-word count by path counting over the automaton."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _completion_table(k)[k][_INVERSE.start]


def _least_completion(state, m, table):
    out = []
    for rem in range(m - 1, -1, -1):
        for bit in (0, 1):
            nxt = _INVERSE.step(state, bit)
            if table[rem][nxt]:
                out.append("01"[bit])
                state = nxt
                break
    return "".join(out)


def first_word(k):
    """Lexicographically least accepted word of length ``k``, or ``None``."""
    table = _completion_table(k)
    if not table[k][_INVERSE.start]:
        return None
    return _least_completion(_INVERSE.start, k, table)


def next_word(word):
    """Lexicographic successor of ``word`` among accepted words of its length."""
    _check_word(word)
    k = len(word)
    table = _completion_table(k)
    path = [_INVERSE.start]
    for ch in word:
        path.append(_INVERSE.step(path[-1], int(ch)))
    for i in range(k - 1, -1, -1):
        if word[i] == "0":
            nxt = _INVERSE.step(path[i], 1)
            rem = k - i - 1
            if table[rem][nxt]:
                return word[:i] + "1" + _least_completion(nxt, rem, table)
    return None


def words(k):
    """All accepted words of length ``k`` in increasing lexicographic order."""
    w = first_word(k)
    while w is not None:
        yield w
        w = next_word(w)


def unrank(k, r):
    """The ``r``-th (0-based) accepted word of length ``k``."""
    table = _completion_table(k)
    state = _INVERSE.start
    if not 0 <= r < table[k][state]:
        raise IndexError(f"rank {r} out of range for length {k} (count {table[k][state]})")
    out = []
    for rem in range(k - 1, -1, -1):
        low = _INVERSE.step(state, 0)
        if r < table[rem][low]:
            out.append("0")
            state = low
        else:
            r -= table[rem][low]
            out.append("1")
            state = _INVERSE.step(state, 1)
    return "".join(out)


def rank(word):
    """Inverse of :func:`unrank`."""
    if not accepts(word):
        raise ValueError(f"{word!r} is not in the language")
    k = len(word)
    table = _completion_table(k)
    state = _INVERSE.start
    r = 0
    for i, ch in enumerate(word):
        if ch == "1":
            r += table[k - i - 1][_INVERSE.step(state, 0)]
        state = _INVERSE.step(state, int(ch))
    return r
