"""Enumeration of coprime pairs of binary polynomials with nonzero constant term."""

from .compositions import Composition
from .constlang import accepts, count_words_closed, count_words_dfa
from .enumerator import PairCursor, build_pair, count_pairs, count_pairs_by_k, enumerate_pairs
from .euclid import EuclidTrace, bijection_flip, dilcue_apply, euclid_trace
from .gf2poly import ONE, X, ZERO, Gf2Poly, PolyParseError, gcd, parse, to_text

__all__ = [
    "Composition",
    "EuclidTrace",
    "Gf2Poly",
    "ONE",
    "PairCursor",
    "PolyParseError",
    "X",
    "ZERO",
    "accepts",
    "bijection_flip",
    "build_pair",
    "count_pairs",
    "count_pairs_by_k",
    "count_words_closed",
    "count_words_dfa",
    "dilcue_apply",
    "enumerate_pairs",
    "euclid_trace",
    "gcd",
    "parse",
    "to_text",
]
