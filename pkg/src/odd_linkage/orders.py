"""Orders on index words and on same-shape tableaux.

The reverse Semitic order reads words from the right, and there a
*larger* symbol makes the word *smaller*.  On the six orderings of 123:

    123 < 213 < 132 < 312 < 231 < 321
"""

from collections import Counter

from .errors import DomainError


def rev_semitic_key(word):
    return tuple(-x for x in reversed(word))


def _same_content(a, b):
    if Counter(a) != Counter(b):
        raise DomainError(f"words {a} and {b} have different content")


def rev_semitic_less(L1, L2):
    _same_content(L1, L2)
    return rev_semitic_key(L1) < rev_semitic_key(L2)


def induced_eta_less(eta, X, Y, base=rev_semitic_less):
    """eta L < eta M  iff  L < M in the base order."""
    return base(eta.unpermute(X), eta.unpermute(Y))


def clausen_key(tableau):
    """Row contents top to bottom; a row holding larger symbols sorts lower."""
    rows = {}
    for (r, _c), s in tableau.filling:
        rows.setdefault(r, []).append(-s)
    return tuple(tuple(sorted(rows[r])) for r in sorted(rows))


def clausen_row_less(T1, T2):
    if T1.shape != T2.shape:
        raise DomainError("tableaux of different shapes are incomparable")
    return clausen_key(T1) < clausen_key(T2)
