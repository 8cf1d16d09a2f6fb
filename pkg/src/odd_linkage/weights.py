"""Weights (plus | minus) of GL(m|n) and the arithmetic around them.

A weight is a pair of integer tuples.  Nothing is sorted or normalized
behind the caller's back; dominance and friends are separate predicates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ParseError


@dataclass(frozen=True)
class Weight:
    plus: tuple
    minus: tuple

    def __post_init__(self):
        object.__setattr__(self, "plus", tuple(int(x) for x in self.plus))
        object.__setattr__(self, "minus", tuple(int(x) for x in self.minus))
        if not self.plus or not self.minus:
            raise DomainError("a weight needs m >= 1 and n >= 1")

    @property
    def m(self):
        return len(self.plus)

    @property
    def n(self):
        return len(self.minus)

    @classmethod
    def parse(cls, text):
        """Parse ``"5,4,3|3,2,1"``."""
        try:
            left, right = text.split("|")
            plus = [int(x) for x in left.split(",")]
            minus = [int(x) for x in right.split(",")]
        except ValueError as exc:
            raise ParseError(f"cannot parse weight {text!r}") from exc
        return cls(plus, minus)

    def __str__(self):
        return ",".join(map(str, self.plus)) + "|" + ",".join(map(str, self.minus))

    def to_json(self):
        return {"m": self.m, "n": self.n, "plus": list(self.plus), "minus": list(self.minus)}

    @classmethod
    def from_json(cls, data):
        w = cls(data["plus"], data["minus"])
        if (w.m, w.n) != (data["m"], data["n"]):
            raise DomainError("m/n do not match the lengths of plus/minus")
        return w

    def __add__(self, other):
        if isinstance(other, ContentVector):
            other = (other.xplus, other.xminus)
        else:
            other = (other.plus, other.minus)
        if len(other[0]) != self.m or len(other[1]) != self.n:
            raise DomainError("dimension mismatch")
        return Weight(
            [a + b for a, b in zip(self.plus, other[0])],
            [a + b for a, b in zip(self.minus, other[1])],
        )


@dataclass(frozen=True)
class ContentVector:
    """Signed multiplicities of a multi-index: xplus <= 0, xminus >= 0."""

    xplus: tuple
    xminus: tuple

    def __post_init__(self):
        object.__setattr__(self, "xplus", tuple(self.xplus))
        object.__setattr__(self, "xminus", tuple(self.xminus))
        if any(x > 0 for x in self.xplus) or any(x < 0 for x in self.xminus):
            raise DomainError("content has xplus <= 0 and xminus >= 0")
        if -sum(self.xplus) != sum(self.xminus):
            raise DomainError("content sides count different lengths")

    @property
    def k(self):
        return sum(self.xminus)

    @property
    def m(self):
        return len(self.xplus)

    @property
    def n(self):
        return len(self.xminus)


def _check_rows(w, i, j):
    if not 1 <= i <= w.m or not 1 <= j <= w.n:
        raise DomainError(f"index ({i},{j}) out of range for m={w.m}, n={w.n}")


def omega(w, i, j):
    """lambda+_i + lambda-_j + m + 1 - i - j."""
    _check_rows(w, i, j)
    return w.plus[i - 1] + w.minus[j - 1] + w.m + 1 - i - j


def shift(w, IJ):
    """Subtract 1 from plus_i for each i in I, add 1 to minus_j for each j in J."""
    plus, minus = list(w.plus), list(w.minus)
    for i, j in zip(IJ.I, IJ.J):
        _check_rows(w, i, j)
        plus[i - 1] -= 1
        minus[j - 1] += 1
    return Weight(plus, minus)


def content(IJ, m=None, n=None):
    m = max(IJ.I, default=0) if m is None else m
    n = max(IJ.J, default=0) if n is None else n
    if any(not 1 <= i <= m for i in IJ.I) or any(not 1 <= j <= n for j in IJ.J):
        raise DomainError("multi-index entries out of range")
    xplus = [0] * m
    xminus = [0] * n
    for i in IJ.I:
        xplus[i - 1] -= 1
    for j in IJ.J:
        xminus[j - 1] += 1
    return ContentVector(xplus, xminus)


def _weakly_decreasing(xs):
    return all(a >= b for a, b in zip(xs, xs[1:]))


def is_dominant(w):
    return _weakly_decreasing(w.plus) and _weakly_decreasing(w.minus)


def is_polynomial(w):
    return is_dominant(w) and min(w.plus) >= 0 and min(w.minus) >= 0


def is_hook_pair(w):
    """plus_m must cover the number of nonzero parts of minus."""
    if not is_polynomial(w):
        return False
    return w.plus[-1] >= sum(1 for x in w.minus if x > 0)


def ell_stats(w):
    lp, lm = sum(w.plus), sum(w.minus)
    return lp, lm, lp + lm
