"""Multi-indices (I|J), permutations of positions, and basis enumeration."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .errors import DomainError, ParseError
from .orders import rev_semitic_key


def _word_str(word):
    if any(x > 9 for x in word):
        return ",".join(map(str, word))
    return "".join(map(str, word))


def _parse_word(text):
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    if not text.isdigit():
        raise ValueError(text)
    return tuple(int(ch) for ch in text)


@dataclass(frozen=True)
class MultiIndex:
    I: tuple
    J: tuple

    def __post_init__(self):
        object.__setattr__(self, "I", tuple(int(x) for x in self.I))
        object.__setattr__(self, "J", tuple(int(x) for x in self.J))
        if len(self.I) != len(self.J):
            raise DomainError("I and J must have the same length")
        if any(x < 1 for x in self.I + self.J):
            raise DomainError("indices are 1-based")

    @classmethod
    def parse(cls, text):
        """``"113|123"``; use commas for indices above 9: ``"1,10|2,2"``."""
        try:
            left, right = text.split("|")
            return cls(_parse_word(left), _parse_word(right))
        except ValueError as exc:
            raise ParseError(f"cannot parse multi-index {text!r}") from exc

    @classmethod
    def from_pairs(cls, pairs):
        pairs = list(pairs)
        return cls([p[0] for p in pairs], [p[1] for p in pairs])

    @property
    def k(self):
        return len(self.I)

    @property
    def pairs(self):
        return tuple(zip(self.I, self.J))

    @property
    def is_degenerate(self):
        return len(set(self.pairs)) < self.k

    def __str__(self):
        return _word_str(self.I) + "|" + _word_str(self.J)

    def to_json(self):
        return {"I": list(self.I), "J": list(self.J)}

    @classmethod
    def from_json(cls, data):
        return cls(data["I"], data["J"])


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..k}, stored as its list of images."""

    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise DomainError(f"{self.images} is not a permutation")

    @classmethod
    def identity(cls, k):
        return cls(range(1, k + 1))

    @classmethod
    def all(cls, k):
        for p in itertools.permutations(range(1, k + 1)):
            yield cls(p)

    @property
    def k(self):
        return len(self.images)

    @property
    def parity(self):
        inv = sum(
            1
            for a, b in itertools.combinations(self.images, 2)
            if a > b
        )
        return -1 if inv % 2 else 1

    def __call__(self, t):
        return self.images[t - 1]

    def inverse(self):
        inv = [0] * self.k
        for t, e in enumerate(self.images, 1):
            inv[e - 1] = t
        return Permutation(inv)

    def permute(self, word):
        """(w_eta(1), ..., w_eta(k))."""
        if len(word) != self.k:
            raise DomainError("word length does not match the permutation")
        return tuple(word[e - 1] for e in self.images)

    def unpermute(self, word):
        return self.inverse().permute(word)


def permute(eta, L):
    return eta.permute(L)


def stable_eta(base, target):
    """The permutation with target = eta(base) that keeps equal entries in order."""
    if Counter(base) != Counter(target):
        raise DomainError(f"{target} is not a rearrangement of {base}")
    slots = {}
    for pos, x in enumerate(base, 1):
        slots.setdefault(x, []).append(pos)
    taken = {x: iter(v) for x, v in slots.items()}
    return Permutation(next(taken[x]) for x in target)


def is_admissible(IJ):
    for (i1, j1), (i2, j2) in zip(IJ.pairs, IJ.pairs[1:]):
        if i1 > i2 or (i1 == i2 and j1 >= j2):
            return False
    return True


def is_robust(w, IJ):
    """Multiplicity bounds on I and J against consecutive differences of w."""
    if not is_admissible(IJ):
        raise DomainError(f"({IJ}) is not admissible")
    if any(i > w.m for i in IJ.I) or any(j > w.n for j in IJ.J):
        raise DomainError("multi-index out of range for this weight")
    ci, cj = Counter(IJ.I), Counter(IJ.J)
    for i in range(1, w.m):
        if ci[i] > w.plus[i - 1] - w.plus[i]:
            return False
    if ci[w.m] > w.plus[-1]:
        return False
    for j in range(2, w.n + 1):
        if cj[j] > w.minus[j - 2] - w.minus[j - 1]:
            return False
    return True


def multiset_permutations(word):
    """Distinct rearrangements of word (lexicographic)."""
    counts = Counter(word)
    symbols = sorted(counts)
    k = len(word)
    out = []

    def rec(prefix):
        if len(prefix) == k:
            out.append(tuple(prefix))
            return
        for s in symbols:
            if counts[s]:
                counts[s] -= 1
                prefix.append(s)
                rec(prefix)
                prefix.pop()
                counts[s] += 1

    rec([])
    return out


def content_words(c):
    """The sorted I0 and sorted J multiset of a content vector."""
    I0 = tuple(i for i, x in enumerate(c.xplus, 1) for _ in range(-x))
    J0 = tuple(j for j, x in enumerate(c.xminus, 1) for _ in range(x))
    return I0, J0


def by_rev_semitic(words):
    return sorted(words, key=rev_semitic_key)


def enumerate_admissible(c):
    """Admissible labels (I0|L) of content c, L in reverse Semitic order."""
    I0, J0 = content_words(c)
    out = []
    for L in by_rev_semitic(multiset_permutations(J0)):
        IJ = MultiIndex(I0, L)
        if is_admissible(IJ):
            out.append(IJ)
    return out


def enumerate_all_with_content(c, drop_degenerate=False):
    """All labels of content c, in blocks.

    Blocks run over the orderings X of I0 (reverse Semitic); inside the
    block of X = eta I0 the labels are (X | eta L) for L over the
    orderings of J in reverse Semitic order, eta being the stable one.
    """
    I0, J0 = content_words(c)
    Js = by_rev_semitic(multiset_permutations(J0))
    out = []
    for X in by_rev_semitic(multiset_permutations(I0)):
        eta = stable_eta(I0, X)
        for L in Js:
            IJ = MultiIndex(X, eta.permute(L))
            if drop_degenerate and IJ.is_degenerate:
                continue
            out.append(IJ)
    return out


def ab_counts(IJ, eta):
    """(a, b) for the pair sitting at position eta(k) of (I0|L).

    a counts pairs in the same I-row with a smaller L-entry,
    b counts pairs with the same L-entry and a larger I-entry.
    """
    if eta.k != IJ.k:
        raise DomainError("permutation length does not match the multi-index")
    i, l = IJ.pairs[eta(eta.k) - 1]
    a = sum(1 for x, y in IJ.pairs if x == i and y < l)
    b = sum(1 for x, y in IJ.pairs if y == l and x > i)
    return a, b
