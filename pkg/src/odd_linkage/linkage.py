"""Odd linkage: simple links, chains, O-sets and candidacy verdicts.

A simple odd link moves w to shift(w, (i|j)) when w_ij(w) = 0 (or is
divisible by p in the modular setting).  Because w_ij does not change
under that very shift, links can be walked in both directions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .errors import DomainError, PreconditionError
from .indices import MultiIndex, enumerate_admissible, is_admissible, is_robust
from .linalg import _check_modulus, rank_mod_p, rank_rational
from .omega import OmegaExpr
from .psi import basis_matrix
from .tableaux import enumerate_marked, leading_label, skew_shapes_from
from .weights import Weight, content, is_dominant, is_polynomial, omega, shift


def _vanishes(x, modulus):
    return x % modulus == 0 if modulus else x == 0


@dataclass(frozen=True)
class ChainStep:
    weight: Weight
    move: Optional[tuple] = None  # (i, j)
    inverse: bool = False         # True: this weight shifts by move to the previous one

    def to_json(self):
        return {"weight": self.weight.to_json(),
                "move": list(self.move) if self.move else None,
                "inverse": self.inverse}

    @classmethod
    def from_json(cls, data):
        move = tuple(data["move"]) if data["move"] else None
        return cls(Weight.from_json(data["weight"]), move, data.get("inverse", False))


@dataclass(frozen=True)
class LinkChain:
    steps: tuple
    polynomial_only: bool = False
    modulus: Optional[int] = None

    @property
    def weights(self):
        return [s.weight for s in self.steps]

    @property
    def moves(self):
        return [s.move for s in self.steps[1:]]

    def __len__(self):
        return max(len(self.steps) - 1, 0)

    def verify(self):
        """Re-check every step from scratch."""
        if not self.steps or self.steps[0].move is not None:
            return False
        for prev, cur in zip(self.steps, self.steps[1:]):
            i, j = cur.move
            src, dst = (cur.weight, prev.weight) if cur.inverse else (prev.weight, cur.weight)
            if shift(src, MultiIndex([i], [j])) != dst:
                return False
            if not _vanishes(omega(src, i, j), self.modulus):
                return False
        if self.polynomial_only and not all(is_polynomial(w) for w in self.weights):
            return False
        return True

    def render(self):
        """lambda ~ lambda_{31} ~ lambda_{32|11} ... when all moves go forward."""
        if any(s.inverse for s in self.steps):
            return " ~ ".join(f"({s.weight})" for s in self.steps)
        out = ["λ"]
        I, J = [], []
        for i, j in self.moves:
            I.append(i)
            J.append(j)
            out.append(f"λ_{{{MultiIndex(I, J)}}}")
        sep = " ~ " if not self.modulus else f" ~(mod {self.modulus}) "
        return sep.join(out)

    def to_json(self):
        return {"steps": [s.to_json() for s in self.steps],
                "polynomial_only": self.polynomial_only, "modulus": self.modulus}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(ChainStep.from_json(s) for s in data["steps"]),
                   data["polynomial_only"], data["modulus"])


def _chain_from_steps(steps, modulus, polynomial_only=None):
    if polynomial_only is None:
        polynomial_only = all(is_polynomial(s.weight) for s in steps)
    return LinkChain(tuple(steps), polynomial_only, modulus)


def simply_odd_linked(w1, w2, modulus=None):
    """The pair (i,j) linking w1 and w2 in one step, if any.

    Either w2 = shift(w1,(i|j)) or w1 = shift(w2,(i|j)); w_ij takes the
    same value at both ends, and it must vanish.
    """
    if (w1.m, w1.n) != (w2.m, w2.n):
        raise DomainError("weights of different dimensions")
    if modulus is not None:
        _check_modulus(modulus)
    for a, b in ((w1, w2), (w2, w1)):
        dp = [y - x for x, y in zip(a.plus, b.plus)]
        dm = [y - x for x, y in zip(a.minus, b.minus)]
        if sorted(dp) == [-1] + [0] * (a.m - 1) and sorted(dm) == [0] * (a.n - 1) + [1]:
            i, j = dp.index(-1) + 1, dm.index(1) + 1
            return (i, j) if _vanishes(omega(a, i, j), modulus) else None
    return None


def odd_linked(w1, w2, polynomial_only=False, modulus=None, max_depth=None):
    """Shortest chain of simple links (either direction) from w1 to w2, or None.

    The search stays inside the box spanned componentwise by w1 and w2.
    """
    if (w1.m, w1.n) != (w2.m, w2.n):
        raise DomainError("weights of different dimensions")
    if modulus is not None:
        _check_modulus(modulus)
    if polynomial_only and not (is_polynomial(w1) and is_polynomial(w2)):
        return None
    lo = (tuple(map(min, w1.plus, w2.plus)), tuple(map(min, w1.minus, w2.minus)))
    hi = (tuple(map(max, w1.plus, w2.plus)), tuple(map(max, w1.minus, w2.minus)))

    def inside(w):
        return (all(a <= x <= b for a, x, b in zip(lo[0], w.plus, hi[0]))
                and all(a <= x <= b for a, x, b in zip(lo[1], w.minus, hi[1])))

    parent = {w1: None}
    depth = {w1: 0}
    queue = deque([w1])
    while queue:
        cur = queue.popleft()
        if cur == w2:
            break
        if max_depth is not None and depth[cur] >= max_depth:
            continue
        for i in range(1, cur.m + 1):
            for j in range(1, cur.n + 1):
                if not _vanishes(omega(cur, i, j), modulus):
                    continue
                fwd = shift(cur, MultiIndex([i], [j]))
                back = Weight(
                    [x + (t == i) for t, x in enumerate(cur.plus, 1)],
                    [x - (t == j) for t, x in enumerate(cur.minus, 1)],
                )
                for nxt, inverse in ((fwd, False), (back, True)):
                    if nxt in parent or not inside(nxt):
                        continue
                    if polynomial_only and not is_polynomial(nxt):
                        continue
                    parent[nxt] = (cur, (i, j), inverse)
                    depth[nxt] = depth[cur] + 1
                    queue.append(nxt)
    if w2 not in parent:
        return None
    steps = []
    cur = w2
    while parent[cur] is not None:
        prev, move, inverse = parent[cur]
        steps.append(ChainStep(cur, move, inverse))
        cur = prev
    steps.append(ChainStep(w1))
    return _chain_from_steps(list(reversed(steps)), modulus, polynomial_only or None)


def chain_from_collection(w, I0, Jword, modulus=None):
    """lambda = kappa_0, kappa_t = shift by the first t pairs; every step is checked."""
    if modulus is not None:
        _check_modulus(modulus)
    if len(I0) != len(Jword):
        raise DomainError("I0 and Jword differ in length")
    steps = [ChainStep(w)]
    cur = w
    for i, j in zip(I0, Jword):
        value = omega(cur, i, j)
        if not _vanishes(value, modulus):
            raise PreconditionError(f"w{i}{j} = {value} at {cur}: the chain breaks here")
        cur = shift(cur, MultiIndex([i], [j]))
        steps.append(ChainStep(cur, (i, j)))
    return _chain_from_steps(steps, modulus)


def canonical_order(label):
    """Pairs by decreasing i, then increasing j.

    Along this order the earlier pairs sharing an i are exactly those with
    smaller j, and the earlier pairs sharing a j are exactly those with
    larger i, so the step-t omega equals the alpha of the t-th pair.
    """
    return sorted(label.pairs, key=lambda p: (-p[0], p[1]))


def chain_for_label(w, label, modulus=None):
    """A valid chain through the pairs of label, polynomial if one exists."""
    pairs = canonical_order(label)

    def search(cur, left, path, poly):
        if not left:
            return path
        tried = set()
        for t, (i, j) in enumerate(left):
            if (i, j) in tried or not _vanishes(omega(cur, i, j), modulus):
                continue
            tried.add((i, j))
            nxt = shift(cur, MultiIndex([i], [j]))
            if poly and not is_polynomial(nxt):
                continue
            found = search(nxt, left[:t] + left[t + 1:], path + [(i, j)], poly)
            if found is not None:
                return found
        return None

    order = None
    if is_polynomial(w):
        order = search(w, pairs, [], True)
    if order is None:
        order = search(w, pairs, [], False)
    if order is None:
        raise PreconditionError(f"no ordering of {label} gives a chain at {w}")
    return chain_from_collection(w, [p[0] for p in order], [p[1] for p in order], modulus)


# -- O-sets -----------------------------------------------------------------


@dataclass(frozen=True)
class OSet:
    label: str
    entries: tuple
    pairs: MultiIndex = field(compare=False, default=None)

    def values(self, w):
        return [e.evaluate(w) for e in self.entries]

    def vanishes_at(self, w, modulus=None):
        return all(_vanishes(v, modulus) for v in self.values(w))

    def __str__(self):
        return f"O[{self.label}] = {{" + ", ".join(map(str, self.entries)) + "}"

    def to_json(self):
        return {"label": self.label, "pairs": str(self.pairs) if self.pairs else None,
                "entries": [e.to_json() for e in self.entries]}

    @classmethod
    def from_json(cls, data):
        pairs = MultiIndex.parse(data["pairs"]) if data.get("pairs") else None
        return cls(data["label"], tuple(OmegaExpr.from_json(e) for e in data["entries"]), pairs)


def alphas(label):
    """w_p - a + b for every pair p of label, last position first, deduplicated."""
    out = []
    for i, l in reversed(label.pairs):
        a = sum(1 for x, y in label.pairs if x == i and y < l)
        b = sum(1 for x, y in label.pairs if y == l and x > i)
        e = OmegaExpr.symbol(i, l) + (b - a)
        if e not in out:
            out.append(e)
    return tuple(out)


def _use_tableaux(w, IJ):
    if w is None or is_robust(w, IJ):
        return False
    return is_polynomial(w) and is_polynomial(shift(w, IJ))


def collections_and_osets(w, IJ, path="auto"):
    """One O-set per collection.

    Admissible path: one collection per admissible N of the content.
    Tableau path (non-robust polynomial weights): one per enumerated
    tableau, read off its leading label.
    """
    if not is_admissible(IJ):
        raise DomainError(f"({IJ}) is not admissible")
    if path == "auto":
        path = "tableaux" if _use_tableaux(w, IJ) else "admissible"
    if path == "admissible":
        labels = [(str(N), N) for N in enumerate_admissible(content(IJ))]
    elif path == "tableaux":
        Dplus, _ = skew_shapes_from(w, IJ)
        tabs = enumerate_marked(Dplus, IJ.J, w)
        labels = [(f"T{s}", leading_label(T, w)) for s, T in enumerate(tabs, 1)]
    else:
        raise DomainError(f"unknown path {path!r}")
    return [OSet(name, alphas(N), N) for name, N in labels]


# -- verdicts ---------------------------------------------------------------


@dataclass
class FactorVerdict:
    verdict: str                 # NotCandidate | CandidateWithChain | RobustDecided
    osets: list
    chain: Optional[LinkChain] = None
    is_factor: Optional[bool] = None
    rank: Optional[int] = None
    rows: Optional[int] = None
    necessary_only: bool = True
    modulus: Optional[int] = None

    def to_json(self):
        return {
            "verdict": self.verdict,
            "chain": [s.to_json() for s in self.chain.steps] if self.chain else None,
            "osets": [o.to_json() for o in self.osets],
            "is_factor": self.is_factor,
            "rank": self.rank,
            "rows": self.rows,
            "necessary_only": self.necessary_only,
            "modulus": self.modulus,
        }

    @classmethod
    def from_json(cls, data):
        chain = None
        if data["chain"] is not None:
            chain = _chain_from_steps([ChainStep.from_json(s) for s in data["chain"]], data["modulus"])
        return cls(data["verdict"], [OSet.from_json(o) for o in data["osets"]], chain,
                   data["is_factor"], data["rank"], data["rows"], data["necessary_only"], data["modulus"])


def factor_candidate(w, IJ, concrete=True, modulus=None):
    """Decide whether L(shift(w, IJ)) can be a composition factor at w.

    All O-sets nonvanishing: psi is onto by triangularity (NotCandidate).
    Otherwise a chain is built from the first vanishing O-set; for robust
    (I|J) the exact rank then settles the question (RobustDecided).
    """
    if modulus is not None:
        _check_modulus(modulus)
    if not is_admissible(IJ):
        raise DomainError(f"({IJ}) is not admissible")
    if not is_dominant(shift(w, IJ)):
        raise DomainError(f"shifted weight {shift(w, IJ)} is not dominant")
    robust = is_robust(w, IJ)
    osets = collections_and_osets(w, IJ)
    rank = rows = None
    if concrete and not _use_tableaux(w, IJ):
        M = basis_matrix(IJ).evaluate(w)
        rows = len(M)
        rank = rank_mod_p(M, modulus) if modulus else rank_rational(M)
    dead = [o for o in osets if o.vanishes_at(w, modulus)]
    if not dead:
        return FactorVerdict("NotCandidate", osets, None, False if robust else None, rank, rows, not robust, modulus)
    chain = chain_for_label(w, dead[0].pairs, modulus)
    if robust and concrete:
        return FactorVerdict("RobustDecided", osets, chain, rank < rows, rank, rows, False, modulus)
    return FactorVerdict("CandidateWithChain", osets, chain, None, rank, rows, True, modulus)
