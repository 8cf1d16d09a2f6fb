"""Skew diagrams attached to (w, I|J), their semistandard fillings and readings.

Cells are (row, column), 1-based.  The plus diagram lives in the
conjugate picture: column i holds the cells (a, i) with
mu_i < a <= plus_i, where mu = shift(w, I|J).plus, so column i has as
many cells as i occurs in I.  The minus diagram is the ordinary
difference of the minus shapes: row j holds (j, c) for
minus_j < c <= nu_j.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .errors import DomainError
from .indices import MultiIndex
from .orders import clausen_key, rev_semitic_key
from .psi import normalize_target
from .weights import is_dominant, is_polynomial, shift

GENERAL = "general"    # rows top to bottom, each row right to left
DISTINCT = "distinct"  # rows bottom to top, each row left to right


@dataclass(frozen=True)
class SkewDiagram:
    cells: frozenset

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(self.cells))

    def __len__(self):
        return len(self.cells)

    def rows(self):
        out = {}
        for r, c in sorted(self.cells):
            out.setdefault(r, []).append(c)
        return out

    def columns(self):
        out = {}
        for r, c in sorted(self.cells, key=lambda rc: (rc[1], rc[0])):
            out.setdefault(c, []).append(r)
        return out

    def to_json(self):
        return [list(c) for c in sorted(self.cells)]


@dataclass(frozen=True)
class Tableau:
    """A filling of a skew diagram by J-symbols j (shown as m+j)."""

    shape: SkewDiagram
    filling: tuple  # ((row, col), j) sorted by cell
    m: int = 0

    @classmethod
    def of(cls, shape, mapping, m=0):
        if set(mapping) != set(shape.cells):
            raise DomainError("filling must cover exactly the cells of the shape")
        return cls(shape, tuple(sorted(mapping.items())), m)

    def at(self, cell):
        return dict(self.filling)[cell]

    def is_semistandard(self):
        f = dict(self.filling)
        for (r, c), s in f.items():
            if (r, c + 1) in f and f[(r, c + 1)] < s:
                return False
            if (r + 1, c) in f and f[(r + 1, c)] <= s:
                return False
        return True

    def render(self):
        f = dict(self.filling)
        if not f:
            return "(empty)"
        r0 = min(r for r, _ in f)
        r1 = max(r for r, _ in f)
        c0 = min(c for _, c in f)
        c1 = max(c for _, c in f)
        w = max(len(str(self.m + s)) for s in f.values())
        lines = []
        for r in range(r0, r1 + 1):
            cells = [str(self.m + f[(r, c)]).rjust(w) if (r, c) in f else "." * w for c in range(c0, c1 + 1)]
            lines.append(f"{r:>3}: " + " ".join(cells))
        return "\n".join(lines)

    def to_json(self):
        return [{"row": r, "col": c, "j": s} for (r, c), s in self.filling]


def skew_shapes_from(w, IJ, check=True):
    """The plus and minus diagrams of (w, IJ).

    check=False skips the dominance tests and returns the formal cell
    differences, which need not be skew shapes.
    """
    mu = shift(w, IJ)
    if check and not is_dominant(mu):
        raise DomainError(f"shifted weight {mu} is not dominant")
    if check and (not is_polynomial(w) or not is_polynomial(mu)):
        raise DomainError("diagrams need polynomial weights")
    plus = {(a, i) for i in range(1, w.m + 1) for a in range(mu.plus[i - 1] + 1, w.plus[i - 1] + 1)}
    minus = {(j, c) for j in range(1, w.n + 1) for c in range(w.minus[j - 1] + 1, mu.minus[j - 1] + 1)}
    return SkewDiagram(plus), SkewDiagram(minus)


def _minus_columns(w, jcontent):
    """For distinct J: D-minus column index of the single cell in row j."""
    return {j: w.minus[j - 1] + 1 for j in jcontent}


def _minus_condition(filling, w, jcontent):
    """Distinct J only: in each column of the minus diagram the i-entries strictly decrease downwards."""
    col_of = _minus_columns(w, jcontent)
    i_of = {s: c for (_r, c), s in filling.items()}
    for j1, j2 in itertools.combinations(sorted(jcontent), 2):
        if col_of[j1] == col_of[j2] and not i_of[j1] > i_of[j2]:
            return False
    return True


def enumerate_marked(Dplus, jcontent, w=None, minus_filter=True):
    """Semistandard fillings of Dplus with the multiset jcontent.

    When the J-symbols are distinct and w is given, the companion filling
    of the minus diagram must have strictly decreasing columns; pass
    minus_filter=False to skip that test.  Output is in Clausen row order.
    """
    jcontent = list(jcontent)
    if len(jcontent) != len(Dplus):
        raise DomainError("number of symbols differs from the number of cells")
    cells = sorted(Dplus.cells)
    cellset = Dplus.cells
    left = Counter(jcontent)
    symbols = sorted(left)
    m = w.m if w is not None else 0
    found = []
    filling = {}

    def rec(t):
        if t == len(cells):
            found.append(dict(filling))
            return
        r, c = cells[t]
        lo = filling[(r, c - 1)] if (r, c - 1) in cellset else None
        up = filling[(r - 1, c)] if (r - 1, c) in cellset else None
        for s in symbols:
            if not left[s] or (lo is not None and s < lo) or (up is not None and s <= up):
                continue
            left[s] -= 1
            filling[(r, c)] = s
            rec(t + 1)
            del filling[(r, c)]
            left[s] += 1

    rec(0)
    distinct = len(set(jcontent)) == len(jcontent)
    if minus_filter and distinct and w is not None:
        found = [f for f in found if _minus_condition(f, w, jcontent)]
    out = [Tableau.of(Dplus, f, m) for f in found]
    return sorted(out, key=clausen_key)


def reading_order(shape, mode=GENERAL):
    rows = shape.rows()
    if mode == GENERAL:
        return [(r, c) for r in sorted(rows) for c in reversed(rows[r])]
    if mode == DISTINCT:
        return [(r, c) for r in sorted(rows, reverse=True) for c in rows[r]]
    raise DomainError(f"unknown reading mode {mode!r}")


def reading_word(T, mode=GENERAL):
    f = dict(T.filling)
    order = reading_order(T.shape, mode)
    return tuple(c for _, c in order), tuple(f[cell] for cell in order)


def orbit_labels(T, w=None):
    """Admissible labels reached by permuting symbols within rows of T.

    With distinct J-symbols and w given, symbols sharing a column of the
    minus diagram are permuted as well.  Degenerate labels are dropped.
    """
    f = dict(T.filling)
    groups = [[(r, c) for c in cs] for r, cs in T.shape.rows().items()]
    moves = [lambda g, cells=cells: _row_perms(g, cells) for cells in groups if len(cells) > 1]
    symbols = list(f.values())
    if w is not None and len(set(symbols)) == len(symbols):
        by_col = {}
        for j, col in _minus_columns(w, symbols).items():
            by_col.setdefault(col, []).append(j)
        for js in by_col.values():
            if len(js) > 1:
                moves.append(lambda g, js=js: _symbol_perms(g, js))
    seen = {tuple(sorted(f.items()))}
    frontier = [f]
    for move in moves:
        nxt = []
        for g in frontier:
            for h in move(g):
                key = tuple(sorted(h.items()))
                if key not in seen:
                    seen.add(key)
                    nxt.append(h)
        frontier = frontier + nxt
    labels = set()
    for g in frontier:
        norm = normalize_target(MultiIndex.from_pairs((c, s) for (_r, c), s in g.items()))
        if norm is not None:
            labels.add(norm[1])
    return sorted(labels, key=lambda lab: rev_semitic_key(lab.J))


def _row_perms(g, cells):
    vals = [g[c] for c in cells]
    for p in set(itertools.permutations(vals)):
        h = dict(g)
        h.update(zip(cells, p))
        yield h


def _symbol_perms(g, js):
    for p in itertools.permutations(js):
        swap = dict(zip(js, p))
        yield {cell: swap.get(s, s) for cell, s in g.items()}


def leading_label(T, w=None):
    """The highest orbit label in reverse Semitic order."""
    labels = orbit_labels(T, w)
    if not labels:
        raise DomainError("every rearrangement of this tableau is degenerate")
    return labels[-1]
