"""The psi-map on labelled pi-vectors.

Source vectors pi_{K|L} are tensors, so any label is allowed as a source.
Target vectors are wedges: swapping two (i,j) pairs flips the sign and a
repeated pair is zero, so every target is stored in admissible normal
form.  For a source (K|L) of length k:

    psi(pi_{K|L}) = w_{k_k l_k} pibar_{K|L}
                    + sum_{t<k} (1 - [k_k > k_t] - [l_k < l_t]) pibar_{K|L with l_t, l_k swapped}
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError
from .indices import MultiIndex, Permutation, ab_counts, enumerate_admissible, enumerate_all_with_content
from .omega import OmegaExpr
from .orders import rev_semitic_key
from .weights import content


def normalize_target(label):
    """(sign, admissible label) for the wedge pibar_label, or None if it is zero."""
    pairs = label.pairs
    if len(set(pairs)) < len(pairs):
        return None
    order = sorted(range(len(pairs)), key=lambda t: pairs[t])
    sign = Permutation([t + 1 for t in order]).parity if pairs else 1
    return sign, MultiIndex.from_pairs(pairs[t] for t in order)


class PiCombination:
    """A finite sum  sum c_label * pi_label  with OmegaExpr coefficients.

    kind is "source" (labels kept verbatim) or "target" (labels
    normalized, degenerate ones dropped).
    """

    def __init__(self, kind, terms=None, name=None):
        if kind not in ("source", "target"):
            raise DomainError(f"unknown kind {kind!r}")
        self.kind = kind
        self.name = name
        self.terms = {}
        for label, c in (terms or {}).items():
            if isinstance(label, str):
                label = MultiIndex.parse(label)
            self._add(label, OmegaExpr.coerce(c))

    def _add(self, label, c):
        if self.kind == "target":
            norm = normalize_target(label)
            if norm is None:
                return
            sign, label = norm
            c = c * sign
        total = self.terms.get(label, OmegaExpr()) + c
        if total.is_zero():
            self.terms.pop(label, None)
        else:
            self.terms[label] = total

    def copy(self):
        out = PiCombination(self.kind, name=self.name)
        out.terms = dict(self.terms)
        return out

    def __add__(self, other):
        if other.kind != self.kind:
            raise DomainError("cannot add source and target combinations")
        out = self.copy()
        out.name = None
        for label, c in other.terms.items():
            out._add(label, c)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        out = PiCombination(self.kind, name=self.name)
        for label, v in self.terms.items():
            out._add(label, v * c)
        return out

    def substitute(self, rules):
        out = PiCombination(self.kind, name=self.name)
        for label, v in self.terms.items():
            out._add(label, v.substitute(rules))
        return out

    def is_zero(self):
        return not self.terms

    def coeff(self, label):
        return self.terms.get(label, OmegaExpr())

    def __eq__(self, other):
        if not isinstance(other, PiCombination):
            return NotImplemented
        return self.kind == other.kind and self.terms == other.terms

    def __str__(self):
        bar = "π̄" if self.kind == "target" else "π"
        if not self.terms:
            return "0"
        return " + ".join(f"({c})·{bar}[{lab}]" for lab, c in sorted(self.terms.items(), key=_label_key))

    def to_json(self):
        return {
            "kind": self.kind,
            "name": self.name,
            "terms": [{"label": str(lab), "c": c.to_json()} for lab, c in sorted(self.terms.items(), key=_label_key)],
        }

    @classmethod
    def from_json(cls, data):
        out = cls(data["kind"], name=data.get("name"))
        for t in data["terms"]:
            c = t["c"]
            out._add(MultiIndex.parse(t["label"]), OmegaExpr(c) if isinstance(c, int) else OmegaExpr.from_json(c))
        return out


def _label_key(item):
    label = item[0]
    return (label.I, rev_semitic_key(label.J))


def psi_image(source, w=None):
    """psi(pi_source) as a target combination.

    Symbolic in the w_ij unless a weight is given, in which case every
    coefficient is evaluated.
    """
    if isinstance(source, str):
        source = MultiIndex.parse(source)
    k = source.k
    if k == 0:
        raise DomainError("psi needs at least one pair")
    K, L = source.I, list(source.J)
    out = PiCombination("target")
    out._add(source, OmegaExpr.symbol(K[-1], L[-1]))
    for t in range(k - 1):
        coeff = 1 - (K[-1] > K[t]) - (L[-1] < L[t])
        if coeff:
            swapped = list(L)
            swapped[t], swapped[-1] = swapped[-1], swapped[t]
            out._add(MultiIndex(K, swapped), OmegaExpr(coeff))
    if w is not None:
        return _evaluated(out, w)
    return out


def _evaluated(comb, w):
    out = PiCombination(comb.kind, name=comb.name)
    for label, c in comb.terms.items():
        out._add(label, OmegaExpr(c.evaluate(w)))
    return out


def _contents(labels):
    return {(tuple(sorted(lab.I)), tuple(sorted(lab.J))) for lab in labels}


def psi_on_combination(c, w=None):
    if c.kind != "source":
        raise DomainError("psi acts on source combinations")
    if len(_contents(c.terms)) > 1:
        raise DomainError("combination mixes labels of different content")
    out = PiCombination("target")
    for label, coeff in c.terms.items():
        if not coeff.is_constant:
            raise DomainError("source combinations take integer coefficients")
        out = out + psi_image(label).scale(coeff.const)
    if w is not None:
        return _evaluated(out, w)
    return out


def diagonal_alpha(I0, L, eta):
    """Coefficient of pibar_{I0|L} in psi(pi_{eta I0 | eta L}): sign(eta)(w - a + b)."""
    if len(I0) != len(L):
        raise DomainError("I0 and L differ in length")
    IJ = MultiIndex(I0, L)
    a, b = ab_counts(IJ, eta)
    i, l = IJ.pairs[eta(eta.k) - 1]
    return (OmegaExpr.symbol(i, l) + (b - a)) * eta.parity


# -- matrices ---------------------------------------------------------------


class NotInSpanError(DomainError):
    """A column image has a component outside the span of the rows."""

    def __init__(self, column, residual):
        super().__init__(f"image of column {column} leaves a residual {residual}")
        self.column = column
        self.residual = residual


@dataclass
class PsiMatrix:
    rows: list
    cols: list
    entries: list = field(default_factory=list)

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    def column(self, c):
        return [row[c] for row in self.entries]

    def evaluate(self, w):
        return [[e.evaluate(w) for e in row] for row in self.entries]

    def substitute(self, rules):
        return PsiMatrix(self.rows, self.cols, [[e.substitute(rules) for e in row] for row in self.entries])

    def render(self):
        cells = [[str(e) for e in row] for row in self.entries]
        width = max([len(c) for row in cells for c in row] + [len(c) for c in self.cols] + [1])
        rw = max([len(r) for r in self.rows] + [1])
        lines = [" " * rw + " | " + " ".join(c.rjust(width) for c in self.cols)]
        for name, row in zip(self.rows, cells):
            lines.append(name.rjust(rw) + " | " + " ".join(x.rjust(width) for x in row))
        return "\n".join(lines)

    def to_json(self):
        return {
            "rows": list(self.rows),
            "cols": list(self.cols),
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data):
        return cls(list(data["rows"]), list(data["cols"]),
                   [[OmegaExpr.from_json(e) for e in row] for row in data["entries"]])


def _name(x):
    if isinstance(x, MultiIndex):
        return str(x)
    return x.name or str(x)


def _as_row(r):
    if isinstance(r, MultiIndex):
        return PiCombination("target", {r: 1}, name=str(r))
    if r.kind != "target":
        raise DomainError("rows are target combinations")
    return r


def _leading(row):
    return max(row.terms, key=lambda lab: (lab.I, rev_semitic_key(lab.J)))


def express_in_rows(image, rows, rules=None, column="?"):
    """Coordinates of a target combination over rows with distinct leading terms.

    Rows are peeled off from the highest leading term down.  Anything left
    over raises NotInSpanError carrying the residual.
    """
    if rules:
        image = image.substitute(rules)
    leads = [_leading(r) for r in rows]
    if len(set(leads)) != len(leads):
        raise DomainError("row vectors must have distinct leading terms")
    coords = [OmegaExpr()] * len(rows)
    order = sorted(range(len(rows)), key=lambda s: (leads[s].I, rev_semitic_key(leads[s].J)), reverse=True)
    rest = image.copy()
    for s in order:
        c = rest.coeff(leads[s])
        if c.is_zero():
            continue
        lead_coeff = rows[s].coeff(leads[s])
        if not lead_coeff.is_constant:
            raise DomainError("row vectors need integer coefficients")
        c = c.divide_exact(lead_coeff.const)
        coords[s] = c
        for label, v in rows[s].terms.items():
            rest._add(label, -(c * v.const))
        if rules:
            rest = rest.substitute(rules)
    if not rest.is_zero():
        raise NotInSpanError(column, rest)
    return coords


def psi_matrix(rows, cols, w=None, rules=None):
    """Matrix of psi: column c holds the row coordinates of psi(cols[c]).

    rows: admissible labels or target combinations (tableau vectors).
    cols: source labels or source combinations.
    rules: optional substitutions (see omega.tie_rules) applied before
    reading off coordinates.
    """
    rows = list(rows)
    cols = list(cols)
    rvecs = [_as_row(r) for r in rows]
    plain = all(isinstance(r, MultiIndex) for r in rows)
    index = {r: s for s, r in enumerate(rows)} if plain else None
    grid = [[None] * len(cols) for _ in rows]
    for c, col in enumerate(cols):
        image = psi_image(col) if isinstance(col, MultiIndex) else psi_on_combination(col)
        if plain:
            if rules:
                image = image.substitute(rules)
            coords = [OmegaExpr()] * len(rows)
            rest = PiCombination("target")
            for label, v in image.terms.items():
                if label in index:
                    coords[index[label]] = v
                else:
                    rest._add(label, v)
            if not rest.is_zero():
                raise NotInSpanError(_name(col), rest)
        else:
            coords = express_in_rows(image, rvecs, rules, _name(col))
        for s in range(len(rows)):
            grid[s][c] = coords[s]
    m = PsiMatrix([_name(r) for r in rows], [_name(c) for c in cols], grid)
    if w is not None:
        m = PsiMatrix(m.rows, m.cols, [[OmegaExpr(v) for v in row] for row in m.evaluate(w)])
    return m


def basis_matrix(IJ, w=None, rules=None):
    """Rows: admissible labels of the content of IJ; columns: all non-degenerate labels."""
    c = content(IJ)
    return psi_matrix(enumerate_admissible(c), enumerate_all_with_content(c, drop_degenerate=True), w, rules)
