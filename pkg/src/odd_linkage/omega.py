"""Integer-affine expressions in the symbols w_ij.

Every entry of a symbolic psi-matrix has the shape

    c_0 + sum c_ij * w_ij

with integer coefficients.  Expressions are immutable and kept in a
canonical form (no zero coefficients, keys sorted), so structural
equality is mathematical equality.
"""

from __future__ import annotations

import re

from .errors import DomainError, ParseError
from .weights import omega


class OmegaExpr:
    __slots__ = ("const", "terms", "_hash")

    def __init__(self, const=0, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            c = int(c)
            if c:
                clean[(int(key[0]), int(key[1]))] = c
        self.const = int(const)
        self.terms = tuple(sorted(clean.items()))
        self._hash = None

    @classmethod
    def symbol(cls, i, j, coeff=1):
        return cls(0, {(i, j): coeff})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, OmegaExpr):
            return x
        if isinstance(x, int):
            return cls(x)
        raise TypeError(f"cannot use {type(x).__name__} as an omega expression")

    @property
    def is_constant(self):
        return not self.terms

    def is_zero(self):
        return not self.terms and self.const == 0

    def __bool__(self):
        return not self.is_zero()

    def coeff(self, i, j):
        return dict(self.terms).get((i, j), 0)

    def __add__(self, other):
        other = OmegaExpr.coerce(other)
        merged = dict(self.terms)
        for key, c in other.terms:
            merged[key] = merged.get(key, 0) + c
        return OmegaExpr(self.const + other.const, merged)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-OmegaExpr.coerce(other))

    def __rsub__(self, other):
        return OmegaExpr.coerce(other) - self

    def __mul__(self, c):
        if not isinstance(c, int):
            # degree stays at most one
            raise TypeError("omega expressions scale by integers only")
        return OmegaExpr(self.const * c, {k: v * c for k, v in self.terms})

    __rmul__ = __mul__

    def divide_exact(self, c):
        if self.const % c or any(v % c for _, v in self.terms):
            raise DomainError(f"{self} is not divisible by {c}")
        return OmegaExpr(self.const // c, {k: v // c for k, v in self.terms})

    def __eq__(self, other):
        if isinstance(other, int):
            other = OmegaExpr(other)
        if not isinstance(other, OmegaExpr):
            return NotImplemented
        return self.const == other.const and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.const, self.terms))
        return self._hash

    def evaluate(self, w):
        return self.const + sum(c * omega(w, i, j) for (i, j), c in self.terms)

    def substitute(self, rules):
        """Replace w_ij by rules[(i,j)] (an OmegaExpr) wherever a rule exists."""
        out = OmegaExpr(self.const)
        for key, c in self.terms:
            out = out + (rules[key] * c if key in rules else OmegaExpr.symbol(*key, c))
        return out

    def __str__(self):
        parts = []
        for (i, j), c in self.terms:
            sym = f"ω{i}{j}" if i < 10 and j < 10 else f"ω{i},{j}"
            mag = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(f"{sign}{mag}{sym}")
        if self.const or not parts:
            sign = "-" if self.const < 0 else ("+" if parts else "")
            parts.append(f"{sign}{abs(self.const)}")
        return "".join(parts)

    def __repr__(self):
        return f"OmegaExpr({str(self)!r})"

    @classmethod
    def parse(cls, text):
        """Inverse of str(); also accepts 'w' for omega, the unicode minus and spaces."""
        s = text.replace(" ", "").replace("−", "-").replace("w", "ω")
        if not s:
            raise ParseError("empty expression")
        token = re.compile(r"([+-]?)(\d*)(?:ω(\d)(\d)|ω\{?(\d+),(\d+)\}?)?")
        pos, const, terms = 0, 0, {}
        while pos < len(s):
            mt = token.match(s, pos)
            if not mt or mt.end() == pos:
                raise ParseError(f"cannot parse {text!r}")
            sign, digits, i1, j1, i2, j2 = mt.groups()
            i, j = (i1, j1) if i1 else (i2, j2)
            if not i and not digits:
                raise ParseError(f"cannot parse {text!r}")
            mag = int(digits) if digits else 1
            value = -mag if sign == "-" else mag
            if i:
                key = (int(i), int(j))
                terms[key] = terms.get(key, 0) + value
            else:
                const += value
            pos = mt.end()
        return cls(const, terms)

    def to_json(self):
        return {"const": self.const, "terms": [{"i": i, "j": j, "c": c} for (i, j), c in self.terms]}

    @classmethod
    def from_json(cls, data):
        return cls(data["const"], {(t["i"], t["j"]): t["c"] for t in data["terms"]})


def sym(i, j):
    return OmegaExpr.symbol(i, j)


def tie_rules(m, n, plus_ties=(), minus_ties=()):
    """Substitutions expressing equal weight entries.

    plus_a = plus_b (a < b) gives w_aj = w_bj + (b - a) for every j;
    minus_c = minus_d (c < d) gives w_ic = w_id + (d - c) for every i.
    """
    rules = {}
    for a, b in plus_ties:
        a, b = sorted((a, b))
        for j in range(1, n + 1):
            rules[(a, j)] = OmegaExpr(b - a, {(b, j): 1})
    for c, d in minus_ties:
        c, d = sorted((c, d))
        for i in range(1, m + 1):
            rules[(i, c)] = OmegaExpr(d - c, {(i, d): 1})
    # chase chains such as 1=2, 2=3 to a fixed point
    for _ in range(len(rules)):
        rules = {k: v.substitute(rules) for k, v in rules.items()}
    return rules


def legend(m, n):
    """Lines such as 'ω33=λ+3+λ-3-2' spelling out each symbol."""
    lines = []
    for i in range(m, 0, -1):
        for j in range(n, 0, -1):
            c = m + 1 - i - j
            tail = "" if c == 0 else (f"+{c}" if c > 0 else str(c))
            lines.append(f"ω{i}{j}=λ+{i}+λ-{j}{tail}")
    return lines
