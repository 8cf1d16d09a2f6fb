"""odd-linkage: command line front end.

Exit codes: 0 success, 2 domain error, 64 unparsable input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import indices, linalg, linkage, psi, tableaux
from .errors import DomainError, ParseError
from .indices import MultiIndex
from .omega import legend, tie_rules
from .weights import Weight, content, omega, shift

EXIT_DOMAIN = 2
EXIT_PARSE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _bool(text):
    low = text.lower()
    if low in ("true", "yes", "1"):
        return True
    if low in ("false", "no", "0"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _weight(text):
    return "sym" if text == "sym" else Weight.parse(text)


_weight.__name__ = "weight"


def _concrete(args):
    if args.weight == "sym":
        raise DomainError(f"{args.cmd} needs a concrete weight")
    return args.weight


def _ties(text):
    """'1=2|' ties plus_1 = plus_2; '|2=3' ties minus_2 = minus_3."""
    try:
        left, right = text.split("|")
        side = lambda s: [tuple(int(x) for x in t.split("=")) for t in s.split(",") if t]
        return side(left), side(right)
    except ValueError as exc:
        raise ParseError(f"cannot parse ties {text!r}") from exc


def _load_combinations(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read combinations from {path}: {exc}") from exc
    if isinstance(data, list):
        data = {"cols": data}

    def combos(kind, items):
        out = []
        for n, item in enumerate(items, 1):
            terms = item["terms"] if isinstance(item, dict) and "terms" in item else item
            name = item.get("name") if isinstance(item, dict) and "terms" in item else None
            out.append(psi.PiCombination(kind, dict(terms), name=name or f"{kind[0]}{n}"))
        return out

    return combos("target", data.get("rows", [])), combos("source", data.get("cols", []))


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, ensure_ascii=False, sort_keys=True))
    else:
        print(text)


# -- commands ---------------------------------------------------------------


def cmd_omega(args):
    w = args.weight
    if w == "sym":
        if args.m is None or args.n is None:
            raise DomainError("symbolic legend needs --m and --n")
        lines = legend(args.m, args.n)
        return _emit(args, {"legend": lines}, "\n".join(lines))
    if args.i is not None:
        v = omega(w, args.i, args.j)
        return _emit(args, {"i": args.i, "j": args.j, "value": v}, str(v))
    table = [[omega(w, i, j) for j in range(1, w.n + 1)] for i in range(1, w.m + 1)]
    text = "\n".join(" ".join(f"{x:>4}" for x in row) for row in table)
    _emit(args, {"weight": w.to_json(), "omega": table}, text)


def cmd_shift(args):
    mu = shift(_concrete(args), args.pair)
    _emit(args, mu.to_json(), str(mu))


def cmd_admissible(args):
    ok = indices.is_admissible(args.pair)
    _emit(args, {"pair": args.pair.to_json(), "admissible": ok}, str(ok).lower())


def cmd_robust(args):
    ok = indices.is_robust(_concrete(args), args.pair)
    _emit(args, {"pair": args.pair.to_json(), "robust": ok}, str(ok).lower())


def cmd_basis(args):
    c = content(args.pair)
    labels = indices.enumerate_all_with_content(c) if args.all else indices.enumerate_admissible(c)
    _emit(args, [lab.to_json() for lab in labels], "\n".join(map(str, labels)))


def _matrix(args):
    rules = None
    if args.ties:
        plus_ties, minus_ties = args.ties
        rules = tie_rules(max(args.pair.I), max(args.pair.J), plus_ties, minus_ties)
    rows = cols = None
    if args.combinations:
        rows, cols = _load_combinations(args.combinations)
    c = content(args.pair)
    rows = rows or indices.enumerate_admissible(c)
    cols = cols or indices.enumerate_all_with_content(c, drop_degenerate=True)
    return psi.psi_matrix(rows, cols, rules=rules)


def cmd_psi_matrix(args):
    M = _matrix(args)
    if args.weight == "sym":
        text = M.render() + "\n\n" + "\n".join(legend(max(args.pair.I), max(args.pair.J)))
        return _emit(args, M.to_json(), text)
    grid = M.evaluate(args.weight)
    evaluated = psi.PsiMatrix(M.rows, M.cols, [[psi.OmegaExpr(v) for v in row] for row in grid])
    _emit(args, evaluated.to_json(), evaluated.render())


def cmd_rank(args):
    grid = _matrix(args).evaluate(_concrete(args))
    r = linalg.rank_mod_p(grid, args.mod) if args.mod else linalg.rank_rational(grid)
    _emit(args, {"rank": r, "rows": len(grid), "cols": len(grid[0]) if grid else 0, "modulus": args.mod},
          f"rank {r} of {len(grid)}" + (f" (mod {args.mod})" if args.mod else ""))


def cmd_tableaux(args):
    w = _concrete(args)
    Dplus, _ = tableaux.skew_shapes_from(w, args.pair)
    tabs = tableaux.enumerate_marked(Dplus, args.pair.J, w, minus_filter=not args.no_minus_filter)
    payload, blocks = [], []
    for s, T in enumerate(tabs, 1):
        I0, Jw = tableaux.reading_word(T, args.reading)
        lead = tableaux.leading_label(T, w)
        payload.append({"cells": T.to_json(), "I0": list(I0), "Jword": list(Jw), "leading": str(lead)})
        blocks.append(f"T{s}: reading ({indices._word_str(I0)}|{indices._word_str(Jw)}), leading {lead}\n{T.render()}")
    _emit(args, payload, "\n\n".join(blocks) if blocks else "(no tableaux)")


def cmd_osets(args):
    w = None if args.weight == "sym" else args.weight
    osets = linkage.collections_and_osets(w, args.pair)
    lines = []
    for o in osets:
        line = str(o)
        if w is not None:
            vals = o.values(w)
            line += "  values (" + ", ".join(map(str, vals)) + ")"
            if o.vanishes_at(w, args.mod):
                line += "  vanishes"
        lines.append(line)
    _emit(args, [o.to_json() for o in osets], "\n".join(lines))


def _chain_out(args, chain, missing="not linked"):
    if chain is None:
        return _emit(args, None, missing)
    text = chain.render() + "\n" + "\n".join(f"  {s.weight}" for s in chain.steps)
    _emit(args, chain.to_json(), text)


def cmd_chain(args):
    chain = linkage.chain_from_collection(_concrete(args), args.pair.I, args.pair.J, args.mod)
    _chain_out(args, chain)


def cmd_link(args):
    chain = linkage.odd_linked(args.src, args.dst, polynomial_only=args.poly, modulus=args.mod,
                               max_depth=args.max_depth)
    _chain_out(args, chain)


def cmd_factor(args):
    v = linkage.factor_candidate(_concrete(args), args.pair, modulus=args.mod)
    lines = [v.verdict]
    if v.rank is not None:
        lines.append(f"rank {v.rank} of {v.rows}")
    if v.is_factor is not None:
        lines.append("composition factor" if v.is_factor else "not a composition factor")
    if v.necessary_only:
        lines.append("(necessary condition only)")
    lines.extend(str(o) for o in v.osets)
    if v.chain:
        lines.append(v.chain.render())
    _emit(args, v.to_json(), "\n".join(lines))


# -- wiring -----------------------------------------------------------------


def _mk_parser():
    p = _Parser(prog="odd-linkage", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def add(name, fn, weight=False, pair=False):
        s = sub.add_parser(name)
        s.set_defaults(fn=fn)
        s.add_argument("--json", action="store_true")
        if weight:
            s.add_argument("--weight", type=_weight, required=True)
        if pair:
            s.add_argument("--pair", type=MultiIndex.parse, required=True)
        return s

    s = add("omega", cmd_omega, weight=True)
    s.add_argument("--i", type=int)
    s.add_argument("--j", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--n", type=int)
    add("shift", cmd_shift, weight=True, pair=True)
    add("admissible", cmd_admissible, pair=True)
    add("robust", cmd_robust, weight=True, pair=True)
    s = add("basis", cmd_basis, pair=True)
    s.add_argument("--all", action="store_true", help="every label of the content, in block order")
    for name, fn in (("psi-matrix", cmd_psi_matrix), ("rank", cmd_rank)):
        s = add(name, fn, weight=True, pair=True)
        s.add_argument("--combinations", metavar="FILE")
        s.add_argument("--ties", type=_ties, help="equal weight entries, e.g. '1=2|'")
        if name == "rank":
            s.add_argument("--mod", type=int)
    s = add("tableaux", cmd_tableaux, weight=True, pair=True)
    s.add_argument("--reading", choices=("general", "distinct"), default="general")
    s.add_argument("--no-minus-filter", action="store_true")
    s = add("osets", cmd_osets, weight=True, pair=True)
    s.add_argument("--mod", type=int)
    s = add("chain", cmd_chain, weight=True, pair=True)
    s.add_argument("--mod", type=int)
    s = add("link", cmd_link)
    s.add_argument("--from", dest="src", type=Weight.parse, required=True)
    s.add_argument("--to", dest="dst", type=Weight.parse, required=True)
    s.add_argument("--poly", type=_bool, default=False)
    s.add_argument("--mod", type=int)
    s.add_argument("--max-depth", type=int)
    s = add("factor", cmd_factor, weight=True, pair=True)
    s.add_argument("--mod", type=int)
    return p


def run(argv=None):
    try:
        args = _mk_parser().parse_args(argv)
    except ParseError as exc:
        print(f"odd-linkage: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        args.fn(args)
    except ParseError as exc:
        print(f"odd-linkage: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"odd-linkage: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
