"""Command-line interface: ``petersonschubert {basis,monk,giambelli,heights,scan} TYPE ...``."""

from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction

from .billey import heights_list
from .row_words import row_longest_word
from .peterson import (
    VerificationError, basis_table, dumps, giambelli, monk, scan_nonintegral,
    subset_label,
)
from .roots import all_subsets, build_root_system, parse_lie_type, parse_subset
from .weyl import canonical_word, longest_element, parse_word

MAX_TABLE_RANK = 8


def _root_system(text: str):
    return build_root_system(parse_lie_type(text))


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _frac(q: Fraction) -> str:
    return str(q)


def _render_grid(rows: list[list[str]]) -> str:
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip()
                     for r in rows) + "\n"


def cmd_basis(args) -> str:
    rs = _root_system(args.type)
    if rs.rank > MAX_TABLE_RANK:
        raise ValueError(f"basis tables are limited to rank <= {MAX_TABLE_RANK}")
    table = basis_table(rs, paper_words=args.paper_words)
    if args.format == "json":
        return dumps(table.to_dict()) + "\n"
    header = ["K"] + [f"p_v{subset_label(J)}" for J in table.classes]
    body = [[subset_label(K)] + [str(m) for m in row]
            for K, row in zip(table.fixed_points, table.matrix)]
    if args.format == "csv":
        return _csv([header] + body)
    return _render_grid([header] + body)


def cmd_monk(args) -> str:
    rs = _root_system(args.type)
    K = parse_subset(args.K, rs.rank)
    exp = monk(rs, args.i, K, paper_words=args.paper_words)
    if args.format == "json":
        return dumps(exp.to_dict()) + "\n"
    if args.format == "csv":
        rows = [["i", "K", "J", "coeff", "deg"],
                [args.i, subset_label(K), subset_label(K),
                 _frac(exp.diagonal.coeff), exp.diagonal.degree]]
        rows += [[args.i, subset_label(K), subset_label(J), _frac(c), 0]
                 for J, c in exp.terms.items()]
        return _csv(rows)
    lines = [f"p_s{args.i} * p_v{subset_label(K)} in {rs.lie_type}",
             f"  diagonal  {subset_label(K)}: {exp.diagonal}"]
    lines += [f"  term      {subset_label(J)}: {_frac(c)}" for J, c in exp.terms.items()]
    return "\n".join(lines) + "\n"


def cmd_giambelli(args) -> str:
    rs = _root_system(args.type)
    if args.all:
        subsets = all_subsets(rs.rank)
    else:
        subsets = [parse_subset(args.K, rs.rank)]
    certs = [giambelli(rs, K, paper_words=args.paper_words) for K in subsets]
    if args.format == "json":
        return dumps({"type": str(rs.lie_type),
                      "certificates": [c.to_dict() for c in certs]}) + "\n"
    rows = [["K", "components", "reduced_words", "C"]]
    rows += [[subset_label(c.K.indices), c.K.type_label,
              "*".join(str(r) for r in c.reduced_word_counts) or "1", _frac(c.constant)]
             for c in certs]
    if args.format == "csv":
        return _csv(rows)
    return _render_grid(rows)


def cmd_heights(args) -> str:
    rs = _root_system(args.type)
    if args.word is not None:
        word = parse_word(args.word)
    elif args.paper_words:
        word = row_longest_word(rs, range(1, rs.rank + 1))
    else:
        word = canonical_word(rs, longest_element(rs, range(1, rs.rank + 1)))
    hl = heights_list(rs, word)
    if args.format == "json":
        return dumps(hl.to_dict()) + "\n"
    if args.format == "csv":
        return _csv([["position", "letter", "height"]] +
                    [[k, a, h] for k, (a, h) in enumerate(zip(hl.word, hl.heights), 1)])
    return (f"word:    {','.join(map(str, hl.word))}\n"
            f"heights: {','.join(map(str, hl.heights))}\n")


def cmd_scan(args) -> str:
    rs = _root_system(args.type)
    if rs.rank > MAX_TABLE_RANK:
        raise ValueError(f"scans are limited to rank <= {MAX_TABLE_RANK}")
    found = scan_nonintegral(rs, paper_words=args.paper_words)
    print(f"{rs.lie_type}: {len(found)} non-integral Monk coefficient(s); "
          "an empty scan is evidence for the non-integrality conjecture, not a proof",
          file=sys.stderr)
    if args.format == "json":
        return dumps({"type": str(rs.lie_type),
                      "entries": [{"i": i, "K": sorted(K), "J": sorted(J),
                                   "coeff": {"num": str(c.numerator), "den": str(c.denominator)}}
                                  for i, K, J, c in found]}) + "\n"
    rows = [["i", "K", "J", "coeff"]]
    rows += [[str(i), subset_label(K), subset_label(J), _frac(c)] for i, K, J, c in found]
    if args.format == "csv":
        return _csv(rows)
    return _render_grid(rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="petersonschubert",
        description="Equivariant Schubert calculus on Peterson varieties.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("type", help="Lie type and rank, e.g. C3 or E8")
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--paper-words", action="store_true",
                       help="use the row-by-row reduced words of the longest elements")
        return p

    p = common(sub.add_parser("basis", help="localization matrix of the class basis"))
    p.set_defaults(func=cmd_basis)

    p = common(sub.add_parser("monk", help="expand p_{s_i} * p_{v_K}"))
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--K", required=True, help="comma-separated indices or 'all'")
    p.set_defaults(func=cmd_monk)

    p = common(sub.add_parser("giambelli", help="Giambelli constants C_K"))
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--K", help="comma-separated indices or 'all' (the full set)")
    grp.add_argument("--all", action="store_true", help="every subset K")
    p.set_defaults(func=cmd_giambelli)

    p = common(sub.add_parser("heights", help="heights of the roots along a reduced word"))
    p.add_argument("--word", help="comma-separated reduced word (default: longest element)")
    p.set_defaults(func=cmd_heights)

    p = common(sub.add_parser("scan", help="list non-integral Monk coefficients"))
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except (ValueError, IndexError, KeyError, VerificationError) as exc:
        print(f"petersonschubert: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
