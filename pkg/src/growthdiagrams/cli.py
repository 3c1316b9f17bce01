"""
Command-line front end: run insertions, build and render growth diagrams,
export the four graded graphs, and re-run the library's verification
suites from the shell.

Exit codes: 0 success, 1 verification failure or mismatch, 2 usage and
parse errors.  Identical invocations produce byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import graphs
from .compositions import WordEncodingError
from .graphs import vertex_label
from .growth import (
    GrowthGrid,
    GrowthRuleError,
    build_growth_diagram,
    convert_chains,
    growth_insert,
)
from .permutations import (
    PermutationParseError,
    all_permutations,
    parse_permutation,
)
from .ribbons import hypoplactic_insert, render_tableau, shadow_lines
from .trees import (
    bst_insert,
    labeled_tree_to_json_obj,
    labeled_tree_to_text,
)

_ALGORITHMS = ("hypoplactic", "bst-left", "bst-right", "sylvester")


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- insert -------------------------------------------------------------------

def cmd_insert(args) -> int:
    p = parse_permutation(args.permutation)
    if args.algorithm == "hypoplactic":
        tab_p, tab_q = hypoplactic_insert(p)
        if args.format == "json":
            payload = {
                "algorithm": args.algorithm,
                "permutation": list(p),
                "P": tab_p.to_json_obj(),
                "Q": tab_q.to_json_obj(),
            }
            _emit(args, json.dumps(payload, indent=2))
        else:
            _emit(
                args,
                f"P (quasi-ribbon):\n{render_tableau(tab_p)}\n"
                f"Q (ribbon):\n{render_tableau(tab_q)}",
            )
        return 0
    algorithm = "bst-right" if args.algorithm == "sylvester" else args.algorithm
    reading = "left-to-right" if algorithm == "bst-left" else "right-to-left"
    tree_p, tree_q = bst_insert(p, reading)
    if args.format == "json":
        payload = {
            "algorithm": algorithm,
            "permutation": list(p),
            "P": labeled_tree_to_json_obj(tree_p),
            "Q": labeled_tree_to_json_obj(tree_q),
        }
        _emit(args, json.dumps(payload, indent=2))
    else:
        q_kind = "increasing tree" if reading == "left-to-right" else "decreasing tree"
        _emit(
            args,
            f"P (binary search tree): {labeled_tree_to_text(tree_p)}\n"
            f"Q ({q_kind}): {labeled_tree_to_text(tree_q)}",
        )
    return 0


# -- growth -------------------------------------------------------------------

def _render_grid(grid: GrowthGrid) -> str:
    n = grid.n
    size = 2 * n + 1
    cells = [["" for _ in range(size)] for _ in range(size)]
    for i in range(n + 1):
        for j in range(n + 1):
            cells[2 * (n - i)][2 * j] = vertex_label(grid.family, grid.vertices[i][j])
    for col, row in grid.marks:
        cells[2 * (n - row) + 1][2 * col - 1] = "x"
    widths = [max(len(r[c]) for r in cells) for c in range(size)]
    lines = []
    for r in cells:
        line = "  ".join(cell.ljust(width) for cell, width in zip(r, widths))
        lines.append(line.rstrip())
    return "\n".join(lines)


def _render_pair(family: str, p, q) -> str:
    if family == "composition":
        return (
            f"P (quasi-ribbon):\n{render_tableau(p)}\n"
            f"Q (ribbon):\n{render_tableau(q)}"
        )
    return (
        f"P (binary search tree): {labeled_tree_to_text(p)}\n"
        f"Q (increasing tree): {labeled_tree_to_text(q)}"
    )


def cmd_growth(args) -> int:
    p = parse_permutation(args.permutation)
    grid = build_growth_diagram(p, args.family)
    chains = grid.boundary_chains()
    pair = convert_chains(chains, args.family)
    matched = None
    if args.check:
        direct = (
            hypoplactic_insert(p)
            if args.family == "composition"
            else bst_insert(p, "left-to-right")
        )
        matched = pair == direct
    if args.format == "json":
        payload = grid.to_json_obj()
        if matched is not None:
            payload["check"] = "MATCH" if matched else "MISMATCH"
        _emit(args, json.dumps(payload, indent=2))
    else:
        label = lambda v: vertex_label(args.family, v)
        parts = [
            _render_grid(grid),
            "",
            "top chain:   " + " -> ".join(label(v) for v in chains.top),
            "right chain: " + " -> ".join(label(v) for v in chains.right),
            _render_pair(args.family, *pair),
        ]
        if matched is not None:
            parts.append("check against direct insertion: " + ("MATCH" if matched else "MISMATCH"))
        _emit(args, "\n".join(parts))
    return 0 if matched in (None, True) else 1


# -- graph --------------------------------------------------------------------

def cmd_graph(args) -> int:
    g = graphs.make_graph(args.name)
    _emit(args, graphs.export_graph(g, args.max_rank, args.format))
    return 0


# -- verify -------------------------------------------------------------------

def _verify_duality(args, lines: list[str]) -> bool:
    g1, g2 = (graphs.make_graph(name) for name in graphs.DUAL_PAIRS[args.pair])
    report = graphs.check_duality(g1, g2, args.max_rank)
    for n, ok in enumerate(report.rank_verdicts):
        lines.append(f"rank {n}: {'PASS' if ok else 'FAIL'}")
    if report.is_dual:
        lines.append(f"{report.pair} dual with r=1 up to rank {report.max_rank}")
        return True
    ce = report.counterexample
    lines.append(
        f"counterexample at rank {ce.rank}: (DU-UD)[{ce.row_label}, {ce.col_label}]"
        f" = {ce.got}, expected {ce.expected}"
    )
    return False


def _verify_equivalence(args, lines: list[str]) -> bool:
    for n in range(args.max_n + 1):
        for p in all_permutations(n):
            direct = (
                hypoplactic_insert(p)
                if args.family == "composition"
                else bst_insert(p, "left-to-right")
            )
            if growth_insert(p, args.family) != direct:
                lines.append(f"MISMATCH at permutation {p} (family {args.family})")
                return False
        count = len(list(all_permutations(n)))
        lines.append(f"n={n}: {count}/{count} PASS")
    lines.append(f"growth diagrams match direct {args.family} insertion for all n <= {args.max_n}")
    return True


def _verify_shadow(args, lines: list[str]) -> bool:
    for n in range(args.max_n + 1):
        for p in all_permutations(n):
            if shadow_lines(p) != hypoplactic_insert(p):
                lines.append(f"MISMATCH at permutation {p}")
                return False
        count = len(list(all_permutations(n)))
        lines.append(f"n={n}: {count}/{count} PASS")
    lines.append(f"shadow lines match hypoplactic insertion for all n <= {args.max_n}")
    return True


def _verify_paths(args, lines: list[str]) -> bool:
    g1, g2 = (graphs.make_graph(name) for name in graphs.DUAL_PAIRS[args.pair])
    lhs, rhs = graphs.path_count_identity(g1, g2, args.n)
    ok = lhs == rhs
    lines.append(f"n={args.n}: chain-pair count {lhs}, n! = {rhs}: {'PASS' if ok else 'FAIL'}")
    return ok


def cmd_verify(args) -> int:
    runners = {
        "duality": _verify_duality,
        "equivalence": _verify_equivalence,
        "shadow": _verify_shadow,
        "paths": _verify_paths,
    }
    lines: list[str] = []
    ok = runners[args.mode](args, lines)
    _emit(args, "\n".join(lines))
    return 0 if ok else 1


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="growthdiag",
        description=(
            "Hypoplactic and binary-search-tree insertion, growth diagrams on "
            "two dual graded graph pairs, and their verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_insert = sub.add_parser("insert", help="run an insertion algorithm on a permutation")
    p_insert.add_argument("algorithm", choices=_ALGORITHMS)
    p_insert.add_argument("permutation", help="digits (n <= 9) or comma-separated values")
    p_insert.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p_insert.add_argument("--out", default=None, help="write output to a file instead of stdout")
    p_insert.set_defaults(func=cmd_insert)

    p_growth = sub.add_parser("growth", help="build and render a growth diagram")
    p_growth.add_argument("family", choices=("composition", "tree"))
    p_growth.add_argument("permutation")
    p_growth.add_argument("--check", action="store_true", help="compare with the direct insertion")
    p_growth.add_argument("--format", choices=("ascii", "json"), default="ascii")
    p_growth.add_argument("--out", default=None)
    p_growth.set_defaults(func=cmd_growth)

    p_graph = sub.add_parser("graph", help="export one of the four graded graphs")
    p_graph.add_argument("name", choices=graphs.GRAPH_NAMES)
    p_graph.add_argument("--max-rank", type=int, default=4)
    p_graph.add_argument("--format", choices=("dot", "json"), default="dot")
    p_graph.add_argument("--out", default=None)
    p_graph.set_defaults(func=cmd_graph)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("mode", choices=("duality", "equivalence", "shadow", "paths"))
    p_verify.add_argument("--pair", choices=tuple(graphs.DUAL_PAIRS), default="compositions")
    p_verify.add_argument("--family", choices=("composition", "tree"), default="composition")
    p_verify.add_argument("--max-rank", type=int, default=8)
    p_verify.add_argument("--max-n", type=int, default=5)
    p_verify.add_argument("--n", type=int, default=5)
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GrowthRuleError as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return 1
    except (PermutationParseError, WordEncodingError, graphs.RankGuardError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
