"""Command-line front end: generate, compute, construct, verify, solve.

Exit codes: 0 success, 1 invalid input, 2 invalid certificate or unproven
optimum or failed selftest, 3 internal assertion failure.  All output is
ASCII with LF line endings and a stable key=value grammar.
"""

import argparse
import sys

from .construct import cover_hamming2, cover_hamming3, cover_multipartite
from .cover import (
    Cover,
    format_cover,
    parse_cover,
    verify_cover,
)
from .errors import (
    ConstructionError,
    DisconnectedGraphError,
    FormatError,
    InvalidSpecError,
    OutOfRangeError,
    PoolBudgetError,
    UnknownCoverKeyError,
)
from .formulas import ip_hamming2, ip_hamming3, ip_multipartite
from .graph import (
    Graph,
    HammingSpec,
    PartiteSpec,
    all_pairs_distances,
    format_graph,
    make_augmented_multipartite,
    make_complete_multipartite,
    make_hamming,
    parse_graph,
)
from .solver import enumerate_isometric_paths, solve_min_cover

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_UNPROVEN = 2
EXIT_INTERNAL = 3

_DOT_COLORS = (
    "red", "blue", "forestgreen", "darkorange", "purple",
    "deeppink", "teal", "saddlebrown", "goldenrod", "navy",
)


def _parse_sizes(text):
    try:
        sizes = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise InvalidSpecError(f"malformed size list {text!r}") from None
    if not sizes:
        raise InvalidSpecError("empty size list")
    return sizes


def _parse_pairs(text, r):
    groups = text.split(";")
    if len(groups) != r:
        raise InvalidSpecError(
            f"--pairs needs {r} ';'-separated groups (one per part), got {len(groups)}"
        )
    pairings = []
    for group in groups:
        pairs = []
        group = group.strip()
        if group:
            for token in group.split(","):
                a, sep, b = token.partition("-")
                if not sep:
                    raise InvalidSpecError(f"malformed pair {token!r} (want a-b)")
                try:
                    pairs.append((int(a), int(b)))
                except ValueError:
                    raise InvalidSpecError(f"malformed pair {token!r}") from None
        pairings.append(pairs)
    return pairings


def _write_text(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="") as handle:
            handle.write(text)


def _read_text(path):
    with open(path, "r", encoding="ascii") as handle:
        return handle.read()


def _graph_dot(g: Graph, cover: Cover | None = None) -> str:
    """Presentation-only DOT export; paths colored when a cover is given."""
    vertex_color = {}
    edge_color = {}
    if cover is not None:
        for i, p in enumerate(cover.paths):
            color = _DOT_COLORS[i % len(_DOT_COLORS)]
            for v in p.vertices:
                vertex_color.setdefault(v, color)
            for a, b in zip(p.vertices, p.vertices[1:]):
                edge_color.setdefault((min(a, b), max(a, b)), color)
    lines = ["graph cover {" if cover is not None else "graph g {"]
    for v in range(g.n):
        label = g.labels[v] if g.labels else str(v)
        attrs = [f'label="{label}"']
        if v in vertex_color:
            attrs.append(f'color="{vertex_color[v]}"')
            attrs.append("style=bold")
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in g.edges():
        if (u, v) in edge_color:
            lines.append(f'  {u} -- {v} [color="{edge_color[(u, v)]}", penwidth=2];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_gen(args):
    if args.multipartite is not None:
        g = make_complete_multipartite(PartiteSpec(_parse_sizes(args.multipartite)))
    elif args.hamming is not None:
        g = make_hamming(HammingSpec(_parse_sizes(args.hamming)))
    else:
        spec = PartiteSpec(_parse_sizes(args.augmented))
        if args.pairs is None:
            raise InvalidSpecError("--augmented requires --pairs")
        g = make_augmented_multipartite(spec, _parse_pairs(args.pairs, spec.r))
    _write_text(args.output, format_graph(g))
    if args.dot:
        _write_text(args.dot, _graph_dot(g))
    return EXIT_OK


def _cmd_formula(args):
    if args.multipartite is not None:
        result = ip_multipartite(PartiteSpec(_parse_sizes(args.multipartite)))
    else:
        factors = _parse_sizes(args.hamming)
        if len(factors) == 2:
            result = ip_hamming2(*factors)
        elif len(factors) == 3:
            result = ip_hamming3(*factors)
        else:
            raise InvalidSpecError("--hamming takes 2 or 3 factors")
    print(f"ip={result.value} case={result.case_tag}")
    return EXIT_OK


def _cmd_construct(args):
    if args.multipartite is not None:
        spec = PartiteSpec(_parse_sizes(args.multipartite))
        g = make_complete_multipartite(spec)
        cover = cover_multipartite(spec)
    else:
        factors = _parse_sizes(args.hamming)
        g = make_hamming(HammingSpec(factors))
        if len(factors) == 2:
            cover = cover_hamming2(*factors)
        elif len(factors) == 3:
            cover = cover_hamming3(*factors)
        else:
            raise InvalidSpecError("--hamming takes 2 or 3 factors")
    report = verify_cover(g, cover)
    if not report.valid:
        raise ConstructionError("constructed cover failed verification")
    text = format_cover(cover)
    if args.output:
        _write_text(args.output, text)
        print(f"size={report.size}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _report_lines(report):
    lines = [
        f"valid={'true' if report.valid else 'false'} size={report.size} "
        f"uncovered={len(report.uncovered)} overlap={report.overlap}"
    ]
    if report.normal_form is not None:
        lines.append(f"normal_form={'true' if report.normal_form else 'false'}")
    if report.uncovered:
        lines.append("uncovered_vertices=" + ",".join(str(v) for v in report.uncovered))
    for i, verdict in enumerate(report.path_verdicts):
        if not verdict.ok:
            lines.append(
                f"path={i} simple={'true' if verdict.simple else 'false'} "
                f"walk={'true' if verdict.walk else 'false'} "
                f"isometric={'true' if verdict.isometric else 'false'}"
            )
    return lines


def _cmd_verify(args):
    g = parse_graph(_read_text(args.graph))
    cover = parse_cover(_read_text(args.cover))
    report = verify_cover(g, cover, strict_normal_form=args.strict)
    for line in _report_lines(report):
        print(line)
    if args.dot:
        _write_text(args.dot, _graph_dot(g, cover))
    return EXIT_OK if report.valid else EXIT_UNPROVEN


def _cmd_solve(args):
    g = parse_graph(_read_text(args.graph))
    result = solve_min_cover(g, budget=args.budget)
    print(f"size={result.size}")
    print(f"nodes={result.nodes_explored}")
    print(f"proven={'true' if result.proof_of_optimality else 'false'}")
    if args.output:
        _write_text(args.output, format_cover(result.optimum))
    return EXIT_OK if result.proof_of_optimality else EXIT_UNPROVEN


def _cmd_paths(args):
    g = parse_graph(_read_text(args.graph))
    pool = enumerate_isometric_paths(g, all_pairs_distances(g))
    if args.count_only:
        print(f"count={len(pool.paths)}")
    else:
        for p in pool.paths:
            print(" ".join(str(v) for v in p.vertices))
    return EXIT_OK


def _selftest_instances(max_n):
    def partitions(total, largest, prefix, out):
        if total == 0:
            if len(prefix) >= 2:
                out.append(tuple(prefix))
            return
        for part in range(min(total, largest), 0, -1):
            partitions(total - part, part, prefix + [part], out)

    multi = []
    for n in range(2, max_n + 1):
        partitions(n, n, [], multi)
    hamming = []
    for a in range(2, 10):
        for b in range(a, 10):
            if a * b <= 18:
                hamming.append((a, b))
    for a in range(2, 5):
        for b in range(a, 5):
            for c in range(b, 7):
                if a * b * c <= 18:
                    hamming.append((a, b, c))
    return sorted(multi), sorted(hamming)


def _cmd_selftest(args):
    multi, hamming = _selftest_instances(args.max_n)
    passed = 0
    total = 0
    rows = []
    for key in multi:
        spec = PartiteSpec(key)
        want = ip_multipartite(spec).value
        got = solve_min_cover(make_complete_multipartite(spec)).size
        rows.append(("multipartite", key, want, got))
    for key in hamming:
        want = (ip_hamming2 if len(key) == 2 else ip_hamming3)(*key).value
        got = solve_min_cover(make_hamming(HammingSpec(key))).size
        rows.append(("hamming", key, want, got))
    rows.sort(key=lambda row: (row[0], row[1]))
    for family, key, want, got in rows:
        total += 1
        ok = want == got
        passed += ok
        spec_str = ",".join(str(s) for s in key)
        print(f"{family} {spec_str} formula={want} solver={got} {'ok' if ok else 'MISMATCH'}")
    verdict = "ok" if passed == total else "FAIL"
    print(f"selftest: {passed}/{total} {verdict}")
    return EXIT_OK if passed == total else EXIT_UNPROVEN


def build_parser():
    parser = argparse.ArgumentParser(
        prog="isopath",
        description="Isometric path covers: formulas, constructions, exact solving, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a family graph in the graph text format")
    family = gen.add_mutually_exclusive_group(required=True)
    family.add_argument("--multipartite", metavar="SIZES", help="part sizes, e.g. 3,3,2")
    family.add_argument("--hamming", metavar="FACTORS", help="factor sizes, e.g. 3,3,4")
    family.add_argument("--augmented", metavar="SIZES", help="part sizes for the augmented family")
    gen.add_argument("--pairs", metavar="PAIRS", help="per-part non-adjacent pairs, e.g. '0-1,2-3;0-1'")
    gen.add_argument("-o", "--output", default="-", help="output file (default stdout)")
    gen.add_argument("--dot", metavar="FILE", help="also write a DOT rendering")
    gen.set_defaults(func=_cmd_gen)

    formula = sub.add_parser("formula", help="print the closed-form isometric path number")
    family = formula.add_mutually_exclusive_group(required=True)
    family.add_argument("--multipartite", metavar="SIZES")
    family.add_argument("--hamming", metavar="FACTORS")
    formula.set_defaults(func=_cmd_formula)

    construct = sub.add_parser("construct", help="build an optimal cover and verify it")
    family = construct.add_mutually_exclusive_group(required=True)
    family.add_argument("--multipartite", metavar="SIZES")
    family.add_argument("--hamming", metavar="FACTORS")
    construct.add_argument("-o", "--output", help="cover file; prints size=N when given")
    construct.set_defaults(func=_cmd_construct)

    verify = sub.add_parser("verify", help="verify a cover file against a graph file")
    verify.add_argument("-g", "--graph", required=True)
    verify.add_argument("-c", "--cover", required=True)
    verify.add_argument("--strict", action="store_true", help="also require normal form")
    verify.add_argument("--dot", metavar="FILE", help="write a DOT rendering with paths colored")
    verify.set_defaults(func=_cmd_verify)

    solve = sub.add_parser("solve", help="exact minimum cover by branch and bound")
    solve.add_argument("-g", "--graph", required=True)
    solve.add_argument("--budget", type=int, help="node budget (default 10^8)")
    solve.add_argument("-o", "--output", help="write the optimum cover here")
    solve.set_defaults(func=_cmd_solve)

    paths = sub.add_parser("paths", help="enumerate the isometric path pool")
    paths.add_argument("-g", "--graph", required=True)
    paths.add_argument("--count-only", action="store_true")
    paths.set_defaults(func=_cmd_paths)

    selftest = sub.add_parser("selftest", help="formula-vs-solver sweep on small instances")
    selftest.add_argument("--max-n", type=int, default=8, help="multipartite vertex cap")
    selftest.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidSpecError, FormatError, OutOfRangeError, UnknownCoverKeyError,
            DisconnectedGraphError, PoolBudgetError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except ConstructionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
