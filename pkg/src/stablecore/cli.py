"""Command-line front door: analyze trees, generate corpora, verify claims.

Input trees use a plain edge-list text format: lines starting with '#' are
comments, the first data line is the vertex count n, and each of the
following n-1 data lines is an edge "u v" with 0-based endpoints.

Exit codes: 0 success, 1 usage error, 2 parse/validation error, 3 at least
one claim refuted during ``verify`` (distinct from a harness crash).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Iterable

from .bonding import vertex_bond
from .errors import ParseError, StablecoreError
from .graph_model import Tree, tree_from_edges
from .harness import (
    CLAIM_IDS,
    ClaimResult,
    CorpusSpec,
    Verdict,
    iter_corpus,
    run_suite,
)
from .independence import AnalysisReport, analyze


def parse_tree_text(text: str) -> Tree:
    """Parse the edge-list format. Raises ParseError with the offending
    1-based line number, or NotATree/OutOfRange from tree validation."""
    n = None
    edges: list[tuple[int, int]] = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise ParseError(f"expected the vertex count, got {line!r}", line=lineno)
            try:
                n = int(fields[0])
            except ValueError:
                raise ParseError(f"vertex count is not an integer: {line!r}", line=lineno)
            continue
        if len(edges) == n - 1:
            raise ParseError(f"expected {n - 1} edges, found extra data {line!r}", line=lineno)
        if len(fields) != 2:
            raise ParseError(f"expected an edge 'u v', got {line!r}", line=lineno)
        try:
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise ParseError(f"edge endpoints are not integers: {line!r}", line=lineno)
    if n is None:
        raise ParseError("no data lines found", line=last_line or 1)
    if len(edges) != n - 1:
        raise ParseError(
            f"edge count mismatch: expected {n - 1}, found {len(edges)}", line=last_line
        )
    return tree_from_edges(n, edges)


def parse_tree_file(path: str) -> Tree:
    if path == "-":
        return parse_tree_text(sys.stdin.read())
    return parse_tree_text(Path(path).read_text(encoding="utf-8"))


def format_tree_file(t: Tree) -> str:
    """Edge-list text document; ``parse_tree_text`` inverts it exactly."""
    lines = [str(t.n)]
    lines.extend(f"{u} {v}" for u, v in t.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Reports


def report_to_obj(rep: AnalysisReport) -> dict:
    return {
        "n": rep.n,
        "alpha": rep.alpha,
        "mu": rep.mu,
        "xi": rep.xi,
        "core": sorted(rep.core),
        "pendants": sorted(rep.pendants),
        "bipartition": {"a": sorted(rep.bipartition.a), "b": sorted(rep.bipartition.b)},
        "perfect_matching": rep.has_perfect_matching,
        "strong_unique": rep.strong_unique,
        "num_maximum_stable_sets": rep.num_maximum_stable_sets,
    }


def claim_result_to_obj(res: ClaimResult) -> dict:
    return {"claim": res.claim, "tree": res.tree, "status": res.status, "witness": res.witness}


def verdict_to_obj(v: Verdict) -> dict:
    return {
        "claim": v.claim,
        "corpus": {
            "mode": v.corpus.mode,
            "n_min": v.corpus.n_min,
            "n_max": v.corpus.n_max,
            "sample_size": v.corpus.sample_size,
            "seed": v.corpus.seed,
            "dedup_isomorphism": v.corpus.dedup_isomorphism,
        },
        "checked": v.checked,
        "held": v.held,
        "refuted": v.refuted,
        "skipped": v.skipped,
        "witnesses": [claim_result_to_obj(w) for w in v.witnesses],
    }


def write_report(item) -> str:
    """Byte-stable JSON for an AnalysisReport, a Verdict, or a list of them."""
    if isinstance(item, AnalysisReport):
        obj = report_to_obj(item)
    elif isinstance(item, Verdict):
        obj = verdict_to_obj(item)
    else:
        obj = [
            report_to_obj(x) if isinstance(x, AnalysisReport) else verdict_to_obj(x)
            for x in item
        ]
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def export_dot(t: Tree, rep: AnalysisReport) -> str:
    """Undirected DOT document: core vertices filled, pendant vertices boxed."""
    lines = ["graph tree {"]
    for v in range(t.n):
        attrs = []
        if v in rep.core:
            attrs.append("style=filled, fillcolor=lightblue")
        if v in rep.pendants:
            attrs.append("shape=box")
        if attrs:
            lines.append(f"  {v} [{', '.join(attrs)}];")
    lines.extend(f"  {u} -- {v};" for u, v in t.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Commands


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _cmd_analyze(args) -> int:
    try:
        t = parse_tree_file(args.file)
    except StablecoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rep = analyze(t)
    if args.json is None and args.dot is None:
        sys.stdout.write(write_report(rep))
        return 0
    if args.json is not None:
        _emit(write_report(rep), args.json)
    if args.dot is not None:
        _emit(export_dot(t, rep), args.dot)
    return 0


def _cmd_gen(args) -> int:
    if args.random:
        spec = CorpusSpec(
            mode="random", n_min=args.n, n_max=args.n,
            sample_size=args.count, seed=args.seed,
            dedup_isomorphism=args.dedup_iso,
        )
    else:
        spec = CorpusSpec(
            mode="exhaustive", n_min=args.n, n_max=args.n,
            dedup_isomorphism=args.dedup_iso,
        )
    try:
        trees = list(iter_corpus(spec))
    except StablecoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out is None or args.out == "-":
        sys.stdout.write("\n".join(format_tree_file(t) for t in trees))
        return 0
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    width = max(5, len(str(max(len(trees) - 1, 0))))
    for i, t in enumerate(trees):
        (out_dir / f"tree_{i:0{width}d}.txt").write_text(
            format_tree_file(t), encoding="utf-8"
        )
    print(f"wrote {len(trees)} trees to {out_dir}")
    return 0


def _parse_claims(raw: str) -> list[str]:
    if raw == "all":
        return list(CLAIM_IDS)
    claims = [c.strip() for c in raw.split(",") if c.strip()]
    unknown = [c for c in claims if c not in CLAIM_IDS]
    if unknown:
        raise StablecoreError(
            f"unknown claims: {', '.join(unknown)} (valid: all, {', '.join(CLAIM_IDS)})"
        )
    return claims


def _cmd_verify(args) -> int:
    try:
        claims = _parse_claims(args.claims)
        spec = CorpusSpec(
            mode=args.mode, n_min=args.n_min, n_max=args.n_max,
            sample_size=args.sample, seed=args.seed if args.mode == "random" else None,
            dedup_isomorphism=args.dedup_iso,
        )
        verdicts = run_suite(claims, spec, jobs=args.jobs)
    except StablecoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(write_report(verdicts), args.out)
    if args.out != "-":
        for v in verdicts:
            print(
                f"{v.claim}: checked={v.checked} held={v.held} "
                f"refuted={v.refuted} skipped={v.skipped}"
            )
    if any(v.refuted for v in verdicts):
        return 3
    return 0


def _cmd_bond(args) -> int:
    try:
        t1 = parse_tree_file(args.file1)
        t2 = parse_tree_file(args.file2)
    except StablecoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not 0 <= args.v1 < t1.n or not 0 <= args.v2 < t2.n:
        print("error: bond vertex outside its tree", file=sys.stderr)
        return 1
    bond = vertex_bond(t1, args.v1, t2, args.v2)
    _emit(format_tree_file(bond.tree), args.out)
    return 0


def _cmd_convert(args) -> int:
    try:
        t = parse_tree_file(args.file)
    except StablecoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(export_dot(t, analyze(t)), args.dot)
    return 0


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1; argparse's default would exit 2
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stablecore", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="stability structure of one tree")
    p.add_argument("file", help="edge-list file, or - for stdin")
    p.add_argument("--json", metavar="OUT", help="write the JSON report here (- for stdout)")
    p.add_argument("--dot", metavar="OUT", help="write a DOT drawing here (- for stdout)")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("gen", help="generate a tree corpus")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--random", action="store_true", help="seeded uniform labeled trees")
    mode.add_argument("--exhaustive", action="store_true", help="every labeled tree on n vertices")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--count", type=int, help="number of random trees")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dedup-iso", action="store_true", help="drop isomorphic duplicates")
    p.add_argument("--out", metavar="DIR|-", help="directory for one file per tree; - for stdout")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", help="run claim suites over a corpus")
    p.add_argument("--claims", required=True, help="comma-separated claim ids, or 'all'")
    p.add_argument("--mode", choices=["exhaustive", "random"], required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--sample", type=int, help="sample size (random mode)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1, help="worker count; never changes output bytes")
    p.add_argument("--dedup-iso", action="store_true")
    p.add_argument("--out", required=True, metavar="FILE|-", help="JSON report destination")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bond", help="glue two trees at one vertex")
    p.add_argument("file1")
    p.add_argument("v1", type=int)
    p.add_argument("file2")
    p.add_argument("v2", type=int)
    p.add_argument("--out", metavar="FILE|-")
    p.set_defaults(func=_cmd_bond)

    p = sub.add_parser("convert", help="edge-list to annotated DOT")
    p.add_argument("file")
    p.add_argument("--dot", required=True, metavar="OUT")
    p.set_defaults(func=_cmd_convert)
    return parser


def main(argv: Iterable[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    if args.command == "gen" and args.random and args.count is None:
        parser.error("--random needs --count")
    if args.command == "verify" and args.mode == "random" and args.sample is None:
        parser.error("--mode random needs --sample")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
