"""Command-line interface: ``graphmorse build|gauge|verify``.

Exit codes: 0 ok, 1 invariant failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .errors import GraphMorseError, InputError
from .gauge import build_gauge
from .graph_model import Graph
from .pipeline import PipelineResult, run
from .random_graphs import complete_bipartite, complete_graph, random_graphs
from .trial_fix import RepairAssertion, TieBreak
from .verify import check_graph, invariant_failures

EXIT_OK, EXIT_INVARIANT, EXIT_INPUT = 0, 1, 2


# -- input ------------------------------------------------------------------


def parse_graph_text(text: str, json_hint: bool | None = None) -> dict:
    """Parse either input format into ``{"vertices", "edges", "tree", "root",
    "adjacency_order"}``."""
    stripped = text.lstrip()
    if json_hint or (json_hint is None and stripped.startswith("{")):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(exc.msg, exc.lineno) from None
        if not isinstance(data, dict) or "edges" not in data:
            raise InputError('JSON input must be an object with an "edges" list')
        edges = data["edges"]
        if not isinstance(edges, list) or any(not isinstance(e, list) or len(e) != 2 for e in edges):
            raise InputError('"edges" must be a list of [i, j] pairs')
        n = data.get("vertices")
        if n is None:
            n = max((max(e) for e in edges), default=1)
        order = data.get("adjacency_order")
        if order is not None:
            order = {int(k): v for k, v in order.items()}
        return {
            "vertices": int(n),
            "edges": [tuple(e) for e in edges],
            "tree": [tuple(e) for e in data["tree"]] if data.get("tree") is not None else None,
            "root": data.get("root"),
            "adjacency_order": order,
        }

    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise InputError(f"expected 'i j', got {line!r}", lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"non-integer vertex in {line!r}", lineno) from None
        if i < 1 or j < 1:
            raise InputError("vertices are 1-based", lineno)
        edges.append((i, j))
    if not edges:
        raise InputError("no edges in input")
    n = max(max(e) for e in edges)
    return {"vertices": n, "edges": edges, "tree": None, "root": None, "adjacency_order": None}


def load_input(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph_text(text, True if path.endswith(".json") else None)


def parse_tree_flag(text: str) -> list[tuple[int, int]]:
    """``"1-2,2-3"`` -> ``[(1, 2), (2, 3)]``."""
    try:
        return [tuple(int(x) for x in part.split("-")) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InputError(f"bad --tree value {text!r}; expected e.g. 1-2,2-3") from None


# -- reports ----------------------------------------------------------------


def _matrix_json(rows, cols, m) -> dict:
    return {"rows": [str(c) for c in rows], "cols": [str(c) for c in cols], "entries": m.tolist()}


def build_report(parsed: dict, result: PipelineResult, with_gauge: bool = True) -> dict:
    mc = result.morse
    crit = mc.critical
    report = {
        "input": {
            "vertices": parsed["vertices"],
            "edges": [list(e) for e in parsed["edges"]],
            "tree": [list(e) for e in parsed["tree"]] if parsed.get("tree") else None,
            "root": parsed.get("root"),
            "policy": result.policy.value,
        },
        "labels": {str(k): v for k, v in sorted(result.labels.items())},
        "tree": {
            "edges": [list(e) for e in sorted(result.tree.tree_edges)],
            "parent": {str(k): v for k, v in sorted(result.tree.parent.items())},
            "deleted_edges": [list(e) for e in result.f1.deleted_edges],
        },
        "f1": {
            "vertices": {str(k): v for k, v in sorted(result.f1.vertex_value.items())},
            "edges": {f"({a},{b})": v for (a, b), v in sorted(result.f1.edge_value.items())},
        },
        "complex": {"cells": [len(result.complex.cells(d)) for d in range(3)],
                    "euler_characteristic": result.complex.euler_characteristic()},
        "f2": {str(c): v for c, v in sorted(result.f2.items())},
        "repair": result.log.to_json(),
        "critical": {str(d): [str(c) for c in crit[d]] for d in range(3)},
        "morse_boundary": {
            "d1": _matrix_json(crit[0], crit[1], mc.boundary1_tilde),
            "d2": _matrix_json(crit[1], crit[2], mc.boundary2_tilde),
        },
        "homology": result.homology.to_json(),
        "oracle": result.oracle.to_json() if result.oracle else None,
        "agreement": result.agreement,
        "classification_match": result.prediction.all() == frozenset(result.field.critical),
    }
    if with_gauge:
        g = build_gauge(result.complex, result.field)
        report["gauge"] = {"parameters": len(g.params), "constraints": len(g.constraints)}
    return report


def emit_dot(result: PipelineResult, directory: str) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    g = result.graph
    lines = ["graph G {"]
    lines += [f'  "{v}" [label="{v}\\nf1={result.f1.vertex_value[v]}"];' for v in g.vertices]
    for e in g.sorted_edges():
        style = "solid" if e in result.tree.tree_edges else "dashed"
        lines.append(f'  "{e[0]}" -- "{e[1]}" [label="{result.f1.edge_value[e]}", style={style}];')
    lines.append("}")
    p1 = out / "graph.dot"
    p1.write_text("\n".join(lines) + "\n")
    labels = {
        c: f"f2={v}{' *' if result.field.is_critical(c) else ''}" for c, v in result.f2.items() if c.dim < 2
    }
    p2 = out / "d2.dot"
    p2.write_text(result.complex.to_dot(labels))
    return [p1, p2]


def _write(obj: dict, out: str | None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _graph_from_spec(parsed: dict) -> Graph:
    return Graph.from_edges(parsed["vertices"], parsed["edges"], parsed.get("adjacency_order"))


def _pipeline_from_args(args) -> tuple[dict, PipelineResult]:
    parsed = load_input(args.input)
    if args.tree:
        parsed["tree"] = parse_tree_flag(args.tree)
    if args.root is not None:
        parsed["root"] = args.root
    graph = _graph_from_spec(parsed)
    result = run(graph, parsed["tree"], parsed["root"], args.policy, oracle=not getattr(args, "no_oracle", False))
    return parsed, result


# -- commands ---------------------------------------------------------------


def cmd_build(args) -> int:
    t0 = time.perf_counter()
    parsed, result = _pipeline_from_args(args)
    report = build_report(parsed, result)
    if args.emit_dot:
        emit_dot(result, args.emit_dot)
    failures = invariant_failures(result)
    report["invariant_failures"] = failures
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - t0, 6)
    _write(report, args.out)
    return EXIT_INVARIANT if failures else EXIT_OK


def cmd_gauge(args) -> int:
    parsed, result = _pipeline_from_args(args)
    g = build_gauge(result.complex, result.field)
    body = g.to_json()
    body["input"] = {"vertices": parsed["vertices"], "edges": [list(e) for e in parsed["edges"]],
                     "policy": result.policy.value}
    body["parameters_independent"] = all(c.is_zero() for _, c in g.constraints)
    _write(body, args.out)
    return EXIT_OK


def _check_one(item):
    idx, n, edges = item
    graph = Graph.from_edges(n, edges)
    return idx, check_graph(graph)


def named_corpus() -> list[Graph]:
    return [complete_graph(4), complete_graph(5), complete_bipartite(3, 3), complete_bipartite(2, 3)]


def cmd_verify(args) -> int:
    if args.max_vertices > 10:
        print("error: --max-vertices must be at most 10", file=sys.stderr)
        return EXIT_INPUT
    if args.max_vertices < 2:
        print("error: --max-vertices must be at least 2", file=sys.stderr)
        return EXIT_INPUT
    lo = min(3, args.max_vertices)
    graphs = random_graphs(args.seed, args.samples, lo, args.max_vertices)
    if args.named:
        graphs += [g for g in named_corpus() if g.vertex_count <= args.max_vertices]
    items = [(i, g.vertex_count, g.sorted_edges()) for i, g in enumerate(graphs)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_check_one, items))
    else:
        results = [_check_one(it) for it in items]
    results.sort()
    for idx, fails in results:
        if fails:
            _, n, edges = items[idx]
            print(f"FAIL sample {idx}: " + "; ".join(fails))
            print(json.dumps({"vertices": n, "edges": [list(e) for e in edges]}))
            return EXIT_INVARIANT
    print(f"PASS {len(items)} graphs x 2 policies (seed {args.seed}, up to {args.max_vertices} vertices)")
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphmorse", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", help="graph file: JSON object or 'i j' edge list")
        p.add_argument("--policy", choices=[t.value for t in TieBreak], default="min")
        p.add_argument("--tree", help="spanning tree override, e.g. 1-2,2-3,2-4")
        p.add_argument("--root", type=int, help="tree root (must be a leaf of the tree)")
        p.add_argument("--out", help="write JSON here instead of stdout")

    b = sub.add_parser("build", help="run the pipeline and print a JSON report")
    common(b)
    b.add_argument("--emit-dot", metavar="DIR", help="write graph.dot and d2.dot into DIR")
    b.add_argument("--no-oracle", action="store_true", help="skip the brute-force homology check")
    b.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identical output)")
    b.set_defaults(func=cmd_build)

    g = sub.add_parser("gauge", help="print the topological gauge potential as JSON")
    common(g)
    g.set_defaults(func=cmd_gauge)

    v = sub.add_parser("verify", help="check all invariants on random graphs")
    v.add_argument("--max-vertices", type=int, default=8)
    v.add_argument("--samples", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--named", action="store_true", help="also check K4, K5, K3,3, K2,3")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except RepairAssertion as exc:
        print(f"error [trial_fix]: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except GraphMorseError as exc:
        print(f"error [{exc.module}]: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
