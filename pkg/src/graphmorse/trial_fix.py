"""Two-particle Morse function built from the one-particle one.

``trial_f2`` sums one-particle values over the two particles. That sum fails
the Morse conditions at two kinds of sites, both repaired by ``repair``:

* squares ``e(u) x e(v)`` of two disjoint parent edges (step 1), where the
  square ties with both ``u x e(v)`` and ``v x e(u)``;
* sibling 0-cells ``{u, v}`` with a common tree parent (step 3), which tie
  with the same two 1-cells.

Every other cell is shown to be fine (step 2 and the remaining 0-cell
classes); those arguments are re-checked here as assertions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .config_complex import Cell, TwoParticleComplex
from .discrete_morse import check_morse
from .graph_model import Edge, Graph, OneParticleMorse, RootedSpanningTree


class TieBreak(str, Enum):
    """Which of the two tied 1-cells ``u x e(v)`` / ``v x e(u)`` gets +1.

    ``MIN`` raises the one whose stationary vertex is the smaller label,
    ``MAX`` the other one.
    """

    MIN = "min"
    MAX = "max"

    def pick(self, u: int, v: int) -> tuple[int, int]:
        """Return ``(stationary, moving)`` for the raised cell."""
        lo, hi = min(u, v), max(u, v)
        return (lo, hi) if self is TieBreak.MIN else (hi, lo)


class RepairAssertion(AssertionError):
    """A claimed property of the trial function does not hold."""


@dataclass(frozen=True)
class Fix:
    site: Cell  # the 2-cell (step 1) or 0-cell (step 3)
    raised: Cell  # the 1-cell raised by +1
    amount: int = 1

    def to_json(self) -> dict:
        return {"site": str(self.site), "raised": str(self.raised), "amount": self.amount}


@dataclass
class RepairLog:
    step1_fixes: list[Fix] = field(default_factory=list)
    step3_fixes: list[Fix] = field(default_factory=list)
    tie_break_policy: TieBreak = TieBreak.MIN

    def raised_cells(self) -> list[Cell]:
        return [f.raised for f in self.step1_fixes + self.step3_fixes]

    def to_json(self) -> dict:
        return {
            "tie_break_policy": self.tie_break_policy.value,
            "step1_fixes": [f.to_json() for f in self.step1_fixes],
            "step3_fixes": [f.to_json() for f in self.step3_fixes],
        }


@dataclass(frozen=True)
class EdgeClasses:
    deleted: frozenset[Edge]  # D_v
    tree_other: frozenset[Edge]  # T_v
    parent_edge: Edge | None  # e(v)


def edge_classes(graph: Graph, tree: RootedSpanningTree) -> dict[int, EdgeClasses]:
    out = {}
    for v in graph.vertices:
        incident = {e for e in graph.edges if v in e}
        pe = tree.parent_edge(v) if v != tree.root else None
        out[v] = EdgeClasses(
            frozenset(incident - tree.tree_edges),
            frozenset((incident & tree.tree_edges) - {pe}),
            pe,
        )
    return out


def trial_f2(complex: TwoParticleComplex, f1: OneParticleMorse) -> dict[Cell, int]:
    values = {}
    for c in complex.cells0:
        u, v = c.key
        values[c] = f1.vertex_value[u] + f1.vertex_value[v]
    for c in complex.cells1:
        values[c] = f1.vertex_value[c.vertex] + f1.edge_value[c.edges[0]]
    for c in complex.cells2:
        e1, e2 = c.edges
        values[c] = f1.edge_value[e1] + f1.edge_value[e2]
    return values


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise RepairAssertion(msg)


def repair(
    complex: TwoParticleComplex,
    f2_trial: dict[Cell, int],
    tree: RootedSpanningTree,
    policy: TieBreak | str = TieBreak.MIN,
) -> tuple[dict[Cell, int], RepairLog]:
    """Turn the trial function into a discrete Morse function.

    The graph must carry preorder labels (every parent label below its
    child's). Raises ``RepairAssertion`` if any of the structural claims the
    repair relies on is false for the input.
    """
    policy = TieBreak(policy)
    graph = complex.graph
    root = tree.root
    _check(root == 1, "graph is not preorder-labelled (root must be 1)")
    for v, p in tree.parent.items():
        _check(p < v, f"parent {p} of {v} has a larger label")
    pe = {v: tree.parent_edge(v) for v in graph.vertices if v != root}
    owner = {e: v for v, e in pe.items()}  # tree edge -> the vertex it belongs to
    f = dict(f2_trial)
    log = RepairLog(tie_break_policy=policy)

    def faces_at_least(cell, vals):
        return [b for b in complex.faces(cell) if vals[b] >= vals[cell]]

    def cofaces_at_most(cell, vals):
        return [a for a in complex.cofaces(cell) if vals[a] <= vals[cell]]

    # step 1: squares
    for alpha in complex.cells2:
        e1, e2 = alpha.edges
        high = faces_at_least(alpha, f2_trial)
        if e1 in owner and e2 in owner:
            u, v = owner[e1], owner[e2]
            b1, b2 = Cell.vertex_edge(u, pe[v]), Cell.vertex_edge(v, pe[u])
            _check(
                sorted(high) == sorted([b1, b2])
                and f2_trial[b1] == f2_trial[alpha] == f2_trial[b2],
                f"square {alpha}: expected exactly {b1}, {b2} tied, got {high}",
            )
            s, m = policy.pick(u, v)
            raised = Cell.vertex_edge(s, pe[m])
            f[alpha] += 1
            f[raised] += 1
            log.step1_fixes.append(Fix(alpha, raised))
        else:
            _check(len(high) <= 1, f"square {alpha} with a deleted edge has faces {high} not below it")
            if e1 not in owner and e2 not in owner:
                _check(not high, f"square {alpha} of two deleted edges should be critical")
    f_bar = dict(f)

    # step 2: nothing to change; 1-cells already satisfy both conditions
    for beta in complex.cells1:
        low = cofaces_at_most(beta, f_bar)
        high = faces_at_least(beta, f_bar)
        _check(len(low) <= 1 and len(high) <= 1, f"1-cell {beta}: cofaces {low}, faces {high}")

    # step 3: vertex pairs
    for kappa in complex.cells0:
        u, v = kappa.key
        low = cofaces_at_most(kappa, f_bar)
        if u == root:
            expect = [] if v == 2 else [Cell.vertex_edge(u, pe[v])]
            _check(low == expect, f"0-cell {kappa}: expected {expect}, got {low}")
            continue
        eu, ev = pe[u], pe[v]
        if set(eu) & set(ev):
            if tree.parent[u] == tree.parent[v]:
                b1, b2 = Cell.vertex_edge(u, ev), Cell.vertex_edge(v, eu)
                _check(
                    sorted(low) == sorted([b1, b2]) and f_bar[b1] == f_bar[kappa] == f_bar[b2],
                    f"sibling 0-cell {kappa}: expected ties {b1}, {b2}, got {low}",
                )
                s, m = policy.pick(u, v)
                raised = Cell.vertex_edge(s, pe[m])
                f[raised] += 1
                log.step3_fixes.append(Fix(kappa, raised))
            else:
                child, par = (v, u) if tree.parent[v] == u else (u, v)
                _check(tree.parent[child] == par, f"0-cell {kappa}: unexpected tree relation")
                expect = [Cell.vertex_edge(child, pe[par])]
                _check(low == expect, f"0-cell {kappa}: expected {expect}, got {low}")
        else:
            _check(len(low) == 1, f"0-cell {kappa} with disjoint parent edges: got {low}")

    raised = log.raised_cells()
    _check(len(raised) == len(set(raised)), "a 1-cell was raised twice")
    violations = check_morse(complex, f)
    _check(not violations, "repaired function is not Morse: " + "; ".join(map(str, violations)))
    return f, log


@dataclass(frozen=True)
class CriticalPrediction:
    dim0: frozenset[Cell]
    dim1: frozenset[Cell]
    dim2: frozenset[Cell]

    def by_dim(self, dim: int) -> frozenset[Cell]:
        return (self.dim0, self.dim1, self.dim2)[dim]

    def all(self) -> frozenset[Cell]:
        return self.dim0 | self.dim1 | self.dim2


def classify_critical(
    graph: Graph, tree: RootedSpanningTree, policy: TieBreak | str = TieBreak.MIN
) -> CriticalPrediction:
    """Closed-form critical cells of the repaired function, without building it."""
    policy = TieBreak(policy)
    root = tree.root
    deleted = sorted(graph.edges - tree.tree_edges)
    pe = {v: tree.parent_edge(v) for v in graph.vertices if v != root}

    dim0 = frozenset({Cell.pair(1, 2)}) if graph.vertex_count >= 2 else frozenset()
    dim2 = frozenset(
        Cell.square(a, b) for i, a in enumerate(deleted) for b in deleted[i + 1 :] if not set(a) & set(b)
    )
    dim1 = set()
    for e in deleted:
        for v in graph.vertices:
            if v in e:
                continue
            if v == root or set(pe[v]) & set(e):
                dim1.add(Cell.vertex_edge(v, e))
    non_root = [v for v in graph.vertices if v != root]
    for i, u in enumerate(non_root):
        for v in non_root[i + 1 :]:
            if tree.parent[u] == tree.parent[v]:
                s, m = policy.pick(u, v)
                dim1.add(Cell.vertex_edge(s, pe[m]))
    return CriticalPrediction(dim0, frozenset(dim1), dim2)
