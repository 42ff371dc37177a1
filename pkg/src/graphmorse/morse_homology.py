"""Morse complex of a gradient field and first homology over the integers.

Two independent routes to H1 live here:

* ``morse_boundary`` + ``homology_h1`` -- the small chain complex on
  critical cells;
* ``cellular_homology_oracle`` -- Smith normal form of the full boundary
  matrices, no Morse theory involved.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .complex import CellComplex
from .discrete_morse import GradientField, enumerate_vpaths
from .errors import NonTermination
from .snf import IntegerMatrix, smith_normal_form


@dataclass
class MorseComplex:
    critical: dict[int, list]  # dim -> ordered critical cells
    boundary1_tilde: IntegerMatrix  # rows: critical 0-cells, cols: critical 1-cells
    boundary2_tilde: IntegerMatrix  # rows: critical 1-cells, cols: critical 2-cells

    def column(self, dim: int, cell) -> dict:
        """Morse boundary of a critical cell as ``{critical face: coefficient}``."""
        m = self.boundary1_tilde if dim == 1 else self.boundary2_tilde
        j = self.critical[dim].index(cell)
        return {c: m[i, j] for i, c in enumerate(self.critical[dim - 1]) if m[i, j]}

    def counts(self) -> tuple[int, int, int]:
        return tuple(len(self.critical.get(d, [])) for d in range(3))


@dataclass(frozen=True)
class HomologyResult:
    free_rank: int
    torsion: tuple[int, ...] = ()
    h0_rank: int | None = None
    h2_rank: int | None = None  # informational only

    def same_h1(self, other: "HomologyResult") -> bool:
        return self.free_rank == other.free_rank and self.torsion == other.torsion

    def to_json(self) -> dict:
        out = {"h1_free_rank": self.free_rank, "h1_torsion": list(self.torsion)}
        if self.h0_rank is not None:
            out["h0_rank"] = self.h0_rank
        if self.h2_rank is not None:
            out["h2_rank"] = self.h2_rank
        return out

    def __str__(self) -> str:
        parts = ([f"Z^{self.free_rank}"] if self.free_rank else []) + [f"Z_{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def tail_order(field: GradientField) -> dict:
    """Rank of every tail cell in a topological order of the flow (a tail
    comes before every tail it can flow into)."""
    cx = field.complex
    order: list = []
    state: dict = {}
    for start, _ in sorted(field.pairs):
        if start in state:
            continue
        state[start] = 1
        stack = [(start, iter(sorted(cx.faces(field.partner_up(start)))))]
        while stack:
            node, it = stack[-1]
            for nxt in it:
                if nxt == node or not field.is_tail(nxt):
                    continue
                if state.get(nxt) == 1:
                    raise NonTermination(f"closed V-path through {nxt}")
                if nxt not in state:
                    state[nxt] = 1
                    stack.append((nxt, iter(sorted(cx.faces(field.partner_up(nxt))))))
                    break
            else:
                state[node] = 2
                order.append(node)
                stack.pop()
    return {c: i for i, c in enumerate(reversed(order))}


def flow_to_critical(field: GradientField, chain: dict, order: dict | None = None) -> dict:
    """Push a chain down the gradient until no tail cell remains, then keep
    only critical cells.

    Each tail ``a`` paired with ``b`` is cancelled with
    ``c <- c - <c,a> <db,a> db``; heads are dropped since their flow image
    never reaches a critical cell. Tails are cancelled in flow order, so each
    is cancelled at most once.
    """
    cx = field.complex
    if order is None:
        order = tail_order(field)
    chain = {c: k for c, k in chain.items() if k}
    heap = [(order[c], c) for c in chain if c in order]
    heapq.heapify(heap)
    queued = {c for _, c in heap}
    bound = len(field.pairs) + 1
    steps = 0
    while heap:
        _, a = heapq.heappop(heap)
        queued.discard(a)
        if a not in chain:
            continue
        steps += 1
        if steps > bound:
            raise NonTermination("gradient flow did not terminate; field is cyclic")
        b = field.partner_up(a)
        bd = cx.boundary(b)
        factor = chain[a] * bd[a]
        for face, coef in bd.items():
            val = chain.get(face, 0) - factor * coef
            if val:
                chain[face] = val
                if face in order and face not in queued:
                    if order[face] <= order[a] and face != a:
                        raise NonTermination(f"flow revisited {face}")
                    heapq.heappush(heap, (order[face], face))
                    queued.add(face)
            else:
                chain.pop(face, None)
    return {c: k for c, k in chain.items() if field.is_critical(c)}


def _matrix(rows: list, cols: list, columns: list[dict]) -> IntegerMatrix:
    index = {c: i for i, c in enumerate(rows)}
    m = IntegerMatrix(len(rows), len(cols))
    for j, col in enumerate(columns):
        for c, k in col.items():
            m.entries[index[c]][j] = k
    return m


def morse_boundary(complex: CellComplex, field: GradientField) -> MorseComplex:
    crit = {d: field.critical_of_dim(d) for d in range(3)}
    order = tail_order(field)
    mats = {}
    for d in (1, 2):
        cols = [flow_to_critical(field, complex.boundary(c), order) for c in crit[d]]
        mats[d] = _matrix(crit[d - 1], crit[d], cols)
    return MorseComplex(crit, mats[1], mats[2])


def vpath_boundary(complex: CellComplex, field: GradientField) -> MorseComplex:
    """Same matrices as ``morse_boundary``, computed by summing signed V-paths
    out of each boundary face (exponential in general; small inputs only)."""
    crit = {d: field.critical_of_dim(d) for d in range(3)}
    mats = {}
    for d in (1, 2):
        columns = []
        for c in crit[d]:
            col: dict = {}
            for face, coef in complex.boundary(c).items():
                for path in enumerate_vpaths(field, [face]):
                    col[path.end] = col.get(path.end, 0) + coef * path.sign
            columns.append({k: v for k, v in col.items() if v})
        mats[d] = _matrix(crit[d - 1], crit[d], columns)
    return MorseComplex(crit, mats[1], mats[2])


def homology_h1(mc: MorseComplex) -> HomologyResult:
    n0, n1, n2 = mc.counts()
    _, r1 = smith_normal_form(mc.boundary1_tilde)
    f2, r2 = smith_normal_form(mc.boundary2_tilde)
    return HomologyResult(
        free_rank=n1 - r1 - r2,
        torsion=tuple(d for d in f2 if d > 1),
        h0_rank=n0 - r1,
        h2_rank=n2 - r2,
    )


def cellular_homology_oracle(complex: CellComplex) -> HomologyResult:
    """H0, H1 (and H2) straight from the cellular boundary matrices."""
    n0, n1, n2 = (len(complex.cells(d)) for d in range(3))
    _, r1 = smith_normal_form(complex.boundary_matrix(1))
    f2, r2 = smith_normal_form(complex.boundary_matrix(2))
    return HomologyResult(
        free_rank=n1 - r1 - r2,
        torsion=tuple(d for d in f2 if d > 1),
        h0_rank=n0 - r1,
        h2_rank=n2 - r2,
    )


def is_perfect(mc: MorseComplex, oracle: HomologyResult) -> bool:
    """Critical counts equal the Betti numbers in every dimension."""
    n0, n1, n2 = mc.counts()
    return (n0, n1, n2) == (oracle.h0_rank, oracle.free_rank, oracle.h2_rank)
