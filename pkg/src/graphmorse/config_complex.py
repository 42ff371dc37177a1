"""The discrete two-particle configuration space D2(G) of a graph.

Cells are unordered pairs of closed-disjoint cells of the graph:

* dim 0: a vertex pair ``{u, v}``                 -- printed ``(u,v)``
* dim 1: a vertex and an edge missing it ``v x e`` -- printed ``vx(j,k)``
* dim 2: two disjoint edges ``e1 x e2``            -- printed ``(a,b)x(c,d)``

Orientation: ``v x (j,k)`` with ``j < k`` runs from ``(v,j)`` to ``(v,k)``;
a square ``(a,b) x (c,d)`` (``a`` the smallest of the four vertices) has
boundary ``b x e2 - a x e2 - d x e1 + c x e1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .complex import CellComplex
from .errors import TooSmall
from .graph_model import Edge, Graph, edge


@dataclass(frozen=True, order=True)
class Cell:
    dim: int
    key: tuple[int, ...]

    @classmethod
    def pair(cls, u: int, v: int) -> "Cell":
        if u == v:
            raise ValueError(f"0-cell needs distinct vertices, got {u}")
        return cls(0, (u, v) if u < v else (v, u))

    @classmethod
    def vertex_edge(cls, v: int, e: Iterable[int]) -> "Cell":
        j, k = edge(*e)
        if v in (j, k):
            raise ValueError(f"vertex {v} lies on edge {(j, k)}")
        return cls(1, (v, j, k))

    @classmethod
    def square(cls, e1: Iterable[int], e2: Iterable[int]) -> "Cell":
        e1, e2 = edge(*e1), edge(*e2)
        if set(e1) & set(e2):
            raise ValueError(f"edges {e1} and {e2} are not disjoint")
        if e2[0] < e1[0]:
            e1, e2 = e2, e1
        return cls(2, e1 + e2)

    @classmethod
    def parse(cls, text: str) -> "Cell":
        """Inverse of ``str``: ``"(1,2)"``, ``"3x(2,4)"``, ``"(1,3)x(4,5)"``."""
        nums = [int(x) for x in re.findall(r"\d+", text)]
        s = text.replace(" ", "")
        if len(nums) == 2 and "x" not in s:
            return cls.pair(*nums)
        if len(nums) == 3:
            return cls.vertex_edge(nums[0], nums[1:])
        if len(nums) == 4:
            return cls.square(nums[:2], nums[2:])
        raise ValueError(f"cannot parse cell {text!r}")

    @property
    def vertex(self) -> int:
        """The stationary particle of a 1-cell."""
        assert self.dim == 1
        return self.key[0]

    @property
    def edges(self) -> tuple[Edge, ...]:
        if self.dim == 1:
            return (self.key[1:],)
        if self.dim == 2:
            return (self.key[:2], self.key[2:])
        return ()

    @property
    def endpoints(self) -> tuple["Cell", "Cell"]:
        """(start, end) 0-cells of a 1-cell in its canonical direction."""
        v, j, k = self.key
        return Cell.pair(v, j), Cell.pair(v, k)

    def __str__(self) -> str:
        k = self.key
        if self.dim == 0:
            return f"({k[0]},{k[1]})"
        if self.dim == 1:
            return f"{k[0]}x({k[1]},{k[2]})"
        return f"({k[0]},{k[1]})x({k[2]},{k[3]})"

    def __repr__(self) -> str:
        return f"Cell({str(self)!r})"


def cell_boundary(cell: Cell) -> dict[Cell, int]:
    if cell.dim == 0:
        return {}
    if cell.dim == 1:
        v, j, k = cell.key
        return {Cell.pair(v, k): 1, Cell.pair(v, j): -1}
    a, b, c, d = cell.key
    e1, e2 = (a, b), (c, d)
    return {
        Cell.vertex_edge(b, e2): 1,
        Cell.vertex_edge(a, e2): -1,
        Cell.vertex_edge(d, e1): -1,
        Cell.vertex_edge(c, e1): 1,
    }


class TwoParticleComplex(CellComplex):
    def __init__(self, graph: Graph, cells0, cells1, cells2):
        self.graph = graph
        all_cells = [*cells0, *cells1, *cells2]
        super().__init__({0: cells0, 1: cells1, 2: cells2}, {c: cell_boundary(c) for c in all_cells})

    @property
    def cells0(self) -> list[Cell]:
        return self.cells(0)

    @property
    def cells1(self) -> list[Cell]:
        return self.cells(1)

    @property
    def cells2(self) -> list[Cell]:
        return self.cells(2)

    def to_dot(self, labels: dict[Cell, str] | None = None) -> str:
        """The 1-skeleton in Graphviz DOT, edges labelled by their cell names."""
        labels = labels or {}
        lines = ["graph D2 {"]
        for c in self.cells0:
            extra = f"\\n{labels[c]}" if c in labels else ""
            lines.append(f'  "{c}" [label="{c}{extra}"];')
        for c in self.cells1:
            s, t = c.endpoints
            extra = f"\\n{labels[c]}" if c in labels else ""
            lines.append(f'  "{s}" -- "{t}" [label="{c}{extra}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_d2(graph: Graph) -> TwoParticleComplex:
    if graph.vertex_count < 2:
        raise TooSmall("two particles need at least two vertices")
    verts = list(graph.vertices)
    edges = graph.sorted_edges()
    cells0 = [Cell.pair(u, v) for u, v in combinations(verts, 2)]
    cells1 = sorted(Cell.vertex_edge(v, e) for e in edges for v in verts if v not in e)
    cells2 = sorted(
        Cell.square(e1, e2) for e1, e2 in combinations(edges, 2) if not set(e1) & set(e2)
    )
    return TwoParticleComplex(graph, cells0, cells1, cells2)


def euler_characteristic(complex: CellComplex) -> int:
    return complex.euler_characteristic()


@dataclass
class AbramsReport:
    n: int
    condition1: bool
    condition2: bool
    short_paths: list[list[int]]
    short_cycles: list[list[int]]

    @property
    def holds(self) -> bool:
        return self.condition1 and self.condition2


def _simple_paths(graph: Graph, start: int, max_edges: int):
    """All simple paths from ``start`` with 1..max_edges edges."""
    stack = [[start]]
    while stack:
        path = stack.pop()
        if len(path) > 1:
            yield path
        if len(path) - 1 < max_edges:
            for w in graph.neighbors(path[-1]):
                if w not in path:
                    stack.append(path + [w])


def check_abrams(graph: Graph, n: int) -> AbramsReport:
    """Check both conditions under which D^n(G) is homotopy equivalent to the
    unordered configuration space of ``n`` points.

    Witnesses are every simple path between distinct vertices of valence != 2
    with fewer than n-1 edges, and every cycle with fewer than n+1 edges.
    Exhaustive; meant for small graphs.
    """
    if n < 1:
        raise ValueError("n must be positive")
    essential = {v for v in graph.vertices if graph.degree(v) != 2}
    short_paths = []
    for u in sorted(essential):
        for path in _simple_paths(graph, u, n - 2):
            if path[-1] in essential and path[-1] > u:
                short_paths.append(path)
    short_cycles = []
    for v in graph.vertices:
        for path in _simple_paths(graph, v, n - 1):
            # record each cycle once: start at its minimum, second vertex < last
            if len(path) >= 3 and path[0] in graph.neighbors(path[-1]):
                if min(path) == v and path[1] < path[-1]:
                    short_cycles.append(path + [v])
    return AbramsReport(n, not short_paths, not short_cycles, sorted(short_paths), sorted(short_cycles))
