"""Input graph, rooted spanning tree with preorder labels, and the perfect
one-particle Morse function on the graph.

Edges are stored as sorted vertex tuples ``(i, j)`` with ``i < j``; vertices
are the integers ``1..vertex_count``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .complex import CellComplex
from .errors import BadRoot, Disconnected, GraphError, NotATree

Edge = tuple[int, int]


def edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


class _UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


@dataclass(frozen=True)
class Graph:
    """Simple connected graph on vertices ``1..vertex_count``.

    ``adjacency[v - 1]`` is the neighbour list of ``v`` in traversal order.
    """

    vertex_count: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[Sequence[int]],
        adjacency_order: dict[int, Sequence[int]] | None = None,
    ) -> "Graph":
        if vertex_count < 1:
            raise GraphError("a graph needs at least one vertex")
        seen: list[Edge] = []
        canon: set[Edge] = set()
        for pair in edges:
            if len(pair) != 2:
                raise GraphError(f"edge {pair!r} must have two endpoints")
            i, j = int(pair[0]), int(pair[1])
            if i == j:
                raise GraphError(f"loop at vertex {i} (graph must be simple)")
            for x in (i, j):
                if not 1 <= x <= vertex_count:
                    raise GraphError(f"vertex {x} outside 1..{vertex_count}")
            e = edge(i, j)
            if e in canon:
                raise GraphError(f"duplicate edge {e} (graph must be simple)")
            canon.add(e)
            seen.append((i, j))

        adj: dict[int, list[int]] = {v: [] for v in range(1, vertex_count + 1)}
        for i, j in seen:
            adj[i].append(j)
            adj[j].append(i)
        if adjacency_order:
            for v, order in adjacency_order.items():
                v = int(v)
                order = [int(x) for x in order]
                if v not in adj or sorted(order) != sorted(adj[v]):
                    raise GraphError(f"adjacency order for vertex {v} does not list its neighbours")
                adj[v] = order

        graph = cls(
            vertex_count,
            frozenset(canon),
            tuple(tuple(adj[v]) for v in range(1, vertex_count + 1)),
        )
        if not graph.is_connected():
            raise Disconnected("graph is not connected")
        return graph

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v - 1]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v - 1])

    def is_connected(self) -> bool:
        uf = _UnionFind(self.vertices)
        for i, j in self.edges:
            uf.union(i, j)
        return len({uf.find(v) for v in self.vertices}) == 1

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def as_complex(self) -> CellComplex:
        """The graph as a 1-dimensional cell complex (edge ``(i,j)``: ``j - i``)."""
        bd = {e: {e[1]: 1, e[0]: -1} for e in self.sorted_edges()}
        return CellComplex({0: list(self.vertices), 1: self.sorted_edges()}, bd)


@dataclass(frozen=True)
class RootedSpanningTree:
    tree_edges: frozenset[Edge]
    parent: dict[int, int] = field(hash=False)
    root: int

    def parent_edge(self, v: int) -> Edge:
        """The tree edge e(v) joining ``v`` to its parent."""
        return edge(v, self.parent[v])

    def terminal(self, v: int) -> int:
        return self.parent[v]

    def children(self, graph: Graph, v: int) -> list[int]:
        return [w for w in graph.neighbors(v) if self.parent.get(w) == v]


def _tree_parents(vertices: Iterable[int], tree_edges: Iterable[Edge], root: int) -> dict[int, int]:
    nbrs: dict[int, list[int]] = {v: [] for v in vertices}
    for i, j in tree_edges:
        nbrs[i].append(j)
        nbrs[j].append(i)
    parent: dict[int, int] = {}
    stack = [root]
    seen = {root}
    while stack:
        v = stack.pop()
        for w in nbrs[v]:
            if w not in seen:
                seen.add(w)
                parent[w] = v
                stack.append(w)
    return parent


def _dfs_tree(graph: Graph, start: int) -> frozenset[Edge]:
    tree: set[Edge] = set()
    seen = {start}
    stack = [(start, iter(graph.neighbors(start)))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if w not in seen:
                seen.add(w)
                tree.add(edge(v, w))
                stack.append((w, iter(graph.neighbors(w))))
                break
        else:
            stack.pop()
    return frozenset(tree)


def build_spanning_tree(
    graph: Graph,
    requested_tree: Iterable[Sequence[int]] | None = None,
    requested_root: int | None = None,
) -> RootedSpanningTree:
    """Rooted spanning tree; defaults to the DFS tree from vertex 1 rooted at
    its lowest-index leaf."""
    if not graph.is_connected():
        raise Disconnected("graph is not connected")
    n = graph.vertex_count
    if requested_tree is not None:
        tree_edges = frozenset(edge(int(a), int(b)) for a, b in requested_tree)
        missing = tree_edges - graph.edges
        if missing:
            raise NotATree(f"tree edges {sorted(missing)} are not edges of the graph")
        if len(tree_edges) != n - 1:
            raise NotATree(f"a spanning tree on {n} vertices has {n - 1} edges, got {len(tree_edges)}")
        uf = _UnionFind(graph.vertices)
        for i, j in tree_edges:
            if not uf.union(i, j):
                raise NotATree(f"tree edges contain a cycle through {(i, j)}")
    else:
        tree_edges = _dfs_tree(graph, 1)

    valency = {v: 0 for v in graph.vertices}
    for i, j in tree_edges:
        valency[i] += 1
        valency[j] += 1
    if requested_root is not None:
        root = int(requested_root)
        if root not in valency:
            raise BadRoot(f"root {root} is not a vertex")
        if n > 1 and valency[root] != 1:
            raise BadRoot(f"root {root} has tree valency {valency[root]}, expected 1")
    else:
        root = 1 if n == 1 else min(v for v in graph.vertices if valency[v] == 1)

    return RootedSpanningTree(tree_edges, _tree_parents(graph.vertices, tree_edges, root), root)


def preorder_labels(graph: Graph, tree: RootedSpanningTree) -> dict[int, int]:
    """Map old vertex -> new label by DFS preorder from the root, children in
    adjacency order."""
    labels: dict[int, int] = {}
    stack = [tree.root]
    while stack:
        v = stack.pop()
        labels[v] = len(labels) + 1
        stack.extend(reversed(tree.children(graph, v)))
    return labels


def relabel_by_tree(graph: Graph, tree: RootedSpanningTree) -> tuple[Graph, RootedSpanningTree]:
    labels = preorder_labels(graph, tree)
    new_adj = [()] * graph.vertex_count
    for v in graph.vertices:
        new_adj[labels[v] - 1] = tuple(labels[w] for w in graph.neighbors(v))
    new_graph = Graph(
        graph.vertex_count,
        frozenset(edge(labels[i], labels[j]) for i, j in graph.edges),
        tuple(new_adj),
    )
    new_tree_edges = frozenset(edge(labels[i], labels[j]) for i, j in tree.tree_edges)
    new_parent = {labels[v]: labels[p] for v, p in tree.parent.items()}
    return new_graph, RootedSpanningTree(new_tree_edges, new_parent, labels[tree.root])


@dataclass(frozen=True)
class OneParticleMorse:
    vertex_value: dict[int, int]
    edge_value: dict[Edge, int]
    deleted_edges: tuple[Edge, ...]

    def __call__(self, cell) -> int:
        if isinstance(cell, tuple):
            return self.edge_value[cell]
        return self.vertex_value[cell]

    def as_cell_function(self) -> dict:
        values: dict = dict(self.vertex_value)
        values.update(self.edge_value)
        return values


def build_f1(graph: Graph, tree: RootedSpanningTree) -> OneParticleMorse:
    """Perfect Morse function on a preorder-labelled graph: vertex k gets
    2k-2, a tree edge the larger endpoint value, a deleted edge that plus 2."""
    vertex_value = {v: 2 * v - 2 for v in graph.vertices}
    edge_value: dict[Edge, int] = {}
    deleted: list[Edge] = []
    for e in graph.sorted_edges():
        top = max(vertex_value[e[0]], vertex_value[e[1]])
        if e in tree.tree_edges:
            edge_value[e] = top
        else:
            edge_value[e] = top + 2
            deleted.append(e)
    return OneParticleMorse(vertex_value, edge_value, tuple(deleted))


def prepare(
    graph: Graph,
    requested_tree: Iterable[Sequence[int]] | None = None,
    requested_root: int | None = None,
) -> tuple[Graph, RootedSpanningTree, dict[int, int]]:
    """Build the tree and relabel; returns the relabelled graph and tree plus
    the old->new label map."""
    tree = build_spanning_tree(graph, requested_tree, requested_root)
    labels = preorder_labels(graph, tree)
    g2, t2 = relabel_by_tree(graph, tree)
    return g2, t2, labels
