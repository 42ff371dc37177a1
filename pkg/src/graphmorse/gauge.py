"""Topological gauge potentials on the 1-skeleton of D2(G).

A potential assigns a phase to every directed 1-cell. Phases are affine
integer combinations of free parameters (one per critical 1-cell), read
modulo 2*pi. Heads of gradient arrows carry phase 0; each tail is solved so
that the flux through its paired square vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import pi
from typing import Iterable, Mapping, Sequence

from .config_complex import Cell, TwoParticleComplex
from .discrete_morse import GradientField
from .errors import NotAClosedCycle, UnsolvableOrder


@dataclass(frozen=True)
class Phase:
    """``sum(coef * param) + const`` with integer coefficients."""

    coeffs: tuple[tuple[str, int], ...] = ()
    const: int = 0

    @classmethod
    def of(cls, params: Mapping[str, int] | None = None, const: int = 0) -> "Phase":
        items = tuple(sorted((k, v) for k, v in (params or {}).items() if v))
        return cls(items, const)

    @classmethod
    def param(cls, name: str) -> "Phase":
        return cls(((name, 1),))

    def as_dict(self) -> dict[str, int]:
        return dict(self.coeffs)

    def __add__(self, other: "Phase") -> "Phase":
        d = self.as_dict()
        for k, v in other.coeffs:
            d[k] = d.get(k, 0) + v
        return Phase.of(d, self.const + other.const)

    def __neg__(self) -> "Phase":
        return Phase(tuple((k, -v) for k, v in self.coeffs), -self.const)

    def __sub__(self, other: "Phase") -> "Phase":
        return self + (-other)

    def __mul__(self, k: int) -> "Phase":
        return Phase.of({n: k * v for n, v in self.coeffs}, k * self.const)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.coeffs and self.const == 0

    def evaluate(self, values: Mapping[str, float]) -> float:
        """Numeric phase in [0, 2*pi)."""
        total = self.const + sum(v * values[k] for k, v in self.coeffs)
        return total % (2 * pi)

    def to_json(self) -> dict:
        return {"params": self.as_dict(), "const": self.const}

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = [f"{'' if v == 1 else '-' if v == -1 else v}{k}" for k, v in self.coeffs]
        if self.const:
            terms.append(str(self.const))
        return " + ".join(terms).replace("+ -", "- ")


ZERO = Phase()


@dataclass(frozen=True)
class DirectedEdge:
    """A 1-cell traversed forwards (canonical direction) or backwards."""

    cell: Cell
    forward: bool = True

    @property
    def source(self) -> Cell:
        s, t = self.cell.endpoints
        return s if self.forward else t

    @property
    def target(self) -> Cell:
        s, t = self.cell.endpoints
        return t if self.forward else s

    def reversed(self) -> "DirectedEdge":
        return DirectedEdge(self.cell, not self.forward)

    def __str__(self) -> str:
        # j,k->l in the notation of the tight-binding hopping
        v = self.cell.vertex
        a, b = self.cell.edges[0]
        if not self.forward:
            a, b = b, a
        return f"{v},{a}->{b}"


@dataclass
class GaugePotential:
    assignment: dict[Cell, Phase]  # phase on each 1-cell in canonical direction
    params: list[tuple[str, Cell]]  # (name, critical 1-cell)
    constraints: list[tuple[Cell, Phase]] = field(default_factory=list)  # critical square -> flux

    def __getitem__(self, edge: DirectedEdge | Cell) -> Phase:
        if isinstance(edge, Cell):
            return self.assignment[edge]
        p = self.assignment[edge.cell]
        return p if edge.forward else -p

    def param_of(self, cell: Cell) -> str:
        return dict((c, n) for n, c in self.params)[cell]

    def to_json(self) -> dict:
        return {
            "params": [{"name": n, "cell": str(c)} for n, c in self.params],
            "edges": [{"edge": str(c), "expr": p.to_json()} for c, p in sorted(self.assignment.items())],
            "constraints": [{"cell": str(c), "expr": p.to_json()} for c, p in self.constraints],
        }


def square_cycle(square: Cell) -> list[DirectedEdge]:
    """Boundary of a square as a closed walk (a,c)->(b,c)->(b,d)->(a,d)->(a,c)."""
    a, b, c, d = square.key
    e1, e2 = (a, b), (c, d)
    return [
        DirectedEdge(Cell.vertex_edge(c, e1), True),
        DirectedEdge(Cell.vertex_edge(b, e2), True),
        DirectedEdge(Cell.vertex_edge(d, e1), False),
        DirectedEdge(Cell.vertex_edge(a, e2), False),
    ]


def flux(potential: GaugePotential, cycle: Sequence[DirectedEdge]) -> Phase:
    """Sum of the phases along a closed walk in the 1-skeleton."""
    if not cycle:
        return ZERO
    for prev, nxt in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        if prev.target != nxt.source:
            raise NotAClosedCycle(f"walk breaks between {prev.cell} and {nxt.cell}")
    total = ZERO
    for e in cycle:
        total = total + potential[e]
    return total


def walk(vertices: Iterable[Cell]) -> list[DirectedEdge]:
    """Directed edges through consecutive 0-cells (closing back to the first)."""
    vs = list(vertices)
    out = []
    for s, t in zip(vs, vs[1:] + vs[:1]):
        common = set(s.key) & set(t.key)
        if len(common) != 1:
            raise NotAClosedCycle(f"{s} and {t} are not adjacent")
        (u,) = common
        (j,) = set(s.key) - {u}
        (k,) = set(t.key) - {u}
        cell = Cell.vertex_edge(u, (j, k))
        out.append(DirectedEdge(cell, j < k))
    return out


def build_gauge(complex: TwoParticleComplex, field: GradientField, names: Sequence[str] | None = None) -> GaugePotential:
    crit1 = field.critical_of_dim(1)
    if names is None:
        names = [f"phi{i + 1}" for i in range(len(crit1))]
    params = list(zip(names, crit1))
    values: dict[Cell, Phase] = {}
    for name, c in params:
        values[c] = Phase.param(name)
    for c in field.heads_of_dim(1):
        values[c] = ZERO

    def solve(target: Cell) -> Phase:
        # iterative DFS: a tail is solvable once the other faces of its square are
        stack = [target]
        active = set()
        while stack:
            beta = stack[-1]
            if beta in values:
                stack.pop()
                continue
            square = field.partner_up(beta)
            if square is None:
                raise UnsolvableOrder(f"1-cell {beta} is neither critical, head nor tail")
            bd = complex.boundary(square)
            pending = [x for x in bd if x != beta and x not in values]
            if pending:
                if beta in active:
                    raise UnsolvableOrder(f"circular dependency at {beta}")
                active.add(beta)
                stack.extend(pending)
                continue
            rest = ZERO
            for x, coef in bd.items():
                if x != beta:
                    rest = rest + coef * values[x]
            values[beta] = -bd[beta] * rest
            active.discard(beta)
            stack.pop()
        return values[target]

    for c in complex.cells1:
        solve(c)

    constraints = []
    for sq in field.critical_of_dim(2):
        total = ZERO
        for x, coef in complex.boundary(sq).items():
            total = total + coef * values[x]
        constraints.append((sq, total))
    return GaugePotential(values, params, constraints)


def head_edges_form_tree(complex: TwoParticleComplex, field: GradientField) -> bool:
    """Whether the head 1-cells form a spanning tree on the 0-cells."""
    heads = field.heads_of_dim(1)
    parent = {c: c for c in complex.cells0}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for h in heads:
        s, t = h.endpoints
        rs, rt = find(s), find(t)
        if rs == rt:
            return False
        parent[rs] = rt
    return len({find(c) for c in complex.cells0}) == 1
