"""Discrete Morse functions on a cell complex: validity, critical cells,
gradient vector field, V-paths and acyclicity.

Values are exact integers; ties across a face relation are exactly what the
Morse conditions govern, so there is no tolerance anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Mapping

from .complex import CellComplex
from .errors import CyclicField, MissingValue, NotMorse

CellFunction = Mapping[Hashable, int]


@dataclass(frozen=True)
class Violation:
    cell: Hashable
    low_cofaces: tuple  # cofaces with f <= f(cell)
    high_faces: tuple  # faces with f >= f(cell)

    def __str__(self) -> str:
        parts = []
        if len(self.low_cofaces) > 1:
            parts.append("cofaces " + ", ".join(map(str, self.low_cofaces)))
        if len(self.high_faces) > 1:
            parts.append("faces " + ", ".join(map(str, self.high_faces)))
        return f"{self.cell}: " + "; ".join(parts)


def _value(f: CellFunction, cell) -> int:
    try:
        return f[cell]
    except KeyError:
        raise MissingValue(f"no value for cell {cell}") from None


def _neighbours(complex: CellComplex, f: CellFunction, cell):
    v = _value(f, cell)
    low = tuple(sorted(b for b in complex.cofaces(cell) if _value(f, b) <= v))
    high = tuple(sorted(b for b in complex.faces(cell) if _value(f, b) >= v))
    return low, high


def check_morse(complex: CellComplex, f: CellFunction) -> list[Violation]:
    """Every cell with more than one wrong-way neighbour in some adjacent
    dimension. Empty iff ``f`` is a discrete Morse function."""
    out = []
    for cell in complex.all_cells():
        low, high = _neighbours(complex, f, cell)
        if len(low) > 1 or len(high) > 1:
            out.append(Violation(cell, low, high))
    return out


def critical_cells(complex: CellComplex, f: CellFunction) -> list:
    return [c for c in complex.all_cells() if _neighbours(complex, f, c) == ((), ())]


@dataclass
class GradientField:
    """Pairs ``(lower, upper)`` of noncritical cells plus the critical set."""

    complex: CellComplex
    pairs: list[tuple] = field(default_factory=list)
    critical: set = field(default_factory=set)

    def __post_init__(self):
        self._up: dict = {}
        self._down: dict = {}
        for a, b in self.pairs:
            if a in self._up or a in self._down or b in self._up or b in self._down:
                raise ValueError(f"cell in more than one pair: {a} / {b}")
            if b not in self.complex.coboundary(a):
                raise ValueError(f"{a} is not a face of {b}")
            self._up[a] = b
            self._down[b] = a
        both = set(self._up) | set(self._down)
        if both & set(self.critical):
            raise ValueError("a critical cell also appears in a pair")

    def partner_up(self, cell):
        """The higher cell paired with ``cell`` (``cell`` is a tail), else None."""
        return self._up.get(cell)

    def partner_down(self, cell):
        """The lower cell paired with ``cell`` (``cell`` is a head), else None."""
        return self._down.get(cell)

    def is_tail(self, cell) -> bool:
        return cell in self._up

    def is_head(self, cell) -> bool:
        return cell in self._down

    def is_critical(self, cell) -> bool:
        return cell in self.critical

    def critical_of_dim(self, dim: int) -> list:
        return sorted(c for c in self.critical if self.complex.dim(c) == dim)

    def heads_of_dim(self, dim: int) -> list:
        return sorted(c for c in self._down if self.complex.dim(c) == dim)


def build_gradient_field(complex: CellComplex, f: CellFunction) -> GradientField:
    violations = check_morse(complex, f)
    if violations:
        raise NotMorse(violations)
    pairs = []
    critical = set()
    for cell in complex.all_cells():
        low, high = _neighbours(complex, f, cell)
        if low:
            pairs.append((cell, low[0]))
        elif not high:
            critical.add(cell)
    field_ = GradientField(complex, pairs, critical)
    if not check_acyclic(field_):
        raise CyclicField("gradient field of a Morse function has a closed V-path")
    return field_


def check_acyclic(field: GradientField) -> bool:
    """True iff no closed V-path exists, i.e. the graph tail -> head -> other
    faces of the head has no directed cycle."""
    cx = field.complex

    def successors(a):
        b = field.partner_up(a)
        if b is None:
            return []
        return [x for x in cx.faces(b) if x != a]

    WHITE, GREY, BLACK = 0, 1, 2
    colour: dict = {}
    for start, _ in field.pairs:
        if colour.get(start, WHITE) != WHITE:
            continue
        colour[start] = GREY
        stack = [(start, iter(successors(start)))]
        while stack:
            node, it = stack[-1]
            for nxt in it:
                c = colour.get(nxt, WHITE)
                if c == GREY:
                    return False
                if c == WHITE:
                    colour[nxt] = GREY
                    stack.append((nxt, iter(successors(nxt))))
                    break
            else:
                colour[node] = BLACK
                stack.pop()
    return True


@dataclass(frozen=True)
class VPath:
    """Alternating ``a0, b0, a1, b1, ..., ak``; ``sign`` is the orientation
    factor accumulated from ``a0`` to ``ak``."""

    cells: tuple
    sign: int = 1

    @property
    def start(self):
        return self.cells[0]

    @property
    def end(self):
        return self.cells[-1]

    def __len__(self) -> int:
        return len(self.cells)

    def __str__(self) -> str:
        return ", ".join(map(str, self.cells))


def enumerate_vpaths(
    field: GradientField,
    sources: Iterable,
    end: Callable[[Hashable], bool] | None = None,
) -> list[VPath]:
    """All maximal V-paths from each source cell, depth first.

    A path stops at the first cell that is not a tail. Only paths whose last
    cell satisfies ``end`` are returned (default: critical cells); a critical
    source yields its length-zero path.
    """
    cx = field.complex
    if end is None:
        end = field.is_critical
    out: list[VPath] = []
    for src in sources:
        stack = [((src,), 1)]
        while stack:
            cells, sign = stack.pop()
            a = cells[-1]
            b = field.partner_up(a)
            if b is None:
                if end(a):
                    out.append(VPath(cells, sign))
                continue
            bd = cx.boundary(b)
            nxt = []
            for face, coef in bd.items():
                if face != a:
                    nxt.append((cells + (b, face), -sign * bd[a] * coef))
            stack.extend(reversed(sorted(nxt, key=lambda t: t[0][-1])))
    return out
