"""A finite regular cell complex given by cells per dimension and a signed
boundary map."""

from __future__ import annotations

from typing import Hashable, Mapping, Sequence

Chain = dict  # cell -> integer coefficient


class CellComplex:
    """Cells per dimension plus ``boundary[cell] = {face: +-1}``.

    Cells must be hashable and mutually comparable within a dimension.
    """

    def __init__(self, cells: Mapping[int, Sequence[Hashable]], boundary: Mapping[Hashable, Mapping[Hashable, int]]):
        self._cells = {d: list(cs) for d, cs in cells.items()}
        self._dim_of = {}
        for d, cs in self._cells.items():
            for c in cs:
                self._dim_of[c] = d
        self._boundary = {c: dict(boundary.get(c, {})) for c in self._dim_of}
        self._coboundary: dict = {c: {} for c in self._dim_of}
        for c, faces in self._boundary.items():
            for face, coef in faces.items():
                self._coboundary[face][c] = coef

    @property
    def dimension(self) -> int:
        dims = [d for d, cs in self._cells.items() if cs]
        return max(dims) if dims else -1

    def cells(self, dim: int) -> list:
        return self._cells.get(dim, [])

    def all_cells(self) -> list:
        return [c for d in sorted(self._cells) for c in self._cells[d]]

    def dim(self, cell) -> int:
        return self._dim_of[cell]

    def __contains__(self, cell) -> bool:
        return cell in self._dim_of

    def __len__(self) -> int:
        return len(self._dim_of)

    def boundary(self, cell) -> dict:
        return self._boundary[cell]

    def coboundary(self, cell) -> dict:
        """Cells having ``cell`` as a face, with the incidence sign."""
        return self._coboundary[cell]

    def faces(self, cell) -> list:
        return list(self._boundary[cell])

    def cofaces(self, cell) -> list:
        return list(self._coboundary[cell])

    def boundary_matrix(self, dim: int) -> list[list[int]]:
        """Dense matrix of the boundary map from ``dim``-cells (columns) to
        ``dim-1``-cells (rows), rows/columns in ``cells()`` order."""
        rows = self.cells(dim - 1)
        index = {c: i for i, c in enumerate(rows)}
        cols = self.cells(dim)
        m = [[0] * len(cols) for _ in rows]
        for j, c in enumerate(cols):
            for face, coef in self._boundary[c].items():
                m[index[face]][j] = coef
        return m

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(cs) for d, cs in self._cells.items())
