"""(0,1)-matrix model of vertex subsets of the rook's graph Kn x Km.

A set S of cells of an n x m board is stored as a dense 0/1 matrix.  Row i
and column j are 1-based throughout.  S is a k-tuple total dominating set
exactly when every cell (i, j), occupied or not, satisfies

    kappa(i, j) = row_sum(i) + col_sum(j) - 2 * s_ij >= k

which counts the neighbours of (i, j) inside S.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class BitMatrix:
    n_rows: int
    n_cols: int
    cells: tuple[int, ...]

    def __post_init__(self):
        if self.n_rows < 1 or self.n_cols < 1:
            raise ValueError(f"matrix dimensions must be positive, got {self.n_rows}x{self.n_cols}")
        cells = tuple(self.cells)
        if len(cells) != self.n_rows * self.n_cols:
            raise ValueError(
                f"expected {self.n_rows * self.n_cols} cells for a "
                f"{self.n_rows}x{self.n_cols} matrix, got {len(cells)}"
            )
        if any(c not in (0, 1) for c in cells):
            raise ValueError("cells must be 0 or 1")
        object.__setattr__(self, "cells", tuple(int(c) for c in cells))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | str]) -> BitMatrix:
        """Build from a list of rows; a row may be a sequence of bits or a '0'/'1' string."""
        if not rows:
            raise ValueError("at least one row is required")
        parsed = [[int(ch) for ch in row] for row in rows]
        width = len(parsed[0])
        if any(len(r) != width for r in parsed):
            raise ValueError("rows have unequal lengths")
        return cls(len(parsed), width, tuple(b for r in parsed for b in r))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> BitMatrix:
        return cls(n_rows, n_cols, (0,) * (n_rows * n_cols))

    @classmethod
    def ones(cls, n_rows: int, n_cols: int) -> BitMatrix:
        return cls(n_rows, n_cols, (1,) * (n_rows * n_cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        self._check_index(i, j)
        return self.cells[(i - 1) * self.n_cols + (j - 1)]

    def _check_index(self, i: int, j: int) -> None:
        if not (1 <= i <= self.n_rows and 1 <= j <= self.n_cols):
            raise IndexError(f"cell ({i},{j}) outside a {self.n_rows}x{self.n_cols} matrix")

    def rows(self) -> list[tuple[int, ...]]:
        m = self.n_cols
        return [self.cells[r * m:(r + 1) * m] for r in range(self.n_rows)]

    def transpose(self) -> BitMatrix:
        n, m = self.n_rows, self.n_cols
        return BitMatrix(m, n, tuple(self.cells[r * m + c] for c in range(m) for r in range(n)))

    def submatrix(self, row_indices: Iterable[int], col_indices: Iterable[int]) -> BitMatrix:
        """Restriction to the given 1-based rows and columns, kept in increasing order."""
        rs = sorted(row_indices)
        cs = sorted(col_indices)
        return BitMatrix(len(rs), len(cs), tuple(self[i, j] for i in rs for j in cs))

    def __str__(self) -> str:
        return "\n".join("".join(map(str, r)) for r in self.rows())


@dataclass(frozen=True)
class ComponentReport:
    row_indices: frozenset[int]
    col_indices: frozenset[int]
    ones: int

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_indices), len(self.col_indices)


def line_sums(M: BitMatrix) -> tuple[list[int], list[int]]:
    rows = [sum(r) for r in M.rows()]
    cols = [sum(M.cells[j::M.n_cols]) for j in range(M.n_cols)]
    return rows, cols


def ones_count(M: BitMatrix) -> int:
    return sum(M.cells)


def kappa(M: BitMatrix, i: int, j: int) -> int:
    """Number of neighbours of cell (i, j) that lie in the set encoded by M."""
    M._check_index(i, j)
    row = sum(M.cells[(i - 1) * M.n_cols:i * M.n_cols])
    col = sum(M.cells[j - 1::M.n_cols])
    return row + col - 2 * M[i, j]


def kappa_table(M: BitMatrix) -> list[list[int]]:
    rows, cols = line_sums(M)
    return [
        [rows[i] + cols[j] - 2 * M.cells[i * M.n_cols + j] for j in range(M.n_cols)]
        for i in range(M.n_rows)
    ]


def is_ktds(M: BitMatrix, k: int) -> bool:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return all(v >= k for row in kappa_table(M) for v in row)


def permute(M: BitMatrix, row_perm: Sequence[int], col_perm: Sequence[int]) -> BitMatrix:
    """Row r of the result is row row_perm[r] of M (1-based); likewise for columns."""
    if sorted(row_perm) != list(range(1, M.n_rows + 1)):
        raise ValueError("row_perm is not a permutation of 1..n_rows")
    if sorted(col_perm) != list(range(1, M.n_cols + 1)):
        raise ValueError("col_perm is not a permutation of 1..n_cols")
    return BitMatrix(M.n_rows, M.n_cols, tuple(M[i, j] for i in row_perm for j in col_perm))


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def components(M: BitMatrix) -> list[ComponentReport]:
    """Connected components of the ones of M, where ones sharing a line are linked.

    Lines are the union-find nodes: rows 0..n-1 then columns n..n+m-1, and
    every one-cell joins its row to its column.  Components are returned
    ordered by their smallest row index.
    """
    n, m = M.shape
    uf = _UnionFind(n + m)
    for idx, bit in enumerate(M.cells):
        if bit:
            uf.union(idx // m, n + idx % m)

    groups: dict[int, tuple[set[int], set[int], list[int]]] = {}
    for idx, bit in enumerate(M.cells):
        if not bit:
            continue
        i, j = idx // m, idx % m
        rows, cols, count = groups.setdefault(uf.find(i), (set(), set(), [0]))
        rows.add(i + 1)
        cols.add(j + 1)
        count[0] += 1

    reports = [
        ComponentReport(frozenset(rows), frozenset(cols), count[0])
        for rows, cols, count in groups.values()
    ]
    reports.sort(key=lambda c: min(c.row_indices))
    return reports


def compose_block_diagonal(blocks: Sequence[BitMatrix]) -> BitMatrix:
    if not blocks:
        raise ValueError("compose_block_diagonal needs at least one block")
    n = sum(b.n_rows for b in blocks)
    m = sum(b.n_cols for b in blocks)
    cells = [0] * (n * m)
    r0 = c0 = 0
    for b in blocks:
        for i, row in enumerate(b.rows()):
            start = (r0 + i) * m + c0
            cells[start:start + b.n_cols] = row
        r0 += b.n_rows
        c0 += b.n_cols
    return BitMatrix(n, m, tuple(cells))
