"""Minimum 3-tuple total dominating sets of Kn x Km, built as (0,1)-matrices.

For n >= 4 below the 3n regime the matrix is a block-diagonal sum of
components drawn from a small catalog: mostly J(1,4) and J(3,2), plus a
bounded number of exceptional blocks.  The counts are found by direct
search; the two workhorse counts are then forced by a 2x2 linear system.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .gamma import gamma_3t
from .matrix import BitMatrix, compose_block_diagonal

SPECIAL_CAP = 2


class Kind(str, Enum):
    J14 = "J14"
    J15 = "J15"
    J16 = "J16"
    J23 = "J23"
    J32 = "J32"
    J42 = "J42"
    J52 = "J52"
    D53 = "D53"
    D63 = "D63"
    H44 = "H44"
    H45 = "H45"


@dataclass(frozen=True)
class CatalogEntry:
    kind: Kind
    rows: int
    cols: int
    ones: int


CATALOG: dict[Kind, CatalogEntry] = {
    e.kind: e
    for e in (
        CatalogEntry(Kind.J14, 1, 4, 4),
        CatalogEntry(Kind.J15, 1, 5, 5),
        CatalogEntry(Kind.J16, 1, 6, 6),
        CatalogEntry(Kind.J23, 2, 3, 6),
        CatalogEntry(Kind.J32, 3, 2, 6),
        CatalogEntry(Kind.J42, 4, 2, 8),
        CatalogEntry(Kind.J52, 5, 2, 10),
        CatalogEntry(Kind.D53, 5, 3, 10),
        CatalogEntry(Kind.D63, 6, 3, 12),
        CatalogEntry(Kind.H44, 4, 4, 10),
        CatalogEntry(Kind.H45, 4, 5, 10),
    )
}

# Kinds whose counts are searched; J14 and J32 are solved for.
SPECIAL_KINDS: tuple[Kind, ...] = tuple(k for k in Kind if k not in (Kind.J14, Kind.J32))

# 3x3 and 3x4 minimum matrices, and the two single-component 4-row blocks
H33 = BitMatrix.from_rows(["011", "111", "111"])
H34 = BitMatrix.from_rows(["0011", "0011", "1111"])
H44 = BitMatrix.from_rows(["0011", "0011", "0011", "1111"])
H45 = BitMatrix.from_rows(["00011", "00011", "00011", "11110"])


def j_block(x: int, y: int) -> BitMatrix:
    """The x-by-y all-ones matrix; a 3TDS matrix only when x + y >= 5."""
    if x < 1 or y < 1:
        raise ValueError(f"J({x},{y}) needs positive dimensions")
    if x + y < 5:
        raise ValueError(f"J({x},{y}) is not a 3TDS matrix: x+y>=5 violated")
    return BitMatrix.ones(x, y)


def d_block(x: int) -> BitMatrix:
    if x < 5:
        raise ValueError(f"D({x},3) needs x >= 5")
    rows = ["011"] * (x - 3) + ["101", "101", "110"]
    return BitMatrix.from_rows(rows)


def build_component(kind: Kind | str, x: int | None = None) -> BitMatrix:
    """Matrix for a catalog kind.

    ``x`` overrides the row count of D kinds, so ``build_component("D53", 7)``
    gives D(7,3).  It is rejected for every other kind.
    """
    kind = Kind(kind)
    entry = CATALOG[kind]
    if kind in (Kind.D53, Kind.D63):
        return d_block(entry.rows if x is None else x)
    if x is not None:
        raise ValueError(f"{kind.value} has a fixed size")
    if kind is Kind.H44:
        return H44
    if kind is Kind.H45:
        return H45
    return j_block(entry.rows, entry.cols)


@dataclass(frozen=True)
class Decomposition:
    counts: dict[Kind, int] = field(default_factory=dict)

    def _total(self, attr: str) -> int:
        return sum(c * getattr(CATALOG[k], attr) for k, c in self.counts.items())

    @property
    def rows(self) -> int:
        return self._total("rows")

    @property
    def cols(self) -> int:
        return self._total("cols")

    @property
    def ones(self) -> int:
        return self._total("ones")

    def entries(self) -> list[CatalogEntry]:
        """One entry per component, largest row count first, then catalog order."""
        out = [CATALOG[k] for k in Kind for _ in range(self.counts.get(k, 0))]
        out.sort(key=lambda e: -e.rows)
        return out

    def __str__(self) -> str:
        return " + ".join(f"{c}x{k.value}" for k, c in self.counts.items())


@lru_cache(maxsize=None)
def _special_vectors(cap: int) -> tuple[tuple[int, ...], ...]:
    vectors = itertools.product(range(cap + 1), repeat=len(SPECIAL_KINDS))
    # fewest exceptional components first, then favour kinds earlier in the catalog
    return tuple(sorted(vectors, key=lambda v: (sum(v), tuple(-c for c in v))))


def decompose_counts(n: int, m: int, target_ones: int, cap: int = SPECIAL_CAP) -> Decomposition | None:
    """Find catalog counts whose rows, columns and ones add up to (n, m, target_ones).

    Returns None when no multiset with at most ``cap`` copies of each
    exceptional kind exists.
    """
    if not (m >= n >= 4):
        raise ValueError(f"decompose_counts needs m >= n >= 4, got n={n} m={m}")
    specials = [CATALOG[k] for k in SPECIAL_KINDS]
    for vec in _special_vectors(cap):
        rows_left, cols_left, ones_left = n, m, target_ones
        for count, e in zip(vec, specials):
            rows_left -= count * e.rows
            cols_left -= count * e.cols
            ones_left -= count * e.ones
        if rows_left < 0 or cols_left < 0:
            continue
        # a + 3b = rows_left, 4a + 2b = cols_left
        b10 = 4 * rows_left - cols_left
        a10 = 3 * cols_left - 2 * rows_left
        if b10 < 0 or a10 < 0 or b10 % 10 or a10 % 10:
            continue
        a, b = a10 // 10, b10 // 10
        if 4 * a + 6 * b != ones_left:
            continue
        counts = {Kind.J14: a, Kind.J32: b}
        counts.update({k: c for k, c in zip(SPECIAL_KINDS, vec)})
        return Decomposition({k: counts[k] for k in Kind if counts.get(k)})
    return None


def construct_last_k_columns(n: int, m: int, k: int = 3) -> BitMatrix:
    """n x m matrix with ones filling the last k columns."""
    if n < 2 or m < k:
        raise ValueError(f"last-{k}-columns construction needs n >= 2 and m >= {k}, got n={n} m={m}")
    row = (0,) * (m - k) + (1,) * k
    return BitMatrix(n, m, row * n)


def build_from_decomposition(dec: Decomposition) -> BitMatrix:
    return compose_block_diagonal([build_component(e.kind) for e in dec.entries()])


def construct_min_3tds(n: int, m: int) -> BitMatrix | None:
    """A 3TDS matrix of Kn x Km with exactly gamma_3t(n, m) ones, or None if none exists."""
    if n > m:
        M = construct_min_3tds(m, n)
        return None if M is None else M.transpose()

    target = gamma_3t(n, m).value
    if target is None:
        return None
    if n == 1:
        return BitMatrix(1, m, (0,) * (m - 4) + (1,) * 4)
    if n == 3 and m in (3, 4):
        return H33 if m == 3 else H34
    if target == 3 * n:
        return construct_last_k_columns(n, m)

    dec = decompose_counts(n, m, target)
    if dec is None:
        raise RuntimeError(f"no catalog decomposition for n={n} m={m} with {target} ones")
    return build_from_decomposition(dec)
