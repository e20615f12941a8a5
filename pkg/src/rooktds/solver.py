"""Exact minimum k-tuple total dominating sets of Kn x Km by branch and bound.

The search works on the orientation whose rows are the *short* side, so a
row is a bit pattern of width w = min(n, m) (at most 2**w candidates) and
there are max(n, m) rows to place.  Symmetry breaking:

* rows are placed in nonincreasing order of their binary value, which
  removes row permutations;
* the first row has its ones packed into the leading columns.  Any
  solution can be column-permuted so that a row of maximum popcount is
  packed to the front; that row then has the largest value of all rows,
  so it comes first once rows are sorted.

Pruning only uses valid lower bounds.  Every placed row p forces a final
column sum of at least k - |p| + 2*p_j in each column j, so the sum of the
outstanding column deficits bounds the ones still to come.  Columns to
the left of the leading one of the last placed row can no longer change
(later rows are smaller), and an empty frozen column forces every row,
placed or not, to carry at least k ones.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from enum import Enum

from .gamma import lower_bound_2n2
from .matrix import BitMatrix


class Status(str, Enum):
    OPTIMAL = "Optimal"
    NO_SOLUTION = "NoSolution"
    ABORTED = "Aborted"


@dataclass(frozen=True)
class SolverConfig:
    node_budget: int | None = None
    time_budget: float | None = None
    initial_upper_bound: int | None = None
    use_naive_enumeration: bool = False
    # stop as soon as an incumbent meets 2n+2 (k=3, min(n, m) >= 3)
    use_lower_bound_lemma: bool = True

    def __post_init__(self):
        for name in ("node_budget", "time_budget", "initial_upper_bound"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise ValueError(f"{name} must be positive when given, got {v}")


@dataclass(frozen=True)
class SolveReport:
    status: Status
    value: int | None
    witness: BitMatrix | None
    nodes_explored: int
    elapsed: float


class _BudgetExceeded(Exception):
    pass


def _popcount(x: int) -> int:
    return bin(x).count("1")


class _Search:
    def __init__(self, n_rows: int, width: int, k: int, cfg: SolverConfig, stop_at: int | None):
        self.R = n_rows
        self.W = width
        self.k = k
        self.cfg = cfg
        self.stop_at = stop_at
        self.nodes = 0
        self.deadline = None if cfg.time_budget is None else time.perf_counter() + cfg.time_budget

        W = width
        npat = 1 << W
        self.pop = [_popcount(p) for p in range(npat)]
        # bits[p][j] is column j of pattern p, column 0 being the most significant bit
        self.bits = [tuple((p >> (W - 1 - j)) & 1 for j in range(W)) for p in range(npat)]
        # first column that may still change once pattern p has been placed
        self.frozen_before = [W if p == 0 else W - p.bit_length() for p in range(npat)]
        # rows allowed after `last`: every q <= last, cheapest first
        self.children = [
            sorted(range(last + 1), key=lambda q: (self.pop[q], -q)) for last in range(npat)
        ]
        self.packed = {((1 << w) - 1) << (W - w) for w in range(W + 1)}

        self.col = [0] * W
        self.need = [0] * W
        self.placed: list[int] = []
        self.best = 0
        self.best_rows: list[int] | None = None

    def run(self, bound: int) -> None:
        """Look for solutions with at most `bound` ones, keeping the best one found."""
        self.best = bound + 1
        # before any row is placed, no column is constrained
        self.need = [-(1 << 30)] * self.W
        self._descend(None, 0)

    def _tick(self) -> None:
        cfg = self.cfg
        if cfg.node_budget is not None and self.nodes >= cfg.node_budget:
            raise _BudgetExceeded
        self.nodes += 1
        if self.deadline is not None and (self.nodes & 255) == 0 and time.perf_counter() > self.deadline:
            raise _BudgetExceeded

    def _descend(self, last: int | None, ones: int) -> bool:
        """Returns True when the search may stop (incumbent provably optimal)."""
        self._tick()
        W, col, need = self.W, self.col, self.need
        left = self.R - len(self.placed)

        frozen = 0 if last is None else self.frozen_before[last]
        deficit = 0
        empty_frozen = False
        for j in range(W):
            d = need[j] - col[j]
            if d > 0:
                if d > left or j < frozen:
                    return False
                deficit += d
            if j < frozen and col[j] == 0:
                empty_frozen = True
        extra = deficit
        if empty_frozen:
            # an all-zero column: every remaining row needs k ones too
            extra = max(extra, left * self.k)
        if ones + extra >= self.best:
            return False

        if left == 0:
            self.best = ones
            self.best_rows = list(self.placed)
            return self.stop_at is not None and ones <= self.stop_at

        candidates = self.children[(1 << W) - 1 if last is None else last]
        for q in candidates:
            if last is None and q not in self.packed:
                continue
            w = self.pop[q]
            if ones + w >= self.best:
                continue
            saved = need[:]
            bq = self.bits[q]
            for j in range(W):
                b = bq[j]
                col[j] += b
                v = self.k - w + 2 * b
                if v > need[j]:
                    need[j] = v
            self.placed.append(q)
            try:
                done = self._descend(q, ones + w)
            finally:
                self.placed.pop()
                for j in range(W):
                    col[j] -= bq[j]
                need[:] = saved
            if done:
                return True
        return False

    def witness(self) -> BitMatrix | None:
        if self.best_rows is None:
            return None
        cells = tuple(b for p in self.best_rows for b in self.bits[p])
        return BitMatrix(self.R, self.W, cells)


def _naive(n: int, m: int, k: int, cfg: SolverConfig, started: float) -> SolveReport:
    """Enumerate all 2**(n*m) matrices and keep the sparsest kTDS."""
    deadline = None if cfg.time_budget is None else started + cfg.time_budget
    full = (1 << m) - 1
    best_val: int | None = None
    best_rows: tuple[int, ...] | None = None
    nodes = 0
    aborted = False
    for rows in itertools.product(range(full + 1), repeat=n):
        nodes += 1
        if (cfg.node_budget is not None and nodes > cfg.node_budget) or (
            deadline is not None and (nodes & 1023) == 0 and time.perf_counter() > deadline
        ):
            aborted = True
            nodes -= 1
            break
        row_sum = [_popcount(r) for r in rows]
        total = sum(row_sum)
        if best_val is not None and total >= best_val:
            continue
        col_sum = [sum((r >> (m - 1 - j)) & 1 for r in rows) for j in range(m)]
        ok = all(
            row_sum[i] + col_sum[j] - 2 * ((rows[i] >> (m - 1 - j)) & 1) >= k
            for i in range(n)
            for j in range(m)
        )
        if ok:
            best_val, best_rows = total, rows
    witness = None
    if best_rows is not None:
        witness = BitMatrix(n, m, tuple((r >> (m - 1 - j)) & 1 for r in best_rows for j in range(m)))
    elapsed = time.perf_counter() - started
    if aborted:
        return SolveReport(Status.ABORTED, best_val, witness, nodes, elapsed)
    status = Status.OPTIMAL if best_val is not None else Status.NO_SOLUTION
    return SolveReport(status, best_val, witness, nodes, elapsed)


def solve_min_ktds(n: int, m: int, k: int, cfg: SolverConfig | None = None) -> SolveReport:
    if min(n, m, k) < 1:
        raise ValueError(f"n, m and k must be positive, got n={n} m={m} k={k}")
    cfg = cfg or SolverConfig()
    started = time.perf_counter()

    # every vertex has (n-1) + (m-1) neighbours
    if k > n + m - 2:
        return SolveReport(Status.NO_SOLUTION, None, None, 0, time.perf_counter() - started)
    if cfg.use_naive_enumeration:
        return _naive(n, m, k, cfg, started)

    transposed = n <= m
    n_rows, width = (m, n) if transposed else (n, m)
    stop_at = None
    if cfg.use_lower_bound_lemma and k == 3 and min(n, m) >= 3:
        stop_at = lower_bound_2n2(min(n, m))

    search = _Search(n_rows, width, k, cfg, stop_at)
    status = Status.OPTIMAL
    try:
        seeded = cfg.initial_upper_bound
        if seeded is not None:
            search.run(seeded)
        if search.best_rows is None:
            # unseeded, or the seed was below the optimum
            search.run(n * m)
    except _BudgetExceeded:
        status = Status.ABORTED

    W = search.witness()
    if W is not None and transposed:
        W = W.transpose()
    value = None if search.best_rows is None else search.best
    if status is Status.OPTIMAL and value is None:
        # k <= n+m-2 and the all-ones matrix has kappa = n+m-2 everywhere
        raise AssertionError("exhaustive search missed the all-ones matrix")
    return SolveReport(status, value, W, search.nodes, time.perf_counter() - started)
