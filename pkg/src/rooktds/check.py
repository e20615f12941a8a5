"""Value tables and the cross-check harness tying formulas, constructor and solver."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

from .construct import construct_min_3tds
from .gamma import gamma_3t, gamma_3t_square
from .matrix import is_ktds, ones_count
from .solver import SolverConfig, Status, solve_min_ktds


@dataclass
class TableRow:
    n: int
    m: int
    gamma: int | None
    regime: str
    construct_ones: int | None = None
    oracle_value: int | None = None


def _pairs(n_max: int, m_max: int) -> Iterator[tuple[int, int]]:
    for n in range(1, n_max + 1):
        for m in range(n, m_max + 1):
            yield n, m


def _oracle(n: int, m: int, seed: int | None):
    return solve_min_ktds(n, m, 3, SolverConfig(initial_upper_bound=seed))


def build_table(max_n: int, max_m: int, oracle_limit: int = 0) -> list[TableRow]:
    """One row per 1 <= n <= max_n, n <= m <= max_m, sorted by (n, m)."""
    out = []
    for n, m in _pairs(max_n, max_m):
        g = gamma_3t(n, m)
        M = construct_min_3tds(n, m)
        row = TableRow(n, m, g.value, g.regime.value, None if M is None else ones_count(M))
        if n * m <= oracle_limit:
            row.oracle_value = _oracle(n, m, g.value).value
        out.append(row)
    return out


def render_table(rows: list[TableRow], fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps([asdict(r) for r in rows], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(TableRow.__dataclass_fields__), lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: ("" if v is None else v) for k, v in asdict(r).items()})
        return buf.getvalue()
    raise ValueError(f"unknown table format {fmt!r}")


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


@dataclass
class CheckReport:
    properties: list[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def __getitem__(self, name: str) -> PropertyResult:
        for p in self.properties:
            if p.name == name:
                return p
        raise KeyError(name)

    def summary(self) -> str:
        lines = []
        for p in self.properties:
            mark = "PASS" if p.passed else "FAIL"
            tail = "" if p.passed else f"  first counterexample: {p.counterexample}"
            lines.append(f"{mark} {p.name} ({p.checked} cases){tail}")
        return "\n".join(lines) + "\n"


def _g(n: int, m: int) -> int | None:
    return gamma_3t(n, m).value


def _run(name: str, cases, predicate: Callable[..., str | None]) -> PropertyResult:
    res = PropertyResult(name)
    for case in cases:
        res.checked += 1
        problem = predicate(*case)
        if problem is not None:
            res.counterexample = f"(n={case[0]}, m={case[1]}): {problem}"
            break
    return res


def _constructor_sound(n: int, m: int) -> str | None:
    g = _g(n, m)
    M = construct_min_3tds(n, m)
    if g is None:
        return None if M is None else "matrix built for an infeasible pair"
    if M is None:
        return "no matrix built"
    if M.shape != (n, m):
        return f"shape {M.shape}"
    if not is_ktds(M, 3):
        return "kappa-bound violated"
    if ones_count(M) != g:
        return f"{ones_count(M)} ones, expected {g}"
    return None


def _symmetry(n, m):
    return None if _g(n, m) == _g(m, n) else f"{_g(n, m)} vs transposed {_g(m, n)}"


def _lower_bound(n, m):
    return None if _g(n, m) >= 2 * n + 2 else f"{_g(n, m)} < {2 * n + 2}"


def _three_rows(n, m):
    want = 8 if m <= 4 else 9
    return None if _g(3, m) == want else f"{_g(3, m)} != {want}"


def _column_step(n, m):
    step = _g(n, m + 1) - _g(n, m)
    return None if step in (0, 1) else f"column step {step}"


def _row_step(n, m):
    step = _g(n + 1, m) - _g(n, m)
    return None if step in (0, 1, 2) else f"row step {step}"


def _diagonal_step(n, m):
    step = _g(n + 1, m + 1) - _g(n, m)
    return None if step in (2, 3) else f"gamma({n + 1},{m + 1}) - gamma({n},{m}) = {step}"


def _square_formula(n, m):
    return None if gamma_3t_square(n) == _g(n, n) else f"{gamma_3t_square(n)} vs {_g(n, n)}"


def _three_n_bound(n, m):
    g = _g(n, m)
    if g > 3 * n:
        return f"{g} > 3n"
    if m >= 3 * n - 1 and g != 3 * n:
        return f"{g} != 3n although m >= 3n-1"
    return None


def _oracle_agrees(n, m):
    g = _g(n, m)
    rep = _oracle(n, m, g)
    if g is None:
        return None if rep.status is Status.NO_SOLUTION else f"solver says {rep.status.value}"
    if rep.status is not Status.OPTIMAL or rep.value != g:
        return f"solver {rep.status.value} {rep.value}, formula {g}"
    if not is_ktds(rep.witness, 3) or ones_count(rep.witness) != g:
        return "solver witness invalid"
    return None


def run_consistency_check(n_max: int, m_max: int, oracle_limit: int = 0) -> CheckReport:
    """Check constructor soundness, the formula inequalities and, for small boards, the oracle.

    Every (n, m) with 1 <= n <= n_max and n <= m <= m_max is visited; each
    property is only applied inside its own hypotheses.
    """
    if not 1 <= n_max <= m_max:
        raise ValueError(f"need 1 <= n_max <= m_max, got {n_max}, {m_max}")
    pairs = list(_pairs(n_max, m_max))
    ge3 = [(n, m) for n, m in pairs if n >= 3]
    report = CheckReport()
    report.properties += [
        _run("constructor_soundness", pairs, _constructor_sound),
        _run("symmetry", pairs, _symmetry),
        _run("lower_bound_2n_plus_2", ge3, _lower_bound),
        _run("three_row_values", [(n, m) for n, m in ge3 if n == 3], _three_rows),
        _run("column_step", ge3, _column_step),
        _run("row_step", [(n, m) for n, m in ge3 if m > n and _g(n, m) < 3 * n], _row_step),
        _run("square_diagonal_step", [(n, m) for n, m in ge3 if n == m], _diagonal_step),
        _run("diagonal_step", ge3, _diagonal_step),
        _run("square_formula_agreement", [(n, m) for n, m in ge3 if n == m], _square_formula),
        _run("three_n_upper_bound", [(n, m) for n, m in pairs if n >= 2 and m >= 3], _three_n_bound),
        _run("oracle_agreement", [(n, m) for n, m in pairs if n * m <= oracle_limit], _oracle_agrees),
    ]
    return report
