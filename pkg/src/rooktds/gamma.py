"""Closed forms for the 3-tuple total domination number of Kn x Km.

Everything here is exact integer arithmetic.  Inputs are symmetric in
(n, m), so the general entry point swaps them to get n <= m first.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

INFEASIBLE_PAIRS = frozenset({(1, 1), (1, 2), (1, 3), (2, 2)})


class Regime(str, Enum):
    NO_SOLUTION = "NoSolution"
    SMALL_N = "SmallN"
    THREE_N = "ThreeN"
    RESIDUE = "Residue"
    RESIDUE_PLUS_ONE = "ResiduePlusOne"


@dataclass(frozen=True)
class GammaResult:
    value: int | None
    regime: Regime

    @property
    def feasible(self) -> bool:
        return self.value is not None


class KnBound(NamedTuple):
    value: int
    exact: bool


def _ceil_div(a: int, b: int) -> int:
    return (a + b - 1) // b


def _require_positive(**kw: int) -> None:
    for name, v in kw.items():
        if v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v}")


def residue_k(n: int, m: int) -> int:
    """The k in 2n = 3m + k (mod 10)."""
    return (2 * n - 3 * m) % 10


def three_n_threshold(n: int) -> int:
    return (7 * n - 1) // 3 - 1


def residue_formula(n: int, m: int) -> int:
    """ceil((8n+3m)/5), plus one when the residue is 5 or 6."""
    bump = 1 if residue_k(n, m) in (5, 6) else 0
    return _ceil_div(8 * n + 3 * m, 5) + bump


def gamma_3t(n: int, m: int) -> GammaResult:
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be positive integers, got n={n} m={m}")
    if n > m:
        n, m = m, n
    if (n, m) in INFEASIBLE_PAIRS:
        return GammaResult(None, Regime.NO_SOLUTION)
    if n == 1:
        return GammaResult(4, Regime.SMALL_N)
    if n == 2:
        return GammaResult(6, Regime.SMALL_N)
    if n == 3:
        return GammaResult(8 if m <= 4 else 9, Regime.SMALL_N)

    f = residue_formula(n, m)
    # the 3n branch wins ties
    if 3 * n <= f:
        return GammaResult(3 * n, Regime.THREE_N)
    if residue_k(n, m) in (5, 6):
        return GammaResult(f, Regime.RESIDUE_PLUS_ONE)
    return GammaResult(f, Regime.RESIDUE)


def gamma_3t_square(n: int) -> int:
    if n < 3:
        raise ValueError(f"square formula needs n >= 3, got {n}")
    if n == 3:
        return 8
    r = n % 10
    base = 2 * n + 2 * (n // 10)
    if r >= 4:
        return base + 2
    return base + _ceil_div(r, 3)


def lower_bound_2n2(n: int) -> int:
    """Lower bound 2n+2, valid for m >= n >= 3 (checking m is left to the caller)."""
    if n < 3:
        raise ValueError(f"lower bound 2n+2 needs n >= 3, got {n}")
    return 2 * n + 2


def remark_bound(m: int, k: int) -> int:
    """Column-counting bound 3m - 2k - 4*floor(k/2) for a 3TDS matrix with 2n+k ones.

    The hypotheses (no all-zero lines, exactly 2n+k ones) are not checked.
    """
    return 3 * m - 2 * k - 4 * (k // 2)


def simple_upper_kn(n: int, m: int, k: int) -> KnBound:
    """Upper bound kn from filling k whole columns.

    ``exact`` is set when the bound is known to be attained: always once
    m >= kn - 1, and for k = 3 whenever the closed form equals 3n.
    """
    _require_positive(n=n, m=m, k=k)
    if not (m >= n >= 2 and m >= k):
        raise ValueError(f"simple kn bound needs m >= n >= 2 and m >= k, got n={n} m={m} k={k}")
    exact = m >= k * n - 1 or (k == 3 and gamma_3t(n, m).value == 3 * n)
    return KnBound(k * n, exact)
