"""
Skew-symmetrizers of a braiding, their ranks and the bi-rank fit.
"""
from functools import lru_cache
from typing import Any, Dict, List, NamedTuple, Optional

from sympy import QQ, Rational
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from ..config.constants import RANK_FIT_CONFIRMATIONS
from ..utils.timing import start_timer
from .errors import BudgetExceededError
from .operators import LegOperator
from .reports import Report
from .rmatrix import Braiding, partial_r_trace


class BiRank(NamedTuple):
    m: int
    n: int

    def __str__(self) -> str:
        return f"({self.m}|{self.n})"


class SkewSymmetrizerTower:
    """P^(1) = I, P^(k) = P^(k-1) (q^(k-1) I - (k-1)_q R_(k-1)) P^(k-1) / k_q."""

    def __init__(self, braiding: Braiding):
        self.braiding = braiding
        self.projectors: List[LegOperator] = [LegOperator.identity(braiding.dim, 0)]

    def __getitem__(self, k: int) -> LegOperator:
        if k < 0:
            raise ValueError(f"skew-symmetrizer order must be >= 0, got {k}.")
        br = self.braiding
        while len(self.projectors) <= k:
            level = len(self.projectors)
            if level == 1:
                self.projectors.append(LegOperator.identity(br.dim, 1))
                continue
            prev = self.projectors[-1].embed(1, level)
            middle = (LegOperator.identity(br.dim, level).scale(br.q ** (level - 1))
                      - br.r_at(level - 1, level).scale(br.qint(level - 1)))
            self.projectors.append((prev @ middle @ prev).scale(1 / br.qint(level)))
        return self.projectors[k]


@lru_cache(maxsize=None)
def tower_for(braiding: Braiding) -> SkewSymmetrizerTower:
    return SkewSymmetrizerTower(braiding)


def skew_symmetrizer(braiding: Braiding, k: int) -> LegOperator:
    """
    The skew-symmetrizer P_-^(k) on legs 1..k.

    Raises:
        ValueError: If k < 1.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}.")
    return tower_for(braiding)[k]


def poincare_ranks(braiding: Braiding, k_max: int) -> List[int]:
    """Ranks of P_-^(1), ..., P_-^(k_max) over the rational-function field."""
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}.")
    ranks = []
    for k in range(1, k_max + 1):
        ranks.append(skew_symmetrizer(braiding, k).rank())
        if ranks[-1] == 0:
            ranks.extend([0] * (k_max - k))
            break
    return ranks


def fit_rank_series(ranks: List[int], confirmations: int = RANK_FIT_CONFIRMATIONS) -> BiRank:
    """
    Smallest (m|n) such that 1 + sum r_k t^k = num(t)/den(t) with deg num = m,
    den(0) = 1, deg den = n, confirmed on `confirmations` further terms.

    Raises:
        BudgetExceededError: If no fit is confirmed by the available terms.
    """
    series = [1] + list(ranks)
    k_max = len(ranks)

    def r(k: int) -> int:
        return series[k] if k >= 0 else 0

    total = 0
    while total + confirmations <= k_max:
        for n in range(total + 1):
            m = total - n
            denom = _solve_denominator(r, m, n)
            if denom is None or (n and denom[n] == 0):
                continue
            lead = sum(denom[j] * r(m - j) for j in range(n + 1))
            if lead == 0:
                continue
            if all(sum(denom[j] * r(k - j) for j in range(n + 1)) == 0
                   for k in range(m + n + 1, k_max + 1)):
                return BiRank(m, n)
        total += 1
    raise BudgetExceededError(f"rank sequence {ranks} does not confirm a bi-rank fit.")


def _solve_denominator(r, m: int, n: int) -> Optional[List]:
    """Coefficients d_0 = 1, d_1..d_n from sum_j d_j r_(k-j) = 0, k = m+1..m+n."""
    if n == 0:
        return [Rational(1)]
    rows = [[QQ(r(k - j)) for j in range(1, n + 1)] for k in range(m + 1, m + n + 1)]
    rhs = [[QQ(-r(k))] for k in range(m + 1, m + n + 1)]
    try:
        solution = DomainMatrix(rows, (n, n), QQ).lu_solve(DomainMatrix(rhs, (n, 1), QQ))
    except DMNonInvertibleMatrixError:
        return None
    return [Rational(1)] + [solution.to_Matrix()[j, 0] for j in range(n)]


def bi_rank(braiding: Braiding, k_max: int) -> BiRank:
    """
    Bi-rank (m|n) of a braiding from the ranks of its skew-symmetrizers.

    Raises:
        BudgetExceededError: If k_max is too small to confirm the fit.
    """
    return fit_rank_series(poincare_ranks(braiding, k_max))


def trace_reduction_factor(braiding: Braiding, m: int, k: int):
    """q^(-m(m-k)) k_q! (m-k)_q! / m_q!."""
    br = braiding
    return br.q ** (-m * (m - k)) * br.qfactorial(k) * br.qfactorial(m - k) / br.qfactorial(m)


def check_skew_trace_reduction(braiding: Braiding, m: int, k: int,
                               params: Optional[Dict[str, Any]] = None) -> Report:
    """Tr_R(k+1..m) P^(m) = q^(-m(m-k)) k_q!(m-k)_q!/m_q! P^(k), for 0 <= k <= m."""
    started = start_timer()
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got k={k}, m={m}.")
    traced = partial_r_trace(skew_symmetrizer(braiding, m), range(k + 1, m + 1), braiding)
    lower = tower_for(braiding)[k]
    residual = traced - lower.scale(trace_reduction_factor(braiding, m, k))
    failures = [] if residual.is_zero() else [residual.witness()]
    return Report.outcome("skew-trace-reduction", params or {"m": m, "k": k}, failures, started)


def check_tower(braiding: Braiding, k_max: int,
                params: Optional[Dict[str, Any]] = None) -> Report:
    """Idempotency, nesting and the q-skew-symmetry of every P^(k), k <= k_max."""
    started = start_timer()
    br = braiding
    failures = []
    for k in range(1, k_max + 1):
        proj = skew_symmetrizer(br, k)
        if not (proj @ proj - proj).is_zero():
            failures.append(f"P^({k}) not idempotent")
        if k > 1:
            prev = skew_symmetrizer(br, k - 1).embed(1, k)
            if not (proj @ prev - prev @ proj).is_zero():
                failures.append(f"P^({k}) does not commute with P^({k - 1})")
            for j in range(1, k):
                annihilator = (LegOperator.identity(br.dim, k).scale(1 / br.q)
                               + br.r_at(j, k))
                if not (annihilator @ proj).is_zero():
                    failures.append(f"(q^-1 I + R_{j}) P^({k}) != 0")
    return Report.outcome("skew-symmetrizers", params or {"k_max": k_max}, failures, started)
