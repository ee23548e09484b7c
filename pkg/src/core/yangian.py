"""
Braided Yangians truncated at a level cutoff, and the RTT-type comparison.

L(u) = sum_s L[s] u^-s with L[0] = I. Relations are the u^-i v^-j
coefficients of the defining current relation after multiplying it by
(u - v). Argument shifts q^-2j u act on series by scaling the level-s
coefficient by q^(2js).
"""
from dataclasses import dataclass, field
from functools import reduce
from itertools import product
from operator import add
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from ..config.constants import DEFAULT_LEVEL_CUTOFF, DEFAULT_RANK_TERMS
from ..utils.timing import start_timer
from .ncalg import (Generator, NCPolynomial, PresentedAlgebra, as_polynomial, commutator,
                    generating_matrix, matrix_generators, overline_copy)
from .operators import LegOperator
from .projectors import BiRank, bi_rank as fit_bi_rank, tower_for, trace_reduction_factor
from .realgebra import re_algebra, re_relations
from .reports import Report
from .rmatrix import RATIONAL, Braiding, CurrentRMatrix, baxterize, partial_r_trace
from .scalars import FIELD, RationalFunction, q

BRAIDED = "braided"
RTT = "rtt"

Coefficient = Union[LegOperator, NCPolynomial]


def _times(a: Coefficient, b: Coefficient) -> Coefficient:
    if isinstance(a, LegOperator) and isinstance(b, LegOperator):
        return a @ b
    if isinstance(a, LegOperator):
        return a.scale(b)
    if isinstance(b, LegOperator):
        return b.map(lambda value: a * value)
    return a * b


def _scaled(value: Coefficient, factor) -> Coefficient:
    return value.scale(factor) if isinstance(value, LegOperator) else value * factor


@dataclass(frozen=True)
class CurrentSeries:
    """Coefficients of u^0, u^-1, ..., u^-D of a matrix- or algebra-valued series."""

    coefficients: Tuple[Coefficient, ...]

    @property
    def cutoff(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, level: int) -> Coefficient:
        return self.coefficients[level]

    def __add__(self, other: "CurrentSeries") -> "CurrentSeries":
        return CurrentSeries(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "CurrentSeries":
        return CurrentSeries(tuple(-a for a in self.coefficients))

    def __sub__(self, other: "CurrentSeries") -> "CurrentSeries":
        return self + (-other)

    def __mul__(self, other: "CurrentSeries") -> "CurrentSeries":
        """Truncated Cauchy product; operators compose, algebra elements multiply on the right."""
        return CurrentSeries(tuple(
            reduce(add, (_times(self[a], other[n - a]) for a in range(n + 1)))
            for n in range(min(self.cutoff, other.cutoff) + 1)))

    def scale(self, factor) -> "CurrentSeries":
        return CurrentSeries(tuple(_scaled(c, factor) for c in self.coefficients))

    def shifted(self, j: int, base: RationalFunction = q) -> "CurrentSeries":
        """The series at base^(-2j) u."""
        return CurrentSeries(tuple(_scaled(c, base ** (2 * j * s))
                                   for s, c in enumerate(self.coefficients)))

    def map(self, func: Callable[[Coefficient], Coefficient]) -> "CurrentSeries":
        return CurrentSeries(tuple(func(c) for c in self.coefficients))

    @classmethod
    def constant(cls, value: Coefficient, cutoff: int) -> "CurrentSeries":
        zero = value.map(lambda _: FIELD.zero) if isinstance(value, LegOperator) else NCPolynomial()
        return cls((value,) + (zero,) * cutoff)


def current_matrix(dim: int, cutoff: int, name: str = "l") -> CurrentSeries:
    """L(u) = I + L[1] u^-1 + ... + L[D] u^-D over generators name_i^j[s]."""
    return CurrentSeries((LegOperator.identity(dim, 1),) + tuple(
        generating_matrix(dim, name, level=s) for s in range(1, cutoff + 1)))


def yangian_generators(dim: int, cutoff: int, name: str = "l") -> List[Generator]:
    return [g for s in range(1, cutoff + 1) for g in matrix_generators(dim, name, level=s)]


# --- Relations ---
def current_relations(current: CurrentRMatrix, coefficient: Callable[[int], Optional[LegOperator]],
                      flavor: str, max_level: int, max_index: Optional[int] = None
                      ) -> List[Tuple[int, int, LegOperator]]:
    """
    (i, j, relation matrix) for the u^-i v^-j coefficients, i, j >= -1, of
    total level i + j + 1 <= max_level.

    With X_ab = L_1[a] R L_1[b] (braided) or L_1[a] L_2[b] (RTT),
    D_ab = R X_ab - X_ba R and A_ab = X_ab - X_ba, the coefficient is
    D_(i+1)j - D_i(j+1) - a A_ij in the rational form and
    D_(i+1)j - D_i(j+1) - omega A_(i+1)j in the trigonometric one.
    coefficient(s) returns L[s], or None where it vanishes.
    """
    br = current.base
    r = br.r
    max_index = max_level if max_index is None else max_index
    cache: Dict[Tuple[int, int], Optional[LegOperator]] = {}

    def x(a: int, b: int) -> Optional[LegOperator]:
        if (a, b) not in cache:
            left = coefficient(a) if a >= 0 else None
            right = coefficient(b) if b >= 0 else None
            if left is None or right is None:
                cache[(a, b)] = None
            elif flavor == BRAIDED:
                cache[(a, b)] = left.embed(1, 2) @ r @ right.embed(1, 2)
            else:
                cache[(a, b)] = left.embed(1, 2) @ right.embed(2, 2)
        return cache[(a, b)]

    zero = LegOperator.zero(br.dim, 2)

    def d(a: int, b: int) -> LegOperator:
        xab, xba = x(a, b), x(b, a)
        return (r @ xab if xab is not None else zero) - (xba @ r if xba is not None else zero)

    def antisym(a: int, b: int) -> LegOperator:
        xab, xba = x(a, b), x(b, a)
        return (xab if xab is not None else zero) - (xba if xba is not None else zero)

    relations = []
    for i in range(-1, max_index + 1):
        for j in range(-1, max_index + 1):
            if i + j + 1 > max_level:
                continue
            if current.form == RATIONAL:
                tail = antisym(i, j).scale(current.a)
            else:
                tail = antisym(i + 1, j).scale(br.omega)
            relation = d(i + 1, j) - d(i, j + 1) - tail
            if not relation.is_zero():
                relations.append((i, j, relation))
    return relations


@dataclass
class YangianContext:
    """A braided or RTT-type Yangian truncated at level D."""

    current: CurrentRMatrix
    flavor: str
    cutoff: int
    algebra: PresentedAlgebra
    relation_levels: List[int] = field(default_factory=list)
    _bi_rank: Optional[BiRank] = field(default=None, repr=False)

    @property
    def braiding(self) -> Braiding:
        return self.current.base

    @property
    def dim(self) -> int:
        return self.braiding.dim

    @property
    def bi_rank(self) -> BiRank:
        if self._bi_rank is None:
            self._bi_rank = fit_bi_rank(self.braiding, DEFAULT_RANK_TERMS)
        return self._bi_rank

    @property
    def m(self) -> int:
        return self.bi_rank.m

    def series(self) -> CurrentSeries:
        return current_matrix(self.dim, self.cutoff)

    def reduce(self, p) -> NCPolynomial:
        return self.algebra.reduce(as_polynomial(p))


def _yangian(current: CurrentRMatrix, cutoff: int, flavor: str,
             bi_rank: Optional[BiRank]) -> YangianContext:
    if cutoff < 0:
        raise ValueError(f"level cutoff must be >= 0, got {cutoff}.")
    dim = current.base.dim
    series = current_matrix(dim, cutoff)

    def coefficient(s: int) -> Optional[LegOperator]:
        return series[s] if s <= cutoff else None

    extracted = current_relations(current, coefficient, flavor, cutoff)
    relations, levels = [], []
    for i, j, relation in extracted:
        for value in relation.entries.values():
            relations.append(as_polynomial(value))
            levels.append(i + j + 1)
    # trigonometric relations are homogeneous in the level, rational ones are not
    strategy = "filtered" if current.form == RATIONAL else "graded"
    algebra = PresentedAlgebra(yangian_generators(dim, cutoff), relations, strategy=strategy,
                               max_degree=max(cutoff, 1),
                               name=f"{flavor} Yangian({current.base.name},D={cutoff})")
    return YangianContext(current, flavor, cutoff, algebra, levels, bi_rank)


def braided_yangian(braiding: Braiding, cutoff: int = DEFAULT_LEVEL_CUTOFF, a=None,
                    bi_rank: Optional[BiRank] = None) -> YangianContext:
    """
    R(u,v) L_1(u) R L_1(v) - L_1(v) R L_1(u) R(u,v) = 0 up to total level D.

    Raises:
        ValueError: If cutoff < 0.
        BraidingValidationError: If the Baxterized R-matrix fails the current YBE.
    """
    return _yangian(baxterize(braiding, a), cutoff, BRAIDED, bi_rank)


def rtt_yangian(current: CurrentRMatrix, cutoff: int = DEFAULT_LEVEL_CUTOFF) -> YangianContext:
    """R(u,v) L_1(u) L_2(v) = L_1(v) L_2(u) R(u,v) up to total level D."""
    return _yangian(current, cutoff, RTT, None)


# --- Powers and symmetric elements ---
def matrix_power(ctx: YangianContext, k: int,
                 series: Optional[CurrentSeries] = None) -> CurrentSeries:
    """L^k(u) = L(q^-2(k-1) u) ... L(q^-2 u) L(u); L^0(u) = I."""
    if k < 0:
        raise ValueError(f"power must be >= 0, got {k}.")
    series = ctx.series() if series is None else series
    result = CurrentSeries.constant(LegOperator.identity(ctx.dim, 1), ctx.cutoff)
    for j in range(k - 1, -1, -1):
        result = result * series.shifted(j, ctx.braiding.q)
    return result


def _copies_product(ctx: YangianContext, k: int, legs: int,
                    series: Optional[CurrentSeries] = None) -> CurrentSeries:
    """L_1bar(u) L_2bar(q^-2 u) ... L_kbar(q^-2(k-1) u) on `legs` legs."""
    series = ctx.series() if series is None else series
    br = ctx.braiding
    result = CurrentSeries.constant(LegOperator.identity(ctx.dim, legs), ctx.cutoff)
    for p in range(1, k + 1):
        copy = series.map(lambda c, p=p: overline_copy(c, p, legs, br))
        result = result * copy.shifted(p - 1, br.q)
    return result


def skew_power(ctx: YangianContext, k: int) -> CurrentSeries:
    """
    L^(wedge k)(u) = Tr_R(2..k)(P^(k) L_1bar(u) L_2bar(q^-2 u) ... L_kbar(q^-2(k-1) u)).

    Raises:
        ValueError: Unless 1 <= k <= m.
    """
    if not 1 <= k <= ctx.m:
        raise ValueError(f"skew power needs 1 <= k <= {ctx.m}, got {k}.")
    if k == 1:
        return ctx.series()
    br = ctx.braiding
    projector = tower_for(br)[k]
    product_series = _copies_product(ctx, k, k)
    return product_series.map(
        lambda c: partial_r_trace(projector @ c, range(2, k + 1), br))


def _full_trace(series: CurrentSeries, braiding: Braiding) -> CurrentSeries:
    def trace(op: LegOperator) -> NCPolynomial:
        return as_polynomial(partial_r_trace(op, range(1, op.legs + 1), braiding).entry((), ()))
    return series.map(trace)


ELEMENT_KINDS = ("e", "p", "eHat")


def bethe_element(ctx: YangianContext, kind: str, k: int,
                  series: Optional[CurrentSeries] = None) -> CurrentSeries:
    """
    e_k(u) = Tr_R(1..k)(P^(k) L_1bar(u) ... L_kbar(q^-2(k-1) u)),
    p_k(u) = Tr_R L^k(u), and eHat_k(u) with P^(m) and the trace over 1..m.

    Raises:
        ValueError: On an unknown kind or k outside its range.
    """
    br = ctx.braiding
    if kind == "p":
        return _full_trace(matrix_power(ctx, k, series), br)
    if kind not in ("e", "eHat"):
        raise ValueError(f"unknown element kind '{kind}', expected one of {ELEMENT_KINDS}.")
    if not 0 <= k <= ctx.m:
        raise ValueError(f"{kind}_{k} needs 0 <= k <= {ctx.m}.")
    if kind == "e" and k == 0:
        return CurrentSeries.constant(NCPolynomial.constant(1), ctx.cutoff)
    legs = k if kind == "e" else ctx.m
    projector = tower_for(br)[legs]
    if k == 0:
        return _full_trace(CurrentSeries.constant(projector, ctx.cutoff), br)
    return _full_trace(_copies_product(ctx, k, legs, series).map(lambda c: projector @ c), br)


def e_via_skew_power(ctx: YangianContext, k: int) -> CurrentSeries:
    """Tr_R L^(wedge k)(u), which agrees with e_k(u) level by level."""
    return _full_trace(skew_power(ctx, k), ctx.braiding)


# --- Verifications ---
def series_failures(ctx: YangianContext, series: CurrentSeries, label: str) -> List[str]:
    """Witnesses (label, level, entry) for coefficients outside the ideal."""
    failures = []
    for level, value in enumerate(series.coefficients):
        if isinstance(value, LegOperator):
            for (row, col), entry in sorted(value.entries.items(), key=lambda kv: kv[0]):
                residual = ctx.reduce(entry)
                if residual:
                    failures.append(f"{label} level {level} entry {row}->{col}: {residual}")
        else:
            residual = ctx.reduce(value)
            if residual:
                failures.append(f"{label} level {level}: {residual}")
    return failures


def _params(ctx: YangianContext, **extra) -> Dict[str, Any]:
    return dict({"braiding": ctx.braiding.name, "D": ctx.cutoff}, **extra)


def chn_residual(ctx: YangianContext, k: int) -> CurrentSeries:
    """(-1)^(k+1) k_q L^(wedge k)(u) - sum_p (-q)^(k-p) L^p(q^-2(k-p) u) e_(k-p)(u)."""
    br = ctx.braiding
    residual = skew_power(ctx, k).scale((-1) ** (k + 1) * br.qint(k))
    for p in range(1, k + 1):
        term = matrix_power(ctx, p).shifted(k - p, br.q) * bethe_element(ctx, "e", k - p)
        residual = residual - term.scale((-br.q) ** (k - p))
    return residual


def check_chn(ctx: YangianContext, k: int, params: Optional[Dict[str, Any]] = None) -> Report:
    """The Cayley-Hamilton-Newton matrix identity, entrywise and levelwise."""
    started = start_timer()
    failures = series_failures(ctx, chn_residual(ctx, k), f"CHN k={k}")
    return Report.outcome("yangian-chn", params or _params(ctx, k=k), failures, started)


def newton_residual(ctx: YangianContext, k: int) -> CurrentSeries:
    """sum_(j<k) (-q)^j p_(k-j)(q^-2j u) e_j(u) + (-1)^k k_q e_k(u)."""
    if k < 1:
        raise ValueError(f"Newton identities start at k = 1, got {k}.")
    br = ctx.braiding
    residual = bethe_element(ctx, "e", k).scale((-1) ** k * br.qint(k))
    for j in range(k):
        term = bethe_element(ctx, "p", k - j).shifted(j, br.q) * bethe_element(ctx, "e", j)
        residual = residual + term.scale((-br.q) ** j)
    return residual


def check_newton(ctx: YangianContext, k: int, params: Optional[Dict[str, Any]] = None) -> Report:
    started = start_timer()
    failures = series_failures(ctx, newton_residual(ctx, k), f"Newton k={k}")
    return Report.outcome("yangian-newton", params or _params(ctx, k=k), failures, started)


def check_chn_newton_trace(ctx: YangianContext, params: Optional[Dict[str, Any]] = None) -> Report:
    """Tr_R(1..m) of the CHN residual at k = m plus the Newton residual at k = m reduces to zero."""
    started = start_timer()
    m = ctx.m
    traced = _full_trace(chn_residual(ctx, m), ctx.braiding) + newton_residual(ctx, m)
    failures = series_failures(ctx, traced, f"Tr CHN + Newton k={m}")
    return Report.outcome("chn-newton-trace", params or _params(ctx, k=m), failures, started)


def check_bethe_commute(ctx: YangianContext, k: int, l: int,
                        params: Optional[Dict[str, Any]] = None) -> Report:
    """[e_k(u), e_l(v)] = 0 for every coefficient pair of total level <= D."""
    started = start_timer()
    first, second = bethe_element(ctx, "e", k), bethe_element(ctx, "e", l)
    failures = []
    for a, b in product(range(ctx.cutoff + 1), repeat=2):
        if a + b > ctx.cutoff:
            continue
        residual = ctx.reduce(commutator(first[a], second[b]))
        if residual:
            failures.append(f"[e_{k}[{a}], e_{l}[{b}]] = {residual}")
    return Report.outcome("bethe-commute", params or _params(ctx, k=k, l=l), failures, started)


def check_qdet_central(ctx: YangianContext, params: Optional[Dict[str, Any]] = None) -> Report:
    """
    The quantum determinant e_m(u) commutes with every generator l_i^j[s].

    Raises:
        ValueError: Unless the bi-rank is (m|0).
    """
    started = start_timer()
    if ctx.bi_rank.n != 0:
        raise ValueError(f"the quantum determinant needs bi-rank (m|0), got {ctx.bi_rank}.")
    qdet = bethe_element(ctx, "e", ctx.m)
    failures = []
    for g in ctx.algebra.generators:
        for level in range(ctx.cutoff - g.level + 1):
            residual = ctx.reduce(commutator(qdet[level], NCPolynomial.generator(g)))
            if residual:
                failures.append(f"[e_{ctx.m}[{level}], {g}] = {residual}")
    return Report.outcome("qdet-central", params or _params(ctx), failures, started)


def check_evaluation(braiding: Braiding, params: Optional[Dict[str, Any]] = None) -> Report:
    """
    L(u) -> I + a M/u maps every Yangian relation into the modified RE ideal
    (involutive) or the RE ideal (Hecke); for involutive braidings M -> L[1]/a
    also carries the modified RE relations into the level-two Yangian ideal.
    """
    started = start_timer()
    current = baxterize(braiding)
    dim = braiding.dim
    involutive = not braiding.is_hecke
    target = re_algebra(braiding, modified=involutive)
    scale = current.a if current.form == RATIONAL else FIELD.one
    images = {0: LegOperator.identity(dim, 1), 1: target.matrix.scale(scale)}
    failures = []
    for i, j, relation in current_relations(current, images.get, BRAIDED, 3, 2):
        for (row, col), value in sorted(relation.entries.items(), key=lambda kv: kv[0]):
            residual = target.reduce(value)
            if residual:
                failures.append(f"evaluation, coefficient ({i},{j}) entry {row}->{col}: {residual}")
    if involutive:
        yangian = braided_yangian(braiding, 2)
        lifted = generating_matrix(dim, "l", level=1).scale(1 / current.a)
        for (row, col), value in sorted(re_relations(braiding, lifted, True).entries.items(),
                                        key=lambda kv: kv[0]):
            residual = yangian.reduce(value)
            if residual:
                failures.append(f"injection {row}->{col}: {residual}")
    return Report.outcome("evaluation", params or {"braiding": braiding.name}, failures, started)


def check_rtt_yang(braiding: Braiding, params: Optional[Dict[str, Any]] = None) -> Report:
    """
    For an involutive braiding, the level-two RTT relations give
    [l_i^l[1], l_k^j[1]] = a (delta_k^l l_i^j[1] - delta_i^j l_k^l[1]) on L[1].

    Raises:
        ValueError: For a Hecke braiding.
    """
    started = start_timer()
    if braiding.is_hecke:
        raise ValueError("the gl(N) comparison uses the rational current R-matrix.")
    ctx = rtt_yangian(baxterize(braiding), 2)
    gens = {(g.lower, g.upper): NCPolynomial.generator(g)
            for g in matrix_generators(braiding.dim, "l", level=1)}
    a = ctx.current.a
    failures = []
    for (i, l), (k, j) in product(gens, repeat=2):
        expected = NCPolynomial()
        if k == l:
            expected = expected + gens[(i, j)] * a
        if i == j:
            expected = expected - gens[(k, l)] * a
        residual = ctx.reduce(commutator(gens[(i, l)], gens[(k, j)]) - expected)
        if residual:
            failures.append(f"[l_{i}^{l}[1], l_{k}^{j}[1]]: {residual}")
    return Report.outcome("rtt-yangian", params or {"braiding": braiding.name}, failures, started)


def check_level_grading(ctx: YangianContext) -> List[str]:
    """
    Relations that break the level grading: trigonometric relations must be
    homogeneous of their extraction level, rational ones bounded by it.
    """
    failures = []
    for relation, level in zip(ctx.algebra.relations, ctx.relation_levels):
        levels = set(relation.split_by_weight(ctx.algebra.word_weight))
        if ctx.current.form == RATIONAL:
            broken = max(levels) > level
        else:
            broken = levels != {level}
        if broken:
            failures.append(f"relation {relation} has levels {sorted(levels)}, expected {level}")
    return failures


def ehat_scaling_failures(ctx: YangianContext) -> List[str]:
    """eHat_k(u) = q^(-m(m-k)) k_q!(m-k)_q!/m_q! e_k(u) for 0 <= k <= m."""
    failures = []
    for k in range(ctx.m + 1):
        factor = trace_reduction_factor(ctx.braiding, ctx.m, k)
        residual = bethe_element(ctx, "eHat", k) - bethe_element(ctx, "e", k).scale(factor)
        for level, value in enumerate(residual.coefficients):
            if value:
                failures.append(f"eHat_{k} level {level}: {value}")
    return failures
