"""
The q -> 1 limit of braided q-Yangians and the Gaudin-type constructions.

In the basis L(u) = (q - q^-1) Lt(u) + I with q = exp(h/2), the braided
q-Yangian relations start at order h^2, where they give the Lie algebra
of the bracket [Lt_1(u), Lt_2(v)] = [P/(u-v), u Lt_1(u) + v Lt_2(v)].
Its Bethe elements QH_k are built with the multiplicative derivative
u d/du, evaluated at finitely many sites and compared with the classical
Poisson picture.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Any, Dict, List, Optional, Tuple

from sympy.polys.rings import ring

from ..config.constants import DEFAULT_H_ORDER, DEFAULT_LEVEL_CUTOFF
from ..utils.timing import start_timer
from .ncalg import (Generator, NCPolynomial, PresentedAlgebra, as_polynomial, commutator,
                    enveloping_gl, generating_matrix, matrix_generators)
from .operators import Entry, LegOperator
from .projectors import tower_for
from .reports import Report
from .rmatrix import Braiding, baxterize, build_braiding
from .scalars import DOMAIN, FIELD, RationalFunction, h_expand, scalar, split_by_symbols, u, v
from .yangian import BRAIDED, CurrentSeries, YangianContext, bethe_element, current_relations

TRIG_NAME = "l"


# --- The limit Lie algebra ---
def trig_bracket_tail(dim: int, a: int, b: int, cutoff: int) -> LegOperator:
    """
    The u^-a v^-b coefficient (Lt_1[a+b] - Lt_2[a+b]) P of the bracket side,
    zero once a + b leaves the level window.
    """
    if a < 1 or b < 1 or a + b > cutoff:
        return LegOperator.zero(dim, 2)
    top = generating_matrix(dim, TRIG_NAME, level=a + b)
    return (top.embed(1, 2) - top.embed(2, 2)) @ LegOperator.flip(dim)


def trig_relation_matrix(dim: int, a: int, b: int, cutoff: int) -> LegOperator:
    """[Lt_1[a], Lt_2[b]] - (Lt_1[a+b] - Lt_2[a+b]) P, zero unless a, b >= 1."""
    if a < 1 or b < 1:
        return LegOperator.zero(dim, 2)
    first = generating_matrix(dim, TRIG_NAME, level=a).embed(1, 2)
    second = generating_matrix(dim, TRIG_NAME, level=b).embed(2, 2)
    return first @ second - second @ first - trig_bracket_tail(dim, a, b, cutoff)


def trig_commutators(dim: int, cutoff: int) -> Dict[Tuple[Generator, Generator], NCPolynomial]:
    """
    [lt_i^j[a], lt_k^l[b]] read off entrywise from the bracket side:
    delta_k^j lt_i^l[a+b] - delta_i^l lt_k^j[a+b], truncated above the cutoff.
    """
    brackets = {}
    span = range(1, dim + 1)
    for a, b in product(range(1, cutoff + 1), repeat=2):
        tail = trig_bracket_tail(dim, a, b, cutoff)
        for i, j, k, l in product(span, repeat=4):
            x = Generator(TRIG_NAME, i, j, a)
            y = Generator(TRIG_NAME, k, l, b)
            brackets[(x, y)] = as_polynomial(tail.entry((i, k), (j, l)))
    return brackets


def trig_algebra(dim: int, cutoff: int = DEFAULT_LEVEL_CUTOFF) -> PresentedAlgebra:
    """
    U of the limit Lie algebra on lt_i^j[s], s = 1..D, presented for PBW rewriting.

    Raises:
        ValueError: If dim < 2 or cutoff < 1.
    """
    if dim < 2 or cutoff < 1:
        raise ValueError(f"need N >= 2 and D >= 1, got N={dim}, D={cutoff}.")
    generators = [g for s in range(1, cutoff + 1) for g in matrix_generators(dim, TRIG_NAME, s)]
    return PresentedAlgebra(generators, strategy="pbw", commutators=trig_commutators(dim, cutoff),
                            max_degree=cutoff, name=f"U(G_trig)(N={dim},D={cutoff})")


def _bracket(brackets: Dict[Tuple[Generator, Generator], NCPolynomial],
             x: NCPolynomial, y: NCPolynomial) -> NCPolynomial:
    """Bilinear extension of the generator bracket to linear elements."""
    result = NCPolynomial()
    for (gx,), cx in x.terms.items():
        for (gy,), cy in y.terms.items():
            result = result + brackets.get((gx, gy), NCPolynomial()) * (cx * cy)
    return result


def check_trig_algebra(dim: int, cutoff: int = DEFAULT_LEVEL_CUTOFF,
                       params: Optional[Dict[str, Any]] = None) -> Report:
    """Antisymmetry and the Jacobi identity of the extracted bracket."""
    started = start_timer()
    brackets = trig_commutators(dim, cutoff)
    gens = [g for s in range(1, cutoff + 1) for g in matrix_generators(dim, TRIG_NAME, s)]
    failures = []
    for x, y in product(gens, repeat=2):
        if brackets[(x, y)] + brackets[(y, x)]:
            failures.append(f"[{x},{y}] + [{y},{x}] != 0")
    for x, y, z in product(gens, repeat=3):
        if x.level + y.level + z.level > cutoff:
            continue
        px, py, pz = (NCPolynomial.generator(g) for g in (x, y, z))
        jacobi = (_bracket(brackets, px, _bracket(brackets, py, pz))
                  + _bracket(brackets, py, _bracket(brackets, pz, px))
                  + _bracket(brackets, pz, _bracket(brackets, px, py)))
        if jacobi:
            failures.append(f"Jacobi at {x},{y},{z}: {jacobi}")
    return Report.outcome("trig-algebra", params or {"n": dim, "D": cutoff}, failures, started)


# --- h-expansions ---
def h_components(p: Entry, order: int) -> List[NCPolynomial]:
    """Coefficients of h^0 .. h^order of an element with q-dependent coefficients."""
    parts = [dict() for _ in range(order + 1)]
    for word, coeff in as_polynomial(p).terms.items():
        series = h_expand(coeff, order)
        for power in range(order + 1):
            if series[power]:
                parts[power][word] = series[power]
    return [NCPolynomial(part) for part in parts]


def _require_hecke(braiding: Braiding) -> None:
    if not braiding.is_hecke:
        raise ValueError(f"{braiding.name} is involutive; the q -> 1 limit needs a Hecke braiding.")


def shifted_basis_series(dim: int, cutoff: int, omega: RationalFunction) -> CurrentSeries:
    """L(u) = I + omega Lt(u)."""
    return CurrentSeries((LegOperator.identity(dim, 1),) + tuple(
        generating_matrix(dim, TRIG_NAME, level=s).scale(omega) for s in range(1, cutoff + 1)))


def check_trig_limit(braiding: Braiding, cutoff: int = DEFAULT_LEVEL_CUTOFF,
                     params: Optional[Dict[str, Any]] = None) -> Report:
    """
    In the basis L = omega Lt + I the u^-i v^-j braided q-Yangian relation
    vanishes at h^0 and h^1 and equals P (G_(i+1)j - G_i(j+1)) P at h^2,
    G_ab being the limit-algebra relation matrix.
    """
    started = start_timer()
    _require_hecke(braiding)
    dim = braiding.dim
    series = shifted_basis_series(dim, cutoff, braiding.omega)
    flip = LegOperator.flip(dim)
    failures = []
    extracted = current_relations(baxterize(braiding), lambda s: series[s] if s <= cutoff else None,
                                  BRAIDED, cutoff)
    for i, j, relation in extracted:
        expected = flip @ (trig_relation_matrix(dim, i + 1, j, cutoff)
                           - trig_relation_matrix(dim, i, j + 1, cutoff)) @ flip
        keys = set(relation.entries) | set(expected.entries)
        for key in sorted(keys):
            orders = h_components(relation.entry(*key), 2)
            for power in (0, 1):
                if orders[power]:
                    failures.append(f"({i},{j}) entry {key} h^{power}: {orders[power]}")
            residual = orders[2] - as_polynomial(expected.entry(*key))
            if residual:
                failures.append(f"({i},{j}) entry {key} h^2: {residual}")
    return Report.outcome("trig-limit", params or {"braiding": braiding.name, "D": cutoff},
                          failures, started)


def tau_series(ctx: YangianContext, k: int) -> CurrentSeries:
    """
    tau_k(u) = sum_p (-1)^(k-p) C(k,p) eHat_p(u) in the basis L = omega Lt + I.

    Raises:
        ValueError: Unless 0 <= k <= m.
    """
    if not 0 <= k <= ctx.m:
        raise ValueError(f"tau_k needs 0 <= k <= {ctx.m}, got {k}.")
    series = shifted_basis_series(ctx.dim, ctx.cutoff, ctx.braiding.omega)
    tau = None
    for p in range(k + 1):
        term = bethe_element(ctx, "eHat", p, series).scale((-1) ** (k - p) * comb(k, p))
        tau = term if tau is None else tau + term
    return tau


def tau_expansion(ctx: YangianContext, k: int, order: int) -> List[CurrentSeries]:
    """
    h-components of tau_k(q^-2 u) = tau_k(exp(-h) u); entry n is the series
    of h^n coefficients. Level s picks up q^2s = exp(hs), which is
    exp(-h u d/du) acting on u^-s.
    """
    tau = tau_series(ctx, k).shifted(1, ctx.braiding.q)
    levels = [h_components(c, order) for c in tau.coefficients]
    return [CurrentSeries(tuple(levels[s][n] for s in range(len(levels))))
            for n in range(order + 1)]


def tau_leading_order(ctx: YangianContext, k: int, h_order: Optional[int] = None,
                      params: Optional[Dict[str, Any]] = None) -> Report:
    """
    tau_k(exp(-h) u) starts at h^k: the h^0 .. h^(k-1) coefficients vanish
    already in the free algebra on the Lt generators.
    """
    started = start_timer()
    _require_hecke(ctx.braiding)
    h_order = max(k, DEFAULT_H_ORDER) if h_order is None else h_order
    if h_order < k:
        raise ValueError(f"h order {h_order} is below k = {k}.")
    components = tau_expansion(ctx, k, h_order)
    failures = []
    for power in range(k):
        for level, value in enumerate(components[power].coefficients):
            if value:
                failures.append(f"h^{power} level {level}: {value}")
    return Report.outcome("tau-leading-order",
                          params or {"braiding": ctx.braiding.name, "k": k, "D": ctx.cutoff},
                          failures, started)


# --- Differential operators in the multiplicative derivative ---
def _theta_entry(value: Entry, variable: RationalFunction) -> Entry:
    if isinstance(value, NCPolynomial):
        return value.map_coefficients(lambda c: variable * c.diff(variable))
    return variable * value.diff(variable)


class DiffOpPoly:
    """
    sum_i A_i d^i with operator coefficients and d = x d/dx, so that
    d f(x) = f(x) d + x f'(x).
    """

    def __init__(self, terms: Dict[int, LegOperator], variable: RationalFunction = u):
        self.terms = {power: op for power, op in terms.items() if not op.is_zero()}
        self.variable = variable

    def theta(self, op: LegOperator) -> LegOperator:
        return op.map(lambda value: _theta_entry(value, self.variable))

    def __add__(self, other: "DiffOpPoly") -> "DiffOpPoly":
        terms = dict(self.terms)
        for power, op in other.terms.items():
            terms[power] = terms[power] + op if power in terms else op
        return DiffOpPoly(terms, self.variable)

    def __mul__(self, other: "DiffOpPoly") -> "DiffOpPoly":
        """(A d^i)(B d^j) = sum_r C(i,r) A theta^r(B) d^(i-r+j)."""
        terms: Dict[int, LegOperator] = {}
        for i, left in self.terms.items():
            for j, right in other.terms.items():
                derived = right
                for r in range(i + 1):
                    term = (left @ derived).scale(FIELD(comb(i, r)))
                    power = i - r + j
                    terms[power] = terms[power] + term if power in terms else term
                    derived = self.theta(derived)
        return DiffOpPoly(terms, self.variable)

    def apply_to_one(self, dim: int, legs: int) -> LegOperator:
        """The operator applied to the constant function 1: only d^0 survives."""
        return self.terms.get(0, LegOperator.zero(dim, legs))


# --- Evaluation at sites ---
@dataclass(frozen=True)
class EvaluationData:
    """K distinct nonzero points u_1..u_K and U(gl(N)) at each of them."""

    dim: int
    points: Tuple[RationalFunction, ...]

    def __post_init__(self):
        points = tuple(scalar(p) for p in self.points)
        object.__setattr__(self, "points", points)
        if any(not p for p in points):
            raise ValueError("evaluation points must be nonzero.")
        if len(set(points)) != len(points):
            raise ValueError(f"evaluation points must be distinct, got {self.describe()}.")
        for p in points:
            if any(any(m) for part in (p.numer, p.denom) for m in part.monoms()):
                raise ValueError(f"evaluation point {p.as_expr()} is not a number.")

    @property
    def sites(self) -> int:
        return len(self.points)

    def describe(self) -> str:
        return ",".join(str(p.as_expr()) for p in self.points)

    def site_id(self, a: int) -> int:
        """Site label used by enveloping_gl for the a-th point (0-based)."""
        return 0 if self.sites == 1 else a + 1

    @property
    def algebra(self) -> PresentedAlgebra:
        cached = self.__dict__.get("_algebra")
        if cached is None:
            cached = enveloping_gl(self.dim, max(self.sites, 1))
            object.__setattr__(self, "_algebra", cached)
        return cached

    def reduce(self, p) -> NCPolynomial:
        return self.algebra.pbw_reduce(as_polynomial(p))


def parse_sites(text: str) -> Tuple[RationalFunction, ...]:
    """'1,2,3/2' -> (1, 2, 3/2); an empty string gives no sites."""
    return tuple(scalar(Fraction(part.strip())) for part in text.split(",") if part.strip())


def evaluate_sites(data: EvaluationData, variable: RationalFunction = u,
                   trigonometric: bool = True) -> LegOperator:
    """
    Lt(x) -> sum_a M_a u_a/(x - u_a), or L(x) -> sum_a M_a/(x - u_a) for the
    rational Gaudin picture.
    """
    entries: Dict[Tuple[Tuple[int], Tuple[int]], NCPolynomial] = {}
    for a, point in enumerate(data.points):
        weight = (point if trigonometric else FIELD.one) / (variable - point)
        for g in matrix_generators(data.dim, "m", 0, data.site_id(a)):
            key = ((g.lower,), (g.upper,))
            entries[key] = entries.get(key, NCPolynomial()) + NCPolynomial.generator(g) * weight
    return LegOperator(data.dim, 1, entries)


def check_evaluate_sites(data: EvaluationData, params: Optional[Dict[str, Any]] = None) -> Report:
    """[Lt_1(u), Lt_2(v)] = [P/(u-v), u Lt_1(u) + v Lt_2(v)] holds for the evaluated matrices."""
    started = start_timer()
    dim = data.dim
    first = evaluate_sites(data, u).embed(1, 2)
    second = evaluate_sites(data, v).embed(2, 2)
    flip = LegOperator.flip(dim)
    moved = first.scale(u) + second.scale(v)
    expected = (flip @ moved - moved @ flip).scale(1 / (u - v))
    residual = (first @ second - second @ first) - expected
    failures = []
    for key, value in sorted(residual.entries.items(), key=lambda kv: kv[0]):
        reduced = data.reduce(value)
        if reduced:
            failures.append(f"entry {key}: {reduced}")
    return Report.outcome("evaluate-sites", params or {"n": dim, "sites": data.describe()},
                          failures, started)


# --- Bethe elements of the limit algebra ---
def _classical_skew(dim: int) -> LegOperator:
    return tower_for(build_braiding("flip", dim))[dim]


def qh_element(data: EvaluationData, k: int, variable: RationalFunction = u) -> NCPolynomial:
    """
    QH_k(x) = Tr_(1..m) P^(m) (Lt_1(x) - I d)...(Lt_k(x) - I d) 1 with the
    classical trace and skew-symmetrizer, m = N, evaluated at the sites.

    Raises:
        ValueError: Unless 1 <= k <= N.
    """
    m = data.dim
    if not 1 <= k <= m:
        raise ValueError(f"QH_k needs 1 <= k <= {m}, got {k}.")
    evaluated = evaluate_sites(data, variable)
    identity = LegOperator.identity(m, m)
    operator = DiffOpPoly({0: identity}, variable)
    for j in range(1, k + 1):
        operator = operator * DiffOpPoly({0: evaluated.embed(j, m), 1: -identity}, variable)
    applied = _classical_skew(m) @ operator.apply_to_one(m, m)
    return data.reduce(as_polynomial(applied.partial_trace(range(1, m + 1)).entry((), ())))


def qh_series(dim: int, k: int, cutoff: int) -> CurrentSeries:
    """QH_k(u) in U(G_trig) up to u^-D; d acts on the level-s coefficient as -s."""
    if not 1 <= k <= dim:
        raise ValueError(f"QH_k needs 1 <= k <= {dim}, got {k}.")
    zero = LegOperator.zero(dim, dim)
    current = CurrentSeries.constant(LegOperator.identity(dim, dim), cutoff)
    for j in range(k, 0, -1):
        lt = CurrentSeries((zero,) + tuple(
            generating_matrix(dim, TRIG_NAME, level=s).embed(j, dim) for s in range(1, cutoff + 1)))
        derived = CurrentSeries(tuple(c.scale(FIELD(-s)) for s, c in enumerate(current.coefficients)))
        current = lt * current - derived
    skew = _classical_skew(dim)
    return current.map(lambda c: as_polynomial((skew @ c).partial_trace(range(1, dim + 1)).entry((), ())))


def expand_at_infinity(value: RationalFunction, order: int) -> List[RationalFunction]:
    """
    Coefficients of u^0 .. u^-order of a rational function of u regular at infinity.

    Raises:
        ValueError: If the function grows at infinity.
    """
    numer = split_by_symbols(FIELD(value.numer), ("u",))
    denom = split_by_symbols(FIELD(value.denom), ("u",))
    deg_n = max((e for (e,) in numer), default=0)
    deg_d = max(e for (e,) in denom)
    if deg_n > deg_d:
        raise ValueError(f"{value.as_expr()} has a pole at infinity.")
    shift = deg_d - deg_n
    a = [numer.get((deg_n - i,), FIELD.zero) for i in range(order + 1)]
    b = [denom.get((deg_d - i,), FIELD.zero) for i in range(order + 1)]
    quotient: List[RationalFunction] = []
    for n in range(order + 1):
        acc = a[n] - sum((b[i] * quotient[n - i] for i in range(1, n + 1)), FIELD.zero)
        quotient.append(acc / b[0])
    return [FIELD.zero] * shift + quotient[:order + 1 - shift]


def check_qh_naturality(data: EvaluationData, k: int, cutoff: int = DEFAULT_LEVEL_CUTOFF,
                        params: Optional[Dict[str, Any]] = None) -> Report:
    """The evaluation lt_i^j[s] -> sum_a u_a^s m_i^j(a) carries QH_k of U(G_trig) to qh_element."""
    started = start_timer()
    abstract = qh_series(data.dim, k, cutoff)

    def image(g: Generator) -> NCPolynomial:
        return sum((NCPolynomial.generator(Generator("m", g.lower, g.upper, 0, data.site_id(a)))
                    * point ** g.level for a, point in enumerate(data.points)), NCPolynomial())

    direct = qh_element(data, k)
    expanded = [dict() for _ in range(cutoff + 1)]
    for word, coeff in direct.terms.items():
        for level, c in enumerate(expand_at_infinity(coeff, cutoff)):
            if c:
                expanded[level][word] = c
    failures = []
    for level in range(cutoff + 1):
        residual = data.reduce(abstract[level].substitute(image) - NCPolynomial(expanded[level]))
        if residual:
            failures.append(f"level {level}: {residual}")
    return Report.outcome("qh-naturality", params or {"n": data.dim, "k": k,
                                                      "sites": data.describe()}, failures, started)


def check_qh_commute(data: EvaluationData, k: int, l: int,
                     params: Optional[Dict[str, Any]] = None) -> Report:
    """[QH_k(u), QH_l(v)] normal-orders to zero in U(gl(N))^(x)K (x) Q(u, v)."""
    started = start_timer()
    residual = data.reduce(commutator(qh_element(data, k, u), qh_element(data, l, v)))
    failures = [f"[QH_{k}(u), QH_{l}(v)] = {residual}"] if residual else []
    return Report.outcome("qh-commute", params or {"n": data.dim, "k": k, "l": l,
                                                   "sites": data.describe()}, failures, started)


# --- Classical Poisson picture ---
class KirillovBracket:
    """The linear Poisson bracket of Sym(gl(N))^(x)K on commuting coordinates m_a_i_j."""

    def __init__(self, data: EvaluationData):
        self.data = data
        names = [f"m{a}_{i}_{j}" for a in range(data.sites)
                 for i in range(1, data.dim + 1) for j in range(1, data.dim + 1)]
        self.ring, *gens = ring(",".join(names), DOMAIN) if names else (None,)
        self.coords = {}
        for name, gen in zip(names, gens):
            a, i, j = (int(x) for x in name[1:].split("_"))
            self.coords[(a, i, j)] = gen

    def generator_bracket(self, x: Tuple[int, int, int], y: Tuple[int, int, int]):
        """{m_i^j(a), m_k^l(b)} = delta_ab (delta_k^j m_i^l(a) - delta_i^l m_k^j(a))."""
        (a, i, j), (b, k, l) = x, y
        result = self.ring.zero
        if a != b:
            return result
        if j == k:
            result += self.coords[(a, i, l)]
        if i == l:
            result -= self.coords[(a, k, j)]
        return result

    def __call__(self, f, g):
        """Leibniz extension over all coordinate pairs."""
        result = self.ring.zero
        for x, gx in self.coords.items():
            df = f.diff(gx)
            if not df:
                continue
            for y, gy in self.coords.items():
                dg = g.diff(gy)
                if dg:
                    result += df * dg * self.generator_bracket(x, y)
        return result

    def evaluated(self, variable: RationalFunction) -> List[List[Any]]:
        """L(x) = sum_a M_a/(x - u_a) as a nested list of ring elements."""
        span = range(1, self.data.dim + 1)
        return [[sum((self.coords[(a, i, j)] * self.ring.ground_new(1 / (variable - point))
                      for a, point in enumerate(self.data.points)), self.ring.zero)
                 for j in span] for i in span]


def _trace_power(matrix: List[List[Any]], k: int, zero) -> Any:
    size = len(matrix)
    power = [[matrix[i][j] for j in range(size)] for i in range(size)]
    for _ in range(k - 1):
        power = [[sum((power[i][m] * matrix[m][j] for m in range(size)), zero)
                  for j in range(size)] for i in range(size)]
    return sum((power[i][i] for i in range(size)), zero)


def classical_poisson(data: EvaluationData, k: int, l: int,
                      params: Optional[Dict[str, Any]] = None) -> Report:
    """
    With r = P/(u-v) and L(u) = sum_a M_a/(u - u_a): the Kirillov bracket
    reproduces {L_1(u), L_2(v)} = [r(u,v), L_1(u) + L_2(v)], that right-hand
    side is skew-symmetric, and {Tr L^k(u), Tr L^l(v)} = 0.

    Raises:
        ValueError: If k or l is below 1.
    """
    started = start_timer()
    if k < 1 or l < 1:
        raise ValueError(f"powers must be >= 1, got k={k}, l={l}.")
    params = params or {"n": data.dim, "k": k, "l": l, "sites": data.describe()}
    if data.sites == 0:
        return Report.outcome("classical-poisson", params, [], started)
    bracket = KirillovBracket(data)
    zero = bracket.ring.zero
    at_u, at_v = bracket.evaluated(u), bracket.evaluated(v)
    span = range(1, data.dim + 1)

    def r_side(i, j, kk, ll, first, second, x, y):
        """[P/(x-y), L_1(x) + L_2(y)] at (i,k),(j,l)."""
        value = zero
        if kk == j:
            value += second[i - 1][ll - 1] - first[i - 1][ll - 1]
        if i == ll:
            value += first[kk - 1][j - 1] - second[kk - 1][j - 1]
        return value * bracket.ring.ground_new(1 / (x - y))

    failures = []
    for i, j, kk, ll in product(span, repeat=4):
        rhs = r_side(i, j, kk, ll, at_u, at_v, u, v)
        if bracket(at_u[i - 1][j - 1], at_v[kk - 1][ll - 1]) != rhs:
            failures.append(f"{{l_{i}^{j}(u), l_{kk}^{ll}(v)}} != [r, L_1 + L_2]")
        if rhs + r_side(kk, ll, i, j, at_v, at_u, v, u) != zero:
            failures.append(f"[r, L_1 + L_2] not skew at ({i},{kk}),({j},{ll})")
    value = bracket(_trace_power(at_u, k, zero), _trace_power(at_v, l, zero))
    if value:
        failures.append(f"{{Tr L^{k}(u), Tr L^{l}(v)}} = {value.as_expr()}")
    return Report.outcome("classical-poisson", params, failures, started)
