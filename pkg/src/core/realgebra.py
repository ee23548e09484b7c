"""
Reflection equation algebras, plain and modified.

Covers quantum elementary symmetric polynomials and power sums, centrality,
the Cayley-Hamilton identity and the forms of the characteristic polynomial,
the Capelli limit in U(gl(N)), the shift isomorphism between the two
algebras, the vector, covector and adjoint representations, and the braided
Lie bracket with its Jacobi and affine cocycle identities.
"""
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from ..config.constants import DEFAULT_IDEAL_DEGREE, DEFAULT_RANK_TERMS
from ..utils.timing import start_timer
from .errors import BraidingValidationError
from .ncalg import (Generator, NCPolynomial, PresentedAlgebra, as_polynomial, commutator,
                    enveloping_gl, generating_matrix, matrix_generators, overline_copy,
                    underline_copy)
from .operators import Entry, LegOperator
from .projectors import BiRank, bi_rank as fit_bi_rank, skew_symmetrizer
from .reports import Report
from .rmatrix import Braiding, build_braiding, partial_r_trace, r_trace
from .scalars import DOMAIN, FIELD, RationalFunction, q, q_factorial, split_by_symbols, t

LEFT = "left"
RIGHT = "right"


@dataclass
class REContext:
    """An RE or modified RE algebra on the entries of L = ||l_i^j||."""

    braiding: Braiding
    modified: bool
    side: str
    algebra: PresentedAlgebra
    matrix: LegOperator
    _bi_rank: Optional[BiRank] = field(default=None, repr=False)

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

    def copy(self, k: int, total: int) -> LegOperator:
        """L_{k bar} for left contexts, L_{k under} (relative to `total`) for right ones."""
        if self.side == LEFT:
            return overline_copy(self.matrix, k, total, self.braiding)
        return underline_copy(self.matrix, k, total, self.braiding)

    def trace(self, op: LegOperator, legs: Sequence[int]) -> LegOperator:
        return partial_r_trace(op, legs, self.braiding, self.side)

    def reduce(self, p) -> NCPolynomial:
        return self.algebra.reduce(as_polynomial(p))


def re_relations(braiding: Braiding, matrix: LegOperator, modified: bool,
                 side: str = LEFT) -> LegOperator:
    """
    The relation matrix whose entries generate the defining ideal.

    left:  R L1 R L1 - L1 R L1 R  (- (R L1 - L1 R) when modified)
    right: R L2 R L2 - L2 R L2 R  - (R L2 - L2 R)
    """
    r = braiding.r
    placed = matrix.embed(1 if side == LEFT else 2, 2)
    quadratic = r @ placed @ r @ placed - placed @ r @ placed @ r
    if not modified:
        return quadratic
    return quadratic - (r @ placed - placed @ r)


def re_algebra(braiding: Braiding, modified: bool = False, side: str = LEFT,
               max_degree: int = DEFAULT_IDEAL_DEGREE,
               bi_rank: Optional[BiRank] = None) -> REContext:
    """
    Build the RE algebra (plain, left) or the modified RE algebra (left or right).

    Raises:
        ValueError: For a plain right-sided algebra or an unknown side.
    """
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be '{LEFT}' or '{RIGHT}', got '{side}'.")
    if side == RIGHT and not modified:
        raise ValueError("right-sided RE algebras exist only in the modified form.")
    matrix = generating_matrix(braiding.dim, "l")
    relations = list(re_relations(braiding, matrix, modified, side).entries.values())
    kind = "modified RE" if modified else "RE"
    algebra = PresentedAlgebra(matrix_generators(braiding.dim, "l"), relations,
                               strategy="filtered" if modified else "graded",
                               max_degree=max_degree, name=f"{kind}({braiding.name},{side})")
    return REContext(braiding, modified, side, algebra, matrix, bi_rank)


def entry_failures(op: LegOperator, ctx_or_algebra, label: str) -> List[str]:
    """Witnesses for the entries of `op` that do not reduce to zero."""
    algebra = getattr(ctx_or_algebra, "algebra", ctx_or_algebra)
    failures = []
    for (row, col), value in sorted(op.entries.items()):
        residual = algebra.reduce(as_polynomial(value))
        if residual:
            failures.append(f"{label} {row}->{col}: {residual}")
    return failures


# --- Symmetric polynomials ---
def elementary_symmetric(ctx: REContext, k: int) -> NCPolynomial:
    """
    e_k = Tr_R(1..k)(P^(k) L_1bar ... L_kbar), e_0 = 1; right contexts use
    underline copies and B-traces.

    Raises:
        ValueError: If k is outside 0..m.
    """
    if k < 0 or k > ctx.m:
        raise ValueError(f"k must lie in 0..{ctx.m}, got {k}.")
    if k == 0:
        return NCPolynomial.constant(1)
    op = skew_symmetrizer(ctx.braiding, k)
    for j in range(1, k + 1):
        op = op @ ctx.copy(j, k)
    return as_polynomial(ctx.trace(op, range(1, k + 1)).entry((), ()))


def matrix_power(matrix: LegOperator, k: int) -> LegOperator:
    result = LegOperator.identity(matrix.dim, 1)
    for _ in range(k):
        result = result @ matrix
    return result


def power_sum(ctx: REContext, k: int) -> NCPolynomial:
    """p_k = Tr_R L^k."""
    return as_polynomial(r_trace(matrix_power(ctx.matrix, k), ctx.braiding, ctx.side))


def check_centrality(ctx: REContext, element: NCPolynomial, label: str = "element",
                     params: Optional[Dict[str, Any]] = None) -> Report:
    """[element, l_i^j] lies in the ideal for every generator."""
    started = start_timer()
    failures = []
    for g in ctx.algebra.generators:
        residual = ctx.reduce(commutator(element, NCPolynomial.generator(g)))
        if residual:
            failures.append(f"[{label}, {g}] = {residual}")
    return Report.outcome("centrality", params or {"element": label}, failures, started)


# --- Characteristic polynomials ---
def split_t(value: Entry) -> Dict[int, NCPolynomial]:
    """Coefficients of the powers of t in an entry whose scalars are polynomial in t."""
    parts: Dict[int, Dict] = {}
    for word, coeff in as_polynomial(value).terms.items():
        for (power,), piece in split_by_symbols(coeff, ("t",)).items():
            parts.setdefault(power, {})[word] = piece
    return {power: NCPolynomial(terms) for power, terms in parts.items() if terms}


def evaluate_at_matrix(coefficients: Dict[int, NCPolynomial], matrix: LegOperator) -> LegOperator:
    """sum_j M^j c_j with each central coefficient placed on the right."""
    result = LegOperator.zero(matrix.dim, 1)
    for power, coeff in coefficients.items():
        result = result + matrix_power(matrix, power).scale(coeff)
    return result


def _trace_of_factors(ctx: REContext, factors: List[LegOperator], m: int) -> NCPolynomial:
    op = skew_symmetrizer(ctx.braiding, m)
    for factor in factors:
        op = op @ factor
    return as_polynomial(ctx.trace(op, range(1, m + 1)).entry((), ()))


def characteristic_poly(ctx: REContext, form: str = "sum") -> Dict[int, NCPolynomial]:
    """
    Characteristic polynomial of the generating matrix as {power of t: coefficient}.

    Forms:
        sum: sum_k t^(m-k) (-q)^k e_k.
        productTrace: q^m Tr_R(1..m)(P^(m) (tI - L_1bar)(q^2 tI - L_2bar)...).
        modified: q^m Tr_R(1..m)(P^(m) prod_k (q^(2(k-1))(t - q^(1-k)(k-1)_q) I - L_kbar)),
            factors in ascending k, for modified contexts.

    Raises:
        ValueError: On a form that does not match the context.
    """
    br, m = ctx.braiding, ctx.m
    qq = br.q
    if form == "sum":
        if ctx.modified:
            raise ValueError("the sum form belongs to the plain RE algebra.")
        return {m - k: elementary_symmetric(ctx, k) * ((-qq) ** k) for k in range(m + 1)}
    if form not in ("productTrace", "modified"):
        raise ValueError(f"unknown characteristic polynomial form '{form}'.")
    if (form == "modified") != ctx.modified:
        raise ValueError(f"form '{form}' does not match the context.")
    factors = []
    for k in range(1, m + 1):
        if form == "productTrace":
            shift = qq ** (2 * (k - 1)) * t
        else:
            shift = qq ** (2 * (k - 1)) * (t - qq ** (1 - k) * br.qint(k - 1))
        factors.append(LegOperator.identity(ctx.dim, m).scale(shift) - ctx.copy(k, m))
    return {p: c * qq ** m for p, c in split_t(_trace_of_factors(ctx, factors, m)).items()}


def check_cayley_hamilton(ctx: REContext, params: Optional[Dict[str, Any]] = None) -> Report:
    """sum_k (-q)^k L^(m-k) e_k(L) = 0 entrywise modulo the RE ideal."""
    started = start_timer()
    if ctx.modified or ctx.bi_rank.n != 0:
        raise ValueError("Cayley-Hamilton needs a plain RE algebra of bi-rank (m|0).")
    identity = evaluate_at_matrix(characteristic_poly(ctx, "sum"), ctx.matrix)
    return Report.outcome("cayley-hamilton", params or {"braiding": ctx.braiding.name},
                          entry_failures(identity, ctx, "entry"), started)


def sigma_identity_residual(m: int, k: int) -> RationalFunction:
    """sigma_k(t, q^2 t, ..., q^(2(m-1)) t) - q^(k(m-1)) m_q!/(k_q!(m-k)_q!) t^k."""
    points = [q ** (2 * i) * t for i in range(m)]
    sigma = FIELD.zero
    for chosen in combinations(points, k):
        term = FIELD.one
        for value in chosen:
            term *= value
        sigma += term
    binomial = q_factorial(m) / (q_factorial(k) * q_factorial(m - k))
    return sigma - q ** (k * (m - 1)) * binomial * t ** k


def check_char_poly_forms(ctx: REContext, params: Optional[Dict[str, Any]] = None,
                          sigma_up_to: int = 3) -> Report:
    """
    The sum and product-trace forms agree coefficient-wise modulo the ideal,
    the q-binomial sigma identity holds, and copies shift left under the
    skew-symmetrized R-trace.
    """
    started = start_timer()
    failures: List[str] = []
    m = ctx.m
    by_sum = characteristic_poly(ctx, "sum")
    by_trace = characteristic_poly(ctx, "productTrace")
    for power in sorted(set(by_sum) | set(by_trace)):
        residual = ctx.reduce(by_sum.get(power, NCPolynomial()) - by_trace.get(power, NCPolynomial()))
        if residual:
            failures.append(f"t^{power}: {residual}")

    for size in range(1, max(sigma_up_to, m) + 1):
        for k in range(size + 1):
            if sigma_identity_residual(size, k):
                failures.append(f"sigma_{k} identity fails at m={size}")

    for k in range(1, m + 1):
        target = None
        for chosen in combinations(range(1, m + 1), k):
            factors = [ctx.copy(s, m) for s in chosen]
            value = _trace_of_factors(ctx, factors, m)
            if target is None:
                target = value
                continue
            residual = ctx.reduce(value - target)
            if residual:
                failures.append(f"shift-left {chosen}: {residual}")
    return Report.outcome("char-poly-forms", params or {"braiding": ctx.braiding.name},
                          failures, started)


def check_modified_char_poly(ctx: REContext, params: Optional[Dict[str, Any]] = None) -> Report:
    """The modified characteristic polynomial annihilates the generating matrix."""
    started = start_timer()
    if not ctx.modified:
        raise ValueError("the modified characteristic polynomial needs a modified context.")
    coefficients = characteristic_poly(ctx, "modified")
    identity = evaluate_at_matrix(coefficients, ctx.matrix)
    failures = entry_failures(identity, ctx, "entry")
    lead = coefficients.get(ctx.m, NCPolynomial())
    if lead != NCPolynomial.constant(1):
        failures.append(f"leading coefficient {lead}")
    return Report.outcome("modified-char-poly", params or {"braiding": ctx.braiding.name},
                          failures, started)


def capelli_polynomial(dim: int) -> Dict[int, NCPolynomial]:
    """Tr(P^(N) (tI - M_1)((t-1)I - M_2)...((t-N+1)I - M_N)) with classical P and trace."""
    flip = build_braiding("flip", dim)
    matrix = generating_matrix(dim, "m")
    op = skew_symmetrizer(flip, dim)
    for k in range(1, dim + 1):
        op = op @ (LegOperator.identity(dim, dim).scale(t - (k - 1)) - matrix.embed(k, dim))
    return split_t(op.partial_trace(range(1, dim + 1)).entry((), ()))


def capelli_check(dim: int, params: Optional[Dict[str, Any]] = None) -> Report:
    """The Capelli-type polynomial annihilates the generating matrix of U(gl(N))."""
    started = start_timer()
    if dim < 1:
        raise ValueError(f"N must be >= 1, got {dim}.")
    algebra = enveloping_gl(dim)
    coefficients = {p: algebra.pbw_reduce(c) for p, c in capelli_polynomial(dim).items()}
    identity = evaluate_at_matrix(coefficients, generating_matrix(dim, "m"))
    return Report.outcome("capelli", params or {"n": dim},
                          entry_failures(identity, algebra, "entry"), started)


def check_shift_isomorphism(braiding: Braiding, max_degree: int = DEFAULT_IDEAL_DEGREE,
                            params: Optional[Dict[str, Any]] = None) -> Report:
    """
    L_mod = L + I/(q - q^-1) carries the modified relations into the RE ideal
    and back.

    Raises:
        ValueError: For involutive braidings, where the map is undefined.
    """
    started = start_timer()
    if not braiding.is_hecke:
        raise ValueError("the shift isomorphism needs a Hecke braiding (q^2 != 1).")
    plain = re_algebra(braiding, False, max_degree=max_degree)
    modified = re_algebra(braiding, True, max_degree=max_degree)
    shift = 1 / braiding.omega

    def shifted(sign: int):
        def image(g: Generator) -> NCPolynomial:
            value = NCPolynomial.generator(g)
            return value + shift * sign if g.lower == g.upper else value
        return image

    failures = []
    for relation in modified.algebra.relations:
        residual = plain.reduce(relation.substitute(shifted(+1)))
        if residual:
            failures.append(f"modified -> RE: {residual}")
            break
    for relation in plain.algebra.relations:
        residual = modified.reduce(relation.substitute(shifted(-1)))
        if residual:
            failures.append(f"RE -> modified: {residual}")
            break
    return Report.outcome("shift-isomorphism", params or {"braiding": braiding.name},
                          failures, started)


def check_overline_form(ctx: REContext, params: Optional[Dict[str, Any]] = None) -> Report:
    """R_1 L_1bar L_2bar - L_1bar L_2bar R_1 times R gives the RE relations exactly."""
    started = start_timer()
    br = ctx.braiding
    l1, l2 = overline_copy(ctx.matrix, 1, 2, br), overline_copy(ctx.matrix, 2, 2, br)
    form = br.r @ l1 @ l2 - l1 @ l2 @ br.r
    plain = re_relations(br, ctx.matrix, False)
    failures = []
    difference = form @ br.r - plain
    if not difference.is_zero():
        failures.append(f"(overline form) R != RE relations: {difference.witness()}")
    failures.extend(entry_failures(form, ctx, "overline form"))
    return Report.outcome("re-overline-form", params or {"braiding": br.name}, failures, started)


# --- Representations and the braided Lie structure ---
PairMap = Dict[Tuple[Generator, Generator], NCPolynomial]


def _invert(dod: Dict[int, Dict[int, RationalFunction]], size: int, what: str
            ) -> Dict[int, Dict[int, RationalFunction]]:
    try:
        inverse = DomainMatrix(dod, (size, size), DOMAIN).inv()
    except DMNonInvertibleMatrixError as exc:
        raise BraidingValidationError(f"singular system while extracting the {what}") from exc
    return inverse.to_sparse().rep


@dataclass
class BraidedLieData:
    """Bracket, the braiding operator of End(V)^(x)2 and the pairing of a braiding."""

    braiding: Braiding
    bracket: PairMap
    q_operator: PairMap

    def pairing(self, x: Generator, y: Generator) -> RationalFunction:
        """<l_i^j, l_k^l> = B_k^j delta_i^l."""
        if x.lower != y.upper:
            return FIELD.zero
        return self.braiding.b.matrix_entry(y.lower, x.upper)


def braided_lie_data(braiding: Braiding) -> BraidedLieData:
    """
    Structure constants of the bracket from
    sum_(m,e) R_mk^el [l_i^m, l_e^j] = (L_1 - R^-1 L_1 R)_ik^jl,
    and the operator Q on 2-tensors with Q(L_1 L_2bar) = R^-1 (L_1 L_2bar) R.
    """
    dim = braiding.dim
    r, r_inv = braiding.r, braiding.r_inverse
    pairs = list(product(range(1, dim + 1), repeat=2))
    order = {pair: n for n, pair in enumerate(pairs)}

    system: Dict[int, Dict[int, RationalFunction]] = {}
    for ((m, k), (e, l)), value in r.entries.items():
        system.setdefault(order[(k, l)], {})[order[(m, e)]] = value
    solved = _invert(system, len(pairs), "bracket")

    matrix = generating_matrix(dim, "l")
    l1 = matrix.embed(1, 2)
    rhs = l1 - r_inv @ l1 @ r
    bracket: PairMap = {}
    for i, j in pairs:
        for (m, e), row in ((pairs[a], cols) for a, cols in solved.items()):
            value = NCPolynomial()
            for b, coeff in row.items():
                k, l = pairs[b]
                value = value + as_polynomial(rhs.entry((i, k), (j, l))) * coeff
            bracket[(Generator("l", i, m), Generator("l", e, j))] = value
    for x in matrix_generators(dim, "l"):
        for y in matrix_generators(dim, "l"):
            bracket.setdefault((x, y), NCPolynomial())

    tensor = l1 @ overline_copy(matrix, 2, 2, braiding)
    image = r_inv @ tensor @ r
    words = [(x, y) for x in matrix_generators(dim, "l") for y in matrix_generators(dim, "l")]
    word_index = {w: n for n, w in enumerate(words)}
    two_legs = list(tensor.indices())
    keys = [(row, col) for row in two_legs for col in two_legs]
    coefficients: Dict[int, Dict[int, RationalFunction]] = {}
    for n, key in enumerate(keys):
        for word, coeff in as_polynomial(tensor.entry(*key)).terms.items():
            coefficients.setdefault(n, {})[word_index[word]] = coeff
    inverse = _invert(coefficients, len(words), "braiding of End(V)")
    q_operator: PairMap = {}
    for w_index, row in inverse.items():
        value = NCPolynomial()
        for n, coeff in row.items():
            value = value + as_polynomial(image.entry(*keys[n])) * coeff
        q_operator[words[w_index]] = value
    return BraidedLieData(braiding, bracket, q_operator)


def _strip(g: Generator) -> Generator:
    return g._replace(level=0)


def apply_pair_map(p: NCPolynomial, position: int, mapping: PairMap,
                   labels: str = "none") -> NCPolynomial:
    """
    Apply a map on 2-tensors to factors position, position+1 of every word.

    labels: 'none' ignores levels, 'swap' exchanges the levels of the two
    factors (braiding of affine tensors), 'sum' gives the output the sum of
    the levels (affine bracket).
    """
    result = NCPolynomial()
    for word, coeff in p.terms.items():
        x, y = word[position - 1], word[position]
        head, tail = word[:position - 1], word[position + 1:]
        image = mapping[(_strip(x), _strip(y))]
        if labels == "swap":
            image = NCPolynomial({(a._replace(level=y.level), b._replace(level=x.level)): c
                                  for (a, b), c in image.terms.items()})
        elif labels == "sum":
            image = NCPolynomial({(a._replace(level=x.level + y.level),): c
                                  for (a,), c in image.terms.items()})
        result = result + NCPolynomial.word(head, coeff) * image * NCPolynomial.word(tail)
    return result


def _cyclic_sum(data: BraidedLieData, p: NCPolynomial, labels: str) -> NCPolynomial:
    """(I + Q_1 Q_2 + Q_2 Q_1) on 3-tensors; Q_1 Q_2 applies Q_2 first."""
    q_op = data.q_operator
    q12 = apply_pair_map(apply_pair_map(p, 2, q_op, labels), 1, q_op, labels)
    q21 = apply_pair_map(apply_pair_map(p, 1, q_op, labels), 2, q_op, labels)
    return p + q12 + q21


def _require_involutive(braiding: Braiding, what: str) -> None:
    if braiding.is_hecke:
        raise ValueError(f"the {what} is stated for involutive braidings only.")


def braided_jacobi_check(braiding: Braiding, params: Optional[Dict[str, Any]] = None) -> Report:
    """[,][,]_12 (I + Q_1 Q_2 + Q_2 Q_1) = 0 on basis tensors of End(V)^(x)3."""
    started = start_timer()
    _require_involutive(braiding, "braided Jacobi identity")
    data = braided_lie_data(braiding)
    gens = matrix_generators(braiding.dim, "l")
    failures = []
    for x, y, z in product(gens, repeat=3):
        cyclic = _cyclic_sum(data, NCPolynomial.word((x, y, z)), "none")
        value = apply_pair_map(apply_pair_map(cyclic, 1, data.bracket), 1, data.bracket)
        if value:
            failures.append(f"Jacobi at {x},{y},{z}: {value}")
    return Report.outcome("braided-jacobi", params or {"braiding": braiding.name},
                          failures, started)


DEFAULT_COCYCLE_DEGREES = ((1, -1, 0), (-1, 1, 0), (0, 1, -1), (1, 0, -1), (-1, 0, 1),
                           (0, -1, 1), (2, -1, -1), (-1, 2, -1), (1, 1, 1), (0, 0, 0))


def affine_cocycle_check(braiding: Braiding,
                         sample_degrees: Sequence[Tuple[int, int, int]] = DEFAULT_COCYCLE_DEGREES,
                         params: Optional[Dict[str, Any]] = None) -> Report:
    """omega [,]_23 (I + Q_1 Q_2 + Q_2 Q_1) = 0 with omega(X[a], Y[b]) = a <X,Y> delta(a+b)."""
    started = start_timer()
    _require_involutive(braiding, "cocycle identity")
    data = braided_lie_data(braiding)
    gens = matrix_generators(braiding.dim, "l")
    failures = []
    for a, b, c in sample_degrees:
        for x, y, z in product(gens, repeat=3):
            word = (x._replace(level=a), y._replace(level=b), z._replace(level=c))
            cyclic = _cyclic_sum(data, NCPolynomial.word(word), "swap")
            bracketed = apply_pair_map(cyclic, 2, data.bracket, "sum")
            total = FIELD.zero
            for (left, right), coeff in bracketed.terms.items():
                if left.level + right.level == 0:
                    total += coeff * left.level * data.pairing(_strip(left), _strip(right))
            if total:
                failures.append(f"degrees {(a, b, c)} at {x},{y},{z}: {total.as_expr()}")
                break
    return Report.outcome("affine-cocycle", params or {"braiding": braiding.name},
                          failures, started)


def representation_matrices(braiding: Braiding, which: str) -> Dict[Generator, LegOperator]:
    """
    rho(l_i^j) for the vector (rho x_k = B_k^j x_i), covector
    (rho x^k = -x^l R_li^kj) or adjoint (rho l_k^l = [l_i^j, l_k^l]) module.

    Raises:
        ValueError: On an unknown representation name.
    """
    dim = braiding.dim
    span = range(1, dim + 1)
    gens = matrix_generators(dim, "l")
    if which == "vector":
        return {g: LegOperator(dim, 1, {((g.lower,), (k,)): braiding.b.matrix_entry(k, g.upper)
                                        for k in span}) for g in gens}
    elif which == "covector":
        return {g: LegOperator(dim, 1, {((l,), (k,)): -braiding.r.entry((l, g.lower), (k, g.upper))
                                        for l in span for k in span}) for g in gens}
    elif which == "adjoint":
        bracket = braided_lie_data(braiding).bracket

        def index(h: Generator) -> int:
            return (h.lower - 1) * dim + h.upper

        matrices = {}
        for g in gens:
            entries = {}
            for h in gens:
                for (out,), coeff in bracket[(g, h)].terms.items():
                    entries[((index(out),), (index(h),))] = coeff
            matrices[g] = LegOperator(dim * dim, 1, entries)
        return matrices
    raise ValueError(f"unknown representation '{which}'.")


def represent(p: NCPolynomial, matrices: Dict[Generator, LegOperator]) -> LegOperator:
    """Image of p: words map to products rho(a) rho(b) ..., constants to multiples of I."""
    dim = next(iter(matrices.values())).dim
    result = LegOperator.zero(dim, 1)
    for word, coeff in p.terms.items():
        term = LegOperator.identity(dim, 1)
        for g in word:
            term = term @ matrices[g]
        result = result + term.scale(coeff)
    return result


def circle_product_failures(braiding: Braiding) -> List[str]:
    """l_i^j o l_k^l = B_k^j l_i^l carries R L1 R L1 - L1 R L1 R onto R L1 - L1 R."""
    matrix = generating_matrix(braiding.dim, "l")
    quadratic = re_relations(braiding, matrix, False)
    linear = quadratic - re_relations(braiding, matrix, True)

    def circle(p: NCPolynomial) -> NCPolynomial:
        result = NCPolynomial()
        for (x, y), coeff in p.terms.items():
            factor = braiding.b.matrix_entry(y.lower, x.upper)
            if factor:
                result = result + NCPolynomial.generator(Generator("l", x.lower, y.upper)) * (coeff * factor)
        return result

    residual = quadratic.map(lambda value: circle(as_polynomial(value))) - linear
    return [] if residual.is_zero() else [f"circle product: {residual.witness()}"]


def representation_check(braiding: Braiding, which: str,
                         params: Optional[Dict[str, Any]] = None) -> Report:
    """The matrices of a module annihilate every modified RE relation."""
    started = start_timer()
    matrices = representation_matrices(braiding, which)
    ctx = re_algebra(braiding, modified=True)
    failures = []
    for n, relation in enumerate(ctx.algebra.relations):
        image = represent(relation, matrices)
        if not image.is_zero():
            failures.append(f"relation {n} ({relation}): {image.witness()}")
    if which == "adjoint":
        failures.extend(circle_product_failures(braiding))
    return Report.outcome("representation", params or {"braiding": braiding.name, "which": which},
                          failures, started)


def r_trace_map(p: NCPolynomial) -> NCPolynomial:
    """tr_R on linear elements: l_i^j -> delta_i^j."""
    result = NCPolynomial()
    for word, coeff in p.terms.items():
        if len(word) != 1:
            raise ValueError(f"tr_R is defined on End(V) only, got {p}.")
        if word[0].lower == word[0].upper:
            result = result + coeff
    return result


def sl_projection(ctx: REContext) -> Dict[Generator, NCPolynomial]:
    """
    f_i^j = l_i^j - delta_i^j ell / tr_R(ell) with ell = Tr_R L.

    Raises:
        ValueError: If the bi-rank has m = n, where tr_R(ell) vanishes.
    """
    m, n = ctx.bi_rank
    if m == n:
        raise ValueError(f"bi-rank ({m}|{n}) has m = n; tr_R(ell) vanishes.")
    ell = as_polynomial(r_trace(ctx.matrix, ctx.braiding))
    scale = 1 / r_trace_map(ell).constant_term()
    projected = {}
    for g in ctx.algebra.generators:
        value = NCPolynomial.generator(g)
        projected[g] = value - ell * scale if g.lower == g.upper else value
    return projected


def check_sl_projection(ctx: REContext, params: Optional[Dict[str, Any]] = None) -> Report:
    """tr_R(ell) = q^(n-m) (m-n)_q, every f_i^j is tr_R-traceless and Tr_R F = 0."""
    started = start_timer()
    br = ctx.braiding
    m, n = ctx.bi_rank
    projected = sl_projection(ctx)
    failures = []
    ell = as_polynomial(r_trace(ctx.matrix, br))
    expected = br.q ** (n - m) * br.qint(m - n)
    if r_trace_map(ell).constant_term() != expected:
        failures.append(f"tr_R(ell) = {r_trace_map(ell)}")
    for g, value in projected.items():
        if r_trace_map(value):
            failures.append(f"tr_R f_{g.lower}^{g.upper} = {r_trace_map(value)}")
    f_matrix = LegOperator(ctx.dim, 1, {((g.lower,), (g.upper,)): v for g, v in projected.items()})
    total = as_polynomial(r_trace(f_matrix, br))
    if total:
        failures.append(f"Tr_R F = {total}")
    return Report.outcome("sl-projection", params or {"braiding": br.name}, failures, started)
