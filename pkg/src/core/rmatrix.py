"""
Braidings on V (x) V: construction, validation, the skew-inverse with its
B and C operators, R-traces, the trace identities and Yang-Baxterization.

Matrix convention: R(x_i (x) x_j) = R_ij^kl x_k (x) x_l is stored as
r[(i, j), (k, l)].
"""
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from ..config.constants import DEFAULT_BAXTER_A
from ..utils.timing import start_timer
from .errors import BraidingValidationError, NotSkewInvertibleError
from .ncalg import as_polynomial, generating_matrix
from .operators import Entry, LegOperator
from .reports import Report
from .scalars import DOMAIN, FIELD, RationalFunction, q, q_int, scalar, u, v, w

INVOLUTIVE = "involutive"
HECKE = "hecke"


@dataclass(frozen=True)
class Braiding:
    """A validated skew-invertible braiding with its Psi, B and C."""

    name: str
    r: LegOperator
    kind: str
    psi: LegOperator
    b: LegOperator
    c: LegOperator
    r_inverse: LegOperator

    @property
    def dim(self) -> int:
        return self.r.dim

    @property
    def is_hecke(self) -> bool:
        return self.kind == HECKE

    @property
    def q(self) -> RationalFunction:
        """The deformation parameter, 1 for involutive braidings."""
        return q if self.is_hecke else FIELD.one

    @property
    def omega(self) -> RationalFunction:
        return q - q**-1 if self.is_hecke else FIELD.zero

    def qint(self, k: int) -> RationalFunction:
        return q_int(k) if self.is_hecke else FIELD(k)

    def qfactorial(self, k: int) -> RationalFunction:
        result = FIELD.one
        for i in range(1, k + 1):
            result *= self.qint(i)
        return result

    def trace_weight(self, side: str = "left") -> LegOperator:
        if side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got '{side}'.")
        return self.c if side == "left" else self.b

    def r_at(self, position: int, total: int) -> LegOperator:
        return self.r.embed(position, total)

    def r_inverse_at(self, position: int, total: int) -> LegOperator:
        return self.r_inverse.embed(position, total)


# --- Families ---
def flip_operator(dim: int) -> LegOperator:
    return LegOperator.flip(dim)


def superflip_operator(even: int, odd: int) -> LegOperator:
    """Signed flip of a (even|odd) superspace; the odd-odd block gets -1."""
    dim = even + odd

    def parity(i: int) -> int:
        return 0 if i <= even else 1

    return LegOperator(dim, 2, {
        ((i, j), (j, i)): FIELD(-1 if parity(i) and parity(j) else 1)
        for i in range(1, dim + 1) for j in range(1, dim + 1)
    })


def drinfeld_jimbo_operator(dim: int) -> LegOperator:
    """The standard U_q(sl(N)) Hecke symmetry."""
    entries = {}
    for i in range(1, dim + 1):
        entries[((i, i), (i, i))] = q
        for j in range(1, dim + 1):
            if i != j:
                entries[((i, j), (j, i))] = FIELD.one
            if i < j:
                entries[((i, j), (i, j))] = q - q**-1
    return LegOperator(dim, 2, entries)


# --- Validation ---
def braid_residual(r: LegOperator) -> LegOperator:
    """R_1 R_2 R_1 - R_2 R_1 R_2 on three legs."""
    r1, r2 = r.embed(1, 3), r.embed(2, 3)
    return r1 @ r2 @ r1 - r2 @ r1 @ r2


def hecke_residual(r: LegOperator) -> LegOperator:
    """(qI - R)(q^-1 I + R) on two legs."""
    ident = LegOperator.identity(r.dim, 2)
    return (ident.scale(q) - r) @ (ident.scale(q**-1) + r)


def classify_braiding(r: LegOperator) -> str:
    """
    Validate the braid relation and decide the kind of a braiding.

    Raises:
        BraidingValidationError: If the braid relation fails or R is
            neither involutive nor Hecke.
    """
    if r.legs != 2:
        raise BraidingValidationError(f"a braiding acts on 2 legs, got {r.legs}.")
    braid = braid_residual(r)
    if not braid.is_zero():
        raise BraidingValidationError("braid relation violated", braid.witness())
    square = r @ r - LegOperator.identity(r.dim, 2)
    if square.is_zero():
        return INVOLUTIVE
    hecke = hecke_residual(r)
    if hecke.is_zero():
        return HECKE
    raise BraidingValidationError("neither involutive nor Hecke", hecke.witness())


def solve_skew_inverse(r: LegOperator) -> Tuple[LegOperator, LegOperator, LegOperator]:
    """
    Solve R_ij^kl Psi_lp^jq = delta_i^q delta_p^k for Psi.

    The system matrix A[(i,k),(l,j)] = R_ij^kl is inverted once; the column
    (q,p) of the inverse holds Psi_lp^jq.

    Returns:
        tuple: (psi, b, c) with B_i^j = Psi_ki^kj and C_i^j = Psi_ik^jk.

    Raises:
        NotSkewInvertibleError: If the system is singular.
    """
    dim = r.dim
    pairs = list(product(range(1, dim + 1), repeat=2))
    order = {pair: n for n, pair in enumerate(pairs)}
    dod: Dict[int, Dict[int, RationalFunction]] = {}
    for ((i, j), (k, l)), value in r.entries.items():
        dod.setdefault(order[(i, k)], {})[order[(l, j)]] = value
    size = len(pairs)
    try:
        inverse = DomainMatrix(dod, (size, size), DOMAIN).inv()
    except DMNonInvertibleMatrixError as exc:
        raise NotSkewInvertibleError("braiding is not skew-invertible") from exc
    sparse = inverse.to_sparse().rep
    psi_entries = {}
    for row, cols in sparse.items():
        l, j = pairs[row]
        for col, value in cols.items():
            qq, p = pairs[col]
            psi_entries[((l, p), (j, qq))] = value
    psi = LegOperator(dim, 2, psi_entries)
    b = psi.partial_trace([1])
    c = psi.partial_trace([2])
    return psi, b, c


def make_braiding(r: LegOperator, name: str = "custom") -> Braiding:
    """Validate an operator and attach its skew-inverse data."""
    kind = classify_braiding(r)
    psi, b, c = solve_skew_inverse(r)
    ident = LegOperator.identity(r.dim, 2)
    r_inverse = r if kind == INVOLUTIVE else r - ident.scale(q - q**-1)
    return Braiding(name, r, kind, psi, b, c, r_inverse)


def build_braiding(family: str, n: int, odd: Optional[int] = None) -> Braiding:
    """
    Build a validated built-in braiding.

    Args:
        family (str): 'flip', 'superflip' or 'dj'.
        n (int): Dimension of V.
        odd (int, optional): Odd dimension for 'superflip', default n // 2.

    Raises:
        ValueError: On an unknown family or non-positive dimension.
    """
    if n < 1:
        raise ValueError(f"dimension must be positive, got {n}.")
    if family == "flip":
        return make_braiding(flip_operator(n), f"flip({n})")
    elif family == "superflip":
        odd = n // 2 if odd is None else odd
        if odd < 0 or odd > n:
            raise ValueError(f"odd dimension {odd} outside 0..{n}.")
        return make_braiding(superflip_operator(n - odd, odd), f"superflip({n - odd},{odd})")
    elif family == "dj":
        return make_braiding(drinfeld_jimbo_operator(n), f"drinfeldJimbo({n})")
    raise ValueError(f"unknown braiding family '{family}'.")


# --- R-traces ---
def r_trace(matrix: LegOperator, braiding: Braiding, side: str = "left") -> Entry:
    """
    Tr_R M = sum M_i^j C_j^i (left) or with B (right).

    Raises:
        ValueError: On a dimension mismatch or a multi-leg input.
    """
    if matrix.legs != 1 or matrix.dim != braiding.dim:
        raise ValueError(f"expected a {braiding.dim}x{braiding.dim} matrix.")
    return matrix.partial_trace([1], braiding.trace_weight(side)).entry((), ())


def partial_r_trace(op: LegOperator, legs, braiding: Braiding, side: str = "left") -> LegOperator:
    return op.partial_trace(legs, braiding.trace_weight(side))


# --- Trace identities ---
def check_trace_identities(braiding: Braiding, bi_rank: Optional[Tuple[int, int]] = None,
                           params: Optional[Dict[str, Any]] = None) -> Report:
    """
    Verify the B/C trace identities, their commutation with R, the bi-rank
    normalisations (when a bi-rank is given) and both conjugation forms of
    the R-trace identity for a matrix with noncommuting entries.
    """
    started = start_timer()
    dim = braiding.dim
    r, b, c = braiding.r, braiding.b, braiding.c
    one_leg = LegOperator.identity(dim, 1)
    failures: List[str] = []

    def expect(label: str, residual: LegOperator) -> None:
        if not residual.is_zero():
            failures.append(f"{label}: {residual.witness()}")

    expect("Tr_1 B_1 R_12 = I_2", r.partial_trace([1], b) - one_leg)
    expect("Tr_2 C_2 R_12 = I_1", r.partial_trace([2], c) - one_leg)
    bb = b.embed(1, 2) @ b.embed(2, 2)
    cc = c.embed(1, 2) @ c.embed(2, 2)
    expect("R B_1 B_2 = B_1 B_2 R", r @ bb - bb @ r)
    expect("R C_1 C_2 = C_1 C_2 R", r @ cc - cc @ r)

    if bi_rank is not None:
        m, n = bi_rank
        expect("BC = q^(2(n-m)) I", b @ c - one_leg.scale(braiding.q ** (2 * (n - m))))
        expected_trace = braiding.q ** (n - m) * braiding.qint(m - n)
        for label, op in (("Tr B", b), ("Tr C", c)):
            value = op.partial_trace([1]).entry((), ())
            if value != expected_trace:
                failures.append(f"{label} = {value.as_expr()}, expected {expected_trace.as_expr()}")

    matrix = generating_matrix(dim, "m")
    trace = as_polynomial(r_trace(matrix, braiding))
    m1 = matrix.embed(1, 2)
    scalar_trace = one_leg.scale(trace)
    for label, conjugated in (("Tr_R(2) R M_1 R^-1", r @ m1 @ braiding.r_inverse),
                              ("Tr_R(2) R^-1 M_1 R", braiding.r_inverse @ m1 @ r)):
        expect(f"{label} = I Tr_R M", partial_r_trace(conjugated, [2], braiding) - scalar_trace)

    return Report.outcome("trace-identities", params or {"braiding": braiding.name},
                          failures, started)


# --- Yang-Baxterization ---
RATIONAL = "rational"
TRIG_RATIONAL = "trigRational"


@dataclass(frozen=True)
class CurrentRMatrix:
    """R(x, y) = R - f(x, y) I for a braiding R."""

    base: Braiding
    form: str
    a: RationalFunction

    def shift(self, x: RationalFunction, y: RationalFunction) -> RationalFunction:
        """The scalar f(x, y) subtracted from R."""
        if self.form == RATIONAL:
            return self.a / (x - y)
        return (q - q**-1) * x / (x - y)

    def at(self, x: RationalFunction, y: RationalFunction) -> LegOperator:
        ident = LegOperator.identity(self.base.dim, 2)
        return self.base.r - ident.scale(self.shift(x, y))

    def ybe_residual(self) -> LegOperator:
        """R12(u,v) R23(u,w) R12(v,w) - R23(v,w) R12(u,w) R23(u,v)."""
        def r12(x, y):
            return self.at(x, y).embed(1, 3)

        def r23(x, y):
            return self.at(x, y).embed(2, 3)

        return r12(u, v) @ r23(u, w) @ r12(v, w) - r23(v, w) @ r12(u, w) @ r23(u, v)


def baxterize(braiding: Braiding, a=None, form: Optional[str] = None) -> CurrentRMatrix:
    """
    The current R-matrix of an involutive (rational form) or Hecke
    (trigonometric-rational form) braiding, checked against the current
    Yang-Baxter equation in u, v, w.

    Raises:
        ValueError: If the form does not match the kind of the braiding.
        BraidingValidationError: If the current Yang-Baxter equation fails.
    """
    expected = RATIONAL if braiding.kind == INVOLUTIVE else TRIG_RATIONAL
    form = form or expected
    if form != expected:
        raise ValueError(f"{braiding.kind} braidings pair with the {expected} form, not {form}.")
    constant = scalar(DEFAULT_BAXTER_A if a is None else a)
    current = CurrentRMatrix(braiding, form, constant)
    residual = current.ybe_residual()
    if not residual.is_zero():
        raise BraidingValidationError("current Yang-Baxter equation violated", residual.witness())
    return current


def check_current_ybe(braiding: Braiding, params: Optional[Dict[str, Any]] = None) -> Report:
    started = start_timer()
    try:
        baxterize(braiding)
    except BraidingValidationError as exc:
        return Report.outcome("current-ybe", params or {}, [str(exc)], started)
    return Report.outcome("current-ybe", params or {}, [], started)


def skew_inverse_residual(braiding: Braiding) -> LegOperator:
    """sum_jl R_ij^kl Psi_lp^jq - delta_i^q delta_p^k, stored at ((i,p),(k,q))."""
    dim = braiding.dim
    r, psi = braiding.r.rows, braiding.psi.rows
    entries: Dict[Tuple[Tuple[int, int], Tuple[int, int]], RationalFunction] = {}
    span = range(1, dim + 1)
    for i, p, k, qq in product(span, repeat=4):
        total = -FIELD.one if (i == qq and p == k) else FIELD.zero
        for (j, l) in product(span, repeat=2):
            r_value = r.get((i, j), {}).get((k, l))
            psi_value = psi.get((l, p), {}).get((j, qq)) if r_value else None
            if psi_value:
                total += r_value * psi_value
        if total:
            entries[((i, p), (k, qq))] = total
    return LegOperator(dim, 2, entries)


def check_braiding(braiding: Braiding, params: Optional[Dict[str, Any]] = None) -> Report:
    """Braid relation, R^2 = I or the Hecke relation, and the skew-inverse equation."""
    started = start_timer()
    failures = []
    braid = braid_residual(braiding.r)
    if not braid.is_zero():
        failures.append(f"braid relation: {braid.witness()}")
    if braiding.kind == INVOLUTIVE:
        kind = braiding.r @ braiding.r - LegOperator.identity(braiding.dim, 2)
    else:
        kind = hecke_residual(braiding.r)
    if not kind.is_zero():
        failures.append(f"{braiding.kind} relation: {kind.witness()}")
    skew = skew_inverse_residual(braiding)
    if not skew.is_zero():
        failures.append(f"skew-inverse: {skew.witness()}")
    return Report.outcome("braiding", params or {"braiding": braiding.name}, failures, started)
