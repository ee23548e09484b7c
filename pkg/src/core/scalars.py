"""
Exact scalars: the rational-function field in q, u, v, w, t, h, q-numbers,
the scalar expression grammar and h-adic expansion around q = 1.
"""
import math
import re
from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

from sympy import S, Symbol, ZZ
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.fields import FracElement, field
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.rings import PolyElement

from ..config.constants import SCALAR_SYMBOLS
from .errors import HPoleError, ScalarParseError

FIELD, q, u, v, w, t, h = field(",".join(SCALAR_SYMBOLS), ZZ)
DOMAIN = FIELD.to_domain()

RationalFunction = FracElement

_Q_INDEX = SCALAR_SYMBOLS.index("q")
_H_INDEX = SCALAR_SYMBOLS.index("h")
_ALLOWED_CHARS = re.compile(r"[0-9A-Za-z_+\-*/^(). \t]")
_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_TRANSFORMS = standard_transformations + (convert_xor,)


def scalar(value) -> RationalFunction:
    """Coerce an int, a sympy Rational or a field element into the field."""
    if isinstance(value, FracElement) and value.field == FIELD:
        return value
    if isinstance(value, int):
        return FIELD(value)
    return FIELD.from_expr(S(value))


def q_int(k: int) -> RationalFunction:
    """The q-number k_q = (q^k - q^-k)/(q - q^-1)."""
    if k == 0:
        return FIELD.zero
    return (q**k - q**(-k)) / (q - q**(-1))


def q_factorial(k: int) -> RationalFunction:
    """
    The q-factorial 1_q 2_q ... k_q, with 0_q! = 1.

    Raises:
        ValueError: If k is negative.
    """
    if k < 0:
        raise ValueError(f"q-factorial needs k >= 0, got {k}.")
    result = FIELD.one
    for i in range(1, k + 1):
        result *= q_int(i)
    return result


def parse_scalar(text: str) -> RationalFunction:
    """
    Parse a scalar expression into its canonical rational function.

    The grammar is integers, the variables of the field, + - * / ^ with
    integer exponents, and parentheses.

    Args:
        text (str): Expression such as "(q^2-q^-2)/(q-q^-1)".

    Returns:
        RationalFunction: The GCD-reduced field element.

    Raises:
        ScalarParseError: On a lexical or syntax error, an unknown name,
            or division by an exact zero.
    """
    if not text or not text.strip():
        raise ScalarParseError("empty expression", 0)
    for position, char in enumerate(text):
        if not _ALLOWED_CHARS.fullmatch(char):
            raise ScalarParseError(f"unexpected character {char!r}", position)
    for match in _IDENTIFIER.finditer(text):
        if match.group() not in SCALAR_SYMBOLS:
            raise ScalarParseError(f"unknown variable '{match.group()}'", match.start())

    local_dict = {name: Symbol(name) for name in SCALAR_SYMBOLS}
    try:
        expr = parse_expr(text, local_dict=local_dict, transformations=_TRANSFORMS)
    except (SyntaxError, TypeError) as exc:
        offset = getattr(exc, "offset", None) or 1
        raise ScalarParseError("syntax error", min(offset - 1, len(text))) from exc
    except Exception as exc:  # tokenizer errors carry no stable type across versions
        raise ScalarParseError(f"syntax error: {exc}", len(text)) from exc

    if expr.has(S.ComplexInfinity, S.NaN, S.Infinity):
        raise ScalarParseError("division by zero", max(text.find("/"), 0))
    try:
        return FIELD.from_expr(expr)
    except (ValueError, CoercionFailed) as exc:
        raise ScalarParseError("not a rational function with integer exponents", 0) from exc


def format_scalar(value: RationalFunction) -> str:
    """Render a field element in the scalar grammar."""
    return str(value.as_expr()).replace("**", "^")


def split_by_symbols(value: RationalFunction,
                     names: Iterable[str]) -> Dict[Tuple[int, ...], RationalFunction]:
    """
    Split a field element into polynomial coefficients in the named symbols.

    Args:
        value: Element whose denominator does not involve the named symbols.
        names: Symbol names, e.g. ("t",) or ("u", "v").

    Returns:
        dict: Exponent tuple -> coefficient free of the named symbols.

    Raises:
        ValueError: If a named symbol occurs in the denominator.
    """
    indices = [SCALAR_SYMBOLS.index(name) for name in names]
    denom = value.denom
    if any(m[i] for m in denom.monoms() for i in indices):
        raise ValueError(f"denominator of {value} depends on {tuple(names)}.")
    inv_denom = FIELD.one / FIELD(denom.as_expr())
    parts: Dict[Tuple[int, ...], RationalFunction] = {}
    for monom, coeff in value.numer.terms():
        key = tuple(monom[i] for i in indices)
        rest = FIELD(int(coeff))
        for i, power in enumerate(monom):
            if power and i not in indices:
                rest *= FIELD.gens[i] ** power
        parts[key] = parts.get(key, FIELD.zero) + rest
    return {key: c * inv_denom for key, c in parts.items() if c}


@dataclass(frozen=True)
class TruncatedHSeries:
    """Power series c_0 + c_1 h + ... + c_D h^D with h-free coefficients."""

    coefficients: Tuple[RationalFunction, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def _check(self, other: "TruncatedHSeries") -> None:
        if other.order != self.order:
            raise ValueError("series truncated at different orders")

    def __add__(self, other: "TruncatedHSeries") -> "TruncatedHSeries":
        self._check(other)
        return TruncatedHSeries(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "TruncatedHSeries") -> "TruncatedHSeries":
        self._check(other)
        return TruncatedHSeries(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, other: "TruncatedHSeries") -> "TruncatedHSeries":
        self._check(other)
        a, b = self.coefficients, other.coefficients
        return TruncatedHSeries(tuple(
            sum((a[i] * b[n - i] for i in range(n + 1)), FIELD.zero)
            for n in range(self.order + 1)
        ))

    def __getitem__(self, power: int) -> RationalFunction:
        return self.coefficients[power]

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def valuation(self) -> int:
        """Index of the first nonzero coefficient, order + 1 for zero."""
        for power, coeff in enumerate(self.coefficients):
            if coeff:
                return power
        return self.order + 1


def _exp_series(poly: PolyElement, length: int) -> list:
    """Series of a polynomial under q = exp(h/2), first `length` terms."""
    series = [FIELD.zero] * length
    for monom, coeff in poly.terms():
        rest = FIELD(int(coeff))
        for i, power in enumerate(monom):
            if power and i != _Q_INDEX:
                rest *= FIELD.gens[i] ** power
        e = monom[_Q_INDEX]
        for j in range(length):
            series[j] += rest * FIELD(e**j) / FIELD(2**j * math.factorial(j))
    return series


def h_expand(value: RationalFunction, order: int) -> TruncatedHSeries:
    """
    Expand a rational function in q under q = exp(h/2), up to h^order.

    Raises:
        HPoleError: If the function has a pole at q = 1.
        ValueError: If the input already involves h or order < 0.
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}.")
    if any(m[_H_INDEX] for part in (value.numer, value.denom) for m in part.monoms()):
        raise ValueError("cannot expand an element that already involves h.")
    if not value:
        return TruncatedHSeries((FIELD.zero,) * (order + 1))

    # the valuation of a nonzero polynomial is bounded by its q-degree
    slack = max(m[_Q_INDEX] for m in value.denom.monoms()) + 1
    length = order + slack + 1
    numer = _exp_series(value.numer, length)
    denom = _exp_series(value.denom, length)
    v_num = next(i for i, c in enumerate(numer) if c) if any(numer) else length
    v_den = next(i for i, c in enumerate(denom) if c)
    if v_den > v_num:
        raise HPoleError(v_den - v_num)

    a, b = numer[v_den:], denom[v_den:]
    coeffs = []
    for n in range(order + 1):
        acc = a[n] - sum((b[i] * coeffs[n - i] for i in range(1, n + 1)), FIELD.zero)
        coeffs.append(acc / b[0])
    return TruncatedHSeries(tuple(coeffs))
