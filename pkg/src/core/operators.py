"""
Sparse operators on tensor powers of V.

A LegOperator on V^{(x)k} stores only its nonzero entries, keyed by
(row multi-index, column multi-index) with 1-based indices per leg. The
product sums over the middle index, so (XY)[r][c] = sum_m X[r][m] Y[m][c].
Entries are either field elements or noncommutative polynomials; scalars
are central, so mixed products put the polynomial on the left.
"""
from itertools import product
from typing import Callable, Dict, Iterable, List, Optional, Tuple, Union

from sympy.polys.fields import FracElement
from sympy.polys.matrices import DomainMatrix

from .scalars import DOMAIN, FIELD, format_scalar

Index = Tuple[int, ...]
Key = Tuple[Index, Index]
Entry = Union[FracElement, "NCPolynomial"]  # noqa: F821


def times(a: Entry, b: Entry) -> Entry:
    """Product a*b of two entries, valid for any mix of scalars and polynomials."""
    if isinstance(a, FracElement) and not isinstance(b, FracElement):
        return b * a
    return a * b


def plus(a: Entry, b: Entry) -> Entry:
    if isinstance(a, FracElement) and not isinstance(b, FracElement):
        return b + a
    return a + b


def format_entry(value: Entry) -> str:
    if isinstance(value, FracElement):
        return format_scalar(value)
    return str(value)


class LegOperator:
    """An N^k x N^k matrix acting on k tensor legs of an N-dimensional space."""

    __slots__ = ("dim", "legs", "entries", "_rows")

    def __init__(self, dim: int, legs: int, entries: Optional[Dict[Key, Entry]] = None):
        self.dim = dim
        self.legs = legs
        self.entries: Dict[Key, Entry] = {}
        for (row, col), value in (entries or {}).items():
            if len(row) != legs or len(col) != legs:
                raise ValueError(f"index {row},{col} does not have {legs} legs.")
            if any(i < 1 or i > dim for i in row + col):
                raise ValueError(f"index {row},{col} out of range 1..{dim}.")
            if value:
                self.entries[(row, col)] = value
        self._rows: Optional[Dict[Index, Dict[Index, Entry]]] = None

    # --- Construction ---
    @classmethod
    def identity(cls, dim: int, legs: int) -> "LegOperator":
        return cls(dim, legs, {(idx, idx): FIELD.one for idx in product(range(1, dim + 1), repeat=legs)})

    @classmethod
    def zero(cls, dim: int, legs: int) -> "LegOperator":
        return cls(dim, legs)

    @classmethod
    def flip(cls, dim: int) -> "LegOperator":
        """The permutation P(x_i (x) x_j) = x_j (x) x_i."""
        return cls(dim, 2, {((i, j), (j, i)): FIELD.one
                            for i in range(1, dim + 1) for j in range(1, dim + 1)})

    @classmethod
    def from_matrix(cls, rows: List[List[Entry]]) -> "LegOperator":
        """One-leg operator from a dense list of rows."""
        dim = len(rows)
        return cls(dim, 1, {((i + 1,), (j + 1,)): rows[i][j]
                            for i in range(dim) for j in range(dim)})

    # --- Access ---
    @property
    def rows(self) -> Dict[Index, Dict[Index, Entry]]:
        if self._rows is None:
            rows: Dict[Index, Dict[Index, Entry]] = {}
            for (row, col), value in self.entries.items():
                rows.setdefault(row, {})[col] = value
            self._rows = rows
        return self._rows

    def entry(self, row: Index, col: Index) -> Entry:
        return self.entries.get((tuple(row), tuple(col)), FIELD.zero)

    def __getitem__(self, key: Key) -> Entry:
        return self.entry(*key)

    def matrix_entry(self, i: int, j: int) -> Entry:
        """Entry (i, j) of a one-leg operator."""
        return self.entry((i,), (j,))

    def indices(self) -> Iterable[Index]:
        return product(range(1, self.dim + 1), repeat=self.legs)

    def is_zero(self) -> bool:
        return not self.entries

    def is_scalar(self) -> bool:
        return all(isinstance(v, FracElement) for v in self.entries.values())

    def witness(self) -> str:
        """Text of the first nonzero entry in index order, or an empty string."""
        if not self.entries:
            return ""
        row, col = min(self.entries)
        return f"entry {row}->{col}: {format_entry(self.entries[(row, col)])}"

    def __repr__(self) -> str:
        return f"LegOperator(dim={self.dim}, legs={self.legs}, nonzero={len(self.entries)})"

    # --- Arithmetic ---
    def _check_shape(self, other: "LegOperator") -> None:
        if (self.dim, self.legs) != (other.dim, other.legs):
            raise ValueError(
                f"shape mismatch: ({self.dim},{self.legs}) vs ({other.dim},{other.legs})")

    def __add__(self, other: "LegOperator") -> "LegOperator":
        self._check_shape(other)
        result = dict(self.entries)
        for key, value in other.entries.items():
            result[key] = plus(result[key], value) if key in result else value
        return LegOperator(self.dim, self.legs, result)

    def __neg__(self) -> "LegOperator":
        return LegOperator(self.dim, self.legs, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "LegOperator") -> "LegOperator":
        return self + (-other)

    def __matmul__(self, other: "LegOperator") -> "LegOperator":
        self._check_shape(other)
        result: Dict[Key, Entry] = {}
        other_rows = other.rows
        for row, cols in self.rows.items():
            for mid, left in cols.items():
                for col, right in other_rows.get(mid, {}).items():
                    term = times(left, right)
                    key = (row, col)
                    result[key] = plus(result[key], term) if key in result else term
        return LegOperator(self.dim, self.legs, result)

    def scale(self, factor: Entry) -> "LegOperator":
        """Multiply every entry on the right by a scalar or polynomial."""
        return LegOperator(self.dim, self.legs,
                           {k: times(v, factor) for k, v in self.entries.items()})

    def map(self, func: Callable[[Entry], Entry]) -> "LegOperator":
        return LegOperator(self.dim, self.legs, {k: func(v) for k, v in self.entries.items()})

    def equals(self, other: "LegOperator") -> bool:
        return (self - other).is_zero()

    # --- Tensor structure ---
    def embed(self, position: int, total: int) -> "LegOperator":
        """
        Place this operator on legs position..position+legs-1 of `total` legs.

        Raises:
            ValueError: If the legs do not fit.
        """
        if position < 1 or position + self.legs - 1 > total:
            raise ValueError(
                f"cannot place {self.legs} legs at position {position} of {total}.")
        span = range(1, self.dim + 1)
        before = list(product(span, repeat=position - 1))
        after = list(product(span, repeat=total - position - self.legs + 1))
        result: Dict[Key, Entry] = {}
        for (row, col), value in self.entries.items():
            for head in before:
                for tail in after:
                    result[(head + row + tail, head + col + tail)] = value
        return LegOperator(self.dim, total, result)

    def partial_trace(self, legs: Iterable[int],
                      weight: Optional["LegOperator"] = None) -> "LegOperator":
        """
        Contract the listed legs, each against the one-leg matrix `weight`.

        With weight W the contraction at leg s sums W[a][c] X[.. c ..][.. a ..];
        W = C gives the left R-trace, W = B the right one, None the plain trace.

        Raises:
            ValueError: If a leg is out of range.
        """
        chosen = sorted(set(legs), reverse=True)
        if any(s < 1 or s > self.legs for s in chosen):
            raise ValueError(f"legs {sorted(chosen)} out of range 1..{self.legs}.")
        current = self
        for s in chosen:
            current = current._trace_leg(s, weight)
        return current

    def _trace_leg(self, s: int, weight: Optional["LegOperator"]) -> "LegOperator":
        result: Dict[Key, Entry] = {}
        for (row, col), value in self.entries.items():
            c, a = row[s - 1], col[s - 1]
            if weight is None:
                if a != c:
                    continue
                term = value
            else:
                w = weight.matrix_entry(a, c)
                if not w:
                    continue
                term = times(value, w)
            key = (row[:s - 1] + row[s:], col[:s - 1] + col[s:])
            result[key] = plus(result[key], term) if key in result else term
        return LegOperator(self.dim, self.legs - 1, result)

    # --- Exact linear algebra ---
    def to_domain_matrix(self) -> DomainMatrix:
        """The scalar matrix over the field, multi-indices in lexicographic order."""
        if not self.is_scalar():
            raise ValueError("operator has noncommutative entries.")
        order = {idx: n for n, idx in enumerate(self.indices())}
        size = len(order)
        dod: Dict[int, Dict[int, FracElement]] = {}
        for (row, col), value in self.entries.items():
            dod.setdefault(order[row], {})[order[col]] = value
        return DomainMatrix(dod, (size, size), DOMAIN)

    def rank(self) -> int:
        if not self.entries:
            return 0
        return self.to_domain_matrix().rank()
