"""
Free associative algebras over the scalar field and their quotients.

Two quotient strategies are available. Ideal membership decides whether an
element lies in the two-sided ideal of the relations by exact row reduction
on the span of word*relation*word products, per weight (graded) or up to a
weight (filtered). PBW rewriting normal-orders words with linear commutator
tails and is used for enveloping algebras of Lie algebras.
"""
import random
from itertools import product
from math import comb
from typing import (Callable, Dict, Iterable, List, NamedTuple, Optional,
                    Sequence, Tuple, Union)

from sympy.polys.fields import FracElement
from sympy.polys.matrices import DomainMatrix

from .errors import BudgetExceededError
from .operators import LegOperator
from .scalars import DOMAIN, FIELD, format_scalar

Scalar = Union[FracElement, int]


class Generator(NamedTuple):
    """A generator x_lower^upper, optionally with a level and a site."""

    name: str
    lower: int
    upper: int
    level: int = 0
    site: int = 0

    def __str__(self) -> str:
        text = f"{self.name}_{self.lower}^{self.upper}"
        if self.level:
            text += f"[{self.level}]"
        if self.site:
            text += f"({self.site})"
        return text


Word = Tuple[Generator, ...]


def _coerce(value: Scalar) -> FracElement:
    return value if isinstance(value, FracElement) else FIELD(value)


class NCPolynomial:
    """Finite linear combination of words in noncommuting generators."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Word, FracElement]] = None):
        self.terms: Dict[Word, FracElement] = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def generator(cls, g: Generator) -> "NCPolynomial":
        return cls({(g,): FIELD.one})

    @classmethod
    def constant(cls, value: Scalar) -> "NCPolynomial":
        return cls({(): _coerce(value)})

    @classmethod
    def word(cls, letters: Sequence[Generator], coeff: Scalar = 1) -> "NCPolynomial":
        return cls({tuple(letters): _coerce(coeff)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # --- Arithmetic ---
    def __add__(self, other) -> "NCPolynomial":
        if not isinstance(other, NCPolynomial):
            other = NCPolynomial.constant(other)
        result = dict(self.terms)
        for word, coeff in other.terms.items():
            result[word] = result.get(word, FIELD.zero) + coeff
        return NCPolynomial(result)

    __radd__ = __add__

    def __neg__(self) -> "NCPolynomial":
        return NCPolynomial({w: -c for w, c in self.terms.items()})

    def __sub__(self, other) -> "NCPolynomial":
        if not isinstance(other, NCPolynomial):
            other = NCPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "NCPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "NCPolynomial":
        if not isinstance(other, NCPolynomial):
            factor = _coerce(other)
            if not factor:
                return NCPolynomial()
            return NCPolynomial({w: c * factor for w, c in self.terms.items()})
        result: Dict[Word, FracElement] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                word = w1 + w2
                result[word] = result.get(word, FIELD.zero) + c1 * c2
        return NCPolynomial(result)

    def __rmul__(self, other) -> "NCPolynomial":
        return self * other

    def __pow__(self, n: int) -> "NCPolynomial":
        result = NCPolynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCPolynomial):
            other = NCPolynomial.constant(other)
        return not (self - other)

    __hash__ = None  # mutable-looking value type

    # --- Structure ---
    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def coefficient(self, word: Sequence[Generator]) -> FracElement:
        return self.terms.get(tuple(word), FIELD.zero)

    def constant_term(self) -> FracElement:
        return self.coefficient(())

    def generators(self) -> set:
        return {g for word in self.terms for g in word}

    def map_coefficients(self, func: Callable[[FracElement], FracElement]) -> "NCPolynomial":
        return NCPolynomial({w: func(c) for w, c in self.terms.items()})

    def substitute(self, image: Callable[[Generator], "NCPolynomial"]) -> "NCPolynomial":
        """Apply the algebra morphism sending each generator g to image(g)."""
        cache: Dict[Generator, NCPolynomial] = {}
        result = NCPolynomial()
        for word, coeff in self.terms.items():
            term = NCPolynomial.constant(coeff)
            for g in word:
                if g not in cache:
                    cache[g] = image(g)
                term = term * cache[g]
            result = result + term
        return result

    def split_by_weight(self, weight: Callable[[Word], int]) -> Dict[int, "NCPolynomial"]:
        parts: Dict[int, Dict[Word, FracElement]] = {}
        for word, coeff in self.terms.items():
            parts.setdefault(weight(word), {})[word] = coeff
        return {k: NCPolynomial(v) for k, v in parts.items()}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for word in sorted(self.terms, key=lambda w: (len(w), w)):
            coeff = format_scalar(self.terms[word])
            body = " ".join(str(g) for g in word)
            if not word:
                pieces.append(coeff)
            elif coeff == "1":
                pieces.append(body)
            else:
                pieces.append(f"({coeff})*{body}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"NCPolynomial({self})"


def commutator(a, b) -> NCPolynomial:
    if not isinstance(a, NCPolynomial):
        a = NCPolynomial.constant(a)
    if not isinstance(b, NCPolynomial):
        b = NCPolynomial.constant(b)
    return a * b - b * a


def as_polynomial(value) -> NCPolynomial:
    return value if isinstance(value, NCPolynomial) else NCPolynomial.constant(value)


# --- Generating matrices and copies ---
def generating_matrix(dim: int, name: str = "l", level: int = 0, site: int = 0) -> LegOperator:
    """The N x N matrix with entries the generators name_i^j."""
    return LegOperator(dim, 1, {
        ((i,), (j,)): NCPolynomial.generator(Generator(name, i, j, level, site))
        for i in range(1, dim + 1) for j in range(1, dim + 1)
    })


def matrix_generators(dim: int, name: str = "l", level: int = 0, site: int = 0) -> List[Generator]:
    return [Generator(name, i, j, level, site)
            for i in range(1, dim + 1) for j in range(1, dim + 1)]


def overline_copy(matrix: LegOperator, k: int, total: int, braiding) -> LegOperator:
    """
    L_{k bar} on `total` legs: L_1 at leg 1, then R_{k-1} L_{k-1 bar} R_{k-1}^{-1}.

    Raises:
        ValueError: If k is outside 1..total.
    """
    if k < 1 or k > total:
        raise ValueError(f"copy index {k} outside 1..{total}.")
    current = matrix.embed(1, total)
    for step in range(1, k):
        current = braiding.r.embed(step, total) @ current @ braiding.r_inverse.embed(step, total)
    return current


def underline_copy(matrix: LegOperator, k: int, m: int, braiding,
                   total: Optional[int] = None) -> LegOperator:
    """
    L_{k under} for the right-sided constructions: L_m at leg m, then
    R_k^{-1} L_{k+1 under} R_k going down to k.

    Raises:
        ValueError: If k is outside 1..m.
    """
    total = total or m
    if k < 1 or k > m or m > total:
        raise ValueError(f"copy index {k} outside 1..{m} (legs {total}).")
    current = matrix.embed(m, total)
    for step in range(m - 1, k - 1, -1):
        current = braiding.r_inverse.embed(step, total) @ current @ braiding.r.embed(step, total)
    return current


class _Echelon(NamedTuple):
    pivots: List[Tuple[Word, Dict[Word, FracElement]]]
    span_size: int


class PresentedAlgebra:
    """
    A finitely presented algebra with one of three quotient strategies.

    Strategies:
        "graded": relations homogeneous in the generator weights; membership
            is decided separately for every weight component.
        "filtered": membership of an element of weight <= W is decided in the
            span of all products of weight <= W.
        "pbw": relations are commutators x y - y x - tail with tails of
            degree <= 1; elements are normal-ordered.
    """

    def __init__(self, generators: Iterable[Generator], relations: Iterable[NCPolynomial] = (),
                 strategy: str = "filtered", max_degree: int = 4,
                 weight: Optional[Callable[[Generator], int]] = None,
                 commutators: Optional[Dict[Tuple[Generator, Generator], NCPolynomial]] = None,
                 order_key: Optional[Callable[[Generator], tuple]] = None,
                 name: str = "algebra"):
        if strategy not in ("graded", "filtered", "pbw"):
            raise ValueError(f"unknown strategy '{strategy}'.")
        self.name = name
        self.generators: Tuple[Generator, ...] = tuple(generators)
        self.strategy = strategy
        self.max_degree = max_degree
        self._weight = weight or (lambda g: g.level if g.level > 0 else 1)
        self.order_key = order_key or (lambda g: (g.site, g.level, g.upper, g.lower, g.name))
        self.relations: List[NCPolynomial] = [r for r in relations if r]
        self._echelons: Dict[int, _Echelon] = {}
        self._words: Dict[int, List[Word]] = {0: [()]}
        self._normal: Dict[Word, NCPolynomial] = {}
        self.commutators: Dict[Tuple[Generator, Generator], NCPolynomial] = {}
        if strategy == "pbw":
            self._load_commutators(commutators or {})
        elif strategy == "graded":
            for relation in self.relations:
                if len(relation.split_by_weight(self.word_weight)) > 1:
                    raise ValueError(f"relation {relation} is not homogeneous.")

    # --- Weights ---
    def weight(self, g: Generator) -> int:
        return self._weight(g)

    def word_weight(self, word: Word) -> int:
        return sum(self._weight(g) for g in word)

    def element_weight(self, p: NCPolynomial) -> int:
        return max((self.word_weight(w) for w in p.terms), default=0)

    def words_of_weight(self, w: int) -> List[Word]:
        """All words whose generator weights sum to exactly w."""
        if w < 0:
            return []
        if w not in self._words:
            words = []
            for g in self.generators:
                gw = self._weight(g)
                if gw <= w:
                    words.extend((g,) + rest for rest in self.words_of_weight(w - gw))
            self._words[w] = words
        return self._words[w]

    # --- Ideal membership ---
    def _products(self, target: int, exact: bool) -> Iterable[NCPolynomial]:
        for relation in self.relations:
            grade = self.element_weight(relation)
            room = target - grade
            if room < 0:
                continue
            spreads = [room] if exact else range(room + 1)
            for spread in spreads:
                for left_w in range(spread + 1):
                    for left in self.words_of_weight(left_w):
                        for right in self.words_of_weight(spread - left_w):
                            yield NCPolynomial.word(left) * relation * NCPolynomial.word(right)

    def _echelon(self, target: int) -> _Echelon:
        if target > self.max_degree:
            raise BudgetExceededError(
                f"{self.name}: weight {target} exceeds the degree budget {self.max_degree}.")
        if target in self._echelons:
            return self._echelons[target]
        exact = self.strategy == "graded"
        columns: Dict[Word, int] = {}
        rows: Dict[int, Dict[int, FracElement]] = {}
        for element in self._products(target, exact):
            row = {}
            for word, coeff in element.terms.items():
                row[columns.setdefault(word, len(columns))] = coeff
            if row:
                rows[len(rows)] = row
        words = sorted(columns, key=lambda w: (-self.word_weight(w), w))
        order = {w: n for n, w in enumerate(words)}
        remap = {columns[w]: order[w] for w in words}
        dod = {i: {remap[j]: c for j, c in row.items()} for i, row in rows.items()}
        pivots: List[Tuple[Word, Dict[Word, FracElement]]] = []
        if dod:
            matrix = DomainMatrix(dod, (len(dod), len(words)), DOMAIN)
            reduced, pivot_cols = matrix.rref()
            sparse = reduced.to_sparse().rep
            for i, col in enumerate(pivot_cols):
                pivots.append((words[col], {words[j]: c for j, c in sparse.get(i, {}).items()}))
        echelon = _Echelon(pivots, len(rows))
        self._echelons[target] = echelon
        return echelon

    def _reduce_component(self, p: NCPolynomial, target: int) -> NCPolynomial:
        residual = dict(p.terms)
        for pivot_word, row in self._echelon(target).pivots:
            coeff = residual.get(pivot_word)
            if not coeff:
                continue
            for word, value in row.items():
                residual[word] = residual.get(word, FIELD.zero) - coeff * value
        return NCPolynomial(residual)

    def reduce(self, p: NCPolynomial) -> NCPolynomial:
        """
        Canonical residual of p modulo the relation ideal.

        Returns:
            NCPolynomial: Zero exactly when p lies in the ideal.

        Raises:
            BudgetExceededError: If p needs a weight above the budget.
        """
        p = as_polynomial(p)
        if self.strategy == "pbw":
            return self.pbw_reduce(p)
        if not p or not self.relations:
            return p
        if self.strategy == "graded":
            result = NCPolynomial()
            for target, part in sorted(p.split_by_weight(self.word_weight).items()):
                result = result + self._reduce_component(part, target)
            return result
        return self._reduce_component(p, self.element_weight(p))

    def contains(self, p: NCPolynomial) -> bool:
        return not self.reduce(p)

    def graded_dimension(self, w: int) -> int:
        """Dimension of the weight-w component of a graded quotient."""
        if self.strategy != "graded":
            raise ValueError(f"{self.name} is not graded.")
        words = len(self.words_of_weight(w))
        if not self.relations:
            return words
        return words - len(self._echelon(w).pivots)

    def random_products(self, count: int, seed: int, max_weight: Optional[int] = None
                        ) -> List[NCPolynomial]:
        """Reproducible sample of word*relation*word products within the budget."""
        rng = random.Random(seed)
        limit = self.max_degree if max_weight is None else max_weight
        usable = [r for r in self.relations if self.element_weight(r) <= limit]
        samples = []
        for _ in range(count if usable else 0):
            relation = rng.choice(usable)
            room = limit - self.element_weight(relation)
            left_w = rng.randint(0, room)
            right_w = rng.randint(0, room - left_w)
            lefts, rights = self.words_of_weight(left_w), self.words_of_weight(right_w)
            left = rng.choice(lefts) if lefts else ()
            right = rng.choice(rights) if rights else ()
            coeff = FIELD(rng.randint(1, 5))
            samples.append(NCPolynomial.word(left, coeff) * relation * NCPolynomial.word(right))
        return samples

    # --- PBW rewriting ---
    def _load_commutators(self, commutators: Dict[Tuple[Generator, Generator], NCPolynomial]):
        for (x, y), tail in commutators.items():
            if any(len(w) > 1 for w in tail.terms):
                raise ValueError(f"commutator [{x},{y}] has a nonlinear tail.")
            if self.order_key(x) == self.order_key(y):
                if tail:
                    raise ValueError(f"generator {x} has a nonzero self-commutator.")
                continue
            key, oriented = ((x, y), tail) if self.order_key(x) > self.order_key(y) else ((y, x), -tail)
            if key in self.commutators:
                continue
            self.commutators[key] = oriented
            self.relations.append(
                NCPolynomial.word((x, y)) - NCPolynomial.word((y, x)) - tail)

    def is_ordered(self, word: Word) -> bool:
        return all(self.order_key(a) <= self.order_key(b) for a, b in zip(word, word[1:]))

    def _normal_word(self, word: Word) -> NCPolynomial:
        cached = self._normal.get(word)
        if cached is not None:
            return cached
        for i in range(len(word) - 1):
            x, y = word[i], word[i + 1]
            if self.order_key(x) > self.order_key(y):
                head, tail_word = word[:i], word[i + 2:]
                swapped = self._normal_word(head + (y, x) + tail_word)
                tail = self.commutators.get((x, y))
                if tail:
                    extra = NCPolynomial.word(head) * tail * NCPolynomial.word(tail_word)
                    swapped = swapped + self.pbw_reduce(extra)
                self._normal[word] = swapped
                return swapped
        result = NCPolynomial.word(word)
        self._normal[word] = result
        return result

    def pbw_reduce(self, p: NCPolynomial) -> NCPolynomial:
        """
        Normal form with every word non-decreasing in the generator order.

        Raises:
            ValueError: If the algebra was not presented for PBW rewriting.
        """
        if self.strategy != "pbw":
            raise ValueError(f"{self.name} is not presented by commutators.")
        result: Dict[Word, FracElement] = {}
        for word, coeff in as_polynomial(p).terms.items():
            for nf_word, nf_coeff in self._normal_word(word).terms.items():
                result[nf_word] = result.get(nf_word, FIELD.zero) + coeff * nf_coeff
        return NCPolynomial(result)


def reduce_by_ideal(p: NCPolynomial, algebra: PresentedAlgebra) -> NCPolynomial:
    return algebra.reduce(p)


def pbw_reduce(p: NCPolynomial, algebra: PresentedAlgebra) -> NCPolynomial:
    return algebra.pbw_reduce(p)


def reduce_operator(op: LegOperator, algebra: PresentedAlgebra) -> LegOperator:
    """Reduce every entry of an operator with polynomial entries."""
    return op.map(lambda value: algebra.reduce(as_polynomial(value)))


def gl_commutators(dim: int, sites: Sequence[int] = (1,), name: str = "m"
                   ) -> Dict[Tuple[Generator, Generator], NCPolynomial]:
    """[m_i^j, m_k^l] = delta_k^j m_i^l - delta_i^l m_k^j within each site."""
    brackets: Dict[Tuple[Generator, Generator], NCPolynomial] = {}
    span = range(1, dim + 1)
    for site in sites:
        for i, j, k, l in product(span, repeat=4):
            x, y = Generator(name, i, j, 0, site), Generator(name, k, l, 0, site)
            if x == y:
                continue
            tail = NCPolynomial()
            if j == k:
                tail = tail + NCPolynomial.generator(Generator(name, i, l, 0, site))
            if i == l:
                tail = tail - NCPolynomial.generator(Generator(name, k, j, 0, site))
            brackets[(x, y)] = tail
    return brackets


def pbw_order_key(g: Generator) -> tuple:
    """Order by site, then upper index, then lower index."""
    return (g.site, g.name, g.level, g.upper, g.lower)


def enveloping_gl(dim: int, sites: int = 1, name: str = "m") -> PresentedAlgebra:
    """U(gl(N)) tensored `sites` times; distinct sites commute."""
    site_ids = list(range(1, sites + 1)) if sites > 1 else [0]
    generators = [g for s in site_ids for g in matrix_generators(dim, name, 0, s)]
    return PresentedAlgebra(generators, strategy="pbw",
                            commutators=gl_commutators(dim, site_ids, name),
                            order_key=pbw_order_key, name=f"U(gl({dim}))^{sites}")


# --- Engine self-checks ---
def ideal_self_check_failures(algebra: PresentedAlgebra, samples: int, seed: int,
                              max_weight: Optional[int] = None) -> List[str]:
    """Every relation and `samples` random word*relation*word products must reduce to 0."""
    limit = algebra.max_degree if max_weight is None else max_weight
    failures = []
    for relation in algebra.relations:
        if algebra.element_weight(relation) > limit:
            continue
        residual = algebra.reduce(relation)
        if residual:
            failures.append(f"relation {relation} leaves {residual}")
    for element in algebra.random_products(samples, seed, limit):
        residual = algebra.reduce(element)
        if residual:
            failures.append(f"product {element} leaves {residual}")
    return failures


def span_rank(elements: Sequence[NCPolynomial]) -> int:
    """Dimension of the linear span of `elements` over the scalar field."""
    columns: Dict[Word, int] = {}
    dod: Dict[int, Dict[int, FracElement]] = {}
    for element in elements:
        row = {columns.setdefault(w, len(columns)): c for w, c in element.terms.items()}
        if row:
            dod[len(dod)] = row
    if not dod:
        return 0
    return DomainMatrix(dod, (len(dod), len(columns)), DOMAIN).rank()


def pbw_self_check_failures(algebra: PresentedAlgebra, degree: int) -> List[str]:
    """
    Normal forms are idempotent and ordered, and the words of length <= d
    span a space of dimension C(g + d, d), g the number of generators.
    """
    failures = []
    words = [w for length in range(degree + 1) for w in product(algebra.generators, repeat=length)]
    forms = []
    for word in words:
        form = algebra.pbw_reduce(NCPolynomial.word(word))
        if algebra.pbw_reduce(form) != form:
            failures.append(f"normal form of {' '.join(map(str, word))} is not idempotent")
        if not all(algebra.is_ordered(w) for w in form.terms):
            failures.append(f"normal form of {' '.join(map(str, word))} has unordered words")
        forms.append(form)
    expected = comb(len(algebra.generators) + degree, degree)
    found = span_rank(forms)
    if found != expected:
        failures.append(f"degree <= {degree} span has dimension {found}, expected {expected}")
    return failures


def classical_dimension_failures(algebra: PresentedAlgebra, degree: int) -> List[str]:
    """Weight-d components of size C(g + d - 1, d), as for polynomials in g variables."""
    g = len(algebra.generators)
    failures = []
    for d in range(degree + 1):
        found, expected = algebra.graded_dimension(d), comb(g + d - 1, d)
        if found != expected:
            failures.append(f"{algebra.name} degree {d} has dimension {found}, expected {expected}")
    return failures
