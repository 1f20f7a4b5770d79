"""
Exact arithmetic in the universal enveloping algebra U(g).

Elements are sparse maps from PBW words to OmegaPoly coefficients.  A word
is a tuple of generator ids (see ``algebra.all_generators``); it is in PBW
form when it is non-decreasing.  Straightening rewrites a descent g·h (g > h)
as h·g + [g, h] until every word is sorted.
"""

import heapq
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from sympy.utilities.iterables import multiset_permutations

from .algebra import Generator, all_generators, bracket_table, check_generator, dimension, generator_index
from .data_models import CentralityResult
from .exceptions import AlgebraError, OmegaError
from .logging_config import get_logger
from .omega import OmegaPoly, OmegaSpec, Rational, to_fraction


logger = get_logger(__name__)

Word = Tuple[int, ...]
Scalar = Union[int, Fraction, OmegaPoly]

STRATEGIES = ('leftmost', 'rightmost')


@dataclass(frozen=True)
class PBWMonomial:
    """
    A PBW-ordered monomial, stored as its sorted word of generator ids.

    ``factors`` groups repeats into (Generator, power) pairs; the empty word
    is the unit monomial.
    """

    n: int
    word: Word = ()

    def __post_init__(self):
        word = tuple(self.word)
        if any(x > y for x, y in zip(word, word[1:])):
            raise AlgebraError("Monomial is not in PBW order", repr(word))
        if any(not 0 <= x < dimension(self.n) for x in word):
            raise AlgebraError("Generator id out of range", repr(word))
        object.__setattr__(self, 'word', word)

    @classmethod
    def from_factors(cls, n: int, factors: Iterable[Tuple[Generator, int]]) -> 'PBWMonomial':
        word: List[int] = []
        for g, power in factors:
            if power < 1:
                raise AlgebraError("Powers must be positive", f"{g}^{power}")
            word.extend([generator_index(g, n)] * power)
        return cls(n, tuple(sorted(word)))

    @property
    def factors(self) -> Tuple[Tuple[Generator, int], ...]:
        gens = all_generators(self.n)
        result: List[Tuple[Generator, int]] = []
        for x in self.word:
            if result and result[-1][0] == gens[x]:
                result[-1] = (gens[x], result[-1][1] + 1)
            else:
                result.append((gens[x], 1))
        return tuple(result)

    @property
    def degree(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        if not self.word:
            return "1"
        return "".join(str(g) + (f"^{p}" if p > 1 else "") for g, p in self.factors)


class EnvelopingElement:
    """
    Finite sum of PBW monomials with OmegaPoly coefficients.

    Instances are immutable; zero coefficients are never stored, so
    equality is identity of the canonical term maps.
    """

    __slots__ = ('n', '_terms', '_hash')

    def __init__(self, n: int, terms: Optional[Mapping[Word, OmegaPoly]] = None):
        self.n = n
        self._hash = None
        self._terms: Dict[Word, OmegaPoly] = {}
        size = dimension(n)
        for word, coeff in (terms or {}).items():
            word = tuple(word)
            if any(x > y for x, y in zip(word, word[1:])):
                raise AlgebraError("Word is not in PBW order", repr(word))
            if any(not 0 <= x < size for x in word):
                raise AlgebraError("Generator id out of range", repr(word))
            if not isinstance(coeff, OmegaPoly):
                coeff = OmegaPoly.constant(n, to_fraction(coeff))
            if coeff.n != n:
                raise OmegaError("Coefficient has the wrong number of variables", f"{coeff.n} != {n}")
            if coeff:
                total = self._terms.get(word)
                total = coeff if total is None else total + coeff
                if total:
                    self._terms[word] = total
                else:
                    del self._terms[word]

    @classmethod
    def _raw(cls, n: int, terms: Dict[Word, OmegaPoly]) -> 'EnvelopingElement':
        element = cls.__new__(cls)
        element.n = n
        element._terms = terms
        element._hash = None
        return element

    @classmethod
    def zero(cls, n: int) -> 'EnvelopingElement':
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> 'EnvelopingElement':
        return cls._raw(n, {(): OmegaPoly.one(n)})

    @classmethod
    def generator(cls, n: int, g: Generator) -> 'EnvelopingElement':
        return cls._raw(n, {(generator_index(g, n),): OmegaPoly.one(n)})

    @classmethod
    def from_monomials(cls, n: int, items: Iterable[Tuple[PBWMonomial, Scalar]]) -> 'EnvelopingElement':
        return cls(n, {m.word: c for m, c in items})

    def terms(self) -> Iterator[Tuple[Word, OmegaPoly]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> List[Tuple[Word, OmegaPoly]]:
        """Terms in canonical order: by degree, then lexicographically by word."""
        return sorted(self._terms.items(), key=lambda t: (len(t[0]), t[0]))

    def monomials(self) -> Iterator[Tuple[PBWMonomial, OmegaPoly]]:
        for word, coeff in self.sorted_terms():
            yield PBWMonomial(self.n, word), coeff

    def coefficient(self, word: Union[Word, PBWMonomial]) -> OmegaPoly:
        if isinstance(word, PBWMonomial):
            word = word.word
        return self._terms.get(tuple(word), OmegaPoly.zero(self.n))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: 'EnvelopingElement') -> None:
        if not isinstance(other, EnvelopingElement):
            raise AlgebraError("Expected an enveloping algebra element", type(other).__name__)
        if other.n != self.n:
            raise AlgebraError("Mismatched algebra sizes", f"{self.n} != {other.n}")

    def __add__(self, other: 'EnvelopingElement') -> 'EnvelopingElement':
        self._check(other)
        result = dict(self._terms)
        _accumulate(result, other._terms.items())
        return EnvelopingElement._raw(self.n, result)

    def __neg__(self) -> 'EnvelopingElement':
        return EnvelopingElement._raw(self.n, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: 'EnvelopingElement') -> 'EnvelopingElement':
        self._check(other)
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> 'EnvelopingElement':
        # products of two elements need the structure constants: use multiply()
        if isinstance(scalar, EnvelopingElement):
            return NotImplemented
        return scale(self, scalar)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, EnvelopingElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def map_coefficients(self, fn) -> 'EnvelopingElement':
        """Apply ``fn`` to every coefficient, dropping terms that vanish."""
        result = {}
        for word, coeff in self._terms.items():
            new = fn(coeff)
            if new:
                result[word] = new
        return EnvelopingElement._raw(self.n, result)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for word, coeff in self.sorted_terms():
            monomial = str(PBWMonomial(self.n, word))
            parts.append(f"({coeff!r})*{monomial}")
        return " + ".join(parts)


def _accumulate(target: Dict, items: Iterable[Tuple[Word, OmegaPoly]]) -> None:
    for word, coeff in items:
        total = target.get(word)
        total = coeff if total is None else total + coeff
        if total:
            target[word] = total
        else:
            target.pop(word, None)


def _inversions(word: Word) -> int:
    return sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])


def _descent(word: Word, strategy: str) -> int:
    """Position i of a descent word[i] > word[i+1], or -1 if sorted."""
    positions = range(len(word) - 1)
    if strategy == 'rightmost':
        positions = reversed(positions)
    for i in positions:
        if word[i] > word[i + 1]:
            return i
    return -1


def _straighten(spec: OmegaSpec, pending: Dict[Word, OmegaPoly], strategy: str = 'leftmost') -> Dict[Word, OmegaPoly]:
    """
    Rewrite arbitrary words into PBW form.

    Words are processed longest first and, within one length, most
    inversions first.  A rewrite only produces words that are shorter or
    have one inversion less, so every word is complete when it is popped
    and its coefficient is merged before any further rewriting.
    """
    if strategy not in STRATEGIES:
        raise AlgebraError("Unknown normal ordering strategy", strategy)

    table = bracket_table(spec)
    result: Dict[Word, OmegaPoly] = {}
    work: Dict[Word, OmegaPoly] = {}
    heap: List[Tuple[int, int, Word]] = []

    def push(word: Word, coeff: OmegaPoly) -> None:
        inversions = _inversions(word)
        if not inversions:
            _accumulate(result, ((word, coeff),))
            return
        if word in work:
            total = work[word] + coeff
            # a cancelled word stays in the heap and is skipped when popped
            work[word] = total
            return
        work[word] = coeff
        heapq.heappush(heap, (-len(word), -inversions, word))

    for word, coeff in pending.items():
        if coeff:
            push(tuple(word), coeff)

    rewrites = 0
    while heap:
        _, _, word = heapq.heappop(heap)
        coeff = work.pop(word)
        if not coeff:
            continue
        rewrites += 1
        i = _descent(word, strategy)
        g, h = word[i], word[i + 1]
        push(word[:i] + (h, g) + word[i + 2:], coeff)
        term = table.get((g, h))
        if term is not None:
            bracket_coeff, k = term
            push(word[:i] + (k,) + word[i + 2:], coeff * bracket_coeff)

    logger.debug("Straightened %d words with %d rewrites into %d terms", len(pending), rewrites, len(result))
    return result


def _word_of(spec: OmegaSpec, word: Sequence[Union[Generator, int]]) -> Word:
    ids = []
    size = dimension(spec.n)
    for x in word:
        if isinstance(x, Generator):
            check_generator(spec, x)
            ids.append(generator_index(x, spec.n))
        elif isinstance(x, int) and 0 <= x < size:
            ids.append(x)
        else:
            raise AlgebraError("Not a generator of the algebra", repr(x))
    return tuple(ids)


def _check_element(spec: OmegaSpec, *elements: EnvelopingElement) -> None:
    for u in elements:
        if u.n != spec.n:
            raise AlgebraError("Mismatched algebra sizes", f"element N={u.n}, spec N={spec.n}")


def normal_order(spec: OmegaSpec, word: Sequence[Union[Generator, int]], strategy: str = 'leftmost') -> EnvelopingElement:
    """
    Rewrite a free word of generators into the PBW basis.

    Args:
        spec: The algebra
        word: Generators (or generator ids) in product order
        strategy: ``leftmost`` or ``rightmost`` descent first

    Returns:
        The normal-ordered element
    """
    ids = _word_of(spec, word)
    return EnvelopingElement._raw(spec.n, _straighten(spec, {ids: OmegaPoly.one(spec.n)}, strategy))


def normal_order_words(spec: OmegaSpec, words: Mapping[Word, OmegaPoly], strategy: str = 'leftmost') -> EnvelopingElement:
    """Normal-order a linear combination of free words."""
    return EnvelopingElement._raw(spec.n, _straighten(spec, dict(words), strategy))


def multiply(spec: OmegaSpec, u: EnvelopingElement, v: EnvelopingElement) -> EnvelopingElement:
    """
    PBW-normal-ordered product u·v.

    Raises:
        AlgebraError: If the elements and the spec have different N
    """
    _check_element(spec, u, v)
    pending: Dict[Word, OmegaPoly] = {}
    for w1, c1 in u.terms():
        for w2, c2 in v.terms():
            _accumulate(pending, ((w1 + w2, c1 * c2),))
    return EnvelopingElement._raw(spec.n, _straighten(spec, pending))


def power(spec: OmegaSpec, u: EnvelopingElement, exponent: int) -> EnvelopingElement:
    if exponent < 0:
        raise AlgebraError("Negative powers are not defined", repr(exponent))
    result = EnvelopingElement.one(spec.n)
    for _ in range(exponent):
        result = multiply(spec, result, u)
    return result


def adjoint_action(spec: OmegaSpec, g: Generator, u: EnvelopingElement) -> EnvelopingElement:
    """
    ad g (u) = [g, u], expanded by the Leibniz rule and straightened.
    """
    check_generator(spec, g)
    _check_element(spec, u)
    table = bracket_table(spec)
    x = generator_index(g, spec.n)

    pending: Dict[Word, OmegaPoly] = {}
    for word, coeff in u.terms():
        for i, y in enumerate(word):
            term = table.get((x, y))
            if term is None:
                continue
            bracket_coeff, k = term
            _accumulate(pending, ((word[:i] + (k,) + word[i + 1:], coeff * bracket_coeff),))
    return EnvelopingElement._raw(spec.n, _straighten(spec, pending))


def commutator(spec: OmegaSpec, u: EnvelopingElement, v: EnvelopingElement) -> EnvelopingElement:
    """[u, v] = u·v - v·u."""
    _check_element(spec, u, v)
    return multiply(spec, u, v) - multiply(spec, v, u)


def _commutator_with_generator(args) -> Tuple[int, EnvelopingElement]:
    spec, index, u = args
    return index, adjoint_action(spec, all_generators(spec.n)[index], u)


def is_central(spec: OmegaSpec, u: EnvelopingElement, workers: int = 1) -> CentralityResult:
    """
    Check [g, u] = 0 for every generator g.

    Args:
        spec: The algebra
        u: Element to test
        workers: Process pool size; 1 checks serially

    Returns:
        CentralityResult carrying the first offending generator and its
        nonzero commutator on failure
    """
    _check_element(spec, u)
    gens = all_generators(spec.n)
    tasks = [(spec, i, u) for i in range(len(gens))]

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = sorted(pool.map(_commutator_with_generator, tasks), key=lambda t: t[0])
    else:
        outcomes = map(_commutator_with_generator, tasks)

    for index, remainder in outcomes:
        if remainder:
            logger.debug("Not central: [%s, u] has %d terms", gens[index], len(remainder))
            return CentralityResult(False, gens[index], remainder)
    return CentralityResult(True)


def substitute(spec: OmegaSpec, u: EnvelopingElement, assignment: Mapping[int, Rational]) -> EnvelopingElement:
    """
    Evaluate some symbolic ω_a in the coefficients of u.

    Setting ω_a := 0 realizes the contraction directly; no generator is
    rescaled.

    Raises:
        OmegaError: If the assignment names a variable that is not symbolic in ``spec``
    """
    _check_element(spec, u)
    if not assignment:
        return u
    spec.substitute(assignment)
    return u.map_coefficients(lambda c: c.substitute(assignment))


def scale(u: EnvelopingElement, factor: Scalar) -> EnvelopingElement:
    """Multiply every coefficient by a rational or an OmegaPoly."""
    if isinstance(factor, OmegaPoly):
        if factor.n != u.n:
            raise OmegaError("Coefficient has the wrong number of variables", f"{factor.n} != {u.n}")
    else:
        factor = to_fraction(factor)
    return u.map_coefficients(lambda c: c * factor)


def degree(u: EnvelopingElement) -> int:
    """Largest word length; 0 for the zero element."""
    return max((len(w) for w, _ in u.terms()), default=0)


def is_homogeneous(u: EnvelopingElement, expected: Optional[int] = None) -> bool:
    lengths = {len(w) for w, _ in u.terms()}
    if expected is not None:
        return lengths <= {expected}
    return len(lengths) <= 1


def symmetrize(spec: OmegaSpec, factors: Sequence[Union[Generator, int]]) -> EnvelopingElement:
    """
    The symmetrization map on one commutative monomial: the average of the
    normal-ordered products over all distinct orderings of ``factors``.
    """
    ids = _word_of(spec, factors)
    if not ids:
        return EnvelopingElement.one(spec.n)
    pending: Dict[Word, OmegaPoly] = {}
    count = 0
    for perm in multiset_permutations(list(ids)):
        _accumulate(pending, ((tuple(perm), OmegaPoly.one(spec.n)),))
        count += 1
    return scale(EnvelopingElement._raw(spec.n, _straighten(spec, pending)), Fraction(1, count))


def symmetrize_element(spec: OmegaSpec, u: EnvelopingElement) -> EnvelopingElement:
    """
    Extend symmetrization linearly, reading every PBW word of ``u`` as a
    commutative monomial.
    """
    _check_element(spec, u)
    result = EnvelopingElement.zero(spec.n)
    for word, coeff in u.terms():
        result = result + scale(symmetrize(spec, word), coeff)
    return result


def monomial_commutes(spec: OmegaSpec, word: Word) -> bool:
    """True when all generators of the word pairwise commute."""
    table = bracket_table(spec)
    return all(
        (word[i], word[j]) not in table
        for i in range(len(word)) for j in range(i + 1, len(word))
    )


def evaluate_commutative(
    spec: OmegaSpec,
    u: EnvelopingElement,
    alpha: Mapping[Generator, Rational],
    omega: Optional[Mapping[int, Rational]] = None,
) -> Fraction:
    """
    Replace every generator by a commuting rational value and evaluate.

    Only meaningful on elements whose monomials consist of commuting
    generators (such as W-symbols).

    Args:
        spec: The algebra
        u: Element to evaluate
        alpha: Value for each generator
        omega: Values for symbolic coefficients still present in u
    """
    _check_element(spec, u)
    gens = all_generators(spec.n)
    values = [to_fraction(alpha[g]) for g in gens]
    total = Fraction(0)
    for word, coeff in u.terms():
        value = coeff.evaluate(omega or {})
        for x in word:
            value *= values[x]
        total += value
    return total
