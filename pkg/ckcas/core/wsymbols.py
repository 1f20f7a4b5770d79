"""
W-symbols: the Pauli-Lubanski type elements of U(g).

A W-symbol is labelled by 2s increasing indices a_1<..<a_s<b_1<..<b_s and is
built recursively from the two-index case W_ab = Ω_ab.  The generator-W
bracket has a closed form that is implemented separately so that it can be
compared with the engine's commutator.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import List, Sequence, Set, Tuple

from .algebra import Generator, all_generators, omega_pair, omega_product
from .enveloping import (
    EnvelopingElement,
    adjoint_action,
    commutator,
    is_homogeneous,
    monomial_commutes,
    multiply,
    scale,
)
from .exceptions import AlgebraError, CancellationError, IndexSetError
from .logging_config import get_logger
from .omega import OmegaPoly, OmegaSpec


logger = get_logger(__name__)


@dataclass(frozen=True, order=True)
class WIndexSet:
    """Strictly increasing indices a_1..a_s b_1..b_s of a W-symbol."""

    indices: Tuple[int, ...]

    def __post_init__(self):
        indices = tuple(self.indices)
        if len(indices) < 2 or len(indices) % 2:
            raise IndexSetError("Index set needs an even number (>= 2) of indices", repr(indices))
        if any(not isinstance(i, int) or i < 0 for i in indices):
            raise IndexSetError("Indices must be non-negative integers", repr(indices))
        if any(x >= y for x, y in zip(indices, indices[1:])):
            raise IndexSetError("Indices must be strictly increasing", repr(indices))
        object.__setattr__(self, 'indices', indices)

    @classmethod
    def parse(cls, text: str) -> 'WIndexSet':
        """Parse ``0123`` or ``0,1,10,11``."""
        text = text.strip()
        try:
            if "," in text:
                return cls(tuple(int(t) for t in text.split(",")))
            return cls(tuple(int(c) for c in text))
        except ValueError:
            raise IndexSetError("Malformed index set", repr(text))

    @property
    def s(self) -> int:
        return len(self.indices) // 2

    @property
    def a_block(self) -> Tuple[int, ...]:
        return self.indices[:self.s]

    @property
    def b_block(self) -> Tuple[int, ...]:
        return self.indices[self.s:]

    def without(self, x: int, y: int) -> Tuple[int, ...]:
        return tuple(i for i in self.indices if i not in (x, y))

    @property
    def label(self) -> str:
        if all(i < 10 for i in self.indices):
            return "".join(str(i) for i in self.indices)
        return ",".join(str(i) for i in self.indices)

    def __str__(self) -> str:
        return f"W_{{{self.label}}}"


@dataclass(frozen=True)
class WSymbol:
    """A W-symbol together with its expansion in U(g)."""

    index_set: WIndexSet
    element: EnvelopingElement

    @property
    def s(self) -> int:
        return self.index_set.s


def _as_index_set(ix) -> WIndexSet:
    if isinstance(ix, WIndexSet):
        return ix
    if isinstance(ix, str):
        return WIndexSet.parse(ix)
    return WIndexSet(tuple(ix))


def _check_range(spec: OmegaSpec, ix: WIndexSet) -> None:
    if ix.indices[-1] > spec.n:
        raise IndexSetError("Index set exceeds the algebra", f"{ix} with N={spec.n}")


@lru_cache(maxsize=None)
def _w_element(spec: OmegaSpec, indices: Tuple[int, ...]) -> EnvelopingElement:
    n = spec.n
    s = len(indices) // 2
    if s == 1:
        return EnvelopingElement.generator(n, Generator(indices[0], indices[1]))

    a = indices[:s]
    b = indices[s:]
    b_s = b[-1]
    ix = WIndexSet(indices)
    total = EnvelopingElement.zero(n)

    for mu in range(1, s + 1):
        a_mu = a[mu - 1]
        term = multiply(
            spec,
            EnvelopingElement.generator(n, Generator(a_mu, b_s)),
            _w_element(spec, ix.without(a_mu, b_s)),
        )
        total = total + (term if mu % 2 else -term)

    for nu in range(1, s):
        b_nu = b[nu - 1]
        term = multiply(
            spec,
            EnvelopingElement.generator(n, Generator(b_nu, b_s)),
            _w_element(spec, ix.without(b_nu, b_s)),
        )
        sign = -1 if (s + nu + 1) % 2 else 1
        total = total + scale(term, omega_pair(spec, a[-1], b_nu) * sign)

    for word, _ in total.terms():
        if not monomial_commutes(spec, word):
            raise AlgebraError("W-symbol monomial with non-commuting factors", f"{ix}: {word}")
    logger.debug("Built %s over %s with %d terms", ix, spec, len(total))
    return total


def w_symbol(spec: OmegaSpec, ix) -> WSymbol:
    """
    Build the W-symbol for an index set.

    W_ab = Ω_ab; for 2s indices
    W = Σ_μ (-1)^{μ+1} Ω_{a_μ b_s} W(ix - {a_μ, b_s})
      + Σ_{ν<s} (-1)^{s+ν+1} ω_{a_s b_ν} Ω_{b_ν b_s} W(ix - {b_ν, b_s}),
    the remaining indices being split in half again.  Results are memoized
    per (spec, index set).

    Raises:
        IndexSetError: If the index set is malformed or exceeds N
    """
    ix = _as_index_set(ix)
    _check_range(spec, ix)
    return WSymbol(ix, _w_element(spec, ix.indices))


def transposition_count(sequence: Sequence[int]) -> int:
    """Number of strict inversions, i.e. adjacent transpositions needed to sort."""
    seq = list(sequence)
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


def _pair_exponents(n: int, indices: Tuple[int, ...]) -> List[int]:
    # exponents of Π_i ω_{a_i b_{s+1-i}} in ω_1..ω_N
    s = len(indices) // 2
    exps = [0] * n
    for i in range(s):
        lo, hi = indices[i], indices[len(indices) - 1 - i]
        for c in range(lo + 1, hi + 1):
            exps[c - 1] += 1
    return exps


def closed_form_factor(spec: OmegaSpec, g: Generator, ix: WIndexSet, merged: WIndexSet) -> OmegaPoly:
    """
    Square root of ω_ab·Π ω_{a_i b_{s+1-i}}(ix) / Π ω_{a_i b_{s+1-i}}(ix').

    Computed by halving the exponent vector in ω_1..ω_N and then applying
    the spec's fixed values.

    Raises:
        CancellationError: If an exponent is odd or negative
    """
    n = spec.n
    exps = [0] * n
    for c in range(g.a + 1, g.b + 1):
        exps[c - 1] += 1
    for c, e in enumerate(_pair_exponents(n, ix.indices)):
        exps[c] += e
    for c, e in enumerate(_pair_exponents(n, merged.indices)):
        exps[c] -= e

    if any(e < 0 or e % 2 for e in exps):
        raise CancellationError("No exact square root in the closed-form bracket", f"[{g}, {ix}] exponents {exps}")

    root = OmegaPoly.monomial(n, tuple(e // 2 for e in exps))
    fixed = {a: v for a, v in enumerate(spec.values(), start=1) if v is not None}
    return root.substitute(fixed)


def w_gen_bracket_closed_form(spec: OmegaSpec, g: Generator, ix) -> EnvelopingElement:
    """
    [Ω_ab, W(ix)] from the closed formula.

    Zero when both or neither of a, b belong to ix; otherwise
    (-1)^{p+1}·f·W(ix') where ix' swaps the shared index for the other one,
    p counts the transpositions sorting {a,b; ix} and f is the square-root
    factor of ``closed_form_factor``.
    """
    ix = _as_index_set(ix)
    _check_range(spec, ix)
    if g.b > spec.n:
        raise AlgebraError("Generator does not belong to the algebra", f"{g} with N={spec.n}")

    present = {g.a, g.b} & set(ix.indices)
    if len(present) != 1:
        return EnvelopingElement.zero(spec.n)

    shared = present.pop()
    other = g.b if shared == g.a else g.a
    merged = WIndexSet(tuple(sorted(set(ix.indices) - {shared} | {other})))

    p = transposition_count((g.a, g.b) + ix.indices)
    factor = closed_form_factor(spec, g, ix, merged)
    if p % 2 == 0:
        factor = -factor
    return scale(_w_element(spec, merged.indices), factor)


def w_gen_bracket(spec: OmegaSpec, g: Generator, ix) -> EnvelopingElement:
    """[Ω_ab, W(ix)] computed by the engine."""
    return adjoint_action(spec, g, w_symbol(spec, ix).element)


def w_w_bracket(spec: OmegaSpec, ix1, ix2) -> EnvelopingElement:
    """Normal-ordered commutator of two W-symbols."""
    return commutator(spec, w_symbol(spec, ix1).element, w_symbol(spec, ix2).element)


def all_index_sets(n: int, s: int) -> List[WIndexSet]:
    """Every index set of size 2s inside 0..N, in lexicographic order."""
    if s < 1:
        raise IndexSetError("s must be positive", repr(s))
    return [WIndexSet(c) for c in combinations(range(n + 1), 2 * s)]


def term_weights(spec: OmegaSpec, u: EnvelopingElement) -> Set[Tuple[int, ...]]:
    """
    Doubled dimensional weights of every term of u.

    A generator Ω_ab weighs half the exponent vector of ω_ab and a
    coefficient weighs its own exponent vector; weights are doubled so that
    they stay integral.  Only meaningful for fully symbolic specs, where no
    ω is folded into the rational coefficient.
    """
    n = spec.n
    gens_exps = []
    symbolic = OmegaSpec.symbolic(n)
    for g in all_generators(n):
        exps, _ = omega_product(symbolic, g.a, g.b).leading()
        gens_exps.append(exps)

    weights = set()
    for word, coeff in u.terms():
        for exps, _ in coeff.terms():
            weight = [2 * e for e in exps]
            for x in word:
                weight = [w + e for w, e in zip(weight, gens_exps[x])]
            weights.add(tuple(weight))
    return weights


def omega_weight(spec: OmegaSpec, ix) -> Tuple[int, ...]:
    """
    Common doubled weight of all terms of W(ix), built with every ω symbolic.

    Raises:
        AlgebraError: If the terms do not share one weight
    """
    ix = _as_index_set(ix)
    symbolic = OmegaSpec.symbolic(spec.n)
    weights = term_weights(symbolic, w_symbol(symbolic, ix).element)
    if len(weights) != 1:
        raise AlgebraError("W-symbol is not dimensionally homogeneous", f"{ix}: {sorted(weights)}")
    return next(iter(weights))


def is_w_homogeneous(spec: OmegaSpec, ix) -> bool:
    """Every monomial of W over 2s indices has degree exactly s."""
    ix = _as_index_set(ix)
    return is_homogeneous(w_symbol(spec, ix).element, ix.s)
