"""
The Cayley-Klein Lie algebra so_{ω1..ωN}(N+1).

Generators Ω_ab (a < b) are numbered lexicographically in (a, b); that
numbering is also the PBW order used by the enveloping algebra.  The bracket
of two basis generators is always a single generator times an ω-product (or
zero), so the whole algebra is stored as a table keyed by generator ids.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import sympy

from .exceptions import AlgebraError, OmegaError
from .logging_config import get_logger
from .matrices import rational_matrix, to_rational
from .omega import OmegaPoly, OmegaSpec


logger = get_logger(__name__)

# (coefficient, generator id) of a nonzero basis bracket
BracketTerm = Tuple[OmegaPoly, int]


@dataclass(frozen=True, order=True)
class Generator:
    """The generator Ω_ab with 0 <= a < b."""

    a: int
    b: int

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise AlgebraError("Generator indices must be integers", f"({self.a!r}, {self.b!r})")
        if not 0 <= self.a < self.b:
            raise AlgebraError("Generator indices must satisfy 0 <= a < b", f"({self.a}, {self.b})")

    @property
    def label(self) -> str:
        if self.a < 10 and self.b < 10:
            return f"{self.a}{self.b}"
        return f"{self.a},{self.b}"

    def __str__(self) -> str:
        return f"Ω{self.label}"


def dimension(n: int) -> int:
    """Number of generators, N(N+1)/2."""
    return n * (n + 1) // 2


@lru_cache(maxsize=None)
def all_generators(n: int) -> Tuple[Generator, ...]:
    """All generators of so(N+1) in canonical order."""
    if n < 1:
        raise AlgebraError("n must be a positive integer", repr(n))
    return tuple(Generator(a, b) for a in range(n + 1) for b in range(a + 1, n + 1))


def generator_index(g: Generator, n: int) -> int:
    """Position of ``g`` in ``all_generators(n)``."""
    if g.b > n:
        raise AlgebraError("Generator does not belong to the algebra", f"{g} with N={n}")
    # generators with first index a' < a come first, n - a' of them each
    return g.a * n - g.a * (g.a - 1) // 2 + (g.b - g.a - 1)


def check_generator(spec: OmegaSpec, g: Generator) -> None:
    if g.b > spec.n:
        raise AlgebraError("Generator does not belong to the algebra", f"{g} with N={spec.n}")


@lru_cache(maxsize=None)
def omega_product(spec: OmegaSpec, a: int, b: int) -> OmegaPoly:
    """
    The two-index coefficient ω_ab = ω_{a+1}···ω_b, with ω_aa = 1.

    Fixed entries are folded into the rational coefficient.

    Raises:
        AlgebraError: If not 0 <= a <= b <= N
    """
    n = spec.n
    if not (isinstance(a, int) and isinstance(b, int) and 0 <= a <= b <= n):
        raise AlgebraError("Index out of range for omega product", f"({a}, {b}) with N={n}")

    coeff = Fraction(1)
    exps = [0] * n
    for c in range(a + 1, b + 1):
        value = spec.entries[c - 1].value
        if value is None:
            exps[c - 1] += 1
        else:
            coeff *= value
    return OmegaPoly.monomial(n, tuple(exps), coeff)


def omega_pair(spec: OmegaSpec, x: int, y: int) -> OmegaPoly:
    """ω_xy read symmetrically: ω_xy = ω_yx and ω_xx = 1."""
    return omega_product(spec, min(x, y), max(x, y))


def _bracket_generators(spec: OmegaSpec, g: Generator, h: Generator) -> Optional[Tuple[OmegaPoly, Generator]]:
    a, b = g.a, g.b
    c, d = h.a, h.b
    if g == h:
        return None
    if a == c:
        # [Ω_ab, Ω_ad] = ω_ab Ω_bd
        if b < d:
            return omega_product(spec, a, b), Generator(b, d)
        return -omega_product(spec, a, d), Generator(d, b)
    if b == d:
        # [Ω_ab, Ω_cb] = ω_cb Ω_ac
        if a < c:
            return omega_product(spec, c, b), Generator(a, c)
        return -omega_product(spec, a, b), Generator(c, a)
    if b == c:
        # [Ω_ab, Ω_bd] = -Ω_ad
        return OmegaPoly.constant(spec.n, -1), Generator(a, d)
    if a == d:
        # [Ω_ab, Ω_ca] = Ω_cb
        return OmegaPoly.one(spec.n), Generator(c, b)
    return None


@lru_cache(maxsize=None)
def bracket_table(spec: OmegaSpec) -> Dict[Tuple[int, int], BracketTerm]:
    """
    Nonzero basis brackets keyed by ordered id pairs.

    ``table[(i, j)] = (coeff, k)`` means [g_i, g_j] = coeff·g_k.  Pairs whose
    bracket vanishes (including pairs whose ω-product is zero) are absent.
    """
    gens = all_generators(spec.n)
    table: Dict[Tuple[int, int], BracketTerm] = {}
    for i, g in enumerate(gens):
        for j, h in enumerate(gens):
            result = _bracket_generators(spec, g, h)
            if result is None:
                continue
            coeff, target = result
            if coeff:
                table[(i, j)] = (coeff, generator_index(target, spec.n))
    logger.debug("Bracket table for %s: %d nonzero entries", spec, len(table))
    return table


def bracket_basis(spec: OmegaSpec, g1: Generator, g2: Generator):
    """
    Bracket of two basis generators as an EnvelopingElement of degree <= 1.

    Raises:
        AlgebraError: If a generator does not belong to the algebra
    """
    from .enveloping import EnvelopingElement

    check_generator(spec, g1)
    check_generator(spec, g2)
    term = bracket_table(spec).get((generator_index(g1, spec.n), generator_index(g2, spec.n)))
    if term is None:
        return EnvelopingElement.zero(spec.n)
    coeff, k = term
    return EnvelopingElement(spec.n, {(k,): coeff})


def structure_constants(spec: OmegaSpec) -> Dict[Tuple[Generator, Generator], Dict[Generator, OmegaPoly]]:
    """Full table C_{g,h}^{k} with [g, h] = Σ_k C_{g,h}^{k} k, nonzero entries only."""
    gens = all_generators(spec.n)
    return {
        (gens[i], gens[j]): {gens[k]: coeff}
        for (i, j), (coeff, k) in bracket_table(spec).items()
    }


def killing_form(spec: OmegaSpec, g1: Generator, g2: Generator) -> OmegaPoly:
    """
    β(g1, g2) = tr(ad g1 ∘ ad g2), summed from the structure constants.
    """
    check_generator(spec, g1)
    check_generator(spec, g2)
    n = spec.n
    table = bracket_table(spec)
    x = generator_index(g1, n)
    y = generator_index(g2, n)

    total = OmegaPoly.zero(n)
    for m in range(dimension(n)):
        first = table.get((x, m))
        if first is None:
            continue
        coeff1, k = first
        second = table.get((y, k))
        if second is not None and second[1] == m:
            total = total + coeff1 * second[0]
    return total


def jacobi_check(spec: OmegaSpec) -> Optional[Tuple[Generator, Generator, Generator]]:
    """
    Check the Jacobi identity on every generator triple.

    Returns:
        The first failing triple, or None when the identity holds
    """
    n = spec.n
    table = bracket_table(spec)
    gens = all_generators(n)

    def bracket_linear(i: int, combo: Dict[int, OmegaPoly]) -> Dict[int, OmegaPoly]:
        result: Dict[int, OmegaPoly] = {}
        for j, c in combo.items():
            term = table.get((i, j))
            if term is None:
                continue
            coeff, k = term
            result[k] = result.get(k, OmegaPoly.zero(n)) + c * coeff
        return result

    for i, j, k in combinations(range(len(gens)), 3):
        total: Dict[int, OmegaPoly] = {}
        for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
            inner = bracket_linear(y, {z: OmegaPoly.one(n)})
            for t, c in bracket_linear(x, inner).items():
                total[t] = total.get(t, OmegaPoly.zero(n)) + c
        if any(total.values()):
            logger.error("Jacobi identity fails on %s, %s, %s", gens[i], gens[j], gens[k])
            return gens[i], gens[j], gens[k]
    return None


def _require_fixed(spec: OmegaSpec) -> None:
    if not spec.is_fixed:
        raise OmegaError("Operation needs every omega fixed", str(spec))


def vector_rep(spec: OmegaSpec, g: Generator) -> sympy.Matrix:
    """
    Vector realization Ω_ab = -ω_ab e_ab + e_ba as an (N+1)x(N+1) matrix.

    Raises:
        OmegaError: If the spec has symbolic entries
    """
    _require_fixed(spec)
    check_generator(spec, g)
    size = spec.n + 1
    matrix = sympy.zeros(size, size)
    matrix[g.a, g.b] = -to_rational(omega_product(spec, g.a, g.b).constant_value())
    matrix[g.b, g.a] = 1
    return matrix


def metric_matrix(spec: OmegaSpec) -> Tuple[Tuple[OmegaPoly, ...], ...]:
    """The diagonal matrix I_κ = diag(1, ω_01, ..., ω_0N) with OmegaPoly entries."""
    n = spec.n
    rows = []
    for i in range(n + 1):
        row = [OmegaPoly.zero(n)] * (n + 1)
        row[i] = omega_product(spec, 0, i)
        rows.append(tuple(row))
    return tuple(rows)


def metric_values(spec: OmegaSpec) -> sympy.Matrix:
    """I_κ evaluated for a Fixed spec."""
    _require_fixed(spec)
    metric = metric_matrix(spec)
    return rational_matrix(
        [[entry.constant_value() for entry in row] for row in metric]
    )


def is_metric_antisymmetric(spec: OmegaSpec, matrix: sympy.Matrix) -> bool:
    """
    Check ᵗX·I_κ + I_κ·X = 0 for a Fixed spec.

    This is the orientation satisfied by the vector realization for any
    ω; for ω_a = ±1 it coincides with X·I_κ + I_κ·ᵗX = 0.
    """
    metric = metric_values(spec)
    return (matrix.T * metric + metric * matrix).is_zero_matrix


def reverse_isomorphism(spec: OmegaSpec) -> Tuple[OmegaSpec, Dict[Generator, Tuple[int, Generator]]]:
    """
    so_{ω1..ωN}(N+1) ≅ so_{ωN..ω1}(N+1).

    Returns:
        The reversed spec and the generator map Ω_ab -> -Ω_{N-b,N-a},
        given as ``{g: (sign, image)}``
    """
    n = spec.n
    mapping = {g: (-1, Generator(n - g.b, n - g.a)) for g in all_generators(n)}
    return spec.reversed(), mapping


def check_homomorphism(
    source: OmegaSpec,
    target: OmegaSpec,
    mapping: Dict[Generator, Tuple[int, Generator]],
) -> Optional[Tuple[Generator, Generator]]:
    """
    Verify that a signed generator map preserves every bracket.

    Coefficients of the source are read in the target's variables by
    reversing the index order, which matches ``reverse_isomorphism``;
    for Fixed specs the coefficients are compared as numbers.

    Returns:
        The first pair whose bracket is not preserved, or None
    """
    if source.n != target.n:
        raise AlgebraError("Mismatched algebra sizes", f"{source.n} != {target.n}")
    n = source.n
    gens = all_generators(n)

    def relabel(poly: OmegaPoly) -> OmegaPoly:
        # ω_a of the source is ω_{N+1-a} of the target
        return OmegaPoly(n, {tuple(reversed(exps)): c for exps, c in poly.terms()})

    source_table = bracket_table(source)
    target_table = bracket_table(target)
    for i, g in enumerate(gens):
        for j, h in enumerate(gens):
            sign_g, image_g = mapping[g]
            sign_h, image_h = mapping[h]

            # image of the bracket
            expected: Dict[int, OmegaPoly] = {}
            term = source_table.get((i, j))
            if term is not None:
                coeff, k = term
                sign_k, image_k = mapping[gens[k]]
                expected[generator_index(image_k, n)] = relabel(coeff) * sign_k

            # bracket of the images
            actual: Dict[int, OmegaPoly] = {}
            term = target_table.get((generator_index(image_g, n), generator_index(image_h, n)))
            if term is not None:
                coeff, k = term
                actual[k] = coeff * (sign_g * sign_h)

            if expected != actual:
                logger.error("Bracket [%s, %s] is not preserved", g, h)
                return g, h
    return None


def _signature(values: List[Fraction]) -> Tuple[int, int]:
    # so(p,q) = so(q,p): larger count first
    plus = sum(1 for v in values if v > 0)
    minus = sum(1 for v in values if v < 0)
    return max(plus, minus), min(plus, minus)


def classify(spec: OmegaSpec) -> str:
    """
    Taxonomy label for a spec: so(p,q), iso(p,q), iiso(p,q), ii'so(p,q),
    t_r(so(p,q)+so(p',q')), flag, or a generic contraction label.

    Symbolic entries count as nonzero; signatures are only printed when
    every coefficient involved is Fixed.
    """
    n = spec.n
    values = spec.values()
    zeros = {a for a, v in enumerate(values, start=1) if v == 0}

    def signature_from(base: int, upto: int) -> str:
        # signature of diag(1, ω_{base,base+1}, ..., ω_{base,upto})
        sub = [Fraction(1)]
        for c in range(base + 1, upto + 1):
            poly = omega_product(spec, base, c)
            if not poly.is_constant:
                return "(p,q)"
            sub.append(poly.constant_value())
        p, q = _signature(sub)
        return f"({p},{q})" if q else f"({p})"

    if len(zeros) == n:
        return "flag"
    if not zeros:
        return "so" + signature_from(0, n)
    if zeros in ({n}, {n - 1, n}):
        return classify(spec.reversed())
    if zeros == {1}:
        return "iso" + signature_from(1, n)
    if zeros == {1, 2}:
        return "iiso" + signature_from(2, n)
    if zeros == {1, n}:
        return "ii'so" + signature_from(1, n - 1)
    if len(zeros) == 1:
        k = next(iter(zeros))
        blocks = [f"so{signature_from(0, k - 1)}", f"so{signature_from(k, n)}"]
        # larger block first
        if n + 1 - k > k:
            blocks.reverse()
        return f"t_{k * (n + 1 - k)}(" + "+".join(blocks) + ")"
    return "contraction(" + ",".join(f"ω{a}=0" for a in sorted(zeros)) + ")"
