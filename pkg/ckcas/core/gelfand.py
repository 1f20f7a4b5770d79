"""
Independent checks of the Casimir construction.

Everything here works in the symmetric algebra: generators are replaced by
commuting variables α_ab with exact rational values.  The T-matrix route is
only defined when every ω is nonzero; the rank of M_g is defined for every
spec.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import sympy

from .algebra import Generator, all_generators, bracket_table, dimension, generator_index, omega_pair, omega_product
from .casimirs import casimir_count
from .data_models import CheckReport, RankResult
from .enveloping import EnvelopingElement, evaluate_commutative, is_central, symmetrize_element
from .exceptions import AlgebraError, DegenerateFormError, OmegaError
from .logging_config import get_logger
from .matrices import determinant, rank, rational_matrix
from .omega import OmegaPoly, OmegaSpec, Rational, to_fraction
from .wsymbols import WIndexSet, all_index_sets, transposition_count, w_symbol


logger = get_logger(__name__)


def random_rational(rng: random.Random, magnitude: int, nonzero: bool = True) -> Fraction:
    """A random p/q with |p|, q <= magnitude."""
    while True:
        value = Fraction(rng.randint(-magnitude, magnitude), rng.randint(1, magnitude))
        if value or not nonzero:
            return value


def random_omega_values(spec: OmegaSpec, rng: random.Random, magnitude: int) -> Dict[int, Fraction]:
    """Random nonzero values for the symbolic entries of a spec."""
    return {a: random_rational(rng, magnitude) for a in spec.symbolic_indices}


def random_nonzero_spec(n: int, rng: random.Random, choices: Sequence[Rational] = (1, -1, 2, -2, Fraction(1, 3))) -> OmegaSpec:
    """A Fixed spec with every ω drawn from ``choices``."""
    return OmegaSpec.fixed(rng.choice(choices) for _ in range(n))


@dataclass(frozen=True)
class AlphaAssignment:
    """Values of the commuting variables α_ab, one per generator in canonical order."""

    n: int
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(to_fraction(v) for v in self.values)
        if len(values) != dimension(self.n):
            raise AlgebraError("Alpha assignment must cover every generator", f"{len(values)} != {dimension(self.n)}")
        object.__setattr__(self, 'values', values)

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[Generator, Rational]) -> 'AlphaAssignment':
        missing = [str(g) for g in all_generators(n) if g not in mapping]
        if missing:
            raise AlgebraError("Alpha assignment must cover every generator", ", ".join(missing))
        return cls(n, tuple(mapping[g] for g in all_generators(n)))

    @classmethod
    def random(cls, n: int, rng: random.Random, magnitude: int = 10 ** 4) -> 'AlphaAssignment':
        return cls(n, tuple(random_rational(rng, magnitude) for _ in range(dimension(n))))

    def __getitem__(self, g: Generator) -> Fraction:
        return self.values[generator_index(g, self.n)]

    def as_mapping(self) -> Dict[Generator, Fraction]:
        return dict(zip(all_generators(self.n), self.values))


def _require_nonzero(spec: OmegaSpec) -> None:
    if not spec.is_fixed:
        raise OmegaError("Operation needs every omega fixed", str(spec))
    if not spec.all_nonzero:
        raise DegenerateFormError("Operation needs every omega nonzero", str(spec))


def _check_subset(spec: OmegaSpec, subset: Sequence[int]) -> Tuple[int, ...]:
    subset = tuple(subset)
    if not subset:
        raise AlgebraError("Index subset must not be empty")
    if any(x >= y for x, y in zip(subset, subset[1:])) or subset[0] < 0 or subset[-1] > spec.n:
        raise AlgebraError("Index subset must be increasing within 0..N", repr(subset))
    return subset


def t_matrix(spec: OmegaSpec, alpha: AlphaAssignment, subset: Optional[Sequence[int]] = None) -> sympy.Matrix:
    """
    The I_κ-antisymmetric matrix of α's restricted to ``subset``.

    Entry (i, j) for u_i < u_j is -α_{u_i u_j}/ω_{u_i u_j}, entry (j, i) is
    α_{u_i u_j}, the diagonal is zero.

    Raises:
        DegenerateFormError: If some ω is zero
    """
    _require_nonzero(spec)
    subset = _check_subset(spec, range(spec.n + 1) if subset is None else subset)
    size = len(subset)
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            a, b = subset[i], subset[j]
            value = alpha[Generator(a, b)]
            rows[i][j] = -value / omega_product(spec, a, b).constant_value()
            rows[j][i] = value
    return rational_matrix(rows)


def sub_metric(spec: OmegaSpec, subset: Sequence[int]) -> sympy.Matrix:
    """diag(ω_{0 u_i}) for the chosen indices."""
    subset = _check_subset(spec, subset)
    return rational_matrix(
        [[omega_product(spec, 0, u).constant_value() if i == j else 0 for j in range(len(subset))]
         for i, u in enumerate(subset)]
    )


def is_t_antisymmetric(spec: OmegaSpec, matrix: sympy.Matrix, subset: Sequence[int]) -> bool:
    """T·I_κ + I_κ·ᵗT = 0 for the sub-metric of ``subset``."""
    metric = sub_metric(spec, subset)
    return (matrix * metric + metric * matrix.T).is_zero_matrix


def minor_determinant(spec: OmegaSpec, alpha: AlphaAssignment, subset: Sequence[int]) -> Fraction:
    return determinant(t_matrix(spec, alpha, subset))


def w_prefactor(spec: OmegaSpec, ix: WIndexSet) -> Fraction:
    """ω_{a_1 b_s} ω_{a_2 b_{s-1}} ··· ω_{a_s b_1} at a Fixed spec."""
    value = Fraction(1)
    for i in range(ix.s):
        value *= omega_product(spec, ix.a_block[i], ix.b_block[ix.s - 1 - i]).constant_value()
    return value


def w_squared_identity_check(spec: OmegaSpec, alpha: AlphaAssignment, ix) -> bool:
    """
    ω-prefactor × det(T over ix) equals the square of W(ix) evaluated at α.

    The W-symbol is evaluated with commuting α's, which is exact because
    every monomial of a W-symbol consists of commuting generators.

    Raises:
        DegenerateFormError: If some ω is zero
    """
    _require_nonzero(spec)
    ix = ix if isinstance(ix, WIndexSet) else WIndexSet(tuple(ix))
    symbolic = OmegaSpec.symbolic(spec.n)
    omega = {a: v for a, v in enumerate(spec.values(), start=1)}
    w_value = evaluate_commutative(symbolic, w_symbol(symbolic, ix).element, alpha.as_mapping(), omega)
    lhs = w_prefactor(spec, ix) * minor_determinant(spec, alpha, ix.indices)
    if lhs != w_value ** 2:
        logger.error("W² identity fails for %s at %s: %s != %s", ix, spec, lhs, w_value ** 2)
        return False
    return True


def _commutative_element(n: int, terms: Mapping[Tuple[int, ...], OmegaPoly]) -> EnvelopingElement:
    # sorted words stand for commutative monomials
    merged: Dict[Tuple[int, ...], OmegaPoly] = {}
    for word, coeff in terms.items():
        key = tuple(sorted(word))
        merged[key] = merged[key] + coeff if key in merged else coeff
    return EnvelopingElement(n, merged)


def trace_form(spec: OmegaSpec, s: int) -> EnvelopingElement:
    """
    Σ Ω_{i1 i2} Ω_{i2 i3} ··· Ω_{i_2s i1} over all closed index chains,
    using Ω_ba = -Ω_ab/ω_ab and Ω_aa = 0, then symmetrized.

    Raises:
        DegenerateFormError: If some ω is zero
    """
    _require_nonzero(spec)
    n = spec.n
    if s < 1:
        raise AlgebraError("Trace order must be positive", repr(s))
    k = 2 * s

    # Ω_xy as (generator id, factor) for x != y
    entry: Dict[Tuple[int, int], Tuple[int, Fraction]] = {}
    for g in all_generators(n):
        i = generator_index(g, n)
        entry[(g.a, g.b)] = (i, Fraction(1))
        entry[(g.b, g.a)] = (i, -1 / omega_product(spec, g.a, g.b).constant_value())

    terms: Dict[Tuple[int, ...], Fraction] = {}
    for chain in product(range(n + 1), repeat=k):
        coeff = Fraction(1)
        word = []
        for j in range(k):
            pair = (chain[j], chain[(j + 1) % k])
            if pair not in entry:
                break
            gid, factor = entry[pair]
            coeff *= factor
            word.append(gid)
        else:
            key = tuple(sorted(word))
            terms[key] = terms.get(key, Fraction(0)) + coeff

    polys = {w: OmegaPoly.constant(n, c) for w, c in terms.items() if c}
    return symmetrize_element(spec, _commutative_element(n, polys))


def epsilon_form(spec: OmegaSpec) -> EnvelopingElement:
    """
    Σ ε_{i_0..i_N} L_{i_0 i_1} L_{i_2 i_3} ··· with L_xy = ω_{0x} Ω_xy, symmetrized.

    L is antisymmetric, so no division by ω is needed and any spec is
    accepted.

    Raises:
        AlgebraError: If N is even
    """
    n = spec.n
    if n % 2 == 0:
        raise AlgebraError("The epsilon form needs odd N", f"N={n}")

    terms: Dict[Tuple[int, ...], OmegaPoly] = {}
    for perm in permutations(range(n + 1)):
        coeff = OmegaPoly.constant(n, -1 if transposition_count(perm) % 2 else 1)
        word = []
        for j in range(0, n + 1, 2):
            x, y = perm[j], perm[j + 1]
            lo, hi = min(x, y), max(x, y)
            coeff = coeff * omega_pair(spec, 0, lo)
            if x > y:
                coeff = -coeff
            word.append(generator_index(Generator(lo, hi), n))
        if not coeff:
            continue
        key = tuple(sorted(word))
        total = terms[key] + coeff if key in terms else coeff
        if total:
            terms[key] = total
        else:
            terms.pop(key, None)
    return symmetrize_element(spec, EnvelopingElement(n, terms))


def gelfand_classical_casimirs(spec: OmegaSpec) -> List[EnvelopingElement]:
    """
    Trace forms of orders 2..2·floor(N/2) and, for odd N, the epsilon form.

    Raises:
        DegenerateFormError: If some ω is zero
    """
    _require_nonzero(spec)
    invariants = [trace_form(spec, s) for s in range(1, spec.n // 2 + 1)]
    if spec.n % 2:
        invariants.append(epsilon_form(spec))
    return invariants


def scale_factor(u: EnvelopingElement, v: EnvelopingElement) -> Optional[Fraction]:
    """
    The rational c with u = c·v, or None when u and v are not proportional.

    Coefficients must be constant, i.e. both elements built at a Fixed spec.
    """
    if u.is_zero or v.is_zero:
        return None
    if set(w for w, _ in u.terms()) != set(w for w, _ in v.terms()):
        return None
    ratio = None
    for word, coeff in v.terms():
        other = u.coefficient(word)
        if not (coeff.is_constant and other.is_constant):
            raise AlgebraError("Scale factors need constant coefficients")
        current = other.constant_value() / coeff.constant_value()
        if ratio is None:
            ratio = current
        elif current != ratio:
            return None
    return ratio


def mg_matrix(table: Mapping[Tuple[int, int], Tuple[Fraction, int]], alpha: Sequence[Fraction], size: int) -> sympy.Matrix:
    """
    M_g with entries Σ_k C_{ij}^k α_k for an evaluated bracket table.

    Args:
        table: ``{(i, j): (coefficient, k)}`` with rational coefficients
        alpha: Value per generator id
        size: Dimension of the algebra
    """
    rows = [[Fraction(0)] * size for _ in range(size)]
    for (i, j), (coeff, k) in table.items():
        rows[i][j] += coeff * alpha[k]
    return rational_matrix(rows)


def evaluated_table(spec: OmegaSpec, omega: Mapping[int, Rational]) -> Dict[Tuple[int, int], Tuple[Fraction, int]]:
    """The bracket table with every coefficient evaluated to a rational."""
    table = {}
    for key, (coeff, k) in bracket_table(spec).items():
        value = coeff.evaluate(omega)
        if value:
            table[key] = (value, k)
    return table


def mg_rank(spec: OmegaSpec, rng: Optional[random.Random] = None, trials: int = 3, magnitude: int = 10 ** 4) -> RankResult:
    """
    Randomized rank of M_g: the maximum rank over ``trials`` evaluations at
    random rational α (and random nonzero values for symbolic ω).
    """
    rng = rng or random.Random()
    n = spec.n
    size = dimension(n)
    observed = []
    for _ in range(trials):
        omega = random_omega_values(spec, rng, magnitude)
        alpha = [random_rational(rng, magnitude) for _ in range(size)]
        observed.append(rank(mg_matrix(evaluated_table(spec, omega), alpha, size)))
    result = RankResult(n, max(observed), observed)
    if not result.stable:
        logger.warning("Rank trials disagree for %s: %s", spec, observed)
    logger.debug("rank M_g for %s = %d", spec, result.rank)
    return result


def tau_bound(spec: OmegaSpec, rng: Optional[random.Random] = None, trials: int = 3, magnitude: int = 10 ** 4) -> int:
    """dim g - rank M_g, the bound on algebraically independent invariants."""
    return mg_rank(spec, rng, trials, magnitude).tau


def witness_generators(n: int) -> List[Generator]:
    """The generators Ω_{k, N-k}, k = 0..l-1, whose rows and columns are deleted."""
    return [Generator(k, n - k) for k in range(casimir_count(n))]


def witness_minor(spec: OmegaSpec, rng: Optional[random.Random] = None, magnitude: int = 10 ** 4) -> CheckReport:
    """
    Constructive check that M_g has full expected rank.

    Deleting the rows and columns of Ω_{k,N-k} leaves a minor which, with
    only the ω-free brackets kept and only α_{k,N-k} nonzero, has exactly
    one entry per row; its determinant must be ±Π α_{k,N-k}^{2(N-1-2k)}.
    The same minor of the actual spec at generic α must not vanish.
    """
    rng = rng or random.Random()
    n = spec.n
    size = dimension(n)
    report = CheckReport()

    deleted = {generator_index(g, n) for g in witness_generators(n)}
    keep = [i for i in range(size) if i not in deleted]

    # the ω-free brackets are exactly those of the flag algebra
    flag = OmegaSpec.fixed([0] * n)
    alpha = [Fraction(0)] * size
    expected = Fraction(1)
    for k, g in enumerate(witness_generators(n)):
        value = random_rational(rng, magnitude)
        alpha[generator_index(g, n)] = value
        expected *= value ** (2 * (n - 1 - 2 * k))
    flag_minor = mg_matrix(evaluated_table(flag, {}), alpha, size).extract(keep, keep)
    one_per_row = all(
        sum(1 for x in flag_minor.row(r) if x != 0) == 1 for r in range(flag_minor.rows)
    )
    flag_det = determinant(flag_minor)
    report.add_check("witness minor has one entry per row", one_per_row)
    report.add_check(
        "witness minor is the expected monomial",
        flag_det in (expected, -expected),
        witness={'determinant': str(flag_det), 'expected': str(expected)},
    )

    omega = random_omega_values(spec, rng, magnitude)
    generic = [random_rational(rng, magnitude) for _ in range(size)]
    actual = determinant(mg_matrix(evaluated_table(spec, omega), generic, size).extract(keep, keep))
    report.add_check(
        "witness minor is nonzero at generic alpha",
        actual != 0,
        witness={'spec': str(spec)},
    )
    return report


def odd_minors_vanish(spec: OmegaSpec, alpha: AlphaAssignment) -> Optional[Tuple[int, ...]]:
    """
    Every odd-size diagonal minor of T is zero.

    Returns:
        The first subset with a nonzero odd minor, or None
    """
    for size in range(1, spec.n + 2, 2):
        for subset in combinations(range(spec.n + 1), size):
            if minor_determinant(spec, alpha, subset) != 0:
                return subset
    return None


def run_oracle_suite(
    spec: OmegaSpec,
    rng: Optional[random.Random] = None,
    identity_trials: int = 20,
    rank_trials: int = 3,
    magnitude: int = 10 ** 4,
    workers: int = 1,
) -> CheckReport:
    """
    The full set of cross-checks for one spec.

    The rank checks run for every spec.  The T-matrix checks and the
    classical invariants need every ω nonzero; for specs with symbolic
    entries they run at random nonzero values, and they are skipped for
    specs with a fixed zero.
    """
    rng = rng or random.Random()
    report = CheckReport()
    n = spec.n

    result = mg_rank(spec, rng, rank_trials, magnitude)
    report.add_check(
        "rank of M_g", result.rank == result.expected_rank,
        witness=result.to_dict(), rank=result.rank, tau=result.tau,
    )
    report.add_check("tau equals the number of Casimirs", result.tau == casimir_count(n), tau=result.tau)
    for check in witness_minor(spec, rng, magnitude).checks:
        report.add_check(check["name"], check["passed"])

    if any(v == 0 for v in spec.values()):
        logger.info("Skipping T-matrix checks for %s: some omega is zero", spec)
        return report

    for trial in range(identity_trials):
        values = [v if v is not None else random_rational(rng, magnitude) for v in spec.values()]
        fixed = OmegaSpec.fixed(values)
        alpha = AlphaAssignment.random(n, rng, magnitude)
        failures = [
            ix.label for s in range(1, casimir_count(n) + 1)
            for ix in all_index_sets(n, s)
            if not w_squared_identity_check(fixed, alpha, ix)
        ]
        report.add_check(
            f"W² identity, trial {trial + 1}", not failures,
            witness={'spec': str(fixed), 'index_sets': failures} if failures else None,
        )
        odd = odd_minors_vanish(fixed, alpha)
        report.add_check(
            f"odd minors vanish, trial {trial + 1}", odd is None,
            witness={'spec': str(fixed), 'subset': list(odd)} if odd else None,
        )

    if spec.is_fixed:
        for index, element in enumerate(gelfand_classical_casimirs(spec), start=1):
            central = is_central(spec, element, workers=workers)
            report.add_check(f"classical invariant {index} is central", central.central)
    return report
