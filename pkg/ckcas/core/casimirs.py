"""
The complete set of Casimir invariants of so_{ω1..ωN}(N+1).

For 1 <= s <= floor(N/2),

    C_s = Σ ω_{0 a_1} ω_{1 a_2} ··· ω_{s-1, a_s} · ω_{b_1, N-s+1} ··· ω_{b_s, N} · W_{a_1..b_s}²

summed over all index sets a_1<..<a_s<b_1<..<b_s, and for odd N the extra
Casimir C = W_{01..N}.  Two-index ω's are read symmetrically with
ω_aa = 1.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from .algebra import all_generators, generator_index, killing_form, omega_pair, omega_product
from .data_models import CentralityReport
from .enveloping import EnvelopingElement, is_central, multiply, scale, substitute
from .exceptions import AlgebraError, DegenerateFormError, OmegaError
from .logging_config import get_logger
from .omega import OmegaPoly, OmegaSpec, Rational
from .wsymbols import WIndexSet, all_index_sets, omega_weight, w_symbol


logger = get_logger(__name__)


@dataclass
class CasimirSet:
    """
    The floor((N+1)/2) invariants for one spec.

    Attributes:
        spec: The algebra
        even_order: C_1..C_{floor(N/2)}, of degrees 2, 4, ...
        extra: W_{01..N} for odd N, otherwise None
    """

    spec: OmegaSpec
    even_order: List[EnvelopingElement] = field(default_factory=list)
    extra: Optional[EnvelopingElement] = None

    def members(self) -> List[Tuple[str, EnvelopingElement]]:
        """Labelled invariants: ``C1``, ``C2``, ... then ``C``."""
        labelled = [(f"C{s}", c) for s, c in enumerate(self.even_order, start=1)]
        if self.extra is not None:
            labelled.append(("C", self.extra))
        return labelled

    def __len__(self) -> int:
        return len(self.even_order) + (1 if self.extra is not None else 0)


def casimir_count(n: int) -> int:
    """l = floor((N+1)/2)."""
    return (n + 1) // 2


def casimir_prefactor(spec: OmegaSpec, ix: WIndexSet) -> OmegaPoly:
    """Π_k ω_{k-1, a_k} · ω_{b_k, N-s+k} for the index set of one W² term."""
    n = spec.n
    s = ix.s
    result = OmegaPoly.one(n)
    for k in range(1, s + 1):
        result = result * omega_pair(spec, k - 1, ix.a_block[k - 1])
        result = result * omega_pair(spec, ix.b_block[k - 1], n - s + k)
    return result


def _check_s(spec: OmegaSpec, s: int) -> None:
    if not isinstance(s, int) or not 1 <= s <= spec.n // 2:
        raise AlgebraError("Casimir order out of range", f"s={s} with N={spec.n}")


def casimir_terms(spec: OmegaSpec, s: int) -> List[Tuple[OmegaPoly, WIndexSet]]:
    """
    C_s as (prefactor, index set) pairs; terms whose prefactor vanishes
    under the spec are dropped.
    """
    _check_s(spec, s)
    terms = []
    for ix in all_index_sets(spec.n, s):
        prefactor = casimir_prefactor(spec, ix)
        if prefactor:
            terms.append((prefactor, ix))
    return terms


def casimir_s(spec: OmegaSpec, s: int) -> EnvelopingElement:
    """
    The even-order Casimir C_s as an element of U(g).

    Raises:
        AlgebraError: If s is not in 1..floor(N/2)
    """
    total = EnvelopingElement.zero(spec.n)
    for prefactor, ix in casimir_terms(spec, s):
        w = w_symbol(spec, ix).element
        total = total + scale(multiply(spec, w, w), prefactor)
    logger.debug("C%d over %s has %d terms", s, spec, len(total))
    return total


def casimir_extra(spec: OmegaSpec) -> EnvelopingElement:
    """
    The extra Casimir W_{01..N} of odd N.

    Raises:
        AlgebraError: If N is even
    """
    if spec.n % 2 == 0:
        raise AlgebraError("The extra Casimir exists only for odd N", f"N={spec.n}")
    return w_symbol(spec, WIndexSet(tuple(range(spec.n + 1)))).element


def casimir_set(spec: OmegaSpec) -> CasimirSet:
    """All floor((N+1)/2) Casimirs of the spec."""
    even = [casimir_s(spec, s) for s in range(1, spec.n // 2 + 1)]
    extra = casimir_extra(spec) if spec.n % 2 else None
    return CasimirSet(spec, even, extra)


def verify_centrality(spec: OmegaSpec, workers: int = 1) -> CentralityReport:
    """
    Check every member of the Casimir set against every generator.

    Run on a fully symbolic spec, a pass covers every contraction of the
    family at once.
    """
    report = CentralityReport(spec)
    for label, element in casimir_set(spec).members():
        result = is_central(spec, element, workers=workers)
        report.add_result(label, result)
        if result.central:
            logger.info("%s over %s: central", label, spec)
        else:
            logger.error("%s over %s: [%s, %s] != 0", label, spec, result.generator, label)
    return report


def flag_survivor(spec: OmegaSpec, s: int) -> WIndexSet:
    """{0, .., s-1, N-s+1, .., N}: the only W² left in C_s when every ω is 0."""
    _check_s(spec, s)
    n = spec.n
    return WIndexSet(tuple(range(s)) + tuple(range(n - s + 1, n + 1)))


def flag_limit(n: int, s: int) -> EnvelopingElement:
    """C_s of the fully symbolic algebra with every ω set to 0."""
    symbolic = OmegaSpec.symbolic(n)
    return substitute(symbolic, casimir_s(symbolic, s), {a: 0 for a in range(1, n + 1)})


def flag_limit_check(n: int, s: int) -> bool:
    """The flag limit of C_s equals W² of the survivor with coefficient 1."""
    symbolic = OmegaSpec.symbolic(n)
    zero = {a: 0 for a in range(1, n + 1)}
    w = w_symbol(symbolic, flag_survivor(symbolic, s)).element
    expected = substitute(symbolic, multiply(symbolic, w, w), zero)
    return flag_limit(n, s) == expected


def killing_duality_check(spec: OmegaSpec) -> bool:
    """
    C_1 = -2(N-1)·ω_0N·Σ β^{ab,ab} Ω_ab², using the inverse of the diagonal
    Killing form.

    Raises:
        OmegaError: If the spec has symbolic entries
        DegenerateFormError: If some ω is zero
    """
    if not spec.is_fixed:
        raise OmegaError("Killing duality needs every omega fixed", str(spec))
    if not spec.all_nonzero:
        raise DegenerateFormError("Killing form is degenerate", str(spec))
    n = spec.n
    if n < 2:
        raise AlgebraError("No quadratic Casimir for N=1")

    scale_factor = -2 * (n - 1) * omega_product(spec, 0, n).constant_value()
    dual: Dict[Tuple[int, ...], OmegaPoly] = {}
    for g in all_generators(n):
        beta = killing_form(spec, g, g).constant_value()
        i = generator_index(g, n)
        dual[(i, i)] = OmegaPoly.constant(n, scale_factor / beta)
    return casimir_s(spec, 1) == EnvelopingElement(n, dual)


def homogeneity_prefactor(n: int, ix: WIndexSet) -> OmegaPoly:
    """
    Prefactor of W(ix)² forced by dimensional homogeneity, normalised by the
    flag survivor carrying coefficient 1.  Built over symbolic ω.

    Raises:
        AlgebraError: If the required exponents are negative
    """
    symbolic = OmegaSpec.symbolic(n)
    survivor = flag_survivor(symbolic, ix.s)
    exps = tuple(t - w for t, w in zip(omega_weight(symbolic, survivor), omega_weight(symbolic, ix)))
    if any(e < 0 for e in exps):
        raise AlgebraError("Homogeneity needs a negative exponent", f"{ix}: {exps}")
    return OmegaPoly.monomial(n, exps)


def substitution_commutes(spec: OmegaSpec, s: int, assignment: Mapping[int, Rational]) -> bool:
    """Substituting into C_s equals building C_s on the substituted spec."""
    substituted = substitute(spec, casimir_s(spec, s), assignment)
    return substituted == casimir_s(spec.substitute(assignment), s)
