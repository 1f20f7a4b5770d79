"""
Named Cayley-Klein algebras.

Each name maps to an ω pattern for a given N.  The 3+1 kinematical algebras
(N = 4, ω3 = ω4 = +1) also carry the physical generator names H, P_i, K_i,
J_i, with κ = ω1 and -1/c² = ω2.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from ckcas.core.algebra import Generator, classify
from ckcas.core.data_models import GeneratorAlias
from ckcas.core.exceptions import OmegaError, RegistryError
from ckcas.core.logging_config import get_logger
from ckcas.core.omega import OmegaSpec, Rational, to_fraction


logger = get_logger(__name__)

KINEMATICAL_N = 4

KINEMATICAL_ALIASES: Tuple[GeneratorAlias, ...] = (
    GeneratorAlias(Generator(0, 2), "P1"),
    GeneratorAlias(Generator(0, 3), "P2"),
    GeneratorAlias(Generator(0, 4), "P3"),
    GeneratorAlias(Generator(0, 1), "H"),
    GeneratorAlias(Generator(1, 2), "K1"),
    GeneratorAlias(Generator(1, 3), "K2"),
    GeneratorAlias(Generator(1, 4), "K3"),
    GeneratorAlias(Generator(3, 4), "J1"),
    GeneratorAlias(Generator(2, 4), "J2", sign=-1),
    GeneratorAlias(Generator(2, 3), "J3"),
)

KAPPA_TOKENS = ('k', 'kappa', 'κ')
SPEED_TOKENS = ('-1/c2', '-1/c^2', '−1/c²')


@dataclass(frozen=True)
class AlgebraEntry:
    """
    A resolved registry entry.

    Attributes:
        name: Registry name, e.g. ``poincare`` or ``so(3,2)``
        n: Dimension parameter N of so(N+1)
        spec: The canonical ω pattern
        aliases: Generator display names (kinematical entries only)
        description: One-line description
        alternates: Further ω patterns realizing the same algebra
        kinematical: κ, c notation applies
    """

    name: str
    n: int
    spec: OmegaSpec
    aliases: Tuple[GeneratorAlias, ...] = ()
    description: str = ""
    alternates: Tuple[OmegaSpec, ...] = ()
    kinematical: bool = False

    @property
    def label(self) -> str:
        return classify(self.spec)

    def to_dict(self) -> Dict:
        return {
            'name': self.name,
            'n': self.n,
            'omega': str(self.spec),
            'label': self.label,
            'description': self.description,
            'alternates': [str(s) for s in self.alternates],
        }


@dataclass(frozen=True)
class _Family:
    description: str
    build: Callable[[int], Sequence[Rational]]
    min_n: int = 1
    fixed_n: Optional[int] = None
    alternates: Callable[[int], List[Sequence[Rational]]] = field(default=lambda n: [])


def _ones(count: int) -> List[int]:
    return [1] * max(count, 0)


def _poincare_alternates(n: int) -> List[Sequence[Rational]]:
    patterns = [[0] + _ones(n - 2) + [-1]]
    if n >= 3:
        patterns.append([0, -1, -1] + _ones(n - 3))
        patterns.append([0] + _ones(n - 3) + [-1, -1])
    if n >= 5:
        patterns.append([0, 1, -1, -1] + _ones(n - 4))
    unique = []
    canonical = [0, -1] + _ones(n - 2)
    for p in patterns:
        if p != canonical and p not in unique:
            unique.append(p)
    return unique


FAMILIES: Dict[str, _Family] = {
    'flag': _Family("maximally contracted algebra so_{0,...,0}(N+1)", lambda n: [0] * n),
    'euclidean': _Family("Euclidean algebra iso(N)", lambda n: [0] + _ones(n - 1)),
    'poincare': _Family(
        "Poincaré algebra iso(N-1,1)", lambda n: [0, -1] + _ones(n - 2), min_n=2,
        alternates=_poincare_alternates,
    ),
    'galilei': _Family("Galilei algebra iiso(N-1)", lambda n: [0, 0] + _ones(n - 2), min_n=2),
    'carroll': _Family("Carroll algebra ii'so(N-1)", lambda n: [0] + _ones(n - 2) + [0], min_n=3),
    'desitter': _Family("de Sitter algebra so(4,1)", lambda n: [-1, -1, 1, 1], fixed_n=KINEMATICAL_N),
    'anti-desitter': _Family("anti-de Sitter algebra so(3,2)", lambda n: [1, -1, 1, 1], fixed_n=KINEMATICAL_N),
    'newton-hooke-osc': _Family(
        "oscillating Newton-Hooke algebra t_6(so(3)+so(2))", lambda n: [1, 0, 1, 1], fixed_n=KINEMATICAL_N,
    ),
    'newton-hooke-exp': _Family(
        "expanding Newton-Hooke algebra t_6(so(3)+so(1,1))", lambda n: [-1, 0, 1, 1], fixed_n=KINEMATICAL_N,
    ),
    'kinematical': _Family(
        "kinematical family so_{κ,-1/c²,+,+}(5)", lambda n: [None, None, 1, 1], fixed_n=KINEMATICAL_N,
    ),
}

# Names whose N = 4 instance is a 3+1 kinematical algebra
KINEMATICAL_NAMES = (
    'poincare', 'galilei', 'desitter', 'anti-desitter', 'newton-hooke-osc', 'newton-hooke-exp', 'kinematical',
)

# Rows of the kinematical table: (name, title, κ, c) with c = None for c = ∞
TABLE_ONE: Tuple[Tuple[str, str, int, Optional[int]], ...] = (
    ('newton-hooke-osc', "Oscillating Newton-Hooke", 1, None),
    ('galilei', "Galilei", 0, None),
    ('newton-hooke-exp', "Expanding Newton-Hooke", -1, None),
    ('anti-desitter', "Anti-de Sitter", 1, 1),
    ('poincare', "Poincaré", 0, 1),
    ('desitter', "de Sitter", -1, 1),
)

_PSEUDO = re.compile(r"^(i?)so\((\d+)(?:,(\d+))?\)$")


def _pseudo_orthogonal(name: str, n: Optional[int]) -> AlgebraEntry:
    """so(p,q) with p+q = N+1, or iso(p,q) with p+q = N."""
    match = _PSEUDO.match(name)
    inhomogeneous = bool(match.group(1))
    p, q = int(match.group(2)), int(match.group(3) or 0)
    if p < 1:
        raise RegistryError("Signature needs p >= 1", name)
    size = p + q + (0 if inhomogeneous else -1)
    if n is not None and n != size:
        raise RegistryError("n incompatible with name", f"{name} needs n={size}, got {n}")
    if size < 1:
        raise RegistryError("Signature too small", name)

    # metric diag(1, ω_01, ω_02, ...) has p plus signs first, then q minus signs
    tail = [-1 if i == p else 1 for i in range(1, p + q)]
    values = ([0] + tail) if inhomogeneous else tail
    description = ("inhomogeneous " if inhomogeneous else "") + f"pseudo-orthogonal algebra {name}"
    return AlgebraEntry(name, size, OmegaSpec.fixed(values), description=description)


def list_names() -> List[str]:
    """Registry names; ``so(p,q)`` and ``iso(p,q)`` stand for the parametric families."""
    return sorted(FAMILIES) + ['so(p,q)', 'iso(p,q)']


def lookup(name: str, n: Optional[int] = None) -> AlgebraEntry:
    """
    Resolve a name to a full AlgebraEntry.

    Args:
        name: Registry name (case-insensitive)
        n: Dimension parameter; defaults to 4 where the name allows it

    Raises:
        RegistryError: On an unknown name or an incompatible n
    """
    key = (name or "").strip().lower().replace(" ", "")
    if _PSEUDO.match(key):
        return _pseudo_orthogonal(key, n)

    family = FAMILIES.get(key)
    if family is None:
        raise RegistryError("Unknown algebra", f"{name!r} (known: {', '.join(list_names())})")
    if n is None:
        n = family.fixed_n or KINEMATICAL_N
    if not isinstance(n, int) or n < family.min_n:
        raise RegistryError("n incompatible with name", f"{key} needs n >= {family.min_n}, got {n}")
    if family.fixed_n is not None and n != family.fixed_n:
        raise RegistryError("n incompatible with name", f"{key} needs n={family.fixed_n}, got {n}")

    spec = OmegaSpec.from_values(family.build(n))
    kinematical = key in KINEMATICAL_NAMES and n == KINEMATICAL_N
    entry = AlgebraEntry(
        name=key,
        n=n,
        spec=spec,
        aliases=KINEMATICAL_ALIASES if kinematical else (),
        description=family.description,
        alternates=tuple(OmegaSpec.fixed(p) for p in family.alternates(n)),
        kinematical=kinematical,
    )
    logger.debug("Resolved %s at n=%d to %s", key, n, spec)
    return entry


def resolve(name: str, n: Optional[int] = None) -> Tuple[OmegaSpec, Tuple[GeneratorAlias, ...]]:
    """
    The ω pattern and alias table of a named algebra.

    Raises:
        RegistryError: On an unknown name or an incompatible n
    """
    entry = lookup(name, n)
    return entry.spec, entry.aliases


def catalog(n: int = KINEMATICAL_N) -> List[AlgebraEntry]:
    """Every fixed-name entry that exists at this n."""
    entries = []
    for name in sorted(FAMILIES):
        try:
            entries.append(lookup(name, n))
        except RegistryError:
            continue
    return entries


def parse_omega_argument(text: str, n: Optional[int] = None) -> Tuple[OmegaSpec, bool]:
    """
    Parse the ``--omega`` argument.

    Besides ``symbolic`` and exact rationals, ``k`` may stand for ω1 and
    ``-1/c2`` for ω2; both leave that coefficient symbolic.

    Returns:
        (spec, kinematical) where kinematical is True if either token was used

    Raises:
        OmegaError: On malformed input
    """
    tokens = [t.strip() for t in (text or "").split(",")]
    kinematical = False
    rewritten = []
    for position, token in enumerate(tokens, start=1):
        lowered = token.lower()
        if lowered in KAPPA_TOKENS or lowered in SPEED_TOKENS:
            expected = 1 if lowered in KAPPA_TOKENS else 2
            if position != expected:
                raise OmegaError("Kinematical token in the wrong position", f"{token!r} at position {position}")
            kinematical = True
            rewritten.append("symbolic")
        else:
            rewritten.append(token)
    return OmegaSpec.parse(",".join(rewritten), n), kinematical


def kinematical_assignment(settings: Mapping[str, str], n: int) -> Dict[int, Fraction]:
    """
    Turn ``--set`` pairs into an ω assignment.

    ``k=VALUE`` sets ω1, ``c=inf`` sets ω2 = 0, ``c=VALUE`` sets
    ω2 = -1/VALUE², and ``w<a>=VALUE`` sets ω_a.

    Raises:
        OmegaError: On an unknown variable or a malformed value
    """
    assignment: Dict[int, Fraction] = {}
    for variable, raw in settings.items():
        variable = variable.strip().lower()
        raw = raw.strip()
        if variable in KAPPA_TOKENS:
            index, value = 1, to_fraction(raw)
        elif variable == 'c':
            index = 2
            if raw.lower() in ('inf', 'infinity', '∞'):
                value = Fraction(0)
            else:
                speed = to_fraction(raw)
                if speed <= 0:
                    raise OmegaError("The speed c must be positive", raw)
                value = -1 / (speed * speed)
        elif re.fullmatch(r"(w|omega|ω)\d+", variable):
            index, value = int(re.sub(r"\D", "", variable)), to_fraction(raw)
        else:
            raise OmegaError("Unknown variable in --set", variable)
        if not 1 <= index <= n:
            raise OmegaError("Assignment to a non-existent variable", f"ω{index} with N={n}")
        assignment[index] = value
    return assignment


def table_one_specs() -> List[Tuple[str, str, OmegaSpec, int, Optional[int]]]:
    """(name, title, spec, κ, c) for the six kinematical algebras of the table."""
    rows = []
    for name, title, kappa, speed in TABLE_ONE:
        rows.append((name, title, lookup(name, KINEMATICAL_N).spec, kappa, speed))
    return rows
