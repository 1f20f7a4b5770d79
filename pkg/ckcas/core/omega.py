"""
Contraction coefficients and exact polynomials in them.

An ``OmegaSpec`` fixes, for each of the N coefficients ω_1..ω_N, either an
exact rational value or leaves it as a free variable.  ``OmegaPoly`` is a
sparse polynomial in ω_1..ω_N with ``Fraction`` coefficients; exponent
vectors always have length N so that they line up with the spec, and a
Fixed entry simply never carries an exponent.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from .exceptions import OmegaError


Rational = Union[int, Fraction]
Exponents = Tuple[int, ...]


def to_fraction(value) -> Fraction:
    """
    Convert an int, Fraction or rational string ("p/q", "-1") to a Fraction.

    Raises:
        OmegaError: If the value is not an exact rational
    """
    if isinstance(value, bool):
        raise OmegaError("Not an exact rational", repr(value))
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise OmegaError("Not an exact rational", repr(value))
    raise OmegaError("Not an exact rational", repr(value))


def format_fraction(value: Fraction) -> str:
    """Format a Fraction as the ``p/q`` string used in JSON output."""
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class OmegaEntry:
    """One coefficient ω_a: symbolic when ``value`` is None, otherwise Fixed."""

    value: Optional[Fraction] = None

    def __post_init__(self):
        if self.value is not None:
            object.__setattr__(self, 'value', to_fraction(self.value))

    @classmethod
    def symbolic(cls) -> 'OmegaEntry':
        return cls(None)

    @classmethod
    def fixed(cls, value: Rational) -> 'OmegaEntry':
        return cls(to_fraction(value))

    @property
    def is_symbolic(self) -> bool:
        return self.value is None

    def to_dict(self) -> Dict:
        if self.value is None:
            return {"symbolic": True}
        return {"fixed": format_fraction(self.value)}

    @classmethod
    def from_dict(cls, data: Mapping) -> 'OmegaEntry':
        if not isinstance(data, Mapping):
            raise OmegaError("Malformed omega entry", repr(data))
        if data.get("symbolic"):
            return cls.symbolic()
        if "fixed" in data:
            return cls.fixed(data["fixed"])
        raise OmegaError("Malformed omega entry", repr(data))


@dataclass(frozen=True)
class OmegaSpec:
    """
    The N contraction coefficients of so_{ω1..ωN}(N+1).

    Attributes:
        entries: One OmegaEntry per coefficient, ω_1 first
    """

    entries: Tuple[OmegaEntry, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise OmegaError("An omega spec needs at least one coefficient")
        for entry in entries:
            if not isinstance(entry, OmegaEntry):
                raise OmegaError("Malformed omega entry", repr(entry))
        object.__setattr__(self, 'entries', entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def symbolic(cls, n: int) -> 'OmegaSpec':
        """All N coefficients free."""
        if not isinstance(n, int) or n < 1:
            raise OmegaError("n must be a positive integer", repr(n))
        return cls(tuple(OmegaEntry.symbolic() for _ in range(n)))

    @classmethod
    def fixed(cls, values: Iterable[Rational]) -> 'OmegaSpec':
        """All coefficients fixed to the given exact values."""
        return cls(tuple(OmegaEntry.fixed(v) for v in values))

    @classmethod
    def from_values(cls, values: Iterable[Optional[Rational]]) -> 'OmegaSpec':
        """Mixed spec: ``None`` marks a symbolic coefficient."""
        return cls(tuple(OmegaEntry(v if v is None else to_fraction(v)) for v in values))

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> 'OmegaSpec':
        """
        Parse ``symbolic`` or a comma separated list such as ``0,-1,1,1``.

        Within a list, ``w``, ``s`` or ``*`` leaves that coefficient symbolic.

        Args:
            text: The omega description
            n: Expected size; required for ``symbolic``

        Raises:
            OmegaError: On malformed input or a size mismatch
        """
        text = (text or "").strip()
        if text.lower() == "symbolic":
            if n is None:
                raise OmegaError("A symbolic spec needs n")
            return cls.symbolic(n)

        values = []
        for token in text.split(","):
            token = token.strip()
            if not token:
                raise OmegaError("Empty omega entry", repr(text))
            if token.lower() in ("w", "s", "*", "symbolic"):
                values.append(None)
            else:
                values.append(to_fraction(token))

        spec = cls.from_values(values)
        if n is not None and spec.n != n:
            raise OmegaError("Omega list length does not match n", f"{spec.n} != {n}")
        return spec

    def value(self, a: int) -> Optional[Fraction]:
        """Fixed value of ω_a (1-based), or None when symbolic."""
        if not 1 <= a <= self.n:
            raise OmegaError("Omega index out of range", f"{a} not in 1..{self.n}")
        return self.entries[a - 1].value

    def values(self) -> Tuple[Optional[Fraction], ...]:
        return tuple(e.value for e in self.entries)

    @property
    def symbolic_indices(self) -> Tuple[int, ...]:
        return tuple(a for a, e in enumerate(self.entries, start=1) if e.is_symbolic)

    @property
    def is_fixed(self) -> bool:
        return not self.symbolic_indices

    @property
    def is_fully_symbolic(self) -> bool:
        return len(self.symbolic_indices) == self.n

    @property
    def all_nonzero(self) -> bool:
        """True when every coefficient is Fixed and nonzero."""
        return self.is_fixed and all(v != 0 for v in self.values())

    def substitute(self, assignment: Mapping[int, Rational]) -> 'OmegaSpec':
        """
        Fix some symbolic coefficients.

        Args:
            assignment: Map from 1-based index a to the value of ω_a

        Raises:
            OmegaError: If an index is out of range or not symbolic
        """
        new = list(self.values())
        for a, v in assignment.items():
            if not isinstance(a, int) or not 1 <= a <= self.n:
                raise OmegaError("Assignment to a non-existent variable", f"ω{a}")
            if new[a - 1] is not None:
                raise OmegaError("Assignment to a fixed coefficient", f"ω{a}")
            new[a - 1] = to_fraction(v)
        return OmegaSpec.from_values(new)

    def reversed(self) -> 'OmegaSpec':
        return OmegaSpec(tuple(reversed(self.entries)))

    def to_list(self) -> list:
        return [e.to_dict() for e in self.entries]

    @classmethod
    def from_list(cls, data: Iterable[Mapping]) -> 'OmegaSpec':
        return cls(tuple(OmegaEntry.from_dict(d) for d in data))

    def __str__(self) -> str:
        parts = []
        for a, v in enumerate(self.values(), start=1):
            parts.append(f"ω{a}" if v is None else str(v))
        return "(" + ",".join(parts) + ")"


class OmegaPoly:
    """
    Sparse polynomial in ω_1..ω_N with exact rational coefficients.

    Zero coefficients are never stored, so two polynomials are equal
    exactly when their term dictionaries are equal.
    """

    __slots__ = ('n', '_terms', '_hash')

    def __init__(self, n: int, terms: Optional[Mapping[Exponents, Rational]] = None):
        self.n = n
        self._hash = None
        self._terms: Dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n or any((not isinstance(e, int)) or e < 0 for e in exps):
                raise OmegaError("Malformed exponent vector", repr(exps))
            coeff = to_fraction(coeff)
            if coeff:
                self._terms[exps] = self._terms.get(exps, Fraction(0)) + coeff
                if not self._terms[exps]:
                    del self._terms[exps]

    @classmethod
    def _raw(cls, n: int, terms: Dict[Exponents, Fraction]) -> 'OmegaPoly':
        # terms must already be canonical (no zeros, tuples of length n)
        poly = cls.__new__(cls)
        poly.n = n
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, n: int) -> 'OmegaPoly':
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, value: Rational) -> 'OmegaPoly':
        value = to_fraction(value)
        return cls._raw(n, {(0,) * n: value} if value else {})

    @classmethod
    def one(cls, n: int) -> 'OmegaPoly':
        return cls.constant(n, 1)

    @classmethod
    def variable(cls, n: int, a: int, power: int = 1) -> 'OmegaPoly':
        """The monomial ω_a^power."""
        if not 1 <= a <= n:
            raise OmegaError("Omega index out of range", f"{a} not in 1..{n}")
        exps = [0] * n
        exps[a - 1] = power
        return cls._raw(n, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, n: int, exps: Exponents, coeff: Rational = 1) -> 'OmegaPoly':
        return cls(n, {tuple(exps): coeff})

    def terms(self) -> Iterator[Tuple[Exponents, Fraction]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> list:
        """Terms in canonical order: lower total degree first, then by exponents descending."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), tuple(-e for e in t[0])))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_value(self) -> Fraction:
        """Value of a constant polynomial."""
        if not self.is_constant:
            raise OmegaError("Polynomial is not constant", repr(self))
        return self._terms.get((0,) * self.n, Fraction(0))

    def leading(self) -> Tuple[Exponents, Fraction]:
        """The single term of a monomial."""
        if not self.is_monomial:
            raise OmegaError("Polynomial is not a monomial", repr(self))
        return next(iter(self._terms.items()))

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def _coerce(self, other) -> 'OmegaPoly':
        if isinstance(other, OmegaPoly):
            if other.n != self.n:
                raise OmegaError("Mismatched omega polynomial sizes", f"{self.n} != {other.n}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return OmegaPoly.constant(self.n, other)
        return NotImplemented

    def __add__(self, other) -> 'OmegaPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = dict(self._terms)
        for exps, coeff in other._terms.items():
            total = result.get(exps, 0) + coeff
            if total:
                result[exps] = total
            else:
                result.pop(exps, None)
        return OmegaPoly._raw(self.n, result)

    __radd__ = __add__

    def __neg__(self) -> 'OmegaPoly':
        return OmegaPoly._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> 'OmegaPoly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'OmegaPoly':
        return (-self) + other

    def __mul__(self, other) -> 'OmegaPoly':
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return OmegaPoly.zero(self.n)
            return OmegaPoly._raw(self.n, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result: Dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(x + y for x, y in zip(e1, e2))
                total = result.get(exps, 0) + c1 * c2
                if total:
                    result[exps] = total
                else:
                    result.pop(exps, None)
        return OmegaPoly._raw(self.n, result)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> 'OmegaPoly':
        if not isinstance(power, int) or power < 0:
            raise OmegaError("Only non-negative integer powers are supported", repr(power))
        result = OmegaPoly.one(self.n)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, OmegaPoly):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def substitute(self, assignment: Mapping[int, Rational]) -> 'OmegaPoly':
        """
        Replace some ω_a by exact values; the rest stay symbolic.

        Args:
            assignment: Map from 1-based index a to the value of ω_a
        """
        if not assignment:
            return self
        values = {}
        for a, v in assignment.items():
            if not isinstance(a, int) or not 1 <= a <= self.n:
                raise OmegaError("Assignment to a non-existent variable", f"ω{a}")
            values[a - 1] = to_fraction(v)

        result: Dict[Exponents, Fraction] = {}
        for exps, coeff in self._terms.items():
            new_exps = list(exps)
            for i, v in values.items():
                if exps[i]:
                    coeff = coeff * v ** exps[i]
                    new_exps[i] = 0
            if not coeff:
                continue
            key = tuple(new_exps)
            total = result.get(key, 0) + coeff
            if total:
                result[key] = total
            else:
                result.pop(key, None)
        return OmegaPoly._raw(self.n, result)

    def evaluate(self, values: Mapping[int, Rational]) -> Fraction:
        """
        Evaluate to a rational; every variable that occurs must be assigned.

        Raises:
            OmegaError: If an occurring variable has no value
        """
        reduced = self.substitute({a: v for a, v in values.items() if 1 <= a <= self.n})
        if not reduced.is_constant:
            raise OmegaError("Value for a symbolic coefficient is not provided", repr(reduced))
        return reduced.constant_value()

    def to_list(self) -> list:
        """JSON form: a list of ``{"rational", "exponents"}`` records in canonical order."""
        return [
            {"rational": format_fraction(c), "exponents": list(e)}
            for e, c in self.sorted_terms()
        ]

    @classmethod
    def from_list(cls, n: int, data: Iterable[Mapping]) -> 'OmegaPoly':
        terms: Dict[Exponents, Fraction] = {}
        for record in data:
            try:
                exps = tuple(int(x) for x in record["exponents"])
                coeff = to_fraction(record["rational"])
            except (KeyError, TypeError):
                raise OmegaError("Malformed coefficient record", repr(record))
            if exps in terms:
                raise OmegaError("Repeated exponent vector", repr(exps))
            terms[exps] = coeff
        return cls(n, terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = "".join(
                f"ω{a}" + (f"^{e}" if e > 1 else "")
                for a, e in enumerate(exps, start=1) if e
            )
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(factors)
            elif coeff == -1:
                parts.append("-" + factors)
            else:
                parts.append(f"{coeff}*{factors}")
        return " + ".join(parts).replace("+ -", "- ")
