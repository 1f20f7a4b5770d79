"""
Data models for ckcas.

Result records returned by the verification operations.  They carry enough
information to be rendered as text or dumped to JSON by the CLI.
"""

from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional


@dataclass
class CentralityResult:
    """
    Outcome of checking one element against every generator.

    When ``central`` is False, ``generator`` is the first generator whose
    commutator with the element is nonzero and ``remainder`` is that
    commutator.
    """

    central: bool
    generator: Optional[Any] = None
    remainder: Optional[Any] = None

    def __bool__(self) -> bool:
        return self.central

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        data: Dict[str, Any] = {'central': self.central}
        if not self.central:
            data['generator'] = str(self.generator)
            data['remainder'] = repr(self.remainder)
        return data


@dataclass
class CentralityReport:
    """
    Per-Casimir centrality results for one spec.

    Entries are keyed by the Casimir label (``C1``, ``C2``, ``C``).
    """

    spec: Any
    results: Dict[str, CentralityResult] = field(default_factory=dict)
    started_at: datetime = field(default_factory=datetime.now)

    def add_result(self, label: str, result: CentralityResult):
        self.results[label] = result

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results.values() if r.central)

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def all_central(self) -> bool:
        return self.passed == self.total

    def failures(self) -> Dict[str, CentralityResult]:
        return {label: r for label, r in self.results.items() if not r.central}

    def summary(self) -> str:
        """One-line summary such as ``3/3 central``."""
        return f"{self.passed}/{self.total} central"

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            'spec': str(self.spec),
            'summary': self.summary(),
            'results': {label: r.to_dict() for label, r in self.results.items()},
            'started_at': self.started_at.isoformat(),
        }


@dataclass
class CheckReport:
    """
    Outcome of a suite of named checks (the Gel'fand oracle, duality, ...).

    Follows the add-error pattern: a failing check records a message and
    optional witness and flips ``is_valid``.
    """

    is_valid: bool = True
    checks: List[Dict[str, Any]] = field(default_factory=list)
    errors: List[Dict[str, Any]] = field(default_factory=list)

    def add_check(self, name: str, passed: bool, witness: Optional[Dict[str, Any]] = None, **info):
        """Record a named check; failures also become errors."""
        entry = {'name': name, 'passed': passed}
        entry.update(info)
        self.checks.append(entry)
        if not passed:
            self.add_error(f"check failed: {name}", witness)

    def add_error(self, message: str, witness: Optional[Dict[str, Any]] = None):
        """Add an error message."""
        error_info: Dict[str, Any] = {'message': message}
        if witness is not None:
            error_info['witness'] = witness
        self.errors.append(error_info)
        self.is_valid = False

    def has_errors(self) -> bool:
        return len(self.errors) > 0

    def get_error_summary(self) -> str:
        if not self.has_errors():
            return "No errors"
        return "; ".join(error['message'] for error in self.errors)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'is_valid': self.is_valid,
            'checks': self.checks,
            'errors': self.errors,
        }


@dataclass
class RankResult:
    """Randomized rank of M_g and the derived bound on independent invariants."""

    n: int
    rank: int
    trials: List[int] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return self.n * (self.n + 1) // 2

    @property
    def tau(self) -> int:
        return self.dimension - self.rank

    @property
    def expected_rank(self) -> int:
        return (self.n * self.n - (self.n % 2)) // 2

    @property
    def stable(self) -> bool:
        """All trials agreed."""
        return len(set(self.trials)) <= 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'dimension': self.dimension,
            'rank': self.rank,
            'tau': self.tau,
            'trials': list(self.trials),
        }


@dataclass(frozen=True)
class GeneratorAlias:
    """
    Display name of a generator, e.g. ``J2`` for ``-Ω24``.

    ``sign`` is applied on rendering: an odd power of the generator flips
    the sign of its coefficient.
    """

    generator: Any
    name: str
    sign: int = 1

    @property
    def latex(self) -> str:
        """``P1`` becomes ``P_1``; names without a trailing number are unchanged."""
        head = self.name.rstrip("0123456789")
        tail = self.name[len(head):]
        return f"{head}_{tail}" if tail else head

    def to_dict(self) -> Dict[str, Any]:
        return {'generator': str(self.generator), 'name': self.name, 'sign': self.sign}
