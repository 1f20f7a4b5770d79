"""
Core components of ckcas.

The ω coefficients and their polynomials, the Lie algebra, exact
arithmetic in U(g), W-symbols, Casimirs and the Gel'fand cross-checks,
plus configuration, logging and the exception hierarchy.
"""

from .algebra import Generator, bracket_basis, classify, killing_form
from .casimirs import CasimirSet, casimir_s, casimir_set, verify_centrality
from .config import CkcasConfig
from .enveloping import EnvelopingElement, PBWMonomial, commutator, is_central, multiply, normal_order, substitute
from .exceptions import (
    AlgebraError, CancellationError, CkcasError, ConfigurationError, DegenerateFormError,
    IndexSetError, OmegaError, OutputError, RegistryError, RenderError, VerificationError,
)
from .logging_config import get_logger, setup_logging
from .omega import OmegaEntry, OmegaPoly, OmegaSpec
from .wsymbols import WIndexSet, WSymbol, w_symbol

__all__ = [
    'Generator', 'bracket_basis', 'classify', 'killing_form',
    'CasimirSet', 'casimir_s', 'casimir_set', 'verify_centrality',
    'CkcasConfig',
    'EnvelopingElement', 'PBWMonomial', 'commutator', 'is_central', 'multiply', 'normal_order', 'substitute',
    'AlgebraError', 'CancellationError', 'CkcasError', 'ConfigurationError', 'DegenerateFormError',
    'IndexSetError', 'OmegaError', 'OutputError', 'RegistryError', 'RenderError', 'VerificationError',
    'get_logger', 'setup_logging',
    'OmegaEntry', 'OmegaPoly', 'OmegaSpec',
    'WIndexSet', 'WSymbol', 'w_symbol',
]
