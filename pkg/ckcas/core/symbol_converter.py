"""
Notation conversion for rendered expressions.

Expressions are assembled from ASCII spellings (``Omega01^2``, ``kappa``,
``-``) and converted here to unicode text or to LaTeX symbols according to
the notation rules of the configuration.
"""

import re
from typing import Dict, Optional

from .exceptions import RenderError
from .logging_config import get_logger


SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")

DEFAULT_RULES = {
    'text': {
        'Omega': 'Ω',
        'omega': 'ω',
        'kappa': 'κ',
        '-': '−',
    },
    'latex': {
        'Ω': '\\Omega',
        'ω': '\\omega',
        'κ': '\\kappa',
        '−': '-',
    },
}


def superscript(power: int) -> str:
    """Unicode superscript digits for an exponent; empty for 1."""
    if power == 1:
        return ""
    return str(power).translate(SUPERSCRIPTS)


class SymbolConverter:
    """
    Converts ASCII spellings of the notation into text or LaTeX.

    The ``text`` table maps ASCII names to unicode symbols and the
    ``latex`` table maps those unicode symbols to LaTeX commands, so a
    symbol is looked up for LaTeX by going through both tables.
    """

    def __init__(self, notation_rules: Optional[Dict[str, Dict[str, str]]] = None):
        """
        Initialize the converter.

        Args:
            notation_rules: Optional custom ``{'text': {...}, 'latex': {...}}`` tables
        """
        self.logger = get_logger(__name__)
        self.notation_rules = {
            target: dict(rules) for target, rules in (notation_rules or DEFAULT_RULES).items()
        }
        for target in ('text', 'latex'):
            self.notation_rules.setdefault(target, {})
        self._compile_patterns()

    def _compile_patterns(self):
        """Compile one alternation per target, longest spelling first."""
        self.patterns = {}
        try:
            for target, rules in self.notation_rules.items():
                keys = sorted(rules, key=len, reverse=True)
                self.patterns[target] = re.compile("|".join(re.escape(k) for k in keys)) if keys else None
            self.power_pattern = re.compile(r"\^\{?(-?\d+)\}?")
        except re.error as e:
            raise RenderError("Failed to compile notation patterns", str(e))

    def _apply(self, text: str, target: str) -> str:
        pattern = self.patterns.get(target)
        if not text or pattern is None:
            return text
        rules = self.notation_rules[target]
        return pattern.sub(lambda m: rules[m.group(0)], text)

    def convert_powers(self, text: str) -> str:
        """``x^2`` and ``x^{12}`` become unicode superscripts."""
        return self.power_pattern.sub(lambda m: superscript(int(m.group(1))), text)

    def to_text(self, text: str) -> str:
        """
        Convert an ASCII expression to its unicode text form.

        Args:
            text: e.g. ``-(kappa/c^2)Omega34^2``

        Returns:
            e.g. ``−(κ/c²)Ω34²``
        """
        result = self.convert_powers(self._apply(text, 'text'))
        if result != text:
            self.logger.debug("Notation conversion: '%s' -> '%s'", text, result)
        return result

    def to_latex(self, text: str) -> str:
        """Replace unicode symbols by their LaTeX commands."""
        return self._apply(text, 'latex')

    def symbol(self, name: str, target: str = 'text') -> str:
        """
        Spelling of one named symbol (``Omega``, ``omega``, ``kappa``) in a target.

        Raises:
            RenderError: If the target is unknown
        """
        if target == 'text':
            return self._apply(name, 'text')
        if target == 'latex':
            return self.to_latex(self._apply(name, 'text'))
        raise RenderError("Unknown notation target", target)

    def minus(self, target: str = 'text') -> str:
        return self.symbol('-', target)

    def add_notation_rule(self, target: str, old: str, new: str):
        """
        Add a conversion rule and recompile.

        Args:
            target: ``text`` or ``latex``
            old: Spelling to convert from
            new: Spelling to convert to
        """
        self.notation_rules.setdefault(target, {})[old] = new
        self._compile_patterns()
        self.logger.info("Added notation rule: %s['%s'] -> '%s'", target, old, new)
