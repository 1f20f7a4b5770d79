"""
Tests for notation conversion.
"""

import pytest

from ckcas.core.exceptions import RenderError
from ckcas.core.symbol_converter import SymbolConverter, superscript


class TestSuperscript:
    """Test cases for unicode exponents."""

    def test_digits(self):
        """Test single and multi digit exponents."""
        assert superscript(2) == "²"
        assert superscript(12) == "¹²"
        assert superscript(-1) == "⁻¹"

    def test_unit_exponent(self):
        """Test that 1 is not printed."""
        assert superscript(1) == ""


class TestSymbolConverter:
    """Test cases for SymbolConverter."""

    def setup_method(self):
        """Set up test fixtures."""
        self.converter = SymbolConverter()

    def test_to_text(self):
        """Test ASCII names, minus signs and powers."""
        assert self.converter.to_text("-(kappa/c^2)Omega34^2") == "−(κ/c²)Ω34²"
        assert self.converter.to_text("omega1omega2Omega01") == "ω1ω2Ω01"
        assert self.converter.to_text("x^{12}") == "x¹²"

    def test_plain_text_unchanged(self):
        """Test that text without notation passes through."""
        assert self.converter.to_text("P1K2") == "P1K2"
        assert self.converter.to_text("") == ""

    def test_to_latex(self):
        """Test unicode symbols to LaTeX commands."""
        assert self.converter.to_latex("Ω_{01}") == "\\Omega_{01}"
        assert self.converter.to_latex("−κ") == "-\\kappa"

    def test_symbol(self):
        """Test named symbols in both targets."""
        assert self.converter.symbol('Omega') == "Ω"
        assert self.converter.symbol('omega', 'latex') == "\\omega"
        assert self.converter.minus() == "−"
        assert self.converter.minus('latex') == "-"

    def test_unknown_target(self):
        """Test that unknown targets are refused."""
        with pytest.raises(RenderError):
            self.converter.symbol('Omega', 'html')

    def test_add_notation_rule(self):
        """Test adding a rule at runtime."""
        self.converter.add_notation_rule('text', 'hbar', 'ħ')
        assert self.converter.to_text("hbar Omega01") == "ħ Ω01"

    def test_custom_rules(self):
        """Test a converter built from custom tables."""
        converter = SymbolConverter({'text': {'Omega': 'X'}})
        assert converter.to_text("Omega01^2") == "X01²"
        assert converter.to_latex("X") == "X"
        assert converter.notation_rules['latex'] == {}

    def test_longest_spelling_wins(self):
        """Test that overlapping spellings prefer the longer one."""
        converter = SymbolConverter({'text': {'om': 'o', 'omega': 'ω'}})
        assert converter.to_text("omega om") == "ω o"
