"""
Tests for template management.
"""

import argparse
import shutil
import tempfile
from fractions import Fraction
from pathlib import Path

import pytest

from ckcas.cli.commands import cmd_table1
from ckcas.core.config import CkcasConfig
from ckcas.core.exceptions import RenderError
from ckcas.core.symbol_converter import SymbolConverter
from ckcas.templates.template_manager import TemplateManager, format_value, sign_pattern


GOLDEN_DIR = Path(__file__).parent / "golden"


class TestFilters:
    """Test cases for the display helpers."""

    def test_sign_pattern(self):
        """Test signs of fixed and symbolic entries."""
        assert sign_pattern((Fraction(1), Fraction(0), Fraction(-2), None)) == "(+,0,−,*)"

    def test_format_value(self):
        """Test exact numbers and infinity."""
        assert format_value(-1) == "−1"
        assert format_value(Fraction(3, 4)) == "3/4"
        assert format_value(None) == "∞"


class TestTemplateManager:
    """Test cases for TemplateManager class."""

    def setup_method(self):
        """Set up test fixtures."""
        self.temp_dir = tempfile.mkdtemp()
        self.template_dir = Path(self.temp_dir)
        self.manager = TemplateManager(str(self.template_dir))

    def teardown_method(self):
        """Clean up test fixtures."""
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def create_test_template(self, name: str, content: str):
        """Helper to create test template files."""
        template_path = self.template_dir / name
        template_path.parent.mkdir(parents=True, exist_ok=True)
        template_path.write_text(content, encoding='utf-8')

    def test_manager_initialization(self):
        """Test TemplateManager initialization."""
        assert self.manager.template_dir == self.template_dir
        assert self.manager.converter is not None
        assert isinstance(self.manager._template_cache, dict)

    def test_missing_directory(self):
        """Test that a missing template directory is refused."""
        with pytest.raises(RenderError):
            TemplateManager(str(self.template_dir / "absent"))

    def test_render_with_filters(self):
        """Test the notation and superscript filters."""
        self.create_test_template("t.txt.j2", "{{ expr | notation }} {{ sym | notation('latex') }} x{{ 3 | superscript }}")
        result = self.manager.render_template("t.txt.j2", {'expr': "Omega01^2", 'sym': "Ω01"})
        assert result == "Ω01² \\Omega01 x³"

    def test_custom_converter(self):
        """Test that the notation filter uses the given converter."""
        self.create_test_template("generator.txt.j2", "{{ 'Omega12' | notation }}")
        manager = TemplateManager(str(self.template_dir), converter=SymbolConverter({'text': {'Omega': 'L'}}))
        assert manager.render_template("generator.txt.j2", {}) == "L12"

    def test_template_caching(self):
        """Test that loaded templates are cached."""
        self.create_test_template("cached.j2", "{{ value }}")
        first = self.manager.load_template("cached.j2")
        second = self.manager.load_template("cached.j2")
        assert first is second
        assert list(self.manager._template_cache) == ["cached.j2"]

    def test_missing_template(self):
        """Test loading a template that does not exist."""
        with pytest.raises(RenderError):
            self.manager.load_template("nope.j2")

    def test_syntax_error(self):
        """Test that syntax errors surface as RenderError."""
        self.create_test_template("broken.j2", "{% for x in %}")
        with pytest.raises(RenderError):
            self.manager.load_template("broken.j2")
        assert "broken.j2" not in self.manager._template_cache

    def test_render_error(self):
        """Test that errors during rendering surface as RenderError."""
        self.create_test_template("bad.j2", "{{ value | superscript }}")
        with pytest.raises(RenderError):
            self.manager.render_template("bad.j2", {'value': "x"})

    def test_nested_template(self):
        """Test templates in a subdirectory."""
        self.create_test_template("sub/b.tex.j2", "{{ 'κ' | notation('latex') }}")
        assert self.manager.render_template("sub/b.tex.j2", {}) == "\\kappa"


class TestBundledTemplates:
    """Test cases for the templates shipped with the package."""

    def setup_method(self):
        """Set up test fixtures."""
        self.manager = TemplateManager()

    @pytest.mark.parametrize("name", ["casimirs.txt.j2", "casimirs.tex.j2", "catalog.txt.j2", "table1.txt.j2"])
    def test_bundled_templates_load(self, name):
        """Test that every shipped template parses."""
        assert self.manager.load_template(name) is not None

    def test_casimirs_text(self):
        """Test the text report layout."""
        data = {
            'title': "so(3)", 'spec': "(1,1)", 'label': "so(3)", 'note': None,
            'invariants': [{'label': "C1", 'expression': "Ω01²"}], 'wsymbols': [],
        }
        assert self.manager.render_template("casimirs.txt.j2", data) == "so(3)  (1,1)  so(3)\n  C1 = Ω01²\n"

    def test_table_one_matches_golden(self):
        """Test the kinematical table byte for byte."""
        expected = (GOLDEN_DIR / "table1.txt").read_text(encoding='utf-8')
        args = argparse.Namespace(format="text")
        assert cmd_table1(args, CkcasConfig()) == expected
