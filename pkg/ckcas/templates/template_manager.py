"""
Template management for ckcas reports.

Handles Jinja2 template loading, caching and rendering of the text and
LaTeX reports (Casimir sets, the kinematical table, the catalog).
"""

from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional

from jinja2 import Environment, FileSystemLoader, Template, TemplateNotFound, TemplateSyntaxError

from ckcas.core.exceptions import RenderError
from ckcas.core.logging_config import get_logger
from ckcas.core.symbol_converter import SymbolConverter, superscript


DEFAULT_TEMPLATE_DIR = Path(__file__).parent / "jinja"


def sign_pattern(values) -> str:
    """``(1, 0, -1)`` becomes ``(+,0,−)``; symbolic entries (None) print as ``*``."""
    marks = []
    for v in values:
        if v is None:
            marks.append("*")
        elif v > 0:
            marks.append("+")
        elif v < 0:
            marks.append("−")
        else:
            marks.append("0")
    return "(" + ",".join(marks) + ")"


def format_value(value) -> str:
    """Exact number for display: ``-1``, ``1/2``; None prints as ``∞``."""
    if value is None:
        return "∞"
    value = Fraction(value)
    text = str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return text.replace("-", "−")


class TemplateManager:
    """
    Manages Jinja2 templates for ckcas reports.

    Templates live in ``ckcas/templates/jinja`` unless another directory is
    given; loaded templates are cached by name.
    """

    def __init__(self, template_dir: Optional[str] = None, converter: Optional[SymbolConverter] = None):
        """
        Initialize the template manager.

        Args:
            template_dir: Directory containing template files
            converter: SymbolConverter behind the ``notation`` filter
        """
        self.logger = get_logger(__name__)
        self.template_dir = Path(template_dir) if template_dir else DEFAULT_TEMPLATE_DIR
        self.converter = converter or SymbolConverter()

        if not self.template_dir.is_dir():
            raise RenderError("Template directory not found", str(self.template_dir))

        self._setup_jinja_environment()
        self._template_cache: Dict[str, Template] = {}

    def _setup_jinja_environment(self):
        """Set up the Jinja2 environment; output is plain text and LaTeX, never HTML."""
        try:
            self.jinja_env = Environment(
                loader=FileSystemLoader(str(self.template_dir)),
                autoescape=False,
                trim_blocks=True,
                lstrip_blocks=True,
                keep_trailing_newline=True,
            )
            self._add_custom_filters()
            self.logger.debug("Jinja2 environment initialized with template directory: %s", self.template_dir)
        except Exception as e:
            raise RenderError("Failed to initialize Jinja2 environment", str(e))

    def _add_custom_filters(self):
        """Register the notation filters."""
        converter = self.converter

        def notation(value, target='text'):
            text = str(value)
            return converter.to_text(text) if target == 'text' else converter.to_latex(text)

        def sup(value):
            return superscript(int(value))

        self.jinja_env.filters['notation'] = notation
        self.jinja_env.filters['superscript'] = sup
        self.jinja_env.filters['sign_pattern'] = sign_pattern
        self.jinja_env.filters['exact'] = format_value

    def load_template(self, template_name: str) -> Template:
        """
        Load a template by name with caching.

        Args:
            template_name: Name of the template file

        Returns:
            Jinja2 Template object

        Raises:
            RenderError: If the template cannot be loaded
        """
        if template_name in self._template_cache:
            self.logger.debug("Template '%s' loaded from cache", template_name)
            return self._template_cache[template_name]
        try:
            template = self.jinja_env.get_template(template_name)
        except TemplateNotFound:
            raise RenderError("Template not found", template_name)
        except TemplateSyntaxError as e:
            raise RenderError(f"Template syntax error in '{template_name}'", str(e))
        self._template_cache[template_name] = template
        self.logger.debug("Template '%s' loaded and cached", template_name)
        return template

    def render_template(self, template_name: str, data: Dict[str, Any]) -> str:
        """
        Render a template with data.

        Args:
            template_name: Name of the template
            data: Data dictionary for rendering

        Returns:
            Rendered content

        Raises:
            RenderError: If loading or rendering fails
        """
        template = self.load_template(template_name)
        try:
            result = template.render(**data)
        except Exception as e:
            raise RenderError(f"Failed to render template '{template_name}'", str(e))
        self.logger.debug("Template '%s' rendered (%d characters)", template_name, len(result))
        return result
