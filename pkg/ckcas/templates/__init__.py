"""
Rendering components for ckcas.

ExpressionRenderer turns elements into text, LaTeX or JSON and
TemplateManager lays them out in Jinja2 report templates.
"""

from .expression_renderer import ExpressionRenderer, element_to_dict, parse_element_json
from .template_manager import TemplateManager

__all__ = [
    'ExpressionRenderer', 'element_to_dict', 'parse_element_json',
    'TemplateManager'
]
