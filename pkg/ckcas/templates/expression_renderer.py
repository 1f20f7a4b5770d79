"""
Rendering of enveloping-algebra elements as text, LaTeX or JSON.

Text and LaTeX list monomials in canonical PBW order (or in alias order
when generator aliases are given).  JSON is the stable machine form and
is read back by ``parse_element_json``.
"""

import json
from collections import Counter
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ckcas.core.algebra import Generator, generator_index
from ckcas.core.data_models import GeneratorAlias
from ckcas.core.enveloping import EnvelopingElement, PBWMonomial, Word
from ckcas.core.exceptions import CkcasError, RenderError
from ckcas.core.logging_config import get_logger
from ckcas.core.omega import OmegaPoly, OmegaSpec, format_fraction
from ckcas.core.symbol_converter import SymbolConverter
from ckcas.core.wsymbols import WIndexSet


FORMATS = ('text', 'latex', 'json')

Aliases = Optional[Sequence[GeneratorAlias]]


def _latex_number(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"\\frac{{{value.numerator}}}{{{value.denominator}}}"


def _latex_power(base: str, power: int) -> str:
    return base if power == 1 else f"{base}^{{{power}}}"


def _pair_label(lo: int, hi: int) -> str:
    return f"{lo}{hi}" if lo < 10 and hi < 10 else f"{lo},{hi}"


def named_omega_factors(exps: Sequence[int]) -> List[Tuple[Tuple[int, int], int]]:
    """
    Split an exponent vector of ω_1..ω_N into two-index products ω_ab.

    Maximal runs of consecutive variables are peeled off one layer at a
    time, so ω1²ω2²ω3 becomes ω02·ω03.

    Returns:
        ((a, b), power) pairs ordered by (a, b)
    """
    remaining = list(exps)
    names: Counter = Counter()
    while any(remaining):
        start = next(i for i, e in enumerate(remaining) if e > 0)
        end = start
        while end + 1 < len(remaining) and remaining[end + 1] > 0:
            end += 1
        for i in range(start, end + 1):
            remaining[i] -= 1
        names[(start, end + 1)] += 1
    return sorted(names.items())


class ExpressionRenderer:
    """
    Renders EnvelopingElements and Σ prefactor·W² sums.

    With ``kinematical`` set, ω_1 is shown as κ and ω_2 as -1/c², the
    remaining coefficients keeping their ω names.
    """

    def __init__(self, converter: Optional[SymbolConverter] = None, expand_omega_products: bool = True):
        """
        Initialize the renderer.

        Args:
            converter: SymbolConverter used for text and LaTeX symbols
            expand_omega_products: Print ω1ω2... (True) or two-index ω_ab (False)
        """
        self.logger = get_logger(__name__)
        self.converter = converter or SymbolConverter()
        self.expand_omega_products = expand_omega_products

    # ------------------------------------------------------------------
    # coefficients

    def _omega_factors(self, exps: Sequence[int], fmt: str) -> List[str]:
        omega = 'omega' if fmt == 'text' else self.converter.symbol('omega', 'latex')
        factors = []
        if self.expand_omega_products:
            for a, e in enumerate(exps, start=1):
                if not e:
                    continue
                if fmt == 'text':
                    factors.append(f"{omega}{a}" + (f"^{e}" if e > 1 else ""))
                else:
                    factors.append(_latex_power(f"{omega}_{{{a}}}", e))
        else:
            for (lo, hi), e in named_omega_factors(exps):
                if fmt == 'text':
                    factors.append(f"{omega}{_pair_label(lo, hi)}" + (f"^{e}" if e > 1 else ""))
                else:
                    factors.append(_latex_power(f"{omega}_{{{_pair_label(lo, hi)}}}", e))
        return factors

    def _coefficient_term(self, value: Fraction, exps: Sequence[int], fmt: str, kinematical: bool) -> Tuple[bool, str]:
        """
        One term r·ω^e of a coefficient as (negative, body).

        An empty body stands for a unit coefficient.
        """
        negative = value < 0
        magnitude = abs(value)
        exps = list(exps)
        kappa_power = c_power = 0
        if kinematical:
            kappa_power, exps[0] = exps[0], 0
            if len(exps) > 1:
                c_power, exps[1] = exps[1], 0
            if c_power % 2:
                negative = not negative

        factors = []
        if kappa_power:
            if fmt == 'text':
                factors.append('kappa' + (f"^{kappa_power}" if kappa_power > 1 else ""))
            else:
                factors.append(_latex_power(self.converter.symbol('kappa', 'latex'), kappa_power))
        factors.extend(self._omega_factors(exps, fmt))

        if fmt == 'text':
            if c_power:
                numer = (str(magnitude.numerator) if magnitude.numerator != 1 else "") + "".join(factors)
                denom = (str(magnitude.denominator) if magnitude.denominator != 1 else "") + f"c^{2 * c_power}"
                return negative, f"({numer or '1'}/{denom})"
            if magnitude == 1:
                return negative, "".join(factors)
            if magnitude.denominator == 1:
                number = str(magnitude.numerator)
            elif factors:
                number = f"({format_fraction(magnitude)})"
            else:
                number = format_fraction(magnitude)
            return negative, number + "".join(factors)

        if c_power:
            numer = " ".join(([str(magnitude.numerator)] if magnitude.numerator != 1 else []) + factors) or "1"
            c_part = f"c^{2 * c_power}" if 2 * c_power < 10 else f"c^{{{2 * c_power}}}"
            denom = (str(magnitude.denominator) if magnitude.denominator != 1 else "") + c_part
            return negative, f"\\frac{{{numer}}}{{{denom}}}"
        if magnitude == 1:
            return negative, " ".join(factors)
        return negative, " ".join([_latex_number(magnitude)] + factors)

    def _join(self, parts: List[Tuple[bool, str]], fmt: str) -> str:
        if not parts:
            return "0"
        minus = '-'
        out = []
        for i, (negative, body) in enumerate(parts):
            if i == 0:
                out.append((minus if negative else "") + body)
            else:
                out.append((minus if negative else "+") + body)
        return "".join(out)

    def _poly_ascii(self, poly: OmegaPoly, fmt: str, kinematical: bool) -> str:
        parts = []
        for exps, value in poly.sorted_terms():
            negative, body = self._coefficient_term(value, exps, fmt, kinematical)
            parts.append((negative, body or "1"))
        return self._join(parts, fmt)

    def _coefficient(self, poly: OmegaPoly, fmt: str, kinematical: bool) -> Tuple[bool, str]:
        if poly.is_monomial:
            exps, value = poly.leading()
            return self._coefficient_term(value, exps, fmt, kinematical)
        inner = self._poly_ascii(poly, fmt, kinematical)
        if fmt == 'latex':
            return False, f"\\left({inner}\\right)"
        return False, f"({inner})"

    def render_coefficient(self, poly: OmegaPoly, fmt: str = 'text', kinematical: bool = False) -> str:
        """A coefficient on its own, e.g. ``ω1ω2`` or ``−(κ/c²)``."""
        self._check_format(fmt, allow_json=False)
        text = self._poly_ascii(poly, fmt, kinematical)
        return self.converter.to_text(text) if fmt == 'text' else text

    # ------------------------------------------------------------------
    # monomials

    def _alias_table(self, n: int, aliases: Aliases) -> Dict[int, Tuple[int, GeneratorAlias]]:
        table = {}
        for position, alias in enumerate(aliases or ()):
            table[generator_index(alias.generator, n)] = (position, alias)
        return table

    def _monomial(self, n: int, word: Word, fmt: str, table) -> Tuple[int, str]:
        """(sign from aliases, rendered factors) for a PBW word."""
        sign = 1
        factors = []
        for g, power in PBWMonomial(n, word).factors:
            entry = table.get(generator_index(g, n))
            if entry is not None:
                alias = entry[1]
                if power % 2:
                    sign *= alias.sign
                name = alias.name if fmt == 'text' else alias.latex
            elif fmt == 'text':
                name = f"Omega{g.label}"
            else:
                name = f"{self.converter.symbol('Omega', 'latex')}_{{{g.label}}}"
            if fmt == 'text':
                factors.append(name + (f"^{power}" if power > 1 else ""))
            else:
                factors.append(_latex_power(name, power))
        return sign, ("".join(factors) if fmt == 'text' else " ".join(factors))

    def _ordered_terms(self, element: EnvelopingElement, table) -> List[Tuple[Word, OmegaPoly]]:
        if not table:
            return element.sorted_terms()
        size = len(table)

        def key(item):
            word = item[0]
            positions = sorted(table[x][0] if x in table else size + x for x in word)
            return len(word), positions

        return sorted(element.terms(), key=key)

    # ------------------------------------------------------------------
    # public API

    @staticmethod
    def _check_format(fmt: str, allow_json: bool = True):
        allowed = FORMATS if allow_json else FORMATS[:2]
        if fmt not in allowed:
            raise RenderError("Unsupported format", f"{fmt} (expected one of {', '.join(allowed)})")

    def _assemble(self, items: List[Tuple[OmegaPoly, str]], fmt: str, kinematical: bool) -> str:
        parts = []
        for coeff, mono in items:
            negative, body = self._coefficient(coeff, fmt, kinematical)
            if not mono:
                body = body or "1"
            elif body and fmt == 'latex':
                body = body + " "
            parts.append((negative, body + mono))
        text = self._join(parts, fmt)
        return self.converter.to_text(text) if fmt == 'text' else text

    def render(
        self,
        element: EnvelopingElement,
        fmt: str = 'text',
        aliases: Aliases = None,
        spec: Optional[OmegaSpec] = None,
        kinematical: bool = False,
    ) -> str:
        """
        Render an element of U(g).

        Args:
            element: The element
            fmt: ``text``, ``latex`` or ``json``
            aliases: Optional generator display names, in display order
            spec: The algebra, recorded in the JSON form (symbolic when omitted)
            kinematical: Show ω1 as κ and ω2 as -1/c²

        Returns:
            The rendering; the zero element is ``0`` in text and LaTeX

        Raises:
            RenderError: On an unknown format
        """
        self._check_format(fmt)
        if fmt == 'json':
            return json.dumps(element_to_dict(element, spec), ensure_ascii=False, indent=2)

        table = self._alias_table(element.n, aliases)
        items = []
        for word, coeff in self._ordered_terms(element, table):
            sign, mono = self._monomial(element.n, word, fmt, table)
            items.append((coeff * sign, mono))
        return self._assemble(items, fmt, kinematical)

    def render_w_terms(
        self,
        terms: Sequence[Tuple[OmegaPoly, WIndexSet]],
        fmt: str = 'text',
        kinematical: bool = False,
        power: int = 2,
    ) -> str:
        """
        Render Σ prefactor·W(ix)^power, e.g. ``W_{0123}²+W_{0124}²−(1/c²)W_{0234}²``.

        Raises:
            RenderError: On an unknown or non-textual format
        """
        self._check_format(fmt, allow_json=False)
        items = []
        for prefactor, ix in terms:
            if fmt == 'text':
                mono = f"W_{{{ix.label}}}" + (f"^{power}" if power > 1 else "")
            else:
                mono = _latex_power(f"W_{{{ix.label}}}", power)
            items.append((prefactor, mono))
        return self._assemble(items, fmt, kinematical)


def element_to_dict(element: EnvelopingElement, spec: Optional[OmegaSpec] = None) -> Dict[str, Any]:
    """
    JSON-ready form ``{"n", "omega", "terms"}`` with terms in canonical order.

    Raises:
        RenderError: If the spec does not match the element
    """
    if spec is None:
        spec = OmegaSpec.symbolic(element.n)
    if spec.n != element.n:
        raise RenderError("Spec and element disagree on N", f"{spec.n} != {element.n}")

    terms = []
    for monomial, coeff in element.monomials():
        terms.append({
            'monomial': [[g.a, g.b, power] for g, power in monomial.factors],
            'coeff': coeff.to_list(),
        })
    return {'n': element.n, 'omega': spec.to_list(), 'terms': terms}


def parse_element_json(data: Union[str, Mapping[str, Any]]) -> Tuple[OmegaSpec, EnvelopingElement]:
    """
    Read back the JSON form written by ``element_to_dict``.

    Args:
        data: A JSON string or an already decoded mapping

    Returns:
        (spec, element)

    Raises:
        RenderError: On malformed input
    """
    try:
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data['n'])
        spec = OmegaSpec.from_list(data['omega'])
        if spec.n != n:
            raise RenderError("Omega list length does not match n", f"{spec.n} != {n}")
        words: Dict[Word, OmegaPoly] = {}
        for record in data['terms']:
            factors = [(Generator(int(a), int(b)), int(p)) for a, b, p in record['monomial']]
            word = PBWMonomial.from_factors(n, factors).word
            coeff = OmegaPoly.from_list(n, record['coeff'])
            words[word] = words[word] + coeff if word in words else coeff
        return spec, EnvelopingElement(n, words)
    except CkcasError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise RenderError("Malformed element JSON", str(e))
