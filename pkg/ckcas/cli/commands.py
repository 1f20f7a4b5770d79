"""
The ckcas subcommands.

Each command composes engine operations and returns the artifact as a
string; ``main`` decides whether it goes to stdout or to ``--out``.
Verification failures raise VerificationError with a JSON witness.
"""

import json
import random
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from ckcas.catalog.registry import (
    KINEMATICAL_ALIASES,
    KINEMATICAL_N,
    catalog,
    kinematical_assignment,
    lookup,
    parse_omega_argument,
    table_one_specs,
)
from ckcas.core.algebra import classify
from ckcas.core.casimirs import casimir_set, casimir_terms, verify_centrality
from ckcas.core.config import CkcasConfig
from ckcas.core.data_models import GeneratorAlias
from ckcas.core.enveloping import EnvelopingElement, substitute
from ckcas.core.exceptions import ConfigurationError, VerificationError
from ckcas.core.gelfand import mg_rank, run_oracle_suite
from ckcas.core.logging_config import get_logger
from ckcas.core.omega import OmegaPoly, OmegaSpec
from ckcas.core.symbol_converter import SymbolConverter
from ckcas.core.wsymbols import WIndexSet, w_symbol
from ckcas.templates.expression_renderer import ExpressionRenderer, element_to_dict
from ckcas.templates.template_manager import TemplateManager


logger = get_logger(__name__)


@dataclass
class Target:
    """The algebra a command works on."""

    spec: OmegaSpec
    name: Optional[str] = None
    aliases: Tuple[GeneratorAlias, ...] = ()
    kinematical: bool = False

    @property
    def title(self) -> str:
        return self.name or f"so_{self.spec}({self.spec.n + 1})"


@dataclass
class CasimirView:
    """One invariant ready for rendering; ``w_terms`` is its Σ prefactor·W form."""

    label: str
    element: EnvelopingElement
    w_terms: Optional[List[Tuple[OmegaPoly, WIndexSet]]] = None
    w_power: int = 2


@dataclass
class CasimirViews:
    spec: OmegaSpec
    invariants: List[CasimirView] = field(default_factory=list)
    wsymbols: List[Tuple[WIndexSet, EnvelopingElement]] = field(default_factory=list)


def parse_settings(text: Optional[str]) -> Dict[str, str]:
    """``k=0,c=inf`` becomes ``{'k': '0', 'c': 'inf'}``."""
    settings: Dict[str, str] = {}
    for item in (text or "").split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise ConfigurationError("Malformed --set entry", repr(item))
        key, value = item.split("=", 1)
        settings[key.strip()] = value.strip()
    return settings


def resolve_target(args) -> Target:
    """
    The algebra named by ``--name`` or given by ``--omega``.

    Raises:
        ConfigurationError: If neither or both are given
    """
    name = getattr(args, 'name', None)
    omega = getattr(args, 'omega', None)
    n = getattr(args, 'n', None)
    if name and omega:
        raise ConfigurationError("Give either --name or --omega, not both")
    if name:
        entry = lookup(name, n)
        return Target(entry.spec, entry.name, entry.aliases, entry.kinematical)
    if omega:
        spec, kinematical = parse_omega_argument(omega, n)
        aliases = KINEMATICAL_ALIASES if kinematical and spec.n == KINEMATICAL_N else ()
        return Target(spec, None, aliases, kinematical)
    raise ConfigurationError("An algebra is required", "use --name or --omega")


def build_renderer(config: CkcasConfig) -> ExpressionRenderer:
    return ExpressionRenderer(SymbolConverter(config.notation_rules), config.expand_omega_products)


def build_templates(config: CkcasConfig) -> TemplateManager:
    return TemplateManager(converter=SymbolConverter(config.notation_rules))


def casimir_views(spec: OmegaSpec, assignment: Optional[Mapping[int, object]] = None) -> CasimirViews:
    """
    The Casimir set of ``spec`` prepared for rendering.

    With an assignment, the invariants are built with the assigned
    coefficients left free and the values are substituted afterwards, so
    the output shows the contraction itself rather than a fresh build.
    """
    assignment = dict(assignment or {})
    source = OmegaSpec.from_values(
        None if a in assignment else v for a, v in enumerate(spec.values(), start=1)
    )
    target = source.substitute(assignment) if assignment else source

    def contract(u: EnvelopingElement) -> EnvelopingElement:
        return substitute(source, u, assignment) if assignment else u

    cset = casimir_set(source)
    views = CasimirViews(target)
    used: List[WIndexSet] = []
    for s, element in enumerate(cset.even_order, start=1):
        w_terms = None
        if s >= 2:
            w_terms = []
            for prefactor, ix in casimir_terms(source, s):
                prefactor = prefactor.substitute(assignment) if assignment else prefactor
                if prefactor:
                    w_terms.append((prefactor, ix))
                    used.append(ix)
        views.invariants.append(CasimirView(f"C{s}", contract(element), w_terms))
    if cset.extra is not None:
        full = WIndexSet(tuple(range(spec.n + 1)))
        views.invariants.append(CasimirView("C", contract(cset.extra), [(OmegaPoly.one(spec.n), full)], w_power=1))
        used.append(full)

    for ix in used:
        views.wsymbols.append((ix, contract(w_symbol(source, ix).element)))
    return views


def render_views(
    views: CasimirViews,
    target: Target,
    fmt: str,
    config: CkcasConfig,
    note: Optional[str] = None,
) -> str:
    """Render a CasimirViews as text, LaTeX or JSON."""
    if fmt == 'json':
        payload = {
            'algebra': target.title,
            'omega': views.spec.to_list(),
            'label': classify(views.spec),
            'casimirs': [
                {'label': item.label, 'element': element_to_dict(item.element, views.spec)}
                for item in views.invariants
            ],
        }
        if note:
            payload['note'] = note
        return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"

    renderer = build_renderer(config)
    invariants = []
    for item in views.invariants:
        if item.w_terms is None:
            expression = renderer.render(item.element, fmt, target.aliases, kinematical=target.kinematical)
        else:
            expression = renderer.render_w_terms(item.w_terms, fmt, target.kinematical, power=item.w_power)
        invariants.append({'label': item.label, 'expression': expression})
    wsymbols = [
        {
            'name': f"W_{{{ix.label}}}",
            'expression': renderer.render(element, fmt, target.aliases, kinematical=target.kinematical),
        }
        for ix, element in views.wsymbols
    ]

    templates = build_templates(config)
    data = {
        'title': target.title,
        'spec': str(views.spec),
        'label': classify(views.spec),
        'note': note,
        'invariants': invariants,
        'wsymbols': wsymbols,
    }
    if fmt == 'latex':
        lines = [f"{_latex_label(i['label'])} &= {i['expression']}" for i in invariants]
        lines += [f"{w['name']} &= {w['expression']}" for w in wsymbols]
        data['lines'] = lines
        return templates.render_template('casimirs.tex.j2', data)
    return templates.render_template('casimirs.txt.j2', data)


def _latex_label(label: str) -> str:
    return f"{{\\cal C}}_{{{label[1:]}}}" if label[1:] else "{\\cal C}"


def cmd_generate(args, config: CkcasConfig) -> str:
    """The complete Casimir set of one algebra."""
    target = resolve_target(args)
    logger.info("Generating Casimirs for %s", target.title)
    return render_views(casimir_views(target.spec), target, args.format or config.default_format, config)


def cmd_verify(args, config: CkcasConfig) -> str:
    """
    Centrality of every Casimir against every generator.

    Raises:
        VerificationError: If some commutator is nonzero
    """
    target = resolve_target(args)
    report = verify_centrality(target.spec, workers=config.workers)
    if not report.all_central:
        raise VerificationError(
            "Casimir is not central", report.summary(),
            witness={label: r.to_dict() for label, r in report.failures().items()},
        )
    if (args.format or config.default_format) == 'json':
        return json.dumps(report.to_dict(), ensure_ascii=False, indent=2) + "\n"
    lines = [f"{label}: central" for label in report.results]
    lines.append(report.summary())
    return "\n".join(lines) + "\n"


def cmd_contract(args, config: CkcasConfig) -> str:
    """Substitute ``--set`` values into the Casimirs and re-render them."""
    target = resolve_target(args)
    assignment = kinematical_assignment(parse_settings(args.set), target.spec.n)
    if not assignment:
        raise ConfigurationError("contract needs --set", "e.g. --set c=inf")
    views = casimir_views(target.spec, assignment)
    note = f"contracted from {target.spec} ({classify(target.spec)})"
    logger.info("Contracted %s to %s", target.spec, views.spec)
    contracted = Target(views.spec, None, target.aliases, target.kinematical and not views.spec.is_fixed)
    return render_views(views, contracted, args.format or config.default_format, config, note=note)


def _rng(args, config: CkcasConfig) -> random.Random:
    seed = args.seed if getattr(args, 'seed', None) is not None else config.seed
    return random.Random(seed)


def cmd_rank(args, config: CkcasConfig) -> str:
    """
    Randomized rank of M_g and the bound on independent invariants.

    Raises:
        VerificationError: If the rank differs from the expected value
    """
    target = resolve_target(args)
    result = mg_rank(target.spec, _rng(args, config), config.rank_trials, config.random_magnitude)
    if result.rank != result.expected_rank:
        raise VerificationError(
            "Unexpected rank of M_g", f"{result.rank} != {result.expected_rank}", witness=result.to_dict(),
        )
    if (args.format or config.default_format) == 'json':
        return json.dumps(result.to_dict(), indent=2) + "\n"
    return (
        f"rank M_g = {result.rank} (dim g = {result.dimension})\n"
        f"tau = {result.tau}\n"
    )


def cmd_gelfand_check(args, config: CkcasConfig) -> str:
    """
    The Gel'fand cross-checks.

    Raises:
        VerificationError: If any check fails
    """
    target = resolve_target(args)
    report = run_oracle_suite(
        target.spec,
        _rng(args, config),
        identity_trials=config.identity_trials,
        rank_trials=config.rank_trials,
        magnitude=config.random_magnitude,
        workers=config.workers,
    )
    if not report.is_valid:
        raise VerificationError("Gel'fand cross-check failed", report.get_error_summary(), witness=report.to_dict())
    if (args.format or config.default_format) == 'json':
        return json.dumps(report.to_dict(), ensure_ascii=False, indent=2) + "\n"
    lines = [f"{'ok  ' if check['passed'] else 'FAIL'} {check['name']}" for check in report.checks]
    lines.append(f"{len(report.checks)} checks passed")
    return "\n".join(lines) + "\n"


def table_one_rows(config: CkcasConfig) -> List[Dict]:
    """C1 and C2 of the six kinematical algebras."""
    renderer = build_renderer(config)
    rows = []
    for name, title, spec, kappa, speed in table_one_specs():
        cset = casimir_set(spec)
        rows.append({
            'name': name,
            'title': title,
            'signs': spec.values(),
            'omega': str(spec),
            'kappa': kappa,
            'c': speed,
            'label': classify(spec),
            'c1': renderer.render(cset.even_order[0], 'text', KINEMATICAL_ALIASES),
            'c2': renderer.render_w_terms(casimir_terms(spec, 2), 'text'),
        })
    return rows


def cmd_table1(args, config: CkcasConfig) -> str:
    """The Casimir table of the six 3+1 kinematical algebras."""
    rows = table_one_rows(config)
    if (getattr(args, 'format', None) or config.default_format) == 'json':
        payload = [{k: v for k, v in row.items() if k != 'signs'} for row in rows]
        return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
    return build_templates(config).render_template('table1.txt.j2', {'rows': rows})


def cmd_catalog(args, config: CkcasConfig) -> str:
    """Registry entries that exist at ``--n`` (default 4)."""
    n = args.n if getattr(args, 'n', None) is not None else KINEMATICAL_N
    entries = catalog(n)
    if (getattr(args, 'format', None) or config.default_format) == 'json':
        return json.dumps([e.to_dict() for e in entries], ensure_ascii=False, indent=2) + "\n"
    data = {
        'n': n,
        'entries': [
            {'name': e.name, 'omega': str(e.spec), 'label': e.label, 'alternates': [str(s) for s in e.alternates]}
            for e in entries
        ],
        'families': ['so(p,q)', 'iso(p,q)'],
    }
    return build_templates(config).render_template('catalog.txt.j2', data)


COMMANDS = {
    'generate': cmd_generate,
    'verify': cmd_verify,
    'contract': cmd_contract,
    'rank': cmd_rank,
    'gelfand-check': cmd_gelfand_check,
    'table1': cmd_table1,
    'catalog': cmd_catalog,
}


def run_command(args, config: CkcasConfig) -> str:
    """Dispatch to the subcommand named by ``args.command``."""
    handler = COMMANDS.get(args.command)
    if handler is None:
        raise ConfigurationError("Unknown command", args.command)
    logger.debug("Running command %s", args.command)
    return handler(args, config)
