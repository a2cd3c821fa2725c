#!/usr/bin/env python3
"""
SpringerKit - Main Entry Point
==============================

Usage:
    python main.py partition dual --shape 5,4,4,2,2
    python main.py domino construct --shape 5,4,4,2,2 --form orthogonal
    python main.py domino concat --left 011/235/235/466/4 --right 11/22/3/3
    python main.py model orbit-dim --partition 2,2,1,1 --form symplectic
    python main.py model induce --blocks 2,2 --orbits 1+1,1+1 --trials 32 --seed 7
    python main.py flags enum --shape 2,2,1,1 --form symplectic --isotropic --q 3
    python main.py verify section6 --q 3
    python main.py g2 rank --x 0,0,0,0,0,1
    python main.py orbits verdict --type E8 --orbit A4+A3
    python main.py --usage

Global options (after the command):
    --json       JSON report instead of the formatted one
    --seed N     seed for sampled checks (default from SPRINGERKIT_SEED or 7)
    --verbose    debug logging from the library modules

Exit codes:
    0  pass
    1  a verification report holds a counterexample, or an internal invariant failed
    2  usage error (bad flag value, inadmissible shape, guard exceeded, ...)
    130 interrupted
"""

import re
import sys
import json
import logging
import argparse
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from config import SuiteConfig, check_flag_scale, check_grid_radius, load_config
from errors import (AdmissibilityError, ConcatenationOrderError, DomainError, InvariantViolation,
                    LabelError, ParityError, RangeError, ScaleError, SpringerKitError, SubspaceError)
from exceptional_data import orbit_record
from flag_enum import (Flag, domino_label, label_flags, lemma2_checks, partition_property_check,
                       section6_suite, stratum_table, syt_label)
from g2 import (ORBIT_NAMES, G2Nilpotent, grid_classify, jacobian_report, orbit_rank,
                polynomial_values, random_rational_check, summarize_scan, min_orbit_equations,
                tildeV_membership)
from linalg_exact import RATIONALS, Subspace, prime_field
from nilpotent_models import (Ambient, LeviData, induced_orbit_sample, induction_property_report,
                              orbit_dim, skew_adjoint_model, split_by_columns,
                              springer_fiber_dim, standard_nilpotent)
from partitions import (FormKind, Partition, classical_orbit_dim, dual, fl_dimension,
                        hook_length_count, is_admissible, partition_property_report,
                        partitions_of)
from tableaux import (DominoTableau, concat, construct_dxomega, construct_property_report,
                      enumerate_domino, enumerate_syt, is_admissible_domino,
                      predicted_component_count, refine_to_syt, render_ascii)

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_INTERRUPTED = 130


# =============================================================================
# ARGUMENT TYPES
# =============================================================================

def _partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r} ({e})")


def _form_arg(text: str) -> FormKind:
    try:
        return FormKind.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"form must be orthogonal or symplectic (got {text!r})")


def _domino_arg(text: str) -> DominoTableau:
    try:
        return DominoTableau.parse(text)
    except (ValueError, SpringerKitError) as e:
        raise argparse.ArgumentTypeError(f"not a domino tableau: {text!r} ({e})")


def _g2_arg(text: str) -> G2Nilpotent:
    try:
        return G2Nilpotent.parse(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"x needs 6 rationals: {text!r} ({e})")


def _orbit_list_arg(text: str) -> Tuple[Partition, ...]:
    """Orbits separated by ',' (or ';'), parts of one orbit joined by '+'."""
    pieces = [t for t in re.split(r'[,;]', text) if t.strip()]
    try:
        return tuple(Partition.parse(t) for t in pieces)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"not an orbit list: {text!r} ({e})")


def _int_list_arg(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace('+', ',').split(',') if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers (got {text!r})")


# =============================================================================
# COMMAND CONFIG
# =============================================================================

@dataclass
class CommandConfig:
    """One parsed command line."""
    group: str
    command: str
    options: Dict = field(default_factory=dict)
    output: str = 'ascii'
    seed: int = 7
    verbose: bool = False
    suite: SuiteConfig = field(default_factory=SuiteConfig)

    @property
    def name(self) -> str:
        return f"{self.group} {self.command}"


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='Output JSON only')
    common.add_argument('--seed', type=int, default=None, help='Seed for sampled checks')
    common.add_argument('--verbose', '-v', action='store_true', help='Debug logging')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog='springerkit',
        description="SpringerKit - Springer fibers, domino tableaux and orbital varieties",
    )
    parser.add_argument('--usage', action='store_true', help='Show detailed usage examples')
    groups = parser.add_subparsers(dest='group', metavar='GROUP')

    def leaf(sub, name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text)

    def shape(p, required=True):
        p.add_argument('--shape', '--partition', dest='shape', type=_partition_arg,
                       required=required, help='Partition, e.g. 2,2,1,1')

    def form(p, required=True):
        p.add_argument('--form', type=_form_arg, required=required,
                       help='orthogonal or symplectic')

    # partition
    sub = groups.add_parser('partition', help='Partitions').add_subparsers(dest='command', required=True)
    p = leaf(sub, 'dual', 'Dual partition (columns)')
    shape(p)
    p = leaf(sub, 'admissible', 'Admissibility for a form kind')
    shape(p)
    form(p)

    # syt
    sub = groups.add_parser('syt', help='Standard Young tableaux').add_subparsers(dest='command', required=True)
    p = leaf(sub, 'enum', 'All standard tableaux of a shape')
    shape(p)

    # domino
    sub = groups.add_parser('domino', help='Domino tableaux').add_subparsers(dest='command', required=True)
    p = leaf(sub, 'enum', 'All domino tableaux of a shape')
    shape(p)
    form(p, required=False)
    p = leaf(sub, 'admissible', 'Admissibility of a domino tableau')
    p.add_argument('--rows', type=_domino_arg, required=True, help='Rows, e.g. 11/22/3/3')
    form(p)
    p = leaf(sub, 'concat', 'Concatenate two domino tableaux')
    p.add_argument('--left', type=_domino_arg, required=True)
    p.add_argument('--right', type=_domino_arg, required=True)
    p = leaf(sub, 'construct', 'Smooth-component domino tableau of a shape')
    shape(p)
    form(p)
    p = leaf(sub, 'refine', 'Standard tableau refining a domino tableau')
    p.add_argument('--rows', type=_domino_arg, required=True)
    p = leaf(sub, 'count-prediction', 'Number of components of the constructed variety')
    shape(p)
    form(p)
    p.add_argument('--n', type=int, default=None, help='Dimension of V (default |shape|)')

    # model
    sub = groups.add_parser('model', help='Nilpotent models').add_subparsers(dest='command', required=True)
    p = leaf(sub, 'skew', 'Skew-adjoint nilpotent with its Gram matrix')
    shape(p)
    form(p)
    p.add_argument('--q', type=int, default=None, help='Prime field F_q (default: rationals)')
    p = leaf(sub, 'orbit-dim', 'Orbit and Springer fiber dimensions')
    shape(p)
    form(p, required=False)
    p = leaf(sub, 'induce', 'Induced orbit from a Levi (type A, sampled)')
    p.add_argument('--blocks', type=_int_list_arg, required=True, help='Levi block sizes, e.g. 2,2')
    p.add_argument('--orbits', type=_orbit_list_arg, default=None,
                   help='One orbit per block, parts joined by "+", e.g. 1+1,2 (default: zero orbits)')
    p.add_argument('--trials', type=int, default=None)
    p = leaf(sub, 'split', 'Jordan types on (x^l)^-1(0) and Im x^l')
    shape(p)
    p.add_argument('--l1', type=int, required=True)

    # flags
    sub = groups.add_parser('flags', help='x-stable flags over F_q').add_subparsers(dest='command', required=True)
    for name, help_text in (('enum', 'Enumerate and stratify x-stable flags'),
                            ('label', 'Label one flag')):
        p = leaf(sub, name, help_text)
        shape(p)
        form(p, required=False)
        p.add_argument('--q', type=int, default=None)
        p.add_argument('--isotropic', action='store_true', help='Only isotropic flags (needs --form)')
    sub.choices['enum'].add_argument('--limit', type=int, default=10, help='Flags to list in detail')
    sub.choices['enum'].add_argument('--label', choices=['syt', 'domino'], default=None,
                                      help='Only this labelling (default: both)')
    sub.choices['label'].add_argument('--flag', type=str, required=True,
                                      help='Vectors v1;v2;... with V_i = span(v1..vi)')

    # verify
    sub = groups.add_parser('verify', help='Verification suites').add_subparsers(dest='command', required=True)
    p = leaf(sub, 'section6', 'Sp6, type (2,2,1,1): Z-set stratification')
    p.add_argument('--q', type=int, default=None)
    p = leaf(sub, 'lemma2', 'Concatenation constraints on flags labeled d1 + d_(n2,k2)')
    shape(p)
    p.add_argument('--d1', type=_domino_arg, required=True)
    p.add_argument('--n2', type=int, required=True)
    p.add_argument('--k2', type=int, required=True)
    p.add_argument('--q', type=int, default=None)
    p = leaf(sub, 'partition-props', 'Partition, construction and stratification properties')
    p.add_argument('--max-n', type=int, default=10)
    p.add_argument('--stratify-max-n', type=int, default=0,
                   help='Also check the standard-tableau stratification for |p| <= this')
    p.add_argument('--induce-max-n', type=int, default=4,
                   help='Check sampled type A induction for Levis of gl_n, n <= this')
    p.add_argument('--trials', type=int, default=None)
    p.add_argument('--q', type=int, default=None)

    # g2
    sub = groups.add_parser('g2', help='G2 computations').add_subparsers(dest='command', required=True)
    p = leaf(sub, 'rank', 'rank C_x and the orbit of x')
    p.add_argument('--x', type=_g2_arg, required=True, help='x1,...,x6 (rationals)')
    p = leaf(sub, 'classify', 'Grid or random scan')
    p.add_argument('--grid', type=int, default=None, help='Grid radius')
    p.add_argument('--x1-zero', action='store_true', help='Only the slice x1 = 0')
    p.add_argument('--random', type=int, default=None, help='Random rational points')
    p = leaf(sub, 'jacobian', 'Jacobian rank at a point')
    p.add_argument('--variety', choices=['min', 'tilde'], required=True)
    p.add_argument('--x', type=_g2_arg, required=True)

    # orbits
    sub = groups.add_parser('orbits', help='Exceptional orbits').add_subparsers(dest='command', required=True)
    p = leaf(sub, 'verdict', 'Smooth orbital variety verdict')
    p.add_argument('--type', dest='group_type', required=True, help='G2, F4, E6, E7 or E8')
    p.add_argument('--orbit', required=True, help='Bala-Carter label')

    return parser


def parse_config(argv: Optional[List[str]] = None) -> Optional[CommandConfig]:
    """Parse a command line; None means usage was printed."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.usage or not args.group:
        print_usage()
        return None
    suite = load_config()
    options = {k: v for k, v in vars(args).items()
               if k not in ('group', 'command', 'json', 'seed', 'verbose', 'usage')}
    return CommandConfig(
        group=args.group,
        command=args.command,
        options=options,
        output='json' if args.json else 'ascii',
        seed=args.seed if args.seed is not None else suite.default_seed,
        verbose=args.verbose,
        suite=suite,
    )


# =============================================================================
# HANDLERS
# =============================================================================

def _field(q: Optional[int]):
    return RATIONALS if q is None else prime_field(q)


def _model_for(config: CommandConfig):
    o = config.options
    q = o.get('q') or config.suite.default_q
    check_flag_scale(o['shape'].n, q, config.suite)
    field_ = prime_field(q)
    if o.get('isotropic') or o.get('form') is not None:
        if o.get('form') is None:
            raise AdmissibilityError("--isotropic needs --form")
        return skew_adjoint_model(o['shape'], o['form'], field_)
    return standard_nilpotent(o['shape'], field_)


def _partition_dual(config):
    p = config.options['shape']
    return {'partition': p.to_json(), 'dual': dual(p).to_json()}


def _partition_admissible(config):
    p, kind = config.options['shape'], config.options['form']
    return {'partition': p.to_json(), 'form': kind.value, 'admissible': is_admissible(p, kind)}


def _syt_enum(config):
    p = config.options['shape']
    tableaux = enumerate_syt(p)
    return {'shape': p.to_json(), 'count': len(tableaux),
            'hook_length_count': hook_length_count(p),
            'tableaux': [t.to_json() for t in tableaux]}


def _domino_enum(config):
    p, kind = config.options['shape'], config.options.get('form')
    tableaux = enumerate_domino(p, kind)
    return {'shape': p.to_json(), 'form': kind.value if kind else None,
            'count': len(tableaux), 'tableaux': [d.to_json() for d in tableaux]}


def _domino_admissible(config):
    d, kind = config.options['rows'], config.options['form']
    return {'tableau': d.to_json(), 'form': kind.value,
            'admissible': is_admissible_domino(d, kind)}


def _domino_concat(config):
    d = concat(config.options['left'], config.options['right'])
    return {'tableau': d.to_json(), 'picture': render_ascii(d.rows)}


def _domino_construct(config):
    p, kind = config.options['shape'], config.options['form']
    d = construct_dxomega(p, kind)
    return {'shape': p.to_json(), 'form': kind.value, 'tableau': d.to_json(),
            'picture': render_ascii(d.rows)}


def _domino_refine(config):
    t = refine_to_syt(config.options['rows'])
    return {'tableau': config.options['rows'].to_json(), 'syt': t.to_json()}


def _domino_count_prediction(config):
    o = config.options
    n = o['n'] if o.get('n') is not None else o['shape'].n
    prediction = predicted_component_count(o['shape'], o['form'], n)
    return {'shape': o['shape'].to_json(), 'form': o['form'].value, **prediction.to_json()}


def _model_skew(config):
    o = config.options
    model = skew_adjoint_model(o['shape'], o['form'], _field(o.get("q")))
    return model.to_json()


def _model_orbit_dim(config):
    o = config.options
    p, kind = o['shape'], o.get('form')
    report = {'shape': p.to_json(), 'fl_dimension': fl_dimension(p)}
    model = standard_nilpotent(p)
    report['gl_orbit_dim'] = orbit_dim(model)
    if kind is not None:
        skew = skew_adjoint_model(p, kind)
        report['form'] = kind.value
        report['orbit_dim'] = orbit_dim(skew, Ambient.FORM_PRESERVING)
        report['closed_form_orbit_dim'] = classical_orbit_dim(p, kind)
        report['springer_fiber_dim'] = springer_fiber_dim(skew, Ambient.FORM_PRESERVING)
        report['passed'] = report['orbit_dim'] == report['closed_form_orbit_dim']
    return report


def _model_induce(config):
    o = config.options
    blocks = o['blocks']
    if o.get('orbits'):
        levi = LeviData(blocks, o['orbits'])
    else:
        levi = LeviData.trivial(blocks)
    trials = o.get('trials') or config.suite.default_trials
    sample = induced_orbit_sample(levi, trials, config.seed)
    report = sample.to_json()
    report['passed'] = sample.dimension_check
    return report


def _model_split(config):
    o = config.options
    first, rest = split_by_columns(standard_nilpotent(o['shape']), o['l1'])
    return {'shape': o['shape'].to_json(), 'l1': o['l1'],
            'first_columns': first.to_json(), 'remaining_columns': rest.to_json()}


def _strata(labels) -> List[Dict]:
    return [{'label': label, 'count': int(count)}
            for label, count in stratum_table(labels).itertuples(index=False)]


def _flags_enum(config):
    o = config.options
    model = _model_for(config)
    label = o.get('label')
    labeled = label_flags(model, isotropic=o.get('isotropic', False),
                          with_domino=label != 'syt')
    limit = o.get('limit', 10)
    report = {
        'shape': o['shape'].to_json(),
        'field': str(model.field),
        'isotropic': bool(o.get('isotropic')),
        'flag_count': len(labeled),
    }
    if label != 'domino':
        report['syt_strata'] = _strata([lf.syt for lf in labeled])
    if label != 'syt':
        report['domino_strata'] = _strata([lf.domino for lf in labeled])
    dropped = {'syt': 'domino', 'domino': 'syt'}.get(label)
    report['flags'] = [{k: v for k, v in lf.to_json().items() if k != dropped}
                       for lf in labeled[:limit]]
    return report


def _flags_label(config):
    o = config.options
    model = _model_for(config)
    vectors = [[t for t in v.split(',') if t.strip()] for v in o['flag'].split(';') if v.strip()]
    n = model.n
    if len(vectors) not in (n - 1, n) or any(len(v) != n for v in vectors):
        raise SubspaceError(f"--flag needs {n - 1} or {n} vectors of length {n}")
    spaces = [Subspace.zero(model.field, n)]
    for v in vectors:
        spaces.append(spaces[-1].extend(model.field.vector(v)))
    if len(spaces) == n:
        spaces.append(Subspace.whole(model.field, n))
    try:
        f = Flag(tuple(spaces))
    except ValueError as e:
        raise SubspaceError(f"--flag does not give a complete flag: {e}")
    if not f.is_stable(model.x):
        raise SubspaceError("--flag is not x-stable")
    report = {'shape': o['shape'].to_json(), 'field': str(model.field),
              'flag': f.to_json(), 'syt': syt_label(f, model.x).to_json()}
    try:
        report['domino'] = domino_label(f, model.x).to_json()
    except SpringerKitError as e:
        report['domino'] = None
        report['domino_note'] = str(e)
    return report


def _verify_section6(config):
    q = config.options.get('q') or config.suite.default_q
    return section6_suite(q).to_json()


def _verify_lemma2(config):
    o = config.options
    q = o.get('q') or config.suite.default_q
    check_flag_scale(o['shape'].n, q, config.suite)
    model = standard_nilpotent(o['shape'], prime_field(q))
    return lemma2_checks(model, o['d1'], o['n2'], o['k2']).to_json()


def _verify_partition_props(config):
    o = config.options
    partitions = partition_property_report(o['max_n'])
    constructions = construct_property_report(o['max_n'])
    trials = o.get('trials') or config.suite.default_trials
    induction = induction_property_report(o.get('induce_max_n', 0), trials, config.seed)
    report = {'partitions': partitions, 'constructions': constructions, 'induction': induction,
              'stratifications': []}
    q = o.get('q') or config.suite.default_q
    if o.get('stratify_max_n'):
        check_flag_scale(o['stratify_max_n'], q, config.suite)
        for n in range(1, o['stratify_max_n'] + 1):
            for p in partitions_of(n):
                report['stratifications'].append(partition_property_check(p, q).to_json())
    report['passed'] = (partitions['passed'] and constructions['passed'] and induction['passed']
                        and all(s['passed'] for s in report['stratifications']))
    return report


def _g2_rank(config):
    x = config.options['x']
    r = orbit_rank(x)
    return {'x': x.to_json(), 'rank': r, 'orbit': ORBIT_NAMES[r],
            'min_orbit_equations': min_orbit_equations(x),
            'tilde_v': tildeV_membership(x),
            'min_values': [str(v) for v in polynomial_values('min', x)],
            'tilde_values': [str(v) for v in polynomial_values('tilde', x)]}


def _g2_classify(config):
    o = config.options
    if o.get('grid') is None and o.get('random') is None:
        raise RangeError("--grid or --random is required")
    report = {}
    if o.get('grid') is not None:
        check_grid_radius(o['grid'], config.suite)
        report['grid'] = summarize_scan(grid_classify(o['grid'], x1_zero=o.get('x1_zero', False)))
    if o.get('random') is not None:
        report['random'] = summarize_scan(random_rational_check(o['random'], config.seed))
        report['random']['seed'] = config.seed
    report['passed'] = all(part['passed'] for part in report.values())
    return report


def _g2_jacobian(config):
    return jacobian_report(config.options['variety'], config.options['x'])


def _orbits_verdict(config):
    return orbit_record(config.options['group_type'], config.options['orbit']).to_json()


HANDLERS: Dict[Tuple[str, str], Callable[[CommandConfig], Dict]] = {
    ('partition', 'dual'): _partition_dual,
    ('partition', 'admissible'): _partition_admissible,
    ('syt', 'enum'): _syt_enum,
    ('domino', 'enum'): _domino_enum,
    ('domino', 'admissible'): _domino_admissible,
    ('domino', 'concat'): _domino_concat,
    ('domino', 'construct'): _domino_construct,
    ('domino', 'refine'): _domino_refine,
    ('domino', 'count-prediction'): _domino_count_prediction,
    ('model', 'skew'): _model_skew,
    ('model', 'orbit-dim'): _model_orbit_dim,
    ('model', 'induce'): _model_induce,
    ('model', 'split'): _model_split,
    ('flags', 'enum'): _flags_enum,
    ('flags', 'label'): _flags_label,
    ('verify', 'section6'): _verify_section6,
    ('verify', 'lemma2'): _verify_lemma2,
    ('verify', 'partition-props'): _verify_partition_props,
    ('g2', 'rank'): _g2_rank,
    ('g2', 'classify'): _g2_classify,
    ('g2', 'jacobian'): _g2_jacobian,
    ('orbits', 'verdict'): _orbits_verdict,
}

# flag named in the error line for each error type
FLAG_HINTS = {
    AdmissibilityError: '--shape/--form',
    ConcatenationOrderError: '--left/--right',
    ParityError: '--right',
    RangeError: '--n',
    ScaleError: '--shape/--q/--grid',
    DomainError: '--x',
    LabelError: '--type/--orbit',
    SubspaceError: '--flag',
}


def dispatch(config: CommandConfig) -> Tuple[int, Dict]:
    """
    Run one command.

    Args:
        config: parsed command line

    Returns:
        (exit code, report); exit code 1 when the report has passed == False
    """
    handler = HANDLERS[(config.group, config.command)]
    logger.debug("dispatch %s with %s", config.name, config.options)
    report = handler(config)
    code = EXIT_COUNTEREXAMPLE if report.get('passed') is False else EXIT_PASS
    return code, report


# =============================================================================
# OUTPUT
# =============================================================================

def _print_value(key: str, value, indent: str = '   '):
    if key == 'picture':
        print()
        for line in value.splitlines():
            print(f"{indent}{line}")
    elif isinstance(value, dict) and 'rows' in value and len(value) <= 3:
        print(f"{indent}{key + ':':22s} {value.get('text', value['rows'])}")
    elif isinstance(value, dict):
        print(f"\n{indent}🔍 {key}:")
        for k, v in value.items():
            _print_value(k, v, indent + '   ')
    elif isinstance(value, list) and value and isinstance(value[0], dict):
        print(f"\n{indent}📊 {key} ({len(value)}):")
        for item in value:
            print(f"{indent}   • " + ', '.join(f"{k}={v}" for k, v in item.items()))
    else:
        print(f"{indent}{key + ':':22s} {value}")


def render_report(config: CommandConfig, code: int, report: Dict):
    if config.output == 'json':
        print(json.dumps(report, indent=2, default=str))
        return
    print("\n" + "=" * 70)
    print(f"📥 SPRINGERKIT - {config.name.upper()}")
    print("=" * 70)
    for key, value in report.items():
        if key == 'passed':
            continue
        _print_value(key, value)
    print("=" * 70)
    if 'passed' in report:
        if code == EXIT_PASS:
            print("✅ PASSED")
        else:
            print("❌ COUNTEREXAMPLE FOUND")


def print_usage():
    """Print usage examples."""
    print("""
╔══════════════════════════════════════════════════════════════════════╗
║  SPRINGERKIT                                                         ║
╠══════════════════════════════════════════════════════════════════════╣
║                                                                      ║
║  TABLEAUX:                                                           ║
║    domino construct --shape 5,4,4,2,2 --form orthogonal              ║
║    domino concat --left 011/235/235/466/4 --right 11/22/3/3          ║
║    domino admissible --rows 12/12/3/3 --form symplectic              ║
║    syt enum --shape 2,2,1,1                                          ║
║                                                                      ║
║  MODELS:                                                             ║
║    model skew --shape 2,2,1,1 --form symplectic --q 3                ║
║    model orbit-dim --shape 2,2,1,1 --form symplectic                 ║
║    model induce --blocks 2,2 --orbits 1+1,1+1 --trials 32            ║
║                                                                      ║
║  FLAGS (F_q, q in {3,5}, n <= 8):                                    ║
║    flags enum --partition 2,2,1,1 --q 3 --label syt                  ║
║    flags enum --shape 2,2,1,1 --form symplectic --isotropic          ║
║    verify section6 --q 3                                             ║
║    verify lemma2 --shape 2,2,1 --d1 0/1/1 --n2 2 --k2 0              ║
║    verify partition-props --max-n 10 --stratify-max-n 4              ║
║                                                                      ║
║  G2 AND EXCEPTIONAL ORBITS:                                          ║
║    g2 rank --x 0,0,0,0,0,1                                           ║
║    g2 classify --grid 2 --x1-zero                                    ║
║    g2 jacobian --variety tilde --x 1,0,0,0,0,0                       ║
║    orbits verdict --type E8 --orbit A4+A3                            ║
║                                                                      ║
║  EXIT CODES: 0 pass, 1 counterexample, 2 usage error                 ║
║                                                                      ║
╚══════════════════════════════════════════════════════════════════════╝
""")


def main(argv: Optional[List[str]] = None) -> int:
    try:
        config = parse_config(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_PASS
    if config is None:
        return EXIT_PASS

    logging.basicConfig(level=logging.DEBUG if config.verbose else logging.WARNING,
                        format='%(name)s: %(message)s')
    try:
        code, report = dispatch(config)
    except KeyboardInterrupt:
        print("\n\nInterrupted by user")
        return EXIT_INTERRUPTED
    except InvariantViolation as e:
        print(f"\n❌ Invariant violated: {e}")
        return EXIT_COUNTEREXAMPLE
    except SpringerKitError as e:
        hint = next((flag for kind, flag in FLAG_HINTS.items() if isinstance(e, kind)), None)
        prefix = f" ({hint})" if hint else ''
        print(f"\n❌ Error{prefix}: {e}")
        return EXIT_USAGE
    except ValueError as e:
        print(f"\n❌ Error: {e}")
        return EXIT_USAGE
    render_report(config, code, report)
    return code


if __name__ == "__main__":
    sys.exit(main())
