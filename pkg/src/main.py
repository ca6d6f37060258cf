"""
Shifted-power toolkit - command-line front end
Exact analysis of families of shifted powers (x - a)^e
"""

import argparse
import os
import sys
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, TextIO

from algebra.scalars import field_from_tag
from construct import (ProbeParams, conjecture_probe, lowdim_family, lowdim_report, unity_dependence_certificate,
                       unity_identity)
from core.config_manager import ConfigManager
from core.errors import EnumerationTooLargeError, MalformedInputError, PreconditionError, ShiftedPowerError
from core import serialization as codec
from core.hardware_detector import PerformanceTier
from family import (PolyaSequence, atkinson_sharma_condition, big_exponent_conditions, dependence_coefficients,
                    dimension, gmk_condition, is_independent, jordan_condition, jordan_family, max_independent_subfamily,
                    polya_check, real_halfplus_witness, real_top_exponent_witness, sqrt_witness)
from polya import ExperimentConfig, count_polya, enumerate_polya, genericity_sweep, monte_carlo_independence
from sde import (SdeParams, check_root_divisibility, coefficient_root_cover, find_sde, find_small_sde,
                 search_parameters, verify_sde)
from waring import h_form, h_polynomial, legendre_kernel_identity, real_decomposition, waring_rank

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_USAGE = 64
EXIT_MALFORMED = 65

CONSTRUCT_KINDS = ('unity', 'unity-family', 'lowdim', 'jordan', 'h-poly', 'probe')
WITNESS_KINDS = ('max', 'sqrt', 'top', 'halfplus')


# Setup logging
def setup_logging(config: Dict[str, Any], verbose: bool = False):
    """Setup logging configuration; logs go to stderr, never to stdout"""
    log_level = logging.DEBUG if verbose else getattr(logging, str(config.get('log_level', 'WARNING')).upper())

    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if config.get('log_file'):
        log_path = Path(config['log_file'])
        log_path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_path))

    logging.basicConfig(
        level=log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers
    )
    logging.getLogger().setLevel(log_level)


class UsageError(Exception):
    """Bad command line: unknown subcommand, bad flag or missing input"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(' ', '').split(',') if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument('--in', dest='input', help="JSON input file, '-' for stdin")
    common.add_argument('--json', dest='inline', help="inline JSON input")
    common.add_argument('--out', help="write the result here instead of stdout")
    common.add_argument('--format', choices=('json', 'text'), help="output format (default from config: json)")
    common.add_argument('--field', help="rational or cyclotomic:k, used when the input names no field")
    common.add_argument('--seed', type=int, help="seed of randomized commands (required when CI=1)")
    common.add_argument('--verbose', action='store_true', help="debug logging on stderr")

    parser = _Parser(prog='shifted-powers', description="Exact analysis of shifted-power families")
    parser.add_argument('--config', type=Path, help="settings file (default config/settings.yaml)")
    parser.add_argument('--system-info', action='store_true', help="print hardware limits and exit")
    parser.add_argument('--tier', choices=[t.value for t in PerformanceTier], help="override the detected tier")
    parser.add_argument('--save-config', action='store_true', help="write the effective settings to --config")
    sub = parser.add_subparsers(dest='command', parser_class=_Parser)

    sub.add_parser('family-check', parents=[common], help="exponent conditions of a family")
    sub.add_parser('family-dim', parents=[common], help="dimension of the span and the relations")
    p = sub.add_parser('family-witness', parents=[common], help="independent subfamily certifying a lower bound")
    p.add_argument('--kind', choices=WITNESS_KINDS, default='max')

    p = sub.add_parser('sde-find', parents=[common], help="annihilating shifted differential equation")
    p.add_argument('-t', type=int, help="order t; alone it scans (k, l) at this order")
    p.add_argument('-k', type=int)
    p.add_argument('-l', type=int)
    p.add_argument('--search', action='store_true', help="scan (k, l) by increasing k + l")
    sub.add_parser('sde-verify', parents=[common], help="check an equation against a family")

    p = sub.add_parser('waring-rank', parents=[common], help="Waring rank of a rational polynomial")
    p.add_argument('--h-poly', type=int, metavar='D', help="use H_(2D+1) = (x+1)^(2D+2) - x^(2D+2)")
    p.add_argument('--h-form', type=int, metavar='D', help="use (x+1)^(D+1) - x^(D+1)")
    p.add_argument('--residual', action='store_true', help="add the floating-point Legendre decomposition")

    p = sub.add_parser('polya-count', parents=[common], help="number of Polya sequences below d")
    p.add_argument('-s', type=int, required=True)
    p.add_argument('-d', type=int, required=True)
    p = sub.add_parser('polya-enum', parents=[common], help="list the Polya sequences below d")
    p.add_argument('-s', type=int, required=True)
    p.add_argument('-d', type=int, required=True)

    p = sub.add_parser('experiment', parents=[common], help="Monte-Carlo genericity check")
    p.add_argument('--kind', choices=('fixed', 'sweep'), default='fixed')
    p.add_argument('--exps', type=_int_list, help="exponent sequence for --kind fixed, e.g. 2,2,0")
    p.add_argument('-s', type=int, help="family size for --kind sweep")
    p.add_argument('--trials', type=int, default=1000)
    p.add_argument('--set-size', type=int, default=100)
    p.add_argument('--workers', type=int, help="worker processes (default from config)")

    p = sub.add_parser('construct', parents=[common], help="explicit families with certificates")
    p.add_argument('what', choices=CONSTRUCT_KINDS)
    p.add_argument('-k', type=int, default=2)
    p.add_argument('-d', type=int, default=4)
    p.add_argument('--mu', default='1')
    p.add_argument('--towers', help="node:exponent list for jordan, e.g. 0:3,1:2")
    p.add_argument('--probe-kind', choices=('bigexp', 'gmk'), default='bigexp')
    p.add_argument('-s', type=int, default=3)
    p.add_argument('-a', type=int, default=2)
    p.add_argument('-b', type=int, default=-4)
    p.add_argument('--conductor', type=int, default=1)
    p.add_argument('--samples', type=int)
    p.add_argument('--workers', type=int)
    return parser


class Toolkit:
    """Runs one parsed command against the configuration"""

    def __init__(self, config_manager: ConfigManager):
        self.config_manager = config_manager
        self.config = config_manager.config

    # input helpers

    def _load_input(self, args) -> Any:
        if args.inline is not None:
            return codec.load_json(args.inline)
        if args.input is None:
            raise UsageError(f"{args.command} needs --in or --json")
        if args.input == '-':
            return codec.load_json(sys.stdin.read())
        try:
            text = Path(args.input).read_text()
        except OSError as e:
            raise MalformedInputError(f"Cannot read {args.input}: {e.strerror}")
        return codec.load_json(text)

    def _field(self, args):
        return field_from_tag(args.field) if args.field else None

    def _family(self, args, obj=None):
        """A family object, or any payload carrying one under 'family' or 'witness'"""
        obj = self._load_input(args) if obj is None else obj
        if isinstance(obj, dict) and 'terms' not in obj:
            for key in ('family', 'witness'):
                if key in obj:
                    obj = obj[key]
                    break
        return codec.family_from_json(obj, self._field(args))

    # commands

    def family_check(self, args) -> Dict[str, Any]:
        F = self._family(args)
        e = F.polya_sequence()
        return {
            's': F.s,
            'exps': list(e.exps),
            'polya': polya_check(e),
            'gmk': gmk_condition(e),
            'atkinson_sharma': atkinson_sharma_condition(F) if F.has_rational_shifts() else None,
            'conditions': big_exponent_conditions(F).to_dict(),
        }

    def family_dim(self, args) -> Dict[str, Any]:
        F = self._family(args)
        dim = dimension(F)
        relations = dependence_coefficients(F) if dim < F.s else []
        return {
            's': F.s,
            'dim': dim,
            'independent': dim == F.s,
            'relations': [[codec.encode_scalar(c) for c in r] for r in relations],
        }

    def family_witness(self, args) -> Dict[str, Any]:
        builders: Dict[str, Callable] = {
            'max': max_independent_subfamily,
            'sqrt': sqrt_witness,
            'top': real_top_exponent_witness,
            'halfplus': real_halfplus_witness,
        }
        F = self._family(args)
        witness = builders[args.kind](F)
        return {'kind': args.kind, 's': F.s, 'size': witness.s, 'witness': codec.family_to_json(witness)}

    def sde_find(self, args) -> Dict[str, Any]:
        F = self._family(args)
        if args.k is not None or args.l is not None:
            params = SdeParams(F.s if args.t is None else args.t, args.k or 0, args.l or 0)
            E = find_sde(F, params)
            if E is None:
                return {'found': False, 'params': vars(params), 'family': codec.family_to_json(F)}
        elif args.search or args.t is not None:
            # an order alone scans (k, l) at that order
            found = search_parameters(F, t=args.t)
            if found is None:
                raise PreconditionError("Parameter search found no equation", s=F.s, t=args.t)
            params, E = found
        else:
            E = find_small_sde(F)
            params = E.params
        payload = {'found': True, 'params': vars(params), 'order': E.order,
                   'sde': codec.sde_to_json(E), 'family': codec.family_to_json(F)}
        payload.update(self._sde_structure(E, F))
        return payload

    def _sde_structure(self, E, F) -> Dict[str, Any]:
        try:
            divisibility = check_root_divisibility(E, F)
        except PreconditionError as e:
            logger.debug(f"Root divisibility not applicable: {e}")
            divisibility = None
        try:
            cover = coefficient_root_cover(E, F).holds
        except PreconditionError as e:
            logger.debug(f"Root cover not applicable: {e}")
            cover = None
        return {'degree_bounds_hold': E.degree_bounds_hold(), 'root_divisibility': divisibility,
                'root_cover': cover}

    def sde_verify(self, args) -> Dict[str, Any]:
        obj = self._load_input(args)
        if not isinstance(obj, dict) or 'sde' not in obj or 'family' not in obj:
            raise MalformedInputError("sde-verify needs an object with 'sde' and 'family'")
        E = codec.sde_from_json(obj['sde'])
        F = self._family(args, obj['family'])
        per_term = [verify_sde(E, f) for f in F.expansions]
        payload = {'verified': all(per_term), 'per_term': per_term, 'order': E.order}
        if all(per_term):
            payload.update(self._sde_structure(E, F))
        return payload

    def waring_rank(self, args) -> Dict[str, Any]:
        if args.h_poly is not None:
            f = h_polynomial(args.h_poly)
        elif args.h_form is not None:
            f = h_form(args.h_form)
        else:
            obj = self._load_input(args)
            if isinstance(obj, dict):
                obj = obj.get('poly', obj.get('coeffs'))
            f = codec.poly_from_json(obj)
        seed = args.seed if args.seed is not None else self.config['squarefree_seed']
        certificate = waring_rank(f, attempts=self.config['squarefree_attempts'], seed=seed)
        payload = certificate.to_dict()
        payload['degree'] = f.degree
        payload['poly'] = codec.poly_to_json(f)
        if args.h_poly is not None:
            payload['legendre_kernel'] = legendre_kernel_identity(args.h_poly)
            if args.residual:
                decomposition = real_decomposition(args.h_poly)
                payload['residual'] = decomposition.residual
                payload['roots'] = decomposition.roots
                payload['residual_ok'] = decomposition.residual <= self.config['residual_tolerance']
        return payload

    def polya_count(self, args) -> Dict[str, Any]:
        return {'s': args.s, 'd': args.d, 'count': count_polya(args.s, args.d)}

    def polya_enum(self, args) -> Dict[str, Any]:
        total = count_polya(args.s, args.d)
        limit = self.config['enumeration_limit']
        if total > limit:
            raise EnumerationTooLargeError(f"{total} sequences exceed the limit {limit}", count=total, limit=limit)
        sequences = [{'m': list(mt.m), 'exps': list(mt.to_sequence().exps)} for mt in enumerate_polya(args.s, args.d)]
        return {'s': args.s, 'd': args.d, 'count': total, 'sequences': sequences}

    def experiment(self, args) -> Dict[str, Any]:
        if args.kind == 'fixed':
            if not args.exps:
                raise UsageError("experiment --kind fixed needs --exps")
            s = len(args.exps)
        else:
            if args.s is None:
                raise UsageError("experiment --kind sweep needs -s")
            s = args.s
        cfg = ExperimentConfig(
            s=s, set_size=args.set_size, trials=args.trials, seed=self._seed(args), field=args.field or 'rational',
            workers=args.workers or self.config['max_workers'], enumeration_limit=self.config['enumeration_limit'])
        if args.kind == 'fixed':
            report = monte_carlo_independence(PolyaSequence(args.exps), cfg)
        else:
            report = genericity_sweep(s, cfg)
        return report.to_dict()

    def _seed(self, args) -> int:
        return 0 if args.seed is None else args.seed

    def construct(self, args) -> Dict[str, Any]:
        try:
            mu = Fraction(args.mu)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"Cannot read mu={args.mu!r} as a rational")
        if args.what == 'unity':
            certificate = unity_identity(args.k, args.d, mu)
            return {'k': args.k, 'd': args.d, 'mu': codec.encode_rational(mu), 'verified': certificate.verify(),
                    'certificate': codec.certificate_to_json(certificate)}
        if args.what == 'unity-family':
            certificate = unity_dependence_certificate(args.k, args.d, mu)
            F = certificate.family
            return {'k': args.k, 'd': args.d, 's': F.s, 'dim': dimension(F), 'dependent': dimension(F) < F.s,
                    'gmk': gmk_condition(F.polya_sequence()), 'family': codec.family_to_json(F),
                    'certificate': codec.certificate_to_json(certificate)}
        if args.what == 'lowdim':
            F, _ = lowdim_family(args.d)
            payload = lowdim_report(args.d)
            payload['family'] = codec.family_to_json(F)
            return payload
        if args.what == 'jordan':
            towers = self._towers(args.towers)
            F = jordan_family(args.d, towers)
            return {'d': args.d, 'condition': jordan_condition(args.d, towers), 'independent': is_independent(F),
                    'family': codec.family_to_json(F)}
        if args.what == 'h-poly':
            f = h_polynomial(args.d)
            return {'d': args.d, 'degree': f.degree, 'poly': codec.poly_to_json(f)}
        params = ProbeParams(s=args.s, a=args.a, b=args.b, d=args.d, conductor=args.conductor,
                             samples=args.samples or self.config_manager.get('probe.samples', 200))
        report = conjecture_probe(args.probe_kind, params, self._seed(args),
                                  workers=args.workers or self.config['max_workers'])
        return report.to_dict()

    def _towers(self, text: Optional[str]):
        if not text:
            raise UsageError("construct jordan needs --towers node:exponent,...")
        towers = []
        for item in text.split(','):
            node, _, exponent = item.partition(':')
            try:
                towers.append((Fraction(node.strip()), int(exponent)))
            except ValueError:
                raise UsageError(f"Cannot read tower {item!r}")
        return towers


HANDLERS = {
    'family-check': Toolkit.family_check,
    'family-dim': Toolkit.family_dim,
    'family-witness': Toolkit.family_witness,
    'sde-find': Toolkit.sde_find,
    'sde-verify': Toolkit.sde_verify,
    'waring-rank': Toolkit.waring_rank,
    'polya-count': Toolkit.polya_count,
    'polya-enum': Toolkit.polya_enum,
    'experiment': Toolkit.experiment,
    'construct': Toolkit.construct,
}


def render_text(payload: Any, indent: int = 0) -> str:
    """Plain-text view of a JSON payload, key per line"""
    pad = '  ' * indent
    if isinstance(payload, dict):
        lines = []
        for key, value in payload.items():
            if isinstance(value, (dict, list)) and value and not _flat(value):
                lines.append(f"{pad}{key}:")
                lines.append(render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar_text(value)}")
        return '\n'.join(lines)
    if isinstance(payload, list):
        if _flat(payload):
            return f"{pad}{_scalar_text(payload)}"
        return '\n'.join(f"{pad}-\n{render_text(item, indent + 1)}" for item in payload)
    return f"{pad}{_scalar_text(payload)}"


def _flat(value) -> bool:
    return isinstance(value, list) and all(not isinstance(v, (dict, list)) for v in value)


def _scalar_text(value) -> str:
    if isinstance(value, list):
        return '[' + ', '.join(_scalar_text(v) for v in value) + ']'
    if isinstance(value, dict):
        return '{}'
    if value is None:
        return '-'
    return str(value)


def _randomized(args) -> bool:
    if args.command == 'experiment':
        return True
    return args.command == 'construct' and args.what == 'probe'


def _emit(text: str, out: Optional[str], stream: TextIO):
    if out:
        Path(out).write_text(text + '\n')
    else:
        stream.write(text + '\n')


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """Execute one subcommand and return its exit code"""
    stdout = stdout or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    config_manager = ConfigManager(args.config)
    config = config_manager.config
    setup_logging(config, getattr(args, 'verbose', False))

    if args.tier:
        config_manager.set_performance_tier(args.tier)
    if args.save_config:
        config_manager.save_config()
        if args.command is None:
            _emit(codec.dumps({'saved': str(config_manager.config_path)}), None, stdout)
            return EXIT_OK
    if args.system_info:
        _emit(codec.dumps(config_manager.get_system_info(), indent=2), None, stdout)
        return EXIT_OK
    if args.command is None:
        sys.stderr.write("usage error: a subcommand is required\n")
        return EXIT_USAGE

    fmt = args.format or config.get('output_format', 'json')
    try:
        if os.environ.get('CI') == '1' and _randomized(args) and args.seed is None:
            raise PreconditionError("Randomized commands need an explicit --seed when CI=1", command=args.command)
        logger.info(f"🔍 Running {args.command}")
        payload = HANDLERS[args.command](Toolkit(config_manager), args)
    except UsageError as e:
        sys.stderr.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except MalformedInputError as e:
        logger.error(f"❌ {e}")
        _emit(codec.dumps(e.to_dict()), None, stdout)
        return EXIT_MALFORMED
    except ShiftedPowerError as e:
        logger.error(f"❌ {e}")
        _emit(codec.dumps(e.to_dict()), None, stdout)
        return EXIT_DOMAIN

    text = codec.dumps(payload) if fmt == 'json' else render_text(payload)
    _emit(text, args.out, stdout)
    logger.info(f"✅ {args.command} finished")
    return EXIT_OK


def main() -> int:
    """Main entry point"""
    return run()

if __name__ == "__main__":
    sys.exit(main())
