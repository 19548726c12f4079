import argparse
import json
import logging
import os
import sys

import numpy as np
import pandas as pd

from . import __version__
from .campaign import run_campaign
from .config import ConfigManager
from .errors import ConfigError, DomainError, GPFError
from .functions import parse_descriptor
from .inequalities import sharpness_scan
from .operators import FractionalParams, gpf_left, gpf_right
from .reporting import CSV_FLOAT_FORMAT, LatexFormatter, ReportProcessor, load_frame

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_VIOLATED = 2
EXIT_CONFIG = 3

LOG_ENV = 'GPF_INEQ_LOG'
_LOG_LEVELS = {'off': logging.CRITICAL, 'info': logging.INFO, 'debug': logging.DEBUG}


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors surface as ConfigError"""

    def error(self, message):
        raise ConfigError(f"{self.prog}: {message}")


def setup_logging():
    setting = os.environ.get(LOG_ENV, 'off').strip().lower()
    level = _LOG_LEVELS.get(setting)
    logging.basicConfig(level=level or logging.WARNING, format='%(asctime)s %(levelname)s %(message)s', force=True)
    if level is None:
        logging.warning(f"Unknown {LOG_ENV}={setting!r}; expected one of {sorted(_LOG_LEVELS)}. Logging is off.")
        logging.getLogger().setLevel(logging.CRITICAL)


def _print_json(record):
    print(json.dumps(record, allow_nan=False))


def _cmd_verify(args):
    config = ConfigManager(args.config)
    cfg = config.campaign_config(seed=args.seed, tol=args.tol, workers=args.workers, output=args.out, format=args.format)
    summary, _ = run_campaign(cfg)
    _print_json(summary.to_dict())
    return EXIT_VIOLATED if summary.violated else EXIT_OK


def _cmd_eval(args):
    params = FractionalParams(args.alpha, args.p)
    if args.side == 'left':
        f = parse_descriptor(args.function, args.x, strictly_positive=False)
        result = gpf_left(params, f, args.x)
    else:
        if args.b is None:
            raise ConfigError("eval --side right requires --b")
        f = parse_descriptor(args.function, args.b, strictly_positive=False)
        result = gpf_right(params, f, args.x, args.b)
    _print_json(result.to_dict())
    return EXIT_OK


def _cmd_sharpness(args):
    if args.count < 2:
        raise ConfigError(f"--count must be >= 2, got {args.count}")
    if not (0.0 < args.eps_min < args.eps_max < 1.0):
        raise ConfigError(f"need 0 < --eps-min < --eps-max < 1, got {args.eps_min}, {args.eps_max}")
    rows = sharpness_scan(np.linspace(args.eps_min, args.eps_max, args.count))
    df = pd.DataFrame(rows, columns=['eps', 'ratio'])
    df['one_minus_eps_sq'] = 1.0 - df['eps'] ** 2
    try:
        directory = os.path.dirname(os.path.abspath(args.out))
        os.makedirs(directory, exist_ok=True)
        df.to_csv(args.out, index=False, float_format=CSV_FLOAT_FORMAT)
    except OSError as exc:
        raise ConfigError(f"Cannot write {args.out}: {exc}") from exc
    logging.info(f"Wrote {len(df)} sharpness rows to {args.out}")
    _print_json({
        'rows': len(df),
        'output': args.out,
        'max_abs_deviation': float((df['ratio'] - df['one_minus_eps_sq']).abs().max()),
    })
    return EXIT_OK


def _cmd_summarize(args):
    config = ConfigManager(args.config)
    df = load_frame(args.report)
    filters = {}
    if args.status:
        filters['status'] = {'type': 'one_of', 'values': args.status}
    if args.inequality:
        filters['inequality_id'] = {'type': 'one_of', 'values': args.inequality}
    if args.margin_below is not None:
        filters['relative_margin'] = {'type': 'less_than', 'value': args.margin_below}
    df = ReportProcessor.apply_filters(df, filters)
    table = ReportProcessor.summary_table(df)
    if args.latex:
        print(LatexFormatter(config).generate_latex_table(table))
    else:
        print(table.to_csv(index=False, float_format=CSV_FLOAT_FORMAT), end='')
    return EXIT_OK


def build_parser():
    parser = _Parser(prog='gpfineq', description="Verify Chebyshev and Polya-Szego type inequalities for GPF integrals")
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest='command', required=True)

    verify = commands.add_parser('verify', help="run a verification campaign")
    verify.add_argument('--config', help="campaign file (YAML, or JSON with a .json suffix)")
    verify.add_argument('--out', help="report file path")
    verify.add_argument('--format', choices=['jsonl', 'csv'])
    verify.add_argument('--workers', type=int)
    verify.add_argument('--seed', type=int)
    verify.add_argument('--tol', type=float)
    verify.set_defaults(handler=_cmd_verify)

    evaluate = commands.add_parser('eval', help="evaluate one GPF integral")
    evaluate.add_argument('function', help="descriptor such as 'poly:1,0.5' or 'step:0.5@0.5,1.5'")
    evaluate.add_argument('--alpha', type=float, required=True)
    evaluate.add_argument('--p', type=float, default=1.0)
    evaluate.add_argument('--x', type=float, required=True, help="evaluation point (t for the right operator)")
    evaluate.add_argument('--side', choices=['left', 'right'], default='left')
    evaluate.add_argument('--b', type=float, help="upper terminal of the right operator")
    evaluate.set_defaults(handler=_cmd_eval)

    sharpness = commands.add_parser('sharpness', help="scan the half-interval step function")
    sharpness.add_argument('--count', type=int, default=9)
    sharpness.add_argument('--eps-min', type=float, default=0.1)
    sharpness.add_argument('--eps-max', type=float, default=0.9)
    sharpness.add_argument('--out', default='reports/sharpness.csv')
    sharpness.set_defaults(handler=_cmd_sharpness)

    summarize = commands.add_parser('summarize', help="aggregate a report file per inequality")
    summarize.add_argument('report')
    summarize.add_argument('--config', help="configuration with the latex table style")
    summarize.add_argument('--status', action='append', help="keep only this status (repeatable)")
    summarize.add_argument('--inequality', action='append', help="keep only this inequality id (repeatable)")
    summarize.add_argument('--margin-below', type=float, help="keep only cases whose relative margin is below this value")
    summarize.add_argument('--latex', action='store_true')
    summarize.set_defaults(handler=_cmd_summarize)
    return parser


def main(argv=None):
    """Run one command and return its exit code"""
    setup_logging()
    try:
        args = build_parser().parse_args(argv)
        return args.handler(args)
    except (ConfigError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except GPFError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


def cli():
    sys.exit(main())
