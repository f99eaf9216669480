#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
orderproc Command Line Interface (cli)

Report lines on stdout start with PASS / FAIL / VALUE; logs go to stderr.
Exit codes: 0 success or passed check, 1 failed check, 2 usage or format error.
"""
import argparse
import importlib.metadata
import logging
import math
import pathlib
import sys
from typing import List, Optional

import coloredlogs
import numpy as np
from tqdm import tqdm

try:
    __version__ = importlib.metadata.version('orderproc')
except importlib.metadata.PackageNotFoundError:
    __version__ = 'unknown'

__header__ = f"""
orderproc: algebra and probability of order processes.
Version: {__version__}
"""

from orderproc import checks
from orderproc.canon_semigroup import add, classes, g, random_permutation
from orderproc.exceptions import ConstraintViolation, InvalidModel, OrderProcError
from orderproc.hereditary import HereditaryFamily, cover_witnesses, covers
from orderproc.main import OrderProc
from orderproc.measures.completion_measure import CompletionMeasure
from orderproc.opz import MODES, dumps_opz, load_dag, load_model_config, load_opz, save_opz
from orderproc.order_process import evaluate, join_all, leq

logger = logging.getLogger('orderproc.cli')


def _print_opz(z, out: Optional[str], comment: str = None):
    if out is not None:
        save_opz(z, out, comment)
        print(f"VALUE saved {out}")
    else:
        print(dumps_opz(z, comment), end='')


def _evaluator(model, args):
    if getattr(args, 'n', None):
        return OrderProc.mc_evaluator(model, args.n, args.seed, streams=args.streams)
    return OrderProc.exact_evaluator(model)


def _out_dir(path: str) -> pathlib.Path:
    folder = pathlib.Path(path).absolute()
    if not folder.exists():
        logger.info(f"[+] Creating folder: {folder}")
        folder.mkdir(parents=True, exist_ok=True)
    return folder


def cmd_validate(args) -> int:
    try:
        z = load_opz(args.file, args.mode)
    except ConstraintViolation as e:
        print(f"FAIL validate {e}")
        return 1
    print(f"PASS validate pairs={len(z)}")
    return 0


def cmd_eval(args) -> int:
    if not math.isfinite(args.t) or args.t < 0:
        raise ValueError(f"--t must be a finite time >= 0, got {args.t!r}")
    relation = evaluate(load_opz(args.file, args.mode), args.t)
    pairs = ' '.join(f"({j},{k})" for j, k in sorted(relation.pairs))
    print(f"VALUE t={args.t!r} pairs=[{pairs}]")
    return 0


def cmd_join(args) -> int:
    _print_opz(join_all(load_opz(f, args.mode) for f in args.files), args.out)
    return 0


def cmd_leq(args) -> int:
    result = leq(load_opz(args.a, args.mode), load_opz(args.b, args.mode))
    print('true' if result else 'false')
    return 0


def cmd_canon(args) -> int:
    processes = [load_opz(f, args.mode) for f in args.files]
    for path, iso in zip(args.files, classes(processes, args.max_support)):
        print(dumps_opz(iso.rep, comment=f"class of {path}"), end='')
    return 0


def cmd_add(args) -> int:
    a = g(load_opz(args.a, args.mode), args.max_support)
    b = g(load_opz(args.b, args.mode), args.max_support)
    _print_opz(add(a, b, args.max_support).rep, args.out)
    return 0


def cmd_witnesses(args) -> int:
    z = load_opz(args.z, args.mode)
    fam = HereditaryFamily(tuple(load_opz(f, args.mode) for f in args.gen))
    witnesses = cover_witnesses(z, fam, args.eps)
    print(f"VALUE witnesses {len(witnesses)}")
    if args.out_dir is not None:
        folder = _out_dir(args.out_dir)
        for i, w in enumerate(witnesses):
            save_opz(w, folder / f"witness_{i:03d}.opz", comment=f"cover witness {i}, eps={args.eps!r}")
    else:
        for i, w in enumerate(witnesses):
            print(dumps_opz(w, comment=f"cover witness {i}"), end='')
    ok = covers(z, witnesses, args.eps)
    print(f"{'PASS' if ok else 'FAIL'} covers eps={args.eps!r}")
    return 0 if ok else 1


def cmd_sample(args) -> int:
    model = load_model_config(args.model)
    if args.count == 1:
        _print_opz(OrderProc.sample(model, args.seed), args.out)
        return 0
    if args.out_dir is None:
        raise InvalidModel("--count > 1 needs --out-dir")
    folder = _out_dir(args.out_dir)
    children = np.random.SeedSequence(args.seed).spawn(args.count)
    for i, child in enumerate(tqdm(children, unit=' samples', disable=not args.progress)):
        save_opz(model.sample(child), folder / f"sample_{i:04d}.opz", comment=f"seed {args.seed} sample {i}")
    print(f"VALUE samples {args.count}")
    return 0


def cmd_estimate(args) -> int:
    model = load_model_config(args.model)
    z = load_opz(args.z, args.mode)
    if args.exact:
        estimate = OrderProc.phi_exact(model, z)
    else:
        estimate = OrderProc.estimate_phi(model, z, args.n, args.seed, streams=args.streams, workers=args.workers)
    print(f"VALUE value {estimate.value!r}")
    print(f"VALUE stderr {estimate.stderr!r}")
    print(f"VALUE n {estimate.n}")
    return 0


def cmd_simulate_jobs(args) -> int:
    template = load_model_config(args.model)
    if not isinstance(template, CompletionMeasure):
        raise InvalidModel("simulate-jobs needs a `completion` model config")
    config = dict(template.model_config, base='dag', dag_edges=load_dag(args.dag))
    model = OrderProc.create_model('completion', config)
    folder = _out_dir(args.out_dir)
    children = np.random.SeedSequence(args.seed).spawn(args.count)
    makespans = []
    for i, child in enumerate(tqdm(children, unit=' runs', disable=not args.progress)):
        z = model.sample(child)
        makespans.append(max(z.times.values(), default=0.0))
        save_opz(z, folder / f"jobs_{i:04d}.opz", comment=f"seed {args.seed} run {i}")
    print(f"VALUE runs {args.count}")
    print(f"VALUE mean_last_switch {float(np.mean(makespans))!r}")
    return 0


def cmd_check(args) -> int:
    if args.check == 'converge':
        models = [load_model_config(m) for m in args.models]
        limit = load_model_config(args.limit)
        zs = [load_opz(f, args.mode) for f in args.z]
        report = checks.convergence_diag([_evaluator(m, args) for m in models], _evaluator(limit, args), zs,
                                         tol=args.tol)
    else:
        model = load_model_config(args.model)
        phi = _evaluator(model, args)
        pairs = [(load_opz(a, args.mode), load_opz(b, args.mode)) for a, b in (args.pair or [])]
        zs = [load_opz(f, args.mode) for f in (args.z or [])]
        if args.check == 'pd':
            report = checks.check_positive_definite(phi, zs, tol=args.tol)
        elif args.check == 'exch':
            rng = np.random.default_rng(args.seed)
            perms = [random_permutation(range(model.window), rng) for _ in range(args.perms)]
            report = checks.check_exchangeable(phi, zs, perms)
        elif args.check == 'indep':
            report = checks.check_independent(phi, pairs)
        elif args.check == 'monotone':
            report = checks.check_monotone(phi, pairs)
        else:
            if len(zs) != 1:
                raise InvalidModel("check cont takes exactly one --z")
            bound = model.continuity_bound(zs[0], args.eps[-1])
            report = checks.check_below_continuity(phi, zs[0], args.eps, bound=bound)
    print(report.render())
    return 0 if report.passed else 1


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='orderproc', description=__header__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='count', default=0, help="-v for INFO, -vv for DEBUG logs")
    parser.add_argument('--mode', choices=MODES, default='strict',
                        help="How OPZ inputs are read: `strict` validates, `close` takes the minimax closure")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('validate', help="Check the max-triangle constraint of an OPZ file")
    p.add_argument('file')
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser('eval', help="Print the partial order Y(t)")
    p.add_argument('file')
    p.add_argument('--t', type=float, required=True, help="Finite time >= 0")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser('join', help="Join of order processes")
    p.add_argument('files', nargs='+')
    p.add_argument('-o', '--out', default=None)
    p.set_defaults(func=cmd_join)

    p = sub.add_parser('leq', help="Whether A <= B")
    p.add_argument('a')
    p.add_argument('b')
    p.set_defaults(func=cmd_leq)

    for name, func, help_text in (('canon', cmd_canon, "Canonical representative of the isomorphy class"),
                                  ('add', cmd_add, "Sum of two isomorphy classes")):
        p = sub.add_parser(name, help=help_text)
        if name == 'canon':
            p.add_argument('files', nargs='+')
        else:
            p.add_argument('a')
            p.add_argument('b')
            p.add_argument('-o', '--out', default=None)
        p.add_argument('--max-support', type=int, default=None, help="Brute-force canonicalization bound")
        p.set_defaults(func=func)

    p = sub.add_parser('witnesses', help="Finite covering witnesses of a member of a hereditary family")
    p.add_argument('z')
    p.add_argument('--gen', nargs='*', default=[], help="Generators of the family")
    p.add_argument('--eps', type=float, required=True)
    p.add_argument('--out-dir', default=None)
    p.set_defaults(func=cmd_witnesses)

    p = sub.add_parser('sample', help="Draw order processes from a model")
    p.add_argument('--model', required=True, help="ModelConfig file")
    p.add_argument('--seed', type=int, required=True)
    p.add_argument('--count', type=int, default=1)
    p.add_argument('-o', '--out', default=None)
    p.add_argument('--out-dir', default=None)
    p.add_argument('--progress', action='store_true')
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser('estimate', help="Estimate phi(Z) = mu(Q_Z)")
    p.add_argument('--model', required=True)
    p.add_argument('--z', required=True)
    p.add_argument('--n', type=int, default=100_000)
    p.add_argument('--seed', type=int, required=True)
    p.add_argument('--streams', type=int, default=1)
    p.add_argument('--workers', type=int, default=1)
    p.add_argument('--exact', action='store_true', help="Closed form instead of Monte Carlo")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser('simulate-jobs', help="Sample completed-job order processes of a precedence DAG")
    p.add_argument('--dag', required=True, help="File of `d j k` lines")
    p.add_argument('--model', required=True, help="completion ModelConfig (durations, window)")
    p.add_argument('--count', type=int, default=1)
    p.add_argument('--seed', type=int, required=True)
    p.add_argument('--out-dir', required=True)
    p.add_argument('--progress', action='store_true')
    p.set_defaults(func=cmd_simulate_jobs)

    p = sub.add_parser('check', help="Statistical checks of phi")
    p.add_argument('check', choices=['pd', 'exch', 'indep', 'monotone', 'cont', 'converge'])
    p.add_argument('--model', help="ModelConfig file")
    p.add_argument('--models', nargs='+', default=[], help="Sequence of ModelConfig files (converge)")
    p.add_argument('--limit', help="Limit ModelConfig file (converge)")
    p.add_argument('--z', nargs='+', default=[], help="Test processes")
    p.add_argument('--pair', nargs=2, action='append', metavar=('A', 'B'), help="Pair of test processes")
    p.add_argument('--eps', type=float, nargs='+', default=[0.1, 0.01, 0.001])
    p.add_argument('--perms', type=int, default=20, help="Random window permutations (exch)")
    p.add_argument('--tol', type=float, default=None)
    p.add_argument('--n', type=int, default=None, help="Monte Carlo samples; exact evaluation when omitted")
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--streams', type=int, default=1)
    p.set_defaults(func=cmd_check)
    return parser


def run_cli(argv: List[str] = None) -> int:
    """
    Runs one command

    :param argv: arguments without the program name, defaults to `sys.argv[1:]`

    :return: exit code
    """
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    coloredlogs.install(level=[logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)],
                        stream=sys.stderr)
    if args.command == 'check':
        if args.tol is None:
            args.tol = 1e-9 if args.check == 'pd' else 1e-2
        if args.check == 'converge' and (not args.models or args.limit is None):
            print("orderproc: check converge needs --models and --limit", file=sys.stderr)
            return 2
        if args.check != 'converge' and args.model is None:
            print(f"orderproc: check {args.check} needs --model", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except (OrderProcError, OSError, ValueError) as e:
        print(f"orderproc: error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run_cli())


if __name__ == '__main__':
    main()
