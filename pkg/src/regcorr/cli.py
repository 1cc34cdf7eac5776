"""Command line front end: ``regcorr {table1,table2,certify,advise,selftest}``."""

import argparse
import sys
from dataclasses import dataclass
from typing import Optional

from . import report as rpt
from .certify import (TABLE_AS, TABLE_RHOS, Kind, NoQualifyingParameters, advise,
                      budget, certify, certify_double_layer, certify_single_layer)
from .partition import ParameterError, QuadParams
from .selftest import run_selftest

KINDS = {"single": Kind.SINGLE, "double": Kind.DOUBLE, "single-onsurface": Kind.SINGLE_ONSURFACE}


@dataclass
class RunConfig:
    command: str
    params: QuadParams
    kind: Kind = Kind.SINGLE
    maxidx: int = 2
    R: int = 2
    output_format: str = "text"
    output_path: Optional[str] = None


def _table(config, certifier):
    theta_deg = config.params.theta_deg
    return [certifier(QuadParams.from_degrees(rho, theta_deg, a))
            for a in TABLE_AS for rho in TABLE_RHOS]


def run_table1(config):
    return _table(config, lambda p: certify_single_layer(p, config.maxidx, config.R))


def run_table2(config):
    return _table(config, lambda p: certify_double_layer(p, config.R))


def render(reports, fmt, single=False):
    if fmt == "json":
        return rpt.to_json(reports[0] if single else reports)
    if fmt == "csv":
        return rpt.to_csv(reports)
    return rpt.to_text(reports)


def _write(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as f:
            f.write(text)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rho", type=float, default=2.0)
    common.add_argument("--theta-deg", type=float, default=70.0)
    common.add_argument("--a", type=float, default=1.0)
    common.add_argument("--kind", choices=sorted(KINDS), default="single")
    common.add_argument("--maxidx", type=int, default=2)
    common.add_argument("--R", type=int, default=2)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--target-eps", type=float)
    common.add_argument("--h", type=float)
    common.add_argument("--density-bound", type=float, default=1.0)

    parser = argparse.ArgumentParser(prog="regcorr", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("table1", parents=[common], help="single layer coefficients, a x rho grid")
    sub.add_parser("table2", parents=[common], help="double layer coefficients, a x rho grid")
    sub.add_parser("certify", parents=[common], help="one certified coefficient")
    sub.add_parser("advise", parents=[common], help="cheapest parameters meeting a target error")
    st = sub.add_parser("selftest", parents=[common], help="run the verification suites")
    st.add_argument("--inject-fault", action="store_true",
                    help="use a perturbed erfc to check that the suites catch it")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(
            command=args.command,
            params=QuadParams.from_degrees(args.rho, args.theta_deg, args.a),
            kind=KINDS[args.kind],
            maxidx=args.maxidx,
            R=args.R,
            output_format=args.format,
            output_path=args.out,
        )
        if args.command == "selftest":
            return _selftest(args.inject_fault)
        if args.command == "table1":
            text = render(run_table1(config), config.output_format)
        elif args.command == "table2":
            text = render(run_table2(config), config.output_format)
        elif args.command == "certify":
            r = certify(config.kind, config.params, config.maxidx, config.R)
            text = render([r], config.output_format, single=True)
            if args.h is not None and config.output_format == "text":
                b = budget(r, args.h, args.density_bound)
                text += f"neglected correction <= {b.neglected_correction:.3e}\n"
        else:
            if args.target_eps is None or args.h is None:
                parser.error("advise needs --target-eps and --h")
            params, r = advise(args.target_eps, args.h, args.density_bound,
                               config.kind, config.params.theta)
            text = render([r], config.output_format, single=True)
        _write(text, config.output_path)
    except NoQualifyingParameters as exc:
        print(f"regcorr: {exc}", file=sys.stderr)
        return 1
    except (ParameterError, ValueError, OSError) as exc:
        print(f"regcorr: error: {exc}", file=sys.stderr)
        return 2
    return 0


def _selftest(inject_fault):
    ok = True
    for res in run_selftest(inject_fault=inject_fault):
        status = "PASS" if res.passed else "FAIL"
        print(f"{status} {res.name}: {res.checks} checks, {len(res.failures)} failing groups")
        for f in res.failures:
            print(f"    {f}")
        ok &= res.passed
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
