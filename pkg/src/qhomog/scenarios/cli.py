"""Command-line entry point: ``qhomog figure3|figure4|sweep|selftest``."""

import argparse
import sys

from qhomog.linalg import DEFAULT_MAX_QUBITS, CapacityError
from qhomog.scenarios import export as export_mod
from qhomog.scenarios import plotting, runner, selftest
from qhomog.scenarios.config import parse_real

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_CAPACITY, EXIT_IO = 0, 1, 2, 3, 4


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default="out", help="output directory")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--plot", action="store_true", help="also write an SVG figure")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--cap", type=int, default=DEFAULT_MAX_QUBITS, help="max qubits per register")

    parser = argparse.ArgumentParser(prog="qhomog", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    f3 = sub.add_parser("figure3", parents=[common], help="single pass at eta=pi/4, N=3")
    f3.add_argument("--gamma", type=float, default=0.1)

    f4 = sub.add_parser("figure4", parents=[common], help="relative deterioration vs usages")
    f4.add_argument("--eta", type=parse_real, nargs="+", default=list(runner.FIGURE4_ETAS))
    f4.add_argument("--N", type=int, nargs="+", default=list(runner.FIGURE4_N_LIST), dest="N_list")
    f4.add_argument("--n-max", type=int, default=runner.FIGURE4_N_MAX)
    f4.add_argument("--modes", nargs="+", default=list(runner.FIGURE4_MODES))
    f4.add_argument("--gamma", type=float, default=0.0)

    sw = sub.add_parser("sweep", parents=[common], help="Cartesian sweep from a config file")
    sw.add_argument("config")

    st = sub.add_parser("selftest", help="oracle-agreement and invariant checks")
    st.add_argument("--seed", type=int, default=0)
    return parser


def run(args):
    if args.command == "selftest":
        return EXIT_OK if selftest.run(args.seed) else EXIT_FAIL
    if args.command == "figure3":
        result = runner.run_figure3(gamma=args.gamma, capacity_cap=args.cap)
    elif args.command == "figure4":
        result = runner.run_figure4(args.eta, args.N_list, args.n_max, args.modes, args.gamma,
                                    workers=args.workers, capacity_cap=args.cap)
    else:
        result = runner.run_sweep(args.config, workers=args.workers, capacity_cap=args.cap)
    for path in export_mod.export(result, args.out, args.format):
        print(path)
    if args.plot:
        if result.records:
            print(plotting.plot(result, args.out))
        else:
            print("nothing to plot: empty result", file=sys.stderr)
    return EXIT_OK


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
