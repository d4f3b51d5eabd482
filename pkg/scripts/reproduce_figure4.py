"""Relative deterioration curves for eta = 0.3 and 0.12 in all three theory modes."""

import argparse

from qhomog.scenarios import export, plotting, runner

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--N", type=int, nargs="+", default=list(runner.FIGURE4_N_LIST))
parser.add_argument("--n-max", type=int, default=runner.FIGURE4_N_MAX)
parser.add_argument("--workers", type=int, default=1)
parser.add_argument("--out", default="results/figure4")
args = parser.parse_args()

result = runner.run_figure4(N_list=args.N, n_max=args.n_max, workers=args.workers)
for cfg, series in result.records:
    print(f"{cfg.scenario_id:48s} delta(1)={series.delta[0]:.5f} delta({series.n[-1]})={series.delta[-1]:.5f}")
export.export(result, args.out)
plotting.plot(result, args.out)
