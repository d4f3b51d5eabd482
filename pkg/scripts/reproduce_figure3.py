"""Single-pass substrate populations and errors at eta = pi/4, N = 3."""

import argparse

from qhomog.scenarios import export, plotting, runner

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--gamma", type=float, default=0.1)
parser.add_argument("--out", default="results/figure3")
args = parser.parse_args()

result = runner.run_figure3(gamma=args.gamma)
for cfg, trace in result.records:
    print(f"{cfg.direction}:")
    for k, (p, eps) in enumerate(zip(trace.populations(), trace.errors)):
        print(f"  k={k}  rho00={p[0]:.6f}  rho11={p[1]:.6f}  eps={eps:.6f}")
export.export(result, args.out)
plotting.plot(result, args.out)
