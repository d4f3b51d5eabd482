"""
Tabulate delta_n over N for both tasks, to see where the finite-size
trends hold and where they break.
"""

import argparse

import numpy as np

from qhomog.constructor import deterioration_series
from qhomog.homogeniser import T, T_TRANSPOSE, TaskSpec, epsilon_N, collision_recursion_oracle

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--eta", type=float, default=0.12)
parser.add_argument("--N", type=int, nargs="+", default=list(range(2, 9)))
parser.add_argument("--n-max", type=int, default=50)
parser.add_argument("--mode", default="entangled")
args = parser.parse_args()

for direction in (T, T_TRANSPOSE):
    task = TaskSpec.pure_to_mixed(0.0, direction)
    eps = [epsilon_N(collision_recursion_oracle(task, N, args.eta)) for N in range(1, 11)]
    print(f"{direction}: eps_N for N=1..10:", " ".join(f"{e:.4g}" for e in eps), f"(eps_10/eps_1 = {eps[-1] / eps[0]:.3g})")
    table = np.array([deterioration_series(task, N, args.eta, args.n_max, args.mode).delta for N in args.N])
    print(f"{'n':>4s} " + " ".join(f"N={N:<7d}" for N in args.N))
    for n in sorted({1, 2, 5, 10, 20, 30, 40, 45, 46, 47, 50} & set(range(1, args.n_max + 1))):
        print(f"{n:4d} " + " ".join(f"{d:9.6f}" for d in table[:, n - 1]))
    print("delta(n_max)/delta(1):", " ".join(f"{r:.3f}" for r in table[:, -1] / table[:, 0]))
    print()
