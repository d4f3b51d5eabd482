"""Randomized oracle-agreement and invariant checks, runnable without pytest."""

import numpy as np

from qhomog import linalg
from qhomog.homogeniser import (TaskSpec, apply_partial_swap, collision_recursion_oracle,
                                single_pass)


def random_task(rng, diagonal):
    if diagonal:
        p, q = rng.uniform(size=2)
        return TaskSpec(np.diag([p, 1 - p]).astype(complex), np.diag([q, 1 - q]).astype(complex))
    return TaskSpec(linalg.random_density_matrix(1, rng), linalg.random_density_matrix(1, rng))


def oracle_agreement(rng, trials=100, max_N=6):
    worst = 0.0
    for i in range(trials):
        task = random_task(rng, diagonal=i % 2 == 0)
        N = int(rng.integers(1, max_N + 1))
        eta = float(rng.uniform(0, np.pi / 2))
        a = single_pass(task, N, eta).marginals
        b = collision_recursion_oracle(task, N, eta).marginals
        worst = max(worst, max(np.max(np.abs(x - y)) for x, y in zip(a, b)))
    return worst


def fidelity_checks(rng, trials=200):
    worst = 0.0
    for _ in range(trials):
        nq = int(rng.integers(1, 4))
        a = linalg.random_density_matrix(nq, rng)
        b = linalg.random_density_matrix(nq, rng)
        psi = linalg.random_pure_state(nq, rng)
        pure = np.real(np.vdot(psi, b @ psi))
        worst = max(worst,
                    abs(linalg.fidelity(a, b) - linalg.fidelity(b, a)),
                    abs(linalg.fidelity(linalg.ket_to_dm(psi), b) - pure),
                    abs(linalg.fidelity(a, a) - 1))
    return worst


def partial_trace_checks(rng, trials=200):
    worst = 0.0
    for _ in range(trials):
        na, nb = rng.integers(1, 3, size=2)
        a = linalg.random_density_matrix(int(na), rng)
        b = linalg.random_density_matrix(int(nb), rng)
        back = linalg.partial_trace(linalg.tensor(a, b), range(int(na)))
        root = linalg.sqrt_psd(a)
        worst = max(worst, np.max(np.abs(back - a)), np.max(np.abs(root @ root - a)))
    return worst


def purity_checks(rng, trials=200):
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(2, 5))
        rho = linalg.random_density_matrix(n, rng)
        a, b = rng.choice(n, size=2, replace=False)
        out = apply_partial_swap(rho, a, b, rng.uniform(0, np.pi / 2))
        worst = max(worst, abs(linalg.purity(out) - linalg.purity(rho)))
    return worst


CHECKS = (
    ("oracle agreement (single_pass vs 2x2 recursion)", oracle_agreement, 1e-12),
    ("fidelity symmetry / pure-state formula / F(rho,rho)=1", fidelity_checks, 1e-10),
    ("partial-trace factorization / sqrt_psd squaring", partial_trace_checks, 1e-9),
    ("purity conservation per collision", purity_checks, 1e-9),
)


def run(seed=0, out=print):
    """Print one line per check; return True if all passed."""
    rng = np.random.default_rng(seed)
    ok = True
    for name, check, tol in CHECKS:
        worst = check(rng)
        passed = worst <= tol
        ok &= passed
        out(f"{'PASS' if passed else 'FAIL'}  {name}: max error {worst:.3e} (tol {tol:g})")
    return ok
