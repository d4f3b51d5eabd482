"""Static SVG figures for the figure-3 and figure-4 presets."""

import os

import numpy as np

from qhomog.homogeniser import T
from qhomog.scenarios.export import is_trace_result

LOG_RATIO = 100.0


def use_log_axis(values):
    """Log scale when the positive finite values span more than a factor 100."""
    v = np.asarray([x for x in values if np.isfinite(x) and x > 0])
    return v.size > 0 and v.max() / v.min() > LOG_RATIO


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.rcParams["svg.hashsalt"] = "qhomog"
    return plt


def plot_figure3(result, path):
    plt = _pyplot()
    fig, axes = plt.subplots(1, 3, figsize=(12, 3.6))
    for ax, (cfg, trace) in zip(axes[:2], result.records):
        pops = trace.populations()
        k = np.arange(len(pops))
        ax.bar(k - 0.2, pops[:, 0], width=0.4, label=r"$\rho_{00}$")
        ax.bar(k + 0.2, pops[:, 1], width=0.4, label=r"$\rho_{11}$")
        ax.set_title(cfg.direction)
        ax.set_xlabel("collision k")
        ax.set_ylim(0, 1)
        ax.legend()
    ax = axes[2]
    for cfg, trace in result.records:
        ax.plot(range(1, trace.N + 1), trace.errors[1:], marker="o", label=cfg.direction)
    ax.set_xlabel("collision k")
    ax.set_ylabel(r"$\epsilon_k$")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, metadata={"Date": None})
    plt.close(fig)
    return path


def plot_figure4(result, path):
    """One panel per eta, one curve per (direction, mode, N)."""
    plt = _pyplot()
    etas = sorted({cfg.eta for cfg, _ in result.records}, reverse=True)
    fig, axes = plt.subplots(1, len(etas), figsize=(6 * len(etas), 4.5), squeeze=False)
    styles = {"entangled": "-", "separable": "--", "analytic_approx": ":", "diagonal_correlated": "-."}
    n_curves = 0
    for ax, eta in zip(axes[0], etas):
        deltas = []
        for cfg, series in result.records:
            if cfg.eta != eta:
                continue
            color = "tab:orange" if cfg.direction == T else "tab:green"
            ax.plot(series.n, series.delta, styles.get(cfg.mode, "-"), color=color, alpha=0.4 + 0.6 / cfg.N,
                    label=f"{cfg.direction} {cfg.mode} N={cfg.N}")
            deltas.extend(series.delta)
            n_curves += 1
        if use_log_axis(deltas):
            ax.set_yscale("log")
        ax.set_title(f"eta = {eta:g}")
        ax.set_xlabel("usage n")
        ax.set_ylabel(r"$\delta(n)$")
        ax.legend(fontsize=5, ncol=2)
    fig.tight_layout()
    fig.savefig(path, metadata={"Date": None})
    plt.close(fig)
    return path, n_curves


def plot(result, out_dir):
    """Write ``<kind>.svg`` into ``out_dir`` and return its path."""
    if not result.records:
        raise ValueError("nothing to plot: the result has no records")
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"{result.kind}.svg")
    if is_trace_result(result):
        return plot_figure3(result, path)
    return plot_figure4(result, path)[0]
