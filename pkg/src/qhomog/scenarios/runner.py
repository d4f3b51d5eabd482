"""Figure presets and parameter sweeps."""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone

import numpy as np

from qhomog import __version__
from qhomog.constructor import RestMode, deterioration_series
from qhomog.homogeniser import T, T_TRANSPOSE, TaskSpec, single_pass
from qhomog.scenarios.config import ScenarioConfig, load_sweep

FIGURE3_ETA = np.pi / 4
FIGURE3_N = 3
FIGURE4_ETAS = (0.3, 0.12)
FIGURE4_N_LIST = (2, 3, 4, 5, 6, 7, 8)
FIGURE4_N_MAX = 50
FIGURE4_MODES = (RestMode.ENTANGLED.value, RestMode.SEPARABLE.value, RestMode.ANALYTIC_APPROX.value)


@dataclass
class SweepResult:
    """``records`` holds (ScenarioConfig, UsageSeries | CollisionTrace) pairs."""

    kind: str
    records: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.records)


def _metadata(kind, started):
    return {
        "tool": "qhomog",
        "version": __version__,
        "kind": kind,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "wall_time_s": round(time.perf_counter() - started, 6),
    }


def task_for(cfg):
    return TaskSpec.pure_to_mixed(cfg.gamma, cfg.direction)


def run_point(cfg):
    return deterioration_series(task_for(cfg), cfg.N, cfg.eta, cfg.n_max, cfg.mode,
                                cfg.epsilon_convention, max_qubits=cfg.capacity_cap)


def run_points(points, workers=1):
    """Evaluate every config point; output order always matches ``points``."""
    points = list(points)
    if workers > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            payloads = list(pool.map(run_point, points))
    else:
        payloads = [run_point(p) for p in points]
    return list(zip(points, payloads))


def run_figure3(gamma=0.1, eta=FIGURE3_ETA, N=FIGURE3_N, capacity_cap=None):
    """Single pass for T (pure -> mixed) and its transpose at eta = pi/4, N = 3."""
    started = time.perf_counter()
    result = SweepResult("figure3")
    for direction in (T, T_TRANSPOSE):
        kwargs = {} if capacity_cap is None else {"capacity_cap": capacity_cap}
        cfg = ScenarioConfig(eta=eta, N=N, n_max=1, gamma=gamma, direction=direction, **kwargs)
        trace = single_pass(task_for(cfg), N, eta, max_qubits=cfg.capacity_cap)
        result.records.append((cfg, trace))
    result.metadata = _metadata("figure3", started)
    return result


def figure4_points(etas=FIGURE4_ETAS, N_list=FIGURE4_N_LIST, n_max=FIGURE4_N_MAX,
                   modes=FIGURE4_MODES, gamma=0.0, **extra):
    points = [
        ScenarioConfig(eta=eta, N=N, n_max=n_max, gamma=gamma, direction=d, mode=mode, **extra)
        for eta in etas for d in (T, T_TRANSPOSE) for mode in modes for N in N_list
    ]
    return points


def run_figure4(etas=FIGURE4_ETAS, N_list=FIGURE4_N_LIST, n_max=FIGURE4_N_MAX,
                modes=FIGURE4_MODES, gamma=0.0, workers=1, **extra):
    started = time.perf_counter()
    points = figure4_points(etas, N_list, n_max, modes, gamma, **extra)
    result = SweepResult("figure4", run_points(points, workers))
    result.metadata = _metadata("figure4", started)
    return result


def run_sweep(config_file, workers=1, capacity_cap=None):
    started = time.perf_counter()
    defaults = {} if capacity_cap is None else {"capacity_cap": capacity_cap}
    points = load_sweep(config_file, defaults)
    result = SweepResult("sweep", run_points(points, workers))
    result.metadata = _metadata("sweep", started)
    return result
