"""
Scenario configuration and the sweep file format.

Sweep files are flat ``key = value[, value ...]`` lines. ``#`` starts a
comment. List-valued keys expand into a Cartesian product:

    eta       = 0.12, 0.3, pi/4     # floats, or pi, pi/k, k*pi
    N         = 2, 3, 4
    n_max     = 50
    gamma     = 0
    direction = T, T_transpose
    mode      = entangled, separable, diagonal_correlated, analytic_approx
    epsilon_convention = pristine    # or per_usage
    seed      = 0
    capacity_cap = 11

``eta`` and ``N`` are required. Other list keys default to
n_max=50, gamma=0, direction=T,T_transpose, mode=entangled. A list key
given with no values yields an empty sweep.
"""

import itertools
import math
import re
from dataclasses import dataclass

from qhomog.constructor import EpsilonConvention, RestMode
from qhomog.homogeniser import DIRECTIONS, check_eta
from qhomog.linalg import DEFAULT_MAX_QUBITS


class ConfigError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ScenarioConfig:
    eta: float
    N: int
    n_max: int = 50
    gamma: float = 0.0
    direction: str = "T"
    mode: str = RestMode.ENTANGLED.value
    epsilon_convention: str = EpsilonConvention.PRISTINE.value
    seed: int = 0
    capacity_cap: int = DEFAULT_MAX_QUBITS

    def __post_init__(self):
        check_eta(self.eta)
        if self.N < 1:
            raise ConfigError(f"N must be >= 1, got {self.N}")
        if self.n_max < 1:
            raise ConfigError(f"n_max must be >= 1, got {self.n_max}")
        if not 0.0 <= self.gamma <= 1.0:
            raise ConfigError(f"gamma must be in [0, 1], got {self.gamma}")
        if self.direction not in DIRECTIONS:
            raise ConfigError(f"direction must be one of {DIRECTIONS}, got {self.direction!r}")
        RestMode(self.mode)
        EpsilonConvention(self.epsilon_convention)

    @property
    def scenario_id(self):
        return f"{self.direction}_{self.mode}_eta{self.eta:.12g}_N{self.N}_g{self.gamma:.12g}"


LIST_KEYS = ("eta", "N", "n_max", "gamma", "direction", "mode")
SCALAR_KEYS = ("epsilon_convention", "seed", "capacity_cap")
DEFAULTS = {"n_max": [50], "gamma": [0.0], "direction": list(DIRECTIONS), "mode": ["entangled"]}

_PI = re.compile(r"^(?:(?P<mul>[0-9.]+)\s*\*\s*)?pi(?:\s*/\s*(?P<div>[0-9.]+))?$")


def parse_real(token):
    token = token.strip()
    m = _PI.match(token)
    if m:
        value = math.pi * float(m.group("mul") or 1)
        return value / float(m.group("div") or 1)
    return float(token)


def _convert(key, token):
    if key == "eta" or key == "gamma":
        return parse_real(token)
    if key in ("N", "n_max", "seed", "capacity_cap"):
        return int(token)
    if key == "direction":
        if token not in DIRECTIONS:
            raise ValueError(f"expected one of {DIRECTIONS}")
        return token
    if key == "mode":
        return RestMode(token).value
    if key == "epsilon_convention":
        return EpsilonConvention(token).value
    raise KeyError(key)


def parse_sweep_text(text):
    """Return (list-valued parameters, scalar parameters) from sweep file text."""
    lists, scalars = {}, {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        key, _, value = (part.strip() for part in line.partition("="))
        if key not in LIST_KEYS and key not in SCALAR_KEYS:
            raise ConfigError(f"line {lineno}: unknown field {key!r}")
        if key in lists or key in scalars:
            raise ConfigError(f"line {lineno}: field {key!r} given twice")
        tokens = [t.strip() for t in value.split(",") if t.strip()]
        try:
            converted = [_convert(key, t) for t in tokens]
        except (ValueError, KeyError) as exc:
            raise ConfigError(f"line {lineno}: bad value for field {key!r}: {exc}") from None
        if key in SCALAR_KEYS:
            if len(converted) != 1:
                raise ConfigError(f"line {lineno}: field {key!r} takes exactly one value")
            scalars[key] = converted[0]
        else:
            lists[key] = converted
    for key in ("eta", "N"):
        if key not in lists:
            raise ConfigError(f"missing required field {key!r}")
    for key, default in DEFAULTS.items():
        lists.setdefault(key, default)
    return lists, scalars


def expand(lists, scalars):
    """Cartesian product of list values, sorted by config field order."""
    points = []
    for combo in itertools.product(*(lists[k] for k in LIST_KEYS)):
        kwargs = dict(zip(LIST_KEYS, combo), **scalars)
        try:
            points.append(ScenarioConfig(**kwargs))
        except ValueError as exc:
            raise ConfigError(f"invalid point {kwargs}: {exc}") from None
    return sorted(set(points))


def load_sweep(path, defaults=None):
    """Sweep points from a file; ``defaults`` fill scalar keys the file omits."""
    with open(path) as fh:
        text = fh.read()
    lists, scalars = parse_sweep_text(text)
    for key, value in (defaults or {}).items():
        scalars.setdefault(key, value)
    return expand(lists, scalars)
