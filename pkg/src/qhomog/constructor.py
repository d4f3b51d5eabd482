"""
Repeated use of a homogenisation machine: rest-state evolution across
usages, steadiness, relative deterioration, and the accuracy-ball test.
"""

import dataclasses
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from qhomog import linalg
from qhomog.homogeniser import check_eta, collide_all, single_pass, epsilon_N

DELTA_CAP = 1e6


class RestMode(str, Enum):
    """How the rest state is carried from one usage to the next."""

    ENTANGLED = "entangled"
    SEPARABLE = "separable"
    DIAGONAL_CORRELATED = "diagonal_correlated"
    ANALYTIC_APPROX = "analytic_approx"


class EpsilonConvention(str, Enum):
    # pristine: the machine's single-use error from its initial rest state
    PRISTINE = "pristine"
    # per_usage: the substrate error actually achieved at usage n
    PER_USAGE = "per_usage"


class UnsupportedModeError(ValueError):
    pass


@dataclass(frozen=True)
class MachineState:
    N: int
    rho_R: np.ndarray
    rho_R_initial: np.ndarray
    mode: RestMode
    usages: int = 0


@dataclass
class UsageSeries:
    """Per-usage record for n = 1..n_max."""

    n: list = field(default_factory=list)
    epsilon: list = field(default_factory=list)
    substrate_error: list = field(default_factory=list)
    steadiness: list = field(default_factory=list)
    delta: list = field(default_factory=list)

    def append(self, n, epsilon, substrate_error, steadiness):
        self.n.append(n)
        self.epsilon.append(epsilon)
        self.substrate_error.append(substrate_error)
        self.steadiness.append(steadiness)
        self.delta.append(relative_deterioration(epsilon, steadiness))

    def __len__(self):
        return len(self.n)


def make_machine(task, N, mode=RestMode.ENTANGLED, max_qubits=None):
    if N < 1:
        raise ValueError("N must be at least 1")
    # the joint register during a usage carries the substrate as well
    linalg.check_capacity(N + 1, max_qubits)
    rest = linalg.tensor_power(task.rho_y, N, max_qubits)
    return MachineState(N, rest, rest, RestMode(mode), 0)


def separable_projection(rho):
    """Product of the single-qubit marginals."""
    out = np.ones((1, 1), dtype=complex)
    # unnormalized factors would compound trace drift as (1 + err)**N per usage
    for m in linalg.marginals(rho):
        out = np.kron(out, m / np.trace(m).real)
    return out


def dephase(rho):
    """Keep the computational-basis diagonal, drop all coherences."""
    return np.diag(np.diag(rho))


def prepared_rest(m):
    """
    Rest state handed to the next usage.

    The pristine machine is used as built; afterwards separable mode keeps
    only the product of single-qubit marginals and diagonal_correlated mode
    keeps only the computational-basis populations.
    """
    mode = RestMode(m.mode)
    if m.usages == 0 or mode is RestMode.ENTANGLED:
        return m.rho_R
    if mode is RestMode.SEPARABLE:
        return separable_projection(m.rho_R)
    if mode is RestMode.DIAGONAL_CORRELATED:
        rest = dephase(m.rho_R)
        return rest / np.trace(rest).real
    raise UnsupportedModeError(f"{mode.value} machines are not evolved; use deterioration_series")


def use_machine(m, task, eta, max_qubits=None):
    """
    One usage: fresh substrate in rho_x, collide with rest qubits 1..N,
    trace the substrate out. Returns (new machine, substrate output).

    ``rho_R`` of the returned machine is the exact post-usage rest state;
    the mode only changes how it is re-prepared for the following usage.
    """
    eta = check_eta(eta)
    if RestMode(m.mode) is RestMode.ANALYTIC_APPROX:
        raise UnsupportedModeError("analytic_approx machines are not evolved; use deterioration_series")
    joint = linalg.tensor(task.rho_x, prepared_rest(m), max_qubits)
    joint = collide_all(joint, eta)
    substrate = linalg.partial_trace(joint, [0])
    rest = linalg.hermitize(linalg.partial_trace(joint, range(1, m.N + 1)))
    return dataclasses.replace(m, rho_R=rest, usages=m.usages + 1), substrate


def steadiness(m):
    """
    Fidelity between the initial and current rest state.

    Evaluated at the canonical preparation rho_y^{(x)N} rather than as an
    infimum over every rest state that performs the task.
    """
    if m.usages == 0:
        return 1.0
    return linalg.fidelity(m.rho_R_initial, m.rho_R)


def relative_deterioration(epsilon, S_n):
    if S_n <= 0.0:
        return float("inf")
    return epsilon / S_n


def deterioration_series(task, N, eta, n_max, mode=RestMode.ENTANGLED,
                         epsilon_convention=EpsilonConvention.PRISTINE, max_qubits=None):
    """Steadiness and relative deterioration for usages n = 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    mode = RestMode(mode)
    convention = EpsilonConvention(epsilon_convention)
    eps_pristine = epsilon_N(single_pass(task, N, eta, max_qubits))
    series = UsageSeries()

    if mode is RestMode.ANALYTIC_APPROX:
        # S(n) = S(1)**n; S(1) from one exact usage with the outgoing rest
        # replaced by the product of its single-qubit marginals
        exact = make_machine(task, N, RestMode.ENTANGLED, max_qubits)
        exact, out = use_machine(exact, task, eta, max_qubits)
        s1 = linalg.fidelity(exact.rho_R_initial, separable_projection(exact.rho_R))
        err = 1.0 - linalg.fidelity(out, task.rho_y)
        for n in range(1, n_max + 1):
            eps = eps_pristine if convention is EpsilonConvention.PRISTINE else err
            series.append(n, eps, err, s1**n)
        return series

    m = make_machine(task, N, mode, max_qubits)
    for n in range(1, n_max + 1):
        m, out = use_machine(m, task, eta, max_qubits)
        err = 1.0 - linalg.fidelity(out, task.rho_y)
        eps = eps_pristine if convention is EpsilonConvention.PRISTINE else err
        series.append(n, eps, err, steadiness(m))
    return series


def v_epsilon_membership(task, rest, eta, epsilon):
    """True if one pass starting from ``rest`` lands in the epsilon-ball around rho_y."""
    joint = linalg.tensor(task.rho_x, rest)
    joint = collide_all(joint, check_eta(eta))
    out = linalg.partial_trace(joint, [0])
    return linalg.fidelity(task.rho_y, out) >= 1.0 - epsilon
