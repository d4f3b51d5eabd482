"""
Partial-swap collisions and the single-pass homogenisation protocol.

A substrate qubit Q (register slot 0) meets N rest qubits (slots 1..N),
one at a time, through U = cos(eta) I + i sin(eta) SWAP.
"""

from dataclasses import dataclass, field

import numpy as np

from qhomog import linalg

T = "T"
T_TRANSPOSE = "T_transpose"
DIRECTIONS = (T, T_TRANSPOSE)


def check_eta(eta):
    eta = float(eta)
    if not 0.0 <= eta <= np.pi / 2 + 1e-15:
        raise ValueError(f"swap strength eta={eta} outside [0, pi/2]")
    return eta


def pure_state():
    return np.diag([1.0, 0.0]).astype(complex)


def mixed_state(gamma=0.0):
    """diag((1+gamma)/2, (1-gamma)/2); gamma=0 is maximally mixed."""
    gamma = float(gamma)
    if not 0.0 <= gamma <= 1.0:
        raise ValueError(f"gamma={gamma} outside [0, 1]")
    return np.diag([(1 + gamma) / 2, (1 - gamma) / 2]).astype(complex)


@dataclass(frozen=True)
class TaskSpec:
    """The task rho_x -> rho_y on one substrate qubit."""

    rho_x: np.ndarray
    rho_y: np.ndarray
    label: str = T

    def __post_init__(self):
        for rho in (self.rho_x, self.rho_y):
            if np.shape(rho) != (2, 2):
                raise linalg.ValidationError("task states must be single-qubit")
            linalg.validate(rho)
        if self.label not in DIRECTIONS:
            raise ValueError(f"unknown task label {self.label!r}")

    def transpose(self):
        other = T_TRANSPOSE if self.label == T else T
        return TaskSpec(self.rho_y, self.rho_x, other)

    @classmethod
    def pure_to_mixed(cls, gamma=0.0, direction=T):
        """|0><0| -> mixed_state(gamma), or its transpose."""
        task = cls(pure_state(), mixed_state(gamma), T)
        return task if direction == T else task.transpose()


@dataclass
class CollisionTrace:
    """Substrate marginals for k = 0..N and the error after each of them."""

    target: np.ndarray
    eta: float
    marginals: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    def record(self, rho_q):
        self.marginals.append(rho_q)
        self.errors.append(1.0 - linalg.fidelity(rho_q, self.target))

    @property
    def N(self):
        return len(self.marginals) - 1

    def populations(self):
        """(N+1, 2) array of rho00, rho11 per step."""
        return np.array([np.real(np.diag(m)) for m in self.marginals])


def apply_partial_swap(rho, a, b, eta):
    """
    U rho U^dag for the partial swap between qubits ``a`` and ``b``.

    Uses cos^2 rho + sin^2 S rho S + i cos sin (S rho - rho S) where each
    S is an axis swap on the (2,)*2n tensor view, so the full unitary is
    never built.
    """
    eta = check_eta(eta)
    n = linalg.num_qubits(rho)
    a, b = int(a), int(b)
    if a == b:
        raise ValueError("partial swap needs two distinct qubits")
    for q in (a, b):
        if not 0 <= q < n:
            raise IndexError(f"qubit {q} out of range for a {n}-qubit register")
    c, s = np.cos(eta), np.sin(eta)
    t = np.asarray(rho, dtype=complex).reshape([2] * (2 * n))
    left = np.swapaxes(t, a, b)  # S rho
    right = np.swapaxes(t, n + a, n + b)  # rho S
    both = np.swapaxes(left, n + a, n + b)  # S rho S
    out = c * c * t + s * s * both + 1j * c * s * (left - right)
    return linalg.hermitize(out.reshape(rho.shape))


def partial_swap_unitary(eta):
    """Dense 4x4 partial swap, for reference checks only."""
    swap = np.eye(4)[[0, 2, 1, 3]]
    return np.cos(eta) * np.eye(4) + 1j * np.sin(eta) * swap


def collide_all(rho, eta, on_step=None):
    """Apply U_{Q,1} ... U_{Q,N} in order; Q is qubit 0."""
    n = linalg.num_qubits(rho)
    for k in range(1, n):
        rho = apply_partial_swap(rho, 0, k, eta)
        if on_step is not None:
            on_step(k, rho)
    return rho


def single_pass(task, N, eta, max_qubits=None):
    """Run the substrate through a fresh machine rho_y^{(x)N}, tracking every step."""
    eta = check_eta(eta)
    if N < 1:
        raise ValueError("N must be at least 1")
    linalg.check_capacity(N + 1, max_qubits)
    rest = linalg.tensor_power(task.rho_y, N, max_qubits)
    joint = linalg.tensor(task.rho_x, rest, max_qubits)
    trace = CollisionTrace(task.rho_y, eta)
    trace.record(task.rho_x)
    collide_all(joint, eta, lambda k, rho: trace.record(linalg.partial_trace(rho, [0])))
    return trace


def collision_map(rho_q, partner, eta):
    """Substrate update for one collision with a fresh, uncorrelated partner."""
    c, s = np.cos(eta), np.sin(eta)
    return c * c * rho_q + s * s * partner + 1j * c * s * (partner @ rho_q - rho_q @ partner)


def collision_recursion_oracle(task, N, eta):
    """Same trace as ``single_pass`` computed entirely in the 2x2 space."""
    eta = check_eta(eta)
    if N < 1:
        raise ValueError("N must be at least 1")
    trace = CollisionTrace(task.rho_y, eta)
    rho_q = np.asarray(task.rho_x, dtype=complex)
    trace.record(rho_q)
    for _ in range(N):
        rho_q = linalg.hermitize(collision_map(rho_q, task.rho_y, eta))
        trace.record(rho_q)
    return trace


def epsilon_N(trace):
    if not trace.marginals:
        raise ValueError("empty collision trace")
    return trace.errors[-1]
