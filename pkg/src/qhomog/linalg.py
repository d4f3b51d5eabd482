"""
Dense linear algebra on multi-qubit density matrices.

Density matrices are plain complex ``numpy`` arrays of shape (2**n, 2**n).
Qubit 0 sits on the highest-order bit of the row/column index, so
``tensor(a, b)`` puts the qubits of ``a`` in front of those of ``b``.
"""

import numpy as np

VALIDATION_TOL = 1e-10
RECONSTRUCTION_TOL = 1e-9

# dim 2048 is ~64 MB per complex matrix
DEFAULT_MAX_QUBITS = 11


class ValidationError(ValueError):
    """A matrix violates a density-matrix invariant."""


class CapacityError(RuntimeError):
    """A register would exceed the configured qubit cap."""


def num_qubits(rho):
    dim = rho.shape[0]
    if rho.ndim != 2 or rho.shape[1] != dim or dim < 1 or dim & (dim - 1):
        raise ValidationError(f"expected a square matrix with power-of-2 dim, got shape {rho.shape}")
    return dim.bit_length() - 1


def check_capacity(n, max_qubits=None):
    cap = DEFAULT_MAX_QUBITS if max_qubits is None else max_qubits
    if n > cap:
        raise CapacityError(f"register of {n} qubits exceeds cap of {cap}")


def validate(rho, tol=VALIDATION_TOL):
    """Raise ValidationError unless ``rho`` is Hermitian, unit-trace and PSD."""
    rho = np.asarray(rho)
    num_qubits(rho)
    herm_err = np.max(np.abs(rho - rho.conj().T))
    if herm_err > tol:
        raise ValidationError(f"not Hermitian (max |rho - rho^dag| = {herm_err:.3e})")
    tr = np.trace(rho)
    if abs(tr - 1) > tol:
        raise ValidationError(f"trace is {tr:.12g}, expected 1")
    lam_min = np.linalg.eigvalsh(rho).min()
    if lam_min < -tol:
        raise ValidationError(f"negative eigenvalue {lam_min:.3e}")
    return rho


def is_density_matrix(rho, tol=VALIDATION_TOL):
    try:
        validate(rho, tol)
    except ValidationError:
        return False
    return True


def hermitize(rho):
    return 0.5 * (rho + rho.conj().T)


def ket_to_dm(psi):
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    return np.outer(psi, psi.conj())


def tensor(a, b, max_qubits=None):
    """Kronecker product; ``a``'s qubits take the high-order index bits."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    check_capacity(num_qubits(a) + num_qubits(b), max_qubits)
    return np.kron(a, b)


def tensor_power(rho, n, max_qubits=None):
    check_capacity(n * num_qubits(rho), max_qubits)
    out = np.ones((1, 1), dtype=complex)
    for _ in range(n):
        out = np.kron(out, rho)
    return out


def partial_trace(rho, keep):
    """
    Reduced state on the qubits in ``keep``.

    The kept qubits stay in their original relative order regardless of the
    order in which they are listed.
    """
    n = num_qubits(rho)
    keep = sorted(set(int(q) for q in keep))
    if not keep:
        raise ValueError("keep must name at least one qubit")
    if keep[0] < 0 or keep[-1] >= n:
        raise IndexError(f"qubit index out of range for a {n}-qubit register: {keep}")
    traced = [q for q in range(n) if q not in keep]
    dk, dt = 2 ** len(keep), 2 ** len(traced)
    t = np.asarray(rho).reshape([2] * (2 * n))
    order = keep + traced
    t = t.transpose(order + [n + q for q in order]).reshape(dk, dt, dk, dt)
    return np.einsum("iaja->ij", t)


def marginals(rho):
    """Single-qubit reduced states for every qubit in the register."""
    return [partial_trace(rho, [q]) for q in range(num_qubits(rho))]


def eigh(rho, tol=VALIDATION_TOL):
    """Ascending eigenvalues and unitary eigenvectors of a Hermitian matrix."""
    rho = np.asarray(rho, dtype=complex)
    herm_err = np.max(np.abs(rho - rho.conj().T))
    if herm_err > tol:
        raise ValidationError(f"not Hermitian (max |rho - rho^dag| = {herm_err:.3e})")
    return np.linalg.eigh(hermitize(rho))


def sqrt_psd(rho, tol=VALIDATION_TOL):
    """
    Hermitian PSD square root.

    Eigenvalues in [-tol, 0) are clamped to zero; anything more negative
    means the input is not PSD and raises ValidationError.
    """
    lam, vecs = eigh(rho, tol)
    if lam.size and lam[0] < -tol:
        raise ValidationError(f"negative eigenvalue {lam[0]:.3e}")
    # round-off-sized eigenvalues would otherwise become ~1e-8 after the root
    noise = 64 * np.finfo(float).eps * max(lam[-1], 0.0) if lam.size else 0.0
    root = np.sqrt(np.where(lam > noise, lam, 0.0))
    return (vecs * root) @ vecs.conj().T


def fidelity(a, b):
    """Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))**2, clamped to [0, 1]."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    # Tr sqrt(sqrt(a) b sqrt(a)) is the trace norm of sqrt(a) sqrt(b); singular
    # values avoid a second square root of noisy near-zero eigenvalues
    sigma = np.linalg.svd(sqrt_psd(a) @ sqrt_psd(b), compute_uv=False)
    f = float(np.sum(sigma) ** 2)
    return min(max(f, 0.0), 1.0)


def purity(rho):
    return float(np.real(np.vdot(rho, rho)))


def random_density_matrix(n_qubits, rng, rank=None):
    """Ginibre-distributed mixed state; ``rank=1`` gives a pure state."""
    dim = 2**n_qubits
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho)


def random_pure_state(n_qubits, rng):
    dim = 2**n_qubits
    psi = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return psi / np.linalg.norm(psi)
