import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhomog import linalg
from qhomog.homogeniser import (T, T_TRANSPOSE, TaskSpec, apply_partial_swap, collision_recursion_oracle,
                                epsilon_N, mixed_state, partial_swap_unitary, pure_state, single_pass)
from oracles import classical_fidelity, dense_partial_swap, population_recursion

seeds = st.integers(min_value=0, max_value=2**32 - 1)
etas = st.floats(min_value=0.0, max_value=np.pi / 2)
M55 = mixed_state(0.1)
FIG3 = TaskSpec(pure_state(), M55)


def random_task(rng, diagonal):
    if diagonal:
        p, q = rng.uniform(size=2)
        return TaskSpec(np.diag([p, 1 - p]).astype(complex), np.diag([q, 1 - q]).astype(complex))
    return TaskSpec(linalg.random_density_matrix(1, rng), linalg.random_density_matrix(1, rng))


def test_partial_swap_unitary_is_unitary():
    U = partial_swap_unitary(0.4)
    assert np.allclose(U @ U.conj().T, np.eye(4))


def test_partial_swap_identity():
    rho = linalg.random_density_matrix(3, np.random.default_rng(0))
    assert np.allclose(apply_partial_swap(rho, 0, 2, 0.0), rho, atol=1e-15)


def test_partial_swap_full_swap():
    rng = np.random.default_rng(1)
    a, b = linalg.random_density_matrix(1, rng), linalg.random_density_matrix(1, rng)
    out = apply_partial_swap(linalg.tensor(a, b), 0, 1, np.pi / 2)
    assert np.allclose(out, linalg.tensor(b, a), atol=1e-14)


def test_partial_swap_fig3_first_collision():
    out = apply_partial_swap(linalg.tensor(pure_state(), M55), 0, 1, np.pi / 4)
    assert np.allclose(linalg.partial_trace(out, [0]), np.diag([0.775, 0.225]), atol=1e-15)
    dense = dense_partial_swap(linalg.tensor(pure_state(), M55), 0, 1, np.pi / 4)
    assert np.allclose(out, dense, atol=1e-15)


def test_partial_swap_matches_two_qubit_unitary():
    rho = linalg.random_density_matrix(2, np.random.default_rng(2))
    U = partial_swap_unitary(0.7)
    assert np.allclose(apply_partial_swap(rho, 0, 1, 0.7), U @ rho @ U.conj().T, atol=1e-14)


def test_partial_swap_argument_errors():
    rho = np.eye(4, dtype=complex) / 4
    with pytest.raises(ValueError):
        apply_partial_swap(rho, 1, 1, 0.3)
    with pytest.raises(IndexError):
        apply_partial_swap(rho, 0, 2, 0.3)
    with pytest.raises(ValueError):
        apply_partial_swap(rho, 0, 1, 2.0)


@settings(max_examples=60)
@given(seeds, st.integers(2, 5), etas, st.data())
def test_partial_swap_matches_dense(seed, n, eta, data):
    rho = linalg.random_density_matrix(n, np.random.default_rng(seed))
    a, b = data.draw(st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True))
    assert np.allclose(apply_partial_swap(rho, a, b, eta), dense_partial_swap(rho, a, b, eta), atol=1e-13)


@given(seeds, st.integers(2, 5), etas)
def test_partial_swap_preserves_state_and_purity(seed, n, eta):
    rho = linalg.random_density_matrix(n, np.random.default_rng(seed))
    out = apply_partial_swap(rho, 0, n - 1, eta)
    linalg.validate(out)
    assert abs(linalg.purity(out) - linalg.purity(rho)) <= 1e-9


def test_single_pass_task_already_satisfied():
    trace = single_pass(TaskSpec(M55, M55), 4, 0.3)
    assert max(trace.errors) <= 1e-10


def test_single_pass_fig3_marginals():
    trace = single_pass(FIG3, 3, np.pi / 4)
    expected = population_recursion(1.0, 0.55, np.pi / 4, 3)
    assert np.allclose(expected, [0.775, 0.6625, 0.60625], atol=1e-15)
    assert np.allclose(trace.populations()[1:, 0], expected, atol=1e-12)
    for m in trace.marginals[1:]:
        assert abs(m[0, 1]) <= 1e-15


def test_single_pass_fig3_epsilon():
    trace = single_pass(FIG3, 3, np.pi / 4)
    oracle = 1 - classical_fidelity([0.60625, 0.39375], [0.55, 0.45])
    assert epsilon_N(trace) == pytest.approx(oracle, abs=1e-12)
    assert epsilon_N(trace) == pytest.approx(0.00324350737, abs=1e-10)


def test_single_pass_joint_state_valid_after_every_collision():
    seen = []
    rho0 = linalg.tensor(pure_state(), linalg.tensor_power(mixed_state(0.0), 4))
    from qhomog.homogeniser import collide_all

    collide_all(rho0, 0.5, lambda k, rho: seen.append((k, linalg.is_density_matrix(rho), linalg.purity(rho))))
    assert [k for k, _, _ in seen] == [1, 2, 3, 4]
    assert all(ok for _, ok, _ in seen)
    assert all(abs(p - linalg.purity(rho0)) <= 1e-9 for _, _, p in seen)


def test_single_pass_capacity():
    with pytest.raises(linalg.CapacityError):
        single_pass(FIG3, 5, 0.3, max_qubits=5)
    with pytest.raises(ValueError):
        single_pass(FIG3, 0, 0.3)


def test_oracle_identity_and_full_swap():
    rng = np.random.default_rng(5)
    task = random_task(rng, diagonal=False)
    still = collision_recursion_oracle(task, 4, 0.0)
    assert all(np.allclose(m, task.rho_x) for m in still.marginals)
    assert np.allclose(collision_recursion_oracle(task, 1, np.pi / 2).marginals[1], task.rho_y, atol=1e-15)


@pytest.mark.parametrize("eta", [0.12, 0.3, np.pi / 4])
@pytest.mark.parametrize("diagonal", [True, False])
def test_oracle_agreement_fixed_etas(eta, diagonal):
    rng = np.random.default_rng(int(eta * 1000) + diagonal)
    for N in range(1, 7):
        task = random_task(rng, diagonal)
        a, b = single_pass(task, N, eta), collision_recursion_oracle(task, N, eta)
        for x, y in zip(a.marginals, b.marginals):
            assert np.max(np.abs(x - y)) <= 1e-12


@settings(max_examples=40)
@given(seeds, st.integers(1, 6), etas)
def test_oracle_agreement_property(seed, N, eta):
    task = random_task(np.random.default_rng(seed), diagonal=seed % 2 == 0)
    a, b = single_pass(task, N, eta), collision_recursion_oracle(task, N, eta)
    assert np.max([np.max(np.abs(x - y)) for x, y in zip(a.marginals, b.marginals)]) <= 1e-12


def test_commutator_term_is_exercised():
    rng = np.random.default_rng(11)
    task = random_task(rng, diagonal=False)
    c, s = np.cos(0.4), np.sin(0.4)
    without = c * c * task.rho_x + s * s * task.rho_y
    assert np.max(np.abs(collision_recursion_oracle(task, 1, 0.4).marginals[1] - without)) > 1e-3
    assert np.allclose(single_pass(task, 1, 0.4).marginals[1], collision_recursion_oracle(task, 1, 0.4).marginals[1])


@pytest.mark.parametrize("eta", [0.12, 0.3, np.pi / 4, np.pi / 2])
@pytest.mark.parametrize("direction", [T, T_TRANSPOSE])
def test_epsilon_non_increasing_in_N(eta, direction):
    task = TaskSpec.pure_to_mixed(0.0, direction)
    eps = [epsilon_N(collision_recursion_oracle(task, N, eta)) for N in range(1, 11)]
    assert all(b <= a + 1e-15 for a, b in zip(eps, eps[1:]))


def test_epsilon_constant_without_interaction():
    task = TaskSpec.pure_to_mixed(0.1)
    expected = 1 - linalg.fidelity(task.rho_x, task.rho_y)
    assert all(epsilon_N(single_pass(task, N, 0.0)) == pytest.approx(expected, abs=1e-14) for N in (1, 3, 5))


def test_task_spec():
    task = TaskSpec.pure_to_mixed(0.1, T_TRANSPOSE)
    assert task.label == T_TRANSPOSE
    assert np.allclose(task.rho_x, M55) and np.allclose(task.rho_y, pure_state())
    assert task.transpose().label == T
    with pytest.raises(linalg.ValidationError):
        TaskSpec(np.diag([0.7, 0.7]), M55)
    with pytest.raises(ValueError):
        mixed_state(1.5)
