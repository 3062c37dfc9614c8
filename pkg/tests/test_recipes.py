import numpy as np
import pytest
from numpy.testing import assert_allclose

from seqgen.compiler import verify_plan
from seqgen.generation import (measure_ancilla, run_qubit_chain,
                               run_standard_map)
from seqgen.library import X, Z
from seqgen.mps import fidelity, local_expectation, schmidt_profile
from seqgen.recipes import (RecipeError, WParams, adiabatic_ghz_target,
                            adiabatic_recipe, atomic_cluster_sequence,
                            atomic_ghz_sequence, atomic_w_cascade,
                            atomic_w_post_state, cluster_state, emission_map,
                            ghz_stabilizer_checks, ghz_state, rotation_u,
                            run_atomic_cluster, target_w_state,
                            w_source_plan, w_standard_map_unitaries)

NS = range(2, 9)


#-------------------------------------------------------------------------------
# closed forms
#-------------------------------------------------------------------------------
def test_generic_w_amplitudes():
    psi = target_w_state(WParams([np.pi / 6, np.pi / 3], [0.1, 0.2]))
    expected = np.zeros(8, dtype=complex)
    expected[4] = np.exp(0.1j) * 0.5
    expected[2] = np.cos(np.pi / 6) * np.exp(0.2j) * np.sin(np.pi / 3)
    expected[1] = np.cos(np.pi / 6) * np.cos(np.pi / 3)
    assert_allclose(psi.amplitudes, expected, atol=1e-15)


@pytest.mark.parametrize('n', NS)
def test_uniform_w(n):
    psi = target_w_state(WParams.uniform(n))
    idx = [2**k for k in range(n)]
    assert_allclose(np.abs(psi.amplitudes[idx]), n**-0.5, atol=1e-14)


def test_w_needs_two_sites():
    with pytest.raises(RecipeError):
        WParams.uniform(1)
    with pytest.raises(RecipeError):
        WParams([0.1, 0.2], [0.0])


@pytest.mark.parametrize('n', NS)
def test_named_states_have_bond_two(n):
    for psi in (target_w_state(WParams.uniform(n)), ghz_state(n),
                cluster_state(n)):
        assert max(schmidt_profile(psi).internal) <= 2


def test_small_cluster_state():
    psi = cluster_state(2)
    assert_allclose(psi.amplitudes, np.array([1, 1, -1, 1]) / 2.0,
                    atol=1e-15)
    assert local_expectation(psi, {0: X, 1: Z}) == pytest.approx(-1.0)
    assert local_expectation(psi, {0: Z, 1: X}) == pytest.approx(1.0)


def test_cluster_stabilizers():
    n = 5
    psi = cluster_state(n)
    for i in range(n):
        ops = {i: X}
        if i > 0:
            ops[i - 1] = Z
        if i < n - 1:
            ops[i + 1] = Z
        expected = 1.0 if i == n - 1 else -1.0
        assert local_expectation(psi, ops).real == \
            pytest.approx(expected, abs=1e-12)


def test_ghz_stabilizers():
    xx, zz = ghz_stabilizer_checks(ghz_state(4))
    assert xx == pytest.approx(1.0)
    assert_allclose(zz, 1.0)


#-------------------------------------------------------------------------------
# plans
#-------------------------------------------------------------------------------
@pytest.mark.parametrize('n', NS)
def test_source_and_adiabatic_w(n):
    params = WParams.uniform(n)
    target = target_w_state(params)
    assert verify_plan(w_source_plan(params), target) >= 1.0 - 1e-10
    recipe = adiabatic_recipe('W', n)
    assert verify_plan(recipe.plan(), target) >= 1.0 - 1e-10


def test_adiabatic_w_with_phases():
    params = WParams([0.3, 1.1, 0.7], [0.5, -1.2, 2.0])
    recipe = adiabatic_recipe('W', 4, params.thetas, params.phis)
    assert verify_plan(recipe.plan(), target_w_state(params)) >= 1.0 - 1e-10


@pytest.mark.parametrize('n', NS)
def test_adiabatic_ghz(n):
    plan = adiabatic_recipe('GHZ', n).plan()
    assert verify_plan(plan, adiabatic_ghz_target(n)) >= 1.0 - 1e-10
    # pi/4 gives the GHZ state with a relative sign
    assert verify_plan(plan, ghz_state(n, -1.0)) >= 1.0 - 1e-10


def test_adiabatic_ghz_angles():
    plan = adiabatic_recipe('GHZ', 3, 0.4, 0.9).plan()
    assert verify_plan(plan, adiabatic_ghz_target(3, 0.4, 0.9)) >= \
        1.0 - 1e-10


@pytest.mark.parametrize('n', NS)
def test_adiabatic_cluster(n):
    plan = adiabatic_recipe('CLUSTER', n).plan()
    assert verify_plan(plan, cluster_state(n)) >= 1.0 - 1e-10


def test_adiabatic_cluster_angles(rng):
    thetas = rng.uniform(0, np.pi, 4)
    phis = rng.uniform(-np.pi, np.pi, 4)
    plan = adiabatic_recipe('CLUSTER', 4, thetas, phis).plan()
    assert verify_plan(plan, cluster_state(4, thetas, phis)) >= 1.0 - 1e-10


def test_atom_decouples_in_b1():
    _, atom, decoupled = adiabatic_recipe('CLUSTER', 4).run()
    assert decoupled
    assert abs(atom[1]) == pytest.approx(1.0, abs=1e-12)


def test_recipe_errors():
    with pytest.raises(RecipeError):
        adiabatic_recipe('W', 1)
    with pytest.raises(RecipeError):
        adiabatic_recipe('DICKE', 3)
    with pytest.raises(RecipeError):
        adiabatic_recipe('CLUSTER', 3, thetas=[0.1, 0.2])


def test_rotation_and_emission_map():
    u = rotation_u('a', 'b2', 'b1', 0.3, 0.8)
    assert_allclose(u.conj().T @ u, np.eye(3), atol=1e-15)
    m = emission_map()
    assert_allclose(m.conj().T @ m, np.eye(3))
    with pytest.raises(RecipeError):
        rotation_u('a', 'a', 'b1', 0.0, 0.1)


def test_standard_map_w():
    params = WParams.uniform(4)
    qubits, decoupled = run_standard_map(2, w_standard_map_unitaries(params),
                                         [1.0, 0.0])
    assert decoupled
    assert fidelity(qubits, target_w_state(params)) >= 1.0 - 1e-10


#-------------------------------------------------------------------------------
# atomic sequences
#-------------------------------------------------------------------------------
def test_w_cascade_amplitudes():
    amps = atomic_w_cascade(3).as_state().amplitudes
    expected = np.zeros(8, dtype=complex)
    expected[0] = 0.5
    expected[5] = 0.5j
    expected[6] = 1j / np.sqrt(2.0)
    assert_allclose(amps, expected, atol=1e-12)

    amps = atomic_w_cascade(4).as_state().amplitudes
    expected = np.zeros(16, dtype=complex)
    expected[0] = 2**-1.5
    expected[12] = 1j * 2**-0.5
    expected[10] = 0.5j
    expected[9] = 1j * 2**-1.5
    assert_allclose(amps, expected, atol=1e-12)


@pytest.mark.parametrize('n', [3, 4, 6])
def test_w_cascade_post_states(n):
    joint = atomic_w_cascade(n)
    basis = np.array([[1, 1], [1, -1]]) / np.sqrt(2.0)
    for k in range(2):
        p, post = measure_ancilla(joint, basis, k)
        assert p == pytest.approx(0.5, abs=1e-12)
        assert fidelity(post, atomic_w_post_state(n, k)) == \
            pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize('n', NS)
def test_atomic_ghz(n):
    initial, layer = atomic_ghz_sequence(n)
    psi = run_qubit_chain(n, [layer], initial)
    assert fidelity(psi, ghz_state(n)) >= 1.0 - 1e-12


@pytest.mark.parametrize('n', range(2, 7))
@pytest.mark.parametrize('outcome', [0, 1])
def test_atomic_cluster(n, outcome):
    p, atoms = run_atomic_cluster(n, outcome)
    assert p == pytest.approx(0.5, abs=1e-12)
    assert fidelity(atoms, cluster_state(n)) >= 1.0 - 1e-10


def test_atomic_cluster_needs_compensation():
    _, atoms = run_atomic_cluster(4, compensate=False)
    assert fidelity(atoms, cluster_state(4)) < 0.9


def test_cluster_sequence_shapes():
    initial, layer, compensation = atomic_cluster_sequence(3)
    assert initial.dims == (2,) * 4
    assert len(layer) == 3
    assert len(compensation) == 3
