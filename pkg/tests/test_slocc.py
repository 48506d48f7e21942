import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import complex_vectors
from dense_oracles import full_from_dicke, kron_all
from symclass.decomposer import optimal_bond_dimension
from symclass.slocc import (
    ILO,
    apply_ilo,
    apply_to_points,
    ilo_from_json,
    ilo_to_json,
    random_ilo,
    symmetric_power_rep,
)
from symclass.symstate import SymmetricState, build_named, fidelity, from_decomposition, to_full_vector

ilos = st.integers(min_value=0, max_value=2 ** 32 - 1).map(lambda s: random_ilo(s, 50.0))


@pytest.mark.parametrize("n", [1, 4, 7])
def test_identity_rep(n):
    np.testing.assert_allclose(symmetric_power_rep(ILO.identity(), n).matrix, np.eye(n + 1))


def test_diagonal_rep():
    lam, mu, n = 0.5 + 1j, -2.0, 5
    rep = symmetric_power_rep(ILO(lam, 0, 0, mu), n).matrix
    np.testing.assert_allclose(rep, np.diag([lam ** (n - k) * mu ** k for k in range(n + 1)]), atol=1e-14)


def test_bit_flip_reverses_dicke_order():
    rep = symmetric_power_rep(ILO(0, 1, 1, 0), 4).matrix
    np.testing.assert_allclose(rep, np.fliplr(np.eye(5)), atol=1e-15)


@pytest.mark.parametrize("n", range(1, 9))
def test_rep_matches_dense_tensor_power(n):
    op = random_ilo(100 + n, 20.0)
    dense = kron_all([op.matrix] * n)
    rep = symmetric_power_rep(op, n).matrix
    for k in range(n + 1):
        e = np.zeros(n + 1)
        e[k] = 1.0
        np.testing.assert_allclose(full_from_dicke(rep[:, k]), dense @ full_from_dicke(e), atol=1e-12)


def test_diag_on_ghz():
    n = 5
    out = apply_ilo(build_named("ghz", n), ILO(1, 0, 0, 2))
    expected = np.zeros(n + 1)
    expected[0], expected[n] = 1 / np.sqrt(2), 2 ** n / np.sqrt(2)
    np.testing.assert_allclose(out.dicke, expected)
    assert optimal_bond_dimension(out) == 2


def test_identity_on_state():
    s = build_named("x", 6)
    np.testing.assert_array_equal(apply_ilo(s, ILO.identity()).dicke, s.dicke)


def test_random_ilo_on_w6_keeps_d():
    assert optimal_bond_dimension(apply_ilo(build_named("w", 6), random_ilo(11, 50.0))) == 6


def test_random_ilo_pinned():
    op = random_ilo(1, 10.0)
    expected = [
        0.18539221868198205 + 0.48568753048696234j,
        0.4407655617086079 + 0.23946226197253606j,
        0.17726639150479678 - 0.28805412376399975j,
        -0.6990921923110147 + 0.311746825019798j,
    ]
    np.testing.assert_allclose([op.a, op.b, op.c, op.d], expected, rtol=0, atol=1e-15)


@pytest.mark.parametrize("seed", range(5))
def test_cap_one_gives_unitary(seed):
    m = random_ilo(seed, 1.0).matrix
    np.testing.assert_allclose(m @ m.conj().T, np.eye(2), atol=1e-14)


def test_distinct_seeds_distinct_matrices():
    assert not np.allclose(random_ilo(1, 10.0).matrix, random_ilo(2, 10.0).matrix)


def test_random_ilo_deterministic():
    np.testing.assert_array_equal(random_ilo(9, 5.0).matrix, random_ilo(9, 5.0).matrix)


@given(st.integers(0, 10 ** 6), st.floats(1.0, 1e3))
def test_random_ilo_respects_cap(seed, cap):
    assert random_ilo(seed, cap).condition_number() <= cap * (1 + 1e-12)


def test_random_ilo_rejects_bad_cap():
    with pytest.raises(ValueError):
        random_ilo(0, 0.5)


def test_singular_ilo_rejected():
    with pytest.raises(ValueError):
        ILO(1, 2, 2, 4)


@given(ilos, complex_vectors(3), complex_vectors(3), st.integers(2, 9))
def test_points_commute_with_ilo(op, w, pts_flat, n):
    pts = np.column_stack([np.ones(3), pts_flat])
    left = apply_ilo(from_decomposition(pts, w, n), op).dicke
    right = from_decomposition(apply_to_points(op, pts), w, n).dicke
    assert np.linalg.norm(left - right) <= 1e-10 * max(1.0, np.linalg.norm(left))


@given(ilos, ilos, st.integers(1, 10))
def test_composition(a, b, n):
    lhs = symmetric_power_rep(a @ b, n).matrix
    rhs = symmetric_power_rep(a, n).matrix @ symmetric_power_rep(b, n).matrix
    assert np.abs(lhs - rhs).max() <= 1e-10 * max(1.0, np.abs(rhs).max())


@given(ilos, complex_vectors(8))
def test_inverse_round_trip(op, d):
    s = SymmetricState(7, d)
    back = apply_ilo(apply_ilo(s, op), op.inverse())
    assert fidelity(s, back) >= 1 - 1e-10


def test_apply_matches_full_space():
    s = build_named("x", 5)
    op = random_ilo(4, 10.0)
    dense = kron_all([op.matrix] * 5) @ to_full_vector(s).amplitudes
    np.testing.assert_allclose(to_full_vector(apply_ilo(s, op)).amplitudes, dense, atol=1e-12)


def test_ilo_json_round_trip():
    op = random_ilo(3, 10.0)
    back = ilo_from_json(ilo_to_json(op))
    np.testing.assert_array_equal(back.matrix, op.matrix)
    assert ilo_from_json("[[1,0],[0,0],[0,0],[1,0]]").matrix.tolist() == np.eye(2).tolist()
    with pytest.raises(ValueError):
        ilo_from_json([[1, 0]])
