import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dense_oracles import I2, X, Y, Z, heisenberg, kron_all
from symclass.pauli import PauliSum, PauliTerm, dicke_projector_coefficients, heisenberg_bond, z_polynomial

MATS = {"X": X, "Y": Y, "Z": Z}


def string_dense(n, sites, letters):
    ops = [I2] * n
    for s, p in zip(sites, letters):
        ops[s] = MATS[p]
    return kron_all(ops)


terms = st.lists(
    st.tuples(
        st.lists(st.integers(0, 3), min_size=1, max_size=3, unique=True),
        st.text("XYZ", min_size=3, max_size=3),
        st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False),
    ),
    max_size=6,
).map(lambda ts: [(tuple(s), p[: len(s)], c) for s, p, c in ts])


@given(terms)
def test_dense_matches_kron(ts):
    h = PauliSum.from_terms(4, ts)
    ref = sum((c * string_dense(4, s, p) for s, p, c in ts), np.zeros((16, 16), dtype=complex))
    np.testing.assert_allclose(h.dense(), ref, atol=1e-12)


@given(terms, st.integers(0, 10 ** 6))
def test_matvec_matches_dense(ts, seed):
    h = PauliSum.from_terms(4, ts)
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(16) + 1j * rng.standard_normal(16)
    np.testing.assert_allclose(h.matvec(v), h.dense() @ v, atol=1e-12)
    block = rng.standard_normal((16, 3))
    np.testing.assert_allclose(h.matvec(block), h.dense() @ block, atol=1e-12)


@given(st.integers(1, 3), st.integers(0, 10 ** 6))
def test_from_dense_round_trip(n, seed):
    rng = np.random.default_rng(seed)
    m = rng.standard_normal((2 ** n, 2 ** n)) + 1j * rng.standard_normal((2 ** n, 2 ** n))
    np.testing.assert_allclose(PauliSum.from_dense(m).dense(), m, atol=1e-12)


def test_from_dense_known_strings():
    h = PauliSum.from_dense(np.kron(X, Z) + 0.5 * np.kron(Y, I2))
    assert h.coefficients() == {((0, 1), "XZ"): 1.0, ((0,), "Y"): 0.5}


def test_site_zero_is_most_significant():
    h = PauliSum.from_terms(2, [((0,), "Z", 1.0)])
    np.testing.assert_allclose(np.diag(h.dense()).real, [1, 1, -1, -1])


def test_canonical_order_and_merging():
    h = PauliSum.from_terms(3, [((2, 0), "ZX", 1.0), ((1,), "Y", 2.0), ((0, 2), "XZ", 1.0), ((0,), "Z", 1.0), ((0,), "X", 1.0)])
    assert list(h.coefficients()) == [((0,), "X"), ((0,), "Z"), ((0, 2), "XZ"), ((1,), "Y")]
    assert h.coefficients()[((0, 2), "XZ")] == 2.0


def test_cancellation_drops_terms():
    h = PauliSum.from_terms(2, [((0,), "Z", 1.0)]) + PauliSum.from_terms(2, [((0,), "Z", -1.0)])
    assert len(h) == 0


def test_placed():
    local = PauliSum.from_terms(2, [((0, 1), "XZ", 1.0)])
    placed = local.placed((3, 1), 4)
    assert placed.coefficients() == {((1, 3), "ZX"): 1.0}
    np.testing.assert_allclose(placed.dense(), string_dense(4, (3, 1), "XZ"))


def test_heisenberg_bond_matches_oracle():
    np.testing.assert_allclose(heisenberg_bond(0, 2, 3).dense(), heisenberg(0, 2, 3))


def test_hermiticity_flag():
    assert PauliSum.from_terms(1, [((0,), "X", 1.0)]).is_hermitian()
    assert not PauliSum.from_terms(1, [((0,), "X", 1j)]).is_hermitian()


@pytest.mark.parametrize("bad", [((0, 0), "XX", 1.0), ((0,), "XY", 1.0), ((0,), "Q", 1.0)])
def test_bad_terms(bad):
    with pytest.raises(ValueError):
        PauliTerm(*bad)


def test_site_out_of_range():
    with pytest.raises(ValueError):
        PauliSum.from_terms(2, [((2,), "Z", 1.0)])


@pytest.mark.parametrize("n", range(1, 6))
def test_dicke_projector_coefficients_are_projectors(n):
    weights = np.array([bin(i).count("1") for i in range(2 ** n)])
    for k in range(n + 1):
        diag = np.diag(z_polynomial(dicke_projector_coefficients(n, k), n).dense()).real
        np.testing.assert_allclose(diag, (weights == k).astype(float), atol=1e-13)


def test_three_qubit_weight_two_expansion():
    c = dicke_projector_coefficients(3, 2)
    expected = {frozenset(): 3, frozenset({0, 1, 2}): 3}
    expected.update({frozenset(p): -1 for p in itertools.combinations(range(3), 2)})
    expected.update({frozenset([i]): -1 for i in range(3)})
    assert c == {k: Fraction(v, 8) for k, v in expected.items()}


def test_json_terms():
    out = PauliSum.from_terms(2, [((0, 1), "ZZ", -0.5)]).to_json_terms()
    assert out == [{"sites": [0, 1], "paulis": "ZZ", "coeff": [-0.5, 0.0]}]
