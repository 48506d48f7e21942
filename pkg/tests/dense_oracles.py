"""Brute-force reference computations on full 2^N vectors.

Nothing here imports from the package, so these serve as independent checks
of the Dicke-space formulas.
"""
from __future__ import annotations

import itertools
from functools import reduce
from math import comb

import numpy as np

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.diag([1.0, -1.0]).astype(complex)


def dicke_full(n: int, k: int) -> np.ndarray:
    v = np.zeros(2 ** n, dtype=complex)
    for bits in itertools.combinations(range(n), k):
        v[sum(1 << (n - 1 - b) for b in bits)] = 1.0
    return v / np.sqrt(comb(n, k))


def full_from_dicke(d) -> np.ndarray:
    n = len(d) - 1
    return sum(c * dicke_full(n, k) for k, c in enumerate(d))


def tensor_power(v, n: int) -> np.ndarray:
    return reduce(np.kron, [np.asarray(v, dtype=complex)] * n)


def kron_all(mats) -> np.ndarray:
    return reduce(np.kron, mats)


def partial_trace_keep_first(psi: np.ndarray, n: int, m: int) -> np.ndarray:
    """Density matrix of the first m qubits of a pure n-qubit state."""
    a = psi.reshape(2 ** m, 2 ** (n - m))
    return a @ a.conj().T


def dicke_restrict(rho_full: np.ndarray, m: int) -> np.ndarray:
    s = np.column_stack([dicke_full(m, k) for k in range(m + 1)])
    return s.conj().T @ rho_full @ s


def bipartition_from_full(psi: np.ndarray, n: int, m: int) -> np.ndarray:
    """<D_l^(N-M)| <D_k^(M)| psi> with the first M qubits carrying k."""
    a = psi.reshape(2 ** m, 2 ** (n - m))
    left = np.column_stack([dicke_full(m, k) for k in range(m + 1)])
    right = np.column_stack([dicke_full(n - m, l) for l in range(n - m + 1)])
    return (left.conj().T @ a @ right.conj()).T


def site_op(op: np.ndarray, site: int, n: int) -> np.ndarray:
    mats = [I2] * n
    mats[site] = op
    return kron_all(mats)


def heisenberg(i: int, j: int, n: int) -> np.ndarray:
    return sum(site_op(p, i, n) @ site_op(p, j, n) for p in (X, Y, Z))


def trace_amplitudes(a0: np.ndarray, a1: np.ndarray, n: int) -> np.ndarray:
    """Amplitudes Tr(A_mu1 ... A_muN) by explicit matrix products."""
    out = np.zeros(2 ** n, dtype=complex)
    for idx, bits in enumerate(itertools.product((0, 1), repeat=n)):
        out[idx] = np.trace(reduce(np.matmul, [a1 if b else a0 for b in bits]))
    return out
