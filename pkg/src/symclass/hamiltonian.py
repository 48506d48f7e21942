"""Reduced density matrices in the symmetric subspace and parent Hamiltonians.

The bipartition map Psi_M sends an M-qubit symmetric bra to an (N-M)-qubit
symmetric ket. In Dicke coordinates

    Psi_M[l, k] = sqrt(C(M, k) C(N-M, l) / C(N, k+l)) d_(k+l),

and the reduced density matrix of M qubits is rho^(M) = Psi_(N-M) Psi_(N-M)^dag.
A local term that annihilates the state is the projector onto the kernel of
rho^(n) inside the (n+1)-dimensional symmetric space, lifted to 2^n dimensions
through the Dicke isometry; singlet projectors on neighbouring bonds push the
non-symmetric sector up in energy.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .config import DEFAULT, ToleranceConfig
from .numerics import binom, numerical_rank
from .pauli import PauliSum, dicke_projector_coefficients, heisenberg_bond, z_polynomial
from .symstate import StateTooLargeError, SymmetricState, hamming_weights, to_full_vector

PAPER_FAMILIES = ("ghz", "w", "x")


class NoKernelError(ValueError):
    """rho^(n) has full rank in the symmetric space, so no local term exists."""

    def __init__(self, n: int, n_star: int):
        super().__init__(
            f"rho^({n}) has a trivial kernel in the symmetric space; "
            f"the minimal interaction length is n*={n_star}"
        )
        self.n = n
        self.n_star = n_star


class CouplingError(ValueError):
    """Couplings violate the positivity conditions of a Hamiltonian family."""


@dataclass(frozen=True, eq=False)
class BipartitionMap:
    m: int
    matrix: np.ndarray


@dataclass(frozen=True, eq=False)
class ReducedDensityMatrix:
    m: int
    matrix: np.ndarray

    def is_hermitian(self, atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.matrix, self.matrix.conj().T, atol=atol, rtol=0))

    def trace(self) -> float:
        return float(np.trace(self.matrix).real)


@dataclass(frozen=True)
class RankProfile:
    ranks: tuple[int, ...]
    n_star: int

    def rank(self, m: int) -> int:
        """Rank of rho^(m) for 1 <= m <= N - 1."""
        return self.ranks[m - 1]


@dataclass(frozen=True, eq=False)
class LocalProjector:
    n_sites: int
    symmetric_block: np.ndarray

    def full_matrix(self) -> np.ndarray:
        s = dicke_isometry(self.n_sites)
        return s @ self.symmetric_block @ s.conj().T


def _psi(d: np.ndarray, m: int) -> np.ndarray:
    n = len(d) - 1
    out = np.zeros((n - m + 1, m + 1), dtype=complex)
    for l in range(n - m + 1):
        for k in range(m + 1):
            out[l, k] = np.sqrt(binom(m, k) * binom(n - m, l) / binom(n, k + l)) * d[k + l]
    return out


def bipartition_map(state: SymmetricState, m: int) -> BipartitionMap:
    n = state.n_parties
    if not 1 <= m < n:
        raise ValueError(f"M must satisfy 1 <= M < N={n}, got {m}")
    return BipartitionMap(m, _psi(state.dicke, m))


def reduced_density(state: SymmetricState, m: int) -> ReducedDensityMatrix:
    """rho^(M) of the normalized state in the (M+1)-dimensional Dicke basis."""
    n = state.n_parties
    if not 1 <= m < n:
        raise ValueError(f"M must satisfy 1 <= M < N={n}, got {m}")
    psi = _psi(state.normalize().dicke, n - m)
    return ReducedDensityMatrix(m, psi @ psi.conj().T)


def one_body_rdm(state: SymmetricState) -> np.ndarray:
    """2x2 single-qubit reduced density matrix in the computational basis."""
    n = state.n_parties
    d = state.normalize().dicke
    if n == 1:
        return np.outer(d, d.conj())
    k = np.arange(n + 1)
    p = np.abs(d) ** 2
    r01 = np.sum(d[:-1] * d[1:].conj() * np.sqrt((n - k[:-1]) * (k[:-1] + 1))) / n
    return np.array([[np.sum(p * (n - k)) / n, r01], [np.conj(r01), np.sum(p * k) / n]])


def _rank_at(d: np.ndarray, m: int, tol: ToleranceConfig) -> int:
    """Rank of rho^(m), from the singular values of Psi_(N-m); m = N is the pure state."""
    n = len(d) - 1
    if m == n:
        return 1
    return numerical_rank(np.linalg.svd(_psi(d, n - m), compute_uv=False), tol.tol_rank)


def rank_profile(state: SymmetricState, tol: ToleranceConfig = DEFAULT) -> RankProfile:
    """Ranks of rho^(M) for M = 1..N-1 and the minimal interaction length.

    n* is the smallest M whose rho^(M) has rank below M + 1; the search runs up
    to M = N, where the pure state itself always leaves a kernel.
    """
    d = state.normalize().dicke
    n = state.n_parties
    ranks = tuple(_rank_at(d, m, tol) for m in range(1, n))
    n_star = next(m for m in range(1, n + 1) if (ranks[m - 1] if m < n else 1) < m + 1)
    return RankProfile(ranks, n_star)


def kernel_projector(state: SymmetricState, n_local: int, tol: ToleranceConfig = DEFAULT) -> LocalProjector:
    """Projector onto ker rho^(n) within the symmetric space of n qubits."""
    n = state.n_parties
    if not 1 <= n_local <= n:
        raise ValueError(f"interaction length must satisfy 1 <= n <= N={n}, got {n_local}")
    d = state.normalize().dicke
    psi = d[:, None] if n_local == n else _psi(d, n - n_local)
    u, s, _ = np.linalg.svd(psi, full_matrices=True)
    rank = numerical_rank(s, tol.tol_rank)
    if rank == n_local + 1:
        raise NoKernelError(n_local, rank_profile(state, tol).n_star)
    ker = u[:, rank:]
    block = ker @ ker.conj().T
    return LocalProjector(n_local, 0.5 * (block + block.conj().T))


def dicke_isometry(n: int) -> np.ndarray:
    """2^n x (n+1) matrix whose columns are the Dicke states |D_k^(n)>."""
    w = hamming_weights(n)
    s = np.zeros((2 ** n, n + 1), dtype=complex)
    s[np.arange(2 ** n), w] = 1.0
    return s / np.sqrt(s.sum(axis=0, keepdims=True))


def dicke_projector(n: int, k: int) -> PauliSum:
    """Z-string expansion of the projector onto Hamming weight k of n qubits."""
    return z_polynomial(dicke_projector_coefficients(n, k), n)


def singlet_projector() -> PauliSum:
    """(1 - sigma . sigma) / 4 on two qubits."""
    return PauliSum.from_terms(2, [((), "", 0.25)]) + heisenberg_bond(0, 1, 2, -0.25)


@dataclass(frozen=True, eq=False)
class LocalTerm:
    sites: tuple[int, ...]
    matrix: np.ndarray
    pauli: PauliSum | None = None

    def local_pauli(self) -> PauliSum:
        return self.pauli if self.pauli is not None else PauliSum.from_dense(self.matrix)


def _apply_local(term: LocalTerm, psi: np.ndarray, n: int) -> np.ndarray:
    """Apply a k-site block to a tensor with n qubit axes and one batch axis."""
    k = len(term.sites)
    op = term.matrix.reshape([2] * (2 * k))
    out = np.tensordot(op, psi, axes=(list(range(k, 2 * k)), list(term.sites)))
    return np.moveaxis(out, list(range(k)), list(term.sites))


@dataclass(frozen=True, eq=False)
class ParentHamiltonian:
    n_parties: int
    local_terms: tuple[LocalTerm, ...]
    kind: str
    interaction_length: int
    couplings: dict[str, float] = field(default_factory=dict)
    boundary: str = "periodic"
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def constructive(self) -> bool:
        return self.kind == "constructive"

    def terms_norm(self) -> float:
        """Sum of spectral norms of the local terms."""
        if "terms_norm" not in self._cache:
            self._cache["terms_norm"] = float(sum(np.linalg.norm(t.matrix, 2) for t in self.local_terms))
        return self._cache["terms_norm"]

    def pauli(self) -> PauliSum:
        if "pauli" not in self._cache:
            acc: dict = {}
            for t in self.local_terms:
                for key, c in t.local_pauli().placed(t.sites, self.n_parties).coefficients().items():
                    acc[key] = acc.get(key, 0j) + c
            self._cache["pauli"] = PauliSum(self.n_parties, acc)
        return self._cache["pauli"]

    def matvec(self, vec: np.ndarray) -> np.ndarray:
        n = self.n_parties
        v = np.asarray(vec, dtype=complex)
        batch = v.reshape(2 ** n, -1)
        psi = batch.reshape([2] * n + [batch.shape[1]])
        out = np.zeros_like(psi)
        for t in self.local_terms:
            out += _apply_local(t, psi, n)
        return out.reshape(v.shape)

    def dense(self, tol: ToleranceConfig = DEFAULT) -> np.ndarray:
        if self.n_parties > tol.n_full_cap:
            raise StateTooLargeError(f"N={self.n_parties} exceeds the dense cap {tol.n_full_cap}")
        h = self.matvec(np.eye(2 ** self.n_parties, dtype=complex))
        return 0.5 * (h + h.conj().T)

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n_parties, "boundary": self.boundary, "terms": self.pauli().to_json_terms()}


def _windows(n: int, length: int) -> list[tuple[int, ...]]:
    return [tuple((i + j) % n for j in range(length)) for i in range(n)]


def assemble_parent(
    state: SymmetricState,
    n_local: int,
    lambda_sym: float = 1.0,
    tol: ToleranceConfig = DEFAULT,
) -> ParentHamiltonian:
    """Sum of translated kernel projectors plus lambda_sym times singlet projectors."""
    n = state.n_parties
    if n < 2:
        raise ValueError("parent Hamiltonians need N >= 2")
    if lambda_sym <= 0:
        raise ValueError(f"lambda_sym must be positive, got {lambda_sym}")
    proj = kernel_projector(state, n_local, tol)
    block = proj.full_matrix()
    block_pauli = PauliSum.from_dense(block)
    singlet = singlet_projector().scaled(lambda_sym)
    singlet_block = singlet.dense()
    terms = [LocalTerm(w, block, block_pauli) for w in _windows(n, n_local)]
    terms += [LocalTerm(w, singlet_block, singlet) for w in _windows(n, 2)]
    return ParentHamiltonian(
        n_parties=n,
        local_terms=tuple(terms),
        kind="constructive",
        interaction_length=n_local,
        couplings={"lambda_sym": float(lambda_sym)},
    )


def _check(condition: bool, text: str) -> None:
    if not condition:
        raise CouplingError(f"coupling condition violated: {text}")


def paper_hamiltonian(
    which: str,
    n: int,
    J: float = 1.0,
    Jz: float | None = None,
    gamma: float = 1.0,
) -> ParentHamiltonian:
    """The explicit GHZ, W and X chain Hamiltonians with periodic boundary.

    ghz: J sum sigma_i . sigma_(i+1) - Jz sum Z_i Z_(i+1), needs Jz > 0 and Jz > 2J.
    w:   J sum [-2 Z_i + Z_i Z_(i+1) - gamma sigma_i . sigma_(i+1)], needs J > 0, gamma > 0.
    x:   (Jz/3) sum [3 + 3 Z_i Z_(i+1) Z_(i+2) - pairwise Z Z - sum_j Z_(i+j)]
         + (J/4) sum (1 - sigma_i . sigma_(i+1)), needs J > 0, Jz > 0.
    """
    which = which.lower()
    if which == "ghz":
        Jz = 3.0 if Jz is None else Jz
        _check(Jz > 0, f"J_z > 0 (J_z={Jz})")
        _check(Jz > 2 * J, f"J_z > 2J (J_z={Jz}, J={J})")
        if n < 2:
            raise ValueError("the ghz Hamiltonian needs N >= 2")
        bond = heisenberg_bond(0, 1, 2, J) + PauliSum.from_terms(2, [((0, 1), "ZZ", -Jz)])
        parts = [(bond, 2)]
        couplings = {"J": J, "Jz": Jz}
    elif which == "w":
        _check(J > 0, f"J > 0 (J={J})")
        _check(gamma > 0, f"gamma > 0 (gamma={gamma})")
        if n < 2:
            raise ValueError("the w Hamiltonian needs N >= 2")
        bond = PauliSum.from_terms(2, [((0,), "Z", -2 * J), ((0, 1), "ZZ", J)]) + heisenberg_bond(0, 1, 2, -J * gamma)
        parts = [(bond, 2)]
        couplings = {"J": J, "gamma": gamma}
    elif which == "x":
        Jz = 1.0 if Jz is None else Jz
        _check(J > 0, f"J > 0 (J={J})")
        _check(Jz > 0, f"J_z > 0 (J_z={Jz})")
        if n < 3:
            raise ValueError("the x Hamiltonian needs N >= 3")
        c = Jz / 3.0
        triple = PauliSum.from_terms(
            3,
            [((), "", 3 * c), ((0, 1, 2), "ZZZ", 3 * c)]
            + [(pair, "ZZ", -c) for pair in ((0, 1), (0, 2), (1, 2))]
            + [((j,), "Z", -c) for j in range(3)],
        )
        singlet = singlet_projector().scaled(J)
        parts = [(triple, 3), (singlet, 2)]
        couplings = {"J": J, "Jz": Jz}
    else:
        raise ValueError(f"unknown Hamiltonian family {which!r}; expected one of {', '.join(PAPER_FAMILIES)}")
    terms = []
    for local, length in parts:
        block = local.dense()
        terms += [LocalTerm(w, block, local) for w in _windows(n, length)]
    return ParentHamiltonian(
        n_parties=n,
        local_terms=tuple(terms),
        kind=which,
        interaction_length=max(length for _, length in parts),
        couplings={k: float(v) for k, v in couplings.items()},
    )


@dataclass(frozen=True)
class GroundReport:
    residual: float
    residual_kind: str
    energy: float
    terms_norm: float
    ground_overlap: float | None = None
    ground_degeneracy: int | None = None
    min_eigenvalue: float | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "residual": self.residual,
            "residual_kind": self.residual_kind,
            "energy": self.energy,
            "terms_norm": self.terms_norm,
            "ground_overlap": self.ground_overlap,
            "ground_degeneracy": self.ground_degeneracy,
            "min_eigenvalue": self.min_eigenvalue,
        }


def _local_bound(h: ParentHamiltonian, state: SymmetricState) -> tuple[float, float]:
    """Energy and a residual bound from reduced density matrices alone.

    Every window of a symmetric state carries the same reduced state, so for a
    term h_i with mean e_i we have |(h_i - e_i) psi|^2 = <h_i^2> - e_i^2, and the
    triangle inequality bounds |(H - E) psi| by the sum over terms.
    """
    energy = 0.0
    bound = 0.0
    rdm_cache: dict[int, np.ndarray] = {}
    for t in h.local_terms:
        k = len(t.sites)
        if k not in rdm_cache:
            s = dicke_isometry(k)
            rdm = np.outer(state.normalize().dicke, state.normalize().dicke.conj()) if k == state.n_parties else reduced_density(state, k).matrix
            rdm_cache[k] = s @ rdm @ s.conj().T
        rho = rdm_cache[k]
        e = float(np.trace(t.matrix @ rho).real)
        e2 = float(np.trace(t.matrix.conj().T @ t.matrix @ rho).real)
        energy += e
        bound += np.sqrt(max(e2 - e * e, 0.0))
    return energy, float(bound)


def verify_ground(h: ParentHamiltonian, state: SymmetricState, tol: ToleranceConfig = DEFAULT) -> GroundReport:
    """Check that the state is a ground state (or at least an eigenstate) of H.

    Up to ``tol.spectral_cap`` qubits the dense spectrum is computed and the
    residual is |H psi - E_min psi|. Up to ``tol.n_full_cap`` the residual is
    taken against the Rayleigh quotient (zero for the constructive form).
    Beyond that, a bound from reduced density matrices is reported and the
    spectral fields stay empty.
    """
    if state.n_parties != h.n_parties:
        raise ValueError(f"state has N={state.n_parties} but the Hamiltonian has N={h.n_parties}")
    n = h.n_parties
    norm = h.terms_norm()
    if n > tol.n_full_cap:
        energy, bound = _local_bound(h, state)
        return GroundReport(bound, "local_bound", energy, norm)
    psi = to_full_vector(state.normalize(), tol).amplitudes
    hpsi = h.matvec(psi)
    if n <= tol.spectral_cap:
        evals, evecs = np.linalg.eigh(h.dense(tol))
        e_min = float(evals[0])
        window = 1e-8 * max(1.0, norm)
        ground = evecs[:, evals <= e_min + window]
        overlap = float(np.sum(np.abs(ground.conj().T @ psi) ** 2))
        return GroundReport(
            residual=float(np.linalg.norm(hpsi - e_min * psi)),
            residual_kind="exact",
            energy=e_min,
            terms_norm=norm,
            ground_overlap=overlap,
            ground_degeneracy=int(ground.shape[1]),
            min_eigenvalue=e_min,
        )
    energy = 0.0 if h.constructive else float(np.vdot(psi, hpsi).real)
    return GroundReport(float(np.linalg.norm(hpsi - energy * psi)), "exact", energy, norm)
