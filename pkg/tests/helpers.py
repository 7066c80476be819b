"""Shared test oracles: literal-definition implementations kept independent
of the library's fast paths."""

from __future__ import annotations

import cmath

import numpy as np

from hyperwalk import Level, StateVector


def popcount(x: int) -> int:
    return bin(x).count("1")


def setminus_card(a: int, b: int, full: int) -> int:
    """Cardinality of (a minus b) inside the ground set mask."""
    return popcount(a & ~b & full)


def literal_kernel_matrix(L: int) -> np.ndarray:
    """Unnormalized signed basis kernel, entry [gamma, sigma] = (-1)**#(gamma minus sigma).

    Column sigma, divided by sqrt(dim), is the literal signed basis vector.
    Built with Python loops so it shares nothing with the butterfly code.
    """
    dim = 1 << (L + 1)
    full = dim - 1
    mat = np.empty((dim, dim), dtype=np.int64)
    for gamma in range(dim):
        for sigma in range(dim):
            mat[gamma, sigma] = (-1) ** setminus_card(gamma, sigma, full)
    return mat


def literal_hat_apply(sigma: int, state: StateVector) -> np.ndarray:
    """Sum over all subsets g of (-1)**#(g minus sigma) times the XOR-by-g relabeling."""
    dim = state.level.dim
    full = state.level.full_mask
    idx = np.arange(dim, dtype=np.intp)
    out = np.zeros(dim, dtype=np.complex128)
    for gamma in range(dim):
        out += (-1) ** setminus_card(gamma, sigma, full) * state.amps[idx ^ gamma]
    return out


def literal_vacuum_prob(sigma: int, t: float, L: int) -> float:
    """Vacuum-start occupation probability of sigma at time t, by the literal
    sum over all subsets (no cardinality grouping)."""
    dim = 1 << (L + 1)
    full = dim - 1
    z = sum(
        (-1) ** setminus_card(sigma, gamma, full)
        * cmath.exp(2j * (L + 1 - popcount(gamma)) * t)
        for gamma in range(dim)
    )
    return abs(z) ** 2 / dim**2


def literal_time_average(sigma: int, L: int) -> float:
    """Vacuum-start time average of sigma by the literal double loop over
    equal-cardinality subset pairs."""
    dim = 1 << (L + 1)
    full = dim - 1
    total = 0
    for g1 in range(dim):
        for g2 in range(dim):
            if popcount(g1) == popcount(g2):
                total += (-1) ** (
                    setminus_card(sigma, g1, full) + setminus_card(sigma, g2, full)
                )
    return total / dim**2


def expm_unitary_via_eigh(hermitian: np.ndarray, t: float) -> np.ndarray:
    """exp(i t H) through a LAPACK eigendecomposition; independent of the
    package's transform and engines."""
    w, v = np.linalg.eigh(hermitian)
    return (v * np.exp(1j * t * w)) @ v.conj().T


def random_state(level: Level, rng: np.random.Generator) -> StateVector:
    amps = rng.standard_normal(level.dim) + 1j * rng.standard_normal(level.dim)
    amps /= np.linalg.norm(amps)
    return StateVector(level, amps)
