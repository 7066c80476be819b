"""Eigenbasis of the flip-sum Laplacian and the fast change of basis.

The Laplacian diagonalizes over signed vectors indexed by the same node
bitmasks as the canonical basis.  The change of basis has kernel
(-1)**popcount(g & ~s) / sqrt(dim) in (row s, column g), which factors as a
diagonal sign (-1)**popcount(g) followed by the plain ±1 tensor-product
transform; that factorization is what makes the O(dim * (L+1)) butterfly
evaluation possible, and it is cross-checked against the literal kernel in
the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._walsh import parity_signs, walsh_transform, walsh_transform_inplace
from .operators import StateVector
from .subsets import Level, cardinality


@dataclass(frozen=True)
class SpectrumEntry:
    eigenvalue: int
    multiplicity: int
    card: int


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of the Laplacian with multiplicities, ascending.

    The eigenvalue 2k is carried by the signed basis vectors whose index has
    popcount L+1-k (the `card` field), so its multiplicity is the binomial
    coefficient C(L+1, k).
    """

    level: Level
    entries: tuple[SpectrumEntry, ...]

    def eigenvalues(self) -> list[int]:
        return [e.eigenvalue for e in self.entries]

    def multiplicities(self) -> list[int]:
        return [e.multiplicity for e in self.entries]

    def to_json_dict(self) -> dict:
        return {
            "L": self.level.L,
            "entries": [
                {"eigenvalue": e.eigenvalue, "multiplicity": e.multiplicity, "card": e.card}
                for e in self.entries
            ],
        }


def eigenvalue_of(sigma: int, level: Level) -> int:
    """Laplacian eigenvalue of the signed basis vector indexed by sigma."""
    level.validate_node(sigma)
    return 2 * (level.L + 1 - cardinality(sigma))


def eigenvalues_by_index(level: Level) -> np.ndarray:
    """Float array of the eigenvalue at every basis index."""
    cards = np.bitwise_count(np.arange(level.dim, dtype=np.uint64)).astype(np.float64)
    return 2.0 * (level.L + 1 - cards)


def spectrum(level: Level) -> Spectrum:
    """Full spectrum: eigenvalues {0, 2, ..., 2(L+1)} with binomial multiplicities."""
    m = level.L + 1
    entries = tuple(
        SpectrumEntry(eigenvalue=2 * k, multiplicity=math.comb(m, k), card=m - k)
        for k in range(m + 1)
    )
    return Spectrum(level=level, entries=entries)


def to_eigenbasis(state: StateVector) -> StateVector:
    """Coefficients of the state on the signed eigenbasis.

    Unitary: applies the diagonal parity sign, the ±1 butterfly, and the
    1/sqrt(dim) normalization.
    """
    n = state.level.dim
    work = parity_signs(n) * state.amps
    walsh_transform_inplace(work)
    work *= 1.0 / math.sqrt(n)
    return StateVector(state.level, work)


def from_eigenbasis(coeffs: StateVector) -> StateVector:
    """Inverse change of basis (transpose of the forward kernel): butterfly
    first, then the diagonal parity sign, then 1/sqrt(dim)."""
    n = coeffs.level.dim
    work = walsh_transform(coeffs.amps)
    work *= parity_signs(n)
    work *= 1.0 / math.sqrt(n)
    return StateVector(coeffs.level, work)
