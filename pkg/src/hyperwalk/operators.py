"""State vectors over the subset-indexed basis and the operators acting on them.

Amplitudes live in a flat complex array indexed by node bitmask, so every
basis operator here is either an index permutation or a short combination of
permutations; nothing in the hot path touches a matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._walsh import flip_bit, parity_signs, sign_column
from .formatting import dumps_json
from .subsets import Level

DENSE_CAP = 4096
NORM_TOL = 1e-12

MATRIX_KINDS = ("laplacian", "involution", "hat")


@dataclass
class StateVector:
    """Vector in the 2**(L+1)-dimensional walk space; amps[sigma] is the
    coefficient on the basis vector of node sigma."""

    level: Level
    amps: np.ndarray

    def __post_init__(self) -> None:
        amps = np.ascontiguousarray(self.amps, dtype=np.complex128)
        if amps.shape != (self.level.dim,):
            raise ValueError(
                f"amplitude array must have shape ({self.level.dim},), got {amps.shape}"
            )
        self.amps = amps

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def is_normalized(self, tol: float = NORM_TOL) -> bool:
        return abs(float(np.vdot(self.amps, self.amps).real) - 1.0) <= tol

    def normalized(self) -> "StateVector":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return StateVector(self.level, self.amps / n)

    def copy(self) -> "StateVector":
        return StateVector(self.level, self.amps.copy())


def basis_state(level: Level, sigma: int) -> StateVector:
    """One-hot state at node sigma."""
    level.validate_node(sigma)
    amps = np.zeros(level.dim, dtype=np.complex128)
    amps[sigma] = 1.0
    return StateVector(level, amps)


def vacuum_state(level: Level) -> StateVector:
    """One-hot state at the empty set."""
    return basis_state(level, 0)


def require_same_level(a: StateVector, b: StateVector) -> Level:
    if a.level != b.level:
        raise ValueError(f"mismatched levels: L={a.level.L} vs L={b.level.L}")
    return a.level


def apply_involution(k: int, state: StateVector) -> StateVector:
    """Flip element k: swap amplitudes of every pair of nodes differing in k.

    A self-inverse index permutation, hence exactly unitary.
    """
    if not 0 <= k <= state.level.L:
        raise ValueError(f"flip index {k} out of range [0, {state.level.L}]")
    return StateVector(state.level, flip_bit(state.amps, k))


def apply_involution_product(sigma: int, state: StateVector) -> StateVector:
    """Compose the single-element flips over all elements of sigma.

    The flips commute, so the product is order-free and acts as one XOR
    relabeling: out[g] = in[g ^ sigma].  The empty product is the identity.
    """
    level = state.level
    level.validate_node(sigma)
    if sigma == 0:
        return state.copy()
    idx = np.arange(level.dim, dtype=np.intp) ^ sigma
    return StateVector(level, state.amps[idx])


def apply_hat_involution(sigma: int, state: StateVector) -> StateVector:
    """Signed sum of all XOR relabelings, with sign depending on sigma.

    Algebraically this equals dim times the orthogonal projection onto one
    signed basis vector, which is how it is evaluated here (two O(dim)
    passes instead of 2**(L+1) permutation terms).  Composing it with itself
    scales by dim; distinct sigma annihilate each other.
    """
    level = state.level
    level.validate_node(sigma)
    signs = parity_signs(level.dim)
    col = sign_column(sigma, level.dim)
    coeff = np.dot(col, signs * state.amps)
    return StateVector(level, coeff * (signs * col))


def apply_laplacian(state: StateVector) -> StateVector:
    """(L+1) times the state minus the sum of all single-element flips.

    Self-adjoint and positive semidefinite; not unitary, so the output is
    returned raw and never renormalized.
    """
    level = state.level
    out = (level.L + 1) * state.amps
    for k in range(level.L + 1):
        out -= flip_bit(state.amps, k)
    return StateVector(level, out)


def inner_product(a: StateVector, b: StateVector) -> complex:
    """Hermitian inner product, conjugate-linear in the first argument."""
    require_same_level(a, b)
    return complex(np.vdot(a.amps, b.amps))


def materialize_matrix(
    kind: str, level: Level, index: int | None = None, dense_cap: int = DENSE_CAP
) -> np.ndarray:
    """Dense matrix of an operator in the node basis, column by column.

    Entry [tau, sigma] is the coefficient of the image of the one-hot state
    at sigma on the basis vector of tau.  kind is one of "laplacian",
    "involution" (index = flip element) or "hat" (index = sign subset).
    Intended as a small-scale oracle; gated by dense_cap.
    """
    if kind not in MATRIX_KINDS:
        raise ValueError(f"unknown operator kind {kind!r}; expected one of {MATRIX_KINDS}")
    if level.dim > dense_cap:
        raise ValueError(f"dimension {level.dim} exceeds dense cap {dense_cap}")
    if kind == "laplacian":
        op = apply_laplacian
    elif kind == "involution":
        if index is None:
            raise ValueError("involution matrix requires the flip element index")

        def op(s: StateVector) -> StateVector:
            return apply_involution(index, s)

    else:
        if index is None:
            raise ValueError("hat matrix requires the sign subset index")

        def op(s: StateVector) -> StateVector:
            return apply_hat_involution(index, s)
    dim = level.dim
    mat = np.empty((dim, dim), dtype=np.complex128)
    for sigma in range(dim):
        mat[:, sigma] = op(basis_state(level, sigma)).amps
    return mat


def matrix_to_json(matrix: np.ndarray) -> str:
    """Row-major JSON export of a dense complex matrix as [re, im] pairs."""
    rows, cols = matrix.shape
    entries = [
        [float(matrix[r, c].real), float(matrix[r, c].imag)]
        for r in range(rows)
        for c in range(cols)
    ]
    return dumps_json({"rows": rows, "cols": cols, "entries": entries})
