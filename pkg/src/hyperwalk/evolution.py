"""Time evolution of the walk through three interchangeable engines.

The generator has even integer eigenvalues, so the evolution unitary is
exactly pi-periodic in time.  Engines:

* ``spectral`` (default): change of basis, diagonal phases, change back;
  O(dim * (L+1)) per call, no cached resources.
* ``product``: the commuting factor product, one factor per element, each
  acting as phase * (cos t - i sin t * flip); exercises the involution
  algebra with no transform.
* ``dense``: cached dense eigenvector matrix; applies the diagonalized
  unitary through dense products.  Gated to dim <= DENSE_CAP and used as
  the small-scale oracle.
"""

from __future__ import annotations

import math

import numpy as np

from ._walsh import flip_bit, parity_signs
from .operators import DENSE_CAP, NORM_TOL, StateVector
from .spectral import eigenvalues_by_index, from_eigenbasis, to_eigenbasis
from .subsets import Level

ENGINE_KINDS = ("spectral", "product", "dense")


def reduce_time(t: float) -> float:
    """Canonical representative of t modulo the period pi, in [0, pi)."""
    if not math.isfinite(t):
        raise ValueError(f"time must be finite, got {t!r}")
    r = math.fmod(t, math.pi)
    if r < 0.0:
        r += math.pi
    if r >= math.pi:  # rounding of the negative branch can land exactly on pi
        r = 0.0
    return r


def _dense_basis(level: Level) -> np.ndarray:
    """Dense orthogonal matrix whose column s is the signed basis vector s."""
    h = np.array([[1.0, 1.0], [1.0, -1.0]])
    mat = np.array([[1.0]])
    for _ in range(level.L + 1):
        mat = np.kron(mat, h)
    mat *= parity_signs(level.dim)[:, None]
    mat /= math.sqrt(level.dim)
    return mat


class EvolutionEngine:
    """Handle selecting one evolution strategy for a fixed level.

    Immutable after construction; concurrent evolve calls on one engine are
    safe because every call works on its own buffers.
    """

    def __init__(self, level: Level, kind: str = "spectral"):
        if kind not in ENGINE_KINDS:
            raise ValueError(f"unknown engine kind {kind!r}; expected one of {ENGINE_KINDS}")
        if kind == "dense" and level.dim > DENSE_CAP:
            raise ValueError(
                f"dense engine requires dim <= {DENSE_CAP}, got {level.dim} (L={level.L})"
            )
        self.kind = kind
        self.level = level
        self._basis = _dense_basis(level) if kind == "dense" else None
        self._eigenvalues = eigenvalues_by_index(level) if kind == "dense" else None

    def __repr__(self) -> str:
        return f"EvolutionEngine(level=Level({self.level.L}), kind={self.kind!r})"


def evolve(
    engine: EvolutionEngine,
    initial: StateVector,
    t: float,
    renormalize: bool = False,
) -> StateVector:
    """State at time t from the given initial state.

    The input must be normalized; pass renormalize=True to scale it instead
    of rejecting it.  Output norm is preserved to machine precision.
    """
    if not math.isfinite(t):
        raise ValueError(f"time must be finite, got {t!r}")
    if engine.level != initial.level:
        raise ValueError(
            f"engine level L={engine.level.L} does not match state level L={initial.level.L}"
        )
    if not initial.is_normalized(NORM_TOL):
        if renormalize:
            initial = initial.normalized()
        else:
            raise ValueError(
                f"initial state is not normalized (norm {initial.norm()!r}); "
                "pass renormalize=True to scale it"
            )
    if engine.kind == "spectral":
        return _evolve_spectral(engine.level, initial, t)
    if engine.kind == "product":
        return _evolve_product(engine.level, initial, t)
    return _evolve_dense(engine, initial, t)


def _evolve_spectral(level: Level, initial: StateVector, t: float) -> StateVector:
    # reduction is exact by periodicity and keeps phase arguments small
    t_red = reduce_time(t)
    coeffs = to_eigenbasis(initial)
    coeffs.amps *= np.exp(1j * t_red * eigenvalues_by_index(level))
    return from_eigenbasis(coeffs)


def _evolve_product(level: Level, initial: StateVector, t: float) -> StateVector:
    cos_t = math.cos(t)
    sin_t = math.sin(t)
    phase = complex(math.cos(t), math.sin(t))
    out = initial.amps
    for k in range(level.L + 1):
        out = phase * (cos_t * out - 1j * sin_t * flip_bit(out, k))
    return StateVector(level, out)


def _evolve_dense(engine: EvolutionEngine, initial: StateVector, t: float) -> StateVector:
    basis = engine._basis
    coeffs = basis.T @ initial.amps
    coeffs *= np.exp(1j * t * engine._eigenvalues)
    return StateVector(engine.level, basis @ coeffs)


def materialize_unitary(level: Level, t: float, dense_cap: int = DENSE_CAP) -> np.ndarray:
    """Dense evolution unitary at time t, built from the diagonalization.

    Small-scale cross-check target; gated by dense_cap.
    """
    if not math.isfinite(t):
        raise ValueError(f"time must be finite, got {t!r}")
    if level.dim > dense_cap:
        raise ValueError(f"dimension {level.dim} exceeds dense cap {dense_cap}")
    basis = _dense_basis(level)
    phases = np.exp(1j * t * eigenvalues_by_index(level))
    return (basis * phases[None, :]) @ basis.T
