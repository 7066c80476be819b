"""In-place ±1 butterfly transform and sign-vector helpers."""

from __future__ import annotations

import numpy as np


def walsh_transform_inplace(a: np.ndarray) -> None:
    """Unnormalized tensor-product ±1 transform, in place.

    Length must be a power of two.  One butterfly stage per index bit; the
    stages commute, so the result at index s is sum_g (-1)**popcount(s & g) * a[g]
    regardless of stage order.  O(n log n) with O(n) scratch per stage.
    """
    n = a.shape[0]
    h = 1
    while h < n:
        v = a.reshape(-1, 2 * h)
        lo = v[:, :h] + v[:, h:]
        hi = v[:, :h] - v[:, h:]
        v[:, :h] = lo
        v[:, h:] = hi
        h *= 2


def walsh_transform(a: np.ndarray) -> np.ndarray:
    """Copying variant of :func:`walsh_transform_inplace` (complex output)."""
    out = np.array(a, dtype=np.complex128, copy=True)
    walsh_transform_inplace(out)
    return out


def parity_signs(n: int) -> np.ndarray:
    """Vector of (-1)**popcount(i) for i in [0, n), as float64."""
    counts = np.bitwise_count(np.arange(n, dtype=np.uint64))
    return 1.0 - 2.0 * (counts & 1).astype(np.float64)


def sign_column(sigma: int, n: int) -> np.ndarray:
    """Vector of (-1)**popcount(i & sigma): one column of the unnormalized transform."""
    counts = np.bitwise_count(np.arange(n, dtype=np.uint64) & np.uint64(sigma))
    return 1.0 - 2.0 * (counts & 1).astype(np.float64)


def flip_bit(amps: np.ndarray, k: int) -> np.ndarray:
    """New array with entries at indices differing in bit k swapped."""
    h = 1 << k
    return amps.reshape(-1, 2, h)[:, ::-1, :].reshape(amps.shape[0])
