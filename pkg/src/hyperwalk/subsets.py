"""Bitmask arithmetic for subsets of {0, ..., L}.

A node is a subset of {0, ..., L} encoded little-endian as a nonnegative
integer (element k set iff bit k set), so the node doubles as the index of
its basis vector in a state array of length 2**(L+1).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_MAX_LEVEL = 24
MAX_LEVEL_ENV_VAR = "HYPERWALK_L_MAX"


def max_level() -> int:
    """Active cap on the walk order L: env override, else 24."""
    raw = os.environ.get(MAX_LEVEL_ENV_VAR)
    if raw is None or raw == "":
        return DEFAULT_MAX_LEVEL
    return int(raw)


@dataclass(frozen=True)
class Level:
    """Walk order L with the derived index space [0, 2**(L+1))."""

    L: int

    def __post_init__(self) -> None:
        cap = max_level()
        if not isinstance(self.L, int) or isinstance(self.L, bool):
            raise ValueError(f"L must be an integer, got {self.L!r}")
        if not 0 <= self.L <= cap:
            raise ValueError(f"L must be in [0, {cap}], got {self.L}")

    @property
    def dim(self) -> int:
        return 1 << (self.L + 1)

    @property
    def full_mask(self) -> int:
        """Bitmask of the full ground set {0, ..., L}."""
        return self.dim - 1

    def validate_node(self, sigma: int) -> int:
        if not isinstance(sigma, int) or isinstance(sigma, bool):
            raise ValueError(f"node must be an integer bitmask, got {sigma!r}")
        if not 0 <= sigma < self.dim:
            raise ValueError(f"node {sigma} out of range [0, {self.dim}) for L={self.L}")
        return sigma


def cardinality(sigma: int) -> int:
    """Number of elements of the subset (population count of the mask)."""
    if sigma < 0:
        raise ValueError(f"node mask must be nonnegative, got {sigma}")
    return sigma.bit_count()


def symmetric_difference(sigma: int, tau: int) -> int:
    """Elements in exactly one of the two subsets; bitwise XOR of the masks."""
    if sigma < 0 or tau < 0:
        raise ValueError("node masks must be nonnegative")
    return sigma ^ tau


def complement(sigma: int, level: Level) -> int:
    """{0, ..., L} minus sigma.  An involution on [0, dim)."""
    level.validate_node(sigma)
    return level.full_mask ^ sigma


def elements(sigma: int) -> list[int]:
    """Ascending list of the elements of the subset."""
    if sigma < 0:
        raise ValueError(f"node mask must be nonnegative, got {sigma}")
    return [k for k in range(sigma.bit_length()) if sigma >> k & 1]


def format_node(sigma: int) -> str:
    """Canonical node string: ascending comma-separated elements in braces.

    The empty set prints as "{}".
    """
    return "{" + ",".join(str(k) for k in elements(sigma)) + "}"


def parse_node(text: str, level: Level) -> int:
    """Parse a node string into a bitmask.

    Accepts "" or "∅" or "{}" for the empty set, otherwise comma-separated
    distinct integers in [0, L], optionally wrapped in braces.  Parsing the
    canonical output of :func:`format_node` round-trips.
    """
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1].strip()
    if body in ("", "∅"):
        return 0
    bits = 0
    for token in body.split(","):
        tok = token.strip()
        try:
            k = int(tok)
        except ValueError:
            raise ValueError(f"malformed element {token!r} in node string {text!r}") from None
        if not 0 <= k <= level.L:
            raise ValueError(f"element {k} out of range [0, {level.L}] in node string {text!r}")
        if bits >> k & 1:
            raise ValueError(f"duplicate element {k} in node string {text!r}")
        bits |= 1 << k
    return bits
