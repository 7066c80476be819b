"""Hypercube view of the node set: adjacency, combinatorial Laplacian, exports.

Nodes are adjacent when their masks differ in exactly one bit, which makes
the node set the (L+1)-dimensional hypercube graph.  The graph is never
stored; everything derives from the adjacency predicate.
"""

from __future__ import annotations

import numpy as np

from .formatting import dumps_json
from .operators import DENSE_CAP, StateVector
from .subsets import Level, format_node

GRAPH_FORMATS = ("dot", "json", "edge-list")
EXPORT_CAP = 4096


def is_adjacent(sigma: int, tau: int) -> bool:
    """True when the symmetric difference has exactly one element."""
    if sigma < 0 or tau < 0:
        raise ValueError("node masks must be nonnegative")
    return (sigma ^ tau).bit_count() == 1


def neighborhood(sigma: int, level: Level) -> list[int]:
    """All L+1 neighbors of a node, ascending by bitmask."""
    level.validate_node(sigma)
    return sorted(sigma ^ (1 << k) for k in range(level.L + 1))


def edge_count(level: Level) -> int:
    return level.dim * (level.L + 1) // 2


def edges(level: Level) -> list[tuple[int, int]]:
    """Every edge once, smaller index first, sorted lexicographically."""
    out = []
    for sigma in range(level.dim):
        for k in range(level.L + 1):
            tau = sigma ^ (1 << k)
            if sigma < tau:
                out.append((sigma, tau))
    return out


def graph_laplacian_apply(f: StateVector) -> StateVector:
    """Combinatorial Laplacian on vertex functions: sum over neighbors of
    f(vertex) - f(neighbor), i.e. degree * f minus the neighbor sum."""
    level = f.level
    deg = level.L + 1
    idx = np.arange(level.dim, dtype=np.intp)
    out = deg * f.amps
    for k in range(deg):
        out = out - f.amps[idx ^ (1 << k)]
    return StateVector(level, out)


def unitary_F(direction: str, v: StateVector) -> StateVector:
    """Identification between vertex functions and walk states.

    Both spaces index their basis by the same node bitmask, so the map is
    the coordinate identity; it exists as an explicit operation so the
    equivalence statements have a direct call target.  direction is "to_h"
    (vertex functions to walk states) or "to_C" (the inverse).
    """
    if direction not in ("to_h", "to_C"):
        raise ValueError(f"direction must be 'to_h' or 'to_C', got {direction!r}")
    return v.copy()


def adjacency_matrix(level: Level, dense_cap: int = DENSE_CAP) -> np.ndarray:
    """Dense 0/1 adjacency matrix built from the adjacency predicate."""
    if level.dim > dense_cap:
        raise ValueError(f"dimension {level.dim} exceeds dense cap {dense_cap}")
    idx = np.arange(level.dim, dtype=np.uint64)
    xor = idx[:, None] ^ idx[None, :]
    return (np.bitwise_count(xor) == 1).astype(np.int64)


def graph_laplacian_matrix(level: Level, dense_cap: int = DENSE_CAP) -> np.ndarray:
    """Dense integer Laplacian: degree on the diagonal minus adjacency."""
    adj = adjacency_matrix(level, dense_cap)
    return (level.L + 1) * np.eye(level.dim, dtype=np.int64) - adj


def graph_json_dict(level: Level) -> dict:
    return {
        "L": level.L,
        "vertices": level.dim,
        "edges": [[a, b] for a, b in edges(level)],
    }


def export_graph(level: Level, fmt: str) -> str:
    """Text export of the graph; deterministic vertex and edge order."""
    if fmt not in GRAPH_FORMATS:
        raise ValueError(f"unknown graph format {fmt!r}; expected one of {GRAPH_FORMATS}")
    if level.dim > EXPORT_CAP:
        raise ValueError(
            f"graph with {level.dim} vertices too large for export (cap {EXPORT_CAP})"
        )
    if fmt == "dot":
        lines = [f'graph "hypercube_L{level.L}" {{']
        for a, b in edges(level):
            lines.append(f'  "{format_node(a)}" -- "{format_node(b)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "edge-list":
        return "".join(f"{format_node(a)} {format_node(b)}\n" for a, b in edges(level))
    return dumps_json(graph_json_dict(level)) + "\n"
