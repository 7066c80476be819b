"""Command-line frontend: spectra, evolution, time averages, transfer checks, graphs.

Output is deterministic byte for byte: fixed float formatting, fixed key and
row order.  Exit codes: 0 success, 1 runtime failure, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from .evolution import ENGINE_KINDS, EvolutionEngine, evolve
from .formatting import dumps_json, format_float
from .graph import GRAPH_FORMATS, export_graph, graph_json_dict
from .measure import (
    TIME_AVERAGE_METHODS,
    Distribution,
    distribution_at,
    distribution_csv,
    is_symmetric,
    time_average,
)
from .operators import basis_state
from .spectral import spectrum
from .subsets import Level, format_node, parse_node

SCHEMA = "hyperwalk/1"

_METHOD_FLAGS = {"quadrature": "quadrature", "pair-sum": "pair_sum", "krawtchouk": "krawtchouk"}


def _parse_pi_fraction(text: str) -> float:
    """Parse "p/q" (or "p") as the time p*pi/q, avoiding decimal truncation."""
    body = text.strip()
    num_str, _, den_str = body.partition("/")
    try:
        num = int(num_str)
        den = int(den_str) if den_str else 1
    except ValueError:
        raise ValueError(f"expected an integer fraction like '1/2', got {text!r}") from None
    if den == 0:
        raise ValueError(f"zero denominator in pi fraction {text!r}")
    return math.pi * num / den


def _resolve_time(value: float | None, fraction: str | None, default: float | None = None) -> float:
    if fraction is not None:
        return _parse_pi_fraction(fraction)
    if value is not None:
        if not math.isfinite(value):
            raise ValueError(f"time must be finite, got {value!r}")
        return value
    if default is not None:
        return default
    raise ValueError("a time is required (use --t or --t-pi-fraction)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperwalk",
        description="Simulate the hypercube continuous-time quantum walk. "
        "Set HYPERWALK_L_MAX to override the default level cap of 24.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="eigenvalues and multiplicities of the generator")
    _add_level(sp)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    _add_out(sp)
    sp.set_defaults(handler=cmd_spectrum)

    ev = sub.add_parser("evolve", help="distribution (and amplitudes) at a given time")
    _add_level(ev)
    group = ev.add_mutually_exclusive_group(required=True)
    group.add_argument("--t", type=float, help="evolution time (dimensionless)")
    group.add_argument("--t-pi-fraction", metavar="P/Q", help="time as an exact multiple of pi")
    ev.add_argument("--initial", default="", help="initial node string (default: empty set)")
    ev.add_argument("--engine", choices=ENGINE_KINDS, default="spectral")
    ev.add_argument("--amplitudes", action="store_true", help="include [re, im] amplitude pairs")
    ev.add_argument("--format", choices=("json", "csv"), default="json")
    _add_out(ev)
    ev.set_defaults(handler=cmd_evolve)

    ta = sub.add_parser("time-average", help="period-averaged distribution")
    _add_level(ta)
    ta.add_argument("--method", choices=tuple(_METHOD_FLAGS), default="quadrature")
    ta.add_argument("--initial", default="", help="initial node string (default: empty set)")
    ta.add_argument("--engine", choices=ENGINE_KINDS, default="spectral")
    ta.add_argument("--tol", type=float, default=1e-10)
    ta.add_argument("--format", choices=("json", "csv"), default="json")
    _add_out(ta)
    ta.set_defaults(handler=cmd_time_average)

    ps = sub.add_parser("pst", help="transfer fidelities from a source node")
    _add_level(ps)
    ps.add_argument("--from", dest="source", default="", help="source node string")
    group = ps.add_mutually_exclusive_group()
    group.add_argument("--t0", type=float, help="transfer time (default pi/2)")
    group.add_argument("--t0-pi-fraction", metavar="P/Q", help="transfer time as a multiple of pi")
    ps.add_argument("--engine", choices=ENGINE_KINDS, default="spectral")
    ps.add_argument("--tol", type=float, default=1e-10)
    ps.add_argument("--format", choices=("json", "csv"), default="json")
    _add_out(ps)
    ps.set_defaults(handler=cmd_pst)

    gr = sub.add_parser("graph", help="export the hypercube graph")
    _add_level(gr)
    gr.add_argument("--format", choices=GRAPH_FORMATS, default="dot")
    _add_out(gr)
    gr.set_defaults(handler=cmd_graph)

    return parser


def _add_level(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--L", type=int, required=True, help="walk order (>= 0)")


def _add_out(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", default=None, metavar="FILE", help="write output to FILE")


def cmd_spectrum(args: argparse.Namespace) -> str:
    spec = spectrum(Level(args.L))
    if args.format == "csv":
        lines = ["eigenvalue,multiplicity,card"]
        for entry in spec.entries:
            lines.append(f"{entry.eigenvalue},{entry.multiplicity},{entry.card}")
        return "\n".join(lines) + "\n"
    doc = {"schema": SCHEMA, **spec.to_json_dict()}
    return dumps_json(doc) + "\n"


def cmd_evolve(args: argparse.Namespace) -> str:
    level = Level(args.L)
    t = _resolve_time(args.t, args.t_pi_fraction)
    initial_node = parse_node(args.initial, level)
    engine = EvolutionEngine(level, args.engine)
    state = evolve(engine, basis_state(level, initial_node), t)
    probs = np.abs(state.amps) ** 2
    if args.format == "csv":
        lines = ["node,probability" + (",amp_re,amp_im" if args.amplitudes else "")]
        for sigma in range(level.dim):
            row = f'"{format_node(sigma)}",{format_float(float(probs[sigma]))}'
            if args.amplitudes:
                amp = state.amps[sigma]
                row += f",{format_float(float(amp.real))},{format_float(float(amp.imag))}"
            lines.append(row)
        return "\n".join(lines) + "\n"
    doc: dict = {
        "schema": SCHEMA,
        "L": level.L,
        "engine": args.engine,
        "initial": format_node(initial_node),
        "t": t,
        "probs": [float(p) for p in probs],
    }
    if args.amplitudes:
        doc["amps"] = [[float(a.real), float(a.imag)] for a in state.amps]
    return dumps_json(doc) + "\n"


def cmd_time_average(args: argparse.Namespace) -> str:
    level = Level(args.L)
    method = _METHOD_FLAGS[args.method]
    initial_node = parse_node(args.initial, level)
    engine = EvolutionEngine(level, args.engine) if method == "quadrature" else None
    dist = time_average(basis_state(level, initial_node), method=method, engine=engine)
    report = is_symmetric(dist, args.tol)
    if args.format == "csv":
        body = distribution_csv(dist)
        return body + f"# symmetry_max_deviation,{format_float(report.max_deviation)}\n"
    doc = {
        "schema": SCHEMA,
        "L": level.L,
        "method": args.method,
        "initial": format_node(initial_node),
        "probs": [float(p) for p in dist.probs],
        "symmetry_max_deviation": report.max_deviation,
        "symmetric": report.symmetric,
    }
    return dumps_json(doc) + "\n"


def cmd_pst(args: argparse.Namespace) -> str:
    level = Level(args.L)
    source = parse_node(args.source, level)
    t0 = _resolve_time(args.t0, args.t0_pi_fraction, default=math.pi / 2)
    engine = EvolutionEngine(level, args.engine)
    state = evolve(engine, basis_state(level, source), t0)
    fidelities = np.abs(state.amps)
    best = int(np.argmax(fidelities))
    best_fid = float(fidelities[best])
    if args.format == "csv":
        dist = Distribution(level=level, probs=fidelities.astype(np.float64))
        return distribution_csv(dist, value_header="fidelity")
    doc = {
        "schema": SCHEMA,
        "L": level.L,
        "from": format_node(source),
        "t0": t0,
        "engine": args.engine,
        "best_target": format_node(best),
        "best_fidelity": best_fid,
        "is_pst": best_fid >= 1.0 - args.tol,
        "fidelities": [float(f) for f in fidelities],
    }
    return dumps_json(doc) + "\n"


def cmd_graph(args: argparse.Namespace) -> str:
    level = Level(args.L)
    if args.format == "json":
        doc = {"schema": SCHEMA, **graph_json_dict(level)}
        return dumps_json(doc) + "\n"
    return export_graph(level, args.format)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code) if exc.code is not None else 0
    try:
        text = args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - unexpected runtime failure
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        try:
            sys.stdout.write(text)
            sys.stdout.flush()
        except BrokenPipeError:
            # downstream reader (e.g. head) closed the pipe; exit quietly
            devnull = os.open(os.devnull, os.O_WRONLY)
            os.dup2(devnull, sys.stdout.fileno())
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
