"""Batch experiment runner.

Usage examples::

    sphfloat --body cap.json --command body --action validate
    sphfloat --body cap.json --command float --delta 1e-3 --out float.csv
    sphfloat --body cap.json --command converge --schedule 1e-2,1e-3,1e-4 --grid 512
    sphfloat --body cap.json --command check --seed 7

Exit status: 0 on success, 2 when a check fails, 1 on usage or input errors.
CSV numbers are written with 17 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from .body import (body_to_spec, find_pole, is_proper, load_body, polar, volume)
from .errors import GeometryError, UnsupportedBody
from .floatarea import (check_duality, check_enclosure, check_holder, check_valuation,
                        conjecture_gap, convergence_experiment, floating_measure, perimeter,
                        split_by_hemisphere)
from .floatbody import spherical_floating_body
from .quadrature import DirectionGrid
from .sphere import unit_vector

COMMANDS = ("body", "float", "area", "converge", "check", "explore")
DEFAULT_SCHEDULE = (1e-2, 1e-3, 1e-4, 1e-5, 1e-6)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class ExperimentConfig:
    body_spec: str
    command: str
    action: str = "validate"
    delta: float | None = None
    delta_schedule: tuple = DEFAULT_SCHEDULE
    grid_size: int = 512
    output: str | None = None
    seed: int = 0

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.grid_size < 16:
            raise UsageError("--grid must be at least 16")
        s = self.delta_schedule
        if len(s) == 0 or any(d <= 0 for d in s) or any(b >= a for a, b in zip(s, s[1:])):
            raise UsageError("--schedule must be positive and strictly decreasing")
        if self.delta is not None and not self.delta > 0:
            raise UsageError("--delta must be positive")


def fmt(x) -> str:
    if isinstance(x, str):
        return x
    return format(float(x), ".17g")


def _csv(header, rows) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(header)
    for r in rows:
        wr.writerow([fmt(x) for x in r])
    return buf.getvalue()


def _parse_schedule(text: str):
    try:
        return tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise UsageError(f"bad --schedule value: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sphfloat", description="Spherical floating body experiments.")
    p.add_argument("--body", required=True, help="body specification JSON file")
    p.add_argument("--command", required=True, choices=COMMANDS)
    p.add_argument("--action", default="validate", choices=("validate", "dump", "polar"),
                   help="sub-action of the 'body' command")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--delta", type=float)
    g.add_argument("--schedule", type=str, help="comma separated, strictly decreasing")
    p.add_argument("--grid", type=int, default=512, help="number of cut directions")
    p.add_argument("--out", help="output file (default: standard output)")
    p.add_argument("--seed", type=int, default=0, help="seed for random split planes")
    return p


def config_from_args(argv) -> ExperimentConfig:
    ns = build_parser().parse_args(argv)
    schedule = _parse_schedule(ns.schedule) if ns.schedule else DEFAULT_SCHEDULE
    return ExperimentConfig(ns.body, ns.command, ns.action, ns.delta, schedule, ns.grid, ns.out,
                            ns.seed)


def _grid(K, cfg: ExperimentConfig) -> DirectionGrid:
    return DirectionGrid.uniform(find_pole(K), cfg.grid_size)


def _cmd_body(K, cfg):
    if cfg.action == "dump":
        return json.dumps(body_to_spec(K), indent=2) + "\n", 0
    if cfg.action == "polar":
        return json.dumps(body_to_spec(polar(K)), indent=2) + "\n", 0
    proper = is_proper(K)
    rows = [("kind", body_to_spec(K)["kind"]), ("proper", str(proper)),
            ("area", fmt(volume(K)))]
    if proper:
        rows.append(("pole", " ".join(fmt(x) for x in find_pole(K))))
    return "".join(f"{k}: {v}\n" for k, v in rows), 0


def _cmd_float(K, cfg):
    if cfg.delta is None:
        raise UsageError("the float command needs --delta")
    fb = spherical_floating_body(K, cfg.delta, grid=_grid(K, cfg))
    xy = fb.body.region.vertices
    w = fb.body.chart.to_sphere(xy)
    return _csv(["x", "y", "wx", "wy", "wz"], np.hstack([xy, w])), 0


def _cmd_area(K, cfg):
    rep = conjecture_gap(K)
    return _csv(["alpha_param", "omega", "perimeter"],
                [(rep.cap_radius, floating_measure(K), perimeter(K))]), 0


def _cmd_converge(K, cfg):
    schedule = (cfg.delta,) if cfg.delta is not None else cfg.delta_schedule
    if len(schedule) < 4:
        raise UsageError("the converge command needs at least four schedule points")
    res = convergence_experiment(K, schedule=schedule, grid=_grid(K, cfg))
    rows = [(r.delta, r.vol_K, r.vol_float, r.vol_diff, r.quotient) for r in res.rows]
    rows.append(("limit", "", "", "", res.limit))
    return _csv(["delta", "vol_K", "vol_float", "vol_diff", "quotient"], rows), 0


def _split_planes(K, seed: int, count: int = 5):
    """Great circles through the pole in random directions."""
    rng = np.random.default_rng(seed)
    u = find_pole(K)
    out = []
    for _ in range(count):
        z = rng.standard_normal(3)
        out.append(unit_vector(z - (z @ u) * u))
    return out


def _cmd_check(K, cfg):
    rows = []
    failed = False

    def add(rep):
        nonlocal failed
        failed |= not rep.passed
        rows.append((rep.name, rep.lhs, rep.rhs, rep.gap, "PASS" if rep.passed else "FAIL"))

    try:
        add(check_duality(K))
    except UnsupportedBody:
        rows.append(("duality", "", "", "", "SKIP"))
    try:
        add(check_holder(K))
    except UnsupportedBody:
        rows.append(("isoperimetric", "", "", "", "SKIP"))
    add(check_enclosure(K))
    for i, z in enumerate(_split_planes(K, cfg.seed)):
        a, b = split_by_hemisphere(K, z)
        rep = check_valuation(a, b)
        failed |= not rep.passed
        rows.append((f"valuation_{i}", rep.lhs, rep.rhs, rep.gap, "PASS" if rep.passed else "FAIL"))
    return _csv(["check_name", "lhs", "rhs", "gap", "pass"], rows), 2 if failed else 0


def _cmd_explore(K, cfg):
    rep = conjecture_gap(K)
    return _csv(["omega_K", "omega_cap", "cap_radius", "ratio"],
                [(rep.omega_K, rep.omega_cap, rep.cap_radius, rep.ratio)]), 0


_HANDLERS = {"body": _cmd_body, "float": _cmd_float, "area": _cmd_area,
             "converge": _cmd_converge, "check": _cmd_check, "explore": _cmd_explore}


def run(cfg: ExperimentConfig) -> int:
    try:
        K = load_body(cfg.body_spec)
    except OSError as exc:
        raise UsageError(f"cannot read body spec: {exc}") from exc
    except ValueError as exc:
        raise UsageError(f"invalid body spec {cfg.body_spec}: {exc}") from exc
    text, status = _HANDLERS[cfg.command](K, cfg)
    if cfg.output:
        try:
            with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write output: {exc}") from exc
    else:
        sys.stdout.write(text)
    return status


def main(argv=None) -> int:
    try:
        return run(config_from_args(sys.argv[1:] if argv is None else argv))
    except UsageError as exc:
        print(f"sphfloat: error: {exc}", file=sys.stderr)
        return 1
    except GeometryError as exc:
        print(f"sphfloat: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
