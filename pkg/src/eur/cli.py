"""Command-line harness: sweep the acceleration channel and emit CSV rows.

Each row evaluates the uncertainty sum and both memory-assisted bounds
on the chosen initial state after its memory half passes through the
channel at one grid point. The sweep variable is the acceleration `a` by
default; sweeping the mixing angle `r` directly is supported because `r`
is the reproducible parameterization when absolute accelerations are not
meaningful.
"""

import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from .bounds import evaluate_eur
from .channels import UnruhParams, apply_to_memory, unruh_channel, unruh_r
from .measurement import pauli_observable
from .states import bell_diagonal_p, x_state

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVARIANT = 3
EXIT_IO = 4

R_MAX = math.pi / 4
CSV_HEADER = "a,r,lhs,berta,holevo,delta"

# Flag values the named presets expand to; explicit flags override them.
PRESETS = {
    "fig1": {"state": "bell", "p": 0.5, "obs": "x,y", "omega": 0.1},
    "fig2": {"state": "x", "p": 1.0, "obs": "x,y", "omega": 0.1},
}

_BASE = {
    "state": "bell",
    "p": 0.5,
    "obs": "x,y",
    "omega": 0.1,
    "a_min": 0.0,
    "a_max": None,  # resolved to 20 * omega * 2pi once omega is known
    "steps": 101,
    "sweep_var": "a",
    "out": "eur_sweep.csv",
}


@dataclass(frozen=True)
class SweepConfig:
    """Fully resolved sweep parameters.

    `a_min`/`a_max` bound the sweep variable: accelerations when
    sweep_var is "a", mixing angles (within [0, pi/4]) when it is "r".
    """

    state: str
    p: float
    obs: tuple
    omega: float
    a_min: float
    a_max: float
    steps: int
    sweep_var: str
    out_path: str

    def __post_init__(self):
        if self.state not in ("bell", "x"):
            raise ValueError(f"state must be 'bell' or 'x', got {self.state!r}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if len(self.obs) != 2 or any(axis not in ("x", "y", "z") for axis in self.obs):
            raise ValueError(f"obs must be two of x, y, z, got {self.obs!r}")
        if not (math.isfinite(self.omega) and self.omega > 0.0):
            raise ValueError(f"omega must be finite and > 0, got {self.omega}")
        if not (math.isfinite(self.a_min) and self.a_min >= 0.0):
            raise ValueError(f"a-min must be finite and >= 0, got {self.a_min}")
        if not (math.isfinite(self.a_max) and self.a_max >= self.a_min):
            raise ValueError(f"a-max must be finite and >= a-min, got {self.a_max}")
        if self.sweep_var not in ("a", "r"):
            raise ValueError(f"sweep-var must be 'a' or 'r', got {self.sweep_var!r}")
        if self.sweep_var == "r" and self.a_max > R_MAX:
            raise ValueError(f"r sweep bound must lie in [0, pi/4], got a-max {self.a_max}")
        if self.steps < 2:
            raise ValueError(f"steps must be >= 2, got {self.steps}")


@dataclass(frozen=True)
class SweepRow:
    """One evaluated grid point; `a` is None when sweeping r directly."""

    a: float | None
    r: float
    lhs: float
    berta: float
    holevo: float
    delta: float


def row_violation(row: SweepRow) -> str | None:
    """Name the violated row invariant, or return None if all hold."""
    if row.lhs < row.berta - 1e-9:
        return f"lhs {row.lhs:.12g} below berta {row.berta:.12g}"
    if row.lhs < row.holevo - 1e-9:
        return f"lhs {row.lhs:.12g} below holevo {row.holevo:.12g}"
    if row.holevo < row.berta - 1e-12:
        return f"holevo {row.holevo:.12g} below berta {row.berta:.12g}"
    return None


def run_sweep(cfg: SweepConfig) -> list:
    """Evaluate the uncertainty report on an evenly spaced grid, ascending."""
    q = pauli_observable(cfg.obs[0])
    r_obs = pauli_observable(cfg.obs[1])
    initial = bell_diagonal_p(cfg.p) if cfg.state == "bell" else x_state(cfg.p)

    rows = []
    for value in np.linspace(cfg.a_min, cfg.a_max, cfg.steps):
        if cfg.sweep_var == "a":
            a = float(value)
            r = unruh_r(UnruhParams(a=a, omega=cfg.omega))
        else:
            a = None
            r = float(value)
        evolved = apply_to_memory(unruh_channel(r), initial)
        report = evaluate_eur(q, r_obs, evolved)
        rows.append(
            SweepRow(
                a=a,
                r=r,
                lhs=report.lhs,
                berta=report.berta_bound,
                holevo=report.holevo_bound,
                delta=report.delta,
            )
        )
    return rows


def _fmt(x: float) -> str:
    return format(x, ".12g")


def emit_csv(rows, path: str) -> None:
    """Write rows as CSV: 12 significant digits, LF endings, overwrite."""
    if not rows:
        raise ValueError("no rows to write")
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(CSV_HEADER + "\n")
        for row in rows:
            fields = [
                "" if row.a is None else _fmt(row.a),
                _fmt(row.r),
                _fmt(row.lhs),
                _fmt(row.berta),
                _fmt(row.holevo),
                _fmt(row.delta),
            ]
            fh.write(",".join(fields) + "\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eur",
        description="Uncertainty-bound sweeps for a qubit memory degraded by acceleration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sweep = sub.add_parser("sweep", help="evaluate bounds over an acceleration grid and write CSV")
    sweep.add_argument("--preset", choices=sorted(PRESETS), default=None,
                       help="named parameter set; explicit flags override its values")
    sweep.add_argument("--state", choices=["bell", "x"], default=None,
                       help="initial two-qubit family (default bell)")
    sweep.add_argument("--p", type=float, default=None, dest="p",
                       help="family parameter in [0, 1] (default 0.5)")
    sweep.add_argument("--obs", default=None,
                       help="comma-separated Pauli axes, e.g. x,y (default x,y)")
    sweep.add_argument("--omega", type=float, default=None,
                       help="Dirac mode frequency > 0 (default 0.1)")
    sweep.add_argument("--a-min", type=float, default=None, dest="a_min",
                       help="lower sweep bound (default 0)")
    sweep.add_argument("--a-max", type=float, default=None, dest="a_max",
                       help="upper sweep bound (default 20*omega*2pi, or pi/4 when sweeping r)")
    sweep.add_argument("--steps", type=int, default=None,
                       help="number of grid points, >= 2 (default 101)")
    sweep.add_argument("--sweep-var", choices=["a", "r"], default=None, dest="sweep_var",
                       help="sweep the acceleration or the mixing angle directly (default a)")
    sweep.add_argument("--out", default=None, help="output CSV path (default eur_sweep.csv)")
    return parser


def parse_args(argv=None) -> SweepConfig:
    """Resolve flags, preset and defaults into a validated SweepConfig.

    Exits with code 2 (via argparse) on unknown flags, malformed numbers
    or constraint violations, naming the offending field.
    """
    parser = _build_parser()
    ns = parser.parse_args(argv)

    merged = dict(_BASE)
    if ns.preset is not None:
        merged.update(PRESETS[ns.preset])
    for key in ("state", "p", "obs", "omega", "a_min", "a_max", "steps", "sweep_var", "out"):
        value = getattr(ns, key)
        if value is not None:
            merged[key] = value

    try:
        if merged["a_max"] is None:
            if merged["sweep_var"] == "r":
                merged["a_max"] = R_MAX
            else:
                if not (math.isfinite(merged["omega"]) and merged["omega"] > 0.0):
                    raise ValueError(f"omega must be finite and > 0, got {merged['omega']}")
                merged["a_max"] = 20.0 * merged["omega"] * 2.0 * math.pi
        axes = tuple(part.strip().lower() for part in str(merged["obs"]).split(","))
        return SweepConfig(
            state=merged["state"],
            p=merged["p"],
            obs=axes,
            omega=merged["omega"],
            a_min=merged["a_min"],
            a_max=merged["a_max"],
            steps=merged["steps"],
            sweep_var=merged["sweep_var"],
            out_path=merged["out"],
        )
    except ValueError as exc:
        parser.error(str(exc))


def main(argv=None) -> int:
    """Entry point. Exit codes: 0 ok, 2 usage, 3 result invariant, 4 I/O."""
    cfg = parse_args(argv)
    rows = run_sweep(cfg)
    for index, row in enumerate(rows):
        problem = row_violation(row)
        if problem is not None:
            print(f"error: row {index}: {problem}", file=sys.stderr)
            return EXIT_INVARIANT
    try:
        emit_csv(rows, cfg.out_path)
    except OSError as exc:
        print(f"error: cannot write {cfg.out_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK
