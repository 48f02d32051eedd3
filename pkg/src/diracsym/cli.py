"""Command line front end.

    diracsym verify {algebra|so8|lorentz|known|fw|all} [options]
    diracsym spectrum [options]

Defaults may be placed in a JSON file named by the DIRACSYM_CONFIG
environment variable (keys matching the option names, e.g. {"grid": 32,
"zalpha": 0.0072973525693}).  Exit status is nonzero only when an exact
or numeric claim fails; contested findings are reported but never fail.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .claims import GROUPS, RunConfig, render_machine, render_text, run_suite

ENV_CONFIG = "DIRACSYM_CONFIG"


def _load_env_defaults() -> dict:
    path = os.environ.get(ENV_CONFIG)
    if not path:
        return {}
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise SystemExit(f"{ENV_CONFIG} file must hold a JSON object")
    return data


def _add_common(p: argparse.ArgumentParser, defaults: dict):
    p.add_argument("--grid", type=int, default=defaults.get("grid", 32),
                   help="grid points per axis (power of two, >= 16)")
    p.add_argument("--box", type=float, default=defaults.get("box", 10.0),
                   help="periodic box side, units of 1/m")
    p.add_argument("--mass", type=float, default=defaults.get("mass", 1.0),
                   help="fermion mass (hbar = c = 1)")
    p.add_argument("--zalpha", type=float,
                   default=defaults.get("zalpha", 1.0 / 137.035999084),
                   help="coupling Z*alpha, must lie in (0, 1)")
    p.add_argument("--tol-exact-numeric", type=float,
                   default=defaults.get("tol_exact_numeric", 1e-8),
                   help="tolerance separating verified-numeric from failed "
                        "for multiplier/matrix identities")
    p.add_argument("--seed", type=int, default=defaults.get("seed", 752),
                   help="test-state ensemble seed (recorded in reports)")
    p.add_argument("--form", choices=("FW-A", "FW-B", "both"),
                   default=defaults.get("form", "both"),
                   help="which potential-term normalization columns to emit")
    p.add_argument("--out", type=Path, default=defaults.get("out"),
                   help="write the report to this path instead of stdout")
    p.add_argument("--format", choices=("machine", "text"),
                   default=defaults.get("format", "text"),
                   help="machine: stable JSON; text: human summary")


def build_parser() -> argparse.ArgumentParser:
    defaults = _load_env_defaults()
    parser = argparse.ArgumentParser(
        prog="diracsym",
        description="verify the symmetry-algebra claims for the Coulomb-"
                    "bound Dirac equation")
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run a claim group (or all)")
    pv.add_argument("group", choices=GROUPS[:-1] + ("all",),
                    help="claim group to execute")
    pv.add_argument("--claims", default=None,
                    help="comma-separated claim ids overriding the group")
    _add_common(pv, defaults)

    ps = sub.add_parser("spectrum", help="bound-state solver against the "
                                         "closed-form energies")
    _add_common(ps, defaults)
    return parser


def _config_from_args(args) -> RunConfig:
    return RunConfig(grid_n=args.grid, box=args.box, mass=args.mass,
                     zalpha=args.zalpha, seed=args.seed,
                     tol_numeric=args.tol_exact_numeric, form=args.form)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.command == "spectrum":
        selection = "spectrum"
    elif args.claims:
        selection = args.claims
    elif args.group == "all":
        selection = None
    else:
        selection = args.group

    try:
        doc = run_suite(cfg, selection)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    text = render_machine(doc) if args.format == "machine" else render_text(doc)
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return doc["summary"]["exit_code"]


if __name__ == "__main__":
    raise SystemExit(main())
