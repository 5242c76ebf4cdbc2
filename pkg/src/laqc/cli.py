"""Command-line front end: per-state reports, closed-form vs numeric
cross-checks, channel evolution, and the CSV parameter sweeps behind the
figure presets.

Exit codes: 0 success, 2 validation failure, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

import numpy as np

from . import channels as ch
from . import closed_form as cf
from .oracle import SearchConfig, laqc_numeric
from .states import (
    DensityMatrix4,
    StateFamily,
    StateValidationError,
    make_family,
    state_from_json,
    x_params_from_density,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3

FAMILY_CHOICES = ("werner", "psi-minus-mix", "ara-mix", "verstraete-mix")


def _fmt(v: float) -> str:
    """Format a number with 9 significant digits ('.' decimal separator)."""
    return f"{float(v):.9g}"


def _add_state_source(p: argparse.ArgumentParser):
    p.add_argument("--family", choices=FAMILY_CHOICES, help="named state family")
    p.add_argument("--param", type=float, help="family parameter in [0, 1]")
    p.add_argument("--matrix", metavar="FILE", help="JSON file with a 'matrix' state")
    p.add_argument("--bloch", metavar="FILE", help="JSON file with a 'bloch' state")


def _load_state(args) -> DensityMatrix4:
    sources = [s for s in (args.family, args.matrix, args.bloch) if s is not None]
    if len(sources) != 1:
        raise StateValidationError(
            "input", "exactly one of --family, --matrix, --bloch required"
        )
    if args.family is not None:
        if args.param is None:
            raise StateValidationError("input", "--family requires --param")
        return make_family(StateFamily(args.family, args.param))
    return state_from_json(args.matrix or args.bloch)


def _report_dict(rho: DensityMatrix4) -> dict:
    rep = cf.full_report(rho)
    return {
        "symmetry_class": rep.symmetry_class.value,
        "params": dataclasses.asdict(rep.params),
        "g": rep.g.as_dict(),
        "classical": rep.classical_correlations,
        "classical_branch": rep.classical_branch.branch,
        "classical_tied": rep.classical_branch.tied,
        "laqc": rep.laqc,
        "laqc_branch": rep.laqc_branch.branch,
        "laqc_tied": rep.laqc_branch.tied,
        "mutual_information": rep.mutual_information,
        "discord": rep.discord,
        "concurrence": rep.concurrence,
        "method": rep.method,
    }


def _print_report(d: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(d, indent=2))
        return
    order = (
        "symmetry_class",
        "classical",
        "laqc",
        "discord",
        "mutual_information",
        "concurrence",
        "classical_branch",
        "laqc_branch",
        "method",
    )
    for key in order:
        v = d[key]
        print(f"{key:20s} {_fmt(v) if isinstance(v, float) else v}")


def cmd_compute(args) -> int:
    rho = _load_state(args)
    _print_report(_report_dict(rho), args.format)
    return EXIT_OK


def cmd_oracle(args) -> int:
    rho = _load_state(args)
    cfg = SearchConfig(grid=args.grid, rounds=args.rounds, tol=args.tol)
    oracle = laqc_numeric(rho, cfg)
    params = x_params_from_density(rho)
    out = {
        "oracle_classical": oracle.classical,
        "oracle_laqc": oracle.laqc,
        "argmin_theta": oracle.classical_angles.theta1,
        "argmin_phi": oracle.classical_angles.phi1,
        "argmax_Phi1": oracle.phases.Phi1,
        "argmax_Phi2": oracle.phases.Phi2,
        "classical_degenerate": oracle.classical_degenerate,
        "laqc_degenerate": oracle.laqc_degenerate,
    }
    try:
        c_closed, _ = cf.classical_correlations_x(params)
        l_closed, _ = cf.laqc_x(params)
        out.update(
            closed_classical=c_closed,
            closed_laqc=l_closed,
            diff_classical=abs(c_closed - oracle.classical),
            diff_laqc=abs(l_closed - oracle.laqc),
        )
    except ValueError:
        out["closed_form"] = "not applicable (unsupported symmetry class)"
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        for k, v in out.items():
            print(f"{k:22s} {_fmt(v) if isinstance(v, float) else v}")
    return EXIT_OK


def cmd_channel(args) -> int:
    rho = _load_state(args)
    makers = {
        "amplitude-damping": ch.amplitude_damping_kraus,
        "depolarizing": ch.depolarizing_kraus,
        "phase-damping": ch.phase_damping_kraus,
    }
    kraus = makers[args.channel](args.p)
    evolved = ch.apply_channel(rho, kraus, kraus)
    _print_report(_report_dict(evolved), args.format)
    return EXIT_OK


# --- sweeps -----------------------------------------------------------------


def _grid01(n: int) -> np.ndarray:
    return np.linspace(0.0, 1.0, n)


def _rows_fig1(n):
    for z in _grid01(n):
        for p in _grid01(n):
            yield (z, p, ch.s_gap(z, p))


def _rows_fig2(n):
    for z in _grid01(n):
        for p in _grid01(n):
            params = ch.werner_ad_closed_form(z, p)
            laqc, _ = cf.laqc_x(params)
            qd = cf.quantum_discord_x(params).discord
            yield (z, p, laqc, qd, ch.werner_ad_concurrence(z, p))


def _rows_fig3(n):
    for z in _grid01(n):
        for p in _grid01(n):
            yield (z, p, ch.s_prime_gap(z, p))


def _rows_fig4(n):
    for F in _grid01(n):
        params = x_params_from_density(make_family(StateFamily("psi-minus-mix", F)))
        yield (F, cf.g_plus(params.x3, params.T3), cf.g1(params.T1))


def _rows_fig5(n):
    for F in _grid01(n):
        params = x_params_from_density(make_family(StateFamily("psi-minus-mix", F)))
        laqc, _ = cf.laqc_x(params)
        qd = cf.quantum_discord_x(params).discord
        yield (F, laqc, qd, cf.concurrence_x(params))


def _verify_fig1(rows):
    for z, p, s in rows:
        if s < -1e-9:
            raise StateValidationError(
                "sweep-inequality", f"S(z={z}, p={p}) = {s} < 0"
            )


def _verify_fig4(rows):
    for F, gplus, gone in rows:
        if gone - gplus < -1e-9:
            raise StateValidationError(
                "sweep-inequality", f"g1 - gplus = {gone - gplus} < 0 at F={F}"
            )


def _verify_fig5(rows):
    for F, laqc, qd, conc in rows:
        if 0.0 < F < 1.0 and (laqc > qd + 1e-9 or qd > conc + 1e-9):
            raise StateValidationError(
                "sweep-inequality",
                f"expected laqc <= qd <= concurrence at F={F}: "
                f"{laqc}, {qd}, {conc}",
            )


PRESETS = {
    "fig1": (("z", "p", "S"), _rows_fig1, 101, _verify_fig1),
    "fig2": (("z", "p", "laqc", "qd", "concurrence"), _rows_fig2, 101, None),
    "fig3": (("z", "p", "Sprime"), _rows_fig3, 101, None),
    "fig4": (("F", "gplus", "g1"), _rows_fig4, 101, _verify_fig4),
    "fig5": (("F", "laqc", "qd", "concurrence"), _rows_fig5, 101, _verify_fig5),
}


def sweep_rows(preset: str, n: int | None = None):
    """Header and data rows of a figure preset as plain Python values."""
    header, gen, default_n, verify = PRESETS[preset]
    rows = list(gen(n or default_n))
    return header, rows, verify


def write_preset_csv(preset: str, out_path, n: int | None = None, verify: bool = True):
    header, rows, checker = sweep_rows(preset, n)
    if verify and checker is not None:
        checker(rows)
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    text = "\n".join(lines) + "\n"
    with open(out_path, "w", newline="") as fh:
        fh.write(text)


def cmd_sweep(args) -> int:
    if args.out is None:
        raise StateValidationError("input", "--out is required for sweep")
    try:
        write_preset_csv(args.preset, args.out, n=args.count, verify=not args.no_verify)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


# --- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="laqc", description="Two-qubit local-correlations toolkit"
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="correlation report for one state")
    _add_state_source(c)
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_compute)

    o = sub.add_parser("oracle", help="closed form vs numerical search")
    _add_state_source(o)
    o.add_argument("--grid", type=int, default=24)
    o.add_argument("--rounds", type=int, default=4)
    o.add_argument("--tol", type=float, default=1e-6)
    o.add_argument("--format", choices=("text", "json"), default="text")
    o.set_defaults(func=cmd_oracle)

    k = sub.add_parser("channel", help="evolve a state through a channel")
    _add_state_source(k)
    k.add_argument(
        "--channel",
        choices=("amplitude-damping", "depolarizing", "phase-damping"),
        default="amplitude-damping",
    )
    k.add_argument("--p", type=float, required=True, help="channel parameter")
    k.add_argument("--format", choices=("text", "json"), default="text")
    k.set_defaults(func=cmd_channel)

    s = sub.add_parser("sweep", help="write a figure-preset CSV dataset")
    s.add_argument("--preset", choices=sorted(PRESETS), required=True)
    s.add_argument("--count", type=int, default=None, help="grid points per axis")
    s.add_argument("--out", metavar="PATH")
    s.add_argument("--no-verify", action="store_true")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (StateValidationError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
