"""Command-line driver for reproducible scattering experiments.

Subcommands
-----------
phase-shift     per-channel phase shifts for a potential on a k-grid
sweep-a         zero-radius extrapolation of the disc phase shift
cross-section   partial-wave amplitude and differential cross section
sae-check       extension parameter / scale-invariance report
oracle-compare  analytic matching vs. the ODE integrator

Output is deterministic: CSV (header row, 17 significant digits, LF) or
JSON (array of flat objects); every row echoes the input parameters.
The env var SCATTER2D_THREADS caps grid-point parallelism (0 = serial).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, Iterable, List, Sequence

from .errors import Scatter2dError
from . import greens, oracle, sae
from .partialwave import (
    ScatteringConfig,
    inverse_square_phase_shift,
    phase_shift_finite_a,
    zero_radius_limit,
)
from .potentials import (
    ConstantStrength,
    InverseSquare,
    LogRunning,
    PotentialSpec,
    RegularizedDelta,
)

Row = Dict[str, object]


def _fmt(x: object) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def _write_rows(rows: List[Row], fmt: str, path: str | None) -> None:
    if fmt == "csv":
        header = list(rows[0]) if rows else []
        lines = [",".join(header)]
        lines += [",".join(_fmt(r[h]) for h in header) for r in rows]
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(
            [{key: (_fmt(v) if isinstance(v, float) else v) for key, v in r.items()}
             for r in rows],
            indent=2) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)


def _thread_map(fn: Callable, items: Sequence) -> List:
    n = int(os.environ.get("SCATTER2D_THREADS", "0"))
    if n <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))  # input order preserved


def _add_io_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", "-o", default=None, help="output path (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def _add_potential_args(p: argparse.ArgumentParser, wells_only: bool = False) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    if not wells_only:
        g.add_argument("--inverse-square", action="store_true",
                       help="lambda/r^2 potential (with --two-m-lambda)")
    g.add_argument("--scheme", choices=("log", "const"),
                   help="regularized disc: log-running or constant strength")
    p.add_argument("--two-m-lambda", type=float, default=None,
                   help="coupling 2*m*lambda of the inverse-square potential")
    p.add_argument("--a0", type=float, default=None,
                   help="reference radius of the log-running scheme")
    p.add_argument("--v", type=float, default=None,
                   help="strength of the constant scheme")
    p.add_argument("--a", type=float, default=None, help="disc radius")


def _potential(args, cfg: ScatteringConfig, need_a: bool = True) -> PotentialSpec:
    if getattr(args, "inverse_square", False):
        if args.two_m_lambda is None:
            raise Scatter2dError("--inverse-square requires --two-m-lambda")
        return InverseSquare(lam=args.two_m_lambda / (2.0 * cfg.mass_m))
    if args.scheme == "log":
        if args.a0 is None:
            raise Scatter2dError("--scheme log requires --a0")
        scheme = LogRunning(a0=args.a0)
    else:
        if args.v is None:
            raise Scatter2dError("--scheme const requires --v")
        scheme = ConstantStrength(v=args.v)
    if not need_a:
        return scheme  # type: ignore[return-value]
    if args.a is None:
        raise Scatter2dError("disc potentials require --a")
    return RegularizedDelta(scheme=scheme, radius_a=args.a)


def _echo(args, cfg: ScatteringConfig) -> Row:
    row: Row = {"mass_m": cfg.mass_m}
    if getattr(args, "inverse_square", False):
        row["potential"] = "inverse-square"
        row["two_m_lambda"] = args.two_m_lambda
    else:
        row["potential"] = f"delta-{args.scheme}"
        if args.scheme == "log":
            row["a0"] = args.a0
        else:
            row["v"] = args.v
        if getattr(args, "a", None) is not None:
            row["a"] = args.a
    return row


def _cmd_phase_shift(args) -> List[Row]:
    cfg0 = ScatteringConfig(mass_m=args.mass_m, wavenumber_k=args.k[0])

    def one(item):
        ell, k = item
        cfg = ScatteringConfig(mass_m=args.mass_m, wavenumber_k=k)
        if getattr(args, "inverse_square", False):
            p = _potential(args, cfg)
            ps = inverse_square_phase_shift(ell, cfg.mass_m, p.lam)
        else:
            p = _potential(args, cfg)
            ps = phase_shift_finite_a(ell, cfg, p)
        row = _echo(args, cfg)
        row.update(ell=ell, k=k, tan_delta=ps.tan_delta, delta=ps.delta)
        return row

    _potential(args, cfg0)  # validate flags before fanning out
    items = [(ell, k) for ell in args.ell for k in args.k]
    return _thread_map(one, items)


def _cmd_sweep_a(args) -> List[Row]:
    def one(k):
        cfg = ScatteringConfig(mass_m=args.mass_m, wavenumber_k=k)
        scheme = _potential(args, cfg, need_a=False)
        ps = zero_radius_limit(args.ell, cfg, scheme,
                               a_start=args.a_start, shrink=args.shrink,
                               tol=args.tol)
        row = _echo(args, cfg)
        row.update(ell=args.ell, k=k, a_start=args.a_start, shrink=args.shrink,
                   tan_delta0=ps.tan_delta, delta0=ps.delta)
        return row

    return _thread_map(one, args.k)


def _cmd_cross_section(args) -> List[Row]:
    cfg = ScatteringConfig(mass_m=args.mass_m, wavenumber_k=args.k)
    p = _potential(args, cfg)
    shifts = []
    for ell in range(args.ell_max + 1):
        if getattr(args, "inverse_square", False):
            shifts.append(inverse_square_phase_shift(ell, cfg.mass_m, p.lam))
        else:
            shifts.append(phase_shift_finite_a(ell, cfg, p))
    amp = greens.build_amplitude(shifts, cfg.wavenumber_k)
    rows = []
    for i in range(args.n_theta):
        theta = 2.0 * math.pi * i / args.n_theta
        f, dsigma = amp.evaluate(theta)
        row = _echo(args, cfg)
        row.update(k=args.k, ell_max=args.ell_max, theta=theta,
                   re_f=f.real, im_f=f.imag, dsigma=dsigma)
        rows.append(row)
    return rows


def _cmd_sae_check(args) -> List[Row]:
    rows = []
    for t in args.tan_delta0:
        ok = sae.scale_invariance_test(t, tol=args.tol, k=args.k)
        e = sae.near_origin_expansion(t, k=args.k)
        d = sae.dilation_apply(e)
        alpha = sae.extension_alpha(args.c, args.k) if args.c is not None else None
        row: Row = {"k": args.k, "tan_delta0": t, "tol": args.tol,
                    "A": e.A, "B": e.B,
                    "ratio": e.ratio, "dilated_ratio": d.ratio,
                    "scale_invariant": ok}
        if alpha is not None:
            row.update(c=args.c, re_alpha=alpha.real, im_alpha=alpha.imag,
                       abs_alpha=abs(alpha))
        rows.append(row)
        print(f"tan_delta0={_fmt(float(t))} scale-invariant: {_fmt(ok)}")
    return rows


def _cmd_oracle_compare(args) -> List[Row]:
    def one(k):
        cfg = ScatteringConfig(mass_m=args.mass_m, wavenumber_k=k)
        p = _potential(args, cfg)
        if getattr(args, "inverse_square", False):
            analytic = inverse_square_phase_shift(args.ell, cfg.mass_m, p.lam)
            grid = oracle.long_range_grid(k)
        else:
            analytic = phase_shift_finite_a(args.ell, cfg, p)
            grid = oracle.RadialGrid()
        sol = oracle.integrate_radial(args.ell, cfg, p, grid)
        numeric = oracle.extract_phase_shift(sol, cfg, args.ell,
                                             tail_fit=getattr(args, "inverse_square", False))
        row = _echo(args, cfg)
        row.update(ell=args.ell, k=k,
                   tan_delta_analytic=analytic.tan_delta,
                   tan_delta_oracle=numeric.tan_delta,
                   abs_diff=abs(analytic.tan_delta - numeric.tan_delta))
        return row

    return _thread_map(one, args.k)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="scatter2d", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phase-shift", help="phase-shift table over (ell, k)")
    _add_potential_args(p)
    p.add_argument("--mass-m", type=float, default=1.0)
    p.add_argument("--k", type=float, nargs="+", required=True)
    p.add_argument("--ell", type=int, nargs="+", default=[0])
    _add_io_args(p)
    p.set_defaults(fn=_cmd_phase_shift)

    p = sub.add_parser("sweep-a", help="a -> 0 extrapolation of the disc shift")
    _add_potential_args(p, wells_only=True)
    p.add_argument("--mass-m", type=float, default=0.5,
                   help="default 0.5 (the 2m=1 convention of the closed-form limit)")
    p.add_argument("--k", type=float, nargs="+", required=True)
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("--a-start", type=float, default=1e-2)
    p.add_argument("--shrink", type=float, default=0.5)
    p.add_argument("--tol", type=float, default=1e-5)
    _add_io_args(p)
    p.set_defaults(fn=_cmd_sweep_a)

    p = sub.add_parser("cross-section", help="amplitude and dsigma/dtheta profile")
    _add_potential_args(p)
    p.add_argument("--mass-m", type=float, default=1.0)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--ell-max", type=int, default=8)
    p.add_argument("--n-theta", type=int, default=64)
    _add_io_args(p)
    p.set_defaults(fn=_cmd_cross_section)

    p = sub.add_parser("sae-check", help="extension / scale-invariance report")
    p.add_argument("--tan-delta0", type=float, nargs="+", required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("--c", type=float, default=None,
                   help="also report alpha(c, k) for this extension parameter")
    _add_io_args(p)
    p.set_defaults(fn=_cmd_sae_check)

    p = sub.add_parser("oracle-compare", help="matching vs. ODE integrator")
    _add_potential_args(p)
    p.add_argument("--mass-m", type=float, default=1.0)
    p.add_argument("--k", type=float, nargs="+", required=True)
    p.add_argument("--ell", type=int, default=0)
    _add_io_args(p)
    p.set_defaults(fn=_cmd_oracle_compare)
    return ap


def main(argv: Iterable[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(list(argv) if argv is not None else None)
    try:
        rows = args.fn(args)
    except Scatter2dError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    # sae-check already printed its report; write the table only on request
    if args.command != "sae-check" or args.output is not None:
        _write_rows(rows, args.format, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
