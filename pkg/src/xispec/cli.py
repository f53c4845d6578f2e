"""Command-line interface: grid evaluation, zero location, figure data.

Subcommands
-----------
eval FUNC GRID     tabulate a registered function over an omega (or E) grid
zeros FUNC RANGE   locate zeros, optionally matched --against another function
figure ID          emit the CSV (or mesh) behind one of the standard figures

All outputs are deterministic CSV: a `# generated-by, config-hash` comment,
a header row, then rows at 17 significant digits.  Exit codes: 0 success,
2 usage error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import __version__
from .config import Config, load_config
from .cusp import CoefficientPolicy, characteristic_sum, cusp_embedding
from .errors import XispecError
from .riemann_siegel import match_zeros, rs_main_sum, rs_phase
from .semiclassical import WidthFunction, imaginary_time_closed
from .shooting import (characteristic_one_sided, exp_one_sided, find_zeros,
                       morse)
from .special import (bessel_K, big_Z, jacobi_psi, phi, polya_fake_xi,
                      prefactor_f, scaling_S, xi_fourier, xi_zeta)
from .whittaker import whittaker_W

TWO_PI = 2.0 * math.pi


def _parse_grid(spec: str) -> np.ndarray:
    if "," in spec:
        return np.array([float(tok) for tok in spec.split(",") if tok])
    parts = spec.split(":")
    if len(parts) == 1:
        return np.array([float(parts[0])])
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"grid must be 'start:stop:step' or a comma list, got {spec!r}")
    start, stop, step = (float(p) for p in parts)
    if step <= 0 and stop != start:
        raise argparse.ArgumentTypeError("grid step must be positive")
    if stop == start:
        return np.array([start])
    n = int(round((stop - start) / step)) + 1
    pts = start + step * np.arange(n)
    pts[-1] = min(pts[-1], stop)
    return pts


def _writer(path):
    if path in (None, "-"):
        return sys.stdout, lambda: None
    fh = open(path, "w", encoding="utf-8")
    return fh, fh.close


def _emit(fh, cfg: Config, header: list[str], rows):
    fh.write(f"# generated-by=xispec {__version__}, config-hash={cfg.digest()}\n")
    fh.write(",".join(header) + "\n")
    for row in rows:
        fh.write(",".join(f"{v:.17g}" for v in row) + "\n")


# registry: name -> (builder(args, cfg) -> (value_columns, row_fn))
def _registry(args, cfg: Config):
    qc, wc, sc = cfg.quadrature, cfg.whittaker, cfg.shooting

    def scalar(fn):
        return lambda t: (fn(t),)

    table = {
        "xi": (["value"], scalar(lambda o: xi_zeta(o).real)),
        "xi_fourier": (["value"], scalar(lambda o: xi_fourier(o, qc).real)),
        "Z": (["value"], scalar(big_Z)),
        "S": (["value"], scalar(scaling_S)),
        "f": (["value"], scalar(prefactor_f)),
        "phi": (["value"], scalar(lambda t: phi(t, qc))),
        "psi": (["value"], scalar(lambda t: jacobi_psi(t, qc))),
        "rs": (["value"], scalar(rs_main_sum)),
        "rs_phase": (["value"], scalar(rs_phase)),
        "polyafake": (["value"], scalar(lambda o: polya_fake_xi(o, args.order, qc))),
        "K": (["value_re", "value_im"],
              lambda o: _split(bessel_K(args.nu_real + 0.5j * o, args.z, qc))),
        "W": (["value"], scalar(lambda o: whittaker_W(args.kappa, 0.5j * o, args.z, wc))),
        "sumw": (["value"], scalar(
            lambda o: characteristic_sum(_policy(args), o, args.nmax, wc))),
        "morse_shoot": (["value"], scalar(
            lambda o: characteristic_one_sided(morse(args.kappa, args.gamma),
                                               o * o / 4.0, sc))),
        "exp_shoot": (["value"], scalar(
            lambda o: characteristic_one_sided(exp_one_sided(), o * o / 4.0, sc))),
        "T": (["value"], scalar(
            lambda E: imaginary_time_closed(WidthFunction(beta=args.beta,
                                                          gamma=args.gamma), E))),
    }
    return table


def _split(z: complex):
    return (z.real, z.imag)


def _policy(args) -> CoefficientPolicy:
    if args.policy == "square_only":
        return CoefficientPolicy()
    pairs = [tok.split("=") for tok in args.policy.split(",") if tok]
    return CoefficientPolicy(rule="table",
                             table={int(n): float(a) for n, a in pairs})


def cmd_eval(args, cfg: Config) -> int:
    table = _registry(args, cfg)
    if args.function not in table:
        print(f"unknown function {args.function!r}; choose from "
              f"{', '.join(sorted(table))}", file=sys.stderr)
        return 2
    cols, fn = table[args.function]
    grid = args.grid
    rows = [(t, *fn(t)) for t in grid]
    fh, close = _writer(args.output)
    try:
        _emit(fh, cfg, ["argument"] + cols, rows)
    finally:
        close()
    return 0


def cmd_zeros(args, cfg: Config) -> int:
    table = _registry(args, cfg)
    if args.function not in table or (args.against and args.against not in table):
        print(f"unknown function; choose from {', '.join(sorted(table))}",
              file=sys.stderr)
        return 2
    lo, hi = args.range
    fh, close = _writer(args.output)
    try:
        if hi <= lo:
            _emit(fh, cfg, ["zero"], [])
            return 0
        n_grid = max(64, int((hi - lo) * args.density))
        fn = table[args.function][1]
        zs = find_zeros(lambda t: fn(t)[0], lo, hi, n_grid=n_grid)
        if not args.against:
            _emit(fh, cfg, ["zero"], [(z,) for z in zs])
            return 0
        gn = table[args.against][1]
        other = find_zeros(lambda t: gn(t)[0], lo, hi, n_grid=n_grid)
        pairs, unmatched = match_zeros(zs, other, cap=0.5)
        rows = [(a, b, d) for (a, b, d) in pairs]
        _emit(fh, cfg, ["zero", "matched", "displacement"], rows)
        disp = max((d for *_, d in pairs), default=float("nan"))
        fh.write(f"# matched={len(pairs)} unmatched={len(unmatched)} "
                 f"max_displacement={disp:.6g}\n")
    finally:
        close()
    return 0


def _figure_rows(fig: str, cfg: Config):
    qc, wc = cfg.quadrature, cfg.whittaker
    if fig == "xiK":
        om = np.arange(0.0, 100.0 + 1e-9, 0.05)
        c = xi_zeta(0.0).real / bessel_K(0.0, TWO_PI, qc).real
        rows = [(o, scaling_S(o) * xi_zeta(o).real,
                 c * scaling_S(o) * bessel_K(0.5j * o, TWO_PI, qc).real)
                for o in om]
        return ["omega", "S_xi", "cS_K"], rows
    if fig == "xiW":
        om = np.arange(0.0, 50.0 + 1e-9, 0.1)
        pref = 2.0 * math.pi ** -0.25
        rows = [(o, scaling_S(o) * xi_zeta(o).real,
                 scaling_S(o) * pref * whittaker_W(2.25, 0.5j * o, 2 * TWO_PI, wc))
                for o in om]
        return ["omega", "S_xi", "S_P"], rows
    if fig == "polyafake":
        om = np.arange(0.0, 100.0 + 1e-9, 0.05)
        rows = [(o, scaling_S(o) * xi_zeta(o).real,
                 scaling_S(o) * polya_fake_xi(o, 1, qc)) for o in om]
        return ["omega", "S_xi", "S_xistar"], rows
    if fig == "rs":
        om = np.arange(TWO_PI, 100.0 + 1e-9, 0.05)
        rows = [(o, scaling_S(o) * xi_zeta(o).real, rs_main_sum(o)) for o in om]
        return ["omega", "S_xi", "RS"], rows
    if fig == "sumw":
        om = np.arange(0.0, 60.0 + 1e-9, 0.1)
        pol = CoefficientPolicy()
        rows = [(o, scaling_S(o) * xi_zeta(o).real,
                 scaling_S(o) * characteristic_sum(pol, o, 9, wc)) for o in om]
        return ["omega", "S_xi", "S_sum"], rows
    raise XispecError(f"unknown figure id {fig!r}")


def cmd_figure(args, cfg: Config) -> int:
    known = ("xiK", "xiW", "polyafake", "rs", "sumw", "cusp")
    if args.id not in known:
        print(f"unknown figure {args.id!r}; choose from {', '.join(known)}",
              file=sys.stderr)
        return 2
    fh, close = _writer(args.output)
    try:
        if args.id == "cusp":
            fh.write(f"# generated-by=xispec {__version__}, "
                     f"config-hash={cfg.digest()}\n")
            ys = np.geomspace(1.0 / TWO_PI, 4.0, 72)
            xs = np.linspace(0.0, 1.0, 97)
            for y in ys:
                for x in xs:
                    px, py, pz = cusp_embedding(float(x), float(y))
                    fh.write(f"{px:.17g} {py:.17g} {pz:.17g}\n")
            return 0
        header, rows = _figure_rows(args.id, cfg)
        _emit(fh, cfg, header, rows)
    finally:
        close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="xispec",
        description="spectral numerics around the Riemann xi function")
    ap.add_argument("--config", default=None,
                    help="INI config path (default: $XISPEC_CONFIG or built-ins)")
    sub = ap.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="tabulate a function over a grid")
    pe.add_argument("function")
    pe.add_argument("grid", type=_parse_grid,
                    help="start:stop:step (inclusive) or comma list")
    pe.add_argument("-o", "--output", default=None, help="CSV path (default stdout)")
    _common_function_flags(pe)
    pe.set_defaults(fn=cmd_eval)

    pz = sub.add_parser("zeros", help="locate zeros on a range")
    pz.add_argument("function")
    pz.add_argument("range", type=_parse_range, help="lo:hi")
    pz.add_argument("--against", default=None,
                    help="second function for zero matching")
    pz.add_argument("--density", type=float, default=8.0,
                    help="scan points per unit argument")
    pz.add_argument("-o", "--output", default=None)
    _common_function_flags(pz)
    pz.set_defaults(fn=cmd_zeros)

    pf = sub.add_parser("figure", help="emit the data behind a figure")
    pf.add_argument("id", help="xiK | xiW | polyafake | rs | sumw | cusp")
    pf.add_argument("-o", "--output", default=None)
    pf.set_defaults(fn=cmd_figure)
    return ap


def _parse_range(spec: str):
    parts = spec.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("range must be lo:hi")
    return float(parts[0]), float(parts[1])


def _common_function_flags(p):
    p.add_argument("--kappa", type=float, default=2.25)
    p.add_argument("--gamma", type=float, default=0.0)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--z", type=float, default=TWO_PI)
    p.add_argument("--nu-real", dest="nu_real", type=float, default=0.0)
    p.add_argument("--order", type=int, default=1, choices=(1, 2))
    p.add_argument("--nmax", type=int, default=9)
    p.add_argument("--policy", default="square_only",
                   help="'square_only' or 'n=a' pairs, comma separated")


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = load_config(args.config)
        return args.fn(args, cfg)
    except XispecError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
