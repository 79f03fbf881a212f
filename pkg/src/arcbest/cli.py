"""Command line interface: ``arcbest fit|table|plot|verify``."""

from __future__ import annotations

import argparse
import io
import math
import sys

import numpy as np

from . import lemmas
from .error_analysis import ErrorKind, extrema, radial_from_simplified
from .exceptions import DomainError, NumericalError
from .families import DEGREES, control_points
from .geometry import make_arc, sample_curve
from .report import FitReport, fmt_fixed, fmt_sci
from .solver import SolverConfig, best_fit, half_angle_label

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3
EXIT_USAGE = 64
EXIT_IO = 74

TABLE_ANGLES = tuple(math.pi / k for k in (2, 3, 4, 6, 8, 12))


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _float_list(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma separated list of numbers: {text!r}")


def _degree_list(text):
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma separated list of integers: {text!r}")
    bad = [v for v in values if v not in DEGREES]
    if bad or not values:
        raise argparse.ArgumentTypeError(f"degrees must be among {DEGREES}, got {text!r}")
    return values


def _add_arc_args(p):
    p.add_argument("--degree", type=int, choices=DEGREES, default=2)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--half-angle", type=float, help="half-angle of the arc in radians")
    group.add_argument("--degrees-angle", type=float, help="half-angle of the arc in degrees")
    p.add_argument("--error", choices=[k.value for k in ErrorKind], default="radial")
    p.add_argument("--tol", type=float, default=1e-12, help="equioscillation tolerance")


def build_parser():
    parser = _Parser(prog="arcbest", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("fit", help="best approximant for one arc")
    _add_arc_args(p)
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--out")

    p = sub.add_parser("table", help="optimal parameters for several angles")
    p.add_argument("--degrees", type=_degree_list, default=[2])
    p.add_argument("--angles", type=_float_list, default=list(TABLE_ANGLES))
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--format", choices=["csv"], default="csv")
    p.add_argument("--out")

    p = sub.add_parser("plot", help="error or curve samples as CSV or SVG")
    _add_arc_args(p)
    p.add_argument("--what", choices=["error", "curve"], default="error")
    p.add_argument("--format", choices=["csv", "svg"], default="csv")
    p.add_argument("--samples", type=int, default=1001)
    p.add_argument("--d", type=float, help="plot this family parameter instead of the optimum")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="run the sampled lemma checks")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _half_angle(args):
    if args.half_angle is not None:
        return args.half_angle
    if args.degrees_angle is not None:
        return math.radians(args.degrees_angle)
    raise UsageError("one of --half-angle or --degrees-angle is required")


def _config(args):
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    return SolverConfig(epsilon=args.tol)


def cmd_fit(args, out):
    arc = make_arc(_half_angle(args))
    result = best_fit(args.degree, arc, ErrorKind(args.error), _config(args))
    out.write(FitReport.from_result(result).to_json() + "\n")
    return EXIT_OK


def table_rows(degrees, angles, cfg):
    for degree in degrees:
        for angle in angles:
            arc = make_arc(angle)
            radial = best_fit(degree, arc, ErrorKind.RADIAL, cfg)
            simplified = best_fit(degree, arc, ErrorKind.SIMPLIFIED, cfg)
            at_ds = extrema(degree, arc, simplified.d_star, ErrorKind.RADIAL).max_abs
            yield degree, angle, radial.d_star, radial.profile.max_abs, simplified.d_star, at_ds


def cmd_table(args, out):
    cfg = _config(args)
    lines = ["degree,half_angle,d_r,phi_max_at_dr,d_s,phi_max_at_ds"]
    for degree, angle, d_r, e_r, d_s, e_s in table_rows(args.degrees, args.angles, cfg):
        lines.append(
            ",".join([str(degree), half_angle_label(angle), fmt_fixed(d_r), fmt_sci(e_r), fmt_fixed(d_s), fmt_sci(e_s)])
        )
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def plot_data(args):
    """Header and rows for the requested plot."""
    arc = make_arc(_half_angle(args))
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    if args.d is None:
        d = best_fit(args.degree, arc, ErrorKind(args.error), _config(args)).d_star
    else:
        d = args.d
    curve = control_points(args.degree, arc, d)
    ts = np.linspace(-1.0, 1.0, args.samples)
    pts = sample_curve(curve, ts)
    if args.what == "error":
        psi = np.einsum("ij,ij->i", pts, pts) - 1.0
        phi = radial_from_simplified(psi)
        return ("t", "phi", "psi"), {"phi": np.column_stack([ts, phi]), "psi": np.column_stack([ts, psi])}
    angles = np.linspace(-arc.half_angle, arc.half_angle, args.samples)
    arc_pts = np.column_stack([np.cos(angles), np.sin(angles)])
    arc_pts[0] = (arc.c, -arc.s)
    arc_pts[-1] = (arc.c, arc.s)
    return ("series", "x", "y"), {"curve": pts, "arc": arc_pts}


def _csv(header, series):
    lines = [",".join(header)]
    if header[0] == "t":
        phi, psi = series["phi"], series["psi"]
        for (t, a), (_, b) in zip(phi, psi):
            lines.append(f"{float(t)!r},{float(a)!r},{float(b)!r}")
    else:
        for name, pts in series.items():
            lines += [f"{name},{float(x)!r},{float(y)!r}" for x, y in pts]
    return "\n".join(lines) + "\n"


def _svg(header, series, size=600, pad=30):
    allpts = np.vstack(list(series.values()))
    lo = allpts.min(axis=0)
    hi = allpts.max(axis=0)
    span = np.where(hi - lo > 0, hi - lo, 1.0)
    if header[0] == "series":
        span[:] = span.max()

    def to_px(p):
        x = pad + (p[:, 0] - lo[0]) / span[0] * (size - 2 * pad)
        y = size - pad - (p[:, 1] - lo[1]) / span[1] * (size - 2 * pad)
        return " ".join(f"{a:.3f},{b:.3f}" for a, b in zip(x, y))

    colours = {"phi": "black", "psi": "gray", "curve": "black", "arc": "gray"}
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    if header[0] == "t" and lo[1] <= 0 <= hi[1]:
        axis = to_px(np.array([[lo[0], 0.0], [hi[0], 0.0]]))
        out.append(f'<polyline points="{axis}" fill="none" stroke="#bbb" stroke-width="1"/>')
    for name, pts in series.items():
        dash = ' stroke-dasharray="6,4"' if name in ("psi", "arc") else ""
        out.append(
            f'<polyline id="{name}" points="{to_px(pts)}" fill="none" stroke="{colours[name]}" stroke-width="1.5"{dash}/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def cmd_plot(args, out):
    header, series = plot_data(args)
    out.write(_csv(header, series) if args.format == "csv" else _svg(header, series))
    return EXIT_OK


def cmd_verify(args, out):
    if args.samples < 100:
        raise UsageError("--samples must be at least 100")
    report = lemmas.verify_lemma_suite(args.samples, args.seed)
    out.write("\n".join(report.lines()) + "\n")
    if not report.passed:
        names = ", ".join(ch.name for ch in report.failures)
        print(f"arcbest: verification failed: {names}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


COMMANDS = {"fit": cmd_fit, "table": cmd_table, "plot": cmd_plot, "verify": cmd_verify}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        buffer = io.StringIO()
        code = COMMANDS[args.command](args, buffer)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"arcbest: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except NumericalError as exc:
        print(f"arcbest: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    try:
        if getattr(args, "out", None):
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(buffer.getvalue())
        else:
            sys.stdout.write(buffer.getvalue())
    except OSError as exc:
        print(f"arcbest: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())
