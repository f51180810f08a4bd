"""Command-line front end: scans and reports as CSV or JSON.

All floating-point output is printed with 12 significant digits; CSV uses LF
line endings and a header row.  Identical invocations produce byte-identical
output.  Exit codes: 0 success, 2 invalid arguments, 3 numeric/truncation
failure.
"""

import argparse
import json
import math
import sys

import numpy as np

from . import bell, errata, fock, gaussian, photon
from .errors import InvalidParameterError, NumericError

__all__ = ["main", "run"]


def _parse_range(text: str) -> np.ndarray:
    """Inclusive start:step:end grid (both ends kept within 1e-12 slack)."""
    try:
        start, step, end = (float(part) for part in text.split(":"))
    except ValueError as exc:
        raise InvalidParameterError(f"range must look like start:step:end, got {text!r}") from exc
    if step <= 0 or end < start:
        raise InvalidParameterError(f"range needs step > 0 and end >= start, got {text!r}")
    count = int(math.floor((end - start) / step + 1e-12)) + 1
    return start + step * np.arange(count)


def _parse_complex_triple(text: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 3:
        raise InvalidParameterError(f"expected three comma-separated values, got {text!r}")
    try:
        return np.array([complex(part.replace(" ", "")) for part in parts])
    except ValueError as exc:
        raise InvalidParameterError(f"could not parse complex triple {text!r}") from exc


def _parse_real_triple(text: str) -> np.ndarray:
    values = _parse_complex_triple(text)
    if np.any(values.imag != 0):
        raise InvalidParameterError(f"expected real values, got {text!r}")
    return values.real.astype(float)


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _write_table(stream, header, rows, fmt):
    if fmt == "csv":
        stream.write(",".join(header) + "\n")
        for row in rows:
            stream.write(",".join(_fmt(cell) for cell in row) + "\n")
    else:
        payload = [
            {key: cell.item() if isinstance(cell, np.generic) else cell
             for key, cell in zip(header, row)}
            for row in rows
        ]
        stream.write(json.dumps(payload, indent=2, default=_fmt) + "\n")


def _write_gnuplot(path: str, data_path: str, columns: tuple[int, int], title: str):
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("set datafile separator ','\n")
        handle.write(f"set title '{title}'\n")
        handle.write(f"plot '{data_path}' every ::1 using {columns[0]}:{columns[1]} with lines\n")


def _cmd_moments(args, stream):
    rows = []
    for m in range(1, args.m_max + 1):
        x = gaussian.hos_x(args.lam, m)
        y = gaussian.hos_y(args.lam, m)
        rows.append((m, x, y, x * y))
    _write_table(stream, ("m", "hos_x", "hos_y", "product"), rows, args.format)


def _cmd_pk(args, stream):
    result = photon.pk(args.k, _parse_complex_triple(args.alpha), args.lam, path=args.path)
    header = ("k", "path", "paper_value", "exact_value", "discrepancy")
    row = (
        result.k,
        result.path,
        "" if result.paper_value is None else result.paper_value,
        result.exact_value,
        "" if result.discrepancy is None else result.discrepancy,
    )
    _write_table(stream, header, [row], args.format)


def _cmd_fig1(args, stream):
    rows = photon.fig1_scan(_parse_range(args.re), _parse_range(args.im))
    _write_table(stream, ("re_alpha3", "im_alpha3", "p2_paper", "p2_exact"), rows, args.format)
    if args.gnuplot and args.out:
        _write_gnuplot(args.gnuplot, args.out, (1, 3), "P2 along Re(alpha3)")


def _cmd_wigner(args, stream):
    state = gaussian.make_state(args.lam, _parse_complex_triple(args.alpha))
    if args.q1 or args.p1:
        q1 = _parse_range(args.q1 or "0:1:0")
        p1 = _parse_range(args.p1 or "0:1:0")
        base_q = _parse_real_triple(args.q)
        base_p = _parse_real_triple(args.p)
        rows = []
        for qv in q1:
            for pv in p1:
                q = base_q.copy()
                p = base_p.copy()
                q[0] = qv
                p[0] = pv
                rows.append((float(qv), float(pv), gaussian.wigner(state, q, p)))
        _write_table(stream, ("q1", "p1", "w"), rows, args.format)
        if args.gnuplot and args.out:
            _write_gnuplot(args.gnuplot, args.out, (1, 3), "Wigner slice")
    else:
        q = _parse_real_triple(args.q)
        p = _parse_real_triple(args.p)
        value = gaussian.wigner(state, q, p)
        _write_table(stream, ("q1", "q2", "q3", "p1", "p2", "p3", "w"),
                     [(*q, *p, value)], args.format)


def _cmd_bell(args, stream):
    state = gaussian.make_state(args.lam, _parse_complex_triple(args.alpha))
    setting = bell.BellSetting(
        beta=tuple(_parse_complex_triple(args.beta)),
        beta_prime=tuple(_parse_complex_triple(args.beta_prime)),
    )
    value = bell.b3(state, setting)
    _write_table(stream, ("lambda", "b3"), [(args.lam, value)], args.format)


def _cmd_fig2(args, stream):
    rows = bell.fig2_scan(_parse_range(args.lam_range), _parse_range(args.b))
    _write_table(stream, ("lambda", "b_star", "b3_max"), rows, args.format)
    if args.gnuplot and args.out:
        _write_gnuplot(args.gnuplot, args.out, (1, 3), "max B(3) vs strength")


def _cmd_oracle_check(args, stream):
    cutoffs = [int(c) for c in args.cutoffs.split(",")]
    lam = args.lam
    alpha = _parse_complex_triple(args.alpha)

    if args.quantity == "var-x3":
        def quantity(cut):
            arena = fock.build_arena(cut)
            unitary = fock.squeeze_unitary(arena, lam)
            ket = fock.KetVector(unitary @ fock.coherent_ket(arena, alpha).amplitudes)
            return fock.moment_x3(arena, ket, 2)
    elif args.quantity == "vacuum-amp":
        def quantity(cut):
            arena = fock.build_arena(cut)
            unitary = fock.squeeze_unitary(arena, lam)
            return unitary[0, 0].real
    elif args.quantity == "parity":
        def quantity(cut):
            arena = fock.build_arena(cut)
            unitary = fock.squeeze_unitary(arena, lam)
            ket = fock.KetVector(unitary @ fock.coherent_ket(arena, alpha).amplitudes)
            return fock.displaced_parity(arena, ket, (0, 0, 0))
    else:  # b3
        def quantity(cut):
            setting = bell.fig2_setting(args.b)
            return bell.b3_oracle_check(lam, alpha, setting, cut)[1]

    rows = [
        (row["cutoff"], row["value"],
         "" if row["delta"] is None else row["delta"],
         row["shrinking"])
        for row in fock.convergence_report(quantity, cutoffs)
    ]
    _write_table(stream, ("cutoff", "value", "delta", "shrinking"), rows, args.format)


def _cmd_errata(args, stream):
    stream.write(json.dumps(errata.build_errata(), indent=2, default=_fmt) + "\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trisqueeze",
        description="Three-mode enhanced squeezing: moments, photon statistics, "
                    "Wigner functions, Bell tests and oracle checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="output file (default: stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("moments", help="closed-form even moments of the collective quadratures")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--m-max", dest="m_max", type=int, default=4)
    common(p)
    p.set_defaults(fn=_cmd_moments)

    p = sub.add_parser("pk", help="P_k statistic on both routes")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--alpha", default="1,1,1")
    p.add_argument("--path", choices=("paper", "exact"), default="exact")
    common(p)
    p.set_defaults(fn=_cmd_pk)

    p = sub.add_parser("fig1", help="P_2 scan over alpha3 at unit strength, alpha1=alpha2=1")
    p.add_argument("--re", default="-1:0.05:1")
    p.add_argument("--im", default="-1:0.05:1")
    p.add_argument("--gnuplot", help="also write a gnuplot script to this path")
    common(p)
    p.set_defaults(fn=_cmd_fig1)

    p = sub.add_parser("wigner", help="Wigner function at a point or on a (q1, p1) slice")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--alpha", default="0,0,0")
    p.add_argument("--q", default="0,0,0")
    p.add_argument("--p", default="0,0,0")
    p.add_argument("--q1", help="range start:step:end for a slice along q1")
    p.add_argument("--p1", help="range start:step:end for a slice along p1")
    p.add_argument("--gnuplot", help="also write a gnuplot script to this path")
    common(p)
    p.set_defaults(fn=_cmd_wigner)

    p = sub.add_parser("bell", help="single B(3) evaluation")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--alpha", default="0.4,0.5,0.6")
    p.add_argument("--beta", default="0,0,0")
    p.add_argument("--beta-prime", dest="beta_prime", default="0,0,0")
    common(p)
    p.set_defaults(fn=_cmd_bell)

    p = sub.add_parser("fig2", help="max B(3) over displacement magnitude per strength")
    p.add_argument("--lambda", dest="lam_range", default="0:0.02:1")
    p.add_argument("--b", default="0.01:0.01:2")
    p.add_argument("--gnuplot", help="also write a gnuplot script to this path")
    common(p)
    p.set_defaults(fn=_cmd_fig2)

    p = sub.add_parser("oracle-check", help="Fock-oracle convergence table")
    p.add_argument("--quantity", choices=("var-x3", "vacuum-amp", "parity", "b3"),
                   default="var-x3")
    p.add_argument("--lambda", dest="lam", type=float, default=0.2)
    p.add_argument("--alpha", default="0,0,0")
    p.add_argument("--b", type=float, default=0.3, help="displacement magnitude for b3")
    p.add_argument("--cutoffs", default="8,10,12,14")
    common(p)
    p.set_defaults(fn=_cmd_oracle_check)

    p = sub.add_parser("errata", help="JSON report of literal-formula discrepancies")
    common(p)
    p.set_defaults(fn=_cmd_errata)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if getattr(args, "out", None):
            with open(args.out, "w", encoding="utf-8", newline="\n") as stream:
                args.fn(args, stream)
        else:
            args.fn(args, stream=sys.stdout)
    except InvalidParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3
    return 0


def main() -> None:
    sys.exit(run())
