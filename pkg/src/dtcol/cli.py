"""Command-line front end.

Examples::

    dtcol dt --quiver K1 --theta 1,0 --bound 2
    dtcol attractor --quiver quiver.txt --bound 4 --format csv
    dtcol flowtree --quiver K2 --theta 1,0 --gamma 2,1
    dtcol selftest --quick
"""

import argparse
import csv
import io
import json
import os
import re
import sys

from . import acceptance
from .dtpipeline import _OMEGA_FACTOR, attractor_dt, attractor_tree_eval, omega_bar, rational_dt, wallcross
from .errors import ParseError, RankMismatch
from .exactalg import render
from .lie import flow_tree_dt
from .quiver import Quiver, skew_form, stacky_A
from .semigroup import parse_vector, render_vector, vectors_up_to
from .stability import CentralCharge, parse_rationals
from .trees import enumerate_trees

_BUILTIN = re.compile(r"^K(\d+)$")


def load_quiver(source):
    """A quiver file path, or ``K<m>`` for the ``m``-Kronecker quiver when no such file exists."""
    m = _BUILTIN.match(source)
    if m and not os.path.exists(source):
        return Quiver.kronecker(int(m.group(1)))
    try:
        return Quiver.load(source)
    except OSError as exc:
        raise ParseError("cannot read quiver %r: %s" % (source, exc.strerror)) from None


def _charge(Q, theta, rho):
    theta = parse_rationals(theta)
    Q.check_rank(theta, "theta")
    if rho is not None:
        rho = parse_rationals(rho)
        Q.check_rank(rho, "rho")
    try:
        return CentralCharge(theta, rho)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _rows(H, gammas):
    rows = []
    for g in sorted(gammas):
        c = H(g)
        rows.append((g, c, omega_bar(c)))
    return rows


def format_rows(rows, fmt):
    """Render ``(gamma, coefficient, omega_bar)`` rows."""
    cells = [(render_vector(g), render(c), render(w)) for g, c, w in rows]
    header = ("gamma", "coefficient", "omega_bar")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(cells)
        return buf.getvalue()
    if fmt == "json":
        data = [dict(zip(header, row)) for row in cells]
        return json.dumps(data, indent=2) + "\n"
    widths = [max(len(r[i]) for r in cells + [header]) for i in range(3)]
    lines = ["  ".join(s.ljust(w) for s, w in zip(row, widths)).rstrip() for row in [header] + cells]
    return "\n".join(lines) + "\n"


def cmd_dt(args):
    Q = load_quiver(args.quiver)
    Z = _charge(Q, args.theta, args.rho)
    A = stacky_A(Q)
    if args.t is None:
        H = rational_dt(A, Z, args.bound)
    else:
        B = skew_form(Q)
        t = parse_rationals(args.t)
        if len(t) != 1:
            raise ParseError("--t takes a single rational")
        H = attractor_tree_eval(attractor_dt(A, B, args.bound), Z, B, t[0], args.bound)
    return format_rows(_rows(H, vectors_up_to(Q.rank, args.bound)), args.format)


def cmd_attractor(args):
    Q = load_quiver(args.quiver)
    H = attractor_dt(stacky_A(Q), skew_form(Q), args.bound)
    return format_rows(_rows(H, vectors_up_to(Q.rank, args.bound)), args.format)


def cmd_wallcross(args):
    Q = load_quiver(args.quiver)
    Z = _charge(Q, args.theta, args.rho)
    Z2 = _charge(Q, args.theta2, args.rho2)
    A = stacky_A(Q)
    H = wallcross(rational_dt(A, Z, args.bound), Z, Z2, args.bound)
    return format_rows(_rows(H, vectors_up_to(Q.rank, args.bound)), args.format)


def cmd_flowtree(args):
    Q = load_quiver(args.quiver)
    Z = _charge(Q, args.theta, args.rho)
    gamma = Q.check_rank(parse_vector(args.gamma), "gamma")
    if not any(gamma):
        raise ParseError("gamma must be nonzero")
    B = skew_form(Q)
    bound = sum(gamma)
    star_ = attractor_dt(stacky_A(Q), B, bound)
    value = flow_tree_dt(lambda a: omega_bar(star_(a)), Z, B, gamma, bound)
    return format_rows([(gamma, value / _OMEGA_FACTOR, value)], args.format)


def cmd_trees(args):
    trees = enumerate_trees(args.count, args.min_children)
    if args.format == "json":
        return json.dumps({"count": len(trees), "trees": [repr(T) for T in trees]}, indent=2) + "\n"
    return "".join("%s\n" % (T,) for T in trees) + "# %d trees\n" % len(trees)


def cmd_selftest(args):
    results = acceptance.run(quick=args.quick, report=lambda line: print(line, flush=True))
    failed = [name for name, (ok, _, _) in results.items() if not ok]
    summary = "all %d criteria passed" % len(results) if not failed else "FAILED: " + ", ".join(failed)
    return summary + "\n", (1 if failed else 0)


def build_parser():
    p = argparse.ArgumentParser(prog="dtcol", description="DT invariants through the collection calculus.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, theta=True, bound=True):
        sp.add_argument("--quiver", required=True, help="quiver file, or K<m> for a Kronecker quiver")
        if theta:
            sp.add_argument("--theta", required=True, help="comma-separated rationals, e.g. 1,-1/2")
            sp.add_argument("--rho", help="strictly positive rationals (default all 1)")
        if bound:
            sp.add_argument("--bound", type=_positive, required=True, help="maximal total degree")
        sp.add_argument("--format", choices=("table", "csv", "json"), default="table")

    sp = sub.add_parser("dt", help="rational DT invariants for a stability")
    common(sp)
    sp.add_argument("--t", help="evaluate through the attractor tree formula with this t")
    sp.set_defaults(func=cmd_dt)

    sp = sub.add_parser("attractor", help="attractor invariants")
    common(sp, theta=False)
    sp.set_defaults(func=cmd_attractor)

    sp = sub.add_parser("wallcross", help="move rational invariants from theta to theta2")
    common(sp)
    sp.add_argument("--theta2", required=True)
    sp.add_argument("--rho2")
    sp.set_defaults(func=cmd_wallcross)

    sp = sub.add_parser("flowtree", help="Omega_bar through the flow tree formula")
    common(sp, bound=False)
    sp.add_argument("--gamma", required=True, help="dimension vector, e.g. 2,1")
    sp.set_defaults(func=cmd_flowtree)

    sp = sub.add_parser("trees", help="list plane trees")
    sp.add_argument("--count", type=_positive, required=True, help="number of leaves")
    sp.add_argument("--min-children", type=int, default=2)
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=cmd_trees)

    sp = sub.add_parser("selftest", help="run the acceptance battery")
    sp.add_argument("--quick", action="store_true", help="smaller bounds (n <= 4)")
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except (ParseError, RankMismatch, ValueError) as exc:
        print("dtcol: error: %s" % exc, file=sys.stderr)
        return 2
    status = 0
    if isinstance(out, tuple):
        out, status = out
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
