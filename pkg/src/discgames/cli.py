"""Command-line interface: ``discgames <subcommand> ...``.

Exit codes: 0 success, 2 parse or usage error, 3 guard exceeded,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import re
import sys
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

from . import __version__
from .bounds import root_gap_lower_bound
from .chebyshev import build_g, chebyshev, verify_f_property
from .constructions import (
    certify_sign_flip,
    constructive_seed,
    lasso_amplify,
    pigeonhole_search,
)
from .errors import DiscGamesError, GuardExceeded, InvariantViolation
from .game import P1, P2, format_rational, parse_game, parse_rational, serialize_game
from .generate import random_game
from .polynomial import Polynomial, root_order_at_one
from .roots import isolate_real_roots
from .search import DEFAULT_SEARCH_GUARD, enumerate_min_gap, family_roots
from .solver import DEFAULT_PROFILE_GUARD, brute_force_values, solve
from .threshold import CSV_HEADER, auto_lambdas, iteration_sweep

DEFAULT_SEED = 20240229
ROOT_CSV_HEADER = "poly_id,lo_num,lo_den,hi_num,hi_den"
EXIT_USAGE, EXIT_GUARD, EXIT_INVARIANT = 2, 3, 4


_NEGATIVE_LIST = re.compile(r"-\d+(\s*,\s*-?\d+)*")


class UsageError(Exception):
    pass


@contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _lambda(text: str) -> Fraction:
    lam = parse_rational(text)
    if not 0 <= lam < 1:
        raise UsageError(f"lambda must lie in [0, 1), got {text}")
    return lam


def _load_game(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_game(text)


def _poly(text: str) -> Polynomial:
    try:
        return Polynomial.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _poly_id(P: Polynomial) -> str:
    return ";".join(str(c) for c in P.coeffs)


def _root_row(pid: str, lo: Fraction, hi: Fraction) -> str:
    lo, hi = Fraction(lo), Fraction(hi)
    return f"{pid},{lo.numerator},{lo.denominator},{hi.numerator},{hi.denominator}"


# -- game commands -----------------------------------------------------------


def cmd_solve(args, out):
    g = _load_game(args.game)
    values, sigma, tau, trace = solve(g, _lambda(args.lam))
    for v, val in enumerate(values):
        print(f"value {v} {format_rational(val)}", file=out)
    for v in g.vertices_of(P1):
        print(f"sigma {v} {sigma[v]}", file=out)
    for v in g.vertices_of(P2):
        print(f"tau {v} {tau[v]}", file=out)
    print(f"iterations {trace.iterations}", file=out)


def cmd_oracle(args, out):
    g = _load_game(args.game)
    maxmin, minmax = brute_force_values(g, _lambda(args.lam), guard=args.guard_profiles)
    for v, (a, b) in enumerate(zip(maxmin, minmax)):
        print(f"vertex {v} maxmin {format_rational(a)} minmax {format_rational(b)}", file=out)
    equal = maxmin == minmax
    print(f"determined {str(equal).lower()}", file=out)
    if not equal:
        raise InvariantViolation("max-min and min-max values differ")


def cmd_sweep(args, out):
    g = _load_game(args.game)
    text = args.lambdas.strip()
    if text == "auto":
        lams = auto_lambdas(g)
    else:
        lams = [_lambda(x) for x in text.split(",") if x.strip()]
    if not lams:
        raise UsageError("empty lambda list")
    print(CSV_HEADER, file=out)
    for row in iteration_sweep(g, lams, None, game_id=Path(args.game).stem):
        print(row.csv(), file=out)


def cmd_gen(args, out):
    if args.n < 1 or args.W < 0 or not 0 <= args.density <= 1:
        raise UsageError("need n >= 1, W >= 0 and density in [0, 1]")
    out.write(serialize_game(random_game(args.n, args.density, args.W, args.seed)))


# -- polynomial commands -----------------------------------------------------


def cmd_poly(args, out):
    sub = args.poly_cmd
    if sub == "roots":
        P = _poly(args.coeffs)
        interval = None
        if args.lo is not None or args.hi is not None:
            if args.lo is None or args.hi is None:
                raise UsageError("give both --lo and --hi")
            interval = (parse_rational(args.lo), parse_rational(args.hi))
        width = parse_rational(args.width) if args.width else None
        print(ROOT_CSV_HEADER, file=out)
        for iv in isolate_real_roots(P, interval, width=width):
            print(_root_row(_poly_id(P), iv.lo, iv.hi), file=out)
    elif sub == "order":
        print(root_order_at_one(_poly(args.coeffs)), file=out)
    elif sub == "seed":
        P = constructive_seed(args.M)
        print(P.format(), file=out)
        print(f"# degree {P.degree} order {root_order_at_one(P)}", file=out)
    elif sub == "amplify":
        print(lasso_amplify(_poly(args.coeffs), args.d).format(), file=out)
    elif sub == "certify":
        cert = certify_sign_flip(_poly(args.coeffs), args.d, strict=not args.no_strict)
        print(f"certified: {str(cert.certified).lower()}", file=out)
        print(f"beta: {format_rational(cert.beta)}", file=out)
        print(f"k: {cert.k}", file=out)
        print(f"f(1): {cert.f1}", file=out)
        print(f"f'(1): {cert.df1}", file=out)
        print(f"bound: {format_rational(cert.expression)}", file=out)
    elif sub == "pigeonhole":
        P = pigeonhole_search(args.N, args.k)
        print(P.format(), file=out)
        print(f"# order {root_order_at_one(P)}", file=out)
    elif sub == "mingap":
        res = enumerate_min_gap(args.N, args.W, guard=args.guard_search)
        print(f"lo: {format_rational(res.lo)}", file=out)
        print(f"hi: {format_rational(res.hi)}", file=out)
        print(f"witness: {res.witness.format() if res.witness else ''}", file=out)
        print(f"bound: {format_rational(res.bound)}", file=out)
    elif sub == "chebyshev":
        print(chebyshev(args.t).format(), file=out)
    elif sub == "g":
        print(",".join(format_rational(c) for c in build_g(args.mu).coeffs), file=out)
    elif sub == "verify-f":
        res = verify_f_property(args.N, args.W)
        print(f"holds: {str(res.holds).lower()}", file=out)
        print(f"mu: {res.mu}", file=out)
        print(f"F0: {format_rational(res.F0)}", file=out)
        print(f"sum: {format_rational(res.weighted_sum)}", file=out)
    else:  # pragma: no cover - argparse enforces the choices
        raise UsageError(f"unknown poly command {sub}")


# -- root plot ---------------------------------------------------------------


def _parse_grid(text: str) -> tuple[int, int]:
    try:
        a, b = text.lower().split("x")
        nx, ny = int(a), int(b)
    except ValueError:
        raise UsageError(f"grid must look like 81x41, got {text!r}") from None
    if nx < 2 or ny < 2:
        raise UsageError("grid needs at least 2 points per axis")
    return nx, ny


def min_modulus_grid(polys, nx: int, ny: int, extent: float):
    """min over ``polys`` of |P(z)| on an nx-by-ny grid of the upper half square."""
    import numpy as np

    N = max(P.degree for P in polys)
    C = np.zeros((len(polys), N + 1))
    for i, P in enumerate(polys):
        C[i, : len(P.coeffs)] = P.coeffs
    xs = np.linspace(-extent, extent, nx)
    ys = np.linspace(0.0, extent, ny)
    Z = (xs[None, :] + 1j * ys[:, None]).ravel()
    powers = Z[:, None] ** np.arange(N + 1)[None, :]
    best = np.empty(Z.size)
    step = 64
    for s in range(0, Z.size, step):
        vals = C @ powers[s : s + step].T
        best[s : s + step] = np.abs(vals).min(axis=0)
    return xs, ys, best.reshape(ny, nx)


def _svg(roots, grid, extent: float) -> str:
    size = 480
    def sx(x):
        return (x + extent) / (2 * extent) * size
    def sy(y):
        return size / 2 - y / (2 * extent) * size
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size // 2 + 20}" '
        f'viewBox="0 0 {size} {size // 2 + 20}">',
        f'<line x1="0" y1="{size / 2}" x2="{size}" y2="{size / 2}" stroke="black"/>',
        f'<line x1="{size / 2}" y1="0" x2="{size / 2}" y2="{size / 2}" stroke="black"/>',
    ]
    if grid is not None:
        import numpy as np

        xs, ys, best = grid
        shade = np.clip(-np.log10(best + 1e-12) / 3, 0, 1)
        cw = size / len(xs)
        ch = size / 2 / len(ys)
        for j, y in enumerate(ys):
            for i, x in enumerate(xs):
                if shade[j, i] > 0:
                    parts.append(
                        f'<rect x="{sx(x) - cw / 2:.1f}" y="{sy(y) - ch / 2:.1f}" width="{cw:.1f}" '
                        f'height="{ch:.1f}" fill="blue" fill-opacity="{shade[j, i]:.2f}"/>'
                    )
    for mid in sorted(set(roots)):
        if -extent <= mid <= extent:
            parts.append(f'<circle cx="{sx(mid):.2f}" cy="{size / 2}" r="1.5" fill="red"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_rootplot(args, out):
    if args.W < 1 or args.N < 1:
        raise UsageError("rootplot needs N >= 1 and W >= 1 (W = 0 leaves only the zero polynomial)")
    width = parse_rational(args.width)
    bound = root_gap_lower_bound(args.N, args.W)
    gap = None
    mids = []
    polys = []
    print(ROOT_CSV_HEADER, file=out)
    for pr in family_roots(args.N, args.W, width=width, guard=args.guard_search):
        pid = _poly_id(pr.poly)
        polys.append(pr.poly)
        rows = [(iv.lo, iv.hi) for iv in pr.intervals]
        if pr.order_at_one:
            rows.append((Fraction(1), Fraction(1)))
        for lo, hi in sorted(rows):
            print(_root_row(pid, lo, hi), file=out)
            mids.append(float((lo + hi) / 2))
        g = pr.gap()
        if g is not None and (gap is None or g < gap):
            gap = g
    grid = None
    if args.grid_out or args.svg:
        nx, ny = _parse_grid(args.grid)
        grid = min_modulus_grid(polys, nx, ny, args.extent)
    if args.grid_out:
        xs, ys, best = grid
        with open(args.grid_out, "w", encoding="utf-8") as fh:
            fh.write("re,im,min_abs\n")
            for j, y in enumerate(ys):
                for i, x in enumerate(xs):
                    fh.write(f"{x:.6g},{y:.6g},{best[j, i]:.6e}\n")
    if args.svg:
        Path(args.svg).write_text(_svg(mids, grid, args.extent), encoding="utf-8")
    exceeds = gap is None or gap > bound
    print(f"certified_gap_lower {format_rational(gap) if gap is not None else 'none'}", file=sys.stderr)
    print(f"root_gap_lower_bound {format_rational(bound)}", file=sys.stderr)
    print(f"gap_exceeds_bound {str(exceeds).lower()}", file=sys.stderr)
    if not exceeds:
        raise InvariantViolation("a certified root lies closer to 1 than the gap bound")


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="discgames", description="Exact discounted games and polynomial root tools.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="random seed (default %(default)s)")
    p.add_argument("--guard-profiles", type=int, default=DEFAULT_PROFILE_GUARD,
                   help="max strategy profiles for brute force")
    p.add_argument("--guard-search", type=int, default=DEFAULT_SEARCH_GUARD,
                   help="max (2W+1)^(N+1) for polynomial enumeration")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("solve", help="optimal values and strategies by strategy iteration")
    s.add_argument("game")
    s.add_argument("--lambda", dest="lam", required=True, help="discount factor p/q")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("oracle", help="brute-force max-min and min-max values")
    s.add_argument("game")
    s.add_argument("--lambda", dest="lam", required=True)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("sweep", help="iteration counts over a list of discount factors")
    s.add_argument("game")
    s.add_argument("--lambdas", required=True, help="comma-separated p/q list, or 'auto'")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("gen", help="random game file")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--density", type=float, default=0.3)
    s.add_argument("--W", type=int, default=1)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("poly", help="polynomial tools")
    s.set_defaults(func=cmd_poly)
    ps = s.add_subparsers(dest="poly_cmd", required=True)
    q = ps.add_parser("roots", help="isolate real roots (CSV)")
    q.add_argument("coeffs", help="comma-separated coefficients, constant term first")
    q.add_argument("--lo")
    q.add_argument("--hi")
    q.add_argument("--width")
    q = ps.add_parser("order", help="order of the root at 1")
    q.add_argument("coeffs")
    q = ps.add_parser("seed", help="explicit {-1,0,1} polynomial of degree M with a high-order root at 1")
    q.add_argument("M", type=int)
    q = ps.add_parser("amplify", help="lasso amplification H of F by d")
    q.add_argument("coeffs")
    q.add_argument("d", type=int)
    q = ps.add_parser("certify", help="sign-flip certificate for the amplified polynomial")
    q.add_argument("coeffs")
    q.add_argument("d", type=int)
    q.add_argument("--no-strict", action="store_true", help="skip the size preconditions")
    q = ps.add_parser("pigeonhole", help="pigeonhole search for a {-1,0,1} polynomial of order >= k")
    q.add_argument("N", type=int)
    q.add_argument("k", type=int)
    q = ps.add_parser("mingap", help="certified minimum distance from 1 to a root over the family")
    q.add_argument("N", type=int)
    q.add_argument("W", type=int)
    q = ps.add_parser("chebyshev", help="Chebyshev polynomial T_t")
    q.add_argument("t", type=int)
    q = ps.add_parser("g", help="rational polynomial g_mu")
    q.add_argument("mu", type=int)
    q = ps.add_parser("verify-f", help="check the weighted-sum property of the F construction")
    q.add_argument("N", type=int)
    q.add_argument("W", type=int)

    s = sub.add_parser("rootplot", help="certified real roots of the whole family, plus a |P| grid")
    s.add_argument("N", type=int)
    s.add_argument("W", type=int)
    s.add_argument("--width", default="1/64", help="isolating interval width")
    s.add_argument("--grid", default="81x41", help="grid points, re x im")
    s.add_argument("--extent", type=float, default=2.0, help="half-width of the sampled square")
    s.add_argument("--grid-out", help="CSV of min |P(z)| on the grid")
    s.add_argument("--svg", help="SVG sketch of the roots and the grid")
    s.set_defaults(func=cmd_rootplot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    # coefficient lists such as -1,0,1 would otherwise read as options
    argv = [" " + a if _NEGATIVE_LIST.fullmatch(a) else a for a in argv]
    args = parser.parse_args(argv)
    try:
        with _output(args.out) as out:
            args.func(args, out)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (UsageError, DiscGamesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
