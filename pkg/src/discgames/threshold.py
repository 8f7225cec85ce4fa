"""The discount threshold lambda_0 above which profile orderings freeze.

Above lambda_0 no difference polynomial of two strategy profiles changes
sign, so strategy iteration makes the same choices for every lambda in
[lambda_0, 1).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .errors import InvariantViolation, LambdaBelowThreshold
from .game import Game, Strategy, check_lambda, extract_lasso, format_rational, profile_difference
from .polynomial import sign_at, split_root_at_one
from .roots import SturmSequence
from .solver import SiTrace, strategy_iteration

CSV_HEADER = "game_id,lambda_num,lambda_den,iterations,wall_ms"


def threshold_exponent(n: int, W: int) -> int:
    """ceil(7 W^(1/4) sqrt(n)) + 6, exactly."""
    if n < 1 or W < 1:
        raise ValueError("n and W must be positive")
    # smallest t with t^4 >= 7^4 W n^2
    target = 7**4 * W * n * n
    t = isqrt(isqrt(target))
    while t**4 < target:
        t += 1
    return t + 6


def lambda_zero(n: int, W: int) -> Fraction:
    e = threshold_exponent(n, W)
    return 1 - Fraction(1, 24 * W * (2 * n + 1) ** e)


def game_lambda_zero(g: Game) -> Fraction:
    # weightless games behave like W = 1
    return lambda_zero(g.n, max(g.W, 1))


def _require_above(g: Game, lam) -> tuple[Fraction, Fraction]:
    lam = check_lambda(lam)
    lam0 = game_lambda_zero(g)
    if lam < lam0:
        raise LambdaBelowThreshold(lam, lam0)
    return lam, lam0


def roots_above_threshold(F, lam0: Fraction) -> int:
    """Distinct roots of F in [lam0, 1), certified by a Sturm count."""
    if F.is_zero:
        return 0
    _, f = split_root_at_one(F)
    return SturmSequence(f).count_closed(lam0, Fraction(1))


def ordering_preserved(g: Game, v: int, profile1, profile2, lam) -> bool:
    """Whether profile1 vs profile2 compare at ``lam`` from ``v`` as they do at lambda_0.

    A profile is a ``(sigma, tau)`` pair.  The difference polynomial is first
    certified root-free on [lambda_0, 1); a root there would contradict the
    threshold and raises InvariantViolation.
    """
    lam, lam0 = _require_above(g, lam)
    F = profile_difference(extract_lasso(g, *profile1, v), extract_lasso(g, *profile2, v))
    if F.is_zero:
        return True
    if roots_above_threshold(F, lam0):
        raise InvariantViolation(f"profile difference {F} has a root in [lambda_0, 1)")
    return sign_at(F, lam0) == sign_at(F, lam)


def trace_equivalence(g: Game, sigma0: Strategy | None, lam) -> tuple[bool, SiTrace, SiTrace]:
    """Run strategy iteration at lambda_0 and at ``lam`` from the same start and compare."""
    lam, lam0 = _require_above(g, lam)
    _, trace0 = strategy_iteration(g, lam0, sigma0)
    if lam == lam0:
        return True, trace0, trace0
    _, trace1 = strategy_iteration(g, lam, sigma0)
    return trace0.same_strategies(trace1), trace0, trace1


@dataclass
class SweepRow:
    game_id: str
    lam: Fraction
    iterations: int
    wall_ms: float

    def csv(self) -> str:
        return (
            f"{self.game_id},{self.lam.numerator},{self.lam.denominator},"
            f"{self.iterations},{self.wall_ms:.3f}"
        )


def iteration_sweep(g: Game, lambdas, sigma0: Strategy | None = None, game_id: str = "g") -> list[SweepRow]:
    """One strategy-iteration run per discount factor, timed."""
    lams = [check_lambda(x) for x in lambdas]
    rows = []
    for lam in lams:
        t0 = time.perf_counter()
        _, trace = strategy_iteration(g, lam, sigma0)
        rows.append(SweepRow(game_id, lam, trace.iterations, (time.perf_counter() - t0) * 1000))
    return rows


def auto_lambdas(g: Game, grid=None) -> list[Fraction]:
    """A default grid with lambda_0 and (lambda_0 + 1)/2 added."""
    base = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(9, 10), Fraction(99, 100)]
    lam0 = game_lambda_zero(g)
    pts = set(base if grid is None else (Fraction(x) for x in grid))
    pts |= {lam0, (lam0 + 1) / 2}
    return sorted(pts)


@dataclass
class ThresholdReport:
    n: int
    W: int
    exponent: int
    lambda0: Fraction
    comparisons: list[tuple[Fraction, bool, int]] = field(default_factory=list)

    def serialize(self) -> str:
        lines = [
            f"n: {self.n}",
            f"W: {self.W}",
            f"exponent: {self.exponent}",
            f"lambda0: {format_rational(self.lambda0)}",
        ]
        for lam, equal, iters in self.comparisons:
            lines.append(f"lambda: {format_rational(lam)} traces_equal: {str(equal).lower()} iterations: {iters}")
        return "\n".join(lines) + "\n"


def threshold_report(g: Game, lambdas, sigma0: Strategy | None = None) -> ThresholdReport:
    W = max(g.W, 1)
    rep = ThresholdReport(g.n, W, threshold_exponent(g.n, W), lambda_zero(g.n, W))
    for lam in lambdas:
        equal, _, trace = trace_equivalence(g, sigma0, lam)
        rep.comparisons.append((Fraction(lam), equal, trace.iterations))
    return rep
