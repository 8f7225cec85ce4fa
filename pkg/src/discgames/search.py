"""Exhaustive searches over bounded-height integer polynomial families.

Families are enumerated with a positive leading coefficient only: P and -P
have the same roots and the same order at 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from . import _kernels
from .bounds import order_bound, root_gap_lower_bound
from .errors import InvariantViolation, SearchSpaceTooLarge
from .polynomial import Polynomial, split_root_at_one
from .roots import RootInterval, SturmSequence, isolate_real_roots, refine

DEFAULT_SEARCH_GUARD = 10**7


def _guard(N: int, W: int, guard: int) -> None:
    if (2 * W + 1) ** (N + 1) > guard:
        raise SearchSpaceTooLarge(f"(2W+1)^(N+1) = {(2 * W + 1) ** (N + 1)} exceeds the guard {guard}")


def family(N: int, W: int) -> Iterator[Polynomial]:
    """Degree-N polynomials with coefficients in [-W, W] and positive leading coefficient."""
    for idx in range(_kernels.family_size(N, W)):
        yield Polynomial(_kernels.decode_family(idx, N, W))


@dataclass
class OrderCheck:
    W: int
    max_order: list[int]
    bounds: list[int]
    histogram: list[int]

    @property
    def holds(self) -> bool:
        return all(k <= b for k, b in zip(self.max_order[1:], self.bounds[1:]))


def check_order_bound(N: int, W: int) -> OrderCheck:
    """Largest root order at 1 per exact degree d <= N, against the order bound for d."""
    max_order, hist = _kernels.order_scan(N, W)
    bounds = [0] + [order_bound(d, W) for d in range(1, N + 1)]
    return OrderCheck(W, max_order, bounds, hist)


def _taylor_window_clear(t: list[int], k: int, r: Fraction) -> bool:
    """Exact test |t_k| > sum_{j>k} |t_j| r^(j-k): no root of P/(x-1)^k within r of 1."""
    a, b = r.numerator, r.denominator
    m = len(t) - 1 - k
    lhs = abs(t[k]) * b**m
    rhs = 0
    apow = 1
    for j in range(1, m + 1):
        apow *= a
        if t[k + j]:
            rhs += abs(t[k + j]) * apow * b ** (m - j)
    return lhs > rhs


@dataclass
class GapCheck:
    N: int
    W: int
    bound: Fraction
    screened: int
    sturm_checked: int
    violations: list[Polynomial] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations


def check_gap_bound(N: int, W: int, guard: int = DEFAULT_SEARCH_GUARD) -> GapCheck:
    """Certify that no member of the degree-N family has a root alpha != 1 with |1 - alpha| <= bound.

    The compiled screen clears most polynomials with an integer Taylor
    inequality; the rest are decided by a Sturm count on [1 - bound, 1 + bound].
    """
    _guard(N, W, guard)
    bound = root_gap_lower_bound(N, W)
    q = bound.denominator // bound.numerator
    failing = _kernels.gap_screen(N, W, q) if q >= 1 else range(_kernels.family_size(N, W))
    out = GapCheck(N, W, bound, _kernels.family_size(N, W), 0)
    for idx in failing:
        P = Polynomial(_kernels.decode_family(idx, N, W))
        _, f = split_root_at_one(P)
        out.sturm_checked += 1
        if SturmSequence(f).count_closed(1 - bound, 1 + bound):
            out.violations.append(P)
    return out


@dataclass
class MinGap:
    """Certified enclosure lo < min |1 - alpha| <= hi over a family."""

    N: int
    W: int
    lo: Fraction
    hi: Fraction
    witness: Polynomial | None
    bound: Fraction
    sturm_checked: int = 0


def nearest_root_distance(seq: SturmSequence, window: Fraction, rel_tol: Fraction):
    """Enclosure (lo, hi] of the distance from 1 to the nearest root, or None beyond ``window``.

    ``seq`` must belong to a polynomial that does not vanish at 1.
    """
    if seq.count_closed(1 - window, 1 + window) == 0:
        return None
    # bisect on the dyadic grid below the smallest power of two >= window
    hi = Fraction(1)
    while hi / 2 >= window:
        hi /= 2
    while hi < window:
        hi *= 2
    lo = Fraction(0)
    while hi - lo > hi * rel_tol:
        mid = (lo + hi) / 2
        if seq.count_closed(1 - mid, 1 + mid):
            hi = mid
        else:
            lo = mid
    return lo, hi


def enumerate_min_gap(
    N: int, W: int, guard: int = DEFAULT_SEARCH_GUARD, rel_tol=Fraction(1, 2**30)
) -> MinGap:
    """Smallest |1 - alpha| over real roots alpha != 1 of the degree-N family."""
    _guard(N, W, guard)
    rel_tol = Fraction(rel_tol)
    bound = root_gap_lower_bound(N, W)
    best_lo = best_hi = None
    witness = None
    checked = 0
    for idx in range(_kernels.family_size(N, W)):
        cs = _kernels.decode_family(idx, N, W)
        window = best_hi if best_hi is not None else Fraction(1)
        t = _kernels.taylor_at_one(cs)
        k = next(j for j, c in enumerate(t) if c)
        if window <= 1 and _taylor_window_clear(t, k, window):
            continue
        P = Polynomial(cs)
        _, f = split_root_at_one(P)
        checked += 1
        hit = nearest_root_distance(SturmSequence(f), window, rel_tol)
        if hit is None:
            continue
        lo, hi = hit
        if best_hi is None or hi < best_hi:
            witness = P
        best_lo = lo if best_lo is None else min(best_lo, lo)
        best_hi = hi if best_hi is None else min(best_hi, hi)
    if best_lo is None:
        return MinGap(N, W, Fraction(1), Fraction(1), None, bound, checked)
    result = MinGap(N, W, best_lo, best_hi, witness, bound, checked)
    if not best_lo >= bound:
        raise InvariantViolation(
            f"a root lies within {best_hi} of 1, below the bound {bound} (witness {witness})"
        )
    return result


# -- root listings for plotting ----------------------------------------------


@dataclass
class PolyRoots:
    poly: Polynomial
    order_at_one: int
    intervals: list[RootInterval]

    def gap(self) -> Fraction | None:
        """Certified lower bound on |1 - alpha| over the listed roots (all != 1)."""
        if not self.intervals:
            return None
        return min(iv.distance_to(1) for iv in self.intervals)


def roots_away_from_one(P: Polynomial, width) -> PolyRoots:
    """Isolate all real roots other than 1, each interval kept clear of 1.

    Intervals are refined to ``width`` and further until their distance to 1
    is at least their own width.
    """
    k, f = split_root_at_one(P)
    seq = SturmSequence(f)
    ivs = isolate_real_roots(f, None, width=width, seq=seq)
    out = []
    for iv in ivs:
        while iv.distance_to(1) < iv.width:
            iv = refine(seq, iv, iv.width / 2)
        out.append(iv)
    return PolyRoots(P, k, out)


def family_up_to(N: int, W: int) -> Iterator[Polynomial]:
    for d in range(1, N + 1):
        yield from family(d, W)


def family_roots(N: int, W: int, width=Fraction(1, 2**10), guard: int = DEFAULT_SEARCH_GUARD):
    """Certified real roots of every member of degree 1..N (positive leading coefficient)."""
    _guard(N, W, guard)
    for P in family_up_to(N, W):
        yield roots_away_from_one(P, width)
