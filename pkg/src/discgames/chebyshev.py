"""Chebyshev polynomials and the high-order test polynomial behind the order bound."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .bounds import floor_scaled_fourth_root
from .polynomial import Polynomial, evaluate


@lru_cache(maxsize=None)
def chebyshev(t: int) -> Polynomial:
    """T_t from T_0 = 1, T_1 = x, T_{t+1} = 2x T_t - T_{t-1}."""
    if t < 0:
        raise ValueError("degree must be non-negative")
    if t == 0:
        return Polynomial([1])
    if t == 1:
        return Polynomial([0, 1])
    two_x = Polynomial([0, 2])
    return two_x * chebyshev(t - 1) - chebyshev(t - 2)


@lru_cache(maxsize=None)
def _g_doubled(mu: int) -> Polynomial:
    total = Polynomial([1])
    for t in range(1, mu + 1):
        total = total + chebyshev(t) * 2
    return total


def build_g(mu: int) -> Polynomial:
    """g = T_0 / 2 + T_1 + ... + T_mu, a degree-mu polynomial with rational coefficients."""
    if mu < 1:
        raise ValueError("mu must be at least 1")
    return Polynomial(Fraction(c, 2) for c in _g_doubled(mu).coeffs)


def g_envelope_holds(mu: int, x: Fraction) -> bool:
    """Exact check of ``g(x)**2 * 2 * (1 - x) <= 1`` for x in (-1, 1)."""
    x = Fraction(x)
    v = evaluate(build_g(mu), x)
    return v * v * 2 * (1 - x) <= 1


def f_mu(N: int, W: int) -> int:
    """Degree parameter floor((4/7) W^(1/4) sqrt(N)) + 1 of the test polynomial."""
    return floor_scaled_fourth_root(4, 7, W, N) + 1


class FPropertyResult(NamedTuple):
    holds: bool
    F0: Fraction
    weighted_sum: Fraction
    mu: int


def verify_f_property(N: int, W: int) -> FPropertyResult:
    """Check ``F(0) > W * sum_{i=1..N} |F(i)|`` for F(x) = g(1 - 2x/N)**4.

    The evaluations are done in integers: with x_i = (N - 2i)/N and
    G = 2g homogenized at denominator N, F(i) = G_i**4 / (16 N**(4 mu)).
    """
    if N < 1 or W < 1:
        raise ValueError("N and W must be positive")
    mu = f_mu(N, W)
    G = _g_doubled(mu).coeffs
    npow = [N**j for j in range(mu + 1)]

    def G_at(i: int) -> int:
        p = N - 2 * i
        acc = 0
        ppow = 1
        for j, c in enumerate(G):
            acc += c * ppow * npow[mu - j]
            ppow *= p
        return acc

    scale = 16 * N ** (4 * mu)
    g0 = G_at(0)
    F0 = Fraction(g0**4, scale)
    assert F0 == (Fraction(2 * mu + 1, 2)) ** 4
    total = sum(G_at(i) ** 4 for i in range(1, N + 1))
    weighted = Fraction(W * total, scale)
    return FPropertyResult(F0 > weighted, F0, weighted, mu)
