"""Exact evaluation of the closed-form root bounds.

Every quantity of the form ``c * W**(1/4) * sqrt(N)`` is handled through
integer fourth roots, never through floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, isqrt


def floor_scaled_fourth_root(c_num: int, c_den: int, W: int, N: int) -> int:
    """Largest t with ``(c_den * t)**4 <= c_num**4 * W * N**2``.

    That is ``floor((c_num / c_den) * W**(1/4) * sqrt(N))``.
    """
    if min(c_num, c_den, W, N) < 1:
        raise ValueError("all arguments must be positive integers")
    # floor(sqrt(floor(y))) == floor(sqrt(y)) for real y >= 0
    return isqrt(isqrt((c_num**4 * W * N * N) // c_den**4))


def ceil_scaled_fourth_root(c_num: int, c_den: int, W: int, N: int) -> int:
    """Smallest t with ``(c_den * t)**4 >= c_num**4 * W * N**2``."""
    t = floor_scaled_fourth_root(c_num, c_den, W, N)
    if (c_den * t) ** 4 == c_num**4 * W * N * N:
        return t
    return t + 1


def order_bound(N: int, W: int) -> int:
    """Upper bound on the multiplicity of 1 as a root of a degree-N, height-W polynomial."""
    return floor_scaled_fourth_root(16, 7, W, N) + 4


def root_gap_lower_bound(N: int, W: int) -> Fraction:
    """Exact rational lower bound on |1 - alpha| for roots alpha != 1.

    The real exponent ``(16/7) W^(1/4) sqrt(N) + 6`` is rounded up, which
    only makes the bound smaller.
    """
    t = floor_scaled_fourth_root(16, 7, W, N)
    e = ceil_scaled_fourth_root(16, 7, W, N) + 6
    return Fraction(factorial(t), 2 * W * (N + 1) ** e)


def order_gap_lower_bound(N: int, W: int, k: int) -> Fraction:
    """Gap bound for polynomials whose root at 1 has order at most k."""
    return Fraction(factorial(k + 1), 2 * W * (N + 1) ** (k + 2))
