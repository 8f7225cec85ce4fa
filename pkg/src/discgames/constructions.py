"""Explicit polynomials with high-order roots at 1 and roots close to 1."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import NamedTuple

from . import _kernels
from .errors import CountingConditionFails, PreconditionViolated, SearchSpaceTooLarge
from .polynomial import Polynomial, from_roots_of_unity_product, sign_at, split_root_at_one
from .roots import SturmSequence, isolate_real_roots

PIGEONHOLE_MAX_N = 26


def log2_floor(M: int) -> int:
    return M.bit_length() - 1


def constructive_seed(M: int) -> Polynomial:
    """x^(M - 2^L + 1) * prod_{i<L} (x^(2^i) - 1) with L = floor(log2 M).

    Degree M, coefficients in {-1, 0, 1}, root of order L at 1.
    """
    if M < 2:
        raise ValueError("M must be at least 2")
    L = log2_floor(M)
    return from_roots_of_unity_product([1 << i for i in range(L)]).shift(M - (1 << L) + 1)


def moment_vanishing_check(P: Polynomial, k: int | None = None) -> bool:
    """Whether sum_i a_i i^j = 0 for every j < k, after dividing out powers of x."""
    Q, _ = P.strip_x()
    if k is None:
        k, _ = split_root_at_one(Q)
    cs = Q.coeffs
    return all(sum(a * i**j for i, a in enumerate(cs)) == 0 for j in range(k))


def lasso_amplify(F: Polynomial, d: int) -> Polynomial:
    """H(x) = (x^d - 1) F(x^d) (1 + x + ... + x^(d-1)) + F(x).

    Degree d (deg F + 2) - 1, same root order at 1 as F, and coefficients in
    {-2..2} whenever F has {-1, 0, 1} coefficients and d > deg F.
    """
    if d < 1:
        raise ValueError("d must be positive")
    Fhat = F * Polynomial([-1, 1])
    spread = Fhat.compose_power(d)
    out = [0] * (len(spread.coeffs) + d - 1)
    # multiply by the all-ones block of length d
    for i, c in enumerate(spread.coeffs):
        if c:
            for j in range(i, i + d):
                out[j] += c
    for i, c in enumerate(F.coeffs):
        out[i] += c
    return Polynomial(out)


class SignFlipCertificate(NamedTuple):
    certified: bool
    beta: Fraction
    k: int
    f1: int
    df1: int
    expression: Fraction


def certify_sign_flip(F: Polynomial, d: int, strict: bool = True) -> SignFlipCertificate:
    """Show, without expanding H = lasso_amplify(F, d), that H changes sign on (beta, 1).

    With F = (x - 1)^k f and N = deg H, the bracket of the Taylor form of H
    at beta = 1 - 2/d^(k+2) is bounded above by

        -2 f'(1) / d^(k+2) - f(1) + 16 (N+1)^(k+3) / ((k+2)! d^(2k+4)),

    and ``certified`` is true when that bound is negative while the bracket
    tends to f(1) >= 1 as x -> 1.  ``strict=False`` skips the size
    conditions on k and d (f(1) must still be positive).
    """
    k, f = split_root_at_one(F)
    f1 = f(1)
    deg = F.degree
    N = d * (deg + 2) - 1
    if strict:
        if F.height() > 1 or any(not isinstance(c, int) for c in F.coeffs):
            raise PreconditionViolated("F must have coefficients in {-1, 0, 1}")
        if k < 9:
            raise PreconditionViolated(f"root order {k} at 1 is below 9")
        if d * d < (deg + 2) ** 3:
            raise PreconditionViolated("d < (deg F + 2)^(3/2)")
        if (N + 1) ** 3 > d**5:
            raise PreconditionViolated("d < (N + 1)^(3/5)")
        if 2 * (N + 1) > d ** (k + 2):
            raise PreconditionViolated("beta is farther than 1/(N+1) from 1")
    if f1 <= 0:
        raise PreconditionViolated("f(1) must be positive; negate F first")
    df1 = f.derivative()(1)
    dk = d ** (k + 2)
    beta = 1 - Fraction(2, dk)
    expression = (
        Fraction(-2 * df1, dk)
        - f1
        + Fraction(16 * (N + 1) ** (k + 3), factorial(k + 2) * dk * dk)
    )
    return SignFlipCertificate(expression < 0, beta, k, f1, df1, expression)


class DirectSignCheck(NamedTuple):
    beta: Fraction
    sign_beta: int
    sign_near_one: int
    roots: list


def sign_flip_direct(F: Polynomial, d: int) -> DirectSignCheck:
    """Expand H and isolate its roots on (1 - 2/d^(k+2), 1); toy sizes only."""
    H = lasso_amplify(F, d)
    k, h = split_root_at_one(H)
    beta = 1 - Fraction(2, d ** (k + 2))
    # just left of 1, H has the sign of (x-1)^k h(1)
    near_one = (-1) ** k * (1 if h(1) > 0 else -1)
    seq = SturmSequence(h)
    roots = isolate_real_roots(h, (beta, Fraction(1)), seq=seq)
    return DirectSignCheck(beta, sign_at(H, beta), near_one, roots)


def pigeonhole_condition(N: int, k: int) -> bool:
    return (N + 1) ** (k * (k + 1) // 2) < 2 ** (N + 1)


def pigeonhole_search(N: int, k: int) -> Polynomial:
    """Q1 - Q2 for {0,1} polynomials Q1 != Q2 of degree <= N with equal derivatives 0..k-1 at 1."""
    if N < 0 or k < 1:
        raise ValueError("need N >= 0 and k >= 1")
    if not pigeonhole_condition(N, k):
        raise CountingConditionFails(f"(N+1)^(k(k+1)/2) >= 2^(N+1) for N={N}, k={k}")
    if N > PIGEONHOLE_MAX_N:
        raise SearchSpaceTooLarge(f"2^{N + 1} polynomials exceed the search guard")
    hit = _kernels.pigeonhole_collision(N, k)
    if hit is None:  # impossible when the counting condition holds
        raise AssertionError("pigeonhole search found no collision")
    a, b = hit
    return Polynomial((a >> i & 1) - (b >> i & 1) for i in range(N + 1))
