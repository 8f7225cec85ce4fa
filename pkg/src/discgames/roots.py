"""Certified real-root isolation with Sturm sequences over the integers.

Every polynomial is first scaled to integer coefficients and reduced to its
square-free part, so the isolating intervals certify simple roots by a
strict sign change of that part.  Intervals are open: roots sitting exactly on
a requested endpoint are not reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import ZeroPolynomial
from .polynomial import Polynomial, sign_at


@dataclass(frozen=True)
class RootInterval:
    lo: Fraction
    hi: Fraction
    sign_lo: int
    sign_hi: int

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("empty root interval")
        if self.sign_lo * self.sign_hi >= 0:
            raise ValueError("root interval without a sign change")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo < x < self.hi

    def distance_to(self, x) -> Fraction:
        """Lower bound on |root - x| for the root inside this interval."""
        if x <= self.lo:
            return self.lo - x
        if x >= self.hi:
            return x - self.hi
        return Fraction(0)


def to_integer_poly(P: Polynomial) -> list[int]:
    """Positive rescaling of P to a primitive integer coefficient list."""
    cs = P.coeffs
    if not cs:
        raise ZeroPolynomial("zero polynomial")
    den = 1
    for c in cs:
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    ints = [int(c * den) for c in cs]
    return _primitive(ints)


def _primitive(cs: list[int]) -> list[int]:
    g = 0
    for c in cs:
        g = gcd(g, c)
        if g == 1:
            return cs
    return [c // g for c in cs] if g > 1 else cs


def _trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _prem_sign_adjusted(a: list[int], b: list[int]) -> list[int]:
    """A positive multiple of rem(a, b), computed without fractions."""
    r = list(a)
    nb = len(b) - 1
    lb = b[-1]
    steps = 0
    while len(r) - 1 >= nb and r:
        lr = r[-1]
        shift = len(r) - 1 - nb
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        r.pop()
        _trim(r)
        steps += 1
    if lb < 0 and steps % 2 == 1:
        r = [-c for c in r]
    return r


def _exact_quotient(a: list[int], b: list[int]) -> list[int]:
    """Integer polynomial proportional to a / b, assuming b divides a over Q."""
    num = [Fraction(c) for c in a]
    nb = len(b) - 1
    q = [Fraction(0)] * (len(a) - nb)
    for i in range(len(a) - 1 - nb, -1, -1):
        coef = num[i + nb] / b[-1]
        q[i] = coef
        if coef:
            for j, c in enumerate(b):
                num[i + j] -= coef * c
    if any(num[:nb]):
        raise ArithmeticError("inexact polynomial division")
    den = 1
    for c in q:
        den = lcm(den, c.denominator)
    out = _primitive([int(c * den) for c in q])
    if out[-1] < 0:
        out = [-c for c in out]
    return out


def sturm_chain(cs: list[int]) -> list[list[int]]:
    """Sturm sequence p0 = f, p1 = f', p_{i+1} ~ -rem(p_{i-1}, p_i)."""
    chain = [cs]
    if len(cs) <= 1:
        return chain
    d = _primitive([i * c for i, c in enumerate(cs) if i])
    chain.append(d)
    while len(chain[-1]) > 1:
        r = _prem_sign_adjusted(chain[-2], chain[-1])
        if not r:
            break
        chain.append(_primitive([-c for c in r]))
    return chain


def _signs(chain: list[list[int]], x) -> list[int]:
    if isinstance(x, int):
        p, q = x, 1
    else:
        p, q = x.numerator, x.denominator
    maxdeg = len(chain[0]) - 1
    ppow = [1] * (maxdeg + 1)
    qpow = [1] * (maxdeg + 1)
    for i in range(1, maxdeg + 1):
        ppow[i] = ppow[i - 1] * p
        qpow[i] = qpow[i - 1] * q
    out = []
    for poly in chain:
        d = len(poly) - 1
        v = 0
        for i, c in enumerate(poly):
            if c:
                v += c * ppow[i] * qpow[d - i]
        out.append((v > 0) - (v < 0))
    return out


def _variations(signs) -> int:
    v = 0
    last = 0
    for s in signs:
        if s:
            if last and s != last:
                v += 1
            last = s
    return v


class SturmSequence:
    """Sturm sequence of the square-free part of a polynomial."""

    def __init__(self, P: Polynomial):
        cs = to_integer_poly(P)
        if cs[-1] < 0:
            cs = [-c for c in cs]
        chain = sturm_chain(cs)
        if len(chain[-1]) > 1:
            # repeated factors: restart from f / gcd(f, f')
            cs = _exact_quotient(cs, chain[-1])
            chain = sturm_chain(cs)
        self.sqf = cs
        self.chain = chain

    @property
    def degree(self) -> int:
        return len(self.sqf) - 1

    def sign(self, x) -> int:
        return sign_at(Polynomial(self.sqf), x)

    def variations(self, x) -> int:
        return _variations(_signs(self.chain, x))

    def _variations_inf(self, positive: bool) -> int:
        signs = []
        for poly in self.chain:
            s = 1 if poly[-1] > 0 else -1
            if not positive and (len(poly) - 1) % 2 == 1:
                s = -s
            signs.append(s)
        return _variations(signs)

    def count(self, a=None, b=None) -> int:
        """Number of distinct real roots in the open interval (a, b).

        ``None`` stands for -inf / +inf.
        """
        if self.degree <= 0:
            return 0
        va = self._variations_inf(False) if a is None else self.variations(a)
        if b is None:
            vb = self._variations_inf(True)
            at_b = 0
        else:
            sb = _signs(self.chain, b)
            vb = _variations(sb)
            at_b = 1 if sb[0] == 0 else 0
        # V(a) - V(b) counts roots in (a, b]
        return va - vb - at_b

    def count_closed(self, a, b) -> int:
        """Number of distinct real roots in [a, b]."""
        n = self.count(a, b)
        n += 1 if self.sign(a) == 0 else 0
        if a != b:
            n += 1 if self.sign(b) == 0 else 0
        return n


def cauchy_bound(cs: list[int]) -> Fraction:
    lead = abs(cs[-1])
    return 1 + Fraction(max((abs(c) for c in cs[:-1]), default=0), lead)


def _shrink_around(seq: SturmSequence, m: Fraction, lo: Fraction, hi: Fraction, width):
    """Isolating interval around an exact root m strictly inside (lo, hi)."""
    delta = min(m - lo, hi - m) / 2
    if width is not None:
        delta = min(delta, Fraction(width) / 2)
    while True:
        a, b = m - delta, m + delta
        sa, sb = seq.sign(a), seq.sign(b)
        if sa and sb and seq.count(a, b) == 1:
            return RootInterval(a, b, sa, sb)
        delta /= 2


def refine(seq: SturmSequence, iv: RootInterval, width) -> RootInterval:
    """Bisect an isolating interval until it is no wider than ``width``."""
    width = Fraction(width)
    lo, hi, slo, shi = iv.lo, iv.hi, iv.sign_lo, iv.sign_hi
    while hi - lo > width:
        m = (lo + hi) / 2
        sm = seq.sign(m)
        if sm == 0:
            return _shrink_around(seq, m, lo, hi, width)
        if sm == slo:
            lo = m
        else:
            hi = m
    return RootInterval(lo, hi, slo, shi)


def isolate_real_roots(
    P: Polynomial, interval=None, width=None, seq: SturmSequence | None = None
) -> list[RootInterval]:
    """Disjoint isolating intervals for the distinct real roots of P in an open interval.

    ``interval`` is a pair ``(a, b)`` of rationals (either may be ``None``
    for an infinite end); by default the whole real line.  With ``width``
    every returned interval is refined to at most that width.
    """
    if P.is_zero:
        raise ZeroPolynomial("cannot isolate the roots of the zero polynomial")
    if seq is None:
        seq = SturmSequence(P)
    if seq.degree <= 0:
        return []
    bound = cauchy_bound(seq.sqf) + 1
    a, b = (None, None) if interval is None else interval
    a = -bound if a is None else max(Fraction(a), -bound)
    b = bound if b is None else min(Fraction(b), bound)
    if a >= b:
        return []
    out: list[RootInterval] = []
    stack = [(a, b, seq.count(a, b))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            slo, shi = seq.sign(lo), seq.sign(hi)
            if slo and shi:
                iv = RootInterval(lo, hi, slo, shi)
                out.append(iv if width is None else refine(seq, iv, width))
                continue
        m = (lo + hi) / 2
        if seq.sign(m) == 0:
            iv = _shrink_around(seq, m, lo, hi, width)
            out.append(iv)
            left = seq.count(lo, iv.lo)
            right = seq.count(iv.hi, hi)
            stack.append((lo, iv.lo, left))
            stack.append((iv.hi, hi, right))
            continue
        nl = seq.count(lo, m)
        stack.append((m, hi, n - nl))
        stack.append((lo, m, nl))
    out.sort(key=lambda iv: iv.lo)
    return out


def count_real_roots(P: Polynomial, a=None, b=None) -> int:
    """Distinct real roots of P in the open interval (a, b)."""
    if P.is_zero:
        raise ZeroPolynomial("the zero polynomial vanishes everywhere")
    return SturmSequence(P).count(
        None if a is None else Fraction(a), None if b is None else Fraction(b)
    )
