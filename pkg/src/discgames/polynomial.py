"""Dense univariate polynomials with exact coefficients.

Coefficients are stored lowest degree first, so ``Polynomial([-1, 0, 0, 1])``
is ``x**3 - 1``.  They are normally Python ints; Fractions are accepted as
well (the Chebyshev sum used by the order bound has half-integer terms).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import accumulate
from math import comb, factorial
from numbers import Rational
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, ZeroPolynomial


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_normalize(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Polynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Read the comma-separated, lowest-degree-first text form."""
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial")
        return cls(int(tok) for tok in text.split(","))

    def format(self) -> str:
        if not self.coeffs:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    # -- basic queries ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Top index; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def height(self) -> int:
        """Largest absolute coefficient."""
        return max((abs(c) for c in self.coeffs), default=0)

    def in_family(self, N: int, W: int) -> bool:
        """Membership in the family of degree-N polynomials with |a_i| <= W."""
        return (
            self.degree == N
            and all(isinstance(c, int) for c in self.coeffs)
            and self.height() <= W
        )

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else f"{mag}*") + ("x" if i == 1 else f"x^{i}")
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return Polynomial([0] * k + list(self.coeffs))

    def compose_power(self, d: int) -> "Polynomial":
        """P(x**d)."""
        if d < 1:
            raise ValueError("d must be positive")
        out = [0] * (d * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * d] = c
        return Polynomial(out)

    def strip_x(self) -> tuple["Polynomial", int]:
        """Divide out the largest power of x; returns (quotient, power)."""
        if not self.coeffs:
            raise ZeroPolynomial("cannot strip x from the zero polynomial")
        j = 0
        while self.coeffs[j] == 0:
            j += 1
        return Polynomial(self.coeffs[j:]), j

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def divmod_linear(self, root) -> tuple["Polynomial", object]:
        """Synthetic division by (x - root): returns (quotient, remainder)."""
        cs = self.coeffs
        if not cs:
            return Polynomial(), 0
        q = [0] * (len(cs) - 1)
        acc = cs[-1]
        for i in range(len(cs) - 2, -1, -1):
            q[i] = acc
            acc = cs[i] + acc * root
        return Polynomial(q), acc

    def __call__(self, x):
        return evaluate(self, x)


def _coerce(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, (int, Fraction)):
        return Polynomial([p])
    raise TypeError(f"cannot use {type(p).__name__} as a polynomial")


def evaluate(P: Polynomial, x):
    """Exact Horner evaluation; ``x`` may be an int or a Fraction."""
    acc = 0
    for c in reversed(P.coeffs):
        acc = acc * x + c
    return acc


def sign_at(P: Polynomial, x) -> int:
    """Sign of P(x) for rational x, computed in integers when ``x = p/q``."""
    if isinstance(x, int):
        v = evaluate(P, x)
        return (v > 0) - (v < 0)
    if not isinstance(x, Rational):
        raise TypeError("sign_at needs an exact rational argument")
    p, q = x.numerator, x.denominator
    # q**N * P(p/q) has the sign of P(p/q) since q > 0
    acc = 0
    qpow = 1
    for c in reversed(P.coeffs):
        acc = acc * p + c * qpow
        qpow *= q
    return (acc > 0) - (acc < 0)


def taylor_at_one(P: Polynomial) -> list:
    """Coefficients t_j of P(1 + h) = sum t_j h**j, i.e. t_j = P^(j)(1) / j!."""
    cs = list(P.coeffs)
    n = len(cs)
    # repeated synthetic division by (x - 1); remainders are the Taylor coefficients
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            cs[j] += cs[j + 1]
    return cs


def derivative_at_one(P: Polynomial, j: int, W: int | None = None) -> int:
    """The j-th derivative of P at 1, ``sum_{i>=j} j! * C(i, j) * a_i``.

    When a coefficient bound ``W`` is given the result is checked against
    ``|P^(j)(1)| <= W (N+1)^(j+1)``.
    """
    N = P.degree
    if j < 0 or j > N:
        raise IndexOutOfRange(f"derivative order {j} outside [0, {N}]")
    partial = sum(comb(i, j) * P.coeffs[i] for i in range(j, N + 1))
    value = factorial(j) * partial
    assert value % factorial(j) == 0
    if W is not None:
        assert abs(value) <= W * (N + 1) ** (j + 1), "derivative bound violated"
    return value


def _deflate_at_one(coeffs: tuple) -> tuple[int, list]:
    """Strip factors (x - 1) from a coefficient tuple; returns (k, cofactor)."""
    cs = list(coeffs)
    k = 0
    while True:
        # quotient by (x - 1): suffix sums; remainder: the full sum
        tail = list(accumulate(reversed(cs)))
        if tail[-1] != 0:
            return k, cs
        k += 1
        cs = tail[-2::-1]


def root_order_at_one(P: Polynomial) -> int:
    """Multiplicity of the root 1, by repeated exact division by (x - 1)."""
    if P.is_zero:
        raise ZeroPolynomial("the zero polynomial has no finite root order")
    return _deflate_at_one(P.coeffs)[0]


def split_root_at_one(P: Polynomial) -> tuple[int, Polynomial]:
    """Write P = (x - 1)^k f with f(1) != 0; returns (k, f)."""
    if P.is_zero:
        raise ZeroPolynomial("the zero polynomial has no finite root order")
    k, cs = _deflate_at_one(P.coeffs)
    return k, Polynomial(cs)


def from_roots_of_unity_product(exponents: Sequence[int]) -> Polynomial:
    """prod (x**e - 1) over the given exponents."""
    out = [1]
    for e in exponents:
        nxt = [0] * (len(out) + e)
        for i, c in enumerate(out):
            nxt[i + e] += c
            nxt[i] -= c
        out = nxt
    return Polynomial(out)
