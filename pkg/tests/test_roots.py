from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from discgames.errors import ZeroPolynomial
from discgames.polynomial import Polynomial, evaluate
from discgames.roots import (
    RootInterval,
    SturmSequence,
    count_real_roots,
    isolate_real_roots,
    refine,
)

X = sympy.Symbol("x")


def sympy_real_roots(P: Polynomial):
    """Distinct real roots from sympy's own isolation, as (lo, hi) rationals."""
    poly = sympy.Poly(list(reversed(P.coeffs)), X)
    out = []
    for (a, b), _ in poly.intervals():
        out.append((Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q))))
    return out


def test_interval_validation():
    with pytest.raises(ValueError):
        RootInterval(Fraction(1), Fraction(1), -1, 1)
    with pytest.raises(ValueError):
        RootInterval(Fraction(0), Fraction(1), 1, 1)
    iv = RootInterval(Fraction(1), Fraction(2), -1, 1)
    assert iv.width == 1 and iv.contains(Fraction(3, 2))
    assert iv.distance_to(0) == 1 and iv.distance_to(3) == 1
    assert iv.distance_to(Fraction(3, 2)) == 0


def test_sqrt2():
    (iv,) = isolate_real_roots(Polynomial([-2, 0, 1]), (Fraction(1), Fraction(2)))
    assert iv.lo < iv.hi
    assert iv.lo**2 < 2 < iv.hi**2
    narrow = refine(SturmSequence(Polynomial([-2, 0, 1])), iv, Fraction(1, 10**6))
    assert narrow.width <= Fraction(1, 10**6)
    assert narrow.lo**2 < 2 < narrow.hi**2


def test_double_root_at_one():
    P = Polynomial([1, -2, 1])
    ivs = isolate_real_roots(P, (Fraction(0), Fraction(2)))
    assert len(ivs) == 1 and ivs[0].contains(1)


def test_two_cycles_difference_on_unit_interval():
    F = Polynomial([0, 1, -2, -1, 2])
    ivs = isolate_real_roots(F, (Fraction(0), Fraction(1)))
    assert len(ivs) == 1
    tight = isolate_real_roots(F, (Fraction(0), Fraction(1)), width=Fraction(1, 2**20))
    assert tight[0].contains(Fraction(1, 2))


def test_open_interval_semantics():
    # roots at 0 and 1 sit on the boundary and are excluded
    P = Polynomial([0, -1, 1])
    assert isolate_real_roots(P, (Fraction(0), Fraction(1))) == []
    assert count_real_roots(P, Fraction(0), Fraction(1)) == 0
    assert count_real_roots(P, Fraction(-1), Fraction(2)) == 2
    assert SturmSequence(P).count_closed(Fraction(0), Fraction(1)) == 2


def test_zero_polynomial_rejected():
    with pytest.raises(ZeroPolynomial):
        isolate_real_roots(Polynomial([]))


def test_constants_have_no_roots():
    assert isolate_real_roots(Polynomial([7])) == []


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=8))
def test_against_sympy(cs):
    P = Polynomial(cs)
    if P.degree < 1:
        return
    ours = isolate_real_roots(P)
    theirs = sympy_real_roots(P)
    assert len(ours) == len(theirs)
    for iv in ours:
        # each interval holds exactly one sympy root
        hits = [r for r in theirs if r[0] < iv.hi and iv.lo < r[1]]
        assert hits
        assert count_real_roots(P, iv.lo, iv.hi) == 1


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=2, max_size=7), st.integers(1, 3))
def test_multiple_roots_use_squarefree_part(cs, mult):
    base = Polynomial(cs)
    if base.degree < 1:
        return
    P = base**mult
    assert len(isolate_real_roots(P)) == len(isolate_real_roots(base))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=2, max_size=7))
def test_intervals_are_disjoint_and_refinable(cs):
    P = Polynomial(cs)
    if P.degree < 1:
        return
    w = Fraction(1, 1024)
    ivs = isolate_real_roots(P, width=w)
    for a, b in zip(ivs, ivs[1:]):
        assert a.hi <= b.lo
    for iv in ivs:
        assert iv.width <= w
        assert iv.sign_lo == -iv.sign_hi
