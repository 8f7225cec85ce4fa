import random
from fractions import Fraction
from math import isqrt

import pytest

from discgames.constructions import (
    certify_sign_flip,
    constructive_seed,
    lasso_amplify,
    moment_vanishing_check,
    pigeonhole_condition,
    pigeonhole_search,
    sign_flip_direct,
)
from discgames.errors import CountingConditionFails, PreconditionViolated, SearchSpaceTooLarge
from discgames.polynomial import Polynomial, root_order_at_one, split_root_at_one

X1 = Polynomial([-1, 1])


def ceil_pow_three_halves(m):
    """ceil(m ** 1.5) exactly."""
    c = isqrt(m**3)
    return c if c * c == m**3 else c + 1


def test_seed_examples():
    assert constructive_seed(3) == Polynomial([0, 0, -1, 1])
    assert constructive_seed(7) == Polynomial.monomial(4) * X1 * Polynomial([-1, 0, 1])
    assert root_order_at_one(constructive_seed(7)) == 2


@pytest.mark.parametrize("M", [2, 3, 4, 15, 16, 17, 100, 1023, 1024])
def test_seed_shape(M):
    P = constructive_seed(M)
    assert P.degree == M
    assert P.height() == 1
    assert root_order_at_one(P) == M.bit_length() - 1


def test_seed_rejects_small():
    with pytest.raises(ValueError):
        constructive_seed(1)


def test_moment_vanishing():
    assert moment_vanishing_check(X1 * X1, 2)
    assert moment_vanishing_check(constructive_seed(15))
    assert moment_vanishing_check(constructive_seed(15), 3)
    assert moment_vanishing_check(Polynomial([-2, 1]), 0)
    assert not moment_vanishing_check(X1, 2)


def test_amplify_small():
    H = lasso_amplify(X1, 2)
    assert H.coeffs == (0, 2, -2, -2, 1, 1)
    assert H.degree == 5


def test_amplify_random_pairs():
    rng = random.Random(7)
    for _ in range(20):
        deg = rng.randint(1, 8)
        cs = [rng.choice((-1, 0, 1)) for _ in range(deg)] + [rng.choice((-1, 1))]
        F = Polynomial(cs)
        if rng.random() < 0.5:
            F = F * X1 ** rng.randint(1, 3)
            if F.height() > 1:
                continue
        d = rng.randint(F.degree + 1, F.degree + 6)
        H = lasso_amplify(F, d)
        assert H.degree == d * (F.degree + 2) - 1
        assert H.height() <= 2
        assert root_order_at_one(H) == root_order_at_one(F)


def test_certificate_full_scale():
    F = constructive_seed(1023)
    d = ceil_pow_three_halves(1025)
    cert = certify_sign_flip(F, d)
    assert cert.k == 9
    assert cert.certified
    assert 1 - cert.beta == Fraction(2, d ** (cert.k + 2))
    assert cert.f1 >= 1


def test_certificate_rejects_low_order():
    F = constructive_seed(32 + 5)  # order 5
    with pytest.raises(PreconditionViolated):
        certify_sign_flip(F, 10**6)


def test_certificate_rejects_small_d():
    F = constructive_seed(1023)
    with pytest.raises(PreconditionViolated):
        certify_sign_flip(F, 1000)


def test_certificate_needs_positive_f1():
    F = -constructive_seed(1023)
    with pytest.raises(PreconditionViolated):
        certify_sign_flip(F, ceil_pow_three_halves(1025))


def _positive(F):
    _, f = split_root_at_one(F)
    return F if f(1) > 0 else -F


@pytest.mark.parametrize("M,d", [(3, 5), (7, 4), (7, 27), (15, 3), (31, 40)])
def test_bracket_is_first_order_taylor_form(M, d):
    # with h = H / (x-1)^k: h(1) = f(1) and h'(1) = f'(1) + d^(k+2) f(1)
    F = _positive(constructive_seed(M))
    k, f = split_root_at_one(F)
    _, h = split_root_at_one(lasso_amplify(F, d))
    assert h(1) == f(1)
    assert h.derivative()(1) == f.derivative()(1) + d ** (k + 2) * f(1)


@pytest.mark.parametrize("M,d", [(3, 5), (7, 6), (15, 20), (31, 40), (63, 30)])
def test_certificate_bound_dominates_exact_value(M, d):
    F = _positive(constructive_seed(M))
    cert = certify_sign_flip(F, d, strict=False)
    _, h = split_root_at_one(lasso_amplify(F, d))
    assert h(cert.beta) <= cert.expression


TOY = [
    (Polynomial([-1, 1]), 15),
    (Polynomial([-1, 1]), 64),
    (constructive_seed(3), 9),
    (constructive_seed(7), 27),
    (constructive_seed(7), 40),
    (Polynomial([1, 0, -1, 1]) * X1, 5),
]


@pytest.mark.parametrize("F,d", TOY)
def test_direct_sign_check_consistency(F, d):
    F = _positive(F)
    res = sign_flip_direct(F, d)
    if res.sign_beta == -res.sign_near_one:
        assert res.roots
    cert = certify_sign_flip(F, d, strict=False)
    if cert.certified:
        assert res.roots
        assert all(res.beta <= iv.lo and iv.hi <= 1 for iv in res.roots)


def test_pigeonhole_condition():
    assert pigeonhole_condition(16, 2)
    assert not pigeonhole_condition(3, 3)
    assert 17**3 < 2**17


@pytest.mark.parametrize("N", [16, 20, 24])
def test_pigeonhole_results(N):
    P = pigeonhole_search(N, 2)
    assert not P.is_zero
    assert P.height() == 1
    assert P.degree <= N
    assert root_order_at_one(P) >= 2


def test_pigeonhole_errors():
    with pytest.raises(CountingConditionFails):
        pigeonhole_search(3, 3)
    with pytest.raises(SearchSpaceTooLarge):
        pigeonhole_search(40, 2)
