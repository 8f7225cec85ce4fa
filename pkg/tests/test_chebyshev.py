from fractions import Fraction

import pytest

from discgames.chebyshev import build_g, chebyshev, f_mu, g_envelope_holds, verify_f_property
from discgames.polynomial import Polynomial, evaluate

# cos(t * theta) for cos(theta) in {-1, -1/2, 0, 1/2, 1}
ANGLES = {
    Fraction(1): 0,
    Fraction(1, 2): 1,  # theta = pi/3, in sixths of 2pi
    Fraction(0): None,
    Fraction(-1, 2): 2,  # theta = 2pi/3
    Fraction(-1): 3,  # theta = pi
}
COS_SIXTHS = [Fraction(1), Fraction(1, 2), Fraction(-1, 2), Fraction(-1), Fraction(-1, 2), Fraction(1, 2)]
COS_QUARTERS = [Fraction(1), Fraction(0), Fraction(-1), Fraction(0)]


def test_first_terms():
    assert chebyshev(0) == Polynomial([1])
    assert chebyshev(1) == Polynomial([0, 1])
    assert chebyshev(2) == Polynomial([-1, 0, 2])
    assert chebyshev(3) == Polynomial([0, -3, 0, 4])
    assert evaluate(chebyshev(3), Fraction(1, 2)) == -1


@pytest.mark.parametrize("t", range(21))
@pytest.mark.parametrize("c", list(ANGLES))
def test_cosine_identity(t, c):
    T = chebyshev(t)
    if ANGLES[c] is None:
        # theta = pi/2
        expected = COS_QUARTERS[t % 4]
    else:
        expected = COS_SIXTHS[(ANGLES[c] * t) % 6]
    assert evaluate(T, c) == expected


def test_build_g():
    assert build_g(1) == Polynomial([Fraction(1, 2), 1])
    for mu in range(1, 51):
        g = build_g(mu)
        assert g.degree == mu
        assert evaluate(g, 1) == mu + Fraction(1, 2)


@pytest.mark.parametrize("mu", [1, 2, 5, 9, 17])
def test_envelope(mu):
    for i in range(-19, 20):
        assert g_envelope_holds(mu, Fraction(i, 20))


def test_f_mu():
    assert f_mu(100, 16) == 12


@pytest.mark.parametrize("N,W", [(100, 1), (400, 16), (10, 1), (50, 2)])
def test_f_property(N, W):
    res = verify_f_property(N, W)
    assert res.holds
    assert res.F0 == (res.mu + Fraction(1, 2)) ** 4
    assert res.F0 > res.weighted_sum


def test_f_property_direct_evaluation_small():
    N, W = 10, 1
    res = verify_f_property(N, W)
    g = build_g(res.mu)
    direct = sum(evaluate(g, 1 - Fraction(2 * i, N)) ** 4 for i in range(1, N + 1))
    assert res.weighted_sum == W * direct
