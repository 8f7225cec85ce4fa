import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from discgames.errors import InvariantViolation, LambdaOutOfRange, TooManyProfiles
from discgames.game import P1, P2, Game, extract_lasso, disc_payoff
from discgames.generate import random_game
from discgames.solver import (
    _all_strategies,
    bellman_extract,
    best_response,
    brute_force_values,
    count_profiles,
    evaluate_profile,
    solve,
    strategy_iteration,
    value_iteration,
    vi_error_bound,
)

HALF = Fraction(1, 2)


def test_lasso_game_value(lasso_game):
    vals = evaluate_profile(lasso_game, {0: 1, 1: 2}, {2: 1}, HALF)
    assert vals[0] == Fraction(7, 3)
    assert best_response(lasso_game, {0: 1, 1: 2}, HALF) == {2: 1}


def test_lambda_zero_is_edge_weight(lasso_game):
    assert evaluate_profile(lasso_game, {0: 1, 1: 2}, {2: 1}, 0) == [1, 3, -2]


def test_two_cycles_value_at_three_quarters(two_cycles, sigma_right):
    lam = Fraction(3, 4)
    vals = evaluate_profile(two_cycles, sigma_right, {}, lam)
    assert vals[0] == (2 * lam**2 + lam**3) / (1 - lam**4)


def test_evaluation_matches_lassos():
    for seed in range(40):
        g = random_game(6, 0.4, 3, seed)
        rng = random.Random(seed)
        sigma = {v: rng.choice(g.successors(v)) for v in g.vertices_of(P1)}
        tau = {v: rng.choice(g.successors(v)) for v in g.vertices_of(P2)}
        lam = Fraction(rng.randint(0, 99), 100)
        vals = evaluate_profile(g, sigma, tau, lam)
        assert vals == [disc_payoff(extract_lasso(g, sigma, tau, v), lam) for v in range(g.n)]


def test_empty_best_response(two_cycles, sigma_left):
    assert best_response(two_cycles, sigma_left, HALF) == {}


def test_best_response_two_exits():
    # player 2 at vertex 0 chooses between a cheap exit and a costly loop
    g = Game.from_edges(3, [P2, P1, P1], [(0, 1, 0), (0, 2, 0), (1, 1, 2), (2, 2, -1)])
    tau = best_response(g, {1: 1, 2: 2}, HALF)
    assert tau == {0: 2}
    options = [evaluate_profile(g, {1: 1, 2: 2}, {0: u}, HALF)[0] for u in (1, 2)]
    assert evaluate_profile(g, {1: 1, 2: 2}, tau, HALF)[0] == min(options)


def test_best_response_is_optimal_everywhere():
    for seed in range(60):
        g = random_game(5, 0.5, 3, seed)
        if count_profiles(g) > 5000:
            continue
        sigma = {v: g.successors(v)[-1] for v in g.vertices_of(P1)}
        lam = Fraction(9, 10)
        tau = best_response(g, sigma, lam)
        best = evaluate_profile(g, sigma, tau, lam)
        for t in _all_strategies(g, P2):
            other = evaluate_profile(g, sigma, t, lam)
            assert all(b <= o for b, o in zip(best, other))


def test_bellman_zero_vector():
    g = Game.from_edges(
        6, [P1, P1, P2, P1, P1, P1],
        [(0, 3, 1), (0, 5, 1), (1, 3, 0), (1, 4, 2), (2, 3, 5), (2, 4, -1),
         (3, 3, 0), (4, 4, 0), (5, 5, 0)],
    )
    sigma, tau = bellman_extract(g, HALF, [0] * 6)
    assert sigma[0] == 3  # tie between 3 and 5: least id
    assert sigma[1] == 4
    assert tau[2] == 4


def test_bellman_tie_independent_of_lambda():
    g = Game.from_edges(6, [P1] * 6, [(0, 3, 0), (0, 5, 0)] + [(v, v, 0) for v in range(1, 6)])
    for lam in (0, Fraction(1, 3), Fraction(99, 100)):
        assert bellman_extract(g, lam, [7] * 6)[0][0] == 3


def test_bellman_two_cycles(two_cycles, sigma_right):
    lam = Fraction(3, 4)
    f = evaluate_profile(two_cycles, sigma_right, {}, lam)
    assert bellman_extract(two_cycles, lam, f)[0][0] == 5


def test_two_cycles_si(two_cycles, sigma_left, sigma_right):
    s, _ = strategy_iteration(two_cycles, Fraction(1, 4), sigma_right)
    assert s[0] == 1 and s == sigma_left
    s, _ = strategy_iteration(two_cycles, Fraction(3, 4), sigma_left)
    assert s[0] == 5 and s == sigma_right


def test_single_profile_terminates_fast(lasso_game):
    s, trace = strategy_iteration(lasso_game, HALF)
    assert trace.iterations <= 2
    assert s == {0: 1, 1: 2}
    assert trace.final == trace.profiles[-1][0]


def test_lambda_checked(lasso_game):
    with pytest.raises(LambdaOutOfRange):
        strategy_iteration(lasso_game, 1)
    with pytest.raises(LambdaOutOfRange):
        evaluate_profile(lasso_game, {0: 1, 1: 2}, {2: 1}, Fraction(-1, 3))


def test_guard(two_cycles):
    with pytest.raises(TooManyProfiles):
        brute_force_values(two_cycles, HALF, guard=1)


def test_two_cycles_oracle(two_cycles):
    a, b = brute_force_values(two_cycles, HALF)
    assert a == b
    assert a[0] == Fraction(2, 3)


def test_single_profile_oracle(lasso_game):
    a, b = brute_force_values(lasso_game, HALF)
    assert a == b == evaluate_profile(lasso_game, {0: 1, 1: 2}, {2: 1}, HALF)


def test_max_iterations_guard(two_cycles, sigma_right):
    with pytest.raises(InvariantViolation):
        strategy_iteration(two_cycles, Fraction(1, 4), sigma_right, max_iterations=1)


def test_value_iteration_basics(lasso_game):
    assert value_iteration(lasso_game, HALF, 0) == [0, 0, 0]
    assert value_iteration(lasso_game, HALF, 1) == [1, 3, -2]
    f = value_iteration(lasso_game, HALF, 40)
    assert abs(f[0] - Fraction(7, 3)) <= vi_error_bound(lasso_game, HALF, 40)


game_params = st.tuples(st.integers(1, 5), st.floats(0.1, 0.8), st.integers(0, 3), st.integers(0, 10**6))
lambdas = st.sampled_from([Fraction(0), Fraction(1, 2), Fraction(9, 10), Fraction(99, 100)])


@settings(max_examples=80, deadline=None)
@given(game_params, lambdas)
def test_si_matches_brute_force(params, lam):
    g = random_game(*params)
    if count_profiles(g) > 20000:
        return
    maxmin, minmax = brute_force_values(g, lam)
    assert maxmin == minmax
    values, sigma, tau, trace = solve(g, lam)
    assert values == maxmin
    # monotone improvement along the trace
    for prev, cur in zip(trace.values, trace.values[1:]):
        assert all(a <= b for a, b in zip(prev, cur))


@settings(max_examples=40, deadline=None)
@given(game_params, lambdas, st.integers(0, 5))
def test_vi_error_bound(params, lam, t):
    g = random_game(*params)
    exact, *_ = solve(g, lam)
    f = value_iteration(g, lam, t)
    assert max(abs(a - b) for a, b in zip(f, exact)) <= vi_error_bound(g, lam, t)
