"""Strategy iteration, value iteration and a brute-force value oracle.

All values are exact Fractions; a value vector is a list indexed by vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .errors import InvariantViolation, TooManyProfiles
from .game import P1, P2, Game, Strategy, check_lambda, default_strategy, profile_successor

DEFAULT_PROFILE_GUARD = 10**6


def evaluate_profile(g: Game, sigma: Strategy, tau: Strategy, lam) -> list[Fraction]:
    """Discounted payoff of the play from every vertex under (sigma, tau)."""
    lam = check_lambda(lam)
    nxt = profile_successor(g, sigma, tau)
    reward = [g.weight(u, nxt[u]) for u in range(g.n)]
    values: list = [None] * g.n
    for start in range(g.n):
        if values[start] is not None:
            continue
        path: list[int] = []
        pos: dict[int, int] = {}
        u = start
        while values[u] is None and u not in pos:
            pos[u] = len(path)
            path.append(u)
            u = nxt[u]
        if values[u] is None:
            # closed a new cycle at u
            cycle = path[pos[u]:]
            total = Fraction(0)
            power = Fraction(1)
            for a in cycle:
                total += power * reward[a]
                power *= lam
            values[cycle[0]] = total / (1 - power)
            for a in reversed(cycle[1:]):
                values[a] = reward[a] + lam * values[nxt[a]]
            path = path[: pos[u]]
        for a in reversed(path):
            values[a] = reward[a] + lam * values[nxt[a]]
    return values


def _greedy(g: Game, v: int, lam: Fraction, f, maximize: bool) -> int:
    best_u = None
    best = None
    for u, w in g.succ[v]:
        val = w + lam * f[u]
        if best is None or (val > best if maximize else val < best):
            best, best_u = val, u
    return best_u


def bellman_extract(g: Game, lam, f) -> tuple[dict[int, int], dict[int, int]]:
    """Greedy strategies for both players w.r.t. ``f``; least successor id wins ties."""
    lam = Fraction(lam)
    sigma = {v: _greedy(g, v, lam, f, True) for v in g.vertices_of(P1)}
    tau = {v: _greedy(g, v, lam, f, False) for v in g.vertices_of(P2)}
    return sigma, tau


def best_response(g: Game, sigma: Strategy, lam) -> dict[int, int]:
    """Optimal player-2 counter-strategy to ``sigma``.

    Single-player policy iteration on the game restricted by ``sigma``,
    switching only on strict improvement.  The result is then re-read greedily
    from the optimal values, so among all optimal choices the least successor
    id is returned at every vertex.
    """
    lam = check_lambda(lam)
    p2 = g.vertices_of(P2)
    if not p2:
        return {}
    tau = default_strategy(g, P2)
    while True:
        f = evaluate_profile(g, sigma, tau, lam)
        changed = False
        for v in p2:
            cur = g.weight(v, tau[v]) + lam * f[tau[v]]
            u = _greedy(g, v, lam, f, False)
            if g.weight(v, u) + lam * f[u] < cur:
                tau[v] = u
                changed = True
        if not changed:
            break
    return {v: _greedy(g, v, lam, f, False) for v in p2}


@dataclass
class SiTrace:
    """Strategy pairs visited by strategy iteration.

    ``profiles[k]`` is ``(sigma^k, tau^k)``; ``final`` is the fixed point
    sigma^K, equal to the player-1 strategy of the last profile.
    """

    profiles: list[tuple[dict[int, int], dict[int, int]]] = field(default_factory=list)
    final: dict[int, int] | None = None
    values: list[list[Fraction]] = field(default_factory=list, repr=False)

    @property
    def iterations(self) -> int:
        return len(self.profiles)

    def strategies(self):
        """Comparable form of the trace (strategy maps only, no values)."""
        return (
            [(tuple(sorted(s.items())), tuple(sorted(t.items()))) for s, t in self.profiles],
            tuple(sorted(self.final.items())) if self.final is not None else None,
        )

    def same_strategies(self, other: "SiTrace") -> bool:
        return self.strategies() == other.strategies()


def strategy_iteration(
    g: Game, lam, sigma0: Strategy | None = None, check: bool = True, max_iterations: int | None = None
) -> tuple[dict[int, int], SiTrace]:
    """Alternate best responses and Bellman extraction until sigma repeats.

    With ``check`` the value vectors along the run are asserted to be
    component-wise non-decreasing.
    """
    lam = check_lambda(lam)
    sigma = dict(sigma0) if sigma0 is not None else default_strategy(g, P1)
    trace = SiTrace()
    prev_values = None
    while True:
        tau = best_response(g, sigma, lam)
        values = evaluate_profile(g, sigma, tau, lam)
        if check and prev_values is not None:
            if any(a < b for a, b in zip(values, prev_values)):
                raise InvariantViolation("strategy iteration decreased a value")
        trace.profiles.append((sigma, tau))
        trace.values.append(values)
        new_sigma, _ = bellman_extract(g, lam, values)
        if new_sigma == sigma:
            trace.final = new_sigma
            return new_sigma, trace
        if max_iterations is not None and trace.iterations >= max_iterations:
            raise InvariantViolation(f"strategy iteration exceeded {max_iterations} iterations")
        prev_values = values
        sigma = new_sigma


def solve(g: Game, lam, sigma0: Strategy | None = None):
    """Optimal values and strategies: ``(values, sigma, tau, trace)``."""
    sigma, trace = strategy_iteration(g, lam, sigma0)
    tau = best_response(g, sigma, lam)
    return evaluate_profile(g, sigma, tau, lam), sigma, tau, trace


def value_iteration(g: Game, lam, t: int) -> list[Fraction]:
    """t exact Bellman updates from the zero vector."""
    lam = check_lambda(lam)
    if t < 0:
        raise ValueError("iteration count must be non-negative")
    f = [Fraction(0)] * g.n
    for _ in range(t):
        nxt = []
        for v in range(g.n):
            vals = [w + lam * f[u] for u, w in g.succ[v]]
            nxt.append(max(vals) if g.owner[v] == P1 else min(vals))
        f = nxt
    return f


def vi_error_bound(g: Game, lam, t: int) -> Fraction:
    lam = check_lambda(lam)
    return lam**t * g.W / (1 - lam)


def _all_strategies(g: Game, player: int):
    verts = g.vertices_of(player)
    for choice in product(*(g.successors(v) for v in verts)):
        yield dict(zip(verts, choice))


def count_profiles(g: Game) -> int:
    total = 1
    for v in range(g.n):
        total *= len(g.succ[v])
    return total


def brute_force_values(g: Game, lam, guard: int = DEFAULT_PROFILE_GUARD):
    """Per-vertex max-min and min-max over all positional strategy pairs."""
    lam = check_lambda(lam)
    total = count_profiles(g)
    if total > guard:
        raise TooManyProfiles(f"{total} strategy profiles exceed the guard of {guard}")
    sigmas = list(_all_strategies(g, P1))
    taus = list(_all_strategies(g, P2))
    table = [[evaluate_profile(g, s, t, lam) for t in taus] for s in sigmas]
    maxmin = []
    minmax = []
    for v in range(g.n):
        maxmin.append(max(min(row[j][v] for j in range(len(taus))) for row in table))
        minmax.append(min(max(row[j][v] for row in table) for j in range(len(taus))))
    return maxmin, minmax
