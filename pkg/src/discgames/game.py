"""Turn-based game graphs, lasso plays and exact discounted payoffs."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    DanglingVertexId,
    DuplicateEdge,
    EmptySuccessorSet,
    GameError,
    GameParseError,
    InvalidStrategy,
    LambdaOutOfRange,
)
from .polynomial import Polynomial

P1, P2 = 1, 2

# A positional strategy maps each vertex of one player to a successor.
Strategy = Mapping[int, int]


@dataclass(frozen=True)
class Game:
    """Finite game graph.

    ``succ[v]`` lists ``(successor, weight)`` pairs in ascending successor
    order; that order is the tie-breaking order used everywhere.
    """

    n: int
    owner: tuple[int, ...]
    succ: tuple[tuple[tuple[int, int], ...], ...]
    _weights: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_weights", {(u, v): w for u, out in enumerate(self.succ) for v, w in out}
        )

    @classmethod
    def from_edges(cls, n: int, owner: Iterable[int], edges: Iterable[tuple[int, int, int]]) -> "Game":
        owner = tuple(owner)
        lists: list[list[tuple[int, int]]] = [[] for _ in range(max(n, 0))]
        for u, v, w in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DanglingVertexId(f"edge ({u}, {v}) leaves the vertex range [0, {n})")
            lists[u].append((v, int(w)))
        g = cls(n, owner, tuple(tuple(sorted(out)) for out in lists))
        validate_game(g)
        return g

    @property
    def m(self) -> int:
        return sum(len(out) for out in self.succ)

    @property
    def W(self) -> int:
        return max((abs(w) for out in self.succ for _, w in out), default=0)

    def weight(self, u: int, v: int) -> int:
        return self._weights[(u, v)]

    def successors(self, u: int) -> list[int]:
        return [v for v, _ in self.succ[u]]

    def vertices_of(self, player: int) -> list[int]:
        return [v for v in range(self.n) if self.owner[v] == player]

    def edges(self) -> list[tuple[int, int, int]]:
        return [(u, v, w) for u, out in enumerate(self.succ) for v, w in out]


def validate_game(g: Game) -> None:
    """Raise unless every structural invariant of ``g`` holds."""
    if g.n < 1:
        raise GameError("a game needs at least one vertex")
    if len(g.owner) != g.n or len(g.succ) != g.n:
        raise DanglingVertexId("owner/successor tables do not match the vertex count")
    for v, who in enumerate(g.owner):
        if who not in (P1, P2):
            raise DanglingVertexId(f"vertex {v} has owner {who}, expected 1 or 2")
    for u, out in enumerate(g.succ):
        if not out:
            raise EmptySuccessorSet(u)
        prev = None
        for v, _ in out:
            if not 0 <= v < g.n:
                raise DanglingVertexId(f"edge ({u}, {v}) leaves the vertex range [0, {g.n})")
            if prev is not None and v == prev:
                raise DuplicateEdge(f"edge ({u}, {v}) appears twice")
            if prev is not None and v < prev:
                raise DanglingVertexId(f"successors of {u} are not sorted")
            prev = v


def check_strategy(g: Game, strategy: Strategy, player: int) -> None:
    owned = set(g.vertices_of(player))
    if set(strategy) != owned:
        raise InvalidStrategy(f"strategy domain differs from the vertices of player {player}")
    for v, u in strategy.items():
        if (v, u) not in g._weights:
            raise InvalidStrategy(f"strategy moves from {v} to non-successor {u}")


def default_strategy(g: Game, player: int) -> dict[int, int]:
    """Least-index successor at every vertex of ``player``."""
    return {v: g.succ[v][0][0] for v in g.vertices_of(player)}


def profile_successor(g: Game, sigma: Strategy, tau: Strategy) -> list[int]:
    return [sigma[v] if g.owner[v] == P1 else tau[v] for v in range(g.n)]


@dataclass(frozen=True)
class Lasso:
    prefix: tuple[int, ...]
    cycle: tuple[int, ...]
    prefix_rewards: tuple[int, ...]
    cycle_rewards: tuple[int, ...]

    def __post_init__(self):
        if not self.cycle:
            raise ValueError("a lasso needs a non-empty cycle")
        if len(set(self.prefix + self.cycle)) != len(self.prefix) + len(self.cycle):
            raise ValueError("lasso vertices must be pairwise distinct")
        if len(self.prefix_rewards) != len(self.prefix) or len(self.cycle_rewards) != len(self.cycle):
            raise ValueError("rewards must align with the traversed edges")

    @property
    def p(self) -> int:
        return len(self.prefix)

    @property
    def c(self) -> int:
        return len(self.cycle)


def extract_lasso(g: Game, sigma: Strategy, tau: Strategy, v: int) -> Lasso:
    """Follow the profile from ``v`` until a vertex repeats."""
    if not 0 <= v < g.n:
        raise DanglingVertexId(f"start vertex {v} is not in [0, {g.n})")
    nxt = profile_successor(g, sigma, tau)
    path: list[int] = []
    pos: dict[int, int] = {}
    u = v
    while u not in pos:
        pos[u] = len(path)
        path.append(u)
        u = nxt[u]
    split = pos[u]
    rewards = [g.weight(a, nxt[a]) for a in path]
    return Lasso(
        tuple(path[:split]), tuple(path[split:]), tuple(rewards[:split]), tuple(rewards[split:])
    )


def check_lambda(lam) -> Fraction:
    lam = Fraction(lam)
    if not 0 <= lam < 1:
        raise LambdaOutOfRange(lam)
    return lam


def disc_payoff(lasso: Lasso, lam) -> Fraction:
    """sum_{i<p} lam^i r_i + lam^p (sum_{i<c} lam^i r_{p+i}) / (1 - lam^c), exactly."""
    lam = check_lambda(lam)
    head = Fraction(0)
    power = Fraction(1)
    for r in lasso.prefix_rewards:
        head += power * r
        power *= lam
    loop = Fraction(0)
    q = Fraction(1)
    for r in lasso.cycle_rewards:
        loop += q * r
        q *= lam
    return head + power * loop / (1 - q)


def payoff_polynomials(lasso: Lasso) -> tuple[Polynomial, Polynomial]:
    """(P, Q) with P(lam) / Q(lam) = disc_payoff(lasso, lam) and Q = 1 - lam^c."""
    p, c = lasso.p, lasso.c
    Q = Polynomial([1] + [0] * (c - 1) + [-1])
    head = Polynomial(lasso.prefix_rewards)
    loop = Polynomial(lasso.cycle_rewards).shift(p)
    return head * Q + loop, Q


def profile_difference(l1: Lasso, l2: Lasso, reduce: bool = True) -> Polynomial:
    """P1 Q2 - P2 Q1, whose sign on [0, 1) is the sign of the payoff difference.

    When both cycles have the same length, Q1 = Q2 = Q is positive on [0, 1)
    and is cancelled, leaving P1 - P2; pass ``reduce=False`` for the raw form.
    """
    P1_, Q1 = payoff_polynomials(l1)
    P2_, Q2 = payoff_polynomials(l2)
    if reduce and Q1 == Q2:
        return P1_ - P2_
    return P1_ * Q2 - P2_ * Q1


# -- text format -------------------------------------------------------------


def parse_game(text: str) -> Game:
    """Parse the ``game`` / ``vertex`` / ``edge`` line format."""
    n = None
    owners: dict[int, int] = {}
    edges: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        try:
            nums = [int(x) for x in parts[1:]]
        except ValueError:
            raise GameParseError(lineno, f"non-integer field in {line!r}") from None
        if kind == "game":
            if n is not None:
                raise GameParseError(lineno, "duplicate 'game' header")
            if len(nums) != 1 or nums[0] < 1:
                raise GameParseError(lineno, "expected 'game <n>' with n >= 1")
            n = nums[0]
            continue
        if n is None:
            raise GameParseError(lineno, "the first statement must be 'game <n>'")
        if kind == "vertex":
            if len(nums) != 2:
                raise GameParseError(lineno, "expected 'vertex <id> <1|2>'")
            v, who = nums
            if not 0 <= v < n:
                raise GameParseError(lineno, f"vertex id {v} outside [0, {n})")
            if who not in (P1, P2):
                raise GameParseError(lineno, f"owner must be 1 or 2, got {who}")
            if v in owners:
                raise GameParseError(lineno, f"vertex {v} declared twice")
            owners[v] = who
        elif kind == "edge":
            if len(nums) != 3:
                raise GameParseError(lineno, "expected 'edge <u> <v> <w>'")
            u, v, w = nums
            if not (0 <= u < n and 0 <= v < n):
                raise GameParseError(lineno, f"edge ({u}, {v}) leaves [0, {n})")
            if (u, v) in seen:
                raise GameParseError(lineno, f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            edges.append((u, v, w))
        else:
            raise GameParseError(lineno, f"unknown statement {kind!r}")
    if n is None:
        raise GameParseError(0, "missing 'game <n>' header")
    missing = [v for v in range(n) if v not in owners]
    if missing:
        raise GameParseError(0, f"vertices without an owner: {missing}")
    outdeg = {u for u, _, _ in edges}
    empty = [v for v in range(n) if v not in outdeg]
    if empty:
        raise GameParseError(0, f"vertex {empty[0]} has no outgoing edge")
    return Game.from_edges(n, [owners[v] for v in range(n)], edges)


def serialize_game(g: Game) -> str:
    lines = [f"game {g.n}"]
    lines += [f"vertex {v} {g.owner[v]}" for v in range(g.n)]
    lines += [f"edge {u} {v} {w}" for u, v, w in g.edges()]
    return "\n".join(lines) + "\n"


def parse_rational(text: str) -> Fraction:
    """Read a ``p/q`` (or integer) token exactly; decimals are rejected."""
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"rationals must be written p/q, got {text!r}")
    num, _, den = text.partition("/")
    value = Fraction(int(num), int(den)) if den else Fraction(int(num))
    return value


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
