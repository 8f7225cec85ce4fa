"""Seeded random game instances."""

from __future__ import annotations

import random

from .game import P1, P2, Game


def random_game(n: int, density: float, W: int, seed: int) -> Game:
    """Each ordered pair (u, v), self-loops included, is an edge with probability ``density``.

    A vertex left without successors gets one chosen uniformly, so n = 1
    always yields a self-loop.  Weights are uniform in [-W, W] and owners are
    fair coin flips.  The output depends only on the arguments.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if W < 0:
        raise ValueError("W must be non-negative")
    if not 0 <= density <= 1:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    owner = [P1 if rng.random() < 0.5 else P2 for _ in range(n)]
    edges = []
    for u in range(n):
        succ = [v for v in range(n) if rng.random() < density]
        if not succ:
            succ = [rng.randrange(n)]
        edges += [(u, v, rng.randint(-W, W)) for v in succ]
    return Game.from_edges(n, owner, edges)
