from fractions import Fraction
from pathlib import Path

import pytest

from discgames.game import Game, parse_game

DATA = Path(__file__).parent / "data"


def load(name: str) -> Game:
    return parse_game((DATA / name).read_text())


# two-cycle game: ids: a=0 b=1 c=2 d=3 d2=4 e=5 f=6 g=7 h=8
LEFT = {0: 1, 1: 2, 2: 3, 3: 4, 4: 1, 5: 6, 6: 7, 7: 8, 8: 5}
RIGHT = {**LEFT, 0: 5}


@pytest.fixture
def lasso_game():
    return load("lasso_game.game")


@pytest.fixture
def two_cycles():
    return load("two_cycles.game")


@pytest.fixture
def sigma_left():
    return dict(LEFT)


@pytest.fixture
def sigma_right():
    return dict(RIGHT)


LAMBDAS = [Fraction(0), Fraction(1, 2), Fraction(9, 10), Fraction(99, 100)]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s.split()[1].rstrip("."))):
            terminalreporter.write_line(line)
