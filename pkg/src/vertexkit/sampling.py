"""Seeded random rational points, redrawn when a computation hits a degenerate value."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, TypeVar

from .algebra import FAMILIES, Var
from .weights import DegenerateCross

NUMERATORS = tuple(v for v in range(-9, 10) if v)
DENOMINATORS = (1, 2, 3)
MAX_REDRAWS = 50

T = TypeVar("T")


class SamplingExhausted(RuntimeError):
    pass


class TrivialPoint(ArithmeticError):
    """The quantities under comparison all vanish at the point, so it proves nothing."""


def require_nonzero(*values) -> None:
    if all(v == 0 for v in values):
        raise TrivialPoint("all compared values vanish")


def random_point(rng: random.Random, rows: int, cols: int) -> dict[Var, Fraction]:
    """x_i, y_i for i <= rows and a_j, b_j for j <= cols."""
    point = {}
    for fam, count in zip(FAMILIES, (rows, rows, cols, cols)):
        for idx in range(1, count + 1):
            point[Var(FAMILIES.index(fam), idx)] = Fraction(rng.choice(NUMERATORS), rng.choice(DENOMINATORS))
    return point


def with_redraw(rng: random.Random, rows: int, cols: int, fn: Callable[[dict], T]) -> tuple[dict, T]:
    """Call ``fn(point)`` at fresh points until it avoids vanishing denominators and trivial values."""
    last = None
    for _ in range(MAX_REDRAWS):
        point = random_point(rng, rows, cols)
        try:
            return point, fn(point)
        except (DegenerateCross, ZeroDivisionError, TrivialPoint) as e:
            last = e
    raise SamplingExhausted(f"no generic point after {MAX_REDRAWS} draws; last error: {last}")


def point_to_json(point: dict) -> dict:
    return {str(v): str(val) for v, val in sorted(point.items())}


def point_from_json(data: dict) -> dict:
    return {Var.parse(k): Fraction(v) for k, v in data.items()}
