import random

import pytest

from vertexkit.algebra import X
from vertexkit.sampling import (
    DENOMINATORS,
    NUMERATORS,
    SamplingExhausted,
    TrivialPoint,
    point_from_json,
    point_to_json,
    random_point,
    require_nonzero,
    with_redraw,
)
from vertexkit.verify import SUITES, run_suite


def test_random_point_ranges():
    pt = random_point(random.Random(1), 2, 3)
    assert len(pt) == 2 + 2 + 3 + 3
    for v in pt.values():
        assert v != 0 and v.denominator in DENOMINATORS and abs(v.numerator) <= max(NUMERATORS)
    assert point_from_json(point_to_json(pt)) == pt


def test_redraw_skips_degenerate_points():
    calls = []

    def fn(pt):
        calls.append(pt)
        if len(calls) < 3:
            raise ZeroDivisionError
        return pt[X(1)]

    pt, val = with_redraw(random.Random(0), 1, 1, fn)
    assert len(calls) == 3 and val == pt[X(1)]
    with pytest.raises(SamplingExhausted):
        with_redraw(random.Random(0), 1, 1, lambda pt: require_nonzero(0, 0))
    with pytest.raises(TrivialPoint):
        require_nonzero(0)


@pytest.mark.parametrize("suite, opts", [
    ("admissibility", {}),
    ("oracle", {"models": 10}),
    ("factor-dwbc", {"max_n": 2}),
    ("inverse", {"points": 2}),
    ("switch", {"points": 2}),
    ("proposition", {"points": 2}),
    ("symmetry", {"configs": 4, "points": 1}),
])
def test_fast_suites_pass(suite, opts):
    rep = run_suite(suite, seed=7, **opts)
    assert rep.passed, rep.failures
    out = rep.to_json()
    assert out["schema"] == 1 and out["checked"] == len(rep.cases)


def test_reports_are_deterministic_across_threads(monkeypatch):
    monkeypatch.setenv("VERTEXKIT_THREADS", "1")
    one = run_suite("train", seed=3, points=1, max_n=2).to_json()
    monkeypatch.setenv("VERTEXKIT_THREADS", "4")
    four = run_suite("train", seed=3, points=1, max_n=2).to_json()
    assert one == four and one["passed"]


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")
    assert "theorem" in SUITES
