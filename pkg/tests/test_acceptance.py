"""Acceptance criteria, one check each.

Every check prints a single ``PASS``/``FAIL`` line; the lines are repeated
in the pytest terminal summary.  Run directly with
``python3 tests/test_acceptance.py`` to get just the lines.
"""

import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fixtures import DWBC3_KIND_GRIDS, DWBC_COUNTS  # noqa: E402
from vertexkit.lattice import count_states, dwbc_model, enumerate_states, state_vertex_kinds  # noqa: E402
from vertexkit.schur import dwbc_factor_report  # noqa: E402
from vertexkit.verify import run_suite  # noqa: E402

SEED = 7
RESULTS: list[str] = []


def _suite(name, **opts):
    rep = run_suite(name, seed=SEED, **opts)
    return rep.passed, f"{len(rep.cases)} cases, {len(rep.failures)} failures"


def c1_state_counts():
    counts = {n: count_states(*dwbc_model(n)) for n in DWBC_COUNTS}
    grids = {tuple(" ".join(str(k) for k in row) for row in state_vertex_kinds(s))
             for s in enumerate_states(*dwbc_model(3))}
    ok = counts == DWBC_COUNTS and grids == DWBC3_KIND_GRIDS
    return ok, f"counts {list(counts.values())}, n=3 grids match listing: {grids == DWBC3_KIND_GRIDS}"


def c2_ybe():
    return _suite("ybe", points=20, n=5)


def c3_relations():
    return _suite("relations", points=20, n=5)


def c4_train():
    return _suite("train", points=10, max_n=4)


def c5_exchange():
    rep = run_suite("exchange", seed=SEED, points=10, max_n=4)
    cases = {c["case"] for c in rep.cases}
    return rep.passed and len(cases) == 4, f"{len(rep.cases)} cases over {sorted(cases)}, {len(rep.failures)} failures"


def c6_inverse():
    return _suite("inverse", points=20, n=3)


def c7_theorem():
    rep = run_suite("theorem", seed=SEED, points=5, n=4, m=4, max_d=2, example=True)
    example = [c for c in rep.cases if c["n"] == 5]
    ok = rep.passed and len(example) >= 5
    return ok, f"{len(rep.cases)} cases ({len(example)} on the 5x5 instance), {len(rep.failures)} failures"


def c8_dwbc_factorization():
    reports = {n: dwbc_factor_report(n) for n in (2, 3)}
    stable = all(r.to_json() == dwbc_factor_report(n).to_json() for n, r in reports.items())
    complete = all(r.complete for r in reports.values())
    sizes = {n: sum(k for _, k in r.factors) for n, r in reports.items()}
    return stable and complete, f"binomial factors per n: {sizes}, complete={complete}, stable={stable}"


def c9_proposition():
    return _suite("proposition", points=10)


def c10_symmetry():
    rep = run_suite("symmetry", seed=SEED, configs=24, points=1)
    asserted = sum(c["asserted"] for c in rep.cases)
    return rep.passed and asserted >= 20, f"{asserted} asserted configurations, {len(rep.failures)} failures"


def c11_oracle():
    return _suite("oracle", models=50)


def c12_schur():
    return _suite("schur-calibration")


CRITERIA = [
    (1, "state counts and 3x3 vertex grids", c1_state_counts),
    (2, "cross weights: rank 5 and zero residuals", c2_ybe),
    (3, "weight relations", c3_relations),
    (4, "train argument", c4_train),
    (5, "exchange relations", c5_exchange),
    (6, "operator inverse", c6_inverse),
    (7, "reduction theorem", c7_theorem),
    (8, "DWBC factorization", c8_dwbc_factorization),
    (9, "Z_{alpha,delta} evaluation", c9_proposition),
    (10, "asymptotic symmetry", c10_symmetry),
    (11, "DP vs brute force", c11_oracle),
    (12, "Schur calibration", c12_schur),
]


def _run(number, title, fn):
    start = time.perf_counter()
    ok, detail = fn()
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d} {title}: {detail} ({time.perf_counter() - start:.1f}s)"
    print(line)
    RESULTS.append(line)
    return ok


@pytest.mark.parametrize("number, title, fn", CRITERIA, ids=[f"c{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn):
    assert _run(number, title, fn)


if __name__ == "__main__":
    results = [_run(*c) for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
