import random

import pytest

from fixtures import DWBC2_FACTORS, DWBC3_FACTORS, SCHUR_N1_M2
from vertexkit.algebra import Var, a, parse_polynomial, product, swap_row_vars, x
from vertexkit.partition import partition_value
from vertexkit.sampling import require_nonzero, with_redraw
from vertexkit.lattice import GridDims
from vertexkit.schur import (
    CONVENTION_SPACE,
    PINNED_CONVENTION,
    asymptotic_symmetry_check,
    calibrate_schur_specialization,
    calibration_instances,
    check_shape,
    classical_schur,
    dwbc_factor_report,
    factorial_schur_alternant,
    proposition_model,
    schur_specialized_scheme,
    z_alpha_delta_candidate,
    z_alpha_delta_direct,
)


@pytest.mark.parametrize("n, expected", [(2, DWBC2_FACTORS), (3, DWBC3_FACTORS)])
def test_dwbc_factors_completely(n, expected):
    rep = dwbc_factor_report(n)
    assert rep.complete and rep.cofactor == 1
    assert sorted(f for f, _ in rep.factors) == sorted(expected)
    assert all(k == 1 for _, k in rep.factors)
    assert rep.value == product(parse_polynomial(f) for f in expected)
    assert rep.to_json() == dwbc_factor_report(n).to_json()


def test_printed_dwbc_product_differs():
    assert not dwbc_factor_report(2).candidate_matches


@pytest.mark.parametrize("n, m, alpha", [(2, 3, (3, 1)), (2, 4, (4, 2)), (3, 4, (4, 2, 1))])
def test_z_alpha_delta(n, m, alpha):
    cand, direct = z_alpha_delta_candidate(alpha, n, m), z_alpha_delta_direct(alpha, n, m)
    rng = random.Random(f"{alpha}")

    def both(pt):
        c, d = cand(pt), direct(pt)
        require_nonzero(c, d)
        return c, d

    for _ in range(3):
        _, (c, d) = with_redraw(rng, n, m, both)
        assert c == d


def test_proposition_model_validation():
    with pytest.raises(ValueError):
        proposition_model((3,), 2, 3)
    with pytest.raises(ValueError):
        proposition_model((2, 1), 2, 1)


def test_symmetry_beyond_the_top_entries():
    rng = random.Random(4)
    dims = GridDims(2, 5)

    def check(pt):
        return asymptotic_symmetry_check((2, 1), (3, 1), dims, 4, pt)

    _, r = with_redraw(rng, 2, 5, check)
    assert r["asserted"] and r["equal"]
    with pytest.raises(ValueError):
        asymptotic_symmetry_check((2, 1), (3, 1), dims, 5, {})


def test_alternant_basics():
    assert factorial_schur_alternant((), 2) == 1
    assert factorial_schur_alternant((1,), 1, "plus") == x(1) + a(1)
    assert factorial_schur_alternant((1,), 1, "minus") == x(1) - a(1)
    f = factorial_schur_alternant((2, 1), 3, "minus")
    for i in (1, 2):
        assert swap_row_vars(f, i) == f
    at0 = f.subs({Var(2, t): 0 for t in range(1, 6)})
    assert at0 == classical_schur((2, 1), 3)
    with pytest.raises(ValueError):
        factorial_schur_alternant((1, 1, 1), 2)
    with pytest.raises(ValueError):
        check_shape((1, 2))
    with pytest.raises(ValueError):
        factorial_schur_alternant((1,), 1, "times")


def test_specialized_values():
    for alpha, text in SCHUR_N1_M2.items():
        dims, bnd = proposition_model(alpha, 1, 2)
        assert str(partition_value(dims, bnd, schur_specialized_scheme(1, 2))) == text


def test_calibration_is_unique_and_pinned():
    cal = calibrate_schur_specialization()
    assert len(CONVENTION_SPACE) == 16
    assert cal["unique"]
    assert cal["result"] == PINNED_CONVENTION.to_json()
    assert len(cal["instances"]) == len(calibration_instances())
