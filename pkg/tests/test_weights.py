import random
from fractions import Fraction

import pytest

from fixtures import H_CROSS_21, V_CROSS_21
from vertexkit.algebra import A, B, X, Y, parse_polynomial
from vertexkit.lattice import VertexKind
from vertexkit.sampling import random_point, with_redraw
from vertexkit.weights import (
    KINDS,
    CrossWeightSet,
    DegenerateCross,
    Orientation,
    check_weight_relations,
    ff_scheme,
    get_scheme,
    ones_scheme,
    solve_cross_weights,
    ybe_residuals,
)

H, V = Orientation.H, Orientation.V


def _on_same_ray(ray, closed):
    fixed = {k: parse_polynomial(closed[str(k)]) for k in KINDS}
    ref = KINDS[0]
    return all(ray[k] * fixed[ref] == ray[ref] * fixed[k] for k in KINDS)


@pytest.mark.parametrize("orientation, closed", [(H, H_CROSS_21), (V, V_CROSS_21)])
def test_symbolic_cross_matches_closed_form(orientation, closed):
    cross = solve_cross_weights(ff_scheme(), (2, 1), orientation)
    assert cross.rank == 5
    assert _on_same_ray(cross.numerators(), closed)
    assert str(cross[VertexKind.B2 if orientation is H else VertexKind.B1]) == "1"


@pytest.mark.parametrize("orientation", [H, V])
def test_symbolic_residuals_vanish_on_real_lines(orientation):
    scheme = ff_scheme()
    cross = solve_cross_weights(scheme, (1, 2), orientation)
    ray = CrossWeightSet(cross.pair, cross.orientation, cross.numerators())
    for k in (1, 3):
        assert all(r == 0 for r in ybe_residuals(scheme, ray, k))


@pytest.mark.parametrize("orientation", [H, V])
@pytest.mark.parametrize("pair", [(1, 2), (3, 2), (4, 5)])
def test_point_solution_has_rank_five_and_zero_residuals(orientation, pair):
    scheme = ff_scheme()
    rng = random.Random(f"w:{orientation}:{pair}")

    def solve(pt):
        return solve_cross_weights(scheme, pair, orientation, point=pt, k=3)

    for _ in range(3):
        pt, cross = with_redraw(rng, 5, 5, solve)
        assert cross.rank == 5
        assert all(r == 0 for r in ybe_residuals(scheme, cross, 3, point=pt))


def test_aux_line_gives_the_same_ray():
    scheme = ff_scheme()
    rng = random.Random(11)
    pt, own = with_redraw(rng, 3, 3, lambda p: solve_cross_weights(scheme, (1, 2), H, point=p, k=3))
    aux = solve_cross_weights(scheme, (1, 2), H, point=pt)
    assert own.weights == aux.weights


def test_point_solution_is_symbolic_solution_evaluated():
    scheme = ff_scheme()
    sym = solve_cross_weights(scheme, (2, 1), V)
    rng = random.Random(5)
    pt, num = with_redraw(rng, 2, 2, lambda p: solve_cross_weights(scheme, (2, 1), V, point=p))
    assert sym.evaluate(pt).weights == num.weights


def test_relations_hold_symbolically():
    scheme = ff_scheme()
    for o in (H, V):
        rep = check_weight_relations(solve_cross_weights(scheme, (1, 2), o), solve_cross_weights(scheme, (2, 1), o))
        assert rep.passed, [c for c in rep.checks if not c["ok"]]


def test_relations_catch_a_wrong_cross():
    scheme = ff_scheme()
    good = solve_cross_weights(scheme, (1, 2), H)
    bad = dict(good.weights)
    bad[VertexKind.C1] = bad[VertexKind.C2]
    wrong = CrossWeightSet((1, 2), H, bad)
    assert not check_weight_relations(wrong, solve_cross_weights(scheme, (2, 1), H)).passed


def test_degenerate_point_raises():
    scheme = ff_scheme()
    pt = random_point(random.Random(1), 2, 2)
    pt[X(2)] = pt[X(1)]
    with pytest.raises(DegenerateCross):
        solve_cross_weights(scheme, (1, 2), H, point=pt)
    pt = random_point(random.Random(2), 2, 2)
    pt[A(2)], pt[B(2)] = pt[A(1)], pt[B(1)]
    with pytest.raises(DegenerateCross):
        solve_cross_weights(scheme, (1, 2), V, point=pt)


def test_ones_scheme_cannot_be_normalized():
    # the solution ray exists but has b2 = 0
    with pytest.raises(DegenerateCross, match="b2 vanishes"):
        solve_cross_weights(ones_scheme(), (1, 2), H, point={})


def test_scheme_lookup():
    assert get_scheme("ff").name == "ff"
    with pytest.raises(ValueError):
        get_scheme("nope")
    with pytest.raises(ValueError):
        solve_cross_weights(ff_scheme(), (2, 2), H)


def test_ff_weights():
    w = ff_scheme().weight
    K = VertexKind
    assert str(w(K.A1, 1, 2)) == "1 - x1*b2"
    assert str(w(K.C1, 3, 1)) == "1 - a1*b1"
    pt = {X(1): Fraction(1, 2), Y(1): 3, A(1): 2, B(1): -1}
    assert w(K.B1, 1, 1).evaluate(pt) == -2
