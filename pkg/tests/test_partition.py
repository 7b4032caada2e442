import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixtures import DWBC1, DWBC2_FACTORS
from vertexkit.algebra import A, B, parse_polynomial, product
from vertexkit.lattice import BoundarySpec, GridDims, dwbc_model, enumerate_states, signature_model, state_vertex_kinds
from vertexkit.partition import (
    CrossAttachment,
    ModelTooLarge,
    augmented_partition,
    empty_site_product,
    normalized_partition,
    partition_function,
    partition_function_dp,
    partition_value,
)
from vertexkit.sampling import random_point, with_redraw
from vertexkit.weights import Orientation, ff_scheme, ones_scheme


def test_dwbc_small_values():
    assert str(partition_value(*dwbc_model(1), ff_scheme())) == DWBC1
    z2 = partition_value(*dwbc_model(2), ff_scheme())
    assert z2 == product(parse_polynomial(f) for f in DWBC2_FACTORS)


def test_ones_scheme_counts_states():
    for n, count in ((2, 2), (3, 7), (4, 42)):
        assert partition_value(*dwbc_model(n), ones_scheme()) == count


def test_brute_force_is_sum_over_states():
    dims, bnd = signature_model(3, 3, (3, 1), (3, 2))
    scheme = ff_scheme()
    total = 0
    for s in enumerate_states(dims, bnd):
        w = 1
        for r, row in enumerate(state_vertex_kinds(s), start=1):
            for c, kind in enumerate(row, start=1):
                w = w * scheme.weight(kind, r, c)
        total = total + w
    res = partition_function(dims, bnd, scheme)
    assert res.value == total and res.mode == "symbolic"


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 10**6))
def test_dp_agrees_with_brute_force_at_points(n, m, seed):
    rng = random.Random(seed)
    left = {i for i in range(1, n + 1) if rng.random() < 0.5}
    top = {j for j in range(1, m + 1) if rng.random() < 0.5}
    slots = [("r", i) for i in range(1, n + 1)] + [("b", j) for j in range(1, m + 1)]
    k = len(left) + len(top)
    if k > len(slots):
        return
    out = rng.sample(slots, k)
    bnd = BoundarySpec(left=left, top=top, right={i for s, i in out if s == "r"}, bottom={j for s, j in out if s == "b"})
    pt = random_point(rng, n, m)
    dims = GridDims(n, m)
    brute, dp = partition_function(dims, bnd, ff_scheme(), pt), partition_function_dp(dims, bnd, ff_scheme(), pt)
    assert brute.value == dp.value and brute.state_count == dp.state_count


def test_dp_agrees_symbolically():
    for n in (1, 2, 3):
        dims, bnd = dwbc_model(n)
        assert partition_function(dims, bnd, ff_scheme()).value == partition_function_dp(dims, bnd, ff_scheme()).value


def test_normalization_divides_by_every_site():
    dims, bnd = dwbc_model(2)
    scheme = ff_scheme()
    pt = random_point(random.Random(3), 2, 2)
    z = partition_value(dims, bnd, scheme, pt)
    assert normalized_partition(dims, bnd, scheme, pt) == z / empty_site_product(dims, scheme, pt)
    sym = normalized_partition(dims, bnd, scheme)
    assert sym.evaluate(pt) == z / empty_site_product(dims, scheme, pt)


def test_symbolic_cap():
    with pytest.raises(ModelTooLarge):
        partition_function(GridDims(7, 7), BoundarySpec(), ff_scheme())


def test_label_remapping_matches_variable_renaming():
    dims, bnd = dwbc_model(2)
    scheme = ff_scheme()
    base = partition_value(dims, bnd, scheme)
    shifted = partition_value(dims, bnd, scheme, col_labels=(3, 4))
    assert shifted == base.rename({A(1): A(3), A(2): A(4), B(1): B(3), B(2): B(4)})


@pytest.mark.parametrize("orientation", [Orientation.H, Orientation.V])
def test_train_identity_on_dwbc3(orientation):
    dims, bnd = dwbc_model(3)
    scheme = ff_scheme()
    rng = random.Random(str(orientation))
    for index in (1, 2):
        att = CrossAttachment(orientation, index)

        def both(pt):
            return (augmented_partition(dims, bnd, scheme, att, "outer", pt),
                    augmented_partition(dims, bnd, scheme, att, "inner", pt))

        for _ in range(3):
            _, (outer, inner) = with_redraw(rng, 3, 3, both)
            assert outer == inner


def test_attachment_validation():
    with pytest.raises(ValueError):
        CrossAttachment(Orientation.H, 3).check(GridDims(3, 3))
    with pytest.raises(ValueError):
        augmented_partition(*dwbc_model(2), ff_scheme(), CrossAttachment(Orientation.H, 1), "middle", {})
