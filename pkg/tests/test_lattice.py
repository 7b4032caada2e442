import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixtures import DWBC3_KIND_GRIDS, DWBC_COUNTS
from vertexkit.lattice import (
    BoundarySpec,
    GridDims,
    VertexKind,
    base_model,
    check_signature,
    classify_vertex,
    count_states,
    dwbc_model,
    enumerate_states,
    model_from_json,
    model_to_json,
    parse_state,
    render_state,
    signature_model,
    state_vertex_kinds,
)


def test_six_admissible_vertices():
    kinds = [classify_vertex(*e) for e in itertools.product((0, 1), repeat=4)]
    assert sorted(str(k) for k in kinds if k) == sorted(str(k) for k in VertexKind)
    assert sum(k is None for k in kinds) == 10
    assert classify_vertex(0, 0, 0, 0) is VertexKind.A1
    assert classify_vertex(1, 1, 1, 1) is VertexKind.A2


@pytest.mark.parametrize("n, count", sorted(DWBC_COUNTS.items()))
def test_dwbc_counts(n, count):
    assert count_states(*dwbc_model(n)) == count


def test_dwbc3_vertex_kinds_match_listing():
    grids = {tuple(" ".join(str(k) for k in row) for row in state_vertex_kinds(s))
             for s in enumerate_states(*dwbc_model(3))}
    assert grids == DWBC3_KIND_GRIDS


def test_states_reproduce_their_boundary():
    dims, bnd = signature_model(3, 4, (3, 1), (4, 2))
    states = list(enumerate_states(dims, bnd))
    assert states
    assert all(s.boundary() == bnd for s in states)
    assert len(set(states)) == len(states)


def test_non_conserving_boundary_has_no_states():
    assert count_states(GridDims(2, 2), BoundarySpec(top={1})) == 0


def test_render_parse_round_trip():
    for s in enumerate_states(*dwbc_model(3)):
        text = render_state(s)
        lines = text.split("\n")
        assert len(lines) == 7 and all(len(line) == 7 for line in lines)
        assert parse_state(text) == s


def test_model_json_round_trip():
    dims, bnd = base_model(4, 5, 2)
    data = model_to_json(dims, bnd)
    assert data == {"rows": 4, "cols": 5, "left": [], "top": [4, 5], "right": [1, 2], "bottom": []}
    assert model_from_json(json.dumps(data)) == (dims, bnd)
    with pytest.raises(ValueError):
        model_from_json({"rows": 2, "cols": 2, "top": [3]})


def test_signature_validation():
    assert check_signature([5, 3, 2]) == (5, 3, 2)
    for bad in ([3, 3], [1, 2], [2, 0]):
        with pytest.raises(ValueError):
            check_signature(bad)
    with pytest.raises(ValueError):
        signature_model(3, 3, (2, 1), (3,))
    with pytest.raises(ValueError):
        base_model(2, 3, 3)
    with pytest.raises(ValueError):
        GridDims(0, 2)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_every_state_is_admissible(n, m, data):
    left = data.draw(st.sets(st.integers(1, n)))
    top = data.draw(st.sets(st.integers(1, m)))
    k = len(left) + len(top)
    slots = [("r", i) for i in range(1, n + 1)] + [("b", j) for j in range(1, m + 1)]
    if k > len(slots):
        return
    out = data.draw(st.permutations(slots))[:k]
    bnd = BoundarySpec(left=left, top=top, right={i for s, i in out if s == "r"},
                       bottom={j for s, j in out if s == "b"})
    for s in enumerate_states(GridDims(n, m), bnd):
        assert all(k is not None for row in state_vertex_kinds(s) for k in row)
