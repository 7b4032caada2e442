"""Grid geometry, boundary conditions and admissible states.

Rows are numbered 1..n from the top, columns 1..m from the left.  Paths
enter through the left and top boundaries and leave through the right and
bottom ones, moving only right or down.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence


class VertexKind(Enum):
    A1 = "a1"
    A2 = "a2"
    B1 = "b1"
    B2 = "b2"
    C1 = "c1"
    C2 = "c2"

    def __str__(self) -> str:
        return self.value


# (left, top, right, bottom) -> kind
_KINDS = {
    (0, 0, 0, 0): VertexKind.A1,
    (1, 1, 1, 1): VertexKind.A2,
    (0, 1, 0, 1): VertexKind.B1,
    (1, 0, 1, 0): VertexKind.B2,
    (0, 1, 1, 0): VertexKind.C1,
    (1, 0, 0, 1): VertexKind.C2,
}

# (left, top) -> admissible (right, bottom) choices, in enumeration order
_OUTS: dict[tuple[int, int], list[tuple[int, int]]] = {}
for (_l, _t, _r, _b), _k in sorted(_KINDS.items()):
    _OUTS.setdefault((_l, _t), []).append((_r, _b))


def classify_vertex(left, top, right, bottom) -> VertexKind | None:
    """Kind of a vertex from its edge occupancies, or None if inadmissible."""
    return _KINDS.get((int(left), int(top), int(right), int(bottom)))


@dataclass(frozen=True)
class GridDims:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"grid needs n, m >= 1, got {self.n}x{self.m}")


@dataclass(frozen=True)
class BoundarySpec:
    """Which boundary edges carry a path: rows for left/right, columns for top/bottom."""

    left: frozenset = frozenset()
    top: frozenset = frozenset()
    right: frozenset = frozenset()
    bottom: frozenset = frozenset()

    def __post_init__(self):
        for name in ("left", "top", "right", "bottom"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))

    def is_conserving(self) -> bool:
        return len(self.left) + len(self.top) == len(self.right) + len(self.bottom)

    def check_ranges(self, dims: GridDims) -> None:
        for name, limit in (("left", dims.n), ("right", dims.n), ("top", dims.m), ("bottom", dims.m)):
            bad = [k for k in getattr(self, name) if not 1 <= k <= limit]
            if bad:
                raise ValueError(f"{name} boundary index {bad[0]} outside 1..{limit}")

    def check(self, dims: GridDims) -> None:
        self.check_ranges(dims)
        if not self.is_conserving():
            raise ValueError(
                f"boundary does not conserve paths: {len(self.left)}+{len(self.top)} in, "
                f"{len(self.right)}+{len(self.bottom)} out"
            )

    def replace(self, **changes) -> "BoundarySpec":
        fields = dict(left=self.left, top=self.top, right=self.right, bottom=self.bottom)
        fields.update(changes)
        return BoundarySpec(**fields)


def check_signature(parts: Sequence[int]) -> tuple[int, ...]:
    """Validate a strictly decreasing sequence of positive integers."""
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise ValueError(f"signature parts must be positive: {parts}")
    if any(p <= q for p, q in zip(parts, parts[1:])):
        raise ValueError(f"signature must be strictly decreasing: {parts}")
    return parts


def sig_to_right_boundary(alpha: Sequence[int], dims: GridDims) -> frozenset:
    alpha = check_signature(alpha)
    if alpha and alpha[0] > dims.n:
        raise ValueError(f"right signature part {alpha[0]} exceeds n={dims.n}")
    return frozenset(alpha)


def sig_to_top_boundary(beta: Sequence[int], dims: GridDims) -> frozenset:
    beta = check_signature(beta)
    if beta and beta[0] > dims.m:
        raise ValueError(f"top signature part {beta[0]} exceeds m={dims.m}")
    return frozenset(beta)


def boundary_to_signature(edges: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(edges, reverse=True))


def dwbc_model(n: int) -> tuple[GridDims, BoundarySpec]:
    dims = GridDims(n, n)
    full = frozenset(range(1, n + 1))
    return dims, BoundarySpec(top=full, right=full)


def base_model(n: int, m: int, d: int) -> tuple[GridDims, BoundarySpec]:
    """Exits at the top d rows, entries at the rightmost d columns."""
    dims = GridDims(n, m)
    if not 0 <= d <= min(n, m):
        raise ValueError(f"base model needs 0 <= d <= min(n, m), got d={d}")
    return dims, BoundarySpec(top=frozenset(range(m - d + 1, m + 1)), right=frozenset(range(1, d + 1)))


def signature_model(n: int, m: int, alpha: Sequence[int], beta: Sequence[int]) -> tuple[GridDims, BoundarySpec]:
    """Right boundary alpha, top boundary beta, left and bottom empty."""
    dims = GridDims(n, m)
    if len(alpha) != len(beta):
        raise ValueError(f"signatures must have equal length: {alpha} vs {beta}")
    return dims, BoundarySpec(top=sig_to_top_boundary(beta, dims), right=sig_to_right_boundary(alpha, dims))


@dataclass(frozen=True)
class LatticeState:
    """Edge occupancies of an n x m grid.

    ``h[r][c]`` is the horizontal edge of row r+1 to the left of column c+1
    (``c == m`` is the right boundary edge); ``v[c][r]`` is the vertical edge
    of column c+1 above row r+1 (``r == n`` is the bottom boundary edge).
    """

    h: tuple
    v: tuple

    @property
    def dims(self) -> GridDims:
        return GridDims(len(self.h), len(self.v))

    def vertex(self, r: int, c: int) -> tuple[bool, bool, bool, bool]:
        """(left, top, right, bottom) at 1-based (r, c)."""
        return (self.h[r - 1][c - 1], self.v[c - 1][r - 1], self.h[r - 1][c], self.v[c - 1][r])

    def boundary(self) -> BoundarySpec:
        n, m = len(self.h), len(self.v)
        return BoundarySpec(
            left=frozenset(r + 1 for r in range(n) if self.h[r][0]),
            right=frozenset(r + 1 for r in range(n) if self.h[r][m]),
            top=frozenset(c + 1 for c in range(m) if self.v[c][0]),
            bottom=frozenset(c + 1 for c in range(m) if self.v[c][n]),
        )

    def to_json(self) -> dict:
        return {"h": [[int(e) for e in row] for row in self.h], "v": [[int(e) for e in col] for col in self.v]}

    @classmethod
    def from_json(cls, data: dict) -> "LatticeState":
        return cls(
            h=tuple(tuple(bool(e) for e in row) for row in data["h"]),
            v=tuple(tuple(bool(e) for e in col) for col in data["v"]),
        )


def state_vertex_kinds(state: LatticeState) -> list[list[VertexKind]]:
    dims = state.dims
    grid = []
    for r in range(1, dims.n + 1):
        row = []
        for c in range(1, dims.m + 1):
            kind = classify_vertex(*state.vertex(r, c))
            if kind is None:
                raise ValueError(f"inadmissible vertex at ({r}, {c})")
            row.append(kind)
        grid.append(row)
    return grid


def enumerate_states(dims: GridDims, boundary: BoundarySpec) -> Iterator[LatticeState]:
    """Every admissible state, depth first over rows, left to right in a row.

    Infeasible boundaries yield nothing.
    """
    boundary.check_ranges(dims)
    if not boundary.is_conserving():
        return
    n, m = dims.n, dims.m
    top = tuple(c + 1 in boundary.top for c in range(m))
    bottom = tuple(c + 1 in boundary.bottom for c in range(m))
    h_rows: list[tuple] = []
    v_rows: list[tuple] = [top]  # v_rows[r][c]: vertical edge above row r+1

    def fill_row(r: int, c: int, h_acc: list, v_acc: list, frontier: tuple) -> Iterator[None]:
        if c == m:
            if h_acc[-1] != (r + 1 in boundary.right):
                return
            h_rows.append(tuple(h_acc))
            v_rows.append(tuple(v_acc))
            yield from rows(r + 1)
            h_rows.pop()
            v_rows.pop()
            return
        left, t = h_acc[-1], frontier[c]
        for right, bot in _OUTS[(int(left), int(t))]:
            h_acc.append(bool(right))
            v_acc.append(bool(bot))
            yield from fill_row(r, c + 1, h_acc, v_acc, frontier)
            h_acc.pop()
            v_acc.pop()

    def rows(r: int) -> Iterator[None]:
        if r == n:
            if v_rows[-1] == bottom:
                yield None
            return
        yield from fill_row(r, 0, [r + 1 in boundary.left], [], v_rows[-1])

    for _ in rows(0):
        v = tuple(tuple(v_rows[r][c] for r in range(n + 1)) for c in range(m))
        yield LatticeState(h=tuple(h_rows), v=v)


def count_states(dims: GridDims, boundary: BoundarySpec) -> int:
    return sum(1 for _ in enumerate_states(dims, boundary))


# -- text rendering --------------------------------------------------------

_H_EDGE = {False: "─", True: "━"}
_V_EDGE = {False: "│", True: "┃"}
_GLYPH = {
    VertexKind.A1: "┼",
    VertexKind.A2: "╋",
    VertexKind.B1: "╂",
    VertexKind.B2: "┿",
    VertexKind.C1: "╄",
    VertexKind.C2: "╅",
}


def render_state(state: LatticeState) -> str:
    """Fixed-width drawing; heavy strokes carry paths.

    The drawing is (2n+1) lines of width 2m+1: vertex glyphs sit at odd
    line/odd column positions, edges between them.
    """
    n, m = len(state.h), len(state.v)
    lines = []
    for r in range(n + 1):
        lines.append(" " + " ".join(_V_EDGE[state.v[c][r]] for c in range(m)) + " ")
        if r == n:
            break
        cells = [_H_EDGE[state.h[r][0]]]
        for c in range(m):
            kind = classify_vertex(*state.vertex(r + 1, c + 1))
            cells.append(_GLYPH[kind] if kind else "?")
            cells.append(_H_EDGE[state.h[r][c + 1]])
        lines.append("".join(cells))
    return "\n".join(lines)


def parse_state(text: str) -> LatticeState:
    lines = text.split("\n")
    if len(lines) % 2 == 0:
        raise ValueError("rendered state must have an odd number of lines")
    n = len(lines) // 2
    m = len(lines[0]) // 2
    inv_h = {v: k for k, v in _H_EDGE.items()}
    inv_v = {v: k for k, v in _V_EDGE.items()}
    h = tuple(tuple(inv_h[lines[2 * r + 1][2 * c]] for c in range(m + 1)) for r in range(n))
    v = tuple(tuple(inv_v[lines[2 * r][2 * c + 1]] for r in range(n + 1)) for c in range(m))
    state = LatticeState(h=h, v=v)
    state_vertex_kinds(state)
    return state


# -- model JSON -----------------------------------------------------------

def model_to_json(dims: GridDims, boundary: BoundarySpec) -> dict:
    return {
        "rows": dims.n,
        "cols": dims.m,
        "left": sorted(boundary.left),
        "top": sorted(boundary.top),
        "right": sorted(boundary.right),
        "bottom": sorted(boundary.bottom),
    }


def model_from_json(data: dict | str) -> tuple[GridDims, BoundarySpec]:
    if isinstance(data, str):
        data = json.loads(data)
    dims = GridDims(int(data["rows"]), int(data["cols"]))
    boundary = BoundarySpec(
        left=data.get("left", []), top=data.get("top", []), right=data.get("right", []), bottom=data.get("bottom", [])
    )
    boundary.check_ranges(dims)
    return dims, boundary
