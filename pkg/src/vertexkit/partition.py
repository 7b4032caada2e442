"""Partition functions: brute-force enumeration, profile DP, and cross-attached models."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import Polynomial, RationalFunction, Var
from .lattice import (
    BoundarySpec,
    GridDims,
    VertexKind,
    _OUTS,
    classify_vertex,
    enumerate_states,
)
from .weights import (
    CROSS_PORTS,
    Orientation,
    WeightScheme,
    _bulk_labels,
    _strand_labels,
    solve_cross_weights,
)

SYMBOLIC_SITE_CAP = 36
POINT_WIDTH_CAP = 20


class ModelTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class PartitionResult:
    value: object  # Polynomial (symbolic) or Fraction (point)
    state_count: int
    mode: str

    def to_json(self) -> dict:
        return {"mode": self.mode, "state_count": self.state_count, "value": str(self.value)}


def _labels(labels: Sequence[int] | None, count: int) -> tuple[int, ...]:
    if labels is None:
        return tuple(range(1, count + 1))
    labels = tuple(labels)
    if len(labels) != count:
        raise ValueError(f"expected {count} labels, got {len(labels)}")
    return labels


def _check_caps(dims: GridDims, point) -> None:
    if point is None and dims.n * dims.m > SYMBOLIC_SITE_CAP:
        raise ModelTooLarge(
            f"symbolic mode is limited to n*m <= {SYMBOLIC_SITE_CAP} sites, got {dims.n}x{dims.m}; use point mode"
        )
    if point is not None and dims.m > POINT_WIDTH_CAP:
        raise ModelTooLarge(f"point mode is limited to m <= {POINT_WIDTH_CAP} columns, got {dims.m}")


def weight_table(
    dims: GridDims,
    scheme: WeightScheme,
    point: Mapping[Var, object] | None = None,
    row_labels: Sequence[int] | None = None,
    col_labels: Sequence[int] | None = None,
) -> dict:
    """{(kind, r, c): weight} for 1-based grid positions, evaluated if a point is given."""
    rl = _labels(row_labels, dims.n)
    cl = _labels(col_labels, dims.m)
    table = {}
    for r in range(1, dims.n + 1):
        for c in range(1, dims.m + 1):
            for kind in VertexKind:
                w = scheme.weight(kind, rl[r - 1], cl[c - 1])
                table[kind, r, c] = w.evaluate(point) if point is not None else w
    return table


def partition_function(
    dims: GridDims,
    boundary: BoundarySpec,
    scheme: WeightScheme,
    point: Mapping[Var, object] | None = None,
    row_labels: Sequence[int] | None = None,
    col_labels: Sequence[int] | None = None,
) -> PartitionResult:
    """Sum over enumerated states of the product of bulk weights."""
    _check_caps(dims, point)
    table = weight_table(dims, scheme, point, row_labels, col_labels)
    total = Polynomial() if point is None else Fraction(0)
    count = 0
    for state in enumerate_states(dims, boundary):
        count += 1
        w = 1
        for r in range(1, dims.n + 1):
            for c in range(1, dims.m + 1):
                w = w * table[classify_vertex(*state.vertex(r, c)), r, c]
        total = total + w
    return PartitionResult(total, count, "symbolic" if point is None else "point")


def partition_function_dp(
    dims: GridDims,
    boundary: BoundarySpec,
    scheme: WeightScheme,
    point: Mapping[Var, object] | None = None,
    row_labels: Sequence[int] | None = None,
    col_labels: Sequence[int] | None = None,
) -> PartitionResult:
    """Same value as :func:`partition_function`, by a cell-by-cell profile DP.

    The profile is the bitmask of vertical edges crossing the frontier, bit
    0 = column 1, plus the horizontal edge entering the current cell.
    """
    _check_caps(dims, point)
    boundary.check_ranges(dims)
    zero = Polynomial() if point is None else Fraction(0)
    mode = "symbolic" if point is None else "point"
    if not boundary.is_conserving():
        return PartitionResult(zero, 0, mode)
    table = weight_table(dims, scheme, point, row_labels, col_labels)
    n, m = dims.n, dims.m
    top = sum(1 << (c - 1) for c in boundary.top)
    bottom = sum(1 << (c - 1) for c in boundary.bottom)
    # profile -> (count, weight)
    layer: dict[int, tuple[int, object]] = {top: (1, 1)}
    for r in range(1, n + 1):
        h_in = int(r in boundary.left)
        cur: dict[tuple[int, int], tuple[int, object]] = {(mask, h_in): cw for mask, cw in layer.items()}
        for c in range(1, m + 1):
            bit = 1 << (c - 1)
            nxt: dict[tuple[int, int], tuple[int, object]] = {}
            for (mask, h), (cnt, w) in cur.items():
                t = 1 if mask & bit else 0
                for right, bot in _OUTS[(h, t)]:
                    kind = classify_vertex(h, t, right, bot)
                    key = ((mask | bit) if bot else (mask & ~bit), right)
                    val = w * table[kind, r, c]
                    if key in nxt:
                        oc, ow = nxt[key]
                        nxt[key] = (oc + cnt, ow + val)
                    else:
                        nxt[key] = (cnt, val)
            cur = nxt
        h_out = int(r in boundary.right)
        layer = {}
        for (mask, h), cw in cur.items():
            if h == h_out:
                layer[mask] = cw
    cnt, value = layer.get(bottom, (0, zero))
    if isinstance(value, int):
        value = Polynomial.const(value) if point is None else Fraction(value)
    return PartitionResult(value, cnt, mode)


ENGINES = {"brute": partition_function, "dp": partition_function_dp}


def partition_value(dims, boundary, scheme, point=None, row_labels=None, col_labels=None, engine="dp"):
    """Just the value, via the chosen engine."""
    return ENGINES[engine](dims, boundary, scheme, point, row_labels, col_labels).value


def empty_site_product(dims: GridDims, scheme: WeightScheme, point=None, row_labels=None, col_labels=None):
    """Product of a1 over every site of the grid."""
    table = weight_table(dims, scheme, point, row_labels, col_labels)
    out = 1
    for r in range(1, dims.n + 1):
        for c in range(1, dims.m + 1):
            out = out * table[VertexKind.A1, r, c]
    return out


def normalized_partition(
    dims: GridDims,
    boundary: BoundarySpec,
    scheme: WeightScheme,
    point: Mapping[Var, object] | None = None,
    engine: str = "dp",
):
    """Partition function divided by the product of a1 over all sites.

    Symbolic mode returns a :class:`RationalFunction`, point mode a Fraction.
    """
    z = partition_value(dims, boundary, scheme, point, engine=engine)
    norm = empty_site_product(dims, scheme, point)
    if point is None:
        if isinstance(norm, int):
            norm = Polynomial.const(norm)
        return RationalFunction(z, norm)
    if norm == 0:
        raise ZeroDivisionError("a1 vanishes at some site at this point")
    return Fraction(z) / norm


# -- cross-attached models -----------------------------------------------------


@dataclass(frozen=True)
class CrossAttachment:
    """A cross vertex joining rows (index, index+1) or columns (index, index+1)."""

    orientation: Orientation
    index: int

    @property
    def pair(self) -> tuple[int, int]:
        i = self.index
        return (i + 1, i) if self.orientation is Orientation.H else (i, i + 1)

    def check(self, dims: GridDims) -> None:
        limit = dims.n if self.orientation is Orientation.H else dims.m
        if not 1 <= self.index < limit:
            raise ValueError(f"attachment index {self.index} needs 1 <= index < {limit}")


CROSS_SIDES = ("outer", "inner")


def attached_labels(attachment: CrossAttachment, dims: GridDims, wiring: str = "strand"):
    """Lattice line labels on the outer and inner side of the train identity."""
    count = dims.n if attachment.orientation is Orientation.H else dims.m
    p, q = _strand_labels(attachment.orientation, attachment.pair)
    outer, inner = _bulk_labels(attachment.orientation, p, q, wiring)
    i = attachment.index
    result = []
    for pair in (outer, inner):
        labels = list(range(1, count + 1))
        labels[i - 1], labels[i] = pair
        result.append(tuple(labels))
    return tuple(result)


def augmented_partition(
    dims: GridDims,
    boundary: BoundarySpec,
    scheme: WeightScheme,
    attachment: CrossAttachment,
    cross_side: str,
    point: Mapping[Var, object] | None = None,
    wiring: str = "strand",
    engine: str = "dp",
    cross=None,
):
    """Partition function of the grid with a cross vertex attached.

    ``outer`` puts the cross where paths enter (left of two rows, above two
    columns), ``inner`` where they leave.  The external ports of the cross
    take the boundary bits of ``boundary`` on that side; the cross's other
    two ports replace the grid's boundary edges there.
    """
    if cross_side not in CROSS_SIDES:
        raise ValueError(f"cross_side must be one of {CROSS_SIDES}")
    attachment.check(dims)
    o = attachment.orientation
    if cross is None:
        cross = solve_cross_weights(scheme, attachment.pair, o, point=point, wiring=wiring)
    outer_labels, inner_labels = attached_labels(attachment, dims, wiring)
    labels = outer_labels if cross_side == "outer" else inner_labels
    i = attachment.index
    if o is Orientation.H:
        side = "left" if cross_side == "outer" else "right"
    else:
        side = "top" if cross_side == "outer" else "bottom"
    edges = getattr(boundary, side)
    ext = (int(i in edges), int(i + 1 in edges))
    total = None
    for kind, ports in CROSS_PORTS[o].items():
        if cross_side == "outer":
            if ports[:2] != ext:
                continue
            inner_bits = ports[2:]
        else:
            if ports[2:] != ext:
                continue
            inner_bits = ports[:2]
        new_edges = set(edges) - {i, i + 1}
        new_edges |= {idx for idx, bit in zip((i, i + 1), inner_bits) if bit}
        grid_boundary = boundary.replace(**{side: frozenset(new_edges)})
        if o is Orientation.H:
            z = partition_value(dims, grid_boundary, scheme, point, row_labels=labels, engine=engine)
        else:
            z = partition_value(dims, grid_boundary, scheme, point, col_labels=labels, engine=engine)
        term = cross[kind] * z
        total = term if total is None else total + term
    return total
