"""Bulk weight schemes, cross vertices and the Yang-Baxter equation.

Horizontal cross vertices join two rows.  Their ports are LU, LL (in) and
RU, RL (out); one strand runs LU->RL, the other LL->RU.  A horizontal
weight set for the pair ``(u, v)`` carries label ``u`` on the LL->RU strand
and ``v`` on the LU->RL strand, so the operator pair ``(i+1, i)`` is the
cross that sits to the right of rows i (top) and i+1.

Vertical cross vertices join two columns.  Ports TL, TR (in) and BL, BR
(out); strands TL->BR and TR->BL.  A vertical weight set for ``(u, v)``
carries ``u`` on TL->BR and ``v`` on TR->BL, so the cross below columns j,
j+1 is the pair ``(j, j+1)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .algebra import Polynomial, RationalFunction, Var, a, b, x, y, X, Y, A, B
from .lattice import VertexKind, classify_vertex
from .linalg import lowest_degree_multiple, polynomial_nullvector, rational_nullspace, rational_rank

KINDS = tuple(VertexKind)


class Orientation(Enum):
    H = "h"
    V = "v"

    def __str__(self) -> str:
        return self.value


# Port occupancies (in1, in2, out1, out2): H = (LU, LL, RU, RL), V = (TL, TR, BL, BR).
CROSS_PORTS = {
    Orientation.H: {
        VertexKind.A1: (0, 0, 0, 0),
        VertexKind.A2: (1, 1, 1, 1),
        VertexKind.B1: (1, 0, 0, 1),
        VertexKind.B2: (0, 1, 1, 0),
        VertexKind.C1: (1, 0, 1, 0),
        VertexKind.C2: (0, 1, 0, 1),
    },
    Orientation.V: {
        VertexKind.A1: (0, 0, 0, 0),
        VertexKind.A2: (1, 1, 1, 1),
        VertexKind.B1: (0, 1, 1, 0),
        VertexKind.B2: (1, 0, 0, 1),
        VertexKind.C1: (1, 0, 1, 0),
        VertexKind.C2: (0, 1, 0, 1),
    },
}

_PORT_KIND = {o: {ports: k for k, ports in table.items()} for o, table in CROSS_PORTS.items()}


def cross_kind(orientation: Orientation, in1, in2, out1, out2) -> VertexKind | None:
    return _PORT_KIND[orientation].get((int(in1), int(in2), int(out1), int(out2)))


@dataclass(frozen=True)
class WeightScheme:
    """Bulk weights: ``bulk(kind, row_label, col_label) -> Polynomial``."""

    name: str
    bulk: Callable[[VertexKind, int, int], Polynomial]
    substitution: tuple = field(default=())

    def weight(self, kind: VertexKind, i: int, j: int) -> Polynomial:
        w = self.bulk(kind, i, j)
        if self.substitution:
            w = w.subs(dict(self.substitution))
        return w

    def specialize(self, assignment: Mapping[Var, object], name: str | None = None) -> "WeightScheme":
        """Scheme with some variables fixed (numbers or polynomials)."""
        subs = dict(self.substitution)
        subs.update(assignment)
        return WeightScheme(name or f"{self.name}|sub", self.bulk, tuple(sorted(subs.items())))

    def with_family_zero(self, families: str, rows: int, cols: int) -> "WeightScheme":
        assignment = {}
        for fam in families:
            count = rows if fam in "xy" else cols
            for k in range(1, count + 1):
                assignment[Var("xyab".index(fam), k)] = 0
        return self.specialize(assignment, f"{self.name}|{families}=0")


@lru_cache(maxsize=None)
def _ff_weight(kind: VertexKind, i: int, j: int) -> Polynomial:
    if kind is VertexKind.A1:
        return 1 - b(j) * x(i)
    if kind is VertexKind.A2:
        return y(i) + a(j)
    if kind is VertexKind.B1:
        return 1 + b(j) * y(i)
    if kind is VertexKind.B2:
        return x(i) - a(j)
    if kind is VertexKind.C1:
        return 1 - a(j) * b(j)
    return x(i) + y(i)


def ff_scheme() -> WeightScheme:
    """Free-fermionic weights with row parameters x, y and column parameters a, b."""
    return WeightScheme("ff", _ff_weight)


def ones_scheme() -> WeightScheme:
    """All six bulk weights identically 1."""
    return WeightScheme("ones", lambda kind, i, j: Polynomial.const(1))


SCHEMES = {"ff": ff_scheme, "ones": ones_scheme}


def get_scheme(name: str) -> WeightScheme:
    try:
        return SCHEMES[name]()
    except KeyError:
        raise ValueError(f"unknown weight scheme {name!r}; known: {sorted(SCHEMES)}") from None


@dataclass(frozen=True)
class CrossWeightSet:
    pair: tuple[int, int]
    orientation: Orientation
    weights: Mapping[VertexKind, object]
    rank: int = 5
    # symbolic mode: lowest-degree polynomial representative of the ray
    ray: tuple | None = field(default=None, compare=False)

    def __getitem__(self, kind: VertexKind):
        return self.weights[kind]

    def evaluate(self, point) -> "CrossWeightSet":
        vals = {k: (w.evaluate(point) if hasattr(w, "evaluate") else Fraction(w)) for k, w in self.weights.items()}
        return CrossWeightSet(self.pair, self.orientation, vals, self.rank)

    def numerators(self) -> dict:
        """Polynomial weights proportional to the solved ones (symbolic sets only)."""
        if self.ray is None:
            raise ValueError("only symbolic cross weight sets carry a polynomial ray")
        return dict(zip(KINDS, self.ray))


class DegenerateCross(ArithmeticError):
    """The Yang-Baxter system does not have a one-dimensional solution space."""

    def __init__(self, pair, orientation, rank, nullity, detail=""):
        self.pair, self.orientation, self.rank, self.nullity = pair, orientation, rank, nullity
        msg = f"{orientation} cross for pair {pair}: rank {rank}, nullspace dimension {nullity}"
        super().__init__(msg + (f"; {detail}" if detail else " (need 1)"))


# -- Yang-Baxter system --------------------------------------------------------

WIRINGS = ("strand", "reversed")


def _bulk_labels(orientation: Orientation, p: int, q: int, wiring: str):
    """Line labels of the two bulk vertices on the outer and inner side.

    ``p`` is the label of the strand that ends at the second out-port (RL or
    BR), ``q`` that of the strand ending at the first out-port (RU or BL).
    Returns ((outer_first, outer_second), (inner_first, inner_second)) where
    first = upper row / left column.
    """
    if wiring == "strand":
        return (q, p), (p, q)
    if wiring == "reversed":
        return (p, q), (q, p)
    raise ValueError(f"unknown wiring {wiring!r}; choose from {WIRINGS}")


def _strand_labels(orientation: Orientation, pair: tuple[int, int]) -> tuple[int, int]:
    """(p, q) from a pair; see the module docstring for pair conventions."""
    u, v = pair
    if orientation is Orientation.H:
        return v, u  # p on LU->RL, q on LL->RU
    # vertical: u on TL->BR ends at BR (second out), v on TR->BL ends at BL (first out)
    return u, v


def ybe_system(
    scheme: WeightScheme,
    pair: tuple[int, int],
    orientation: Orientation,
    k: int,
    wiring: str = "strand",
    value: Callable = lambda w: w,
) -> list[list]:
    """Coefficient rows (one per external 6-tuple) of the YBE in the six cross weights.

    Row order is lexicographic in the externals; the residual for a cross
    weight vector w is ``sum(row[t] * w[KINDS[t]])``.  ``value`` maps bulk
    weights into the working ring (identity for symbolic mode, evaluation
    for point mode).
    """
    p, q = _strand_labels(orientation, pair)
    (o1, o2), (i1, i2) = _bulk_labels(orientation, p, q, wiring)
    cache: dict = {}

    def W(kind, line, other):
        key = (kind, line, other)
        if key not in cache:
            if orientation is Orientation.H:
                cache[key] = value(scheme.weight(kind, line, other))
            else:
                cache[key] = value(scheme.weight(kind, other, line))
        return cache[key]

    def bulk(line, left, top, right, bottom):
        kind = classify_vertex(left, top, right, bottom)
        return None if kind is None else W(kind, line, k)

    rows = []
    for ext in itertools.product((0, 1), repeat=6):
        coeffs = [0] * 6
        if orientation is Orientation.H:
            lu, ll, t, bt, ru, rl = ext
            # outer: cross first, then upper (o1) and lower (o2) bulk vertices
            for h1, h2, mid in itertools.product((0, 1), repeat=3):
                kind = cross_kind(orientation, lu, ll, h1, h2)
                if kind is None:
                    continue
                w1 = bulk(o1, h1, t, ru, mid)
                w2 = bulk(o2, h2, mid, rl, bt)
                if w1 is None or w2 is None:
                    continue
                coeffs[KINDS.index(kind)] = coeffs[KINDS.index(kind)] + w1 * w2
            # inner: bulk vertices first, cross after
            for h1, h2, mid in itertools.product((0, 1), repeat=3):
                kind = cross_kind(orientation, h1, h2, ru, rl)
                if kind is None:
                    continue
                w1 = bulk(i1, lu, t, h1, mid)
                w2 = bulk(i2, ll, mid, h2, bt)
                if w1 is None or w2 is None:
                    continue
                coeffs[KINDS.index(kind)] = coeffs[KINDS.index(kind)] - w1 * w2
        else:
            tl, tr, lft, rgt, bl, br = ext
            # outer: cross on top feeding the left (o1) and right (o2) columns
            for v1, v2, mid in itertools.product((0, 1), repeat=3):
                kind = cross_kind(orientation, tl, tr, v1, v2)
                if kind is None:
                    continue
                w1 = bulk(o1, lft, v1, mid, bl)
                w2 = bulk(o2, mid, v2, rgt, br)
                if w1 is None or w2 is None:
                    continue
                coeffs[KINDS.index(kind)] = coeffs[KINDS.index(kind)] + w1 * w2
            # inner: columns first, cross below
            for v1, v2, mid in itertools.product((0, 1), repeat=3):
                kind = cross_kind(orientation, v1, v2, bl, br)
                if kind is None:
                    continue
                w1 = bulk(i1, lft, tl, mid, v1)
                w2 = bulk(i2, mid, tr, rgt, v2)
                if w1 is None or w2 is None:
                    continue
                coeffs[KINDS.index(kind)] = coeffs[KINDS.index(kind)] - w1 * w2
        rows.append(coeffs)
    return rows


def ybe_residuals(
    scheme: WeightScheme,
    cross: CrossWeightSet,
    k: int,
    point=None,
    wiring: str = "strand",
) -> list:
    """The 64 residuals (outer wiring minus inner wiring) for column/row label k."""
    if point is None:
        value = lambda w: w  # noqa: E731
        ws = [cross[kind] for kind in KINDS]
    else:
        value = lambda w: w.evaluate(point)  # noqa: E731
        ws = [cross[kind] if isinstance(cross[kind], (int, Fraction)) else cross[kind].evaluate(point) for kind in KINDS]
    rows = ybe_system(scheme, cross.pair, cross.orientation, k, wiring, value)
    out = []
    for row in rows:
        total = 0
        for c, w in zip(row, ws):
            if not (isinstance(c, int) and c == 0):
                total = total + c * w
        out.append(total)
    return out


def _normalizer(orientation: Orientation) -> VertexKind:
    return VertexKind.B2 if orientation is Orientation.H else VertexKind.B1


# Generic values for the bulk line of an auxiliary Yang-Baxter system.  The
# solved cross does not depend on the bulk line, so fixing its parameters
# only shrinks the system; later entries are fallbacks for the rare strand
# values where the first choice drops rank.
_AUX_LINES = (
    (Fraction(3, 7), Fraction(-5, 11)),
    (Fraction(-2, 13), Fraction(9, 17)),
    (Fraction(11, 5), Fraction(4, 19)),
)


def _line_vars(orientation: Orientation, k: int) -> tuple[Var, Var]:
    return (A(k), B(k)) if orientation is Orientation.H else (X(k), Y(k))


def _strand_vars(orientation: Orientation, pair) -> set[Var]:
    if orientation is Orientation.H:
        return {X(pair[0]), X(pair[1]), Y(pair[0]), Y(pair[1])}
    return {A(pair[0]), A(pair[1]), B(pair[0]), B(pair[1])}


def solve_cross_weights(
    scheme: WeightScheme,
    pair: tuple[int, int],
    orientation: Orientation | str,
    point: Mapping[Var, object] | None = None,
    k: int | tuple[int, ...] | None = None,
    wiring: str = "strand",
) -> CrossWeightSet:
    """Cross weights making the Yang-Baxter equation hold.

    With ``point`` the system is solved over Q at that point; without, it is
    solved symbolically by fraction-free elimination and the weights are
    returned as rational functions.  Normalized so that b2 = 1 (horizontal)
    or b1 = 1 (vertical).

    ``k`` selects the bulk line(s) of the system.  The default uses line 1
    with its parameters fixed to generic constants, which gives the same ray.
    """
    orientation = Orientation(orientation) if isinstance(orientation, str) else orientation
    if pair[0] == pair[1]:
        raise ValueError(f"cross needs two distinct labels, got {pair}")
    pair = tuple(pair)
    if k is None:
        aux_lines = _AUX_LINES
        ks = (1,)
    else:
        aux_lines = (None,)
        ks = (k,) if isinstance(k, int) else tuple(k)
    err = None
    for aux in aux_lines:
        try:
            if point is not None:
                return _solve_point(scheme, pair, orientation, _freeze(point), ks, wiring, aux)
            return _solve_symbolic(scheme, pair, orientation, ks, wiring, aux)
        except DegenerateCross as e:
            err = e
    raise err


def _aux_subs(orientation, aux) -> dict:
    if aux is None:
        return {}
    va, vb = _line_vars(orientation, 1)
    return {va: aux[0], vb: aux[1]}


@lru_cache(maxsize=256)
def _solve_symbolic(scheme, pair, orientation, ks, wiring, aux) -> CrossWeightSet:
    norm = KINDS.index(_normalizer(orientation))
    subs = _aux_subs(orientation, aux)
    value = (lambda w: w.subs(subs)) if subs else (lambda w: w)
    rows = []
    for kk in ks:
        rows.extend(r for r in ybe_system(scheme, pair, orientation, kk, wiring, value) if any(
            not (c == 0) for c in r))
    rows = [[Polynomial.coerce(c) for c in r] for r in rows]
    rows = _independent_rows(rows)
    try:
        vec, rank = polynomial_nullvector(rows)
    except ValueError:
        rank = len(rows)
        raise DegenerateCross(pair, orientation, rank, 6 - rank) from None
    vec = lowest_degree_multiple(vec)
    content = None
    for v in vec:
        if not v.is_zero():
            c = v.content()
            content = c if content is None else Fraction(_gcd_frac(content, c))
    vec = [v / content for v in vec] if content else vec
    if vec[norm].is_zero():
        raise DegenerateCross(pair, orientation, rank, 1, f"{KINDS[norm]} vanishes identically")
    weights = {kind: RationalFunction(vec[t], vec[norm]).reduce() for t, kind in enumerate(KINDS)}
    return CrossWeightSet(pair, orientation, weights, rank, tuple(vec))


def _gcd_frac(p: Fraction, q: Fraction) -> Fraction:
    from math import gcd, lcm

    den = lcm(p.denominator, q.denominator)
    return Fraction(gcd(p.numerator * (den // p.denominator), q.numerator * (den // q.denominator)), den)


def _independent_rows(rows: list[list[Polynomial]]) -> list[list[Polynomial]]:
    """A maximal independent subset of rows, chosen by rank at a fixed generic point.

    Rank at a point is a lower bound for the symbolic rank; the returned
    nullvector is verified against all rows by the caller's tests.
    """
    variables = sorted({v for r in rows for c in r for v in c.variables()})
    pt = {v: Fraction(7 + 3 * t, 11 + 2 * (t % 5)) for t, v in enumerate(variables)}
    chosen: list[list[Polynomial]] = []
    numeric: list[list[Fraction]] = []
    for r in sorted(rows, key=lambda r: sum(len(c) for c in r)):
        cand = numeric + [[c.evaluate(pt) for c in r]]
        if rational_rank(cand) > len(numeric):
            numeric = cand
            chosen.append(r)
        if len(chosen) == 5:
            break
    return chosen


def _freeze(point: Mapping[Var, object]) -> tuple:
    return tuple(sorted((v, Fraction(val)) for v, val in point.items()))


@lru_cache(maxsize=65536)
def _solve_point_cached(scheme: WeightScheme, pair, orientation, relevant, ks, wiring) -> CrossWeightSet:
    point = dict(relevant)
    value = lambda w: w.evaluate(point)  # noqa: E731
    rows = []
    for kk in ks:
        rows.extend(ybe_system(scheme, pair, orientation, kk, wiring, value))
    rows = [[Fraction(c) for c in r] for r in rows]
    basis = rational_nullspace(rows, 6)
    rank = 6 - len(basis)
    if len(basis) != 1:
        raise DegenerateCross(pair, orientation, rank, len(basis))
    vec = basis[0]
    norm = KINDS.index(_normalizer(orientation))
    if vec[norm] == 0:
        raise DegenerateCross(pair, orientation, rank, 1, f"{KINDS[norm]} vanishes at this point")
    weights = {kind: vec[t] / vec[norm] for t, kind in enumerate(KINDS)}
    return CrossWeightSet(pair, orientation, weights, rank)


def _solve_point(scheme, pair, orientation, frozen, ks, wiring, aux=None) -> CrossWeightSet:
    # only the variables of the two strand labels and the bulk line matter
    keep = _strand_vars(orientation, pair)
    if aux is None:
        for kk in ks:
            keep |= set(_line_vars(orientation, kk))
    relevant = {v: val for v, val in frozen if v in keep}
    missing = keep - set(relevant)
    if missing and scheme.substitution:
        missing -= {v for v, _ in scheme.substitution}
    if missing and scheme.name != "ones":
        raise KeyError(f"point lacks values for {sorted(str(v) for v in missing)}")
    relevant.update(_aux_subs(orientation, aux))
    return _solve_point_cached(scheme, pair, orientation, tuple(sorted(relevant.items())), ks, wiring)


# -- weight relations -----------------------------------------------------------


@dataclass
class RelationReport:
    passed: bool
    checks: list[dict]

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": self.checks}


def check_weight_relations(w_uv: CrossWeightSet, w_vu: CrossWeightSet) -> RelationReport:
    """Projective weight relations between the crosses for (u, v) and (v, u).

    Every relation is bihomogeneous of degree (1, 1) in the two sets, so it
    holds or fails independently of how either set is normalized:

    * antisymmetry of b: b1(u,v) b2(v,u) = b2(u,v) b1(v,u)
    * exchange of c:     c1(u,v) c1(v,u) = c2(u,v) c2(v,u)
    * quadratic:         a1(u,v) a1(v,u) = c1(u,v) c1(v,u) + b1(u,v) b2(v,u)
    * a1(u,v) a1(v,u) = a2(u,v) a2(v,u), both nonzero
    * c1(u,v) b1(v,u) + b1(u,v) c2(v,u) = 0

    The last three say that the two crosses compose to a scalar multiple of
    the identity (the cross is invertible).  b1 and b2 must not vanish.
    """
    if w_uv.pair[0] == w_uv.pair[1]:
        raise ValueError(f"degenerate pair {w_uv.pair}")
    if tuple(reversed(w_uv.pair)) != tuple(w_vu.pair) or w_uv.orientation != w_vu.orientation:
        raise ValueError(f"need sets for (u, v) and (v, u), got {w_uv.pair} and {w_vu.pair}")
    K = VertexKind
    P, Q = w_uv, w_vu
    checks = []

    def add(name, lhs, rhs):
        checks.append({"relation": name, "lhs": str(lhs), "rhs": str(rhs), "ok": bool(lhs == rhs)})

    for kind in (K.B1, K.B2):
        for s, label in ((P, "u,v"), (Q, "v,u")):
            checks.append({"relation": f"{kind}({label}) != 0", "lhs": str(s[kind]), "rhs": "0",
                           "ok": not _is_zero(s[kind])})
    add("b1(u,v)*b2(v,u) = b2(u,v)*b1(v,u)", P[K.B1] * Q[K.B2], P[K.B2] * Q[K.B1])
    add("c1(u,v)*c1(v,u) = c2(u,v)*c2(v,u)", P[K.C1] * Q[K.C1], P[K.C2] * Q[K.C2])
    aa = P[K.A1] * Q[K.A1]
    add("a1(u,v)*a1(v,u) = c1(u,v)*c1(v,u) + b1(u,v)*b2(v,u)", aa, P[K.C1] * Q[K.C1] + P[K.B1] * Q[K.B2])
    add("a1(u,v)*a1(v,u) = a2(u,v)*a2(v,u)", aa, P[K.A2] * Q[K.A2])
    add("c1(u,v)*b1(v,u) + b1(u,v)*c2(v,u) = 0", P[K.C1] * Q[K.B1] + P[K.B1] * Q[K.C2], 0)
    checks.append({"relation": "a1(u,v)*a1(v,u) != 0", "lhs": str(aa), "rhs": "0", "ok": not _is_zero(aa)})
    return RelationReport(all(c["ok"] for c in checks), checks)


def _is_zero(v) -> bool:
    if isinstance(v, (int, Fraction)):
        return v == 0
    return v.is_zero()
