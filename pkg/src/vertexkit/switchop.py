"""Switch operators acting on partition functions, operator words, and the reduction to the base case.

An operator acts either on a symbolic partition function (a Polynomial) or
on a point evaluator (a callable from points to rationals).  For the pair
(i+1, i) with swap s of the two lines:

    horizontal  d_i    = (a1 s - c1) / b2    moves a right exit from row i to i+1
                dbar_i = (a1 s - c2) / b1    moves it back
    vertical    d_j    = (a1 s - c2) / b1    moves a top entry from column j+1 to j
                dbar_j = (a1 s - c1) / b2    moves it back

The vertical c-indices are the ones forced by the Yang-Baxter exchange in
this lattice geometry (see the decisions notes shipped with the project).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

from .algebra import Polynomial, Var, col_swap_map, divide_exact, row_swap_map, swap_point
from .lattice import GridDims, base_model, check_signature, signature_model
from .partition import partition_value
from .weights import DegenerateCross, Orientation, WeightScheme, _freeze, solve_cross_weights
from .lattice import VertexKind

K = VertexKind


class OperatorSymbol(NamedTuple):
    orientation: Orientation
    index: int
    inverse: bool = False

    def __str__(self) -> str:
        return f"{'dbar' if self.inverse else 'd'}{self.orientation.value.upper()}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "OperatorSymbol":
        m = re.fullmatch(r"(dbar|d)([HVhv])(\d+)", text.strip())
        if not m or int(m.group(3)) < 1:
            raise ValueError(f"bad operator symbol {text!r}; expected e.g. dH3 or dbarV2")
        return cls(Orientation(m.group(2).lower()), int(m.group(3)), m.group(1) == "dbar")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.index + 1, self.index)

    def swap_map(self) -> dict[Var, Var]:
        return row_swap_map(self.index) if self.orientation is Orientation.H else col_swap_map(self.index)

    def coefficient_kinds(self) -> tuple[VertexKind, VertexKind]:
        """(c kind, b kind) in (a1 s - c) / b."""
        forward_h = (self.orientation is Orientation.H) != self.inverse
        return (K.C1, K.B2) if forward_h else (K.C2, K.B1)


@dataclass(frozen=True)
class OperatorWord:
    """Symbols in written order; the rightmost symbol is applied first."""

    symbols: tuple = ()

    def application_order(self) -> tuple:
        return tuple(reversed(self.symbols))

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    @classmethod
    def from_application(cls, symbols: Iterable[OperatorSymbol]) -> "OperatorWord":
        return cls(tuple(reversed(tuple(symbols))))

    @classmethod
    def parse(cls, text: str) -> "OperatorWord":
        return cls(tuple(OperatorSymbol.parse(t) for t in text.split()))


# -- signatures -----------------------------------------------------------


def s_on_signature(alpha: Sequence[int], i: int) -> tuple[int, ...]:
    """Action of the transposition (i, i+1) on the set of parts."""
    parts = set(check_signature(alpha))
    if (i in parts) != (i + 1 in parts):
        if i in parts:
            parts = (parts - {i}) | {i + 1}
        else:
            parts = (parts - {i + 1}) | {i}
    return tuple(sorted(parts, reverse=True))


class InvalidStep(ValueError):
    """An operator applied to a signature outside its defining case."""


def symbol_on_signatures(sym: OperatorSymbol, alpha, beta) -> tuple[tuple, tuple]:
    """Where a single operator sends (alpha, beta); raises InvalidStep outside its case."""
    i = sym.index
    target = alpha if sym.orientation is Orientation.H else beta
    parts = set(target)
    # horizontal d and vertical dbar move a part from i to i+1
    up = (sym.orientation is Orientation.H) != sym.inverse
    src, dst = (i, i + 1) if up else (i + 1, i)
    if src not in parts or dst in parts:
        raise InvalidStep(f"{sym} needs {src} in and {dst} not in {tuple(sorted(parts, reverse=True))}")
    moved = s_on_signature(tuple(sorted(parts, reverse=True)), i)
    return (moved, beta) if sym.orientation is Orientation.H else (alpha, moved)


def transport(word: OperatorWord, alpha, beta) -> tuple[tuple, tuple]:
    for sym in word.application_order():
        alpha, beta = symbol_on_signatures(sym, alpha, beta)
    return alpha, beta


def base_signatures(d: int, m: int) -> tuple[tuple, tuple]:
    return tuple(range(d, 0, -1)), tuple(range(m, m - d, -1))


WORD_FORMS = ("canonical", "interval", "product")


def word_for_signatures(alpha, beta, dims: GridDims, form: str = "canonical") -> OperatorWord:
    """Word taking the base signatures to (alpha, beta); vertical part applied first.

    ``canonical`` moves one part at a time, outermost first.  ``interval`` and
    ``product`` are literal transcriptions of two closed-form compositions and
    are kept for comparison; they need not transport correctly.
    """
    alpha, beta = check_signature(alpha), check_signature(beta)
    if len(alpha) != len(beta):
        raise ValueError(f"signatures must have equal length: {alpha} vs {beta}")
    if alpha and alpha[0] > dims.n:
        raise ValueError(f"right signature part {alpha[0]} exceeds n={dims.n}")
    if beta and beta[0] > dims.m:
        raise ValueError(f"top signature part {beta[0]} exceeds m={dims.m}")
    d, m = len(alpha), dims.m
    H, V = Orientation.H, Orientation.V
    apply: list[OperatorSymbol] = []
    if form == "canonical":
        # entry at base column m-d+k goes to beta[d-k], smallest first
        for k in range(1, d + 1):
            start, goal = m - d + k, beta[d - k]
            apply += [OperatorSymbol(V, j) for j in range(start - 1, goal - 1, -1)]
        # exit at base row d-k+1 goes to alpha[k-1], largest first
        for k in range(1, d + 1):
            start, goal = d - k + 1, alpha[k - 1]
            apply += [OperatorSymbol(H, i) for i in range(start, goal)]
        return OperatorWord.from_application(apply)
    if form == "interval":
        # d_[i,j] = d_{j-1} ... d_i ;  d_alpha = d_[1,alpha_d] d_[2,alpha_{d-1}] ... d_[d,alpha_1]
        def interval(o, sig):
            written = []
            for t in range(1, d + 1):
                j = sig[d - t]
                written += [OperatorSymbol(o, q) for q in range(j - 1, t - 1, -1)]
            return written
        return OperatorWord(tuple(interval(H, alpha) + interval(V, beta)))
    if form == "product":
        written: list[OperatorSymbol] = []
        D = list(range(d, 0, -1))
        for k in range(1, d + 1):
            part = alpha[d - k]
            written += [OperatorSymbol(H, part - l) for l in range(1, part - D[k - 1] + 1)]
        for k in range(1, d + 1):
            written += [OperatorSymbol(V, l) for l in range(beta[k - 1], m - k + 1)]
        return OperatorWord(tuple(written))
    raise ValueError(f"unknown word form {form!r}; choose from {WORD_FORMS}")


# -- operator application -----------------------------------------------------


class PointFunction:
    """A memoized map from points to exact rationals."""

    def __init__(self, fn: Callable[[Mapping[Var, object]], Fraction], label: str = ""):
        self._fn = fn
        self._memo: dict = {}
        self.label = label

    def __call__(self, point: Mapping[Var, object]) -> Fraction:
        key = _freeze(point)
        if key not in self._memo:
            self._memo[key] = Fraction(self._fn(point))
        return self._memo[key]


def apply_switch(sym: OperatorSymbol, Z, scheme: WeightScheme):
    """Apply one operator to a Polynomial (symbolic) or a PointFunction/callable (point mode).

    Symbolic mode divides exactly and raises NonExactDivision when the result
    is not a polynomial, which happens when Z is outside the operator's case.
    """
    swap = sym.swap_map()
    c_kind, b_kind = sym.coefficient_kinds()
    if isinstance(Z, Polynomial):
        ray = solve_cross_weights(scheme, sym.pair, sym.orientation).numerators()
        top = ray[K.A1] * Z.rename(swap) - ray[c_kind] * Z
        return divide_exact(top, ray[b_kind])
    if not callable(Z):
        raise TypeError(f"cannot apply an operator to {type(Z).__name__}")

    def evaluator(point):
        cross = solve_cross_weights(scheme, sym.pair, sym.orientation, point=point)
        den = cross[b_kind]
        if den == 0:
            raise DegenerateCross(sym.pair, sym.orientation, cross.rank, 1, f"{b_kind} vanishes at this point")
        return (cross[K.A1] * Z(swap_point(point, swap)) - cross[c_kind] * Z(point)) / den

    return PointFunction(evaluator, f"{sym}({getattr(Z, 'label', '')})")


def apply_word(word: OperatorWord, Z, scheme: WeightScheme):
    for sym in word.application_order():
        Z = apply_switch(sym, Z, scheme)
    return Z


def point_partition(dims, boundary, scheme, engine: str = "dp") -> PointFunction:
    """Point evaluator of a partition function."""
    return PointFunction(lambda pt: partition_value(dims, boundary, scheme, pt, engine=engine), "Z")


def reduce_to_base(alpha, beta, dims: GridDims, scheme: WeightScheme, point=None, form: str = "canonical"):
    """Z_{alpha,beta} computed as the operator word applied to the base model.

    Symbolic (``point=None``) returns a Polynomial; otherwise the exact value
    at ``point``.
    """
    word = word_for_signatures(alpha, beta, dims, form)
    bdims, bnd = base_model(dims.n, dims.m, len(alpha))
    if point is None:
        Z = partition_value(bdims, bnd, scheme)
        return apply_word(word, Z, scheme)
    return apply_word(word, point_partition(bdims, bnd, scheme), scheme)(point)


def direct_partition(alpha, beta, dims: GridDims, scheme: WeightScheme, point=None):
    """Z_{alpha,beta} by the DP engine, for comparison with reduce_to_base."""
    mdims, bnd = signature_model(dims.n, dims.m, alpha, beta)
    return partition_value(mdims, bnd, scheme, point)


# -- exchange relations ---------------------------------------------------------

EXCHANGE_CASES = ("both-in", "both-out", "move", "move-back")


def exchange_case(orientation: Orientation, index: int, boundary) -> str:
    """Which of the four cases the pair (index, index+1) is in.

    ``move`` is the case whose operator is the forward d: for rows, an exit
    at ``index`` and none at ``index+1``; for columns, an entry at
    ``index+1`` and none at ``index``.
    """
    edges = boundary.right if orientation is Orientation.H else boundary.top
    lo, hi = index in edges, index + 1 in edges
    if lo and hi:
        return "both-in"
    if not lo and not hi:
        return "both-out"
    forward = lo if orientation is Orientation.H else hi
    return "move" if forward else "move-back"


def exchange_sides(dims: GridDims, boundary, scheme: WeightScheme, orientation: Orientation, index: int, point):
    """(case, lhs, rhs) of the exchange identity for one pair at one point.

    The side opposite to the moved boundary must be empty on the pair: the
    left edges of both rows, or the bottom edges of both columns.
    """
    if orientation is Orientation.H:
        if index in boundary.left or index + 1 in boundary.left:
            raise ValueError("row exchange needs empty left edges on the pair")
        swap, edges, field = row_swap_map(index), boundary.right, "right"
    else:
        if index in boundary.bottom or index + 1 in boundary.bottom:
            raise ValueError("column exchange needs empty bottom edges on the pair")
        swap, edges, field = col_swap_map(index), boundary.top, "top"
    case = exchange_case(orientation, index, boundary)
    cross = solve_cross_weights(scheme, (index + 1, index), orientation, point=point)
    z = partition_value(dims, boundary, scheme, point)
    zs = partition_value(dims, boundary, scheme, swap_point(point, swap))
    lhs = cross[K.A1] * zs
    if case == "both-out":
        return case, zs, z
    if case == "both-in":
        return case, lhs, cross[K.A2] * z
    moved = frozenset(s_on_signature(tuple(sorted(edges, reverse=True)), index))
    z_moved = partition_value(dims, boundary.replace(**{field: moved}), scheme, point)
    sym = OperatorSymbol(orientation, index, inverse=(case == "move-back"))
    c_kind, b_kind = sym.coefficient_kinds()
    return case, lhs, cross[b_kind] * z_moved + cross[c_kind] * z
