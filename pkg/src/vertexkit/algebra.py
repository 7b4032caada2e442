"""Exact multivariate polynomials and rational functions over Q.

Variables come in four families: ``x_i`` and ``y_i`` carry row (spectral)
parameters, ``a_j`` and ``b_j`` carry column parameters.  Polynomials are
sparse maps from monomials to rational coefficients and are immutable once
built.

Monomial order is graded lexicographic with the variable order
``x < y < a < b`` (then by index), so ``b`` variables dominate in the
lexicographic tie-break.  The canonical text form lists terms in ascending
order, constant first, e.g. ``1 - a1*b1``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, NamedTuple, Union

FAMILIES = "xyab"

Number = Union[int, Fraction]


class Var(NamedTuple):
    family: int
    index: int

    def __str__(self) -> str:
        return f"{FAMILIES[self.family]}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "Var":
        m = re.fullmatch(r"([xyab])(\d+)", text.strip())
        if not m or int(m.group(2)) < 1:
            raise ValueError(f"not a variable name: {text!r}")
        return cls(FAMILIES.index(m.group(1)), int(m.group(2)))


def _var(family: int, index: int) -> Var:
    if index < 1:
        raise ValueError(f"variable index must be >= 1, got {index}")
    return Var(family, index)


# Monomials are tuples of (Var, exponent) sorted by Var descending.  With that
# layout, plain tuple comparison is the lexicographic part of the order.
Monomial = tuple

ONE_MONO: Monomial = ()


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items(), reverse=True))


def _mono_div(m1: Monomial, m2: Monomial) -> Monomial | None:
    """m1 / m2 if m2 divides m1, else None."""
    exps = dict(m1)
    for v, e in m2:
        have = exps.get(v, 0)
        if have < e:
            return None
        if have == e:
            del exps[v]
        else:
            exps[v] = have - e
    return tuple(sorted(exps.items(), reverse=True))


def _mono_deg(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_key(m: Monomial):
    return (_mono_deg(m), m)


def _mono_str(m: Monomial) -> str:
    parts = []
    for v, e in reversed(m):
        parts.append(str(v) if e == 1 else f"{v}^{e}")
    return "*".join(parts)


def _norm(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _coef_str(c: Number) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class NonExactDivision(ArithmeticError):
    """Raised by :func:`divide_exact` when the divisor does not divide."""

    def __init__(self, dividend: "Polynomial", divisor: "Polynomial", remainder: "Polynomial"):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"({divisor}) does not divide ({dividend}); stuck at remainder {remainder}")


class UnassignedVariable(KeyError):
    def __init__(self, var: Var):
        self.var = var
        super().__init__(f"no value assigned to variable {var}")


class Polynomial:
    """Sparse polynomial with rational coefficients.

    Supports ``+ - *`` with other polynomials, ints and Fractions, integer
    powers, and structural equality on the canonical form.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Number] | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    clean[mono] = _norm(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Number) -> "Polynomial":
        return cls({ONE_MONO: c})

    @classmethod
    def var(cls, v: Var) -> "Polynomial":
        return cls._raw({((v, 1),): 1})

    @staticmethod
    def coerce(obj) -> "Polynomial":
        if isinstance(obj, Polynomial):
            return obj
        if isinstance(obj, (int, Fraction)):
            return Polynomial.const(obj)
        raise TypeError(f"cannot coerce {type(obj).__name__} to Polynomial")

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONO in self._terms)

    def constant_value(self) -> Number:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get(ONE_MONO, 0)

    def degree(self) -> int:
        return max((_mono_deg(m) for m in self._terms), default=-1)

    def variables(self) -> set[Var]:
        return {v for m in self._terms for v, _ in m}

    def sorted_terms(self) -> list[tuple[Monomial, Number]]:
        return sorted(self._terms.items(), key=lambda t: _mono_key(t[0]))

    def leading_term(self) -> tuple[Monomial, Number]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=_mono_key)
        return m, self._terms[m]

    def content(self) -> Fraction:
        """Positive rational c with self / c integral and primitive."""
        if not self._terms:
            return Fraction(0)
        cs = [Fraction(c) for c in self._terms.values()]
        den = lcm(*(c.denominator for c in cs))
        num = 0
        for c in cs:
            num = gcd(num, c.numerator * (den // c.denominator))
        return Fraction(num, den)

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self
            other = Polynomial.const(other)
        elif not isinstance(other, Polynomial):
            return NotImplemented
        if len(other._terms) > len(self._terms):
            self, other = other, self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial._raw({})
            return Polynomial._raw({m: _norm(c * other) for m, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._terms or not other._terms:
            return Polynomial._raw({})
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("polynomial divided by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- evaluation and substitution -------------------------------------

    def evaluate(self, point: Mapping[Var, Number]) -> Fraction:
        total = Fraction(0)
        for m, c in self._terms.items():
            t = Fraction(c)
            for v, e in m:
                try:
                    val = point[v]
                except KeyError:
                    raise UnassignedVariable(v) from None
                t *= Fraction(val) ** e
            total += t
        return total

    def subs(self, mapping: Mapping[Var, "Polynomial | Number"]) -> "Polynomial":
        """Substitute polynomials or numbers for some variables."""
        result = Polynomial._raw({})
        cache: dict = {}
        for m, c in self._terms.items():
            kept = []
            factor = Polynomial.const(c)
            for v, e in m:
                if v in mapping:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = Polynomial.coerce(mapping[v]) ** e
                    factor = factor * cache[key]
                else:
                    kept.append((v, e))
            result = result + factor * Polynomial._raw({tuple(kept): 1})
        return result

    def rename(self, mapping: Mapping[Var, Var]) -> "Polynomial":
        """Apply a variable-to-variable map (need not be injective)."""
        out: dict = {}
        for m, c in self._terms.items():
            exps: dict = {}
            for v, e in m:
                w = mapping.get(v, v)
                exps[w] = exps.get(w, 0) + e
            mono = tuple(sorted(exps.items(), reverse=True))
            out[mono] = out.get(mono, 0) + c
        return Polynomial(out)

    # -- text form --------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            mag = -c if neg else c
            body = _mono_str(m)
            if not body:
                text = _coef_str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{_coef_str(mag)}*{body}"
            if i == 0:
                pieces.append(f"-{text}" if neg else text)
            else:
                pieces.append(f" - {text}" if neg else f" + {text}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial('{self}')"

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        return parse_polynomial(text)


def x(i: int) -> Polynomial:
    return Polynomial.var(_var(0, i))


def y(i: int) -> Polynomial:
    return Polynomial.var(_var(1, i))


def a(j: int) -> Polynomial:
    return Polynomial.var(_var(2, j))


def b(j: int) -> Polynomial:
    return Polynomial.var(_var(3, j))


def X(i: int) -> Var:
    return _var(0, i)


def Y(i: int) -> Var:
    return _var(1, i)


def A(j: int) -> Var:
    return _var(2, j)


def B(j: int) -> Var:
    return _var(3, j)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_polynomial(text: str) -> Polynomial:
    """Parse the canonical text form (also accepts ``1/1*a1`` style coefficients)."""
    src = text.strip()
    if not src:
        raise ValueError("empty polynomial text")
    if src == "0":
        return Polynomial()
    pos = 0
    result: dict = {}
    first = True
    while pos < len(src):
        m = _TERM_RE.match(src, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {src[pos:]!r}")
        sign, body = m.group(1), m.group(2).strip()
        if sign is None and not first:
            raise ValueError(f"missing operator before {body!r}")
        first = False
        coef = Fraction(-1 if sign == "-" else 1)
        exps: dict = {}
        for factor in body.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {body!r}")
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coef *= Fraction(factor)
                continue
            fm = re.fullmatch(r"([xyab]\d+)(?:\^(\d+))?", factor)
            if not fm:
                raise ValueError(f"bad factor {factor!r}")
            v = Var.parse(fm.group(1))
            exps[v] = exps.get(v, 0) + int(fm.group(2) or 1)
        mono = tuple(sorted(((v, e) for v, e in exps.items() if e), reverse=True))
        result[mono] = result.get(mono, 0) + coef
        pos = m.end()
    return Polynomial(result)


def poly_arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def evaluate(p: Polynomial, point: Mapping[Var, Number]) -> Fraction:
    return p.evaluate(point)


def row_swap_map(i: int) -> dict[Var, Var]:
    return {X(i): X(i + 1), X(i + 1): X(i), Y(i): Y(i + 1), Y(i + 1): Y(i)}


def col_swap_map(j: int) -> dict[Var, Var]:
    return {A(j): A(j + 1), A(j + 1): A(j), B(j): B(j + 1), B(j + 1): B(j)}


def swap_row_vars(p: Polynomial, i: int) -> Polynomial:
    """Exchange x_i <-> x_{i+1} and y_i <-> y_{i+1}."""
    return p.rename(row_swap_map(i))


def swap_col_vars(p: Polynomial, j: int) -> Polynomial:
    """Exchange a_j <-> a_{j+1} and b_j <-> b_{j+1}."""
    return p.rename(col_swap_map(j))


def swap_point(point: Mapping[Var, Number], mapping: Mapping[Var, Var]) -> dict[Var, Number]:
    """The point q with f(q) = rename(f, mapping)(point)."""
    return {v: point[mapping.get(v, v)] for v in point}


def divide_exact(p: Polynomial, q: Polynomial) -> Polynomial:
    """Return r with p == q * r, or raise NonExactDivision."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return Polynomial()
    lm_q, lc_q = q.leading_term()
    lc_q = Fraction(lc_q)
    q_rest = [(m, c) for m, c in q._terms.items() if m != lm_q]
    rem = dict(p._terms)
    quot: dict = {}
    while rem:
        lm = max(rem, key=_mono_key)
        t = _mono_div(lm, lm_q)
        if t is None:
            raise NonExactDivision(p, q, Polynomial(rem))
        c = _norm(Fraction(rem[lm]) / lc_q)
        quot[t] = c
        del rem[lm]
        for m, qc in q_rest:
            mm = _mono_mul(t, m)
            s = rem.get(mm, 0) - c * qc
            if s:
                rem[mm] = _norm(s)
            else:
                rem.pop(mm, None)
    return Polynomial(quot)


def divides(q: Polynomial, p: Polynomial) -> bool:
    try:
        divide_exact(p, q)
    except NonExactDivision:
        return False
    return True


def product(factors: Iterable) -> Polynomial:
    out = Polynomial.const(1)
    for f in factors:
        out = out * f
    return out


class RationalFunction:
    """Quotient of two polynomials, reduced lazily.

    Only content and sign are normalized eagerly; common polynomial factors
    are cancelled by :meth:`reduce` when the denominator divides the
    numerator.  Equality is decided by cross-multiplication, so unreduced
    forms still compare correctly.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = Polynomial.coerce(num)
        den = Polynomial.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        _, lc = den.leading_term()
        scale = den.content() * (1 if lc > 0 else -1)
        if scale != 1:
            num = num / scale
            den = den / scale
        self.num = num
        self.den = den

    def reduce(self) -> "RationalFunction":
        try:
            return RationalFunction(divide_exact(self.num, self.den))
        except NonExactDivision:
            return self

    def as_polynomial(self) -> Polynomial:
        return divide_exact(self.num, self.den)

    @staticmethod
    def coerce(obj) -> "RationalFunction":
        if isinstance(obj, RationalFunction):
            return obj
        return RationalFunction(obj)

    def __add__(self, other):
        o = RationalFunction.coerce(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        o = RationalFunction.coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalFunction.coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        # equal values may have different forms; hash only the reduced-to-constant case
        return hash("RationalFunction")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def evaluate(self, point: Mapping[Var, Number]) -> Fraction:
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError(f"denominator {self.den} vanishes at the point")
        return self.num.evaluate(point) / d

    def rename(self, mapping: Mapping[Var, Var]) -> "RationalFunction":
        return RationalFunction(self.num.rename(mapping), self.den.rename(mapping))

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction('{self}')"
