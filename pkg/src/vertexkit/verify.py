"""Verification suites.  Each suite returns a JSON-ready report naming every
case it checked and, for failures, the witness (point, model, both sides).

Randomness is drawn from one generator per case, seeded by (seed, suite,
case number), so reports do not depend on thread scheduling.
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .algebra import Var, swap_row_vars
from .lattice import (
    BoundarySpec,
    GridDims,
    classify_vertex,
    dwbc_model,
    enumerate_states,
    model_to_json,
    parse_state,
    render_state,
    VertexKind,
    signature_model,
    state_vertex_kinds,
)
from .partition import CrossAttachment, augmented_partition, partition_function, partition_function_dp, partition_value
from .sampling import SamplingExhausted, TrivialPoint, point_to_json, random_point, require_nonzero, with_redraw
from .schur import (
    CONVENTION_SPACE,
    PINNED_CONVENTION,
    asymptotic_symmetry_check,
    calibrate_schur_specialization,
    calibration_instances,
    classical_schur,
    dwbc_factor_report,
    monomial_ratio,
    factorial_schur_alternant,
    proposition_model,
    schur_specialized_scheme,
    z_alpha_delta_candidate,
    z_alpha_delta_direct,
)
from .switchop import (
    OperatorSymbol,
    apply_switch,
    direct_partition,
    exchange_sides,
    point_partition,
    reduce_to_base,
    transport,
    base_signatures,
    word_for_signatures,
)
from .weights import (
    DegenerateCross,
    Orientation,
    check_weight_relations,
    ff_scheme,
    solve_cross_weights,
    ybe_residuals,
)

SCHEMA = 1


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("VERTEXKIT_THREADS", "1")))
    except ValueError:
        return 1


def _map(fn: Callable, items: list) -> list:
    threads = thread_count()
    if threads == 1 or len(items) < 2:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _rng(seed: int, suite: str, case: int) -> random.Random:
    return random.Random(f"{seed}:{suite}:{case}")


@dataclass
class Report:
    suite: str
    seed: int | None = None
    cases: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and bool(self.cases)

    def add(self, case: dict, ok: bool, witness: dict | None = None) -> None:
        case = dict(case, ok=ok)
        self.cases.append(case)
        if not ok:
            self.failures.append(dict(case, **(witness or {})))

    def to_json(self) -> dict:
        out = {"schema": SCHEMA, "suite": self.suite, "passed": self.passed, "checked": len(self.cases),
               "failures": self.failures, "cases": self.cases}
        if self.seed is not None:
            out["seed"] = self.seed
        if self.notes:
            out["notes"] = self.notes
        return out


def _random_boundary(rng: random.Random, dims: GridDims, fixed: dict) -> BoundarySpec | None:
    """A random conserving boundary; ``fixed`` maps (side, index) -> bit."""
    n, m = dims.n, dims.m
    sides = {}
    for side, size in (("left", n), ("top", m)):
        sides[side] = {k for k in range(1, size + 1) if fixed.get((side, k), rng.random() < 0.5)}
    need = len(sides["left"]) + len(sides["top"])
    slots = [("right", k) for k in range(1, n + 1)] + [("bottom", k) for k in range(1, m + 1)]
    forced_in = [s for s in slots if fixed.get(s) is True]
    free = [s for s in slots if s not in fixed]
    extra = need - len(forced_in)
    if extra < 0 or extra > len(free):
        return None
    chosen = set(forced_in) | set(rng.sample(free, extra))
    sides["right"] = {k for s, k in chosen if s == "right"}
    sides["bottom"] = {k for s, k in chosen if s == "bottom"}
    return BoundarySpec(**sides)


def _sample_nonzero(rng, dims, fixed, fn, tries: int = 60, per_boundary: int = 4):
    """Draw boundaries and points until fn(boundary, point) succeeds at a generic, non-trivial point."""
    last = None
    for _ in range(tries):
        bnd = _random_boundary(rng, dims, fixed)
        if bnd is None:
            continue
        for _ in range(per_boundary):
            point = random_point(rng, dims.n, dims.m)
            try:
                return bnd, point, fn(bnd, point)
            except (DegenerateCross, ZeroDivisionError, TrivialPoint) as e:
                last = e
    raise SamplingExhausted(f"no usable boundary and point after {tries} draws ({last})")


# -- suites ------------------------------------------------------------------


def suite_admissibility(seed: int = 0, **_) -> Report:
    rep = Report("admissibility")
    expected = {1: 1, 2: 2, 3: 7, 4: 42}
    for n, want in expected.items():
        dims, bnd = dwbc_model(n)
        states = list(enumerate_states(dims, bnd))
        ok = len(states) == want
        for st in states:
            ok &= st.boundary() == bnd
            for r in range(1, n + 1):
                for c in range(1, n + 1):
                    ok &= classify_vertex(*st.vertex(r, c)) is not None
            if n == 3:
                ok &= parse_state(render_state(st)) == st
        rep.add({"check": f"dwbc n={n}", "expected_states": want, "states": len(states)}, ok)
        if n == 3:
            grids = sorted(tuple(" ".join(map(str, row)) for row in state_vertex_kinds(s)) for s in states)
            rep.notes.append({"dwbc3_kind_grids": grids})
    return rep


def suite_ybe(seed: int = 0, points: int = 20, n: int = 5, **_) -> Report:
    rep = Report("ybe", seed)
    scheme = ff_scheme()
    cases = [(o, pair) for o in Orientation for i in range(1, n) for pair in ((i + 1, i), (i, i + 1))]

    def run(args):
        t, (o, pair) = args
        rng = _rng(seed, "ybe", t)
        out = []
        for _ in range(points):
            k = rng.randint(1, n)

            def check(pt):
                own = solve_cross_weights(scheme, pair, o, point=pt, k=k)
                aux = solve_cross_weights(scheme, pair, o, point=pt)
                res_own = ybe_residuals(scheme, own, k, point=pt)
                res_aux = ybe_residuals(scheme, aux, k, point=pt)
                return own.rank, all(r == 0 for r in res_own), all(r == 0 for r in res_aux)

            pt, (rank, z1, z2) = with_redraw(rng, n, n, check)
            ok = rank == 5 and z1 and z2
            out.append(({"orientation": o.value, "pair": list(pair), "line": k, "rank": rank}, ok,
                        {"point": point_to_json(pt)}))
        return out

    for result in _map(run, list(enumerate(cases))):
        for case, ok, wit in result:
            rep.add(case, ok, wit)
    return rep


def suite_relations(seed: int = 0, points: int = 20, n: int = 5, **_) -> Report:
    rep = Report("relations", seed)
    scheme = ff_scheme()
    for t, (o, i) in enumerate((o, i) for o in Orientation for i in range(1, n)):
        rng = _rng(seed, "relations", t)
        for _ in range(points):
            def check(pt):
                w_uv = solve_cross_weights(scheme, (i + 1, i), o, point=pt)
                w_vu = solve_cross_weights(scheme, (i, i + 1), o, point=pt)
                if any(w[kind] == 0 for w in (w_uv, w_vu) for kind in (VertexKind.A1, VertexKind.B1, VertexKind.B2)):
                    raise ZeroDivisionError("an a1 or b weight vanishes at this point")
                return check_weight_relations(w_uv, w_vu)

            pt, report = with_redraw(rng, n, n, check)
            rep.add({"orientation": o.value, "pair": [i + 1, i]}, report.passed,
                    {"point": point_to_json(pt), "checks": [c for c in report.checks if not c["ok"]]})
    # symbolic once per orientation
    for o in Orientation:
        report = check_weight_relations(solve_cross_weights(scheme, (2, 1), o), solve_cross_weights(scheme, (1, 2), o))
        rep.add({"orientation": o.value, "pair": [2, 1], "mode": "symbolic"}, report.passed,
                {"checks": [c for c in report.checks if not c["ok"]]})
    return rep


OCCUPANCY = ((0, 0), (0, 1), (1, 0), (1, 1))


def suite_train(seed: int = 0, points: int = 10, max_n: int = 4, wiring: str = "strand", **_) -> Report:
    rep = Report("train", seed)
    scheme = ff_scheme()
    cases = [(n, o, i, occ) for n in range(2, max_n + 1) for o in Orientation for i in range(1, n) for occ in OCCUPANCY]

    def run(args):
        t, (n, o, i, occ) = args
        rng = _rng(seed, "train", t)
        dims = GridDims(n, n)
        att = CrossAttachment(o, i)
        side = "left" if o is Orientation.H else "top"
        fixed = {(side, i): bool(occ[0]), (side, i + 1): bool(occ[1])}
        out = []
        for _ in range(points):
            def check(bnd, pt):
                outer = augmented_partition(dims, bnd, scheme, att, "outer", pt, wiring=wiring)
                inner = augmented_partition(dims, bnd, scheme, att, "inner", pt, wiring=wiring)
                require_nonzero(outer, inner)
                return outer, inner

            bnd, pt, (lo, li) = _sample_nonzero(rng, dims, fixed, check)
            out.append(({"n": n, "orientation": o.value, "index": i, "occupancy": list(occ)}, lo == li,
                        {"model": model_to_json(dims, bnd), "point": point_to_json(pt),
                         "outer": str(lo), "inner": str(li)}))
        return out

    for result in _map(run, list(enumerate(cases))):
        for case, ok, wit in result:
            rep.add(case, ok, wit)
    return rep


def suite_exchange(seed: int = 0, points: int = 10, max_n: int = 4, **_) -> Report:
    rep = Report("exchange", seed)
    scheme = ff_scheme()
    cases = [(n, o, i, occ) for n in range(2, max_n + 1) for o in Orientation for i in range(1, n) for occ in OCCUPANCY]

    def run(args):
        t, (n, o, i, occ) = args
        rng = _rng(seed, "exchange", t)
        dims = GridDims(n, n)
        if o is Orientation.H:
            fixed = {("left", i): False, ("left", i + 1): False, ("right", i): bool(occ[0]), ("right", i + 1): bool(occ[1])}
        else:
            fixed = {("bottom", i): False, ("bottom", i + 1): False, ("top", i): bool(occ[0]), ("top", i + 1): bool(occ[1])}
        out = []
        for _ in range(points):
            def check(bnd, pt):
                case, lhs, rhs = exchange_sides(dims, bnd, scheme, o, i, pt)
                require_nonzero(lhs, rhs)
                return case, lhs, rhs

            bnd, pt, (case, lhs, rhs) = _sample_nonzero(rng, dims, fixed, check)
            out.append(({"n": n, "orientation": o.value, "index": i, "case": case}, lhs == rhs,
                        {"model": model_to_json(dims, bnd), "point": point_to_json(pt),
                         "lhs": str(lhs), "rhs": str(rhs)}))
        return out

    for result in _map(run, list(enumerate(cases))):
        for case, ok, wit in result:
            rep.add(case, ok, wit)
    return rep


def suite_inverse(seed: int = 0, points: int = 20, n: int = 3, **_) -> Report:
    rep = Report("inverse", seed)
    scheme = ff_scheme()
    dims = GridDims(n, n)
    cases = [(o, i) for o in Orientation for i in range(1, n)]
    for t, (o, i) in enumerate(cases):
        rng = _rng(seed, "inverse", t)
        fwd, inv = OperatorSymbol(o, i), OperatorSymbol(o, i, True)
        for _ in range(points):
            def check(bnd, pt):
                Z = point_partition(dims, bnd, scheme)
                z = Z(pt)
                one = apply_switch(inv, apply_switch(fwd, Z, scheme), scheme)(pt)
                two = apply_switch(fwd, apply_switch(inv, Z, scheme), scheme)(pt)
                require_nonzero(z)
                return z, one, two

            bnd, pt, (z, one, two) = _sample_nonzero(rng, dims, {}, check)
            rep.add({"orientation": o.value, "index": i}, z == one == two,
                    {"model": model_to_json(dims, bnd), "point": point_to_json(pt),
                     "z": str(z), "dbar_d": str(one), "d_dbar": str(two)})
    return rep


def suite_switch(seed: int = 0, points: int = 10, n: int = 4, **_) -> Report:
    """Distant commutation d_i d_j = d_j d_i for |i - j| >= 2."""
    rep = Report("switch", seed)
    scheme = ff_scheme()
    dims = GridDims(n, n)
    cases = [(o, i, j, inv_i, inv_j) for o in Orientation for i in range(1, n) for j in range(i + 2, n)
             for inv_i in (False, True) for inv_j in (False, True)]
    for t, (o, i, j, inv_i, inv_j) in enumerate(cases):
        rng = _rng(seed, "switch", t)
        si, sj = OperatorSymbol(o, i, inv_i), OperatorSymbol(o, j, inv_j)
        for _ in range(points):
            def check(bnd, pt):
                Z = point_partition(dims, bnd, scheme)
                left = apply_switch(si, apply_switch(sj, Z, scheme), scheme)(pt)
                right = apply_switch(sj, apply_switch(si, Z, scheme), scheme)(pt)
                require_nonzero(left, right)
                return left, right

            bnd, pt, (l, r) = _sample_nonzero(rng, dims, {}, check)
            rep.add({"orientation": o.value, "ops": [str(si), str(sj)]}, l == r,
                    {"model": model_to_json(dims, bnd), "point": point_to_json(pt), "lhs": str(l), "rhs": str(r)})
    return rep


def theorem_instances(n: int, m: int, max_d: int = 2) -> list[tuple[tuple, tuple]]:
    out = []
    for d in range(0, min(max_d, n, m) + 1):
        for alpha in itertools.combinations(range(n, 0, -1), d):
            for beta in itertools.combinations(range(m, 0, -1), d):
                out.append((alpha, beta))
    return out


EXAMPLE_INSTANCE = (5, 5, (5, 3, 2), (4, 2, 1))


def suite_theorem(seed: int = 0, points: int = 5, n: int = 4, m: int = 4, max_d: int = 2,
                  example: bool = False, **_) -> Report:
    rep = Report("theorem", seed)
    scheme = ff_scheme()
    work = [(n, m, al, be) for al, be in theorem_instances(n, m, max_d)]
    if example:
        work.append(EXAMPLE_INSTANCE)

    def run(args):
        t, (nn, mm, alpha, beta) = args
        rng = _rng(seed, "theorem", t)
        dims = GridDims(nn, mm)
        word = word_for_signatures(alpha, beta, dims)
        reached = transport(word, *base_signatures(len(alpha), mm))
        out = []
        for _ in range(points):
            def check(pt):
                lhs = direct_partition(alpha, beta, dims, scheme, pt)
                rhs = reduce_to_base(alpha, beta, dims, scheme, pt)
                require_nonzero(lhs, rhs)
                return lhs, rhs

            pt, (lhs, rhs) = with_redraw(rng, nn, mm, check)
            ok = lhs == rhs and reached == (alpha, beta)
            out.append(({"n": nn, "m": mm, "alpha": list(alpha), "beta": list(beta), "word": str(word)}, ok,
                        {"point": point_to_json(pt), "direct": str(lhs), "reduced": str(rhs)}))
        return out

    for result in _map(run, list(enumerate(work))):
        for case, ok, wit in result:
            rep.add(case, ok, wit)
    return rep


PROPOSITION_INSTANCES = ((2, 3, (3, 1)), (2, 4, (4, 2)), (3, 4, (4, 2, 1)))


def suite_proposition(seed: int = 0, points: int = 10, printed: bool = False, **_) -> Report:
    rep = Report("proposition", seed)
    for t, (n, m, alpha) in enumerate(PROPOSITION_INSTANCES):
        rng = _rng(seed, "proposition", t)
        cand = z_alpha_delta_candidate(alpha, n, m)
        direct = z_alpha_delta_direct(alpha, n, m)
        lit = z_alpha_delta_candidate(alpha, n, m, printed=True) if printed else None
        for _ in range(points):
            def check(pt):
                c, d = cand(pt), direct(pt)
                require_nonzero(c, d)
                return c, d, (lit(pt) if lit else None)

            pt, (c, d, p) = with_redraw(rng, n, m, check)
            case = {"n": n, "m": m, "alpha": list(alpha)}
            if lit is not None:
                case["printed_matches"] = p == d
            rep.add(case, c == d, {"point": point_to_json(pt), "candidate": str(c), "direct": str(d)})
    return rep


def suite_symmetry(seed: int = 0, configs: int = 24, points: int = 3, **_) -> Report:
    rep = Report("symmetry", seed)
    rng = _rng(seed, "symmetry", 0)
    asserted = 0
    while len(rep.cases) < configs * points:
        n, m = rng.randint(1, 3), rng.randint(3, 5)
        d = rng.randint(0, min(n, m - 2))
        alpha = tuple(sorted(rng.sample(range(1, n + 1), d), reverse=True))
        beta = tuple(sorted(rng.sample(range(1, m - 1), d), reverse=True))
        lo = (beta[0] + 1) if beta else 1
        j = rng.randint(lo, m - 1)
        dims = GridDims(n, m)
        for _ in range(points):
            def check(pt):
                r = asymptotic_symmetry_check(alpha, beta, dims, j, pt)
                require_nonzero(partition_value(*signature_model(n, m, alpha, beta), ff_scheme(), pt))
                return r

            try:
                pt, r = with_redraw(rng, n, m, check)
            except SamplingExhausted:
                break
            asserted += r["asserted"]
            rep.add({"n": n, "m": m, "alpha": list(alpha), "beta": list(beta), "j": j, "asserted": r["asserted"]},
                    r["ok"], {"point": point_to_json(pt), "z": r["z"], "z_swapped": r["z_swapped"]})
    rep.notes.append({"asserted_cases": asserted})
    # columns straddling an entry: reported, not asserted
    dims = GridDims(2, 4)
    pt = random_point(rng, 2, 4)
    r = asymptotic_symmetry_check((2, 1), (3, 1), dims, 3, pt)
    rep.notes.append({"straddling": {"beta": [3, 1], "j": 3, "equal": r["equal"]}})
    return rep


def suite_schur_calibration(seed: int = 0, **_) -> Report:
    rep = Report("schur-calibration", seed)
    cal = calibrate_schur_specialization()
    unique = cal["unique"] and cal["result"] == PINNED_CONVENTION.to_json()
    rep.add({"check": "calibration finds exactly the pinned convention", "result": cal["result"]}, unique,
            {"matches": cal["matches"]})
    # pinned assertions on every instance
    for n, m, alpha in calibration_instances():
        dims, bnd = proposition_model(alpha, n, m)
        z = partition_value(dims, bnd, schur_specialized_scheme(n, m))
        s = PINNED_CONVENTION.alternant(alpha, m)
        ratio = None if s is None else monomial_ratio(z, s)
        rep.add({"check": "pinned", "n": n, "m": m, "alpha": list(alpha),
                 "prefactor": None if ratio is None else str(ratio)}, ratio is not None,
                {"z": str(z), "alternant": str(s)})
    for lam, nv in (((1,), 2), ((2, 1), 3), ((2,), 3), ((3, 1), 3)):
        for sign in ("plus", "minus"):
            f = factorial_schur_alternant(lam, nv, sign)
            sym = all(swap_row_vars(f, i) == f for i in range(1, nv))
            rep.add({"check": "alternant symmetric", "lambda": list(lam), "n": nv, "sign": sign}, sym, {"value": str(f)})
            at0 = f.subs({Var(2, t): 0 for t in range(1, sum(lam) + nv + 1)})
            rep.add({"check": "alternant at a=0 is classical", "lambda": list(lam), "n": nv, "sign": sign},
                    at0 == classical_schur(lam, nv), {"value": str(at0)})
    rep.notes.append({"searched": len(CONVENTION_SPACE)})
    return rep


def suite_oracle(seed: int = 0, models: int = 50, **_) -> Report:
    rep = Report("oracle", seed)
    scheme = ff_scheme()
    rng = _rng(seed, "oracle", 0)
    while len(rep.cases) < models:
        dims = GridDims(rng.randint(1, 4), rng.randint(1, 4))
        bnd = _random_boundary(rng, dims, {})
        if bnd is None:
            continue
        pt = random_point(rng, dims.n, dims.m)
        brute = partition_function(dims, bnd, scheme, pt)
        dp = partition_function_dp(dims, bnd, scheme, pt)
        rep.add({"mode": "point", "model": model_to_json(dims, bnd), "states": brute.state_count},
                brute.value == dp.value and brute.state_count == dp.state_count,
                {"point": point_to_json(pt), "brute": str(brute.value), "dp": str(dp.value)})
    for n in (1, 2, 3):
        dims, bnd = dwbc_model(n)
        brute = partition_function(dims, bnd, scheme)
        dp = partition_function_dp(dims, bnd, scheme)
        rep.add({"mode": "symbolic", "dwbc": n}, brute.value == dp.value,
                {"brute": str(brute.value), "dp": str(dp.value)})
    return rep


def suite_factor_dwbc(seed: int = 0, max_n: int = 3, **_) -> Report:
    rep = Report("factor-dwbc")
    for n in range(1, max_n + 1):
        r = dwbc_factor_report(n)
        js = r.to_json()
        js.pop("value")
        rep.add({"n": n, **js}, r.complete)
    return rep


SUITES: dict[str, Callable[..., Report]] = {
    "admissibility": suite_admissibility,
    "ybe": suite_ybe,
    "relations": suite_relations,
    "train": suite_train,
    "exchange": suite_exchange,
    "inverse": suite_inverse,
    "switch": suite_switch,
    "theorem": suite_theorem,
    "proposition": suite_proposition,
    "symmetry": suite_symmetry,
    "schur-calibration": suite_schur_calibration,
    "oracle": suite_oracle,
    "factor-dwbc": suite_factor_dwbc,
}


def run_suite(name: str, **options) -> Report:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITES)}") from None
    options = {k: v for k, v in options.items() if v is not None}
    return fn(**options)
