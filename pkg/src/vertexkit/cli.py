"""Command-line interface.  Exit codes: 0 success, 1 verification failure, 2 usage error."""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from .algebra import NonExactDivision
from .lattice import (
    GridDims,
    base_model,
    count_states,
    dwbc_model,
    enumerate_states,
    model_from_json,
    render_state,
)
from .partition import ENGINES, ModelTooLarge, empty_site_product, normalized_partition
from .sampling import point_from_json, point_to_json, with_redraw
from .schur import (
    SIGNS,
    calibrate_schur_specialization,
    dwbc_factor_report,
    factorial_schur_alternant,
)
from .switchop import (
    WORD_FORMS,
    InvalidStep,
    base_signatures,
    direct_partition,
    reduce_to_base,
    transport,
    word_for_signatures,
)
from .verify import SCHEMA, SUITES, run_suite
from .weights import (
    KINDS,
    WIRINGS,
    CrossWeightSet,
    DegenerateCross,
    Orientation,
    get_scheme,
    solve_cross_weights,
    ybe_residuals,
)


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False)


def _emit(obj, fmt: str, text: str | None = None) -> None:
    if fmt == "json" or text is None:
        print(_dump(obj) if isinstance(obj, dict) else obj)
    else:
        print(text)


def _load_point(path: str) -> dict:
    try:
        data = json.loads(Path(path).read_text())
        return point_from_json(data)
    except (OSError, ValueError) as e:
        raise UsageError(f"cannot read point file {path}: {e}") from None


def _model(args):
    chosen = [v for v in (args.dwbc, args.model, args.base) if v is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --dwbc N, --model FILE, --base N,M,D")
    if args.dwbc is not None:
        if args.dwbc < 1:
            raise UsageError("--dwbc needs n >= 1")
        return dwbc_model(args.dwbc)
    if args.base is not None:
        if len(args.base) != 3:
            raise UsageError("--base takes N,M,D")
        return base_model(*args.base)
    try:
        return model_from_json(Path(args.model).read_text())
    except (OSError, ValueError, KeyError) as e:
        raise UsageError(f"cannot read model {args.model}: {e}") from None


def _add_model_args(p):
    g = p.add_argument_group("model")
    g.add_argument("--dwbc", type=int, metavar="N", help="n x n domain wall boundary")
    g.add_argument("--model", metavar="FILE", help="model JSON {rows, cols, left, top, right, bottom}")
    g.add_argument("--base", type=_ints, metavar="N,M,D", help="base model with d paths")


def _add_mode_args(p, symbolic_default=False):
    g = p.add_mutually_exclusive_group(required=not symbolic_default)
    g.add_argument("--symbolic", action="store_true")
    g.add_argument("--point", metavar="FILE", help="JSON object mapping variable names to rationals")
    g.add_argument("--points", type=int, metavar="K", help="K seeded random points (needs --seed)")
    p.add_argument("--seed", type=int)


def _points(args, rows, cols, fn):
    """[(point, value)] for --point or --points."""
    if args.point:
        pt = _load_point(args.point)
        return [(pt, fn(pt))]
    if args.seed is None:
        raise UsageError("--points needs --seed")
    rng = random.Random(args.seed)
    return [with_redraw(rng, rows, cols, fn) for _ in range(args.points)]


# -- subcommands ---------------------------------------------------------------


def cmd_enumerate(args) -> int:
    dims, bnd = _model(args)
    out = {"schema": SCHEMA, "states": count_states(dims, bnd)}
    if args.render:
        out["renders"] = [render_state(s) for s in enumerate_states(dims, bnd)]
    if args.format == "text":
        print(out["states"])
        for r in out.get("renders", []):
            print()
            print(r)
    else:
        print(_dump(out))
    return 0


def cmd_partition(args) -> int:
    dims, bnd = _model(args)
    scheme = get_scheme(args.scheme)
    engine = ENGINES[args.engine]
    if args.symbolic:
        res = engine(dims, bnd, scheme)
        value = normalized_partition(dims, bnd, scheme, engine=args.engine) if args.normalized else res.value
        out = {"schema": SCHEMA, "mode": "symbolic", "state_count": res.state_count, "value": str(value)}
        _emit(out, args.format, str(value))
        return 0

    def at(pt):
        res = engine(dims, bnd, scheme, pt)
        v = res.value
        if args.normalized:
            norm = empty_site_product(dims, scheme, pt)
            v = Fraction(v) / norm
        return res.state_count, v

    rows = _points(args, dims.n, dims.m, at)
    values = [{"point": point_to_json(p), "value": str(v)} for p, (_, v) in rows]
    out = {"schema": SCHEMA, "mode": "point", "state_count": rows[0][1][0], "values": values}
    _emit(out, args.format, "\n".join(v["value"] for v in values))
    return 0


def _pair(text):
    pair = _ints(text)
    if len(pair) != 2:
        raise argparse.ArgumentTypeError("--pair takes two labels, e.g. 1,2")
    return pair


def cmd_ybe(args) -> int:
    scheme = get_scheme(args.scheme)
    o = Orientation(args.orientation)
    if args.pair[0] == args.pair[1]:
        raise UsageError("--pair needs two distinct labels")
    rows = cols = max(max(args.pair), args.line or 1)
    if args.action == "solve":
        if args.symbolic:
            cross = solve_cross_weights(scheme, args.pair, o, wiring=args.wiring)
            out = {"schema": SCHEMA, "pair": list(args.pair), "orientation": o.value, "mode": "symbolic",
                   "rank": cross.rank, "weights": {str(k): str(cross[k]) for k in KINDS},
                   "ray": {str(k): str(v) for k, v in cross.numerators().items()}}
            _emit(out, args.format, "\n".join(f"{k} = {cross[k]}" for k in KINDS))
            return 0
        sols = _points(args, rows, cols, lambda pt: solve_cross_weights(scheme, args.pair, o, point=pt, wiring=args.wiring))
        out = {"schema": SCHEMA, "pair": list(args.pair), "orientation": o.value, "mode": "point",
               "solutions": [{"point": point_to_json(p), "rank": c.rank, "weights": {str(k): str(c[k]) for k in KINDS}}
                             for p, c in sols]}
        text = "\n\n".join("\n".join(f"{k} = {c[k]}" for k in KINDS) for _, c in sols)
        _emit(out, args.format, text)
        return 0
    # check
    line = args.line or 1
    if args.symbolic:
        cross = solve_cross_weights(scheme, args.pair, o, wiring=args.wiring)
        ray = CrossWeightSet(cross.pair, cross.orientation, cross.numerators(), cross.rank)
        res = ybe_residuals(scheme, ray, line, wiring=args.wiring)
        nonzero = [str(r) for r in res if r != 0]
        checks = [{"mode": "symbolic", "nonzero_residuals": nonzero, "ok": not nonzero}]
    else:
        def check(pt):
            cross = solve_cross_weights(scheme, args.pair, o, point=pt, wiring=args.wiring)
            res = ybe_residuals(scheme, cross, line, point=pt, wiring=args.wiring)
            return cross.rank, [str(r) for r in res if r != 0]

        checks = [{"point": point_to_json(p), "rank": rank, "nonzero_residuals": nz, "ok": not nz}
                  for p, (rank, nz) in _points(args, max(rows, line), max(cols, line), check)]
    passed = all(c["ok"] for c in checks)
    print(_dump({"schema": SCHEMA, "pair": list(args.pair), "orientation": o.value, "line": line,
                 "residuals": 64, "passed": passed, "checks": checks}))
    return 0 if passed else 1


def cmd_reduce(args) -> int:
    if len(args.model_size) != 2:
        raise UsageError("--model-size takes N,M")
    dims = GridDims(*args.model_size)
    scheme = get_scheme(args.scheme)
    word = word_for_signatures(args.alpha, args.beta, dims, args.form)
    try:
        reached = transport(word, *base_signatures(len(args.alpha), dims.m))
        moves = {"reaches": [list(s) for s in reached], "ok": reached == (tuple(args.alpha), tuple(args.beta))}
    except InvalidStep as e:
        moves = {"error": str(e), "ok": False}
    if args.emit_word and not (args.symbolic or args.point or args.points):
        _emit({"schema": SCHEMA, "word": str(word), "transport": moves}, args.format, str(word))
        return 0
    if args.symbolic:
        red = reduce_to_base(args.alpha, args.beta, dims, scheme, form=args.form)
        direct = direct_partition(args.alpha, args.beta, dims, scheme)
        out = {"schema": SCHEMA, "word": str(word), "transport": moves, "mode": "symbolic", "value": str(red),
               "equal": red == direct}
        _emit(out, args.format, str(red))
        return 0 if out["equal"] and moves["ok"] else 1

    def at(pt):
        return (reduce_to_base(args.alpha, args.beta, dims, scheme, pt, form=args.form),
                direct_partition(args.alpha, args.beta, dims, scheme, pt))

    rows = _points(args, dims.n, dims.m, at)
    results = [{"point": point_to_json(p), "reduced": str(r), "direct": str(d), "equal": r == d} for p, (r, d) in rows]
    ok = moves["ok"] and all(r["equal"] for r in results)
    out = {"schema": SCHEMA, "word": str(word), "transport": moves, "mode": "point", "passed": ok, "results": results}
    _emit(out, args.format, "\n".join(r["reduced"] for r in results))
    return 0 if ok else 1


def cmd_verify(args) -> int:
    options = {"seed": args.seed, "points": args.points, "n": args.n, "m": args.m}
    if args.example:
        options["example"] = True
    report = run_suite(args.suite, **options).to_json()
    print(_dump(report))
    return 0 if report["passed"] else 1


def cmd_schur(args) -> int:
    if args.action == "alternant":
        if args.lam is None or args.n is None:
            raise UsageError("schur alternant needs --lambda and --n")
        value = factorial_schur_alternant(args.lam, args.n, args.sign)
        _emit({"schema": SCHEMA, "lambda": list(args.lam), "n": args.n, "sign": args.sign, "value": str(value)},
              args.format, str(value))
        return 0
    if args.action == "calibrate":
        report = calibrate_schur_specialization()
        print(_dump({"schema": SCHEMA, **report}))
        return 0 if report["unique"] else 1
    n = args.n or 3
    report = dwbc_factor_report(n)
    print(_dump({"schema": SCHEMA, "n": n, **report.to_json()}))
    return 0 if report.complete else 1


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vertexkit", description="Exact six-vertex model toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, default):
        p.add_argument("--format", choices=("text", "json"), default=default)

    p = sub.add_parser("enumerate", help="count (and draw) admissible states")
    _add_model_args(p)
    p.add_argument("--render", action="store_true")
    fmt(p, "json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("partition", help="partition function")
    _add_model_args(p)
    p.add_argument("--scheme", default="ff")
    _add_mode_args(p)
    p.add_argument("--normalized", action="store_true", help="divide by a1 over all sites")
    p.add_argument("--engine", choices=sorted(ENGINES), default="dp")
    fmt(p, "text")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("ybe", help="solve or check cross-vertex weights")
    p.add_argument("action", choices=("solve", "check"))
    p.add_argument("--scheme", default="ff")
    p.add_argument("--pair", type=_pair, required=True)
    p.add_argument("--orientation", choices=("h", "v"), required=True)
    p.add_argument("--line", type=int, help="bulk line label for check (default 1)")
    p.add_argument("--wiring", choices=WIRINGS, default="strand")
    _add_mode_args(p)
    fmt(p, "text")
    p.set_defaults(func=cmd_ybe)

    p = sub.add_parser("reduce", help="Z_{alpha,beta} from the base model by switch operators")
    p.add_argument("--model-size", type=_ints, required=True, metavar="N,M")
    p.add_argument("--alpha", type=_ints, required=True)
    p.add_argument("--beta", type=_ints, required=True)
    p.add_argument("--scheme", default="ff")
    p.add_argument("--form", choices=WORD_FORMS, default="canonical")
    p.add_argument("--emit-word", action="store_true")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--symbolic", action="store_true")
    g.add_argument("--point", metavar="FILE")
    g.add_argument("--points", type=int, metavar="K")
    p.add_argument("--seed", type=int)
    fmt(p, "json")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--points", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--example", action="store_true", help="theorem: add the 5x5 worked instance")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("schur", help="factorial Schur alternants and DWBC factorization")
    p.add_argument("action", choices=("alternant", "calibrate", "factor-dwbc"))
    p.add_argument("--lambda", dest="lam", type=_ints)
    p.add_argument("--n", type=int)
    p.add_argument("--sign", choices=SIGNS, default="plus")
    fmt(p, "text")
    p.set_defaults(func=cmd_schur)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"vertexkit: error: {e}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, ModelTooLarge) as e:
        print(f"vertexkit: error: {e}", file=sys.stderr)
        return 2
    except (DegenerateCross, NonExactDivision, ZeroDivisionError) as e:
        print(f"vertexkit: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
