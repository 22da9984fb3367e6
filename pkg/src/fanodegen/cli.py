"""Command-line entry point: ``fanodegen <command> ...``.

Exit codes: 0 when everything passes, 1 when a check fails or a search comes
up empty, 2 on usage, parse or file errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

from . import cases
from .constructions import construct_named
from .core.field import QQ, field_from_name
from .core.ring import grevlex, parse_order
from .deform.cohomology import normal_module_dim, obstruction_space, t1_dim
from .errors import BudgetExceeded, FanoDegenError
from .formats import read_ideal, read_poly
from .groebner.hilbert import hilbert_data
from .groebner.ideal import groebner_basis
from .simplicial import catalog, catalog_cone, sr_ideal
from .toric.degenerate import find_degeneration
from .toric.polytope import LatticePolytope

log = logging.getLogger("fanodegen")


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _complex_name(name: str) -> str:
    name = name.strip().replace("’", "'")
    if name.endswith("p") and name[:-1] in ("T8",):
        name = name[:-1] + "'"
    return name


def _load(args, field=QQ):
    if (args.source is None) == (args.case is None):
        raise UsageError("give exactly one of an .ideal file or --case NAME")
    if args.case is not None:
        I = construct_named(args.case, args.seed)
        if field != QQ:
            from .groebner.ideal import Ideal

            R = I.ring.with_field(field)
            I = Ideal(R, [g.to_ring(R) for g in I.generators])
        return I, args.case
    return read_ideal(args.source, field), args.source


def _rational_only(args):
    if getattr(args, "field", "rational") not in ("rational", "QQ"):
        raise UsageError("deformation invariants are computed over the rationals only")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(_dump({"schema": cases.SCHEMA, **payload}))
    else:
        print(text)


# --------------------------------------------------------------------------
# commands


def cmd_sr(args) -> int:
    name = _complex_name(args.complex)
    K = catalog_cone(name) if args.join_point else catalog(name)
    I = sr_ideal(K)
    gens = [str(g) for g in I.generators]
    _emit(args, {"command": "sr", "complex": name, "join_point": args.join_point,
                 "generators": gens, "variables": list(I.ring.variables)}, "\n".join(gens))
    return 0


def cmd_gb(args) -> int:
    I, src = _load(args, field_from_name(args.field))
    order = parse_order(args.order) if args.order else grevlex()
    G = groebner_basis(I, order, max_pairs=args.budget_pairs)
    gens = [str(g) for g in G.basis]
    _emit(args, {"command": "gb", "source": src, "order": args.order or "grevlex",
                 "field": args.field, "basis": gens}, "\n".join(gens))
    return 0


def cmd_hilbert(args) -> int:
    I, src = _load(args, field_from_name(args.field))
    H = hilbert_data(I)
    text = (f"dim {H.dimension}\ndegree {H.degree}\n"
            f"hilbert_polynomial {H.polynomial_str()}")
    if H.genus is not None:
        text += f"\ngenus {H.genus}"
    _emit(args, {"command": "hilbert", "source": src, **H.to_json()}, text)
    return 0


def cmd_t1(args) -> int:
    _rational_only(args)
    I, src = _load(args)
    v = t1_dim(I)
    _emit(args, {"command": "t1", "source": src, "seed": args.seed, "t1": v}, str(v))
    return 0


def cmd_t2(args) -> int:
    _rational_only(args)
    I, src = _load(args)
    T = obstruction_space(I)
    if args.bound_only:
        v = T.dimension_upper_bound()
        _emit(args, {"command": "t2", "source": src, "seed": args.seed, "t2_upper_bound": v}, f"<= {v}")
    else:
        v = T.exact_dimension()
        _emit(args, {"command": "t2", "source": src, "seed": args.seed, "t2": v}, str(v))
    return 0


def cmd_normal_module(args) -> int:
    _rational_only(args)
    I, src = _load(args)
    v, _ = normal_module_dim(I)
    _emit(args, {"command": "normal-module", "source": src, "seed": args.seed, "h0N": v}, str(v))
    return 0


def _report_line(r: cases.CaseReport) -> str:
    out = [f"{r.status:7} {r.case_id}"]
    for q in r.quantities:
        mark = "ok  " if q.passed else "FAIL"
        out.append(f"    {mark} {q.name}: expected {q.expected}, computed {q.computed} [{q.provenance}]")
    for a in r.assumptions:
        out.append(f"    note: {a}")
    return "\n".join(out)


def _run(job):
    case_id, ctx = job
    return cases.run_case(case_id, ctx)


def cmd_verify(args) -> int:
    if args.target == "all":
        ids = sorted(cases.CASES)
    elif args.target in cases.CASES:
        ids = [args.target]
    else:
        raise UsageError(f"unknown case {args.target!r}; known: {', '.join(sorted(cases.CASES))}")
    skip = set(args.skip or [])
    if "external-data" in skip:
        ids = [i for i in ids if i not in cases.EXTERNAL]
    ids = [i for i in ids if i not in skip]
    ctx = cases.Context(seed=args.seed, max_order=args.max_order, budget=args.budget,
                        data_dir=args.data_dir, timings=args.timings)
    jobs = [(i, ctx) for i in ids]
    if args.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            reports = list(pool.map(_run, jobs))
    else:
        reports = [_run(j) for j in jobs]
    reports.sort(key=lambda r: r.case_id)
    if args.json:
        print(_dump([r.to_json() for r in reports]))
    else:
        print("\n".join(_report_line(r) for r in reports))
    return 0 if all(r.passed for r in reports) else 1


def cmd_degenerate(args) -> int:
    P = LatticePolytope(read_poly(args.polytope))
    name = _complex_name(args.target)
    target = catalog_cone(name) if not args.no_join_point else catalog(name)
    payload = {"command": "degenerate", "polytope": args.polytope, "target": name,
               "budget": args.budget, "seed": args.seed}
    npts = len(P.lattice_points())
    if npts != len(target.vertices):
        payload.update(found=False, reason=f"{npts} lattice points, target has {len(target.vertices)} vertices")
        _emit(args, payload, f"not found: {payload['reason']}")
        return 1
    try:
        D = find_degeneration(P, target, budget=args.budget, seed=args.seed)
    except BudgetExceeded:
        payload.update(found=False, reason="not found within budget")
        _emit(args, payload, f"not found within budget {args.budget}")
        return 1
    heights = [int(h) for h in D.heights]
    bij = {str(k): str(v) for k, v in sorted(D.bijection.items(), key=lambda kv: str(kv[0]))}
    payload.update(found=True, attempts=D.attempts, heights=heights, bijection=bij,
                   simplices=[list(s) for s in D.triangulation.simplices])
    text = (f"found after {D.attempts} pulling orders\nheights {' '.join(map(str, heights))}\n"
            + "\n".join(f"{k} -> {v}" for k, v in bij.items()))
    _emit(args, payload, text)
    return 0


# --------------------------------------------------------------------------
# parser


def _ideal_args(p):
    p.add_argument("source", nargs="?", help=".ideal file")
    p.add_argument("--case", help="a registered construction instead of a file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--field", default="rational", help="rational or fp<p>")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fanodegen", description="Degenerations and deformations of toric Fano threefolds.")
    ap.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sr", help="Stanley-Reisner ideal of a catalog complex")
    p.add_argument("complex")
    p.add_argument("--join-point", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sr)

    p = sub.add_parser("gb", help="reduced Groebner basis")
    _ideal_args(p)
    p.add_argument("--order", help="grevlex | lex | weight:<csv> | elim:<vars>")
    p.add_argument("--budget-pairs", type=int, default=500_000)
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("hilbert", help="dimension, degree and Hilbert polynomial")
    _ideal_args(p)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("t1", help="dimension of (T^1)_0")
    _ideal_args(p)
    p.set_defaults(func=cmd_t1)

    p = sub.add_parser("t2", help="dimension of (T^2)_0")
    _ideal_args(p)
    p.add_argument("--bound-only", action="store_true", help="modular upper bound only")
    p.set_defaults(func=cmd_t2)

    p = sub.add_parser("normal-module", help="dimension of Hom(I/I^2, S/I)_0")
    _ideal_args(p)
    p.set_defaults(func=cmd_normal_module)

    p = sub.add_parser("verify", help="run registered checks")
    p.add_argument("target", help="case id or 'all'")
    p.add_argument("--skip", action="append", help="case id or 'external-data'; repeatable")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-order", type=int, default=8)
    p.add_argument("--budget", type=int, default=200)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--data-dir", help="directory with user-supplied .poly files")
    p.add_argument("--timings", action="store_true", help="record runtimes (reports stop being byte-stable)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("degenerate", help="search a triangulation matching a target complex")
    p.add_argument("polytope", help=".poly file")
    p.add_argument("target", help="catalog complex, joined with the interior point")
    p.add_argument("--budget", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-join-point", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_degenerate)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"fanodegen: {e}", file=sys.stderr)
        return 1
    except (UsageError, FanoDegenError, OSError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"fanodegen: error: {msg}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"fanodegen: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
