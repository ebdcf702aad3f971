"""Command-line front end.

Subcommands: analyze, certify, verify, oracle, construct, report.
Exit codes: 0 success, 1 validation or verification failure, 2 resource
guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .cones import MAX_SPAN_DIM, enumerate_rays
from .constructions import (
    bipartite_truncation,
    complete_bipartite,
    complete_graph,
    deep_truncate,
    graphic_matroid,
    graphical_zonotope,
    hyperorder_polytope,
    matroid_polytope,
    permutahedral_wedge,
    product_polytope,
    stack_vertex,
    uniform_matroid,
)
from .corpus import corpus, facet_flats
from .deduction import conclude_indecomposable, saturate, verify_certificate
from .errors import ContractError, InputError, ResourceLimitError
from .exact import rat_str
from .framework import (
    Framework,
    dc_dimension,
    dependency_partition,
    deformation_space,
    is_connected,
    is_indecomposable,
)
from .io import (
    AnalysisReport,
    certificate_from_obj,
    certificate_to_obj,
    framework_to_obj,
    load_geometry,
    polytope_to_obj,
    save_obj,
)
from .polytope import MAX_VERTICES, PolytopeV, facets, framework_of, matroid_coordinate_test

OK, FAILURE, GUARD = 0, 1, 2


def _as_framework(obj) -> Framework:
    if isinstance(obj, PolytopeV):
        return framework_of(obj)
    return obj


def _analysis(obj, descriptor, want_rays, want_deps, max_rays_dim) -> AnalysisReport:
    t0 = time.time()
    fw = _as_framework(obj)
    ds = deformation_space(fw)
    blocks = [sorted([list(e) for e in b]) for b in dependency_partition(fw)]
    rays = None
    if want_rays:
        cone = enumerate_rays(ds, max_span_dim=max_rays_dim)
        rays = [[rat_str(x) for x in r] for r in cone.rays]
    return AnalysisReport(
        descriptor=descriptor,
        n_vertices=len(fw.vertex_ids),
        n_edges=len(fw.edges),
        dim=fw.dim,
        connected=is_connected(fw),
        dc_dimension=ds.dim,
        indecomposable=is_indecomposable(fw),
        blocks=blocks if want_deps else [],
        rays=rays,
        seconds=round(time.time() - t0, 6),
    )


def _print_report(rep: AnalysisReport, as_json: bool):
    if as_json:
        print(json.dumps(rep.to_obj(), indent=1, sort_keys=True))
        return
    print(f"input: {rep.descriptor}")
    print(f"vertices: {rep.n_vertices}  edges: {rep.n_edges}  ambient dim: {rep.dim}")
    print(f"connected: {rep.connected}")
    print(f"deformation cone dimension: {rep.dc_dimension}")
    print(f"indecomposable: {rep.indecomposable}")
    if rep.blocks:
        print(f"dependency blocks ({len(rep.blocks)}):")
        for b in rep.blocks:
            print("  " + ", ".join("-".join(e) for e in b))
    if rep.rays is not None:
        print(f"rays ({len(rep.rays)}):")
        for r in rep.rays:
            print("  (" + ", ".join(r) + ")")
    print(f"elapsed: {rep.seconds}s")


def cmd_analyze(args) -> int:
    obj = load_geometry(args.file)
    if isinstance(obj, PolytopeV) and len(obj.vertex_ids) > args.max_vertices:
        raise ResourceLimitError(f"more than {args.max_vertices} vertices")
    rep = _analysis(obj, args.file, args.rays, args.deps, args.max_rays_dim)
    _print_report(rep, args.json)
    return OK


def cmd_oracle(args) -> int:
    obj = load_geometry(args.file)
    fw = _as_framework(obj)
    verdict = is_indecomposable(fw)
    dc = dc_dimension(fw)
    if args.json:
        print(json.dumps({"indecomposable": verdict, "dc_dimension": dc}))
    else:
        print(f"indecomposable: {verdict}")
        print(f"deformation cone dimension: {dc}")
    return OK


def cmd_matroid_test(args) -> int:
    """Necessary-condition check: can the input be normally equivalent to a
    0/1 deformed permutahedron?  Only meaningful for indecomposable inputs,
    so the oracle gates it."""
    obj = load_geometry(args.file)
    if not isinstance(obj, PolytopeV):
        print("error: the coordinate test needs a polytope input", file=sys.stderr)
        return FAILURE
    if not is_indecomposable(framework_of(obj)):
        print("not applicable: input is decomposable", file=sys.stderr)
        return FAILURE
    verdict = matroid_coordinate_test(obj)
    if verdict:
        print("inconclusive: every coordinate takes at most two values")
    else:
        print("not normally equivalent to a matroid polytope "
              "(a coordinate takes three or more values)")
    return OK


def cmd_certify(args) -> int:
    obj = load_geometry(args.file)
    fw = _as_framework(obj)
    flats = None
    if args.flats == "facets":
        if not isinstance(obj, PolytopeV):
            print("error: facet flats need a polytope input", file=sys.stderr)
            return FAILURE
        flats = facet_flats(obj)
    state = saturate(fw)
    proved, _ = conclude_indecomposable(state, flats)
    conclusion = {
        "indecomposable_proved": proved,
        "classes": len(state.classes()),
    }
    out = args.output or (args.file + ".cert.json")
    save_obj(certificate_to_obj(state.log, conclusion), out)
    print(f"certificate with {len(state.log)} steps written to {out}")
    print(f"indecomposability proved: {proved}")
    return OK


def cmd_verify(args) -> int:
    obj = load_geometry(args.file)
    fw = _as_framework(obj)
    with open(args.certificate, "r", encoding="utf-8") as fh:
        steps = certificate_from_obj(json.load(fh))
    ok, idx, reason = verify_certificate(fw, steps)
    if ok:
        print(f"certificate valid ({len(steps)} steps replayed)")
        return OK
    print(f"invalid certificate: step {idx}: {reason}", file=sys.stderr)
    return FAILURE


def _construct(args):
    fam = args.family
    if fam == "zonotope":
        if args.bipartite:
            n, m = args.bipartite
            g = complete_bipartite(n, m)
        else:
            g = complete_graph(args.complete or 3)
        return graphical_zonotope(g).polytope
    if fam == "bipartite-trunc":
        return bipartite_truncation(args.n, args.m, args.kind).polytope
    if fam == "wedge":
        base = load_geometry(args.input)
        if not isinstance(base, PolytopeV):
            raise InputError("wedge needs a polytope input")
        return permutahedral_wedge(base, args.coord, args.side)
    if fam == "matroid":
        if args.uniform:
            mb = uniform_matroid(*args.uniform)
        else:
            mb = graphic_matroid(complete_graph(args.graphic_complete))
        return matroid_polytope(mb).polytope
    if fam == "product":
        a = load_geometry(args.inputs[0])
        b = load_geometry(args.inputs[1])
        if not (isinstance(a, PolytopeV) and isinstance(b, PolytopeV)):
            raise InputError("product needs polytope inputs")
        return product_polytope(a, b)
    if fam == "hyperorder":
        return hyperorder_polytope(args.n, args.k)
    if fam == "stack":
        base = load_geometry(args.input)
        if not isinstance(base, PolytopeV):
            raise InputError("stack needs a polytope input")
        fs = facets(base)
        chosen = [fs[i].vertex_ids for i in args.facets]
        return stack_vertex(base, chosen).polytope
    if fam == "truncate":
        base = load_geometry(args.input)
        if not isinstance(base, PolytopeV):
            raise InputError("truncate needs a polytope input")
        return deep_truncate(base, args.vertices.split(",")).polytope
    if fam == "corpus":
        entry = corpus().get(args.name)
        if entry is None:
            raise InputError(f"unknown corpus fixture {args.name!r}")
        return entry.polytope if entry.polytope is not None else entry.framework
    raise InputError(f"unknown family {fam!r}")


def cmd_construct(args) -> int:
    made = _construct(args)
    if isinstance(made, PolytopeV):
        save_obj(polytope_to_obj(made), args.output)
        kind, n = "polytope", len(made.vertex_ids)
    else:
        save_obj(framework_to_obj(made), args.output)
        kind, n = "framework", len(made.vertex_ids)
    print(f"{kind} with {n} vertices written to {args.output}")
    return OK


def cmd_report(args) -> int:
    if args.topic != "paper":
        print(f"error: unknown report topic {args.topic!r}", file=sys.stderr)
        return FAILURE
    from .report import run_all

    if args.json:
        results = run_all()
        print(
            json.dumps(
                [
                    {
                        "criterion": r.criterion,
                        "label": r.label,
                        "passed": r.passed,
                        "detail": r.detail,
                        "seconds": round(r.seconds, 3),
                    }
                    for r in results
                ],
                indent=1,
            )
        )
    else:
        results = run_all(progress=print)
        passed = sum(1 for r in results if r.passed)
        print(f"\n{passed}/{len(results)} rows pass")
    return OK if all(r.passed for r in results) else FAILURE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="defocone",
        description="Minkowski decomposability and deformation cones, exactly.",
    )
    sub = ap.add_subparsers(dest="command")

    p = sub.add_parser("analyze", help="deformation-cone analysis of a file")
    p.add_argument("file")
    p.add_argument("--rays", action="store_true")
    p.add_argument("--deps", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-rays-dim", type=int, default=MAX_SPAN_DIM)
    p.add_argument("--max-vertices", type=int, default=MAX_VERTICES)

    p = sub.add_parser("oracle", help="ground-truth decomposability only")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser(
        "matroid-test",
        help="two-value coordinate test (gated on the oracle)",
    )
    p.add_argument("file")

    p = sub.add_parser("certify", help="run the deduction engine, write a certificate")
    p.add_argument("file")
    p.add_argument("--flats", choices=["facets"], default=None)
    p.add_argument("-o", "--output")

    p = sub.add_parser("verify", help="replay a certificate")
    p.add_argument("file")
    p.add_argument("certificate")

    p = sub.add_parser("construct", help="emit a family member as a file")
    p.add_argument(
        "family",
        choices=[
            "zonotope",
            "bipartite-trunc",
            "wedge",
            "matroid",
            "product",
            "hyperorder",
            "stack",
            "truncate",
            "corpus",
        ],
    )
    p.add_argument("-o", "--output", required=True)
    p.add_argument(
        "--seedless",
        action="store_true",
        help="accepted for interface compatibility; generators are always deterministic",
    )
    p.add_argument("--complete", type=int)
    p.add_argument("--bipartite", type=int, nargs=2, metavar=("N", "M"))
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--kind", choices=["P", "Q"], default="P")
    p.add_argument("--coord", type=int, default=1)
    p.add_argument("--side", choices=["min", "max"], default="min")
    p.add_argument("--input")
    p.add_argument("--inputs", nargs=2)
    p.add_argument("--uniform", type=int, nargs=2, metavar=("K", "N"))
    p.add_argument("--graphic-complete", type=int)
    p.add_argument("--facets", type=int, nargs="+", default=[0])
    p.add_argument("--vertices")
    p.add_argument("--name")

    p = sub.add_parser("report", help="reproduction table")
    p.add_argument("topic")
    p.add_argument("--json", action="store_true")
    return ap


COMMANDS = {
    "analyze": cmd_analyze,
    "oracle": cmd_oracle,
    "matroid-test": cmd_matroid_test,
    "certify": cmd_certify,
    "verify": cmd_verify,
    "construct": cmd_construct,
    "report": cmd_report,
}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors; reserve 2 for guards
        return FAILURE if exc.code else OK
    if args.command is None:
        ap.print_help()
        return FAILURE
    try:
        return COMMANDS[args.command](args)
    except ResourceLimitError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return GUARD
    except (InputError, ContractError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILURE


if __name__ == "__main__":
    sys.exit(main())
