"""Command-line front end.

Exit status: 0 success, 1 a checked claim failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .core import WordSyntaxError
from .finsemi import FiniteSemigroup, SubSemigroup, green_index, power_stabilizer, rees_index, relative_green
from .fpsemi import cayley_graph, enumerate_ball, indecomposables, solve_square_root
from .graphs import graph_semigroup, injective_graph_endos
from .io import Presentation, load, parse_presentation
from .morph import (
    GeneratorMap, NotFound, certify, confidence, find_endomorphisms, non_cohopf_witness,
    non_hopf_witness,
)
from .rewriting import FuelExhausted, RewritingSystem
from .schematic import FamilyMap, SchematicError, SchematicGraph, parse_vertex, schematic_check_endo

EXIT_OK, EXIT_CLAIM, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, data, text: str | None = None) -> None:
    if getattr(args, "json", False) or text is None:
        print(json.dumps(data, indent=2, sort_keys=False))
    else:
        print(text)


def _presentation(args) -> Presentation:
    src = args.system
    if src.startswith("builtin:"):
        name = src.split(":", 1)[1]
        if name not in catalog.PRESENTATIONS:
            raise UsageError(f"unknown built-in {name!r}; choose from {', '.join(catalog.PRESENTATIONS)}")
        pres = parse_presentation(catalog.PRESENTATIONS[name], src)
    else:
        pres = load(src, "presentation")
    return pres.reorder(getattr(args, "order", None))


def _semigroup(args):
    return _presentation(args).semigroup(args.fuel)


def _word(s, text: str, flag: str = "--word"):
    try:
        return s.word(text)
    except WordSyntaxError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _table(args) -> FiniteSemigroup:
    if getattr(args, "graph", None):
        return graph_semigroup(load(args.graph, "graph"))
    if not getattr(args, "table", None):
        raise UsageError("give --table or --graph")
    return load(args.table, "table")


def _sub(s: FiniteSemigroup, text: str) -> SubSemigroup:
    names = [x.strip() for x in text.split(",") if x.strip()]
    for x in names:
        if x not in s.elements:
            raise UsageError(f"--sub: {x!r} is not an element")
    return s.subsemigroup(names)


# ------------------------------------------------------------ commands

def cmd_reduce(args):
    pres = _presentation(args)
    rs = pres.system()
    w = _word(rs.alphabet, args.word)
    steps = [w]
    while (nxt := rs.reduce_once(steps[-1])) is not None:
        steps.append(nxt)
    if args.trace:
        print(" -> ".join(str(x) for x in steps))
    else:
        print(steps[-1])


def cmd_complete(args):
    pres = _presentation(args)
    rs = RewritingSystem.from_relations(pres.alphabet, pres.all_pairs())
    done = rs.complete(args.fuel)
    rules = [[str(r.lhs), str(r.rhs)] for r in done.rules]
    _emit(args, {"letters": list(pres.alphabet), "rules": rules},
          "\n".join(f"rule: {l} -> {r}" for l, r in rules))


def cmd_confluence(args):
    rs = _presentation(args).system()
    ok, bad = rs.is_confluent()
    pairs = rs.critical_pairs()
    data = {"confluent": ok, "critical_pairs": len(pairs),
            "unresolved": [{"overlap": str(cp.overlap_word), "left": str(cp.left_result),
                            "right": str(cp.right_result)} for cp in bad]}
    _emit(args, data, f"{'confluent' if ok else 'not confluent'}: "
                      f"{len(pairs)} critical pairs, {len(bad)} unresolved"
          + "".join(f"\n  {cp}" for cp in bad))
    return EXIT_OK if ok else EXIT_CLAIM


def cmd_enumerate(args):
    s = _semigroup(args)
    ball = [str(e) for e in enumerate_ball(s, args.radius)]
    _emit(args, {"radius": args.radius, "count": len(ball), "elements": ball},
          "\n".join(ball))


def cmd_cayley(args):
    s = _semigroup(args)
    cg = cayley_graph(s, args.radius)
    dot = cg.to_dot()
    if args.dot in (None, "-"):
        sys.stdout.write(dot)
    else:
        Path(args.dot).write_text(dot)
        print(f"wrote {args.dot}")


def cmd_indecomposables(args):
    s = _semigroup(args)
    rep = indecomposables(s, args.radius, max(args.search_radius, args.radius))
    data = {"elements": [str(e) for e in rep.elements], "ball_radius": rep.ball_radius,
            "search_radius": rep.search_radius,
            "factorisations": {str(k): [str(u), str(v)] for k, (u, v) in rep.witnesses.items()}}
    _emit(args, data, str(rep))


def cmd_roots(args):
    s = _semigroup(args)
    target = s.element(_word(s, args.target, "--target"))
    roots = [str(u) for u in solve_square_root(s, target, args.radius)]
    _emit(args, {"target": str(target), "roots": roots}, ", ".join(roots) or "(none)")


def cmd_indices(args):
    s = _table(args)
    t = _sub(s, args.sub)
    _emit(args, {"rees": rees_index(t), "green": green_index(t)},
          json.dumps({"rees": rees_index(t), "green": green_index(t)}))


def cmd_green(args):
    s = _table(args)
    t = _sub(s, args.sub)
    classes = relative_green(t, args.kind).named()
    _emit(args, {"kind": args.kind, "classes": classes},
          "\n".join("{" + ", ".join(c) + "}" for c in classes))


def cmd_stabilizer(args):
    s = _table(args)
    t = _sub(s, args.sub)
    phi = _parse_pairs(args.map)
    missing = set(s.elements) - set(phi)
    if missing:
        raise UsageError(f"--map must be total; missing {sorted(missing)}")
    try:
        cert = power_stabilizer(s, t, phi)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    data = {"k": cert.k, "m": cert.m, "power": cert.power, "per_generator": cert.per_generator,
            "image_in_t": cert.image_in_t, "bijective_on_complement": cert.bijective_on_complement,
            "first_power_image": cert.first_power_image, "stabilized_image": cert.stabilized_image}
    _emit(args, data, f"exponent {cert.power} (k={cert.k}, m={cert.m}); "
                      f"T phi^{cert.power} = {{{', '.join(cert.stabilized_image)}}}")


def _parse_pairs(text: str) -> dict[str, str]:
    out = {}
    for part in text.split(","):
        if part.strip():
            if "->" not in part:
                raise UsageError(f"--map: expected 'x->y' in {part.strip()!r}")
            a, b = (x.strip() for x in part.split("->", 1))
            out[a] = b
    return out


def _morph_source(args):
    if getattr(args, "table", None) or getattr(args, "graph", None):
        return _table(args)
    if not args.system:
        raise UsageError("give --system, --table or --graph")
    return _semigroup(args)


def _cert_json(cert) -> dict:
    out = cert.to_json()
    out["confidence"] = confidence(cert) if cert.is_endomorphism else "exact"
    return out


def cmd_morph(args):
    s = _morph_source(args)
    if args.action == "check":
        if not args.map:
            raise UsageError("morph check needs --map")
        try:
            m = GeneratorMap.parse(s, args.map)
        except (ValueError, WordSyntaxError) as exc:
            raise UsageError(f"--map: {exc}") from None
        _emit(args, _cert_json(certify(m, args.radius)))
        return
    if args.action == "search":
        certs = find_endomorphisms(s, args.image_len, args.radius)
        _emit(args, [_cert_json(c) for c in certs])
        return
    fn = non_hopf_witness if args.action == "hopf-witness" else non_cohopf_witness
    res = fn(s, args.image_len, args.radius)
    if isinstance(res, NotFound):
        _emit(args, {"status": "NotFound", "reason": res.reason})
    else:
        _emit(args, _cert_json(res))


def cmd_graph(args):
    if args.action == "semigroup":
        g = load(args.file, "graph")
        _emit(args, graph_semigroup(g).to_json())
    elif args.action == "endos":
        g = load(args.file, "graph")
        _emit(args, [e.as_dict() for e in injective_graph_endos(g)])
    elif args.action == "window":
        sg = _schematic(args)
        w = sg.window(args.lo, args.hi)
        if args.dot:
            text = w.to_dot("window")
            if args.dot == "-":
                sys.stdout.write(text)
            else:
                Path(args.dot).write_text(text)
                print(f"wrote {args.dot}")
        else:
            _emit(args, w.to_json())
    elif args.action == "degree":
        sg = _schematic(args)
        if not args.vertex:
            raise UsageError("graph degree needs --vertex")
        try:
            v = parse_vertex(args.vertex)
            print(sg.degree(v))
        except SchematicError as exc:
            raise UsageError(f"--vertex: {exc}") from None
    elif args.action == "check":
        sg = _schematic(args)
        if not args.map:
            raise UsageError("graph check needs --map")
        text = Path(args.map).read_text() if Path(args.map).is_file() else args.map
        try:
            m = FamilyMap.from_json(text)
        except (json.JSONDecodeError, SchematicError, KeyError) as exc:
            raise UsageError(f"--map: {exc}") from None
        try:
            rep = schematic_check_endo(sg, m)
        except SchematicError as exc:
            _emit(args, {"error": "map leaves the graph", "failures": getattr(exc, "failures", [str(exc)])})
            return EXIT_CLAIM
        _emit(args, rep.to_json())


def _schematic(args) -> SchematicGraph:
    if args.file.startswith("builtin:"):
        name = args.file.split(":", 1)[1]
        builders = {"tree": catalog.tree_graph, "tree-minus-y0": catalog.tree_subgraph}
        if name not in builders:
            raise UsageError(f"unknown built-in graph {name!r}; choose from {', '.join(builders)}")
        return builders[name](args.z_start)
    return load(args.file, "schematic", n_start=args.z_start)


def cmd_examples(args):
    from .claims import CLAIMS, run_claims
    if args.list:
        for c in CLAIMS:
            print(f"{c.id:34} {c.anchor}")
        return
    try:
        report = run_claims(args.only, Path(args.out) if args.out else None)
    except KeyError:
        raise UsageError(f"--only: no claim or group named {args.only!r}") from None
    if args.json:
        print(json.dumps(report.to_json(args.timings), indent=2))
    else:
        print("\n".join(report.lines()))
        passed = sum(r.status != "fail" for r in report.records)
        print(f"{passed}/{len(report.records)} claims hold")
    return EXIT_OK if report.ok else EXIT_CLAIM


# -------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfcheck", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = p.add_subparsers(dest="command", required=True)

    def fp(name, fn, helptext):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--system", required=True, help="presentation file or builtin:NAME")
        sp.add_argument("--order", help="letter order, e.g. 'b a f'")
        sp.add_argument("--fuel", type=int, default=50, help="completion bound on new rules")
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=fn)
        return sp

    sp = fp("reduce", cmd_reduce, "normal form of a word")
    sp.add_argument("--word", required=True)
    sp.add_argument("--trace", action="store_true", help="print every rewriting step")
    fp("complete", cmd_complete, "Knuth-Bendix completion")
    fp("confluence", cmd_confluence, "critical pair check")
    sp = fp("enumerate", cmd_enumerate, "normal forms up to a length")
    sp.add_argument("--radius", type=int, default=4)
    sp = fp("cayley", cmd_cayley, "right Cayley graph as DOT")
    sp.add_argument("--radius", type=int, default=4)
    sp.add_argument("--dot", default="-", help="output path, '-' for stdout")
    sp = fp("indecomposables", cmd_indecomposables, "elements with no factorisation in a ball")
    sp.add_argument("--radius", type=int, default=1)
    sp.add_argument("--search-radius", type=int, default=8)
    sp = fp("roots", cmd_roots, "square roots of an element")
    sp.add_argument("--target", required=True)
    sp.add_argument("--radius", type=int, default=6)

    def table(name, fn, helptext):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--table", help="table JSON file")
        sp.add_argument("--graph", help="graph JSON file; uses its semigroup S_G")
        sp.add_argument("--sub", required=True, help="comma-separated subsemigroup elements")
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=fn)
        return sp

    table("indices", cmd_indices, "Rees and Green index of a subsemigroup")
    sp = table("green", cmd_green, "relative Green classes")
    sp.add_argument("--kind", default="H", choices=["R", "L", "H"])
    sp = table("stabilizer", cmd_stabilizer, "power of an injective endomorphism stabilizing T")
    sp.add_argument("--map", required=True, help="'1->2, 2->3, ...' on every element")

    sp = sub.add_parser("morph", help="endomorphism certificates and searches")
    sp.add_argument("action", choices=["check", "hopf-witness", "cohopf-witness", "search"])
    sp.add_argument("--system", help="presentation file or builtin:NAME")
    sp.add_argument("--table")
    sp.add_argument("--graph")
    sp.add_argument("--order")
    sp.add_argument("--fuel", type=int, default=50)
    sp.add_argument("--map", help="'a->a, b->bab'")
    sp.add_argument("--radius", type=int, default=6)
    sp.add_argument("--image-len", type=int, default=3)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_morph)

    sp = sub.add_parser("graph", help="graph semigroups and schematic infinite graphs")
    sp.add_argument("action", choices=["semigroup", "endos", "window", "degree", "check"])
    sp.add_argument("file", help="graph or schematic JSON (builtin:tree, builtin:tree-minus-y0)")
    sp.add_argument("--lo", type=int, default=-3)
    sp.add_argument("--hi", type=int, default=3)
    sp.add_argument("--vertex", help="e.g. 'x_0' or 'y -1'")
    sp.add_argument("--map", help="family map JSON or a file holding it")
    sp.add_argument("--z-start", type=int, default=1, help="least index of an 'N' domain")
    sp.add_argument("--dot", help="write the window as DOT ('-' for stdout)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("examples", help="run the built-in manifest of worked examples")
    sp.add_argument("--only", help="claim id or group prefix")
    sp.add_argument("--out", help="directory for DOT artifacts")
    sp.add_argument("--list", action="store_true")
    sp.add_argument("--timings", action="store_true", help="include timings in JSON")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_examples)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except (UsageError, ValueError) as exc:  # InputError and OrientationError included
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FuelExhausted as exc:
        print(f"error: completion ran out of fuel ({exc})", file=sys.stderr)
        return EXIT_CLAIM
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
