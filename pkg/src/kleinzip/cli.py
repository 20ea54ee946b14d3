"""Command line entry point: ``kleinzip <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import os
import sys

from . import census, coloring, maps, ooa, verify
from .graph import Graph

GRAPHS = ("heawood", "coxeter", "coxeter-alt", "klein", "klein-quartic")
OBJECTS = ("fano",) + GRAPHS


class UsageError(Exception):
    pass


def build_object(name: str) -> tuple[Graph, list[str]]:
    """Graph and vertex names for a named object of the chain."""
    if name == "heawood":
        return census.build_heawood(), [f"p{i}" for i in range(1, 8)] + [
            "L" + "".join(map(str, ln)) for ln in census.FANO_LINES]
    if name == "coxeter":
        return census.build_coxeter(), [census.vertex_name(v) for v in range(28)]
    if name == "coxeter-alt":
        hexes = census.heawood_hexagons()
        return census.build_coxeter_from_heawood(), ["hex(" + " ".join(map(str, h)) + ")" for h in hexes]
    fixture = ooa.paper_ooa_fixture()
    m = maps.zip_ooa(fixture)
    if name == "klein":
        # a map vertex is named by its smallest dart: (cycle label).(position)
        return maps.underlying_graph(m), [
            f"{fixture.label_of(min(v) // 7)}.{min(v) % 7}" for v in m.vertices]
    if name == "klein-quartic":
        return maps.dual_graph(m), [fixture.label_of(f[0] // 7) for f in m.faces]
    raise UsageError(f"unknown object {name!r}")


def graph_document(g: Graph, names=None, colors=None) -> dict:
    doc = {"n": g.order, "edges": [list(e) for e in g.sorted_edges()]}
    if names is not None:
        doc["names"] = list(names)
    if colors is not None:
        doc["colors"] = list(colors)
    return doc


def graph_from_document(doc: dict) -> Graph:
    return Graph.from_edges(doc["n"], [tuple(e) for e in doc["edges"]])


def fano_document() -> dict:
    fano = census.build_fano()
    return {"points": list(fano.points), "lines": [sorted(ln) for ln in fano.lines]}


def to_dot(g: Graph, name: str, names=None) -> str:
    ident = name.replace("-", "_")
    lines = [f"graph {ident} {{"]
    for v in range(g.order):
        label = f' [label="{names[v]}"]' if names else ""
        lines.append(f"  {v}{label};")
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _progress(args):
    def say(msg: str):
        if not args.quiet:
            print(msg, file=sys.stderr)
    return say


def _paint(text: str, ok: bool) -> str:
    if os.environ.get("NO_COLOR") is not None or not sys.stdout.isatty():
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


# -- commands -------------------------------------------------------------------

def cmd_build(args) -> int:
    if args.name == "fano":
        sys.stdout.write(_dump(fano_document()))
        return 0
    g, names = build_object(args.name)
    sys.stdout.write(_dump(graph_document(g, names)))
    return 0


def cmd_export(args) -> int:
    if args.name == "fano":
        if args.format != "json":
            raise UsageError("the Fano plane exports as json only")
        sys.stdout.write(_dump(fano_document()))
        return 0
    g, names = build_object(args.name)
    if args.format == "dot":
        sys.stdout.write(to_dot(g, args.name, names))
        return 0
    colors = None
    if args.colors:
        if args.name == "klein-quartic":
            colors = maps.vertex_color_dual(maps.zip_ooa(ooa.paper_ooa_fixture()), ooa.paper_ooa_fixture())
        elif args.name == "coxeter":
            vc = census.find_fano_coloring(g).vertex_color
            colors = [vc[v] for v in range(g.order)]
        else:
            raise UsageError(f"no coloring defined for {args.name}")
    sys.stdout.write(_dump(graph_document(g, names, colors)))
    return 0


def _exit_code_checks() -> list[verify.Check]:
    cases = [
        (["build", "no-such-object"], 2),
        (["verify", "heawood", "--quiet"], 0),
        (["verify", "klein", "--quiet", "--corrupt-fixture"], 1),
        (["export", "coxeter", "--format", "svg"], 2),
    ]
    out = []
    for argv, want in cases:
        with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(io.StringIO()):
            got = main(argv)
        out.append(verify.Check(f"exit code of {' '.join(argv)}", want, got, criterion=12))
    return out


def cmd_verify(args) -> int:
    checks = verify.run_suite(
        args.suite, corrupt=args.corrupt_fixture,
        exit_codes=_exit_code_checks if args.suite == "all" else None,
        progress=_progress(args),
    )
    ok = all(c.passed for c in checks)
    if args.json:
        doc = {"suite": args.suite, "corrupt_fixture": args.corrupt_fixture,
               "passed": ok, "checks": [c.as_dict() for c in checks]}
        sys.stdout.write(_dump(doc))
    else:
        for c in checks:
            tag = _paint("PASS" if c.passed else "FAIL", c.passed)
            crit = f"[{c.criterion}] " if c.criterion else ""
            line = f"{tag} {crit}{c.name}"
            if not c.passed:
                line += f": expected {c.expected!r}, got {c.actual!r}"
            if c.note and not args.quiet:
                line += f"  ({c.note})"
            print(line)
        failed = sum(not c.passed for c in checks)
        print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 0 if ok else 1


def cmd_ooa(args) -> int:
    coxeter = census.build_coxeter()
    if args.solve:
        cycles = census.enumerate_cycles(coxeter, 7)
        result = ooa.solve_ooa(coxeter, cycles, 3)
        if result is None:
            sys.stdout.write(_dump({"source": "solver", "status": "unsat"}))
            return 1
        comps = ooa.parity_system(cycles, 3).components()
        fixture = ooa.paper_ooa_fixture()
        doc = {
            "source": "solver",
            "components": len(comps),
            "matches_fixture_up_to_component_flips": ooa.same_up_to_component_flips(fixture, result, 3),
            "cycles": [[census.vertex_name(v) for v in c] for c in result.cycles],
        }
    else:
        fixture = ooa.paper_ooa_fixture()
        doc = {
            "source": "fixture",
            "violations": len(ooa.ooa_violations(fixture, 3)),
            "cycles": {fixture.label_of(i): [census.vertex_name(v) for v in c]
                       for i, c in enumerate(fixture.cycles)},
        }
    sys.stdout.write(_dump(doc))
    return 0


def cmd_zip(args) -> int:
    fixture = ooa.paper_ooa_fixture()
    m = maps.zip_ooa(fixture)
    s = maps.map_summary(m)
    doc = {"V": s.V, "E": s.E, "F": s.F, "genus": s.genus,
           "euler_characteristic": s.euler_characteristic,
           "vertex_orbit_sizes": sorted(set(s.vertex_orbit_sizes)),
           "face_sizes": sorted(set(s.face_sizes)),
           "petrie_lengths": sorted({len(p) for p in maps.petrie_polygons(m)})}
    if not args.summary:
        doc["alpha"] = list(m.alpha)
        doc["phi"] = list(m.phi)
    sys.stdout.write(_dump(doc))
    return 0


def cmd_color(args) -> int:
    if args.name == "klein-quartic":
        fixture = ooa.paper_ooa_fixture()
        m = maps.zip_ooa(fixture)
        d = maps.dual_graph(m)
        labels = maps.vertex_color_dual(m, fixture)
        chi = coloring.chromatic_number(d)
        doc = {
            "label_coloring": {fixture.label_of(f[0] // 7): c for f, c in zip(m.faces, labels)},
            "label_coloring_proper": coloring.is_proper(d, labels),
            "label_colors_used": len(set(labels)),
            "chromatic_number": chi,
            "minimum_coloring": coloring.k_coloring(d, chi),
        }
    else:
        g = census.build_coxeter()
        col = census.find_fano_coloring(g)
        doc = {
            "vertex_colors": {census.vertex_name(v): c for v, c in sorted(col.vertex_color.items())},
            "edge_colors": {f"{census.vertex_name(u)}-{census.vertex_name(v)}": c
                            for (u, v), c in sorted(col.edge_color.items())},
            "violations": col.violations(g),
        }
    sys.stdout.write(_dump(doc))
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kleinzip", description=__doc__.splitlines()[0])
    p.add_argument("--quiet", action="store_true", help="suppress progress text")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="print a GraphDocument")
    b.add_argument("name")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=verify.SUITES)
    v.add_argument("--json", action="store_true", help="emit the report as JSON")
    v.add_argument("--corrupt-fixture", action="store_true",
                   help="test mode: reverse one reference heptagon first")
    v.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="serialize a named object")
    e.add_argument("name")
    e.add_argument("--format", default="json", choices=("json", "dot"))
    e.add_argument("--colors", action="store_true", help="include a vertex coloring (json)")
    e.set_defaults(func=cmd_export)

    o = sub.add_parser("ooa", help="show the heptagon orientation assignment")
    g = o.add_mutually_exclusive_group()
    g.add_argument("--solve", action="store_true")
    g.add_argument("--fixture", action="store_true")
    o.set_defaults(func=cmd_ooa)

    z = sub.add_parser("zip", help="zip the squared heptagons into the Klein map")
    z.add_argument("--summary", action="store_true")
    z.set_defaults(func=cmd_zip)

    c = sub.add_parser("color", help="colorings of the Klein quartic graph or the Coxeter graph")
    c.add_argument("name", choices=("klein-quartic", "coxeter"))
    c.set_defaults(func=cmd_color)
    return p


def main(argv=None) -> int:
    try:
        args = make_parser().parse_args(argv)
        if args.command in ("build", "export") and args.name not in OBJECTS:
            raise UsageError(f"unknown object {args.name!r}; choose from {', '.join(OBJECTS)}")
        return args.func(args)
    except UsageError as exc:
        if str(exc) and "unknown object" in str(exc):
            print(f"kleinzip: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
