"""Command-line front end.

    signed-ghw report GRAPH [--char P] [--json] [--max-subset-size N]

GRAPH is a path to a graph file or the name of a bundled fixture (ex1..ex6).
Every value is computed by at least two independent routes where possible;
any disagreement makes the command exit with status 1.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from .errors import (ArgumentError, DisagreementError, GraphParseError,
                     ResourceError, SignedGhwError)
from .exact_algebra import ScalarDomain, rank
from .eval_points import frustration_index_points, min_distance_points
from .ghw import (code_ghw_graph_formula, ghw_dual_matroid_via_rank,
                  ghw_matroid_table, wei_dual_weights)
from .incidence import build_incidence, predicted_rank
from .matroid import incidence_matroid, min_nonredundant_unions, signed_graphic_matroid
from .signed_graph import (DEFAULT_MAX_GROUND, SignedGraph, cycles,
                           frustration_index_switching, graph_circuits,
                           graph_cocircuits, is_balanced)
from .sr_ideal import betti_table, is_level, lowest_shifts, regularity_closed_form

SECTIONS = ("info", "circuits", "ghw", "betti", "frustration", "mindist")
FIXTURES = ("ex1", "ex2", "ex3", "ex4", "ex5", "ex6")
EXIT_CODES = {"disagreement": 1, "argument-error": 2, "parse-error": 2,
              "domain-error": 3, "resource-error": 4}
UNION_NODE_LIMIT = 2_000_000
MINDIST_FORM_LIMIT = 10 ** 6


# -- graph files ---------------------------------------------------------------

def parse_graph(text: str) -> SignedGraph:
    """Parse ``vertices <s>`` followed by ``edge <u> <v> <+|->`` lines."""
    s = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if s is None:
            if tok[0] != "vertices" or len(tok) != 2:
                raise GraphParseError("expected 'vertices <s>' first", lineno)
            try:
                s = int(tok[1])
            except ValueError:
                raise GraphParseError(f"bad vertex count {tok[1]!r}", lineno) from None
            if s < 1:
                raise GraphParseError("need at least one vertex", lineno)
            continue
        if tok[0] != "edge" or len(tok) != 4:
            raise GraphParseError("expected 'edge <u> <v> <+|->'", lineno)
        try:
            u, v = int(tok[1]), int(tok[2])
        except ValueError:
            raise GraphParseError("vertex labels must be integers", lineno) from None
        for x in (u, v):
            if not 1 <= x <= s:
                raise GraphParseError(f"vertex {x} outside 1..{s}", lineno)
        sign = {"+": "+", "-": "-", "−": "-"}.get(tok[3])
        if sign is None:
            raise GraphParseError(f"sign must be + or -, not {tok[3]!r}", lineno)
        edges.append((u, v, sign))
    if s is None:
        raise GraphParseError("missing 'vertices <s>' line")
    return SignedGraph.from_edges(s, edges)


def fixture_text(name: str) -> str:
    return resources.files("signed_ghw").joinpath("fixtures", f"{name}.sg").read_text("utf-8")


def load_graph(spec: str) -> tuple[str, SignedGraph]:
    path = Path(spec)
    if path.is_file():
        return path.stem, parse_graph(path.read_text("utf-8"))
    if spec in FIXTURES:
        return spec, parse_graph(fixture_text(spec))
    raise ArgumentError(f"no such graph file or fixture: {spec}")


# -- report --------------------------------------------------------------------

def _attempt(fn, *args, **kwargs):
    """Run an optional cross-check; a domain/resource error becomes a note."""
    try:
        return fn(*args, **kwargs)
    except (ArgumentError, GraphParseError, DisagreementError):
        raise
    except SignedGhwError as err:
        return f"skipped: {err}"


def _edge_lists(sets) -> list[list[int]]:
    return [sorted(x) for x in sets]


class _Report:
    def __init__(self, g: SignedGraph, name: str, char: int, max_ground: int):
        self.g = g
        self.char = char
        self.max_ground = max_ground
        c, c0 = g._base_counts
        self.data = {
            "graph": {"name": name, "s": g.s, "m": g.m, "c": c, "c0": c0,
                      "balanced": is_balanced(g),
                      "edges": [[e.u, e.v, "+" if e.sign > 0 else "-"] for e in g.edges]},
            "characteristic": char,
            "invariants": {},
            "methods": {},
            "agreement": {},
        }
        if g.m > max_ground:
            raise ResourceError(f"{g.m} edges exceed --max-subset-size {max_ground}")
        self.matroid = incidence_matroid(g, char, max_ground)

    def record(self, key: str, methods: dict, partial: tuple = ()):
        """Store every route's value; the first is the reported one.

        Methods named in ``partial`` may return only a prefix of the list.
        """
        values = [v for v in methods.values() if not isinstance(v, str)]
        self.data["methods"][key] = methods
        ref = values[0] if values else None
        self.data["invariants"][key] = ref
        ok = all(v == ref[:len(v)] if name in partial else v == ref
                 for name, v in methods.items() if not isinstance(v, str))
        self.data["agreement"][key] = ok
        return ok

    # sections ------------------------------------------------------------

    def info(self):
        g, m = self.g, self.matroid
        a = build_incidence(g, ScalarDomain.of_characteristic(self.char)).matrix
        self.record("rank", {"elimination": rank(a),
                             "component_formula": predicted_rank(g, self.char),
                             "rank_table": m.full_rank})
        self.record("dim_C", {"rank_table": m.full_rank})
        self.record("dim_C_dual", {"rank_table": g.m - m.full_rank})
        # odd characteristics must reproduce the combinatorial matroid exactly
        ref = signed_graphic_matroid(g.positive() if self.char == 2 else g, self.max_ground)
        same = bool((ref.rank_table() == m.rank_table()).all())
        self.data["agreement"]["matroid_is_combinatorial"] = same

    def circuits(self):
        g, m = self.g, self.matroid
        graph_side = ([c.edges for c in cycles(g)] if self.char == 2
                      else graph_circuits(g))
        self.record("circuits", {
            "rank_table": _edge_lists(m.circuits()),
            "graph": _edge_lists(sorted(graph_side, key=lambda x: (len(x), sorted(x)))),
        })
        self.record("cocircuits", {
            "rank_table": _edge_lists(m.cocircuits()),
            "graph": _edge_lists(graph_cocircuits(g, graphic=self.char == 2 or None,
                                                  max_ground=self.max_ground)),
        })

    def ghw(self):
        g, m = self.g, self.matroid
        k = m.full_rank
        dual_w = ghw_matroid_table(m).as_list()
        code_w = ghw_matroid_table(m.dual()).as_list()
        methods_c = {
            "nullity_def": code_w,
            "rank_drop": [ghw_dual_matroid_via_rank(m, r) for r in range(1, k + 1)],
            "wei_dual": wei_dual_weights(dict(enumerate(dual_w, 1)), g.m),
        }
        cut = _attempt(lambda: [code_ghw_graph_formula(g, self.char, "C", r,
                                                       max_ground=self.max_ground)
                                for r in range(1, k + 1)])
        methods_c["graph_formula"] = cut
        # the union search may stop early on large matroids; compare the prefix
        methods_d = {"nullity_def": dual_w,
                     "circuit_union": min_nonredundant_unions(
                         m.circuit_masks(), len(dual_w), UNION_NODE_LIMIT)}
        self.record("delta_C", methods_c)
        self.record("delta_C_dual", methods_d, partial=("circuit_union",))
        self.data["agreement"]["strictly_increasing"] = all(
            a < b for w in (code_w, dual_w) for a, b in zip(w, w[1:]))

    def betti(self):
        m = self.matroid
        for key, mat in (("circuit_ideal", m), ("cocircuit_ideal", m.dual())):
            t = betti_table(mat, max_ground=self.max_ground)
            self.record(f"betti_{key}", {"euler": [list(x) for x in t.as_sorted()]})
            closed = _attempt(regularity_closed_form, self.g, self.char,
                              "circuits" if key == "circuit_ideal" else "cocircuits")
            self.record(f"reg_{key}", {"betti_table": t.regularity, "closed_form": closed})
            self.record(f"pd_{key}", {"betti_table": t.projective_dimension,
                                      "nullity": mat.ground_size - mat.full_rank})
            self.data["agreement"][f"level_{key}"] = is_level(t)
            shifts = list(lowest_shifts(t).values())
            self.record(f"lowest_shifts_{key}", {
                "betti_shift": shifts,
                "nullity_def": ghw_matroid_table(mat).as_list()})

    def frustration(self):
        g = self.g
        self.record("frustration", {
            "switching": _attempt(frustration_index_switching, g),
            "pm1_forms": _attempt(frustration_index_points, g),
        })

    def mindist(self):
        g, m = self.g, self.matroid
        if m.full_rank == 0:
            self.record("min_distance", {"nullity_def": "skipped: C is the zero code"})
            return
        code = ghw_matroid_table(m.dual()).as_list()
        p = self.char
        methods = {"nullity_def": code[0]}
        forms = (3 if p == 0 else p) ** g.s
        if forms > MINDIST_FORM_LIMIT:
            methods["max_zeros"] = f"skipped: {forms} forms exceed {MINDIST_FORM_LIMIT}"
        else:
            methods["max_zeros"] = _attempt(min_distance_points, g, p)
        methods["graph_formula"] = _attempt(code_ghw_graph_formula, g, p, "C", 1,
                                            max_ground=self.max_ground)
        self.record("min_distance", methods)


def run_report(g: SignedGraph, characteristic: int = 0, sections=SECTIONS,
               name: str = "graph", max_ground: int = DEFAULT_MAX_GROUND) -> dict:
    """Compute the requested sections; the result is plain JSON-ready data."""
    if characteristic != 0:
        ScalarDomain.prime_field(characteristic)
    rep = _Report(g, name, characteristic, max_ground)
    for sec in SECTIONS:
        if sec in sections:
            getattr(rep, sec)()
    agree = rep.data["agreement"]
    agree["all"] = all(agree.values())
    return rep.data


# -- rendering -------------------------------------------------------------------

def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _fmt(v) -> str:
    if isinstance(v, list):
        if v and isinstance(v[0], list):
            return "[" + ", ".join(_fmt(x) for x in v) + "]"
        return "(" + ", ".join(str(x) for x in v) + ")"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def render_table(report: dict) -> str:
    g = report["graph"]
    lines = [f"graph {g['name']}: s={g['s']} m={g['m']} c={g['c']} c0={g['c0']} "
             f"balanced={_fmt(g['balanced'])} char={report['characteristic']}"]
    for key in sorted(report["methods"]):
        lines.append(f"{key}:")
        for method, value in sorted(report["methods"][key].items()):
            lines.append(f"  {method:<18} {_fmt(value)}")
    lines.append("agreement:")
    for key in sorted(report["agreement"]):
        lines.append(f"  {key:<34} {'ok' if report['agreement'][key] else 'FAILED'}")
    return "\n".join(lines) + "\n"


# -- entry point -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="signed-ghw", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="verb", required=True)
    for verb in SECTIONS + ("report",):
        sp = sub.add_parser(verb)
        sp.add_argument("graph", help="graph file or fixture name (ex1..ex6)")
        sp.add_argument("--char", type=int, default=0,
                        help="0 for the rationals, otherwise a prime")
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.add_argument("--max-subset-size", type=int, default=DEFAULT_MAX_GROUND,
                        help="largest ground set enumerated exhaustively")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        name, g = load_graph(args.graph)
        sections = SECTIONS if args.verb == "report" else (args.verb,)
        report = run_report(g, args.char, sections, name, args.max_subset_size)
    except SignedGhwError as err:
        print(f"error [{err.code}]: {err}", file=sys.stderr)
        return EXIT_CODES.get(err.code, 1)
    sys.stdout.write(render_json(report) if args.json else render_table(report))
    return 0 if report["agreement"]["all"] else EXIT_CODES["disagreement"]


if __name__ == "__main__":
    sys.exit(main())
