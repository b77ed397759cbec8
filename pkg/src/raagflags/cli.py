"""Command-line entry point: ``raagflags <command> [options]``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .automorphisms import enumerate_aut1_generators, enumerate_laurence_generators
from .decompositions import build_graph_of_groups, gog_document, gog_dot, line_actions
from .factorizer import DEFAULT_DEPTH, DEFAULT_RADIUS
from .flags import InvariantViolation, Kind, build_flags_hypergraph, hypergraph_document, hypergraph_dot
from .graph import GraphError, SimpleGraph, parse_graph
from .verify import SCHEMA_VERSION, components, prop15_report, routing_report, run_corpus
from .words import raag

log = logging.getLogger("raagflags")


class Output:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []
        self.doc: dict = {}

    def text(self, line: str = ""):
        self.lines.append(line)

    def render(self) -> str:
        if self.fmt == "structured":
            return json.dumps(self.doc, indent=2, sort_keys=True) + "\n"
        return "\n".join(self.lines) + "\n"


def load_graph(path: str) -> SimpleGraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    g = parse_graph(text)
    if len(g) == 0:
        raise GraphError("graph has no vertices")
    return g


def _doc(command, **kw):
    return {"schema_version": SCHEMA_VERSION, "command": command, **kw}


def cmd_analyze(g, args, out: Output) -> int:
    parts = components(g)
    if len(parts) > 1:
        log.warning("graph is disconnected: %d components reported separately", len(parts))
    docs = []
    for k, sub in enumerate(parts):
        fh = build_flags_hypergraph(sub)
        docs.append(hypergraph_document(fh))
        if out.fmt == "dot":
            out.text(hypergraph_dot(fh).rstrip())
            continue
        if len(parts) > 1:
            out.text(f"component {k}: {{{','.join(sub.vertices)}}}")
        out.text("classes: " + "  ".join(f"{c}:{c.kind.value}" for c in fh.classes))
        order = [f"{fh.classes[i]} < {fh.classes[j]}" for i, j in sorted(fh.order)]
        out.text("order: " + (", ".join(order) if order else "(none)"))
        for e in fh.hyperedges:
            out.text(f"  {e} level {e.level}: {e.kind}")
    out.doc = _doc("analyze", components=docs)
    return 0


def cmd_decompose(g, args, out: Output) -> int:
    docs = []
    for sub in components(g):
        fh = build_flags_hypergraph(sub)
        for e in fh.hyperedges:
            gog = build_graph_of_groups(sub, fh, e)
            d = gog_document(gog)
            if e.kind.kind in (Kind.FREE_ABELIAN_LEVEL_ONE, Kind.ABELIAN):
                d["line_actions"] = [la.surviving_generator for la in line_actions(sub, fh, e)]
            docs.append(d)
            if out.fmt == "dot":
                out.text(gog_dot(gog).rstrip())
            else:
                groups = ", ".join(map(str, gog.vertex_groups)) or "-"
                out.text(
                    f"{e}: groups [{groups}] loops s={gog.loops_s} t={gog.loops_t}"
                    f" kernel <<{','.join(gog.killed)}>> edge groups trivial"
                )
                if "line_actions" in d:
                    out.text(f"  line actions via {', '.join(d['line_actions'])}")
    out.doc = _doc("decompose", graphs_of_groups=docs)
    return 0


def cmd_gens(g, args, out: Output) -> int:
    docs = []
    for sub in components(g):
        fh = build_flags_hypergraph(sub)
        lg = [x.ident for x in enumerate_laurence_generators(sub)]
        ag = [x.ident for x in enumerate_aut1_generators(sub, fh)]
        docs.append({"vertices": list(sub.vertices), "laurence": lg, "aut1": ag})
        out.text(f"Laurence generators ({len(lg)}):")
        out.lines.extend(f"  {x}" for x in lg)
        out.text(f"Aut_1 generators ({len(ag)}):")
        out.lines.extend(f"  {x}" for x in ag)
    out.doc = _doc("gens", components=docs)
    return 0


def cmd_nf(g, args, out: Output) -> int:
    R = raag(g)
    nf = R.format(R.normal_form(R.parse(args.word)))
    out.text(nf)
    out.doc = _doc("nf", word=args.word, normal_form=nf)
    return 0


def cmd_factor(g, args, out: Output) -> int:
    docs, failures = [], 0
    for sub in components(g):
        rows = routing_report(sub, None, args.radius, args.depth)
        failures += sum(not r["passed"] for r in rows)
        docs.append({"vertices": list(sub.vertices), "routing": rows})
        for r in rows:
            if r["result"] == "witness":
                status = "ok" if r["passed"] else "FAIL"
                inner = f" (mod inner {r['inner']})" if r["inner"] else ""
                out.text(f"{status:4} {r['generator']} = {' o '.join(r['terms'])}{inner}")
            elif r["result"] == "symmetry-residue":
                out.text(f"res  {r['generator']}")
            else:
                out.text(f"FAIL {r['generator']}: {r['diagnostic']}")
        verified = sum(r["result"] == "witness" and r["passed"] for r in rows)
        routed = sum(r["result"] != "symmetry-residue" for r in rows)
        out.text(f"{verified}/{routed} routed generators verified, {failures} failures")
    out.doc = _doc("factor", config={"radius": args.radius, "depth": args.depth}, components=docs,
                   failures=failures)
    return 1 if failures else 0


def cmd_verify15(g, args, out: Output) -> int:
    docs, failures = [], 0
    for sub in components(g):
        rep = prop15_report(sub)
        failures += len(rep["failures"])
        docs.append({"vertices": list(sub.vertices), **rep})
        out.text(f"checked {rep['checked']} (hyperedge, generator) pairs; "
                 f"abelian hyperedges skipped: {', '.join(rep['skipped_abelian']) or '-'}")
        for f in rep["failures"]:
            out.text(f"FAIL {f['hyperedge']} {f['generator']} evidence {f['evidence']}")
    out.text(f"{failures} failures")
    out.doc = _doc("verify15", components=docs, failures=failures)
    return 1 if failures else 0


def cmd_corpus(args, out: Output) -> int:
    doc = run_corpus(args.max_n, args.radius, args.depth, args.jobs, args.samples)
    out.doc = doc
    s = doc["summary"]
    for key, val in s.items():
        out.text(f"{key}: {val}")
    return 1 if s["failures"] else 0


COMMANDS = {
    "analyze": cmd_analyze,
    "decompose": cmd_decompose,
    "gens": cmd_gens,
    "nf": cmd_nf,
    "factor": cmd_factor,
    "verify15": cmd_verify15,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "structured", "dot"], default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--radius", type=int, default=DEFAULT_RADIUS)
    common.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="raagflags", description="Flags hypergraphs and Aut_1 checks for RAAGs.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("analyze", "decompose", "gens", "factor", "verify15"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("graph", help="graph file (edge list or JSON), '-' for stdin")
    sp = sub.add_parser("nf", parents=[common])
    sp.add_argument("graph")
    sp.add_argument("word", help='word such as "a b a^-1"')
    sp = sub.add_parser("corpus", parents=[common])
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--samples", type=int, default=1000, help="random word pairs per graph")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if args.radius < 0 or args.depth < 1:
        print("error: need --radius >= 0 and --depth >= 1", file=sys.stderr)
        return 2
    out = Output(args.format)
    try:
        if args.command == "corpus":
            code = cmd_corpus(args, out)
        else:
            g = load_graph(args.graph)
            code = COMMANDS[args.command](g, args, out)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3
    text = out.render()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
