"""Per-graph verification reports and the corpus runner."""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor

from . import corpus as corpus_mod
from .automorphisms import check_homomorphism, enumerate_aut1_generators, enumerate_laurence_generators
from .decompositions import build_graph_of_groups, check_edge_stabilizers_trivial, quotient_for
from .factorizer import (
    DEFAULT_DEPTH,
    DEFAULT_RADIUS,
    SymmetryResidue,
    Witness,
    route_laurence_generator,
    verify_prop15,
    verify_witness,
)
from .flags import build_flags_hypergraph, hypergraph_document, is_nonabelian
from .graph import SimpleGraph, connected_components
from .words import raag

SCHEMA_VERSION = 1


def components(g: SimpleGraph) -> list[SimpleGraph]:
    comps = connected_components(g)
    if len(comps) <= 1:
        return [g]
    return [g.induced(c) for c in comps]


def generator_validity(g: SimpleGraph, fh=None) -> dict:
    fh = fh or build_flags_hypergraph(g)
    lg = enumerate_laurence_generators(g)
    ag = enumerate_aut1_generators(g, fh)
    invalid = [x.ident for x in lg + ag if not check_homomorphism(g, x.realize(g))]
    return {"laurence": len(lg), "aut1": len(ag), "invalid": invalid}


def routing_report(g: SimpleGraph, fh=None, radius=DEFAULT_RADIUS, depth=DEFAULT_DEPTH) -> list[dict]:
    fh = fh or build_flags_hypergraph(g)
    rows = []
    for gen in enumerate_laurence_generators(g):
        res = route_laurence_generator(g, fh, gen, radius, depth)
        row = {"generator": gen.ident}
        if isinstance(res, Witness):
            ok = verify_witness(g, gen, res, radius)
            row.update(
                result="witness",
                method=res.method,
                hyperedge=res.hyperedge,
                terms=[str(t) for t in res.terms],
                inner=res.conjugator,
                radius_used=res.radius_used,
                passed=ok,
            )
        elif isinstance(res, SymmetryResidue):
            row.update(result="symmetry-residue", passed=True)
        else:
            row.update(result="search-failed", diagnostic=res.diagnostic, frontier=res.frontier, passed=False)
        rows.append(row)
    return rows


def prop15_report(g: SimpleGraph, fh=None) -> dict:
    fh = fh or build_flags_hypergraph(g)
    gens = enumerate_aut1_generators(g, fh)
    checked, failures, skipped = 0, [], []
    for e in fh.hyperedges:
        if not is_nonabelian(e):
            skipped.append(e.ident)
            continue
        for gen in gens:
            rep = verify_prop15(g, fh, e, gen)
            checked += 1
            if not (rep.kernel_preserved and rep.induced_bijective):
                failures.append({
                    "hyperedge": rep.hyperedge,
                    "generator": rep.generator,
                    "kernel_preserved": rep.kernel_preserved,
                    "induced_bijective": rep.induced_bijective,
                    "evidence": rep.evidence,
                })
    return {"checked": checked, "skipped_abelian": skipped, "failures": failures}


def _random_word(rng: random.Random, n: int, max_len: int) -> tuple[int, ...]:
    return tuple(rng.randrange(2 * n) for _ in range(rng.randint(0, max_len)))


def quotient_checks(g: SimpleGraph, e, pairs: list) -> list[str]:
    """Structural and multiplicativity checks for one hyperedge's quotient map."""
    problems = []
    q = quotient_for(g, e.top.members)
    R = raag(g)
    for v in g.vertices:
        img = q.image((R.letter(v),))
        want = () if v in q.killed else (2 * q.target.index(v),)
        if img != want:
            problems.append(f"generator {v} maps to {q.R.format(img)!r}")
    gog = build_graph_of_groups(g, None, e)
    expected = [tuple(gog.top_class)] if e.top.kind.value == "Clique" else [(u,) for u in gog.top_class]
    expected += [vg.vertices for vg in gog.vertex_groups if vg.kind == "InducedSubgraphGroup"]
    expected += [(x,) for x in gog.isolated]
    if sorted(connected_components(q.target)) != sorted(expected):
        problems.append("quotient graph components disagree with the graph of groups")
    for w1, w2 in pairs:
        if q.image(w1 + w2) != q.R.multiply(q.image(w1), q.image(w2)):
            problems.append(f"not multiplicative on {R.format(w1)!r}, {R.format(w2)!r}")
            break
    return problems


def decomposition_report(g: SimpleGraph, fh=None, samples: int = 1000, seed: str | None = None) -> list[dict]:
    fh = fh or build_flags_hypergraph(g)
    rng = random.Random(seed or corpus_mod.graph_name(g))
    pairs = [(_random_word(rng, len(g), 6), _random_word(rng, len(g), 6)) for _ in range(samples)]
    rows = []
    for e in fh.hyperedges:
        gog = build_graph_of_groups(g, fh, e)
        problems = quotient_checks(g, e, pairs)
        rows.append({
            "hyperedge": e.ident,
            "edge_groups_trivial": check_edge_stabilizers_trivial(gog),
            "problems": problems,
            "passed": check_edge_stabilizers_trivial(gog) and not problems,
        })
    return rows


def verify_graph(g: SimpleGraph, radius: int = DEFAULT_RADIUS, depth: int = DEFAULT_DEPTH, samples: int = 1000) -> dict:
    """Every check for one connected graph, as a JSON-ready document."""
    fh = build_flags_hypergraph(g)
    validity = generator_validity(g, fh)
    routing = routing_report(g, fh, radius, depth)
    p15 = prop15_report(g, fh)
    decomp = decomposition_report(g, fh, samples)
    failures = (
        len(validity["invalid"])
        + sum(not r["passed"] for r in routing)
        + len(p15["failures"])
        + sum(not r["passed"] for r in decomp)
    )
    return {
        "graph": corpus_mod.graph_name(g),
        "hypergraph": hypergraph_document(fh),
        "generators": validity,
        "routing": routing,
        "prop15": p15,
        "decompositions": decomp,
        "failures": failures,
    }


def _verify_task(args):
    g, radius, depth, samples = args
    return verify_graph(g, radius, depth, samples)


def run_corpus(max_n: int = 6, radius: int = DEFAULT_RADIUS, depth: int = DEFAULT_DEPTH, jobs: int = 1,
               samples: int = 1000, min_n: int = 3) -> dict:
    graphs = corpus_mod.corpus(min_n, max_n)
    tasks = [(g, radius, depth, samples) for g in graphs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_task, tasks, chunksize=4))
    else:
        reports = [_verify_task(t) for t in tasks]
    reports.sort(key=lambda r: (int(r["graph"][1:r["graph"].index(":")]), r["graph"]))
    summary = summarize(reports)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "corpus",
        "config": {"min_n": min_n, "max_n": max_n, "radius": radius, "depth": depth, "samples": samples},
        "graphs": reports,
        "summary": summary,
    }


def summarize(reports: list[dict]) -> dict:
    rows = [r for rep in reports for r in rep["routing"]]
    return {
        "graphs": len(reports),
        "laurence_generators": sum(rep["generators"]["laurence"] for rep in reports),
        "aut1_generators": sum(rep["generators"]["aut1"] for rep in reports),
        "invalid_generators": sum(len(rep["generators"]["invalid"]) for rep in reports),
        "witnesses": sum(r["result"] == "witness" for r in rows),
        "symmetry_residues": sum(r["result"] == "symmetry-residue" for r in rows),
        "search_failed": sum(r["result"] == "search-failed" for r in rows),
        "max_radius_used": max((r.get("radius_used", 0) for r in rows), default=0),
        "prop15_checked": sum(rep["prop15"]["checked"] for rep in reports),
        "prop15_failures": sum(len(rep["prop15"]["failures"]) for rep in reports),
        "decompositions": sum(len(rep["decompositions"]) for rep in reports),
        "decomposition_failures": sum(not d["passed"] for rep in reports for d in rep["decompositions"]),
        "failures": sum(rep["failures"] for rep in reports),
    }
