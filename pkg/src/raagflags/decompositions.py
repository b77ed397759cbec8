"""Per-hyperedge graphs of groups and actions on lines.

The fundamental group of each graph of groups is handled concretely as the
quotient of A_Gamma by the normal closure of lk([u]): killing generators of a
RAAG leaves the RAAG of the induced subgraph on the survivors.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .flags import FlagsHypergraph, Hyperedge, Kind
from .graph import ClassKind, SimpleGraph, class_link, components_outside_star
from .words import RAAG, Word, WordLike, raag

TRIVIAL = "trivial"


@dataclass(frozen=True)
class VertexGroup:
    kind: str  # "InducedSubgraphGroup" | "FreeAbelianClassGroup"
    vertices: tuple[str, ...]

    def __str__(self):
        return f"{self.kind}{{{','.join(self.vertices)}}}"


@dataclass(frozen=True)
class GraphOfGroups:
    hyperedge: str
    top_class: tuple[str, ...]
    vertex_groups: tuple[VertexGroup, ...]
    loops_s: int
    loops_t: int
    isolated: tuple[str, ...]
    killed: tuple[str, ...]
    edge_groups: tuple[str, ...] = field(default=())

    @property
    def rank_data(self) -> int:
        """Loops plus vertex groups; at least 1 for a connected graph."""
        return self.loops_s + self.loops_t + len(self.vertex_groups)


def has_abelian_class_vertex(e: Hyperedge) -> bool:
    """Whether the top class is collapsed to one free-abelian vertex group.

    At level one a singleton class counts as free abelian; above level one only
    a genuine clique does (a singleton contributes a loop).
    """
    return e.kind.kind is Kind.FREE_ABELIAN_LEVEL_ONE or e.top.kind is ClassKind.CLIQUE


def build_graph_of_groups(g: SimpleGraph, fh: FlagsHypergraph | None, e: Hyperedge) -> GraphOfGroups:
    big, single = components_outside_star(g, e.top)
    groups = [VertexGroup("InducedSubgraphGroup", comp) for comp in big]
    if has_abelian_class_vertex(e):
        groups.insert(0, VertexGroup("FreeAbelianClassGroup", e.top.members))
        loops_s = 0
    else:
        loops_s = len(e.top.members)
    loops_t = len(single)
    # loops sit at the base vertex; each component group hangs off it by one edge
    n_edges = loops_s + loops_t + len(big)
    return GraphOfGroups(
        hyperedge=e.ident,
        top_class=e.top.members,
        vertex_groups=tuple(groups),
        loops_s=loops_s,
        loops_t=loops_t,
        isolated=tuple(single),
        killed=g.sort(class_link(g, e.top)),
        edge_groups=(TRIVIAL,) * n_edges,
    )


def check_edge_stabilizers_trivial(gog: GraphOfGroups) -> bool:
    return all(eg == TRIVIAL for eg in gog.edge_groups)


class Quotient:
    """The map A_Gamma -> A_{Gamma minus killed} for one hyperedge."""

    def __init__(self, g: SimpleGraph, killed):
        self.graph = g
        self.killed = frozenset(killed)
        self.survivors = tuple(v for v in g.vertices if v not in self.killed)
        self.target = g.induced(self.survivors)
        self.R: RAAG = raag(self.target)
        src = raag(g)
        self._map = []
        for x in range(2 * src.n):
            v = g.vertices[x >> 1]
            self._map.append(-1 if v in self.killed else 2 * self.target.index(v) + (x & 1))

    def image(self, w) -> tuple[int, ...]:
        m = self._map
        return self.R.normal_form(m[x] for x in w if m[x] >= 0)

    def letter_map(self, x: int) -> int:
        return self._map[x]


@functools.lru_cache(maxsize=1024)
def quotient_for(g: SimpleGraph, top: tuple[str, ...]) -> Quotient:
    killed = g.neighbors(top[0]) - set(top)
    return Quotient(g, killed)


def quotient_word(g: SimpleGraph, e: Hyperedge, w: WordLike) -> Word:
    """Image of *w* in the fundamental group: killed letters deleted, then normalised."""
    q = quotient_for(g, e.top.members)
    return q.R.decode(q.image(raag(g).encode(w)))


@dataclass(frozen=True)
class LineAction:
    surviving_generator: str
    killed: tuple[str, ...]

    def translation(self, g: SimpleGraph, w: WordLike) -> int:
        """Translation length of *w*: its exponent sum in the surviving generator."""
        R = raag(g)
        return R.exponent_sums(R.encode(w))[g.index(self.surviving_generator)]


def line_actions(g: SimpleGraph, fh: FlagsHypergraph | None, e: Hyperedge) -> list[LineAction]:
    if e.kind.kind not in (Kind.FREE_ABELIAN_LEVEL_ONE, Kind.ABELIAN):
        raise ValueError(f"{e.ident} is {e.kind.kind.value}; line actions need an abelian hyperedge")
    return [LineAction(u, tuple(v for v in g.vertices if v != u)) for u in e.top.members]


# -- export -----------------------------------------------------------------

def gog_document(gog: GraphOfGroups) -> dict:
    return {
        "hyperedge": gog.hyperedge,
        "top_class": list(gog.top_class),
        "vertex_groups": [{"kind": vg.kind, "vertices": list(vg.vertices)} for vg in gog.vertex_groups],
        "loops_s": gog.loops_s,
        "loops_t": gog.loops_t,
        "isolated": list(gog.isolated),
        "killed": list(gog.killed),
        "edge_groups": list(gog.edge_groups),
    }


def gog_dot(gog: GraphOfGroups) -> str:
    name = gog.hyperedge.replace('"', "")
    lines = [f'graph "{name}" {{', '  label="' + name + ', kernel <<' + ",".join(gog.killed) + '>>";']
    groups = list(gog.vertex_groups)
    if groups and groups[0].kind == "FreeAbelianClassGroup":
        lines.append(f'  base [label="{groups.pop(0)}", shape=box];')
    else:
        lines.append('  base [label="1", shape=circle];')
    for i, vg in enumerate(groups):
        lines.append(f'  v{i} [label="{vg}", shape=box];')
        lines.append(f'  base -- v{i} [label="{TRIVIAL}"];')
    loops = [f"s:{u}" for u in (gog.top_class if gog.loops_s else ())] + [f"t:{x}" for x in gog.isolated]
    for lab in loops:
        lines.append(f'  base -- base [label="{lab} ({TRIVIAL})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
