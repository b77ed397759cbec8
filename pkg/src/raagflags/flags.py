"""The vertex preorder, vertex classes and the graded flags hypergraph."""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field

from .graph import (
    ClassKind,
    GraphError,
    SimpleGraph,
    VertexClass,
    connected_components,
    link,
    star,
)

log = logging.getLogger(__name__)


class InvariantViolation(RuntimeError):
    """A structural property the construction relies on failed for this graph."""


def leq(g: SimpleGraph, u: str, v: str) -> bool:
    """``u <= v`` iff lk(u) is contained in st(v) (non-strict inclusion)."""
    return link(g, u) <= star(g, v)


def vertex_classes(g: SimpleGraph) -> list[VertexClass]:
    classes = []
    placed = set()
    for u in g.vertices:
        if u in placed:
            continue
        members = [v for v in g.vertices if v not in placed and leq(g, u, v) and leq(g, v, u)]
        placed.update(members)
        if len(members) == 1:
            kind = ClassKind.SINGLETON
        else:
            pairs = [g.adjacent(x, y) for i, x in enumerate(members) for y in members[i + 1:]]
            if all(pairs):
                kind = ClassKind.CLIQUE
            elif not any(pairs):
                kind = ClassKind.ANTICLIQUE
            else:
                raise InvariantViolation(f"class {members} is neither a clique nor an anti-clique")
        classes.append(VertexClass(tuple(members), kind))
    return classes


def class_less(g: SimpleGraph, c: VertexClass, d: VertexClass) -> bool:
    """Strict class order ``c < d``."""
    return c != d and leq(g, c.rep, d.rep)


class Kind(enum.Enum):
    FREE_LEVEL_ONE = "FreeLevelOne"
    FREE_ABELIAN_LEVEL_ONE = "FreeAbelianLevelOne"
    CENTERLESS = "Centerless"
    WITH_CENTER = "WithCenter"
    ABELIAN = "Abelian"


@dataclass(frozen=True)
class HyperedgeKind:
    kind: Kind
    ab: tuple[str, ...] = ()
    b_part: tuple[str, ...] = ()

    def __str__(self):
        if self.kind is Kind.CENTERLESS:
            return f"Centerless{{B={_fmt(self.b_part)}}}"
        if self.kind is Kind.WITH_CENTER:
            return f"WithCenter{{Ab={_fmt(self.ab)}, B={_fmt(self.b_part)}}}"
        if self.kind is Kind.ABELIAN:
            return f"Abelian{{Ab={_fmt(self.ab)}}}"
        return self.kind.value


def _fmt(vs):
    return "{" + ",".join(vs) + "}"


@dataclass(frozen=True, eq=False)
class Hyperedge:
    level: int
    top: VertexClass
    vertex_set: tuple[str, ...]
    contained: tuple["Hyperedge", ...] = field(repr=False)
    kind: HyperedgeKind | None = None
    component: int = 0

    @property
    def ident(self) -> str:
        return f"E{self.level}{self.top}"

    @property
    def lower(self) -> tuple[str, ...]:
        """Vertices of the hyperedge outside its top class."""
        return tuple(v for v in self.vertex_set if v not in self.top.members)

    def classes(self):
        yield self.top
        for h in self.contained:
            yield from h.classes()

    def __str__(self):
        return f"{self.ident}={_fmt(self.vertex_set)}"


@dataclass
class FlagsHypergraph:
    graph: SimpleGraph
    classes: list[VertexClass]
    order: set[tuple[int, int]]
    hyperedges: list[Hyperedge]

    def __post_init__(self):
        self._by_vertex = {v: h for h in self.hyperedges for v in h.top.members}

    def hyperedge_of(self, v: str) -> Hyperedge:
        """The hyperedge whose top class contains *v*."""
        try:
            return self._by_vertex[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def class_of(self, v: str) -> VertexClass:
        return self.hyperedge_of(v).top

    def levels(self) -> dict[int, list[Hyperedge]]:
        out: dict[int, list[Hyperedge]] = {}
        for h in self.hyperedges:
            out.setdefault(h.level, []).append(h)
        return out

    def less(self, c: VertexClass, d: VertexClass) -> bool:
        return (self.classes.index(c), self.classes.index(d)) in self.order



def _check_order(g: SimpleGraph, classes: list[VertexClass]) -> set[tuple[int, int]]:
    order = set()
    for i, c in enumerate(classes):
        for j, d in enumerate(classes):
            if i == j:
                continue
            votes = {leq(g, x, y) for x in c.members for y in d.members}
            if len(votes) != 1:
                raise InvariantViolation(f"class order {c} vs {d} depends on representatives")
            if votes.pop():
                order.add((i, j))
    for i, j in order:
        if (j, i) in order:
            raise InvariantViolation(f"classes {classes[i]} and {classes[j]} are order-equivalent")
        for k in range(len(classes)):
            if (j, k) in order and (i, k) not in order:
                raise InvariantViolation("class order is not transitive")
    return order


def classify_hyperedge(g: SimpleGraph, fh: FlagsHypergraph | None, e: Hyperedge) -> HyperedgeKind:
    """Free / free-abelian at level one; centerless, with center, or abelian above."""
    top = e.top
    if e.level == 1:
        if top.kind is ClassKind.ANTICLIQUE:
            return HyperedgeKind(Kind.FREE_LEVEL_ONE)
        return HyperedgeKind(Kind.FREE_ABELIAN_LEVEL_ONE)
    rest = e.lower
    ab = tuple(w for w in rest if all(g.adjacent(w, v) for v in top.members))
    for i, x in enumerate(ab):
        for y in ab[i + 1:]:
            if not g.adjacent(x, y):
                raise InvariantViolation(f"center of {e.ident} is not abelian: {x}, {y} do not commute")
    b_part = tuple(w for w in rest if w not in ab)
    if not ab:
        if not b_part:
            raise InvariantViolation(f"{e.ident} has level {e.level} but no lower vertices")
        return HyperedgeKind(Kind.CENTERLESS, (), b_part)
    if not b_part and top.kind is not ClassKind.ANTICLIQUE:
        return HyperedgeKind(Kind.ABELIAN, ab, ())
    return HyperedgeKind(Kind.WITH_CENTER, ab, b_part)


def _build_connected(g: SimpleGraph, component: int = 0) -> tuple[list[VertexClass], set, list[Hyperedge]]:
    classes = vertex_classes(g)
    order = _check_order(g, classes)
    remaining = set(range(len(classes)))
    hyperedges: list[Hyperedge] = []
    level = 0
    while remaining:
        level += 1
        maximal = [i for i in sorted(remaining) if not any((i, j) in order for j in remaining)]
        if not maximal:
            raise InvariantViolation("class order has a cycle")
        new = []
        for i in maximal:
            c = classes[i]
            below = tuple(
                h for h in hyperedges
                if all((i, classes.index(d)) in order for d in h.classes())
            )
            verts = set(c.members)
            for h in below:
                verts.update(h.vertex_set)
            e = Hyperedge(level, c, g.sort(verts), below, component=component)
            e = Hyperedge(level, c, e.vertex_set, below, classify_hyperedge(g, None, e), component)
            new.append(e)
        hyperedges.extend(new)
        remaining.difference_update(maximal)
    return classes, order, hyperedges


def _sort_key(g):
    return lambda h: (h.component, h.level, g.index(h.top.rep))


def build_flags_hypergraph(g: SimpleGraph) -> FlagsHypergraph:
    """Build the graded hyperedges by repeatedly peeling off maximal classes.

    A disconnected graph is handled one component at a time; the hyperedges
    carry their component index and never straddle components.
    """
    comps = connected_components(g)
    if len(comps) <= 1:
        classes, order, hyperedges = _build_connected(g)
        hyperedges.sort(key=_sort_key(g))
        return FlagsHypergraph(g, classes, order, hyperedges)
    log.warning("graph is disconnected; analysing %d components separately", len(comps))
    classes: list[VertexClass] = []
    order: set[tuple[int, int]] = set()
    hyperedges: list[Hyperedge] = []
    for k, comp in enumerate(comps):
        sub = g.induced(comp)
        c, o, h = _build_connected(sub, k)
        off = len(classes)
        classes.extend(c)
        order.update((i + off, j + off) for i, j in o)
        hyperedges.extend(h)
    hyperedges.sort(key=_sort_key(g))
    return FlagsHypergraph(g, classes, order, hyperedges)


def is_nonabelian(e: Hyperedge) -> bool:
    """Whether the group generated by the hyperedge's vertices is non-abelian."""
    kind = e.kind.kind
    if kind in (Kind.ABELIAN, Kind.FREE_ABELIAN_LEVEL_ONE):
        return False
    if kind is Kind.FREE_LEVEL_ONE:
        return len(e.top.members) >= 2
    return bool(e.kind.b_part) or (e.top.kind is ClassKind.ANTICLIQUE)


# -- export -----------------------------------------------------------------

def hypergraph_document(fh: FlagsHypergraph) -> dict:
    g = fh.graph
    return {
        "classes": [{"members": list(c.members), "kind": c.kind.value} for c in fh.classes],
        "order": [[list(fh.classes[i].members), list(fh.classes[j].members)] for i, j in sorted(fh.order)],
        "hyperedges": [
            {
                "id": h.ident,
                "level": h.level,
                "component": h.component,
                "top_class": list(h.top.members),
                "vertex_set": list(h.vertex_set),
                "contains": [c.ident for c in sorted(h.contained, key=_sort_key(g))],
                "kind": h.kind.kind.value,
                "ab": list(h.kind.ab),
                "b_part": list(h.kind.b_part),
            }
            for h in fh.hyperedges
        ],
    }


_LEVEL_COLORS = ["lightblue", "palegreen", "khaki", "salmon", "plum", "lightgray"]


def hypergraph_dot(fh: FlagsHypergraph) -> str:
    """DOT rendering: one node per class coloured by level, arrows for containment."""
    lines = ["digraph flags {", "  rankdir=BT;", "  node [shape=box, style=filled];"]
    for h in fh.hyperedges:
        color = _LEVEL_COLORS[(h.level - 1) % len(_LEVEL_COLORS)]
        label = f"{h.top} L{h.level}\\n{h.kind}"
        lines.append(f'  "{h.ident}" [label="{label}", fillcolor={color}];')
    for h in fh.hyperedges:
        for c in h.contained:
            lines.append(f'  "{h.ident}" -> "{c.ident}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
