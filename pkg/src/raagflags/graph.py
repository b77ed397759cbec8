"""Finite simple graphs: links, stars, class-relative complements, symmetries.

Vertex labels are opaque strings. The input order of the vertices is the
canonical order used for every tie-break downstream.
"""
from __future__ import annotations

import enum
import json
import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

log = logging.getLogger(__name__)

SYMMETRY_CAP = 10


class GraphError(ValueError):
    """Raised for malformed graph input or an unknown vertex."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ClassKind(enum.Enum):
    CLIQUE = "Clique"
    ANTICLIQUE = "AntiClique"
    SINGLETON = "Singleton"


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]] = frozenset()
    _adj: dict = field(default=None, init=False, repr=False, compare=False, hash=False)
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        verts = tuple(self.vertices)
        if len(set(verts)) != len(verts):
            raise GraphError("duplicate vertex")
        edges = frozenset(frozenset(e) for e in self.edges)
        adj = {v: set() for v in verts}
        for e in edges:
            if len(e) != 2:
                raise GraphError(f"self-loop on {next(iter(e))}")
            u, v = e
            if u not in adj or v not in adj:
                raise GraphError(f"edge {u}-{v} has an unknown endpoint")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_adj", {v: frozenset(n) for v, n in adj.items()})
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(verts)})

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[str]], vertices: Iterable[str] = ()) -> "SimpleGraph":
        order: list[str] = []
        seen = set()
        for v in vertices:
            if v not in seen:
                seen.add(v)
                order.append(v)
        edges = [tuple(e) for e in edges]
        for e in edges:
            for v in e:
                if v not in seen:
                    seen.add(v)
                    order.append(v)
        return cls(tuple(order), frozenset(frozenset(e) for e in edges))

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self._index

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def adjacent(self, u: str, v: str) -> bool:
        return v in self.neighbors(u)

    def neighbors(self, v: str) -> frozenset[str]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def sort(self, vs: Iterable[str]) -> tuple[str, ...]:
        """Return *vs* in canonical vertex order."""
        return tuple(sorted(vs, key=self.index))

    def induced(self, vs: Iterable[str]) -> "SimpleGraph":
        keep = set(vs)
        return SimpleGraph(
            tuple(v for v in self.vertices if v in keep),
            frozenset(e for e in self.edges if e <= keep),
        )

    def sorted_edges(self) -> list[tuple[str, str]]:
        pairs = [self.sort(e) for e in self.edges]
        return sorted(pairs, key=lambda p: (self.index(p[0]), self.index(p[1])))

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))


@dataclass(frozen=True)
class VertexClass:
    members: tuple[str, ...]
    kind: ClassKind

    def __contains__(self, v):
        return v in self.members

    @property
    def is_clique(self) -> bool:
        return self.kind is ClassKind.CLIQUE

    @property
    def rep(self) -> str:
        return self.members[0]

    def __str__(self):
        return "{" + ",".join(self.members) + "}"


# -- parsing / export -------------------------------------------------------

def parse_graph(text: str) -> SimpleGraph:
    """Parse an edge-list file or a JSON document into a graph.

    Edge-list lines are ``u v``; ``vertex u`` declares an isolated vertex and
    ``#`` starts a comment. Duplicate edges collapse.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        return _parse_json(stripped)
    order: list[str] = []
    declared: set[str] = set()
    edges: set[frozenset[str]] = set()

    def see(v):
        if v not in declared:
            declared.add(v)
            order.append(v)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertex":
            if len(parts) != 2:
                raise GraphError("expected 'vertex <name>'", lineno)
            if parts[1] in declared:
                raise GraphError(f"duplicate vertex {parts[1]!r}", lineno)
            see(parts[1])
            continue
        if len(parts) != 2:
            raise GraphError(f"malformed line {raw.strip()!r}", lineno)
        u, v = parts
        if u == v:
            raise GraphError(f"self-loop on {u!r}", lineno)
        see(u)
        see(v)
        edges.add(frozenset((u, v)))
    return _checked(SimpleGraph(tuple(order), frozenset(edges)))


def _checked(g: SimpleGraph) -> SimpleGraph:
    if len(g) < 3:
        log.warning("graph has %d vertices; the flags hypergraph is meant for 3 or more", len(g))
    return g


def _parse_json(text: str) -> SimpleGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise GraphError("JSON graph needs a 'vertices' list")
    verts = [str(v) for v in doc["vertices"]]
    seen = set()
    for v in verts:
        if v in seen:
            raise GraphError(f"duplicate vertex {v!r}")
        seen.add(v)
    edges = set()
    for e in doc.get("edges", []):
        if len(e) != 2:
            raise GraphError(f"malformed edge {e!r}")
        u, v = str(e[0]), str(e[1])
        if u == v:
            raise GraphError(f"self-loop on {u!r}")
        if u not in seen or v not in seen:
            raise GraphError(f"edge {u}-{v} has an unknown endpoint")
        edges.add(frozenset((u, v)))
    return _checked(SimpleGraph(tuple(verts), frozenset(edges)))


def export_graph(g: SimpleGraph, fmt: str = "edges") -> str:
    """Serialize *g* as an edge list (``fmt="edges"``) or JSON (``fmt="json"``)."""
    if fmt == "json":
        return json.dumps({"vertices": list(g.vertices), "edges": [list(e) for e in g.sorted_edges()]})
    if fmt != "edges":
        raise ValueError(f"unknown graph format {fmt!r}")
    lines = []
    # declare vertices first so the order survives a round trip
    lines.extend(f"vertex {v}" for v in g.vertices)
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# -- local structure --------------------------------------------------------

def link(g: SimpleGraph, v: str) -> frozenset[str]:
    return g.neighbors(v)


def star(g: SimpleGraph, v: str) -> frozenset[str]:
    return g.neighbors(v) | {v}


def class_link(g: SimpleGraph, c: VertexClass) -> frozenset[str]:
    return link(g, c.rep) - set(c.members)


def class_star(g: SimpleGraph, c: VertexClass) -> frozenset[str]:
    return class_link(g, c) | set(c.members)


def connected_components(g: SimpleGraph, within: Iterable[str] | None = None) -> list[tuple[str, ...]]:
    """Components of the subgraph induced on *within*, ordered by least vertex."""
    pool = set(g.vertices if within is None else within)
    comps = []
    for v in g.vertices:
        if v not in pool:
            continue
        comp = {v}
        stack = [v]
        pool.discard(v)
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y in pool:
                    pool.discard(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(g.sort(comp))
    return comps


def components_outside_star(g: SimpleGraph, c: VertexClass) -> tuple[list[tuple[str, ...]], list[str]]:
    """Split the complement of st(c) into non-singleton and singleton components."""
    rest = set(g.vertices) - class_star(g, c)
    big, single = [], []
    for comp in connected_components(g, rest):
        if len(comp) == 1:
            single.append(comp[0])
        else:
            big.append(comp)
    return big, single


def is_connected(g: SimpleGraph) -> bool:
    return len(connected_components(g)) <= 1


# -- symmetries -------------------------------------------------------------

def enumerate_graph_symmetries(g: SimpleGraph, cap: int = SYMMETRY_CAP) -> list[dict[str, str]]:
    """All adjacency-preserving vertex permutations, identity first.

    Plain backtracking: vertex ``g.vertices[i]`` is assigned an image of equal
    degree, checked against every previously assigned vertex.
    """
    n = len(g)
    if n > cap:
        raise GraphError(f"symmetry enumeration capped at {cap} vertices (graph has {n})")
    verts = g.vertices
    deg = [g.degree(v) for v in verts]
    adj = [[g.adjacent(u, v) for v in verts] for u in verts]
    image = [-1] * n
    used = [False] * n
    out: list[dict[str, str]] = []

    def extend(i):
        if i == n:
            out.append({verts[k]: verts[image[k]] for k in range(n)})
            return
        # candidates in vertex order puts the identity first
        for j in range(n):
            if used[j] or deg[j] != deg[i]:
                continue
            if all(adj[i][k] == adj[j][image[k]] for k in range(i)):
                image[i] = j
                used[j] = True
                extend(i + 1)
                used[j] = False
        image[i] = -1

    extend(0)
    return out
