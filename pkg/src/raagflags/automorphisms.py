"""Automorphisms of A_Gamma and the two generator families.

An :class:`Automorphism` stores the image of every generator together with a
formal inverse. Validity (relations respected, the two maps mutually inverse)
is checked, never assumed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .flags import FlagsHypergraph, Hyperedge, Kind, leq
from .graph import ClassKind, GraphError, SimpleGraph, components_outside_star, connected_components, enumerate_graph_symmetries, star
from .words import Conjugator, NotWithinRadius, RAAG, Word, WordLike, raag


class GeneratorError(ValueError):
    """Generator parameters are not valid for the graph."""


class Automorphism:
    """Generator images as normal forms (int-encoded, see :mod:`raagflags.words`)."""

    __slots__ = ("graph", "R", "forward", "backward", "_fwd_inv")

    def __init__(self, g: SimpleGraph, forward: Sequence[Sequence[int]], backward: Sequence[Sequence[int]]):
        self.graph = g
        self.R = R = raag(g)
        self.forward = tuple(R.normal_form(w) for w in forward)
        self.backward = tuple(R.normal_form(w) for w in backward)
        self._fwd_inv = None

    @classmethod
    def identity(cls, g: SimpleGraph) -> "Automorphism":
        ids = [(2 * i,) for i in range(len(g))]
        return cls(g, ids, ids)

    @classmethod
    def from_images(cls, g: SimpleGraph, forward: dict, backward: dict) -> "Automorphism":
        """Build from ``{vertex: word}`` maps; missing vertices map to themselves."""
        R = raag(g)
        f = [R.encode(forward.get(v, ((v, 1),))) for v in g.vertices]
        b = [R.encode(backward.get(v, ((v, 1),))) for v in g.vertices]
        return cls(g, f, b)

    def image(self, v: str) -> Word:
        return self.R.decode(self.forward[self.graph.index(v)])

    def preimage(self, v: str) -> Word:
        return self.R.decode(self.backward[self.graph.index(v)])

    def inverse(self) -> "Automorphism":
        return Automorphism(self.graph, self.backward, self.forward)

    def substitute(self, w: Iterable[int]) -> tuple[int, ...]:
        if self._fwd_inv is None:
            self._fwd_inv = tuple(tuple(x ^ 1 for x in reversed(f)) for f in self.forward)
        out: list[int] = []
        for x in w:
            out.extend(self._fwd_inv[x >> 1] if x & 1 else self.forward[x >> 1])
        return self.R.normal_form(out)

    def __eq__(self, other):
        return isinstance(other, Automorphism) and self.graph == other.graph and self.forward == other.forward

    def __hash__(self):
        return hash(self.forward)

    def __repr__(self):
        parts = [f"{v}->{self.R.format(f) or '1'}" for v, f in zip(self.graph.vertices, self.forward)]
        return "Automorphism(" + ", ".join(parts) + ")"

    def document(self) -> dict:
        R = self.R
        names = self.graph.vertices
        return {
            "forward": {v: R.format(f) for v, f in zip(names, self.forward)},
            "backward": {v: R.format(b) for v, b in zip(names, self.backward)},
        }


def apply(g: SimpleGraph, aut: Automorphism, w: WordLike) -> Word:
    R = raag(g)
    return R.decode(aut.substitute(R.encode(w)))


def compose(g: SimpleGraph, a1: Automorphism, a2: Automorphism, check: bool = True) -> Automorphism:
    """``a1 o a2``: apply a2 first."""
    fwd = [a1.substitute(w) for w in a2.forward]
    a2_inv = a2.inverse()
    bwd = [a2_inv.substitute(w) for w in a1.backward]
    out = Automorphism(g, fwd, bwd)
    if check and not check_homomorphism(g, out):
        raise RuntimeError("composition of automorphisms failed validation")
    return out


def compose_all(g: SimpleGraph, auts: Iterable[Automorphism]) -> Automorphism:
    """Compose left to right as written: ``compose_all([a, b]) == a o b``."""
    out = Automorphism.identity(g)
    for a in auts:
        out = compose(g, out, a, check=False)
    return out


def check_homomorphism(g: SimpleGraph, aut: Automorphism) -> bool:
    R = aut.R
    for fwd in (aut.forward, aut.backward):
        for u, v in g.sorted_edges():
            x, y = fwd[g.index(u)], fwd[g.index(v)]
            comm = x + y + tuple(t ^ 1 for t in reversed(x)) + tuple(t ^ 1 for t in reversed(y))
            if not R.is_identity(comm):
                return False
    inv = aut.inverse()
    for i in range(len(g)):
        if inv.substitute(aut.forward[i]) != (2 * i,):
            return False
        if aut.substitute(aut.backward[i]) != (2 * i,):
            return False
    return True


def equal_automorphisms(g: SimpleGraph, a1: Automorphism, a2: Automorphism) -> bool:
    return a1.forward == a2.forward


def inner(g: SimpleGraph, c: WordLike) -> Automorphism:
    """Conjugation ``x -> c x c^-1`` by an arbitrary word."""
    R = raag(g)
    return _inner_encoded(R, R.encode(c if not isinstance(c, str) or c not in g else ((c, 1),)))


def _inner_encoded(R: RAAG, c: Sequence[int]) -> Automorphism:
    c = tuple(c)
    ci = tuple(x ^ 1 for x in reversed(c))
    n = R.n
    fwd = [c + (2 * i,) + ci for i in range(n)]
    bwd = [ci + (2 * i,) + c for i in range(n)]
    return Automorphism(R.graph, fwd, bwd)


def equal_modulo_inner(g: SimpleGraph, a1: Automorphism, a2: Automorphism, radius: int):
    """Search ``c`` with ``inner(c) o a1 == a2``; bounded, so a miss proves nothing."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    R = raag(g)
    target = a2.forward
    for c in R.ball(radius):
        ci = tuple(x ^ 1 for x in reversed(c))
        if all(R.normal_form(c + f + ci) == t for f, t in zip(a1.forward, target)):
            return Conjugator(R.decode(c))
    return NotWithinRadius(radius)


# -- generators -------------------------------------------------------------

def _fmt(vs):
    return "{" + ",".join(vs) + "}"


def _check_vertex(g, *vs):
    for v in vs:
        if v not in g:
            raise GeneratorError(f"unknown vertex {v!r}")


@dataclass(frozen=True)
class Inner:
    conjugator: str

    @property
    def ident(self):
        return f"Inner({self.conjugator})"

    def realize(self, g):
        _check_vertex(g, self.conjugator)
        return inner(g, self.conjugator)


@dataclass(frozen=True)
class Symmetry:
    permutation: tuple[tuple[str, str], ...]

    @property
    def ident(self):
        moved = [f"{a}->{b}" for a, b in self.permutation if a != b]
        return "Symmetry(" + ",".join(moved) + ")"

    def realize(self, g):
        perm = dict(self.permutation)
        if sorted(perm) != sorted(g.vertices) or sorted(perm.values()) != sorted(g.vertices):
            raise GeneratorError("symmetry is not a permutation of the vertices")
        for u, v in g.sorted_edges():
            if not g.adjacent(perm[u], perm[v]):
                raise GeneratorError("permutation does not preserve adjacency")
        fwd = {a: ((b, 1),) for a, b in perm.items()}
        back = {b: ((a, 1),) for a, b in perm.items()}
        return Automorphism.from_images(g, fwd, back)


@dataclass(frozen=True)
class Inversion:
    v: str

    @property
    def ident(self):
        return f"Inversion({self.v})"

    def realize(self, g):
        _check_vertex(g, self.v)
        w = ((self.v, -1),)
        return Automorphism.from_images(g, {self.v: w}, {self.v: w})


def _transvection(g, v, w, side="right"):
    if side == "right":
        return Automorphism.from_images(g, {v: ((v, 1), (w, 1))}, {v: ((v, 1), (w, -1))})
    return Automorphism.from_images(g, {v: ((w, 1), (v, 1))}, {v: ((w, -1), (v, 1))})


@dataclass(frozen=True)
class Transvection:
    v: str
    w: str

    @property
    def ident(self):
        return f"Transvection({self.v},{self.w})"

    def realize(self, g):
        _check_vertex(g, self.v, self.w)
        if self.v == self.w or not leq(g, self.v, self.w):
            raise GeneratorError(f"transvection {self.v}->{self.v}{self.w} needs {self.v} <= {self.w}")
        return _transvection(g, self.v, self.w)


def _conjugate_set(g, support, c):
    fwd = {x: ((c, 1), (x, 1), (c, -1)) for x in support}
    bwd = {x: ((c, -1), (x, 1), (c, 1)) for x in support}
    return Automorphism.from_images(g, fwd, bwd)


@dataclass(frozen=True)
class PartialConjugation:
    v: str
    component: tuple[str, ...]

    @property
    def ident(self):
        return f"PartialConjugation({self.v},{_fmt(self.component)})"

    def realize(self, g):
        _check_vertex(g, self.v, *self.component)
        comps = connected_components(g, set(g.vertices) - star(g, self.v))
        if tuple(g.sort(self.component)) not in comps:
            raise GeneratorError(f"{_fmt(self.component)} is not a component of the complement of st({self.v})")
        return _conjugate_set(g, self.component, self.v)


LaurenceGenerator = Union[Inner, Symmetry, Inversion, Transvection, PartialConjugation]


# Aut_1 generators carry the identifier of the hyperedge they belong to.

@dataclass(frozen=True)
class ClassAut:
    """Elementary automorphism of the group generated by a top class."""
    hyperedge: str
    op: str  # "swap" | "invert" | "transvect"
    u: str
    u2: str | None = None
    side: str = "right"

    @property
    def ident(self):
        if self.op == "invert":
            return f"ClassAut[{self.hyperedge}](invert {self.u})"
        if self.op == "swap":
            return f"ClassAut[{self.hyperedge}](swap {self.u},{self.u2})"
        img = f"{self.u}{self.u2}" if self.side == "right" else f"{self.u2}{self.u}"
        return f"ClassAut[{self.hyperedge}]({self.u}->{img})"

    def realize(self, g):
        _check_vertex(g, self.u)
        if self.op == "invert":
            w = ((self.u, -1),)
            return Automorphism.from_images(g, {self.u: w}, {self.u: w})
        _check_vertex(g, self.u2)
        if not (leq(g, self.u, self.u2) and leq(g, self.u2, self.u)) or self.u == self.u2:
            raise GeneratorError(f"{self.u}, {self.u2} are not distinct members of one class")
        if self.op == "swap":
            m = {self.u: ((self.u2, 1),), self.u2: ((self.u, 1),)}
            return Automorphism.from_images(g, m, m)
        if self.op == "transvect":
            return _transvection(g, self.u, self.u2, self.side)
        raise GeneratorError(f"unknown class operation {self.op!r}")


@dataclass(frozen=True)
class FactorTransvection:
    hyperedge: str
    v: str
    w: str
    side: str = "right"

    @property
    def ident(self):
        img = f"{self.v}{self.w}" if self.side == "right" else f"{self.w}{self.v}"
        return f"FactorTransvection[{self.hyperedge}]({self.v}->{img})"

    def realize(self, g):
        _check_vertex(g, self.v, self.w)
        if self.v == self.w or g.adjacent(self.v, self.w) or not leq(g, self.v, self.w):
            raise GeneratorError(f"factor transvection {self.v}, {self.w} is not valid")
        return _transvection(g, self.v, self.w, self.side)


@dataclass(frozen=True)
class CenterTransvection:
    hyperedge: str
    v: str
    z: str

    @property
    def ident(self):
        return f"CenterTransvection[{self.hyperedge}]({self.v}->{self.v}{self.z})"

    def realize(self, g):
        _check_vertex(g, self.v, self.z)
        if self.v == self.z or not g.adjacent(self.v, self.z) or not leq(g, self.v, self.z):
            raise GeneratorError(f"center transvection {self.v}, {self.z} is not valid")
        return _transvection(g, self.v, self.z)


@dataclass(frozen=True)
class ComponentConjugation:
    """Conjugate a whole component of the complement of st([v]) by one letter.

    ``tied`` records the lower vertices of the hyperedge inside the component;
    they are conjugated together with it.
    """
    hyperedge: str
    component: tuple[str, ...]
    conjugator: str
    tied: tuple[str, ...] = ()

    @property
    def ident(self):
        return f"ComponentConjugation[{self.hyperedge}]({_fmt(self.component)} by {self.conjugator})"

    def realize(self, g):
        _check_vertex(g, self.conjugator, *self.component)
        c = self.conjugator
        comp = set(self.component)
        # x -> c x c^-1 on comp is a homomorphism iff c commutes with the boundary of comp
        boundary = {y for x in comp for y in g.neighbors(x)} - comp
        if not boundary <= star(g, c):
            raise GeneratorError(f"{c} does not commute with the boundary of {_fmt(self.component)}")
        return _conjugate_set(g, self.component, c)


Aut1Generator = Union[ClassAut, FactorTransvection, CenterTransvection, ComponentConjugation]


def realize(g: SimpleGraph, gen) -> Automorphism:
    return gen.realize(g)


def enumerate_laurence_generators(g: SimpleGraph) -> list:
    """Inversions, transvections, partial conjugations, symmetries, inner."""
    out: list = [Inversion(v) for v in g.vertices]
    out += [Transvection(v, w) for v in g.vertices for w in g.vertices if v != w and leq(g, v, w)]
    for v in g.vertices:
        for comp in connected_components(g, set(g.vertices) - star(g, v)):
            out.append(PartialConjugation(v, comp))
    for perm in enumerate_graph_symmetries(g)[1:]:
        out.append(Symmetry(tuple((v, perm[v]) for v in g.vertices)))
    out += [Inner(v) for v in g.vertices]
    return out


def hyperedge_generators(g: SimpleGraph, e: Hyperedge) -> list:
    h = e.ident
    top = e.top.members
    free = e.top.kind is not ClassKind.CLIQUE and e.kind.kind is not Kind.FREE_ABELIAN_LEVEL_ONE
    out: list = []
    for i, u in enumerate(top):
        for u2 in top[i + 1:]:
            out.append(ClassAut(h, "swap", u, u2))
    out += [ClassAut(h, "invert", u) for u in top]
    sides = ("right", "left") if free else ("right",)
    for side in sides:
        out += [ClassAut(h, "transvect", u, u2, side) for u in top for u2 in top if u != u2]
    if e.kind.b_part and free:
        for side in ("right", "left"):
            out += [FactorTransvection(h, v, w, side) for v in top for w in e.kind.b_part]
    if e.kind.kind in (Kind.WITH_CENTER, Kind.ABELIAN):
        out += [CenterTransvection(h, v, z) for v in top for z in e.kind.ab]
    big, _ = components_outside_star(g, e.top)
    conjugators = top if e.level == 1 else e.vertex_set
    lower = set(e.lower)
    for comp in big:
        tied = tuple(x for x in comp if x in lower)
        out += [ComponentConjugation(h, comp, c, tied) for c in conjugators]
    return out


def enumerate_aut1_generators(g: SimpleGraph, fh: FlagsHypergraph) -> list:
    """All Aut_1 generators, hyperedge by hyperedge in hypergraph order."""
    if any(e.component for e in fh.hyperedges):
        raise GraphError("Aut_1 generators are defined per connected component; pass a component")
    out = []
    for e in fh.hyperedges:
        out.extend(hyperedge_generators(g, e))
    return out
