"""Route Laurence generators into <Aut_1, Inn> and check kernel preservation.

Routing follows the case analysis for inversions and transvections exactly.
Partial conjugations get closed-form candidates first and fall back to a
bounded search over short products of nearby Aut_1 generators. Every witness
is verified by composing it and comparing modulo inner automorphisms.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .automorphisms import (
    Automorphism,
    ClassAut,
    ComponentConjugation,
    FactorTransvection,
    CenterTransvection,
    Inner,
    Inversion,
    PartialConjugation,
    Symmetry,
    Transvection,
    compose,
    compose_all,
    equal_modulo_inner,
    hyperedge_generators,
)
from .decompositions import quotient_for
from .flags import FlagsHypergraph, Hyperedge, is_nonabelian
from .graph import SimpleGraph
from .words import Conjugator

DEFAULT_RADIUS = 4
DEFAULT_DEPTH = 3


@dataclass(frozen=True)
class Term:
    generator: object
    inverse: bool = False

    def realize(self, g: SimpleGraph) -> Automorphism:
        a = self.generator.realize(g)
        return a.inverse() if self.inverse else a

    def __str__(self):
        return self.generator.ident + ("^-1" if self.inverse else "")


@dataclass(frozen=True)
class Witness:
    """``terms[0] o terms[1] o ...`` equals the routed generator up to ``inner(conjugator)``."""
    terms: tuple[Term, ...]
    hyperedge: str | None = None
    conjugator: str = ""
    radius_used: int = 0
    method: str = "closed-form"

    def inverted(self) -> "Witness":
        return Witness(
            tuple(Term(t.generator, not t.inverse) for t in reversed(self.terms)),
            self.hyperedge, "", self.radius_used, self.method,
        )


@dataclass(frozen=True)
class SymmetryResidue:
    pass


@dataclass(frozen=True)
class SearchFailed:
    diagnostic: str
    frontier: int = 0


def _witness_automorphism(g: SimpleGraph, terms) -> Automorphism:
    return compose_all(g, [t.realize(g) for t in terms])


def _target(g, gen) -> Automorphism:
    if isinstance(gen, Automorphism):
        return gen
    if gen is None:
        return Automorphism.identity(g)
    return gen.realize(g)


def verify_witness(g: SimpleGraph, gen, result, radius: int = DEFAULT_RADIUS) -> bool:
    """Compose the witness terms and compare with *gen* modulo inner automorphisms."""
    if not isinstance(result, Witness):
        return False
    found = equal_modulo_inner(g, _witness_automorphism(g, result.terms), _target(g, gen), radius)
    return isinstance(found, Conjugator)


def _accept(g, target, terms, radius, hyperedge, method):
    found = equal_modulo_inner(g, _witness_automorphism(g, terms), target, radius)
    if isinstance(found, Conjugator):
        word = " ".join(map(str, found.word))
        return Witness(tuple(terms), hyperedge, word, len(found.word), method)
    return None


def _closed_form(g: SimpleGraph, fh: FlagsHypergraph, gen):
    """Candidate witnesses read off the proof's case analysis."""
    if isinstance(gen, Inversion):
        e = fh.hyperedge_of(gen.v)
        return e, [[Term(ClassAut(e.ident, "invert", gen.v))]]
    if isinstance(gen, Transvection):
        v, w = gen.v, gen.w
        e = fh.hyperedge_of(v)
        if w in e.top.members:
            return e, [[Term(ClassAut(e.ident, "transvect", v, w))]]
        if not g.adjacent(v, w):
            if w in e.kind.b_part:
                return e, [[Term(FactorTransvection(e.ident, v, w))]]
            return e, []
        if w in e.kind.ab:
            return e, [[Term(CenterTransvection(e.ident, v, w))]]
        return e, []
    if isinstance(gen, PartialConjugation):
        v, comp = gen.v, gen.component
        e = fh.hyperedge_of(v)
        if len(comp) > 1:
            return e, [[Term(ComponentConjugation(e.ident, comp, v, _tied(e, comp)))]]
        (x,) = comp
        if x in e.top.members:
            # sibling in an anti-clique class: x -> v x v^-1
            return e, [[
                Term(ClassAut(e.ident, "transvect", x, v, "left")),
                Term(ClassAut(e.ident, "transvect", x, v, "right"), inverse=True),
            ]]
        ex = fh.hyperedge_of(x)
        return ex, [[
            Term(FactorTransvection(ex.ident, x, v, "left")),
            Term(FactorTransvection(ex.ident, x, v, "right"), inverse=True),
        ]]
    return None, []


def _tied(e: Hyperedge, comp):
    lower = set(e.lower)
    return tuple(x for x in comp if x in lower)


def _search_pool(g: SimpleGraph, fh: FlagsHypergraph, gen) -> list[Term]:
    support = {gen.v, *getattr(gen, "component", ()), getattr(gen, "w", gen.v)}
    hyperedges = []
    for v in g.vertices:
        if v in support:
            e = fh.hyperedge_of(v)
            if e not in hyperedges:
                hyperedges.append(e)
    pool = []
    for e in hyperedges:
        for h in hyperedge_generators(g, e):
            pool.append(Term(h))
            pool.append(Term(h, inverse=True))
    return pool


def _exponent_profile(aut: Automorphism):
    R = aut.R
    return tuple(tuple(R.exponent_sums(f)) for f in aut.forward)


def _bounded_search(g, fh, gen, target, radius, depth):
    pool = _search_pool(g, fh, gen)
    # conjugation preserves exponent sums, so this filters before the inner search
    profile = _exponent_profile(target)
    realized = [t.realize(g) for t in pool]
    seen = {Automorphism.identity(g).forward}
    frontier = [((), Automorphism.identity(g))]
    explored = 0
    for _ in range(depth):
        nxt = []
        for terms, aut in frontier:
            for i, a in enumerate(realized):
                prod = compose(g, aut, a, check=False)
                if prod.forward in seen:
                    continue
                seen.add(prod.forward)
                explored += 1
                cand = terms + (i,)
                found = None
                if _exponent_profile(prod) == profile:
                    found = equal_modulo_inner(g, prod, target, radius)
                if isinstance(found, Conjugator):
                    word = " ".join(map(str, found.word))
                    return Witness(tuple(pool[k] for k in cand), None, word, len(found.word), "search"), explored
                nxt.append((cand, prod))
        frontier = nxt
    return None, explored


def route_laurence_generator(g: SimpleGraph, fh: FlagsHypergraph, gen, radius: int = DEFAULT_RADIUS,
                             depth: int = DEFAULT_DEPTH, closed_form: bool = True):
    """Express *gen* through Aut_1 and inner automorphisms.

    Returns a :class:`Witness`, :class:`SymmetryResidue` for graph symmetries,
    or :class:`SearchFailed`. ``closed_form=False`` skips straight to the
    bounded search (partial conjugations only).
    """
    if isinstance(gen, Symmetry):
        return SymmetryResidue()
    if isinstance(gen, Inner):
        return Witness((Term(gen),), None, "", 0, "inner")
    target = gen.realize(g)
    e, candidates = _closed_form(g, fh, gen) if closed_form else (None, [])
    for terms in candidates:
        w = _accept(g, target, terms, radius, e.ident if e else None, "closed-form")
        if w is not None:
            return w
    if isinstance(gen, PartialConjugation):
        w, explored = _bounded_search(g, fh, gen, target, radius, depth)
        if w is not None:
            return w
        return SearchFailed(f"no product of depth <= {depth} matched {gen.ident} within radius {radius}", explored)
    return SearchFailed(f"{gen.ident}: case analysis produced no verified witness")


# -- kernel preservation ----------------------------------------------------

@dataclass(frozen=True)
class Prop15Report:
    hyperedge: str
    generator: str
    kernel_preserved: bool
    induced_bijective: bool
    evidence: dict = field(default_factory=dict)


def verify_prop15(g: SimpleGraph, fh: FlagsHypergraph, e: Hyperedge, gen) -> Prop15Report:
    """Does *gen* preserve the kernel of the quotient attached to *e*, and act bijectively on it?"""
    if not is_nonabelian(e):
        raise ValueError(f"{e.ident} has an abelian group; kernel preservation is not claimed there")
    q = quotient_for(g, e.top.members)
    tau = gen.realize(g)
    evidence = {}
    preserved = True
    for x in sorted(q.killed, key=g.index):
        img = q.image(tau.forward[g.index(x)])
        evidence[x] = q.R.format(img)
        preserved &= not img
    back_preserved = all(not q.image(tau.backward[g.index(x)]) for x in q.killed)
    bijective = False
    if preserved and back_preserved:
        fwd = [q.image(tau.forward[g.index(y)]) for y in q.survivors]
        bwd = [q.image(tau.backward[g.index(y)]) for y in q.survivors]
        induced = Automorphism(q.target, fwd, bwd)
        inv = induced.inverse()
        bijective = all(
            inv.substitute(induced.forward[i]) == (2 * i,) and induced.substitute(induced.backward[i]) == (2 * i,)
            for i in range(len(q.survivors))
        )
    return Prop15Report(e.ident, gen.ident, preserved, bijective, evidence)
