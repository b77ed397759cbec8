"""
Automorphism generators
=======================

The classical generating set (inversions, transvections, partial
conjugations, graph symmetries, inner) next to the per-hyperedge families.
"""
from raagflags.automorphisms import (
    Inversion,
    Transvection,
    apply,
    check_homomorphism,
    compose,
    enumerate_aut1_generators,
    enumerate_laurence_generators,
)
from raagflags.flags import build_flags_hypergraph
from raagflags.graph import parse_graph
from raagflags.words import format_word

g = parse_graph("a b\nb c\nc d\n")
fh = build_flags_hypergraph(g)

laurence = enumerate_laurence_generators(g)
aut1 = enumerate_aut1_generators(g, fh)
print(len(laurence), "classical generators,", len(aut1), "hyperedge generators")
for gen in aut1:
    print("  ", gen.ident)

t = Transvection("a", "b").realize(g)
i = Inversion("a").realize(g)
print(t)
print(format_word(apply(g, t, "a a")))

# composition applies the right-hand map first
print(compose(g, t, i), check_homomorphism(g, compose(g, t, i)))
print(all(check_homomorphism(g, x.realize(g)) for x in laurence + aut1))
