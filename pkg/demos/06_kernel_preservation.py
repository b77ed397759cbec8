"""
Hyperedge generators preserve the quotient kernels
==================================================

For a hyperedge with a non-abelian quotient, every hyperedge generator maps
the killed generators into the kernel and induces a bijection downstairs.
A graph symmetry, by contrast, can move the kernel.
"""
from raagflags.automorphisms import Symmetry, enumerate_aut1_generators
from raagflags.factorizer import verify_prop15
from raagflags.flags import build_flags_hypergraph, is_nonabelian
from raagflags.graph import parse_graph

g = parse_graph("a b\nb c\nc d\nd a\na e\n")
fh = build_flags_hypergraph(g)
gens = enumerate_aut1_generators(g, fh)

for e in fh.hyperedges:
    if not is_nonabelian(e):
        print(e.ident, "abelian quotient, skipped")
        continue
    reports = [verify_prop15(g, fh, e, gen) for gen in gens]
    good = sum(r.kernel_preserved and r.induced_bijective for r in reports)
    print(f"{e.ident}: {good}/{len(reports)} generators preserve the kernel")

c4 = parse_graph("a b\nb c\nc d\nd a\n")
fh4 = build_flags_hypergraph(c4)
rotation = Symmetry((("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")))
print(verify_prop15(c4, fh4, fh4.hyperedge_of("a"), rotation))
