"""
Routing classical generators through the hyperedge groups
=========================================================

Every inversion, transvection and partial conjugation is written as a short
product of hyperedge generators, possibly up to an inner automorphism, and
the product is checked by composing it.
"""
from raagflags.automorphisms import PartialConjugation, enumerate_laurence_generators
from raagflags.factorizer import SymmetryResidue, route_laurence_generator, verify_witness
from raagflags.flags import build_flags_hypergraph
from raagflags.graph import parse_graph

g = parse_graph("a b\nb c\nc d\nd e\ne a\na f\n")
fh = build_flags_hypergraph(g)

for gen in enumerate_laurence_generators(g):
    res = route_laurence_generator(g, fh, gen)
    if isinstance(res, SymmetryResidue):
        print(f"{gen.ident:40} symmetry, left over")
        continue
    terms = " o ".join(map(str, res.terms))
    inner = f"  mod inner {res.conjugator}" if res.conjugator else ""
    print(f"{gen.ident:40} = {terms}{inner}", verify_witness(g, gen, res))

# without the closed forms the bounded search still finds a product
p5 = parse_graph("a b\nb c\nc d\nd e\n")
gen = PartialConjugation("c", ("e",))
res = route_laurence_generator(p5, build_flags_hypergraph(p5), gen, closed_form=False)
print(gen.ident, "->", [str(t) for t in res.terms], "conjugator", repr(res.conjugator), res.method)
