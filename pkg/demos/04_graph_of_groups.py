"""
Graphs of groups and quotient maps
==================================

Each hyperedge kills the link of its top class. What survives is the RAAG of
an induced subgraph, split as a graph of groups with trivial edge groups.
"""
import random

from raagflags.decompositions import (
    build_graph_of_groups,
    check_edge_stabilizers_trivial,
    gog_dot,
    line_actions,
    quotient_word,
)
from raagflags.flags import Kind, build_flags_hypergraph
from raagflags.graph import parse_graph
from raagflags.words import format_word, multiply, raag

g = parse_graph("a b\nb c\nc d\nd e\n")
fh = build_flags_hypergraph(g)

for e in fh.hyperedges:
    gog = build_graph_of_groups(g, fh, e)
    groups = ", ".join(map(str, gog.vertex_groups)) or "-"
    print(f"{e}: [{groups}] s={gog.loops_s} t={gog.loops_t} killed={gog.killed}",
          check_edge_stabilizers_trivial(gog))
    if e.kind.kind in (Kind.FREE_ABELIAN_LEVEL_ONE, Kind.ABELIAN):
        print("   lines:", [la.surviving_generator for la in line_actions(g, fh, e)])

e = fh.hyperedge_of("a")
print(format_word(quotient_word(g, e, "a b c b^-1 d")))

# the quotient map is a homomorphism; spot check on random words
R = raag(g)
rng = random.Random(0)
ok = True
for _ in range(500):
    w1 = R.decode(rng.randrange(10) for _ in range(6))
    w2 = R.decode(rng.randrange(10) for _ in range(6))
    lhs = quotient_word(g, e, w1 + w2)
    rhs = quotient_word(g, e, multiply(g, quotient_word(g, e, w1), quotient_word(g, e, w2)))
    ok &= lhs == rhs
print("multiplicative:", ok)

print(gog_dot(build_graph_of_groups(g, fh, e)))
