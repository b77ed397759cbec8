"""
The flags hypergraph
====================

Vertices are ordered by ``lk(u) <= st(v)``. Maximal classes are peeled off
level by level and each class becomes the top of one hyperedge.
"""
from raagflags.flags import build_flags_hypergraph, hypergraph_dot, vertex_classes
from raagflags.graph import parse_graph

graphs = {
    "P3": "a b\nb c\n",
    "P4": "a b\nb c\nc d\n",
    "C4": "a b\nb c\nc d\nd a\n",
    "K4": "a b\na c\na d\nb c\nb d\nc d\n",
    "star": "z a\nz b\nz c\n",
}

for name, text in graphs.items():
    g = parse_graph(text)
    fh = build_flags_hypergraph(g)
    print(name, "classes:", ", ".join(f"{c}:{c.kind.value}" for c in vertex_classes(g)))
    for e in fh.hyperedges:
        print(f"   {e}  level {e.level}  {e.kind}")

# DOT for the P4 hypergraph, ready for `dot -Tpng`
print(hypergraph_dot(build_flags_hypergraph(parse_graph(graphs["P4"]))))
