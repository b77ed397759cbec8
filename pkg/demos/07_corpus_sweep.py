"""
Sweeping all small connected graphs
===================================

Connected graphs up to isomorphism come from a canonical-code sweep over
edge subsets. The full battery of checks runs on each one.
"""
import json

from raagflags.corpus import connected_graphs
from raagflags.verify import run_corpus

print([len(connected_graphs(n)) for n in range(1, 7)])

report = run_corpus(max_n=4, samples=200)
print(json.dumps(report["summary"], indent=2))
for rep in report["graphs"]:
    print(f"{rep['graph']:20} hyperedges={len(rep['hypergraph']['hyperedges'])} failures={rep['failures']}")
