"""Write every connected simple graph on 1..=8 vertices as graph6, one per line.

Graphs on up to 7 vertices come from the networkx graph atlas. Graphs on 8
vertices are built by attaching a new vertex to each connected 7-vertex graph
(every connected graph has a non-cut vertex) and deduplicating up to
isomorphism. Counts are checked against OEIS A001349.
"""

import sys
from collections import defaultdict

import networkx as nx

EXPECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def key(g):
    degs = tuple(sorted(d for _, d in g.degree()))
    return degs, nx.weisfeiler_lehman_graph_hash(g, iterations=3)


def main(out_path):
    by_n = defaultdict(list)
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n >= 1 and nx.is_connected(g):
            by_n[n].append(g)

    buckets = defaultdict(list)
    for base in by_n[7]:
        for mask in range(1, 1 << 7):
            g = base.copy()
            g.add_node(7)
            g.add_edges_from((7, v) for v in range(7) if mask >> v & 1)
            bucket = buckets[key(g)]
            if not any(nx.is_isomorphic(g, h) for h in bucket):
                bucket.append(g)
    by_n[8] = [g for b in buckets.values() for g in b]

    with open(out_path, "wb") as f:
        for n in range(1, 9):
            assert len(by_n[n]) == EXPECTED[n], (n, len(by_n[n]))
            for g in by_n[n]:
                g = nx.convert_node_labels_to_integers(g, ordering="sorted")
                f.write(nx.to_graph6_bytes(g, header=False))
    print({n: len(by_n[n]) for n in range(1, 9)})


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/connected-1-8.g6")
