"""
Searching every orientation of a small graph
============================================

"""

from orientdim.orientations import cycle_graph, ord_report, wheel_graph

for G, name in [(cycle_graph(5), "C5"), (wheel_graph(3), "W3"), (wheel_graph(4), "W4"),
                (wheel_graph(5), "W5"), (wheel_graph(6), "W6")]:
    r = ord_report(G)
    print(f"{name}: {r.total} orientations, {r.strong} strong, per dimension {r.per_dimension}")
    # Witnesses are the least edge masks reaching each dimension.
    top = r.witness_digraph(G, r.ord)
    print(f"    ORD={r.ord}, witness arcs {list(top.arcs)}")
