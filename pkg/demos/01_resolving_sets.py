"""
Distances, representations and a first basis
=============================================

"""

from orientdim import build_digraph, distance_matrix, metric_dimension, representation

# A directed 5-cycle with two chords.
D = build_digraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (2, 4)])
dm = distance_matrix(D)
print(dm.d)

# One landmark is not enough here, two are.
res = metric_dimension(dm, collect_all=True)
print("dimension", res.dimension, "basis", res.basis)
print("all minimum bases", res.all_min_bases)

for v in range(D.n):
    print(v, representation(dm, v, res.basis))
