"""
Cycles glued along a path
=========================

"""

from itertools import product

from orientdim import metric_dimension, path_amal_cycles, to_dot

# Two triangles sharing a vertex.
print(to_dot(path_amal_cycles(1, [3, 3]), "bowtie"))

# t cycles always need t-1 landmarks, whatever the lengths and the shared path.
for t in (2, 3, 4):
    dims = {metric_dimension(path_amal_cycles(x, L)).dimension
            for x in (1, 2) for L in product(range(3, 6), repeat=t)}
    print(f"t={t}: dimensions seen {dims}")
