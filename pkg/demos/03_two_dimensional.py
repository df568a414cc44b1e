"""
Orientations of dimension two
=============================

"""

from orientdim import (
    distance_matrix,
    fan_dim2_orientation,
    is_strongly_connected,
    metric_dimension,
    representation,
    wheel_dim2_orientation,
)

# The wheel construction grows a tail v8 -> v7, v9 -> v8, ... fed by the hub.
D = wheel_dim2_orientation(12)
dm = distance_matrix(D)
print("wheel n=12 dim", metric_dimension(dm).dimension)
for v in range(D.n):
    print(f"  {D.label(v):>3} {representation(dm, v, (2, 4))}")

# The fan construction leaves v1 a source, so distances into v1 are infinite.
F = fan_dim2_orientation(8)
fm = distance_matrix(F)
print("fan n=8 strongly connected:", is_strongly_connected(F))
print("fan n=8 dim (sentinel mode)", metric_dimension(fm, "allow-sentinel").dimension)
for v in range(F.n):
    print(f"  {F.label(v):>3} {representation(fm, v, (2, 3))}")
