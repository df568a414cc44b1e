"""
C3-simple wheels and fans
=========================

"""

from orientdim import (
    center_partition,
    metric_dimension,
    oriented_fan_c3simple,
    oriented_wheel_c3simple,
    oriented_wheel_odd,
)

# Even wheels: the spokes alternate with the rim parity.
for n in (4, 6, 8, 10):
    D = oriented_wheel_c3simple(n, "A")
    part = center_partition(D, [0])
    print(f"W_{n}: V1={sorted(part.V1)} V2={sorted(part.V2)} dim={metric_dimension(D).dimension}")

# Odd wheels have no C3-simple orientation; close a fan with one rim arc instead.
for n in (5, 7, 9):
    for fan in ("centers-out", "centers-in"):
        for closing in ("vn-to-v1", "v1-to-vn"):
            res = metric_dimension(oriented_wheel_odd(n, fan, closing))
            print(f"W_{n} {fan:11} {closing}: dim={res.dimension} basis={res.basis}")

# Fans with several centers: the centers are mutual twins.
for m in (1, 2, 3):
    row = [metric_dimension(oriented_fan_c3simple(m, n)).dimension for n in range(2, 10)]
    print(f"F_{{{m},n}}, n=2..9:", row)
