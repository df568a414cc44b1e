"""Generators for oriented wheels, fans and amalgamated directed cycles.

Labeling conventions (integer id -> name):

* wheels: ``0 = c``, ``i = v_i`` for ``1 <= i <= n``;
* fans ``F_{m,n}``: ``0..m-1 = c_1..c_m`` (just ``c`` when ``m == 1``),
  then ``m + i - 1 = v_i``;
* path amalgamations: ``0..x-1 = v_1..v_x`` on the shared path, followed by
  the private vertices ``v_{x+1}^i .. v_{n_i}^i`` of cycle 1, cycle 2, ...

Every generator returns a :class:`~orientdim.digraph.Digraph` carrying that
label map.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .digraph import UNREACHABLE, Digraph, DigraphError, build_digraph, distance_matrix

WHEEL_VARIANTS = ("A", "B")
FAN_VARIANTS = ("centers-out", "centers-in")
CLOSING_ARCS = ("vn-to-v1", "v1-to-vn")
FAMILIES = ("wheel-c3simple", "wheel-odd", "wheel-dim2", "fan-c3simple", "fan-dim2", "path-amal")


class FamilyError(ValueError):
    """Parameters outside a construction's range."""


def _wheel_labels(n: int) -> list[str]:
    return ["c"] + [f"v{i}" for i in range(1, n + 1)]


def _fan_labels(m: int, n: int) -> list[str]:
    centers = ["c"] if m == 1 else [f"c{j}" for j in range(1, m + 1)]
    return centers + [f"v{i}" for i in range(1, n + 1)]


# -- wheels ----------------------------------------------------------------

def oriented_wheel_c3simple(n: int, variant: str = "A") -> Digraph:
    """One of the two orientations of ``W_n`` in which every spoke triangle
    ``c, v_i, v_{i+1}`` is a directed 3-cycle.

    Variant ``A`` sends the center to the odd rim vertices, each odd rim
    vertex to both of its rim neighbours, and the even rim vertices back to
    the center.  Variant ``B`` swaps the parities.  Only even ``n`` works.
    """
    if variant not in WHEEL_VARIANTS:
        raise FamilyError(f"unknown wheel variant {variant!r}; expected A or B")
    if n < 3:
        raise FamilyError(f"a wheel needs n >= 3 rim vertices, got {n}")
    if n % 2:
        raise FamilyError(
            f"W_{n} has no C3-simple orientation: one exists "
            "if and only if n is even"
        )
    if n < 4:
        raise FamilyError(f"C3-simple wheels need n >= 4, got {n}")
    hub_parity = 1 if variant == "A" else 0
    arcs = set()
    for i in range(1, n + 1):
        if i % 2 == hub_parity:
            arcs.add((0, i))
            arcs.add((i, i % n + 1))
            arcs.add((i, (i - 2) % n + 1))
        else:
            arcs.add((i, 0))
    return build_digraph(n + 1, arcs, _wheel_labels(n))


def oriented_fan_c3simple(m: int, n: int, variant: str = "centers-out") -> Digraph:
    """``F_{m,n}`` with every triangle ``c_j, v_i, v_{i+1}`` directed.

    ``centers-out``: arcs ``c_j -> v_i`` for odd ``i``, ``v_i -> c_j`` for
    even ``i``, and each odd path vertex points at its path neighbours.
    ``centers-in`` uses the opposite parity.  All centers get the same
    treatment.
    """
    if variant not in FAN_VARIANTS:
        raise FamilyError(f"unknown fan variant {variant!r}; expected one of {FAN_VARIANTS}")
    if m < 1 or n < 2:
        raise FamilyError(f"fans need m >= 1 and n >= 2, got m={m}, n={n}")
    out_parity = 1 if variant == "centers-out" else 0

    def v(i: int) -> int:
        return m + i - 1

    arcs = []
    for i in range(1, n + 1):
        if i % 2 == out_parity:
            arcs += [(c, v(i)) for c in range(m)]
            arcs += [(v(i), v(j)) for j in (i - 1, i + 1) if 1 <= j <= n]
        else:
            arcs += [(v(i), c) for c in range(m)]
    return build_digraph(m + n, arcs, _fan_labels(m, n))


def oriented_wheel_odd(
    n: int, fan_variant: str = "centers-out", closing_arc: str = "vn-to-v1"
) -> Digraph:
    """Odd wheel whose spanning fan ``F_{1,n}`` is C3-simple, closed by a
    single rim arc between ``v_n`` and ``v_1``.  The triangle through that
    arc cannot be directed as well."""
    if closing_arc not in CLOSING_ARCS:
        raise FamilyError(f"unknown closing arc {closing_arc!r}; expected one of {CLOSING_ARCS}")
    if n < 3 or n % 2 == 0:
        raise FamilyError(f"odd wheels need odd n >= 3, got {n}")
    fan = oriented_fan_c3simple(1, n, fan_variant)
    extra = (n, 1) if closing_arc == "vn-to-v1" else (1, n)
    return build_digraph(n + 1, fan.arcs + (extra,), _wheel_labels(n))


def wheel_dim2_orientation(n: int) -> Digraph:
    """Orientation of ``W_n`` (``n >= 8``) with directed metric dimension 2.

    A centers-out C3-simple fan on ``c, v_1..v_7``, the rim path
    ``v_1 -> v_n -> v_{n-1} -> ... -> v_8 -> v_7``, and spokes ``c -> v_i``
    for ``i >= 8``.  ``{v_2, v_4}`` is a basis.
    """
    if n < 8:
        raise FamilyError(
            f"wheel_dim2_orientation needs n >= 8, got {n}; for smaller wheels use "
            "two_dimensional_wheel (C3-simple generators)"
        )
    fan = oriented_fan_c3simple(1, 7, "centers-out")
    arcs = list(fan.arcs)
    arcs.append((1, n))
    arcs += [(i, i - 1) for i in range(8, n + 1)]
    arcs += [(0, i) for i in range(8, n + 1)]
    return build_digraph(n + 1, arcs, _wheel_labels(n))


def two_dimensional_wheel(n: int) -> Digraph:
    """An orientation of ``W_n`` of dimension 2 for any ``n >= 4``.

    Small wheels reuse the C3-simple generators.  ``n = 3`` is rejected:
    every strongly connected orientation of ``W_3`` has dimension 1.
    """
    if n >= 8:
        return wheel_dim2_orientation(n)
    if n in (4, 6):
        return oriented_wheel_c3simple(n, "A")
    if n in (5, 7):
        return oriented_wheel_odd(n, "centers-out", "v1-to-vn")
    raise FamilyError(f"no two-dimensional wheel construction for n={n}")


def fan_dim2_orientation(n: int) -> Digraph:
    """Orientation of ``F_{1,n}`` with ``{v_2, v_3}`` resolving.

    ``n = 3, 4`` use fixed arc sets; larger fans add the path
    ``v_n -> ... -> v_5 -> v_4`` and spokes ``c -> v_i`` for ``i >= 5``.
    ``v_1`` has no incoming arc, so the result is *not* strongly connected;
    its dimension is only defined in ``allow-sentinel`` mode.
    """
    if n < 3:
        raise FamilyError(f"fan_dim2_orientation needs n >= 3, got {n}")
    c, v1, v2, v3 = 0, 1, 2, 3
    arcs = [(v1, v2), (v3, v2), (v1, c), (v2, c), (c, v3)]
    if n >= 4:
        arcs += [(v3, 4), (4, c)]
    arcs += [(i, i - 1) for i in range(5, n + 1)]
    arcs += [(c, i) for i in range(5, n + 1)]
    return build_digraph(n + 1, arcs, _fan_labels(1, n))


# -- amalgamations ---------------------------------------------------------

def path_amal_cycles(x: int, lengths: Sequence[int]) -> Digraph:
    """Directed cycles ``C_{n_1}, ..., C_{n_t}`` glued along a common
    directed path ``v_1 -> ... -> v_x``.

    ``x = 1`` is the vertex amalgamation and ``x = 2`` the edge
    amalgamation.  Cycle ``i`` continues ``v_x -> v_{x+1}^i -> ... ->
    v_{n_i}^i -> v_1``.
    """
    lengths = [int(L) for L in lengths]
    if len(lengths) < 2:
        raise FamilyError(f"need at least two cycles, got {len(lengths)}")
    if min(lengths) < 3:
        raise FamilyError(f"cycle lengths must be >= 3, got {lengths}")
    if not 1 <= x <= min(lengths) - 1:
        raise FamilyError(f"terminal path order x={x} outside [1, {min(lengths) - 1}]")
    labels = [f"v{k}" for k in range(1, x + 1)]
    arcs = [(k, k + 1) for k in range(x - 1)]
    nxt = x
    for i, L in enumerate(lengths, start=1):
        prev = x - 1
        for k in range(x + 1, L + 1):
            labels.append(f"v{k}^{i}")
            arcs.append((prev, nxt))
            prev = nxt
            nxt += 1
        arcs.append((prev, 0))
    return build_digraph(nxt, arcs, labels)


def tail_end(x: int, lengths: Sequence[int], i: int) -> int:
    """Vertex id of ``v_{n_i}^i``, the last private vertex of cycle ``i``
    (1-based) in :func:`path_amal_cycles`."""
    return x + sum(L - x for L in lengths[:i]) - 1


def amalgamation_cycles(x: int, lengths: Sequence[int]) -> list[list[int]]:
    """The constituent cycles of :func:`path_amal_cycles` as vertex lists
    starting at ``v_1`` and following the arcs."""
    cycles = []
    start = x
    for L in lengths:
        private = list(range(start, start + L - x))
        cycles.append(list(range(x)) + private)
        start += L - x
    return cycles


# -- C_n-simple check and center partition ---------------------------------

def wheel_triangles(n: int) -> list[list[int]]:
    return [[0, i, i % n + 1] for i in range(1, n + 1)]


def fan_triangles(m: int, n: int) -> list[list[int]]:
    return [[c, m + i - 1, m + i] for c in range(m) for i in range(1, n)]


def check_cn_simple(D: Digraph, cycle_length: int, covering: Sequence[Sequence[int]]) -> bool:
    """True iff every listed cycle is oriented as a directed cycle.

    Raises :class:`DigraphError` if a listed cycle has the wrong length or
    uses an edge that ``D`` lacks in both directions.
    """
    ok = True
    for cycle in covering:
        if len(cycle) != cycle_length:
            raise DigraphError(f"cycle {list(cycle)} does not have length {cycle_length}")
        forward = backward = 0
        for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
            if D.has_arc(a, b):
                forward += 1
            elif D.has_arc(b, a):
                backward += 1
            else:
                raise DigraphError(f"cycle {list(cycle)} uses missing edge {{{a},{b}}}")
        if forward != cycle_length and backward != cycle_length:
            ok = False
    return ok


@dataclass(frozen=True)
class CenterPartition:
    V0: frozenset[int]
    V1: frozenset[int]
    V2: frozenset[int]


def center_partition(D: Digraph, centers: Sequence[int]) -> CenterPartition:
    """Split the non-center vertices by their distance from the first center."""
    centers = list(centers)
    if not centers:
        raise FamilyError("at least one center is required")
    row = distance_matrix(D).d[centers[0]]
    V1, V2 = set(), set()
    for v in range(D.n):
        if v in centers:
            continue
        dist = int(row[v])
        if dist == 1:
            V1.add(v)
        elif dist == 2:
            V2.add(v)
        else:
            shown = "unreachable" if dist == UNREACHABLE else str(dist)
            raise FamilyError(
                f"vertex {D.label(v)} is at distance {shown} from the center: "
                "not a C3-simple wheel/fan shape"
            )
    return CenterPartition(frozenset(centers), frozenset(V1), frozenset(V2))


# -- spec strings -----------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its keyword parameters.

    String form: ``family:key=value,key=value``; list values are joined with
    ``+`` (``path-amal:x=2,lengths=4+5+6``).
    """

    family: str
    params: dict = field(default_factory=dict, hash=False)

    _DEFAULTS = {
        "wheel-c3simple": {"variant": "A"},
        "wheel-odd": {"fan": "centers-out", "closing": "vn-to-v1"},
        "wheel-dim2": {},
        "fan-c3simple": {"m": 1, "variant": "centers-out"},
        "fan-dim2": {},
        "path-amal": {},
    }
    _ORDER = ("m", "n", "x", "lengths", "variant", "fan", "closing")
    _REQUIRED = {
        "wheel-c3simple": ("n",),
        "wheel-odd": ("n",),
        "wheel-dim2": ("n",),
        "fan-c3simple": ("n",),
        "fan-dim2": ("n",),
        "path-amal": ("x", "lengths"),
    }

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        family, _, rest = text.strip().partition(":")
        if family not in FAMILIES:
            raise FamilyError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
        params = dict(cls._DEFAULTS[family])
        if rest:
            for item in rest.split(","):
                key, eq, value = item.partition("=")
                if not eq or not key:
                    raise FamilyError(f"malformed parameter {item!r} in {text!r}")
                key = key.strip()
                value = value.strip()
                if key == "lengths":
                    try:
                        params[key] = tuple(int(p) for p in value.split("+"))
                    except ValueError:
                        raise FamilyError(f"bad lengths {value!r}") from None
                elif key in ("n", "m", "x"):
                    try:
                        params[key] = int(value)
                    except ValueError:
                        raise FamilyError(f"parameter {key} must be an integer, got {value!r}") from None
                elif key in ("variant", "fan", "closing"):
                    params[key] = value
                else:
                    raise FamilyError(f"unknown parameter {key!r} for {family}")
        missing = [k for k in cls._REQUIRED[family] if k not in params]
        if missing:
            raise FamilyError(f"{family} requires parameter(s) {', '.join(missing)}")
        return cls(family, params)

    def __str__(self) -> str:
        parts = []
        for key in sorted(self.params, key=self._ORDER.index):
            value = self.params[key]
            if isinstance(value, tuple):
                value = "+".join(map(str, value))
            parts.append(f"{key}={value}")
        return f"{self.family}:{','.join(parts)}"

    def build(self) -> Digraph:
        p = self.params
        if self.family == "wheel-c3simple":
            return oriented_wheel_c3simple(p["n"], p["variant"])
        if self.family == "wheel-odd":
            return oriented_wheel_odd(p["n"], p["fan"], p["closing"])
        if self.family == "wheel-dim2":
            return two_dimensional_wheel(p["n"])
        if self.family == "fan-c3simple":
            return oriented_fan_c3simple(p["m"], p["n"], p["variant"])
        if self.family == "fan-dim2":
            return fan_dim2_orientation(p["n"])
        return path_amal_cycles(p["x"], p["lengths"])


def build_family(text: str) -> Digraph:
    return FamilySpec.parse(text).build()
