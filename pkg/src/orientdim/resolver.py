"""Representations, resolving sets and exact directed metric dimension."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal, Sequence

import numpy as np

from .digraph import UNREACHABLE, Digraph, DistanceMatrix, distance_matrix

Mode = Literal["require-strong", "allow-sentinel"]
MODES: tuple[str, ...] = ("require-strong", "allow-sentinel")


class DimensionUndefinedError(ValueError):
    """The digraph is not strongly connected, so under the default convention
    its directed metric dimension is undefined."""

    def __init__(self, pair: tuple[int, int]):
        self.pair = pair
        u, v = pair
        super().__init__(
            "dimension undefined for a digraph that is not strongly connected "
            f"(require-strong mode): no directed path from {u} to {v}"
        )


@dataclass(frozen=True)
class Representation:
    base: tuple[int, ...]
    vector: tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ",".join("INF" if x == UNREACHABLE else str(x) for x in self.vector) + ")"


@dataclass(frozen=True)
class BasisResult:
    dimension: int
    basis: tuple[int, ...]
    all_min_bases: tuple[tuple[int, ...], ...] | None = None
    mode: str = "require-strong"


def _check_vertices(n: int, vertices: Iterable[int]) -> None:
    for v in vertices:
        if not 0 <= v < n:
            raise IndexError(f"vertex {v} out of range [0,{n})")


def representation(dm: DistanceMatrix, v: int, B: Sequence[int]) -> Representation:
    """Distances from ``v`` to each vertex of the ordered set ``B``."""
    B = tuple(int(b) for b in B)
    _check_vertices(dm.n, (v, *B))
    return Representation(B, tuple(int(dm.d[v, b]) for b in B))


def is_resolving(dm: DistanceMatrix, B: Iterable[int]) -> bool:
    B = list(B)
    _check_vertices(dm.n, B)
    if dm.n <= 1:
        return True
    if not B:
        return False
    cols = dm.d[:, B]
    return len(set(map(bytes, cols))) == dm.n


def lower_bound_mandatory_pairs(dm: DistanceMatrix) -> list[tuple[int, int]]:
    """Distance twins: pairs ``x < y`` whose rows agree off columns ``x, y``.

    Any set avoiding both ``x`` and ``y`` gives them equal representations,
    so every resolving set contains one of them.
    """
    d = dm.d
    n = dm.n
    pairs = []
    for x in range(n):
        for y in range(x + 1, n):
            diff = d[x] != d[y]
            diff[x] = diff[y] = False
            if not diff.any():
                pairs.append((x, y))
    return pairs


def metric_dimension(
    D: Digraph | DistanceMatrix,
    mode: Mode = "require-strong",
    collect_all: bool = False,
) -> BasisResult:
    """Exact directed metric dimension by cardinality-ascending subset search.

    Subsets of each size are scanned in lexicographic order, so the first
    resolving set found is the lexicographically least basis.  Subsets
    missing a distance-twin pair are skipped without testing.

    In ``require-strong`` mode a digraph that is not strongly connected
    raises :class:`DimensionUndefinedError`.  In ``allow-sentinel`` mode an
    unreachable distance is an ordinary value distinct from every finite one.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    dm = D if isinstance(D, DistanceMatrix) else distance_matrix(D)
    n = dm.n
    if mode == "require-strong":
        pair = dm.unreachable_pair()
        if pair is not None:
            raise DimensionUndefinedError(pair)
    if n <= 1:
        return BasisResult(0, (), ((),) if collect_all else None, mode)

    pair_masks = [(1 << x) | (1 << y) for x, y in lower_bound_mandatory_pairs(dm)]
    # Radix n+1 fits every finite distance (< n) plus the sentinel code n.
    radix = n + 1
    cols = np.where(dm.d == UNREACHABLE, n, dm.d).T.tolist()

    for k in range(1, n + 1):
        found: list[tuple[int, ...]] = []
        for B in combinations(range(n), k):
            if pair_masks:
                mask = 0
                for b in B:
                    mask |= 1 << b
                if any(not (mask & pm) for pm in pair_masks):
                    continue
            codes = [0] * n
            for b in B:
                col = cols[b]
                codes = [c * radix + x for c, x in zip(codes, col)]
            if len(set(codes)) == n:
                if not collect_all:
                    return BasisResult(k, B, None, mode)
                found.append(B)
        if found:
            return BasisResult(k, found[0], tuple(found), mode)
    raise AssertionError("the full vertex set always resolves")


# -- one-dimensionality characterization -----------------------------------

def _hamiltonian_paths_ending_at(D: Digraph, v: int):
    """Yield Hamiltonian paths as lists ``[v, v1, v2, ...]`` read backwards,
    so position ``k`` holds the vertex ``v_k`` with arc ``v_k -> v_{k-1}``."""
    n = D.n
    path = [v]
    used = [False] * n
    used[v] = True

    def extend():
        if len(path) == n:
            yield list(path)
            return
        for w in D.in_neighbors[path[-1]]:
            if not used[w]:
                used[w] = True
                path.append(w)
                yield from extend()
                path.pop()
                used[w] = False

    yield from extend()


def is_dim_one_by_characterization(D: Digraph) -> bool:
    """Decide ``dim(D) == 1`` without any distance computation.

    ``D`` has dimension one iff for some vertex ``v`` of in-degree one there
    is a Hamiltonian path ``v_{n-1} -> ... -> v_1 -> v`` such that no arc
    outside the path jumps forward along it, i.e. no arc ``(v_j, v_i)`` with
    ``1 <= i < j``.  The statement is for strongly connected digraphs.
    """
    n = D.n
    if n < 2:
        return False
    for v in range(n):
        if D.in_degree(v) != 1:
            continue
        for path in _hamiltonian_paths_ending_at(D, v):
            pos = {u: k for k, u in enumerate(path)}
            path_arcs = {(path[k], path[k - 1]) for k in range(1, n)}
            if all(
                (a, b) in path_arcs or b == v or a == v or pos[a] < pos[b]
                for a, b in D.arcs
            ):
                return True
    return False


def result_document(D: Digraph, result: BasisResult, dm: DistanceMatrix | None = None) -> dict:
    """JSON-ready record of a dimension computation."""
    dm = dm if dm is not None else distance_matrix(D)
    reps = {}
    for v in range(D.n):
        rep = representation(dm, v, result.basis)
        reps[D.label(v)] = ["INF" if x == UNREACHABLE else x for x in rep.vector]
    doc = {
        "n": D.n,
        "arcs": [list(a) for a in D.arcs],
        "mode": result.mode,
        "dimension": result.dimension,
        "basis": list(result.basis),
    }
    if D.labels is not None:
        doc["labels"] = list(D.labels)
        doc["basis_labels"] = [D.labels[b] for b in result.basis]
    if result.all_min_bases is not None:
        doc["all_min_bases"] = [list(b) for b in result.all_min_bases]
    doc["representations"] = reps
    return doc
