"""Oriented graphs, directed distances and the edge-list / DOT formats.

Vertices are the integers ``0..n-1``.  A :class:`Digraph` is an *oriented*
graph: no loops, no repeated arcs and never both ``(u, v)`` and ``(v, u)``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

#: Distance reported for an ordered pair with no directed path.  Larger than
#: any finite distance, so representation vectors stay totally ordered.
UNREACHABLE = int(np.iinfo(np.int32).max)


class DigraphError(ValueError):
    """Raised when an arc list or an edge-list document is invalid."""


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        return _adjacency(self)[0]

    @property
    def in_neighbors(self) -> tuple[tuple[int, ...], ...]:
        return _adjacency(self)[1]

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbors[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_neighbors[v])

    def has_arc(self, u: int, v: int) -> bool:
        return v in self.out_neighbors[u]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def reverse(self) -> "Digraph":
        return build_digraph(self.n, [(v, u) for u, v in self.arcs], self.labels)

    def with_labels(self, labels: Sequence[str]) -> "Digraph":
        if len(labels) != self.n:
            raise DigraphError(f"expected {self.n} labels, got {len(labels)}")
        return Digraph(self.n, self.arcs, tuple(labels))


def _adjacency(D: Digraph):
    # Digraph is frozen, so the adjacency lists are computed lazily and
    # stashed on the instance itself.
    try:
        return D.__dict__["_adj"]
    except KeyError:
        pass
    out: list[list[int]] = [[] for _ in range(D.n)]
    inn: list[list[int]] = [[] for _ in range(D.n)]
    for u, v in D.arcs:
        out[u].append(v)
        inn[v].append(u)
    adj = (tuple(map(tuple, out)), tuple(map(tuple, inn)))
    object.__setattr__(D, "_adj", adj)
    return adj


def build_digraph(
    n: int,
    arcs: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
) -> Digraph:
    """Validate ``arcs`` and return the oriented graph on ``n`` vertices.

    The arc list is sorted lexicographically.  Raises :class:`DigraphError`
    on a loop, a repeated arc, an out-of-range endpoint, or an edge given in
    both directions.
    """
    if n < 0:
        raise DigraphError(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    for arc in arcs:
        u, v = (int(a) for a in arc)
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphError(f"arc ({u},{v}) has an endpoint outside [0,{n})")
        if u == v:
            raise DigraphError(f"self-loop at vertex {u}")
        if (u, v) in seen:
            raise DigraphError(f"duplicate arc ({u},{v})")
        if (v, u) in seen:
            raise DigraphError(f"both orientations of an edge: ({v},{u}) and ({u},{v})")
        seen.add((u, v))
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n:
            raise DigraphError(f"expected {n} labels, got {len(labels)}")
    return Digraph(n, tuple(sorted(seen)), labels)


def _bfs(adj: Sequence[Sequence[int]], source: int, n: int) -> list[int]:
    dist = [UNREACHABLE] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist


def is_strongly_connected(D: Digraph) -> bool:
    """True iff every vertex reaches, and is reached from, vertex 0."""
    if D.n <= 1:
        return True
    forward = _bfs(D.out_neighbors, 0, D.n)
    if UNREACHABLE in forward:
        return False
    return UNREACHABLE not in _bfs(D.in_neighbors, 0, D.n)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs directed distances; ``d[u, v]`` is the length of a shortest
    path from ``u`` to ``v`` or :data:`UNREACHABLE`."""

    d: np.ndarray

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def __call__(self, u: int, v: int) -> int:
        return int(self.d[u, v])

    def is_finite(self) -> bool:
        return not bool((self.d == UNREACHABLE).any())

    def unreachable_pair(self) -> tuple[int, int] | None:
        hits = np.argwhere(self.d == UNREACHABLE)
        if len(hits) == 0:
            return None
        u, v = hits[0]
        return int(u), int(v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return np.array_equal(self.d, other.d)

    __hash__ = None  # type: ignore[assignment]


def distance_matrix(D: Digraph) -> DistanceMatrix:
    """Breadth-first search from every vertex."""
    d = np.array([_bfs(D.out_neighbors, s, D.n) for s in range(D.n)], dtype=np.int64)
    d = d.reshape(D.n, D.n)
    d.setflags(write=False)
    return DistanceMatrix(d)


# -- edge-list format ------------------------------------------------------

def serialize_digraph(D: Digraph) -> str:
    """Edge-list text: header ``n m`` then one ``u v`` line per arc.

    Vertex labels, when present, are written as ``# label <id> <name>``
    comment lines so the document stays readable by plain edge-list tools.
    """
    lines = []
    if D.labels is not None:
        lines += [f"# label {v} {name}" for v, name in enumerate(D.labels)]
    lines.append(f"{D.n} {len(D.arcs)}")
    lines += [f"{u} {v}" for u, v in D.arcs]
    return "\n".join(lines) + "\n"


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise DigraphError(f"line {lineno}: non-integer token in {' '.join(tokens)!r}") from None


def parse_digraph(text: str) -> Digraph:
    labels: dict[int, str] = {}
    header = None
    arcs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 3 and parts[0] == "label" and parts[1].isdigit():
                labels[int(parts[1])] = parts[2]
            continue
        tokens = line.split()
        if len(tokens) != 2:
            what = "header" if header is None else "arc line"
            raise DigraphError(f"line {lineno}: malformed {what} {line!r}")
        a, b = _ints(tokens, lineno)
        if header is None:
            if a < 0 or b < 0:
                raise DigraphError(f"line {lineno}: malformed header {line!r}")
            header = (a, b)
        else:
            arcs.append((a, b))
    if header is None:
        raise DigraphError("missing 'n m' header")
    n, m = header
    if len(arcs) != m:
        raise DigraphError(f"header declares {m} arcs but {len(arcs)} were given")
    names = None
    if labels:
        if sorted(labels) != list(range(n)):
            raise DigraphError("label comments must name every vertex exactly once")
        names = [labels[v] for v in range(n)]
    return build_digraph(n, arcs, names)


def to_dot(D: Digraph, name: str = "") -> str:
    head = f"digraph {name} {{" if name else "digraph {"
    lines = [head]
    if D.labels is not None:
        lines += [f'  {v} [label="{lab}"];' for v, lab in enumerate(D.labels)]
    lines += [f"  {u} -> {v};" for u, v in D.arcs]
    lines.append("}")
    return "\n".join(lines) + "\n"
