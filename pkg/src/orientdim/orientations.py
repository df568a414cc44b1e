"""Exhaustive orientation search: ORD(G) and achievable dimension spectra.

An orientation of ``G`` is indexed by a bitmask over ``G.edges``: bit ``j``
clear keeps edge ``(u, v)`` as the arc ``u -> v``, bit ``j`` set reverses
it.  Orientations are visited in ascending bitmask order.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .digraph import Digraph, build_digraph, is_strongly_connected
from .resolver import MODES, metric_dimension

DEFAULT_EDGE_BUDGET = 24
WORKERS_ENV = "ORIENTDIM_WORKERS"


class BudgetExceeded(RuntimeError):
    def __init__(self, edges: int, budget: int):
        self.edges = edges
        self.budget = budget
        super().__init__(
            f"{edges} edges means 2^{edges} orientations; the edge budget is {budget} "
            f"(raise it to at least {edges} to proceed)"
        )


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {{{u},{v}}}")
            seen.add(key)

    @classmethod
    def from_edges(cls, n: int, edges) -> "UndirectedGraph":
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @classmethod
    def underlying(cls, D: Digraph) -> "UndirectedGraph":
        return cls(D.n, D.arcs)


def cycle_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def wheel_graph(n: int) -> UndirectedGraph:
    """``W_n`` with center 0 and rim ``1..n``, spokes listed first."""
    spokes = [(0, i) for i in range(1, n + 1)]
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    return UndirectedGraph.from_edges(n + 1, spokes + rim)


def fan_graph(m: int, n: int) -> UndirectedGraph:
    """``F_{m,n}``: centers ``0..m-1``, path ``m..m+n-1``."""
    spokes = [(c, m + i) for c in range(m) for i in range(n)]
    path = [(m + i, m + i + 1) for i in range(n - 1)]
    return UndirectedGraph.from_edges(m + n, spokes + path)


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def orientation(G: UndirectedGraph, mask: int) -> Digraph:
    arcs = [(v, u) if mask >> j & 1 else (u, v) for j, (u, v) in enumerate(G.edges)]
    return build_digraph(G.n, arcs)


def orientation_mask(G: UndirectedGraph, D: Digraph) -> int:
    """Inverse of :func:`orientation`."""
    mask = 0
    for j, (u, v) in enumerate(G.edges):
        if D.has_arc(v, u):
            mask |= 1 << j
        elif not D.has_arc(u, v):
            raise ValueError(f"edge {{{u},{v}}} missing from the digraph")
    return mask


def _check_budget(G: UndirectedGraph, budget: int) -> None:
    if len(G.edges) > budget:
        raise BudgetExceeded(len(G.edges), budget)


def enumerate_orientations(
    G: UndirectedGraph, budget: int = DEFAULT_EDGE_BUDGET
) -> Iterator[Digraph]:
    _check_budget(G, budget)
    for mask in range(1 << len(G.edges)):
        yield orientation(G, mask)


@dataclass
class OrdReport:
    """Outcome of an exhaustive orientation sweep.

    ``witnesses`` maps each achieved dimension to the least bitmask that
    attains it.  ``log`` optionally holds ``(mask, strong, dimension)`` for
    every orientation (``dimension`` is ``None`` when undefined).
    """

    ord: int | None
    spectrum: tuple[int, ...]
    total: int
    strong: int
    per_dimension: dict[int, int]
    witnesses: dict[int, int]
    mode: str = "require-strong"
    defined: int = 0
    log: list[tuple[int, bool, int | None]] | None = field(default=None, repr=False)

    def witness_digraph(self, G: UndirectedGraph, k: int) -> Digraph:
        return orientation(G, self.witnesses[k])

    def to_document(self, G: UndirectedGraph) -> dict:
        doc = {
            "n": G.n,
            "edges": [list(e) for e in G.edges],
            "mode": self.mode,
            "ord": self.ord,
            "spectrum": list(self.spectrum),
            "counts": {
                "orientations": self.total,
                "strongly_connected": self.strong,
                "dimension_defined": self.defined,
                "per_dimension": {str(k): v for k, v in sorted(self.per_dimension.items())},
            },
            "witnesses": {
                str(k): {"mask": mask, "arcs": [list(a) for a in orientation(G, mask).arcs]}
                for k, mask in sorted(self.witnesses.items())
            },
        }
        return doc


def _sweep(G: UndirectedGraph, start: int, stop: int, mode: str, keep_log: bool):
    strong = 0
    per_dim: dict[int, int] = {}
    witnesses: dict[int, int] = {}
    log = [] if keep_log else None
    for mask in range(start, stop):
        D = orientation(G, mask)
        is_strong = is_strongly_connected(D)
        strong += is_strong
        dim = None
        if is_strong or mode == "allow-sentinel":
            dim = metric_dimension(D, mode).dimension
            per_dim[dim] = per_dim.get(dim, 0) + 1
            witnesses.setdefault(dim, mask)
        if log is not None:
            log.append((mask, is_strong, dim))
    return strong, per_dim, witnesses, log


def _merge(parts):
    # Parts arrive in ascending range order, so the first witness seen for
    # a dimension has the least bitmask.
    strong = 0
    per_dim: dict[int, int] = {}
    witnesses: dict[int, int] = {}
    log = None
    for s, pd, wit, part_log in parts:
        strong += s
        for k, c in pd.items():
            per_dim[k] = per_dim.get(k, 0) + c
        for k, mask in wit.items():
            witnesses.setdefault(k, mask)
        if part_log is not None:
            log = (log or []) + part_log
    return strong, per_dim, witnesses, log


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def ord_report(
    G: UndirectedGraph,
    mode: str = "require-strong",
    budget: int = DEFAULT_EDGE_BUDGET,
    workers: int | None = None,
    keep_log: bool = False,
) -> OrdReport:
    """Dimension of every qualifying orientation of ``G``.

    In ``require-strong`` mode only strongly connected orientations count;
    ``allow-sentinel`` counts all of them.  The work is split into
    contiguous bitmask ranges; the report does not depend on ``workers``.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    _check_budget(G, budget)
    total = 1 << len(G.edges)
    workers = default_workers() if workers is None else max(1, workers)
    chunks = min(total, workers * 4) if workers > 1 else 1
    bounds = [total * i // chunks for i in range(chunks + 1)]
    ranges = list(zip(bounds[:-1], bounds[1:]))
    if workers == 1:
        parts = [_sweep(G, a, b, mode, keep_log) for a, b in ranges]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_sweep, G, a, b, mode, keep_log) for a, b in ranges]
            parts = [f.result() for f in futures]
    strong, per_dim, witnesses, log = _merge(parts)
    spectrum = tuple(sorted(per_dim))
    return OrdReport(
        ord=max(spectrum) if spectrum else None,
        spectrum=spectrum,
        total=total,
        strong=strong,
        per_dimension=dict(sorted(per_dim.items())),
        witnesses=dict(sorted(witnesses.items())),
        mode=mode,
        defined=sum(per_dim.values()),
        log=log,
    )


def ord(G: UndirectedGraph, mode: str = "require-strong", **kwargs) -> OrdReport:  # noqa: A001
    return ord_report(G, mode, **kwargs)


def dim_spectrum(G: UndirectedGraph, mode: str = "require-strong", **kwargs) -> set[int]:
    return set(ord_report(G, mode, **kwargs).spectrum)


def log_csv(report: OrdReport) -> str:
    rows = ["mask,strong,dimension"]
    for mask, strong, dim in report.log or ():
        rows.append(f"{mask},{int(strong)},{'' if dim is None else dim}")
    return "\n".join(rows) + "\n"


def parse_graph_arg(text: str) -> UndirectedGraph:
    """``wheel:n``, ``fan:m:n``, ``cycle:n`` or ``complete:n``."""
    kind, *args = text.split(":")
    try:
        nums = [int(a) for a in args]
    except ValueError:
        raise ValueError(f"bad graph spec {text!r}") from None
    if kind == "wheel" and len(nums) == 1:
        return wheel_graph(nums[0])
    if kind == "fan" and len(nums) == 2:
        return fan_graph(*nums)
    if kind == "cycle" and len(nums) == 1:
        return cycle_graph(nums[0])
    if kind == "complete" and len(nums) == 1:
        return complete_graph(nums[0])
    raise ValueError(f"bad graph spec {text!r}; expected wheel:n, fan:m:n, cycle:n or complete:n")

