"""Layered vertex partitions with position-dependent back-degree bounds.

A partition into layers S_1, ..., S_eta+1 is valid for parameters (k, d)
when S_1 holds between 1 and k vertices, every later layer holds exactly
k, and each layer j >= 2 can be ordered x_1, ..., x_k so that x_i has at
most d*i - 1 neighbours in earlier layers.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import InputError
from .graph import Graph


@dataclass
class KdPartition:
    """Ordered layers; the stored order inside a layer is the certificate."""

    k: int
    d: int
    layers: list[list[int]]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InputError(f"k must be positive, got {self.k}")
        if self.d < 1:
            raise InputError(f"d must be positive, got {self.d}")
        self.layers = [list(layer) for layer in self.layers]

    @property
    def eta(self) -> int:
        return len(self.layers) - 1

    def vertex_count(self) -> int:
        return sum(len(layer) for layer in self.layers)


@dataclass
class PartitionViolation:
    kind: str  # "structure" or "back-degree"
    message: str
    layer: int | None = None  # 1-based layer index (S_j numbering)
    position: int | None = None  # 1-based position inside the layer
    vertex: int | None = None
    observed: int | None = None
    allowed: int | None = None


@dataclass
class PartitionVerdict:
    valid: bool
    violation: PartitionViolation | None = None


def _structure(message: str, layer: int | None = None) -> PartitionVerdict:
    return PartitionVerdict(False, PartitionViolation("structure", message, layer=layer))


def verify_kd_partition(g: Graph, p: KdPartition) -> PartitionVerdict:
    """Check layer sizes, coverage, and every stored ordering's bounds.

    All failures are reported as verdicts, never raised; the first
    violation found (structure first, then back-degree in layer order) is
    attached to the verdict.
    """
    k, d = p.k, p.d
    n = g.n
    expected_layers = math.ceil(n / k) if n else 0
    if len(p.layers) != expected_layers:
        return _structure(
            f"expected {expected_layers} layers for n={n}, k={k}, got {len(p.layers)}"
        )
    seen: set[int] = set()
    for j, layer in enumerate(p.layers, start=1):
        if j == 1:
            if not 1 <= len(layer) <= k:
                return _structure(
                    f"layer 1 has size {len(layer)}, expected between 1 and {k}", layer=1
                )
        elif len(layer) != k:
            return _structure(f"layer {j} has size {len(layer)}, expected {k}", layer=j)
        for v in layer:
            if not isinstance(v, int) or not 0 <= v < n:
                return _structure(f"layer {j} contains invalid vertex {v!r}", layer=j)
            if v in seen:
                return _structure(f"vertex {v} appears more than once (layer {j})", layer=j)
            seen.add(v)
    if len(seen) != n:
        missing = next(v for v in range(n) if v not in seen)
        return _structure(f"vertex {missing} is not covered by any layer")

    earlier: set[int] = set()
    for j, layer in enumerate(p.layers, start=1):
        if j >= 2:
            for i, v in enumerate(layer, start=1):
                back = len(g.neighbor_set(v) & earlier)
                allowed = d * i - 1
                if back > allowed:
                    return PartitionVerdict(
                        False,
                        PartitionViolation(
                            "back-degree",
                            f"vertex {v} at layer {j} position {i} has {back} "
                            f"back-neighbours, allowed {allowed}",
                            layer=j,
                            position=i,
                            vertex=v,
                            observed=back,
                            allowed=allowed,
                        ),
                    )
        earlier.update(layer)
    return PartitionVerdict(True)


def layer_ordering_exists(ext_degrees: Iterable[int], k: int, d: int) -> list[int] | None:
    """Ascending order of the degrees if they fit a layer, else None.

    A multiset of external degrees admits a valid position assignment iff
    its i-th smallest value is at most d*i - 1, so the ascending sort is
    the canonical witness.
    """
    if k < 1 or d < 1:
        raise InputError("k and d must be positive")
    vals = sorted(ext_degrees)
    if len(vals) != k:
        raise InputError(f"expected {k} degrees, got {len(vals)}")
    for i, val in enumerate(vals, start=1):
        if val > d * i - 1:
            return None
    return vals


class SearchStatus(Enum):
    FOUND = "found"
    PROVED_ABSENT = "proved-absent"
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass
class SearchResult:
    status: SearchStatus
    partition: KdPartition | None
    expanded: int


class _BudgetExhausted(Exception):
    pass


def _ordered_if_feasible(
    g: Graph, subset: frozenset[int], universe: frozenset[int], k: int, d: int
) -> list[int] | None:
    """Certifying order for subset as a peeled layer, or None."""
    rest = universe - subset
    ext = sorted((len(g.neighbor_set(v) & rest), v) for v in subset)
    for i, (e, _) in enumerate(ext, start=1):
        if e > d * i - 1:
            return None
    return [v for _, v in ext]


def search_kd_partition(
    g: Graph, k: int, d: int, budget: int | None = None
) -> SearchResult:
    """Exact backtracking search for a (k, d) layer partition.

    Layers are peeled from the back: at each step every k-subset of the
    remaining vertices is tried in lexicographic order of sorted vertex
    ids, keeping only subsets whose external degrees admit an ordering.
    A level is skipped outright when no remaining vertex could fill the
    first position (degree above d + k - 2 forces an external degree
    above d - 1).

    The budget counts candidate subsets expanded; PROVED_ABSENT is
    returned only when the whole space was covered, BUDGET_EXHAUSTED when
    the count ran out first.
    """
    if k < 1 or d < 1:
        raise InputError("k and d must be positive")
    if g.n < 1:
        raise InputError("graph must have at least one vertex")
    expanded = 0

    def peel(universe: frozenset[int]) -> list[list[int]] | None:
        nonlocal expanded
        if len(universe) <= k:
            return [sorted(universe)]
        members = sorted(universe)
        degu = {v: len(g.neighbor_set(v) & universe) for v in members}
        if not any(degu[v] <= d + k - 2 for v in members):
            return None
        cap = d * k - 1
        for subset in combinations(members, k):
            if budget is not None and expanded >= budget:
                raise _BudgetExhausted
            expanded += 1
            sset = frozenset(subset)
            ext = sorted((degu[v] - len(g.neighbor_set(v) & sset), v) for v in subset)
            if ext[-1][0] > cap:
                continue
            feasible = True
            for i, (e, _) in enumerate(ext, start=1):
                if e > d * i - 1:
                    feasible = False
                    break
            if not feasible:
                continue
            below = peel(universe - sset)
            if below is not None:
                below.append([v for _, v in ext])
                return below
        return None

    try:
        layers = peel(frozenset(range(g.n)))
    except _BudgetExhausted:
        return SearchResult(SearchStatus.BUDGET_EXHAUSTED, None, expanded)
    if layers is None:
        return SearchResult(SearchStatus.PROVED_ABSENT, None, expanded)
    return SearchResult(SearchStatus.FOUND, KdPartition(k, d, layers), expanded)


def greedy_kd_partition(g: Graph, k: int, d: int) -> KdPartition | None:
    """One-pass heuristic: peel the k lowest-degree vertices per step.

    Returns None as soon as a step's candidates admit no ordering; a
    returned partition always verifies.
    """
    if k < 1 or d < 1:
        raise InputError("k and d must be positive")
    if g.n < 1:
        raise InputError("graph must have at least one vertex")
    universe = set(range(g.n))
    peeled_rev: list[list[int]] = []
    while len(universe) > k:
        degu = {v: len(g.neighbor_set(v) & universe) for v in universe}
        cand = sorted(universe, key=lambda v: (degu[v], v))[:k]
        sset = set(cand)
        ext = sorted((degu[v] - len(g.neighbor_set(v) & sset), v) for v in cand)
        for i, (e, _) in enumerate(ext, start=1):
            if e > d * i - 1:
                return None
        peeled_rev.append([v for _, v in ext])
        universe -= sset
    layers = [sorted(universe)] + peeled_rev[::-1]
    return KdPartition(k, d, layers)


def enumerate_last_layers(g: Graph, k: int, d: int) -> Iterator[list[int]]:
    """Yield every ordered k-subset usable as the final layer.

    For d == 1 the position-1 vertex must keep all its neighbours inside
    the subset, so candidates are built from closed neighbourhoods of
    vertices with degree below k; for d >= 2 this falls back to plain
    combinations and can be expensive on large graphs.
    """
    if k < 1 or d < 1:
        raise InputError("k and d must be positive")
    if g.n < k:
        raise InputError(f"graph has {g.n} vertices, need at least k={k}")
    universe = frozenset(range(g.n))
    if d == 1:
        seen: set[frozenset[int]] = set()
        for v in range(g.n):
            if g.degree(v) > k - 1:
                continue
            base = g.neighbor_set(v) | {v}
            others = sorted(universe - base)
            for completion in combinations(others, k - len(base)):
                sset = base | frozenset(completion)
                if sset in seen:
                    continue
                seen.add(sset)
                layer = _ordered_if_feasible(g, sset, universe, k, d)
                if layer is not None:
                    yield layer
    else:
        for subset in combinations(range(g.n), k):
            layer = _ordered_if_feasible(g, frozenset(subset), universe, k, d)
            if layer is not None:
                yield layer
