"""Matroid partition over pluggable independence oracles.

The partition algorithm maintains one independent set per oracle and grows
the family one ground element at a time: try a direct insert into each
part, and otherwise run a breadth-first augmenting search in the exchange
digraph (arc x -> y when part_i + x is dependent but part_i + x - y is
not; arc x -> sink_i when part_i + x is independent).  A shortest path is
applied as a chain of swaps; if no path exists the element is spanned by
the union and stays uncovered for good.  Sources are processed in canonical
edge order and ties break lexicographically, so runs are reproducible.

Rigidity oracles are randomized with one-sided error: a false "dependent"
verdict can only surface as a swap that breaks a part, which is detected on
insertion, answered by reseeding the offending oracle, and replayed from
the last verified partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Protocol, Sequence

from .graph import Graph
from .rigidity import RigidityOracle, complete_rank, independent_d1


class MatroidState(Protocol):
    version: int

    def members(self) -> set[int]: ...
    def insert(self, edge_id: int) -> bool: ...
    def circuit(self, edge_id: int) -> set[int] | None: ...
    def remove(self, edge_id: int) -> None: ...


class IndependenceOracle(Protocol):
    def new_state(self) -> MatroidState: ...
    def independent(self, edge_ids: Iterable[int]) -> bool: ...
    def reseeded(self, salt: int) -> "IndependenceOracle": ...


class OracleInconsistencyError(RuntimeError):
    """An accepted augmentation produced a set the oracle later rejected."""


class GraphicOracle:
    """Independence = forest, over the host graph's edge indices."""

    def __init__(self, graph: Graph):
        self.graph = graph

    def new_state(self) -> "ForestState":
        return ForestState(self.graph)

    def independent(self, edge_ids: Iterable[int]) -> bool:
        return independent_d1(self.graph, edge_ids)

    def verify_independent(self, edge_ids: Iterable[int]) -> bool:
        return self.independent(edge_ids)

    def reseeded(self, salt: int) -> "GraphicOracle":
        return self


class ForestState:
    """Incremental forest with path queries for exchange arcs."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self._edges: set[int] = set()
        self._adj: dict[int, list[tuple[int, int]]] = {}
        self.version = 0

    def members(self) -> set[int]:
        return set(self._edges)

    def _root(self, start: int, goal: int) -> dict[int, tuple[int, int]] | None:
        """BFS in the forest from start; parent map if goal reached, else None."""
        parents: dict[int, tuple[int, int]] = {start: (-1, -1)}
        queue = [start]
        for x in queue:
            for (y, eid) in self._adj.get(x, ()):
                if y not in parents:
                    parents[y] = (x, eid)
                    if y == goal:
                        return parents
                    queue.append(y)
        return None

    def insert(self, edge_id: int) -> bool:
        u, v = self.graph.edges[edge_id]
        if self._root(u, v) is not None:
            return False
        self._edges.add(edge_id)
        self._adj.setdefault(u, []).append((v, edge_id))
        self._adj.setdefault(v, []).append((u, edge_id))
        self.version += 1
        return True

    def circuit(self, edge_id: int) -> set[int] | None:
        u, v = self.graph.edges[edge_id]
        parents = self._root(u, v)
        if parents is None:
            return None
        out = set()
        x = v
        while x != u:
            x, eid = parents[x]
            out.add(eid)
        return out

    def remove(self, edge_id: int) -> None:
        u, v = self.graph.edges[edge_id]
        self._edges.discard(edge_id)
        self._adj[u].remove((v, edge_id))
        self._adj[v].remove((u, edge_id))
        self.version += 1


@dataclass(frozen=True)
class MatroidPartition:
    """Disjoint family, one independent set per oracle."""

    parts: tuple[frozenset[int], ...]
    ground: frozenset[int]

    @property
    def total(self) -> int:
        return sum(len(p) for p in self.parts)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    @property
    def uncovered(self) -> frozenset[int]:
        covered = set()
        for p in self.parts:
            covered |= p
        return self.ground - covered


class _CircuitCache:
    """Memoizes circuit queries per (state version, element)."""

    def __init__(self, state: MatroidState):
        self.state = state
        self.version = state.version
        self.table: dict[int, set[int] | None] = {}

    def circuit(self, e: int) -> set[int] | None:
        if self.version != self.state.version:
            self.table.clear()
            self.version = self.state.version
        if e not in self.table:
            self.table[e] = self.state.circuit(e)
        return self.table[e]


class _Retry(Exception):
    def __init__(self, oracle_index: int):
        self.oracle_index = oracle_index


def partition(
    oracles: Sequence[IndependenceOracle],
    ground: Iterable[int],
    debug: bool = False,
    max_retries: int = 4,
) -> MatroidPartition:
    """Maximum-cardinality partition of the ground set into independent parts."""
    oracles = list(oracles)
    if not oracles:
        raise ValueError("need at least one oracle")
    order = sorted(set(ground))
    parts: list[set[int]] = [set() for _ in oracles]
    states: list[MatroidState] = [o.new_state() for o in oracles]
    caches = [_CircuitCache(s) for s in states]
    part_of: dict[int, int] = {}
    retries = 0

    def rebuild(i: int) -> None:
        states[i] = oracles[i].new_state()
        for e in sorted(parts[i]):
            if not states[i].insert(e):
                raise OracleInconsistencyError(
                    f"verified part {i} rejected by reseeded oracle"
                )
        caches[i] = _CircuitCache(states[i])

    idx = 0
    while idx < len(order):
        e = order[idx]
        try:
            _place(e, states, caches, parts, part_of, oracles, debug)
        except _Retry as sig:
            retries += 1
            if retries > max_retries:
                raise OracleInconsistencyError(
                    "augmentations kept failing after reseeding"
                ) from None
            oracles[sig.oracle_index] = oracles[sig.oracle_index].reseeded(1 + retries)
            # replay every state from the last verified partition: the failed
            # application may have touched several parts
            for i in range(len(states)):
                rebuild(i)
            continue
        idx += 1
    return MatroidPartition(tuple(frozenset(p) for p in parts), frozenset(order))


def _place(e, states, caches, parts, part_of, oracles, debug) -> bool:
    for i, st in enumerate(states):
        if st.insert(e):
            parts[i].add(e)
            part_of[e] = i
            return True

    # breadth-first augmenting search, lexicographic within layers
    prev: dict[int, tuple[int, int]] = {e: (-1, -1)}
    frontier = [e]
    found: tuple[int, int] | None = None
    while frontier and found is None:
        nxt: list[int] = []
        for x in frontier:
            for i in range(len(states)):
                if part_of.get(x) == i:
                    continue
                circ = caches[i].circuit(x)
                if circ is None:
                    found = (x, i)
                    break
                for y in sorted(circ):
                    if y not in prev:
                        prev[y] = (x, i)
                        nxt.append(y)
            if found:
                break
        frontier = sorted(set(nxt))
    if found is None:
        return False

    x, sink = found
    moves: list[tuple[int, int, int | None]] = [(sink, x, None)]
    cur = x
    while prev[cur] != (-1, -1):
        px, m = prev[cur]
        moves.append((m, px, cur))
        cur = px

    for (i, _, rem) in moves:
        if rem is not None:
            states[i].remove(rem)
    for (i, add, _) in moves:
        if not states[i].insert(add):
            raise _Retry(i)
    for (i, add, rem) in moves:
        if rem is not None:
            parts[i].discard(rem)
        parts[i].add(add)
        part_of[add] = i
    if debug:
        for i in {i for (i, _, _) in moves}:
            if not oracles[i].independent(parts[i]):
                raise _Retry(i)
    return True


def rank_union(oracles: Sequence[IndependenceOracle], ground: Iterable[int]) -> int:
    """Rank of the matroid union on the ground set (size of a largest partition)."""
    return partition(oracles, ground).total


@dataclass(frozen=True)
class PackingResult:
    """Outcome of a spanning-subgraph packing attempt."""

    parts: tuple[frozenset[int], ...]
    target_sizes: tuple[int, ...]
    feasible: bool
    verified: bool
    seed: int

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    @property
    def deficiency(self) -> int:
        return sum(self.target_sizes) - sum(self.sizes)


def pack_rigid(graph: Graph, d: int, t: int, seed: int = 0,
               verify: bool = True) -> PackingResult:
    """Try to pack t edge-disjoint minimally d-rigid spanning subgraphs.

    Succeeds exactly when the t-fold rigidity union has full rank (each
    part then has d*n - (d+1 choose 2) edges and is a base).  No
    connectivity precondition is checked: the attempt itself is the test,
    and failure reports the achieved partition.
    """
    if graph.n < d + 1:
        raise ValueError("need at least d+1 vertices")
    if t < 1:
        raise ValueError("t must be at least 1")
    oracles = [RigidityOracle(graph, d, seed, salt=i + 1) for i in range(t)]
    result = partition(oracles, range(graph.m))
    target = complete_rank(graph.n, d)
    feasible = all(len(p) == target for p in result.parts)
    verified = False
    if verify and feasible:
        verified = all(
            RigidityOracle(graph, d, seed, salt=1001 + i).rank(p) == target
            for i, p in enumerate(result.parts)
        )
    return PackingResult(result.parts, (target,) * t, feasible, verified, seed)


def pack_tree_rigid(graph: Graph, d: int, seed: int = 0,
                    verify: bool = True) -> PackingResult:
    """Split the graph into a spanning tree plus a minimally d-rigid subgraph.

    parts[0] is the tree candidate, parts[1] the rigid one; feasible exactly
    when the union of the graphic and rigidity matroids has rank
    (n - 1) + (d*n - (d+1 choose 2)).
    """
    if graph.n < d + 1:
        raise ValueError("need at least d+1 vertices")
    oracles: list = [GraphicOracle(graph), RigidityOracle(graph, d, seed, salt=1)]
    result = partition(oracles, range(graph.m))
    targets = (graph.n - 1, complete_rank(graph.n, d))
    feasible = all(len(p) == t for p, t in zip(result.parts, targets))
    verified = False
    if verify and feasible:
        tree_ok = independent_d1(graph, result.parts[0])
        rigid_ok = (
            RigidityOracle(graph, d, seed, salt=1002).rank(result.parts[1]) == targets[1]
        )
        verified = tree_ok and rigid_ok
    return PackingResult(result.parts, targets, feasible, verified, seed)
