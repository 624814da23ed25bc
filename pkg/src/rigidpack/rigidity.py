"""Randomized rank oracle for generic d-dimensional rigidity matroids.

A generic realization is emulated by drawing vertex coordinates uniformly
from GF(PRIME); the rigidity matrix row of edge uv carries coords(u) -
coords(v) in u's d columns and the negation in v's.  Ranks computed from a
random specialization can only come out *lower* than the generic rank, and
do so with probability at most (rows)/PRIME per query, so an "independent"
answer is always trustworthy while a "dependent" answer carries a ~2^-40
one-sided error.  Delivered objects are therefore re-checked under a fresh
realization (see ``verify_independent``).

Exact combinatorial oracles are provided for cross-validation where they
exist: d=1 (forests, union-find) and d=2 (the (2,3)-pebble game).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph
from .linalg import PRIME, DenseMatrix, RowBasis
from .stream import stream_rng

_RANK_CACHE_SIZE = 65536


def complete_rank(n: int, d: int) -> int:
    """Generic rigidity rank of the complete graph on n vertices.

    dn - (d+1 choose 2) once n exceeds d+1; all of (n choose 2) below that,
    where the matrix cannot reach the affine bound.
    """
    if n <= d + 1:
        return n * (n - 1) // 2
    return d * n - (d + 1) * d // 2


@dataclass(frozen=True)
class Realization:
    """Seeded random coordinates in GF(PRIME)^d, one tuple per vertex."""

    d: int
    coords: tuple[tuple[int, ...], ...]
    seed: int
    salt: int

    @classmethod
    def random(cls, n: int, d: int, seed: int, salt: int = 0) -> "Realization":
        if d < 1:
            raise ValueError("dimension must be at least 1")
        rng = stream_rng(seed, salt)
        coords = tuple(tuple(rng.randrange(PRIME) for _ in range(d)) for _ in range(n))
        return cls(d, coords, seed, salt)


def rigidity_matrix_row(realization: Realization, n: int, u: int, v: int) -> list[int]:
    """One matrix row for the (possibly virtual) edge uv."""
    d = realization.d
    row = [0] * (d * n)
    cu, cv = realization.coords[u], realization.coords[v]
    for i in range(d):
        diff = (cu[i] - cv[i]) % PRIME
        row[u * d + i] = diff
        row[v * d + i] = (PRIME - diff) % PRIME
    return row


def rigidity_matrix(graph: Graph, realization: Realization) -> DenseMatrix:
    """One row per edge in edge-index order; d*n columns (even when edgeless)."""
    if len(realization.coords) < graph.n:
        raise ValueError("realization does not cover all vertices")
    rows = [rigidity_matrix_row(realization, graph.n, u, v) for u, v in graph.edges]
    return DenseMatrix.from_rows(rows, cols=realization.d * graph.n)


class RigidityOracle:
    """Rank and independence queries for R_d over one fixed realization.

    Queries are pure given (seed, salt); results are memoized by frozenset
    of edge indices in a bounded LRU, since matroid partition re-queries
    heavily overlapping sets.
    """

    def __init__(self, graph: Graph, d: int, seed: int = 0, salt: int = 0):
        self.graph = graph
        self.d = d
        self.seed = seed
        self.salt = salt
        self.realization = Realization.random(graph.n, d, seed, salt)
        self._rows: dict[int, list[int]] = {}
        self._rank_cached = functools.lru_cache(maxsize=_RANK_CACHE_SIZE)(self._rank_uncached)

    @property
    def ncols(self) -> int:
        return self.d * self.graph.n

    def row(self, edge_id: int) -> list[int]:
        r = self._rows.get(edge_id)
        if r is None:
            u, v = self.graph.edges[edge_id]
            r = rigidity_matrix_row(self.realization, self.graph.n, u, v)
            self._rows[edge_id] = r
        return r

    def _rank_uncached(self, edge_ids: frozenset[int]) -> int:
        basis = RowBasis(self.ncols)
        for e in sorted(edge_ids):
            basis.insert(self.row(e))
        return len(basis)

    def rank(self, edge_ids: Iterable[int]) -> int:
        return self._rank_cached(frozenset(edge_ids))

    def is_independent(self, edge_ids: Iterable[int]) -> bool:
        ids = frozenset(edge_ids)
        return self.rank(ids) == len(ids)

    def is_rigid(self, edge_ids: Iterable[int] | None = None) -> bool:
        """Whether the edge set spans R_d of the complete graph on V."""
        ids = frozenset(range(self.graph.m)) if edge_ids is None else frozenset(edge_ids)
        return self.rank(ids) == complete_rank(self.graph.n, self.d)

    def is_linked(self, u: int, v: int, edge_ids: Iterable[int]) -> bool:
        """True iff adding the (virtual) edge uv leaves the rank unchanged."""
        if u == v:
            raise ValueError("linkedness needs two distinct vertices")
        basis = RowBasis(self.ncols)
        for e in sorted(set(edge_ids)):
            basis.insert(self.row(e))
        probe = rigidity_matrix_row(self.realization, self.graph.n, u, v)
        return not any(basis.residue(probe))

    def extract_base(self, edge_ids: Iterable[int]) -> list[int]:
        """Greedy maximal independent subset, scanned in edge-index order."""
        basis = RowBasis(self.ncols)
        kept = []
        for e in sorted(set(edge_ids)):
            if basis.insert(self.row(e)):
                kept.append(e)
        return kept

    def reseeded(self, salt: int) -> "RigidityOracle":
        """Same graph and dimension under a fresh realization."""
        return RigidityOracle(self.graph, self.d, self.seed, salt)

    def verify_independent(self, edge_ids: Iterable[int], salt: int = 1 << 20) -> bool:
        """Re-check independence under a fresh realization (cuts one-sided error)."""
        return self.reseeded(self.salt + salt).is_independent(edge_ids)

    def independent(self, edge_ids: Iterable[int]) -> bool:
        return self.is_independent(edge_ids)

    def new_state(self) -> "RigidityPartitionState":
        return RigidityPartitionState(self)


class RigidityPartitionState:
    """Incremental independent set over one oracle, with exchange queries.

    Wraps a tracking RowBasis keyed by edge index; ``circuit(e)`` reports
    the fundamental circuit of a dependent edge, i.e. exactly the members y
    for which part - y + e stays independent.
    """

    __slots__ = ("oracle", "basis")

    def __init__(self, oracle: RigidityOracle):
        self.oracle = oracle
        self.basis = RowBasis(oracle.ncols, track_width=oracle.graph.m)

    @property
    def version(self) -> int:
        return self.basis.version

    def members(self) -> set[int]:
        return set(self.basis.index_of)

    def insert(self, edge_id: int) -> bool:
        return self.basis.insert(self.oracle.row(edge_id), edge_id)

    def circuit(self, edge_id: int) -> set[int] | None:
        return self.basis.circuit(self.oracle.row(edge_id))

    def remove(self, edge_id: int) -> None:
        self.basis.remove(edge_id, self.oracle.row)


def independent_d1(graph: Graph, edge_ids: Iterable[int]) -> bool:
    """Exact R_1 independence: the edge set is a forest (union-find)."""
    parent = list(range(graph.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edge_ids:
        u, v = graph.edges[e]
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def independent_d2(graph: Graph, edge_ids: Iterable[int]) -> bool:
    """Exact R_2 independence via the (2,3)-pebble game.

    Each vertex holds 2 pebbles; an edge is accepted when 4 pebbles can be
    gathered on its endpoints by reversing directed paths.  The accepted
    sets are exactly the (2,3)-sparse sets, which by Laman's theorem are
    the R_2-independent ones.
    """
    pebbles = [2] * graph.n
    out: dict[int, list[int]] = {v: [] for v in range(graph.n)}

    def gather(root: int, keep: tuple[int, int]) -> bool:
        # DFS from root along accepted-edge orientations for a free pebble;
        # reverse the path to move it onto root.
        seen = {root}
        stack = [(root, iter(out[root]))]
        trail: dict[int, int] = {}
        while stack:
            v, it = stack[-1]
            found = None
            for w in it:
                if w in seen:
                    continue
                seen.add(w)
                trail[w] = v
                if pebbles[w] > 0 and w not in keep:
                    found = w
                    break
                stack.append((w, iter(out[w])))
                break
            else:
                stack.pop()
                continue
            if found is not None:
                pebbles[found] -= 1
                pebbles[root] += 1
                while found != root:
                    prev = trail[found]
                    out[prev].remove(found)
                    out[found].append(prev)
                    found = prev
                return True
        return False

    for e in sorted(set(edge_ids)):
        u, v = graph.edges[e]
        while pebbles[u] + pebbles[v] < 4:
            if pebbles[u] < 2 and gather(u, (u, v)):
                continue
            if pebbles[v] < 2 and gather(v, (u, v)):
                continue
            return False
        pebbles[u] -= 1
        out[u].append(v)
    return True
