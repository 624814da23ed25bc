"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.  Every tolerance and time budget is pinned here.
"""

import random
import time

import pytest

from rigidpack.connectivity import (
    brute_force_connectivity,
    certificate_is_valid,
    is_k_connected,
)
from rigidpack.generators import complete_graph, gnp_graph, lovasz_yemini
from rigidpack.graph import (
    Digraph,
    Graph,
    in_neighbors_of_set,
    induced_edge_count,
)
from rigidpack.matroid import (
    GraphicOracle,
    pack_rigid,
    pack_tree_rigid,
    rank_union,
)
from rigidpack.orientation import DegreeSpec, hakimi_orientation, k_connected_orientation
from rigidpack.rigidity import (
    RigidityOracle,
    complete_rank,
    independent_d1,
    independent_d2,
)
from rigidpack.stochastic import (
    SeededStream,
    expected_min_preceding,
    independent_subgraph_stats,
    sample_independent_subgraph,
)


class Stopwatch:
    def __init__(self, name, budget):
        self.name = name
        self.budget = budget

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(f"[{status}] {self.name} ({elapsed:.1f}s / budget {self.budget}s)")
        if exc_type is None:
            assert elapsed < self.budget, f"{self.name} exceeded {self.budget}s"
        return False


_cache = {}


def orientation_run(n, k):
    key = (n, k)
    if key not in _cache:
        graph = complete_graph(n)
        oriented, report = k_connected_orientation(graph, k, seed=0, verify=True)
        _cache[key] = (graph, oriented, report)
    return _cache[key]


def test_criterion_01_rank_formula_suite():
    with Stopwatch("1 rank formulas d<=4, n<=12", 1.0):
        for d in (1, 2, 3, 4):
            for n in range(1, 13):
                g = complete_graph(n)
                oracle = RigidityOracle(g, d, seed=0, salt=d)
                expected = n * (n - 1) // 2 if n <= d + 1 else d * n - d * (d + 1) // 2
                assert oracle.rank(range(g.m)) == expected
                assert expected == complete_rank(n, d)


def test_criterion_02_oracle_cross_validation():
    with Stopwatch("2 randomized vs exact oracles, 1000 graphs", 30.0):
        mismatches = 0
        for trial in range(1000):
            n = 4 + trial % 7                       # n <= 10
            g = gnp_graph(n, 0.5, seed=trial)
            rng = random.Random(trial)
            queries = [frozenset(range(g.m))]
            queries += [
                frozenset(rng.sample(range(g.m), rng.randrange(g.m + 1)))
                for _ in range(3)
            ]
            o1 = RigidityOracle(g, 1, seed=trial, salt=1)
            o2 = RigidityOracle(g, 2, seed=trial, salt=2)
            for q in queries:
                if o1.is_independent(q) != independent_d1(g, q):
                    mismatches += 1
                if o2.is_independent(q) != independent_d2(g, q):
                    mismatches += 1
        assert mismatches == 0


def test_criterion_03_union_rank_formulas():
    with Stopwatch("3 union rank formulas", 60.0):
        for d, t, n in ((2, 2, 8), (2, 3, 12), (3, 2, 14)):
            assert n >= 2 * t * d
            g = complete_graph(n)
            oracles = [RigidityOracle(g, d, seed=0, salt=i + 1) for i in range(t)]
            assert rank_union(oracles, range(g.m)) == t * d * n - t * (d + 1) * d // 2
        for d, n in ((2, 8), (3, 15), (6, 11)):
            g = complete_graph(n)
            oracles = [GraphicOracle(g), RigidityOracle(g, d, seed=0, salt=5)]
            assert rank_union(oracles, range(g.m)) == (d + 1) * n - (d + 1) * d // 2 - 1


def test_criterion_04_packing():
    with Stopwatch("4 packings K17, K33, tree+rigid K15", 120.0):
        for n, d in ((17, 4), (33, 8)):
            g = complete_graph(n)
            result = pack_rigid(g, d, 2, seed=0)
            assert result.feasible and result.verified
            assert result.parts[0] & result.parts[1] == frozenset()
            for i, part in enumerate(result.parts):
                assert len(part) == d * n - d * (d + 1) // 2
                assert RigidityOracle(g, d, seed=0, salt=90 + i).is_rigid(part)
        g15 = complete_graph(15)
        split = pack_tree_rigid(g15, 3, seed=0)
        assert split.feasible and split.verified
        tree, rigid = split.parts
        assert len(tree) == 14 and independent_d1(g15, tree)
        sub = g15.subgraph(tree)
        assert all(sub.degree(v) >= 1 for v in range(15))      # spanning
        assert RigidityOracle(g15, 3, seed=0, salt=91).is_rigid(rigid)
        assert not (tree & rigid)


def test_criterion_05_orientation_pipeline():
    with Stopwatch("5 k-connected orientations K17 (k=2), K33 (k=3)", 180.0):
        for n, k in ((17, 2), (33, 3)):
            graph, oriented, report = orientation_run(n, k)
            assert report.verified is True
            ok, _ = is_k_connected(oriented, k)
            assert ok
            d = 4 * k - 4
            deficits = report.deficits
            assert sum(deficits) == (d + 1) * d // 2
            base1, base2 = report.base_edges
            indeg = [0] * n
            for e in base1:
                u, v = graph.edges[e]
                h = oriented.heads[e]
                indeg[h] += 1
            assert indeg == [d - w for w in deficits]
            outdeg = [0] * n
            for e in base2:
                u, v = graph.edges[e]
                h = oriented.heads[e]
                outdeg[u if h == v else v] += 1
            assert outdeg == [d - w for w in deficits]


def test_criterion_06_small_deficit_sets_have_k_in_neighbors():
    with Stopwatch("6 in-neighbor sweep on the k=2 oriented base", 30.0):
        graph, oriented, report = orientation_run(17, 2)
        d = 4
        base1 = report.base_edges[0]
        sub = graph.subgraph(sorted(base1))
        heads = [oriented.heads[e] for e in sorted(base1)]
        oriented_base = Digraph(sub, heads)
        deficit_vertices = [v for v, w in enumerate(report.deficits) if w]
        assert len(deficit_vertices) == 10
        rng = random.Random(2024)
        checked = 0
        while checked < 500:
            r_count = rng.randrange(0, 6)                     # |X cap R| <= 5
            others = rng.randrange(0, 8)
            xs = set(rng.sample(deficit_vertices, r_count))
            xs |= set(rng.sample([v for v in range(17) if v not in deficit_vertices],
                                 min(others, 7)))
            if not xs or len(xs) == 17:
                continue
            checked += 1
            assert len(in_neighbors_of_set(oriented_base, xs)) >= 2
        assert checked == 500


def test_criterion_07_hakimi_certificates():
    def brute_feasible(g, targets):
        def go(i, remaining):
            if i == g.m:
                return all(r == 0 for r in remaining)
            u, v = g.edges[i]
            for head in (u, v):
                if remaining[head] > 0:
                    remaining[head] -= 1
                    if go(i + 1, remaining):
                        remaining[head] += 1
                        return True
                    remaining[head] += 1
            return False

        return go(0, list(targets))

    with Stopwatch("7 degree-spec verdicts vs brute force, 200 pairs", 30.0):
        for trial in range(200):
            rng = random.Random(5000 + trial)
            n = rng.randrange(3, 9)                           # n <= 8
            g = gnp_graph(n, 0.5, seed=trial)
            targets = tuple(rng.randrange(0, 3) for _ in range(n))
            result = hakimi_orientation(g, DegreeSpec(targets))
            feasible = brute_feasible(g, targets)
            if isinstance(result, Digraph):
                assert feasible
                assert [result.in_degree(v) for v in range(n)] == list(targets)
            else:
                assert not feasible
                if result.kind == "violating-set":
                    xs = result.violating_set
                    assert induced_edge_count(g, xs) > sum(targets[v] for v in xs)


def test_criterion_08_tight_examples():
    with Stopwatch("8 vertex-split tight examples", 120.0):
        example = lovasz_yemini([2], 4)
        assert example.connectivity == 5 and example.graph.n == 40
        assert is_k_connected(example.graph, 5)[0]
        oracle = RigidityOracle(example.graph, 2, seed=0, salt=7)
        assert oracle.rank(range(example.graph.m)) < 2 * 40 - 3
        pair = lovasz_yemini([1, 1], 3)
        assert pair.connectivity == 3
        assert is_k_connected(pair.graph, 3)[0]
        g = pair.graph
        two_trees = [GraphicOracle(g), GraphicOracle(g)]
        assert rank_union(two_trees, range(g.m)) < 2 * (g.n - 1)


def test_criterion_09_stochastic_suite():
    with Stopwatch("9 stochastic suite", 600.0):
        # (i) exact formula equals brute enumeration for every set size <= 8
        for size in range(1, 9):
            for d in range(1, size + 1):
                assert (
                    expected_min_preceding(size, d, "exact")
                    == expected_min_preceding(size, d, "brute")
                )
        # (ii) Monte Carlo at (10, 3), 1e5 trials, within 3 sigma of 2.4
        mean, se = expected_min_preceding(
            10, 3, "montecarlo", trials=100_000, stream=SeededStream(0)
        )
        assert abs(mean - 2.4) <= 3 * se
        # (iii) construction size on K_241 (d=3, t=2): mean - 3 SE >= 5.75 * 241
        stats = independent_subgraph_stats(complete_graph(241), 3, 2,
                                           trials=200, seed=0)
        assert stats.hypothesis_met
        assert stats.mean - 3 * stats.stderr >= 5.75 * 241
        # (iv) 50 runs on G(60, 0.5): always independent in the 2-fold union
        g = gnp_graph(60, 0.5, seed=100)
        for i in range(50):
            sample = sample_independent_subgraph(g, 2, 2, SeededStream(0).child(i))
            oracles = [
                RigidityOracle(g, 2, seed=i, salt=31),
                RigidityOracle(g, 2, seed=i, salt=32),
            ]
            assert rank_union(oracles, sample.edges) == len(sample.edges)


def test_criterion_10_connectivity_verifier_vs_brute_force():
    with Stopwatch("10 connectivity vs brute force, 500 instances", 60.0):
        for trial in range(500):
            n = 4 + trial % 7                                 # n <= 10
            g = gnp_graph(n, 0.45, seed=trial)
            rng = random.Random(trial)
            if trial % 2:
                heads = [v if rng.random() < 0.5 else u for u, v in g.edges]
                target = Digraph(g, heads)
            else:
                target = g
            for k in (1, 2, 3, 4):
                ok, cert = is_k_connected(target, k)
                assert ok == brute_force_connectivity(target, k)
                if cert is not None:
                    assert certificate_is_valid(target, cert, k)
