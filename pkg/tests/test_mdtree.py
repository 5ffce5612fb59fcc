from __future__ import annotations

import random

import pytest

from mdclique import (
    Graph,
    MDNode,
    MDTree,
    NodeKind,
    coprime_graph,
    decompose,
    enumerate_modules_bruteforce,
    gnp,
    is_module,
    quotient,
    verify_tree,
)
from mdclique.graph import vertex_mask

HUB7_TREE = "Prime[Series[a,b,c],d,Parallel[e,f],g]"
# canonical decomposition of the coprime graph on 1..8: vertices 1, 5 and 7
# are universal (series at the root), 2, 4, 8 are false twins (parallel),
# and 3 joins onto them; cross-checked below against the exhaustive module
# enumerator
COPRIME8_TREE = "Series[1,Parallel[Series[Parallel[2,4,8],3],6],5,7]"


def strong_modules_bruteforce(g: Graph) -> set[int]:
    """Strong modules (overlapping no other module), as span masks."""
    masks = [vertex_mask(m) for m in enumerate_modules_bruteforce(g)]
    strong = set()
    for a in masks:
        if all(
            not (a & b) or (a & b) == a or (a & b) == b
            for b in masks
            if b != a
        ):
            strong.add(a)
    return strong


def tree_spans(t: MDTree) -> set[int]:
    return {node.span for node in t.iter_nodes()}


def unlabeled_shape(node: MDNode) -> str:
    if node.is_leaf:
        return "."
    inner = ",".join(sorted(unlabeled_shape(c) for c in node.children))
    return f"{node.kind.value}[{inner}]"


class TestIsModule:
    def test_hub7_abc(self, hub7):
        assert is_module(hub7, [0, 1, 2])

    def test_hub7_ef(self, hub7):
        assert is_module(hub7, [4, 5])

    def test_hub7_ad_is_not(self, hub7):
        # e is adjacent to d but not to a
        assert not is_module(hub7, [0, 3])

    def test_singletons_and_v(self, hub7):
        for v in range(7):
            assert is_module(hub7, [v])
        assert is_module(hub7, range(7))

    def test_empty_rejected(self, hub7):
        with pytest.raises(ValueError):
            is_module(hub7, [])


class TestDecompose:
    def test_hub7_golden(self, hub7):
        assert decompose(hub7).serialize() == HUB7_TREE

    def test_coprime8_golden(self):
        g = coprime_graph(8)
        t = decompose(g)
        assert t.serialize() == COPRIME8_TREE
        # the golden is pinned by the strong modules themselves
        assert tree_spans(t) == strong_modules_bruteforce(g)

    def test_single_vertex(self):
        t = decompose(Graph(1))
        assert t.root.is_leaf and t.root.vertex == 0
        assert t.depth() == 0
        assert t.serialize() == "1"

    def test_complete_graph_is_series(self):
        for n in (2, 3, 6):
            g = gnp(n, 1.0, seed=0)
            root = decompose(g).root
            assert root.kind is NodeKind.SERIES
            assert all(c.is_leaf for c in root.children)
            assert len(root.children) == n

    def test_edgeless_graph_is_parallel(self):
        root = decompose(Graph(4)).root
        assert root.kind is NodeKind.PARALLEL
        assert len(root.children) == 4

    def test_two_vertex_cases(self):
        assert decompose(Graph(2, [(0, 1)])).root.kind is NodeKind.SERIES
        assert decompose(Graph(2)).root.kind is NodeKind.PARALLEL

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            decompose(Graph(0))

    def test_internal_spans_are_modules(self, hub7):
        for g in (hub7, coprime_graph(12), gnp(15, 0.4, seed=9)):
            t = decompose(g)
            for node in t.iter_nodes():
                if not node.is_leaf:
                    assert is_module(g, node.span_vertices())

    def test_node_typing_on_quotients(self):
        rng = random.Random(17)
        for _ in range(40):
            g = gnp(rng.randint(2, 12), rng.random(), seed=rng.randint(0, 10**9))
            for node in decompose(g).iter_nodes():
                if node.is_leaf:
                    continue
                reps = [(c.span & -c.span).bit_length() - 1 for c in node.children]
                k = len(reps)
                cross = sum(
                    1
                    for i in range(k)
                    for j in range(i + 1, k)
                    if g.has_edge(reps[i], reps[j])
                )
                if node.kind is NodeKind.PARALLEL:
                    assert cross == 0
                elif node.kind is NodeKind.SERIES:
                    assert cross == k * (k - 1) // 2
                else:
                    assert 0 < cross < k * (k - 1) // 2
                    assert k >= 4
                    q = quotient(g, node, [1] * k)
                    mods = enumerate_modules_bruteforce(q.graph)
                    assert all(len(m) in (1, k) for m in mods)

    def test_strong_modules_match_bruteforce(self):
        rng = random.Random(23)
        for _ in range(60):
            n = rng.randint(1, 10)
            g = gnp(n, rng.choice([0.15, 0.35, 0.5, 0.7, 0.9]), seed=rng.randint(0, 10**9))
            assert tree_spans(decompose(g)) == strong_modules_bruteforce(g)

    def test_isomorphism_equivariance(self):
        rng = random.Random(31)
        for _ in range(25):
            n = rng.randint(2, 14)
            g = gnp(n, rng.random(), seed=rng.randint(0, 10**9))
            perm = list(range(n))
            rng.shuffle(perm)
            h = Graph(n, [(perm[u], perm[v]) for u, v in g.edges()])
            assert unlabeled_shape(decompose(g).root) == unlabeled_shape(decompose(h).root)

    def test_no_degenerate_nesting(self):
        rng = random.Random(37)
        for _ in range(40):
            g = gnp(rng.randint(1, 14), rng.random(), seed=rng.randint(0, 10**9))
            for node in decompose(g).iter_nodes():
                for child in node.children:
                    if node.kind in (NodeKind.PARALLEL, NodeKind.SERIES):
                        assert child.kind is not node.kind


class TestVerifyTree:
    def test_decompose_output_is_valid(self, hub7):
        assert verify_tree(hub7, decompose(hub7)) == []

    def test_flat_series_over_hub7_rejected(self, hub7):
        bad = MDTree(
            root=MDNode(
                NodeKind.SERIES,
                children=tuple(MDNode(NodeKind.LEAF, vertex=v) for v in range(7)),
            ),
            graph=hub7,
        )
        problems = verify_tree(hub7, bad)
        assert problems
        assert any("cross edge" in p for p in problems)

    def test_parallel_over_edgeless(self):
        g = Graph(3)
        t = MDTree(
            root=MDNode(
                NodeKind.PARALLEL,
                children=tuple(MDNode(NodeKind.LEAF, vertex=v) for v in range(3)),
            ),
            graph=g,
        )
        assert verify_tree(g, t) == []

    def test_wrong_leaf_set_detected(self, hub7):
        sub = Graph(6, [(u, v) for u, v in hub7.edges() if v < 6])
        problems = verify_tree(hub7, decompose(sub))
        assert problems

    def test_random_decompositions_verify(self):
        rng = random.Random(41)
        for _ in range(50):
            g = gnp(rng.randint(1, 16), rng.random(), seed=rng.randint(0, 10**9))
            assert verify_tree(g, decompose(g)) == []


class TestQuotient:
    def test_hub7_root_quotient(self, hub7):
        t = decompose(hub7)
        q = quotient(hub7, t.root, [3, 1, 1, 1])
        assert q.graph.n == 4
        assert list(q.graph.edges()) == [(0, 1), (1, 2), (2, 3)]
        assert q.graph.weights == [3, 1, 1, 1]
        assert [q.graph.label(i) for i in range(4)] == ["abc", "d", "ef", "g"]
        assert [node.span_vertices() for node in q.back_map] == [
            (0, 1, 2),
            (3,),
            (4, 5),
            (6,),
        ]

    def test_series_node_quotient_complete(self, hub7):
        series = decompose(hub7).root.children[0]
        assert series.kind is NodeKind.SERIES
        q = quotient(hub7, series, [1, 1, 1])
        assert q.graph.m == 3

    def test_parallel_node_quotient_edgeless(self, hub7):
        parallel = decompose(hub7).root.children[2]
        assert parallel.kind is NodeKind.PARALLEL
        q = quotient(hub7, parallel, [1, 1])
        assert q.graph.m == 0

    def test_weight_count_mismatch(self, hub7):
        with pytest.raises(ValueError, match="child weights"):
            quotient(hub7, decompose(hub7).root, [1, 1])

    def test_leaf_rejected(self, hub7):
        leaf = decompose(hub7).root.children[1]
        assert leaf.is_leaf
        with pytest.raises(ValueError):
            quotient(hub7, leaf, [])


class TestEnumerateModules:
    def test_triangle_all_subsets(self):
        g = gnp(3, 1.0, seed=0)
        assert len(enumerate_modules_bruteforce(g)) == 7

    def test_path_modules(self):
        g = Graph(3, [(0, 1), (1, 2)])
        assert enumerate_modules_bruteforce(g) == [
            (0,),
            (1,),
            (2,),
            (0, 2),
            (0, 1, 2),
        ]

    def test_hub7_members(self, hub7):
        mods = enumerate_modules_bruteforce(hub7)
        assert (0, 1, 2) in mods
        assert (4, 5) in mods
        for v in range(7):
            assert (v,) in mods
        assert tuple(range(7)) in mods
        # every reported module satisfies the definition verbatim
        for m in mods:
            inside = set(m)
            for x in range(7):
                if x in inside:
                    continue
                hits = sum(1 for v in m if hub7.has_edge(x, v))
                assert hits in (0, len(m))

    def test_limit_guard(self):
        with pytest.raises(ValueError, match="limit"):
            enumerate_modules_bruteforce(Graph(16))


class TestSerialization:
    def test_tree_stats(self, hub7):
        t = decompose(hub7)
        assert t.kind_counts() == {"prime": 1, "series": 1, "parallel": 1, "leaf": 7}
        assert t.depth() == 2

    def test_coprime8_stats(self):
        t = decompose(coprime_graph(8))
        assert t.kind_counts() == {"prime": 0, "series": 2, "parallel": 2, "leaf": 8}
