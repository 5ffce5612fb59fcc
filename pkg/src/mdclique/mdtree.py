"""Modular decomposition trees.

A module is a vertex set whose members all have the same neighbors outside
the set. The strong modules (those overlapping no other module) form a
canonical rooted tree: leaves are vertices, and each internal node is typed
Parallel (children have no cross edges), Series (all cross edges present),
or Prime (the quotient on the children has only trivial modules).

`decompose` uses the classic recursive scheme: split off connected
components (Parallel), else co-connected components (Series), else compute
the prime node's children as the maximal proper modules, found by partition
refinement around a pivot plus module-closure tests. It is not linear-time,
but it is straightforwardly correct and bitmask-fast in practice; the tree
is validated by `verify_tree` and a brute-force module enumerator in tests.
"""
from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .graph import Graph, iter_bits, vertex_mask


class NodeKind(Enum):
    LEAF = "Leaf"
    PARALLEL = "Parallel"
    SERIES = "Series"
    PRIME = "Prime"


class MDNode:
    """One node of the decomposition tree.

    `span` is the bitmask of original-graph vertices below the node. A leaf
    carries its `vertex`; internal nodes carry >= 2 `children`, ordered by
    the smallest vertex id in each child's span (the canonical order).
    """

    __slots__ = ("kind", "vertex", "children", "span")

    def __init__(self, kind: NodeKind, vertex: int | None = None,
                 children: tuple["MDNode", ...] = ()):
        self.kind = kind
        self.vertex = vertex
        self.children = children
        if kind is NodeKind.LEAF:
            assert vertex is not None and not children
            self.span = 1 << vertex
        else:
            assert vertex is None and len(children) >= 2
            span = 0
            for child in children:
                span |= child.span
            self.span = span

    @property
    def is_leaf(self) -> bool:
        return self.kind is NodeKind.LEAF

    def span_vertices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.span))

    def __repr__(self) -> str:
        if self.is_leaf:
            return f"MDNode(Leaf, vertex={self.vertex})"
        return f"MDNode({self.kind.value}, {len(self.children)} children)"


@dataclass(frozen=True)
class MDTree:
    root: MDNode
    graph: Graph

    def serialize(self) -> str:
        """One-line bracketed form, e.g. Prime[Series[a,b,c],d,Parallel[e,f],g]."""
        return _serialize(self.root, self.graph)

    def iter_nodes(self) -> Iterator[MDNode]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def kind_counts(self) -> dict[str, int]:
        counts = {"prime": 0, "series": 0, "parallel": 0, "leaf": 0}
        for node in self.iter_nodes():
            counts[node.kind.value.lower()] += 1
        return counts

    def depth(self) -> int:
        """Longest root-to-leaf path in edges (0 for a bare leaf root)."""
        def walk(node: MDNode) -> int:
            if node.is_leaf:
                return 0
            return 1 + max(walk(c) for c in node.children)
        return walk(self.root)


def _serialize(node: MDNode, g: Graph) -> str:
    if node.is_leaf:
        return g.label(node.vertex)
    inner = ",".join(_serialize(c, g) for c in node.children)
    return f"{node.kind.value}[{inner}]"


def is_module(g: Graph, s: Iterable[int]) -> bool:
    """True iff every vertex outside s is adjacent to all of s or none of s."""
    mask = vertex_mask(s)
    if mask == 0:
        raise ValueError("a module must be nonempty")
    if mask & ~g.full_mask:
        raise ValueError("vertex out of range")
    return _is_module_mask(g.adj, g.full_mask, mask)


def _is_module_mask(adj: list[int], universe: int, mask: int) -> bool:
    for x in iter_bits(universe & ~mask):
        hit = adj[x] & mask
        if hit and hit != mask:
            return False
    return True


def _components(adj: list[int], span: int) -> list[int]:
    """Connected components of the subgraph induced by span, as masks."""
    comps = []
    rest = span
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & span & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def _co_components(adj: list[int], span: int) -> list[int]:
    """Connected components of the complement, restricted to span."""
    comps = []
    rest = span
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= span & ~(adj[v] | (1 << v))
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def _maximal_modules_avoiding(adj: list[int], span: int, pivot: int) -> list[int]:
    """Maximal modules of the span-induced subgraph that avoid `pivot`.

    Partition refinement: start from {N(pivot), non-neighbors}, split parts
    by any outside vertex adjacent to some but not all of the part. Both
    halves of a split are requeued as splitters, which guarantees the
    fixpoint; the fixpoint is exactly the maximal-modules partition.
    """
    inside = span & ~(1 << pivot)
    nbrs = adj[pivot] & inside
    parts = [p for p in (nbrs, inside & ~nbrs) if p]
    singles = []
    queue = deque(iter_bits(inside))
    queued = inside
    while queue:
        z = queue.popleft()
        queued &= ~(1 << z)
        zadj = adj[z]
        i = 0
        while i < len(parts):
            part = parts[i]
            if part >> z & 1:
                i += 1
                continue
            hit = part & zadj
            if hit == 0 or hit == part:
                i += 1
                continue
            miss = part & ~zadj
            replacement = []
            for half in (hit, miss):
                requeue = half & ~queued
                queued |= requeue
                queue.extend(iter_bits(requeue))
                if half & (half - 1):
                    replacement.append(half)
                else:
                    singles.append(half)
            parts[i : i + 1] = replacement
            i += len(replacement)
    return parts + singles


def _module_closure(adj: list[int], span: int, seed: int) -> int:
    """Smallest module of the span-induced subgraph containing seed.

    Grows the set by batches of splitters; stops early once it reaches the
    whole span.
    """
    s = seed
    while s != span:
        grow = 0
        for z in iter_bits(span & ~s):
            hit = adj[z] & s
            if hit and hit != s:
                grow |= 1 << z
        if not grow:
            break
        s |= grow
    return s


def _prime_children(adj: list[int], span: int) -> list[int]:
    """Child spans of a prime node (span connected and co-connected).

    The children are the maximal proper modules. Those avoiding the pivot
    come from partition refinement; a refinement class belongs inside the
    pivot's own child exactly when its closure with the pivot stays proper.
    """
    pivot_bit = span & -span
    pivot = pivot_bit.bit_length() - 1
    classes = _maximal_modules_avoiding(adj, span, pivot)
    pivot_child = pivot_bit
    children = []
    for cls in classes:
        if _module_closure(adj, span, pivot_bit | cls) != span:
            pivot_child |= cls
        else:
            children.append(cls)
    children.append(pivot_child)
    return children


def _decompose_span(adj: list[int], span: int) -> MDNode:
    if span & (span - 1) == 0:
        return MDNode(NodeKind.LEAF, vertex=span.bit_length() - 1)
    comps = _components(adj, span)
    if len(comps) > 1:
        kind, child_spans = NodeKind.PARALLEL, comps
    else:
        cocomps = _co_components(adj, span)
        if len(cocomps) > 1:
            kind, child_spans = NodeKind.SERIES, cocomps
        else:
            kind, child_spans = NodeKind.PRIME, _prime_children(adj, span)
    children = [_decompose_span(adj, s) for s in child_spans]
    children.sort(key=lambda c: c.span & -c.span)
    return MDNode(kind, children=tuple(children))


def decompose(g: Graph) -> MDTree:
    """Canonical modular decomposition tree of g (n >= 1).

    Single-vertex graphs decompose to a bare leaf root. Children of every
    internal node are ordered by smallest vertex id in their spans, so equal
    graphs yield identical trees.
    """
    if g.n < 1:
        raise ValueError("cannot decompose an empty graph")
    limit = 4 * g.n + 1000
    if sys.getrecursionlimit() < limit:
        sys.setrecursionlimit(limit)
    return MDTree(root=_decompose_span(g.adj, g.full_mask), graph=g)


@dataclass(frozen=True)
class QuotientGraph:
    """Weighted graph on an internal node's children. Quotient vertex i maps
    back to `back_map[i]`; two quotient vertices are adjacent iff any (hence
    every) pair of their spans' vertices is adjacent in the original graph."""

    graph: Graph
    back_map: tuple[MDNode, ...]


def _joined_label(g: Graph, span: int) -> str:
    labels = [g.label(v) for v in iter_bits(span)]
    if all(len(p) == 1 for p in labels):
        return "".join(labels)
    return "+".join(labels)


def quotient(g: Graph, node: MDNode, child_weights: list[int]) -> QuotientGraph:
    """Quotient of an internal node with the given per-child weights.

    Adjacency is decided by one representative per child (valid because the
    children are modules).
    """
    if node.is_leaf:
        raise ValueError("quotient of a leaf node")
    k = len(node.children)
    if len(child_weights) != k:
        raise ValueError(f"expected {k} child weights, got {len(child_weights)}")
    for i, w in enumerate(child_weights):
        if w < 1:
            raise ValueError(f"child weight {i} must be >= 1")
    reps = [(c.span & -c.span).bit_length() - 1 for c in node.children]
    edges = [
        (i, j)
        for i in range(k)
        for j in range(i + 1, k)
        if g.adj[reps[i]] >> reps[j] & 1
    ]
    q = Graph(
        k,
        edges,
        list(child_weights),
        [_joined_label(g, c.span) for c in node.children],
    )
    return QuotientGraph(graph=q, back_map=tuple(node.children))


def enumerate_modules_bruteforce(g: Graph, limit: int = 15) -> list[tuple[int, ...]]:
    """All nonempty modules by exhaustive subset check, ordered by
    (size, vertex tuple). Only feasible for small n; the guard is `limit`."""
    if g.n > limit:
        raise ValueError(f"n={g.n} exceeds brute-force limit {limit}")
    full = g.full_mask
    adj = g.adj
    found = []
    for mask in range(1, full + 1):
        if _is_module_mask(adj, full, mask):
            found.append(tuple(iter_bits(mask)))
    found.sort(key=lambda t: (len(t), t))
    return found


def _quotient_is_primitive(adj: list[int], reps: list[int]) -> bool:
    """True iff the quotient graph on the representatives has only trivial
    modules, via pairwise module closures."""
    k = len(reps)
    qadj = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if adj[reps[i]] >> reps[j] & 1:
                qadj[i] |= 1 << j
                qadj[j] |= 1 << i
    full = (1 << k) - 1
    for i in range(k):
        for j in range(i + 1, k):
            if _module_closure(qadj, full, (1 << i) | (1 << j)) != full:
                return False
    return True


def verify_tree(g: Graph, t: MDTree) -> list[str]:
    """Check every tree invariant; returns a list of violations (empty = valid).

    Each entry names the offending node by its child-index path from the
    root and the rule violated.
    """
    problems: list[str] = []

    def report(path: str, msg: str) -> None:
        problems.append(f"{path}: {msg}")

    if t.root.span != g.full_mask:
        report("root", f"span {t.root.span_vertices()} != V(G)")

    def walk(node: MDNode, path: str) -> None:
        if node.is_leaf:
            if node.span != 1 << node.vertex:
                report(path, "leaf span != {vertex}")
            return
        if len(node.children) < 2:
            report(path, "internal node with < 2 children")
        union = 0
        for i, child in enumerate(node.children):
            if union & child.span:
                report(path, f"child {i} span overlaps earlier siblings")
            union |= child.span
        if union != node.span:
            report(path, "children spans do not partition the span")
        if not _is_module_mask(g.adj, g.full_mask, node.span):
            report(path, "span is not a module of the graph")
        spans = [c.span for c in node.children]
        if node.kind is NodeKind.PARALLEL:
            for i, a in enumerate(spans):
                reach = 0
                for v in iter_bits(a):
                    reach |= g.adj[v]
                if reach & (node.span & ~a):
                    report(path, f"parallel node: child {i} has a cross edge")
            if any(c.kind is NodeKind.PARALLEL for c in node.children):
                report(path, "parallel node with a parallel child")
        elif node.kind is NodeKind.SERIES:
            for i, a in enumerate(spans):
                rest = node.span & ~a
                for v in iter_bits(a):
                    if g.adj[v] & rest != rest:
                        report(path, f"series node: child {i} misses a cross edge")
                        break
            if any(c.kind is NodeKind.SERIES for c in node.children):
                report(path, "series node with a series child")
        else:
            if len(node.children) < 4:
                report(path, "prime node with < 4 children")
            reps = [(s & -s).bit_length() - 1 for s in spans]
            k = len(reps)
            cross = sum(
                1
                for i in range(k)
                for j in range(i + 1, k)
                if g.adj[reps[i]] >> reps[j] & 1
            )
            if cross == 0:
                report(path, "prime node quotient is edgeless")
            elif cross == k * (k - 1) // 2:
                report(path, "prime node quotient is complete")
            if k <= 15:
                sub_adj = [0] * k
                for i in range(k):
                    for j in range(i + 1, k):
                        if g.adj[reps[i]] >> reps[j] & 1:
                            sub_adj[i] |= 1 << j
                            sub_adj[j] |= 1 << i
                qfull = (1 << k) - 1
                nontrivial = [
                    mask
                    for mask in range(1, qfull + 1)
                    if mask.bit_count() not in (1, k)
                    and _is_module_mask(sub_adj, qfull, mask)
                ]
                if nontrivial:
                    report(path, "prime node quotient has a nontrivial module")
            elif not _quotient_is_primitive(g.adj, reps):
                report(path, "prime node quotient has a nontrivial module")
        for i, child in enumerate(node.children):
            walk(child, f"{path}.{i}")

    limit = 4 * g.n + 1000
    if sys.getrecursionlimit() < limit:
        sys.setrecursionlimit(limit)
    walk(t.root, "root")

    leaves = vertex_mask(
        node.vertex for node in t.iter_nodes() if node.is_leaf
    )
    if leaves != g.full_mask:
        report("root", "tree leaves are not exactly V(G)")
    return problems
