"""Benchmark graph generators, deterministic per seed.

All randomness comes from `random.Random(seed)` (Mersenne Twister), with a
fixed drawing order, so a given (n, seed) always produces the same graph.
"""
from __future__ import annotations

import math
import random
import sys

from .graph import Graph


def coprime_graph(n: int) -> Graph:
    """Graph on vertices labelled 1..n with an edge wherever the labels are
    coprime (gcd = 1); unit weights. Vertex id k carries label k+1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    adj = [0] * n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if math.gcd(i, j) == 1:
                adj[i - 1] |= 1 << (j - 1)
                adj[j - 1] |= 1 << (i - 1)
    g = Graph(n)
    g.adj[:] = adj
    return g


def random_partition(n: int, rng: random.Random) -> list[int]:
    """Random composition of n: repeatedly draw a uniform part in
    [1, remaining]. For n >= 2 the single-part outcome [n] is rejected and
    redrawn, so the result always has >= 2 parts (otherwise the cograph
    recursion below could never terminate). The draw list is returned
    reversed."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return [1]
    while True:
        parts = []
        left = n
        while left > 0:
            p = rng.randint(1, left)
            parts.append(p)
            left -= p
        if len(parts) >= 2:
            break
    parts.reverse()
    return parts


def _build_cograph(n: int, rng: random.Random) -> list[int]:
    """Recursive build returning local adjacency masks. Drawing order per
    node: partition first, then the union/join coin, then children
    left-to-right."""
    if n == 1:
        return [0]
    parts = random_partition(n, rng)
    join = rng.randint(0, 1) == 1
    blocks = [_build_cograph(p, rng) for p in parts]
    adj = [0] * n
    offset = 0
    for block in blocks:
        for i, mask in enumerate(block):
            adj[offset + i] = mask << offset
        offset += len(block)
    if join:
        full = (1 << n) - 1
        offset = 0
        for block in blocks:
            block_mask = ((1 << len(block)) - 1) << offset
            others = full & ~block_mask
            for i in range(len(block)):
                adj[offset + i] |= others
            offset += len(block)
    return adj


def random_cograph(n: int, seed: int) -> Graph:
    """Random cograph on n vertices, unit weights: recursively partition,
    then take the disjoint union (coin 0) or the join (coin 1) of the parts.
    By construction its decomposition tree has no prime node."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if sys.getrecursionlimit() < 2 * n + 1000:
        sys.setrecursionlimit(2 * n + 1000)
    rng = random.Random(seed)
    adj = _build_cograph(n, rng)
    g = Graph(n)
    g.adj[:] = adj
    return g


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), unit weights; pairs scanned in row order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    rng = random.Random(seed)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    g = Graph(n)
    g.adj[:] = adj
    return g
