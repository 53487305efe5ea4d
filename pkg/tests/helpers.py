"""Independent brute-force oracles and corpus builders for the tests.

These deliberately reimplement the quantities by dumb enumeration so the
package's solvers are checked against something that shares no code with
them.
"""

from __future__ import annotations

import random
from itertools import permutations, product

from antilabel import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_edged_graph(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if g.m > 0:
            return g


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def nohole_by_permutations(g: Graph) -> int:
    """Max over all bijections of the min edge gap; usable up to n ~ 8."""
    assert g.m > 0
    best = 0
    for perm in permutations(range(1, g.n + 1)):
        gap = g.n
        for u, v in g.edges:
            d = abs(perm[u] - perm[v])
            if d <= best:
                gap = -1
                break
            if d < gap:
                gap = d
        if gap >= 0:
            best = gap
    return best


def chromatic_by_enumeration(g: Graph) -> int:
    """Smallest c for which some of the c**n assignments is proper."""
    if g.n == 0:
        raise ValueError("needs a vertex")
    for c in range(1, g.n + 1):
        for assignment in product(range(c), repeat=g.n):
            if all(assignment[u] != assignment[v] for u, v in g.edges):
                return c
    raise AssertionError("unreachable: n colors always suffice")


def hamiltonian_by_permutations(g: Graph) -> bool:
    if g.n == 1:
        return True
    for perm in permutations(range(g.n)):
        if all(g.has_edge(perm[i], perm[i + 1]) for i in range(g.n - 1)):
            return True
    return False


def anti_l21_by_enumeration(g: Graph, k: int) -> int:
    """Largest even 2d over all k**n integer labelings; tiny instances only."""
    assert g.m > 0
    pairs2 = set()
    for mid in range(g.n):
        nbrs = g.neighbors(mid)
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                u, v = nbrs[i], nbrs[j]
                if not g.has_edge(u, v):
                    pairs2.add((u, v))
    for d in range((k - 1) // 2, 0, -1):
        for labels in product(range(1, k + 1), repeat=g.n):
            if all(abs(labels[u] - labels[v]) >= 2 * d for u, v in g.edges) and all(
                abs(labels[u] - labels[v]) >= d for u, v in pairs2
            ):
                return 2 * d
    return 0


def lambda_by_enumeration(g: Graph, d: int = 1) -> int:
    """Smallest span m over all (m+1)**n integer labelings; tiny instances."""
    pairs2 = set()
    for mid in range(g.n):
        nbrs = g.neighbors(mid)
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                u, v = nbrs[i], nbrs[j]
                if not g.has_edge(u, v):
                    pairs2.add((u, v))
    span = 0
    while True:
        for labels in product(range(span + 1), repeat=g.n):
            if all(abs(labels[u] - labels[v]) >= 2 * d for u, v in g.edges) and all(
                abs(labels[u] - labels[v]) >= d for u, v in pairs2
            ):
                return span
        span += 1


def integer_partitions(n: int, smallest: int = 1):
    """All multisets of positive integers summing to n, nondecreasing."""
    if n == 0:
        yield ()
        return
    for first in range(smallest, n + 1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest
