"""Exact chromatic numbers, greedy colorings, and Hamiltonian-path search.

These are the two exact subroutines the labeling formulas lean on.  Both
solvers are deterministic (ties always break toward the lowest vertex id)
and accept a node-expansion budget instead of running unbounded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import DEFAULT_NODE_BUDGET, NodeBudget
from .graphs import Graph


@dataclass(frozen=True)
class Coloring:
    """A proper vertex coloring: ``colors[v]`` is the class index of ``v``."""

    colors: tuple[int, ...]

    @property
    def num_colors(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    def classes(self) -> tuple[frozenset[int], ...]:
        """Color classes ``V_0..V_{c-1}``; each is an independent set."""
        buckets: list[set[int]] = [set() for _ in range(self.num_colors)]
        for v, c in enumerate(self.colors):
            buckets[c].add(v)
        return tuple(frozenset(b) for b in buckets)


def greedy_coloring(g: Graph, order: list[int] | tuple[int, ...]) -> Coloring:
    """First-fit coloring along ``order`` (a permutation of the vertices).

    Uses at most ``max_degree + 1`` colors.
    """
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    colors = [-1] * g.n
    for v in order:
        taken = {colors[w] for w in g.neighbors(v) if colors[w] != -1}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return Coloring(tuple(colors))


def _decreasing_degree_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _greedy_clique(g: Graph, order: list[int]) -> list[int]:
    clique: list[int] = []
    for v in order:
        if all(g.has_edge(v, u) for u in clique):
            clique.append(v)
    return clique


def _normalize_colors(colors: list[int]) -> tuple[int, ...]:
    # Relabel classes in order of first appearance over vertex ids.
    remap: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return tuple(out)


def chromatic_number(
    g: Graph, *, budget: int | NodeBudget = DEFAULT_NODE_BUDGET
) -> tuple[int, Coloring]:
    """Exact chromatic number with a proper coloring witness.

    Branch and bound over the vertices in decreasing-degree order, seeded
    with a greedy upper bound and pruned by a greedily grown clique.  The
    search is exhaustive, so the returned count is certified optimal.  The
    witness is normalized so class indices appear in first-seen order over
    vertex ids.
    """
    if g.n < 1:
        raise ValueError("chromatic number needs at least one vertex")
    counter = NodeBudget.coerce(budget)
    if g.m == 0:
        return 1, Coloring(tuple([0] * g.n))

    order = _decreasing_degree_order(g)
    clique_lb = len(_greedy_clique(g, order))
    seed = greedy_coloring(g, order)
    best = seed.num_colors
    best_vec = list(seed.colors)
    if clique_lb == best:
        return best, Coloring(_normalize_colors(best_vec))

    adj = g.adjacency_masks
    colors = [-1] * g.n

    def search(i: int, used: int) -> None:
        nonlocal best, best_vec
        counter.spend()
        if best == clique_lb:
            return
        if i == g.n:
            best = used
            best_vec = colors.copy()
            return
        v = order[i]
        forbidden = 0
        nbrs = adj[v]
        while nbrs:
            low = nbrs & -nbrs
            w = low.bit_length() - 1
            nbrs ^= low
            if colors[w] != -1:
                forbidden |= 1 << colors[w]
        limit = min(used + 1, best - 1)
        for c in range(limit):
            if forbidden >> c & 1:
                continue
            colors[v] = c
            search(i + 1, max(used, c + 1))
            colors[v] = -1
            if best == clique_lb:
                return

    search(0, 0)
    return best, Coloring(_normalize_colors(best_vec))


def _reachable(start_bit: int, allowed: int, adj: tuple[int, ...]) -> int:
    reach = start_bit
    frontier = start_bit
    while frontier:
        grown = 0
        while frontier:
            low = frontier & -frontier
            v = low.bit_length() - 1
            frontier ^= low
            grown |= adj[v] & allowed & ~reach
        reach |= grown
        frontier = grown
    return reach


def hamiltonian_path(
    g: Graph, *, budget: int | NodeBudget = DEFAULT_NODE_BUDGET
) -> list[int] | None:
    """First Hamiltonian path in deterministic order, or ``None``.

    Backtracking over start vertices and neighbors in ascending id, pruning
    states whose remaining graph is disconnected or keeps more than one
    non-endpoint vertex of remaining degree one.
    """
    if g.n < 1:
        raise ValueError("hamiltonian path needs at least one vertex")
    if g.n == 1:
        return [0]
    counter = NodeBudget.coerce(budget)
    adj = g.adjacency_masks
    full = (1 << g.n) - 1
    path: list[int] = []

    def extend(current: int, visited: int) -> bool:
        counter.spend()
        remaining = full & ~visited
        if not remaining:
            return True
        allowed = remaining | (1 << current)
        if _reachable(1 << current, allowed, adj) != allowed:
            return False
        ones = 0
        scan = remaining
        while scan:
            low = scan & -scan
            v = low.bit_length() - 1
            scan ^= low
            d = (adj[v] & allowed).bit_count()
            if d == 0:
                return False
            if d == 1:
                ones += 1
                if ones > 1:
                    return False
        cands = adj[current] & remaining
        while cands:
            low = cands & -cands
            v = low.bit_length() - 1
            cands ^= low
            path.append(v)
            if extend(v, visited | low):
                return True
            path.pop()
        return False

    for start in range(g.n):
        path = [start]
        if extend(start, 1 << start):
            return path
    return None
