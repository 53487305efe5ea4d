"""Separation labelings with distance-two constraints (L_d(2,1) style).

An ``L_d(2,1)``-labeling maps vertices to integers in ``[0, m]`` so that
adjacent vertices differ by at least ``2d`` and vertices at distance two by
at least ``d``; the lambda number is the smallest such span ``m``.  The
anti variant fixes the label range ``[1, k]`` and instead maximizes ``2d``.
Labels and ``d`` are restricted to integers throughout, which turns every
question here into a finite constraint search.

Graphs with no edges (hence no distance-two pairs) are unconstrained; the
maximization returns ``None`` for them, mirroring the anti-k module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .budget import DEFAULT_NODE_BUDGET, NodeBudget
from .graphs import Graph


def distance_two_pairs(g: Graph) -> tuple[tuple[int, int], ...]:
    """Non-adjacent pairs with a common neighbor, sorted."""
    pairs: set[tuple[int, int]] = set()
    for mid in range(g.n):
        nbrs = g.neighbors(mid)
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                u, v = nbrs[i], nbrs[j]
                if not g.has_edge(u, v):
                    pairs.add((u, v))
    return tuple(sorted(pairs))


def _constraints(g: Graph, d: int) -> list[list[tuple[int, int]]]:
    cons: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        cons[u].append((v, 2 * d))
        cons[v].append((u, 2 * d))
    for u, v in distance_two_pairs(g):
        cons[u].append((v, d))
        cons[v].append((u, d))
    return cons


def _constraint_order(cons: list[list[tuple[int, int]]]) -> list[int]:
    return sorted(range(len(cons)), key=lambda v: (-len(cons[v]), v))


def _feasible_span(
    g: Graph, d: int, span: int, counter: NodeBudget
) -> bool:
    """Is there an integer labeling into [0, span] meeting the (2d, d) gaps?"""
    cons = _constraints(g, d)
    order = _constraint_order(cons)
    assigned: dict[int, int] = {}

    def search(i: int) -> bool:
        counter.spend()
        if i == g.n:
            return True
        v = order[i]
        for value in range(span + 1):
            ok = True
            for other, need in cons[v]:
                got = assigned.get(other)
                if got is not None and abs(value - got) < need:
                    ok = False
                    break
            if ok:
                assigned[v] = value
                if search(i + 1):
                    return True
                del assigned[v]
        return False

    return search(0)


def lambda_number(
    g: Graph, d: int = 1, *, budget: int | NodeBudget = DEFAULT_NODE_BUDGET
) -> int:
    """Smallest span of an integer labeling with gaps ``2d``/``d``.

    Tries spans upward from the smallest conceivable one; each feasibility
    question is settled by backtracking with incremental conflict checks.
    A span of ``2d*(n-1)`` always works, so the loop terminates.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if g.n == 0 or g.m == 0:
        return 0
    counter = NodeBudget.coerce(budget)
    span = 2 * d
    while not _feasible_span(g, d, span, counter):
        span += 1
    return span


@dataclass(frozen=True)
class AntiL21Bound:
    """Certified lower bounds on the maximum even separation ``2d``.

    ``generic`` comes from the degree-based cap on the lambda number and is
    absent when ``max_degree <= 1`` (the cap degenerates); ``via_lambda``
    divides the label range by the exact lambda number and is absent only
    when that computation was skipped.
    """

    generic: int | None
    via_lambda: int | None

    @property
    def best(self) -> int:
        candidates = [b for b in (self.generic, self.via_lambda) if b is not None]
        if not candidates:
            raise ValueError("no bound available")
        return max(candidates)


def anti_l21_lower_bound(
    g: Graph,
    k: int,
    *,
    with_lambda: bool = True,
    budget: int | NodeBudget = DEFAULT_NODE_BUDGET,
) -> AntiL21Bound:
    """Lower bounds on the best ``2d`` achievable within labels ``1..k``.

    Scaling an optimal span-``lambda`` labeling by ``d`` and shifting it
    into ``1..k`` gives ``2*floor((k-1)/lambda)``; replacing the lambda
    number by its degree cap ``max_degree**2 + max_degree - 2`` gives the
    cheaper, weaker form.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    delta = g.max_degree
    if delta < 1:
        raise ValueError("lower bound needs at least one edge")
    generic: int | None = None
    if delta >= 2:
        generic = 2 * ((k - 1) // (delta * delta + delta - 2))
    via_lambda: int | None = None
    if with_lambda:
        via_lambda = 2 * ((k - 1) // lambda_number(g, budget=budget))
    return AntiL21Bound(generic=generic, via_lambda=via_lambda)


def lambda_bracket(k: int, observed_2d: int) -> tuple[Fraction, Fraction]:
    """Bracket ``((k-1)/(d+1), (k-1)/d]`` implied by an observed optimum.

    When the anti number within ``1..k`` equals ``2d`` for a positive
    integer ``d``, the lambda number must fall in this half-open interval.
    """
    if observed_2d <= 0 or observed_2d % 2 != 0:
        raise ValueError("observed value must be a positive even integer 2d")
    if k < 1:
        raise ValueError("k must be >= 1")
    d = observed_2d // 2
    return (Fraction(k - 1, d + 1), Fraction(k - 1, d))


def _anti_feasible(g: Graph, k: int, d: int, counter: NodeBudget) -> bool:
    cons = _constraints(g, d)
    order = _constraint_order(cons)
    assigned: dict[int, int] = {}

    def search(i: int) -> bool:
        counter.spend()
        if i == g.n:
            return True
        v = order[i]
        for value in range(1, k + 1):
            ok = True
            for other, need in cons[v]:
                got = assigned.get(other)
                if got is not None and abs(value - got) < need:
                    ok = False
                    break
            if ok:
                assigned[v] = value
                if search(i + 1):
                    return True
                del assigned[v]
        return False

    return search(0)


def anti_l21_number(
    g: Graph, k: int, *, budget: int | NodeBudget = DEFAULT_NODE_BUDGET
) -> int | None:
    """Largest even ``2d`` achievable with labels ``1..k``; the exact oracle.

    Searches ``d`` downward from ``floor((k-1)/2)`` (an edge cannot stretch
    further than the label range) and returns on the first feasible value.
    Returns 0 when no positive ``d`` works, and ``None`` (unconstrained)
    for edgeless graphs, which have no distance-two pairs either.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.m == 0:
        return None
    counter = NodeBudget.coerce(budget)
    for d in range((k - 1) // 2, 0, -1):
        if _anti_feasible(g, k, d, counter):
            return 2 * d
    return 0
