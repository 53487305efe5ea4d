"""No-hole anti-n-labelings: bijections onto ``1..n`` maximizing edge gaps.

This is the antibandwidth-style quantity: over all bijective labelings of an
n-vertex graph, maximize the smallest ``|label(u) - label(v)|`` across edges.
The module provides the general upper bound, constructive labelers for
paths, cycles, trees, grids and hypercubes that certify the known lower
bounds, a labeler driven by Hamiltonian paths of the complement, and an
exact branch-and-bound oracle for small instances.

All constructors are pure, deterministic, and return labelings whose scores
can be re-checked with :func:`antilabel.antik.evaluate_labeling`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .antik import Labeling, evaluate_labeling
from .budget import DEFAULT_NODE_BUDGET, BudgetExceededError, NodeBudget
from .coloring import chromatic_number, hamiltonian_path
from .graphs import Graph, bipartition, complement

_MEMO_CAP = 1 << 21


@dataclass(frozen=True)
class Bound:
    """A bound value together with the construction or formula behind it."""

    value: int
    source: str


@dataclass(frozen=True)
class BoundSet:
    """Lower/upper bracket on a labeling number, with provenance."""

    lower: Bound
    upper: Bound
    exact: int | None = None

    def __post_init__(self):
        if self.lower.value > self.upper.value:
            raise ValueError("lower bound exceeds upper bound")
        if self.exact is not None and not (
            self.lower.value <= self.exact <= self.upper.value
        ):
            raise ValueError("exact value outside the bracket")


def nohole_upper_bound_terms(
    g: Graph, *, budget: int | NodeBudget = DEFAULT_NODE_BUDGET
) -> tuple[Bound, Bound, Bound]:
    """The three generic upper-bound terms for a connected graph."""
    if g.n < 2:
        raise ValueError("upper bound needs n >= 2")
    if not g.is_connected():
        raise ValueError("upper bound requires a connected graph")
    n = g.n
    chi, _ = chromatic_number(g, budget=budget)
    return (
        Bound(n - g.max_degree, "n - max_degree"),
        Bound((n - 1) // (chi - 1), "floor((n-1)/(chi-1))"),
        Bound((n - g.min_degree + 1) // 2, "floor((n-delta+1)/2)"),
    )


def nohole_upper_bound(
    g: Graph, *, budget: int | NodeBudget = DEFAULT_NODE_BUDGET
) -> int:
    """Smallest of the three generic upper-bound terms."""
    return min(term.value for term in nohole_upper_bound_terms(g, budget=budget))


# ---------------------------------------------------------------------------
# Constructive labelers.
# ---------------------------------------------------------------------------


def path_labeling(n: int) -> Labeling:
    """Optimal no-hole labeling of the path; achieves gap ``floor(n/2)``.

    Positions are interleaved: odd positions count down through the low half
    of the range while even positions count down through the high half.
    """
    if n < 1:
        raise ValueError("path needs n >= 1")
    labels = [0] * n
    for i in range(1, n + 1):
        if n % 2 == 0:
            labels[i - 1] = n // 2 - (i - 1) // 2 if i % 2 == 1 else n + 1 - i // 2
        else:
            labels[i - 1] = (n + 1) // 2 - (i - 1) // 2 if i % 2 == 1 else n + 1 - i // 2
    return Labeling(k=n, labels=tuple(labels), no_hole=True)


def cycle_labeling(n: int) -> Labeling:
    """Optimal no-hole labeling of the cycle; achieves gap ``floor((n-1)/2)``."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    labels = [0] * n
    if n % 2 == 1:
        for i in range(1, n + 1):
            labels[i - 1] = (n + 1) // 2 - (i - 1) // 2 if i % 2 == 1 else n + 1 - i // 2
    else:
        for i in range(1, n + 1):
            if i == 1:
                labels[i - 1] = 1
            elif i == 3:
                labels[i - 1] = n
            elif i % 2 == 1:
                labels[i - 1] = (i - 1) // 2
            else:
                labels[i - 1] = n // 2 - 1 + i // 2
    return Labeling(k=n, labels=tuple(labels), no_hole=True)


def _farthest(g: Graph, alive: set[int], root: int) -> int:
    dist = {root: 0}
    queue = deque([root])
    best, best_dist = root, 0
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w in alive and w not in dist:
                dist[w] = dist[u] + 1
                if dist[w] > best_dist or (dist[w] == best_dist and w < best):
                    best, best_dist = w, dist[w]
                queue.append(w)
    return best


def _penultimate(g: Graph, alive: set[int]) -> int:
    """Neighbor of the lowest-id endpoint of a longest path in the subtree.

    All of its neighbors except at most one are leaves, which makes it the
    removal pivot of the even-sides tree case.
    """
    a = _farthest(g, alive, min(alive))
    b = _farthest(g, alive, a)
    endpoint = min(a, b)
    return next(w for w in g.neighbors(endpoint) if w in alive)


def tree_labeling(t: Graph) -> Labeling:
    """No-hole tree labeling with gap at least ``min(side sizes)``.

    Maintains the side invariant throughout: the smaller bipartition side
    ends up with labels ``1..q`` and the other side with ``q+1..n``.  The
    tree is peeled down to a base case and the labels replayed back up:

    * unequal sides: remove the lowest-id leaf of the larger side, label it
      ``n`` on the way back;
    * equal sides: remove a penultimate vertex ``u`` together with its leaf
      neighbors, then shift the sublabeling's upper range, give the leaves
      the freed middle block, and label ``u`` with ``n``.  When ``u`` sits
      in the low side, the peel runs with the roles swapped and the replay
      applies the gap-preserving complement ``label -> n + 1 - label``.
    """
    n = t.n
    if n < 1:
        raise ValueError("tree needs n >= 1")
    if t.m != n - 1 or not t.is_connected():
        raise ValueError("input is not a tree")
    if n == 1:
        return Labeling(k=1, labels=(1,), no_hole=True)
    sides = bipartition(t)
    assert sides is not None  # trees have no odd cycles
    x1, x2 = set(sides.x1), set(sides.x2)
    if len(x1) < len(x2) or (len(x1) == len(x2) and 0 in x1):
        low, high = x1, x2
    else:
        low, high = x2, x1

    alive = set(range(n))
    deg = {v: t.degree(v) for v in range(n)}
    ops: list[tuple] = []
    while len(alive) > 2:
        assert len(low) <= len(high)  # peeling preserves the size order
        if len(low) < len(high):
            leaf = min(w for w in high if deg[w] == 1)
            alive.remove(leaf)
            high.remove(leaf)
            for w in t.neighbors(leaf):
                if w in alive:
                    deg[w] -= 1
            ops.append(("leaf", leaf))
        else:
            u = _penultimate(t, alive)
            flip = u in low
            if flip:
                low, high = high, low
            leaf_nbrs = tuple(
                sorted(w for w in t.neighbors(u) if w in alive and deg[w] == 1)
            )
            n_cur = len(alive)
            for w in leaf_nbrs:
                alive.remove(w)
                low.remove(w)
            alive.remove(u)
            high.remove(u)
            for w in t.neighbors(u):
                if w in alive:
                    deg[w] -= 1
            ops.append(("pivot", u, leaf_nbrs, n_cur, flip))

    if len(alive) == 1:
        labels = {next(iter(alive)): 1}
    else:
        low_v = next(iter(alive & low))
        high_v = next(iter(alive & high))
        labels = {low_v: 1, high_v: 2}

    for op in reversed(ops):
        if op[0] == "leaf":
            labels[op[1]] = len(labels) + 1
        else:
            _, u, leaf_nbrs, n_cur, flip = op
            shift = len(leaf_nbrs)
            threshold = n_cur // 2 - shift
            for v in labels:
                if labels[v] > threshold:
                    labels[v] += shift
            for offset, w in enumerate(leaf_nbrs, start=1):
                labels[w] = threshold + offset
            labels[u] = n_cur
            if flip:
                labels = {v: n_cur + 1 - lab for v, lab in labels.items()}
    return Labeling(k=n, labels=tuple(labels[v] for v in range(n)), no_hole=True)


def grid_labeling(m: int, n: int) -> Labeling:
    """Chessboard labeling of the grid; gap at least ``floor((mn - min)/2)``.

    White cells take the low half of the range and black cells the high
    half, both filled in scan order along the shorter dimension (columns of
    height ``min(m, n)`` scanned left to right).  Scanning along the longer
    dimension instead can fall below the bound, so the orientation is fixed
    here rather than left to the caller.
    """
    if m < 1 or n < 1:
        raise ValueError("grid needs m, n >= 1")
    if m <= n:
        scan = [(r, c) for c in range(n) for r in range(m)]
    else:
        scan = [(r, c) for r in range(m) for c in range(n)]
    whites = [(r, c) for r, c in scan if (r + c) % 2 == 0]
    blacks = [(r, c) for r, c in scan if (r + c) % 2 == 1]
    labels = [0] * (m * n)
    for i, (r, c) in enumerate(whites, start=1):
        labels[r * n + c] = i
    for j, (r, c) in enumerate(blacks, start=len(whites) + 1):
        labels[r * n + c] = j
    return Labeling(k=m * n, labels=tuple(labels), no_hole=True)


def hypercube_labeling(d: int) -> Labeling:
    """Recursive labeling of the d-cube; gap at least ``2**(d-2)``.

    Invariant at every level: each edge joins a label at most half the range
    to one above it.  The 4-cycle base uses the cross labeling (1, 3, 2, 4)
    around the cycle, which is the smallest labeling with that property; the
    doubling step shifts the upper half of one copy and the lower half of
    the other into fresh quarters of the range.
    """
    if d < 2:
        raise ValueError("hypercube labeling needs d >= 2")
    labels = [1, 3, 4, 2]  # cross labeling of the 4-cycle 0,1,3,2
    for level in range(2, d):
        half = 1 << (level - 1)
        size = 1 << level
        grown = [0] * (size * 2)
        for v in range(size):
            lab = labels[v]
            if lab <= half:
                grown[v] = lab
                grown[v + size] = lab + size + half
            else:
                grown[v] = lab + half
                grown[v + size] = lab
        labels = grown
    return Labeling(k=1 << d, labels=tuple(labels), no_hole=True)


def complement_hamiltonian_labeling(
    g: Graph, *, budget: int | NodeBudget = DEFAULT_NODE_BUDGET
) -> Labeling | None:
    """Label along a Hamiltonian path of the complement, if one exists.

    Consecutive labels then sit on complement edges, so every edge of ``g``
    has gap at least 2.  ``None`` means no such path exists, in which case
    any edge-bearing ``g`` has no-hole value exactly 1.
    """
    found = hamiltonian_path(complement(g), budget=budget)
    if found is None:
        return None
    labels = [0] * g.n
    for position, v in enumerate(found, start=1):
        labels[v] = position
    return Labeling(k=g.n, labels=tuple(labels), no_hole=True)


# ---------------------------------------------------------------------------
# Exact search.
# ---------------------------------------------------------------------------


def _bijection_with_min_gap(g: Graph, gap: int, counter: NodeBudget) -> Labeling | None:
    """Bijective labeling with every edge gap >= ``gap``, or ``None``.

    Assigns label values 1, 2, ... in order, choosing the receiving vertex
    by ascending id.  A vertex is barred while any neighbor holds one of the
    previous ``gap - 1`` labels, and skipped when its unassigned neighbors
    no longer fit above the current label window (remaining-degree forward
    check).  Failed (assigned-set, recent-window) states are memoized.
    """
    n = g.n
    if gap <= 1:
        return Labeling(k=n, labels=tuple(range(1, n + 1)), no_hole=True)
    adj = g.adjacency_masks
    full = (1 << n) - 1
    window = gap - 1
    memo: set[tuple[int, tuple[int, ...]]] = set()
    order: list[int] = []

    def search(assigned: int, recent: tuple[int, ...]) -> bool:
        counter.spend()
        if assigned == full:
            return True
        key = (assigned, recent)
        if key in memo:
            return False
        blocked = 0
        for u in recent:
            blocked |= adj[u]
        cands = full & ~assigned & ~blocked
        next_label = len(order) + 1
        slots_above = max(n - next_label - gap + 1, 0)
        while cands:
            low = cands & -cands
            v = low.bit_length() - 1
            cands ^= low
            taken = assigned | low
            if (adj[v] & ~taken & full).bit_count() > slots_above:
                continue
            order.append(v)
            if search(taken, (recent + (v,))[-window:]):
                return True
            order.pop()
        if len(memo) < _MEMO_CAP:
            memo.add(key)
        return False

    if search(0, ()):
        labels = [0] * n
        for position, v in enumerate(order, start=1):
            labels[v] = position
        return Labeling(k=n, labels=tuple(labels), no_hole=True)
    return None


def exact_nohole_number(
    g: Graph,
    *,
    budget: int | NodeBudget = DEFAULT_NODE_BUDGET,
    lower_hint: int | None = None,
    hint_witness: Labeling | None = None,
) -> tuple[int, Labeling]:
    """Exact no-hole value with an optimal witness labeling.

    Binary search on the target gap between 1 (any bijection) and the
    generic upper bound, deciding each feasibility question with the
    deterministic backtracker above.  The witness is the first labeling the
    sequential search finds for the optimal gap.  A caller holding a
    constructive labeling may pass it as ``lower_hint``/``hint_witness``
    (verified here) to skip the feasible half of the search.

    Disconnected inputs are allowed; the upper bound then drops the
    min-degree term, whose derivation needs connectivity.  On budget
    exhaustion the raised error carries the verified bounds and the best
    witness so far.
    """
    if g.m == 0:
        raise ValueError("no-hole value needs at least one edge")
    counter = NodeBudget.coerce(budget)
    n = g.n
    if n >= 2 and g.is_connected():
        upper = nohole_upper_bound(g, budget=counter)
    else:
        chi, _ = chromatic_number(g, budget=counter)
        upper = min(n - g.max_degree, (n - 1) // (chi - 1))

    lo = 1
    witness = Labeling(k=n, labels=tuple(range(1, n + 1)), no_hole=True)
    if lower_hint is not None:
        if hint_witness is None:
            raise ValueError("lower_hint requires hint_witness")
        report = evaluate_labeling(g, hint_witness)
        if not (
            report.no_hole_satisfied
            and report.min_gap is not None
            and report.min_gap >= lower_hint
        ):
            raise ValueError("hint witness does not certify the hinted bound")
        if lower_hint > upper:
            raise ValueError("hint exceeds the proven upper bound")
        if lower_hint > lo:
            lo, witness = lower_hint, hint_witness

    hi = upper
    try:
        while lo < hi:
            mid = (lo + hi + 1) // 2
            found = _bijection_with_min_gap(g, mid, counter)
            if found is None:
                hi = mid - 1
            else:
                lo, witness = mid, found
    except BudgetExceededError as err:
        raise BudgetExceededError(
            str(err), spent=counter.spent, lower=lo, upper=hi, witness=witness
        ) from None
    return lo, witness
