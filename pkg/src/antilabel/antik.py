"""Anti-k-labelings: maximize the smallest label gap across any edge.

An anti-k-labeling assigns each vertex a label in ``1..k``; its score is the
minimum of ``|label(u) - label(v)|`` over the edges.  The best achievable
score equals ``floor((k-1)/(chi-1))`` where ``chi`` is the chromatic number,
and a spread-out proper coloring attains it.  A brute-force enumerator is
kept alongside as an independent oracle.

Edgeless graphs put no constraint on any labeling; operations here return
``None`` ("unconstrained") for them rather than inventing a sentinel number.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .budget import DEFAULT_NODE_BUDGET, NodeBudget
from .coloring import chromatic_number
from .graphs import Graph, ParseError


class InvalidLabelingError(ValueError):
    """A labeling violates its own declared contract (range or coverage)."""


@dataclass(frozen=True)
class Labeling:
    """Vertex labels ``labels[v]`` drawn from ``1..k``.

    ``no_hole`` declares that every value in ``1..k`` is used; the claim is
    checked by :func:`evaluate_labeling`, not by the constructor, so that
    untrusted labelings can be represented and then judged.
    """

    k: int
    labels: tuple[int, ...]
    no_hole: bool = False

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("label ceiling k must be >= 1")
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def n(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class LabelingReport:
    """Outcome of evaluating a labeling against a graph.

    ``min_gap`` is ``None`` when the graph has no edges (no constraint);
    otherwise ``witness_edge`` is the lexicographically smallest edge
    attaining it.
    """

    min_gap: int | None
    witness_edge: tuple[int, int] | None
    valid: bool
    no_hole_satisfied: bool


def evaluate_labeling(g: Graph, labeling: Labeling, *, strict: bool = True) -> LabelingReport:
    """Score a labeling: smallest edge gap, witness edge, validity flags.

    With ``strict`` (the default) an out-of-range label, or a no-hole claim
    with a missing value, raises :class:`InvalidLabelingError`; with
    ``strict=False`` the problems are reported through the flags instead.
    """
    if labeling.n != g.n:
        raise ValueError(f"labeling covers {labeling.n} vertices, graph has {g.n}")
    valid = all(1 <= lab <= labeling.k for lab in labeling.labels)
    no_hole_satisfied = set(labeling.labels) >= set(range(1, labeling.k + 1))
    if strict:
        if not valid:
            bad = next(v for v, lab in enumerate(labeling.labels) if not 1 <= lab <= labeling.k)
            raise InvalidLabelingError(
                f"label {labeling.labels[bad]} at vertex {bad} outside [1, {labeling.k}]"
            )
        if labeling.no_hole and not no_hole_satisfied:
            missing = min(set(range(1, labeling.k + 1)) - set(labeling.labels))
            raise InvalidLabelingError(f"no-hole labeling never uses value {missing}")
    min_gap: int | None = None
    witness: tuple[int, int] | None = None
    for u, v in g.edges:
        gap = abs(labeling.labels[u] - labeling.labels[v])
        if min_gap is None or gap < min_gap:
            min_gap = gap
            witness = (u, v)
    return LabelingReport(min_gap, witness, valid, no_hole_satisfied)


def anti_k_number(
    g: Graph, k: int, *, budget: int | NodeBudget = DEFAULT_NODE_BUDGET
) -> int | None:
    """Best achievable min edge gap with labels ``1..k``.

    Equals ``floor((k-1)/(chi-1))``; ``None`` for edgeless graphs.  Only
    edge-bearing components constrain the value, so components without edges
    are ignored.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.m == 0:
        return None
    chi, _ = chromatic_number(g, budget=budget)
    return (k - 1) // (chi - 1)


def construct_anti_k_labeling(
    g: Graph, k: int, *, budget: int | NodeBudget = DEFAULT_NODE_BUDGET
) -> Labeling:
    """Optimal anti-k-labeling: spread the color classes evenly over ``1..k``.

    Class ``i`` (0-based, in the order produced by the chromatic solver)
    gets label ``1 + i*floor((k-1)/(chi-1))``, so the evaluated gap equals
    :func:`anti_k_number` exactly.  Requires ``k >= chi`` so that the gap is
    positive.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.m == 0:
        raise ValueError("construction needs at least one edge")
    chi, witness = chromatic_number(g, budget=budget)
    if k < chi:
        raise ValueError(
            f"k={k} is below the chromatic number {chi}; no positive gap exists"
        )
    step = (k - 1) // (chi - 1)
    labels = tuple(1 + c * step for c in witness.colors)
    return Labeling(k=k, labels=labels, no_hole=False)


def brute_force_anti_k_number(
    g: Graph, k: int, *, budget: int | NodeBudget = DEFAULT_NODE_BUDGET
) -> int | None:
    """Exhaustive oracle: enumerate all ``k**n`` labelings, maximize min gap.

    Independent of the chromatic-number route; intended for small instances
    (roughly ``n <= 8``, ``k <= 6``).  ``None`` for edgeless graphs.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.m == 0:
        return None
    counter = NodeBudget.coerce(budget)
    edges = g.edges
    n = g.n
    best = -1
    for assignment in _product_counted(n, k, counter):
        gap = k  # above any achievable gap
        for u, v in edges:
            d = assignment[u] - assignment[v]
            if d < 0:
                d = -d
            if d <= best:
                gap = -1
                break
            if d < gap:
                gap = d
        if gap >= 0:
            best = gap
    return best


def _product_counted(n: int, k: int, counter: NodeBudget) -> Iterator[list[int]]:
    values = [1] * n
    while True:
        counter.spend()
        yield values
        i = n - 1
        while i >= 0 and values[i] == k:
            values[i] = 1
            i -= 1
        if i < 0:
            return
        values[i] += 1


# ---------------------------------------------------------------------------
# Labeling file format: header ``k <k>`` then one ``<vertex> <label>`` line
# per vertex.  ``#`` starts a comment.
# ---------------------------------------------------------------------------


def parse_labeling(text: str) -> Labeling:
    """Parse a labeling file; vertices must be exactly ``0..n-1``."""
    k: int | None = None
    assignments: dict[int, int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if tokens[0] == "k":
            if k is not None:
                raise ParseError(line_no, "duplicate 'k' header")
            if len(tokens) != 2:
                raise ParseError(line_no, "header must be 'k <int>'")
            try:
                k = int(tokens[1])
            except ValueError:
                raise ParseError(line_no, "k must be an integer") from None
            if k < 1:
                raise ParseError(line_no, "k must be >= 1")
        else:
            if len(tokens) != 2:
                raise ParseError(line_no, "expected '<vertex> <label>'")
            try:
                v, lab = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ParseError(line_no, "vertex and label must be integers") from None
            if v in assignments:
                raise ParseError(line_no, f"vertex {v} labeled twice")
            assignments[v] = lab
    if k is None:
        raise ParseError(0, "missing 'k <k>' header")
    if set(assignments) != set(range(len(assignments))):
        raise ParseError(0, "vertex ids must be exactly 0..n-1")
    labels = tuple(assignments[v] for v in range(len(assignments)))
    return Labeling(k=k, labels=labels)


def serialize_labeling(labeling: Labeling) -> str:
    lines = [f"k {labeling.k}"]
    lines.extend(f"{v} {lab}" for v, lab in enumerate(labeling.labels))
    return "\n".join(lines) + "\n"
