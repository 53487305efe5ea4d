"""Immutable simple undirected graphs, family generators, and edge-list I/O.

Vertices are the integers ``0..n-1``; vertex ids carry no meaning beyond
identity.  Labels elsewhere in the package are 1-based.  Graph values are
immutable after construction and safe to share across threads; every
operation in this module is a pure function.

Text format (DIMACS-flavoured edge list): an optional header ``p <n> <m>``,
one ``e <u> <v>`` line per edge, ``#`` starts a comment.  When the header is
absent, ``n`` is one more than the largest vertex index.  Serialization
always emits the header and the edges sorted lexicographically.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from heapq import heapify, heappop, heappush
from typing import Iterable, Iterator


class ParseError(ValueError):
    """Malformed graph or labeling text; remembers the offending line."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    Edges are stored as ordered pairs ``(u, v)`` with ``u < v``; self-loops
    are rejected and duplicates collapse.  Adjacency lists are derived once
    and kept sorted so traversals are deterministic.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            normalized.add((u, v) if u < v else (v, u))
        adjacency: list[list[int]] = [[] for _ in range(n)]
        for u, v in normalized:
            adjacency[u].append(v)
            adjacency[v].append(u)
        self._n = n
        self._edges = tuple(sorted(normalized))
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        self._adj_sets = tuple(frozenset(nbrs) for nbrs in adjacency)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbor sets as bitmasks, for the backtracking solvers."""
        masks = [0] * self._n
        for u, v in self._edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def is_connected(self) -> bool:
        if self._n <= 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self._n

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph on ``vertices``, reindexed to ``0..len-1`` in sorted order."""
        kept = sorted(set(vertices))
        index = {v: i for i, v in enumerate(kept)}
        edges = [
            (index[u], index[v]) for u, v in self._edges if u in index and v in index
        ]
        return Graph(len(kept), edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


@dataclass(frozen=True)
class Bipartition:
    """A 2-coloring of the vertex set: every edge crosses ``x1``/``x2``."""

    x1: frozenset[int]
    x2: frozenset[int]

    @property
    def sizes(self) -> tuple[int, int]:
        return (len(self.x1), len(self.x2))

    def side_of(self, v: int) -> int:
        return 0 if v in self.x1 else 1


def union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of ``g2`` are shifted up by ``g1.n``."""
    offset = g1.n
    edges = list(g1.edges) + [(u + offset, v + offset) for u, v in g2.edges]
    return Graph(g1.n + g2.n, edges)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    offset = g1.n
    edges = list(g1.edges) + [(u + offset, v + offset) for u, v in g2.edges]
    edges.extend((u, v + offset) for u in range(g1.n) for v in range(g2.n))
    return Graph(g1.n + g2.n, edges)


def complement(g: Graph) -> Graph:
    """Graph with exactly the non-edges of ``g``."""
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)


def bipartition(g: Graph) -> Bipartition | None:
    """Two-color ``g`` by BFS, or return ``None`` when an odd cycle exists.

    Each component is rooted at its lowest unvisited vertex; roots go to
    ``x1``, so the result is deterministic.
    """
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    x1 = frozenset(v for v in range(g.n) if side[v] == 0)
    x2 = frozenset(v for v in range(g.n) if side[v] == 1)
    return Bipartition(x1, x2)


# ---------------------------------------------------------------------------
# Family generators.  Vertex numbering is fixed and documented per family so
# constructions elsewhere can rely on it.
# ---------------------------------------------------------------------------


def path(n: int) -> Graph:
    """Path on ``n`` vertices in traversal order: edges ``(i, i+1)``."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle on ``n >= 3`` vertices in traversal order, closed by ``(n-1, 0)``."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def grid(m: int, n: int) -> Graph:
    """``m`` rows by ``n`` columns; cell ``(r, c)`` is vertex ``r*n + c``."""
    if m < 1 or n < 1:
        raise ValueError("grid needs m, n >= 1")
    edges = []
    for r in range(m):
        for c in range(n):
            v = r * n + c
            if c + 1 < n:
                edges.append((v, v + 1))
            if r + 1 < m:
                edges.append((v, v + n))
    return Graph(m * n, edges)


def hypercube(d: int) -> Graph:
    """The ``d``-cube on ``2**d`` vertices addressed by their binary word."""
    if d < 1:
        raise ValueError("hypercube needs d >= 1")
    n = 1 << d
    edges = []
    for v in range(n):
        for b in range(d):
            u = v ^ (1 << b)
            if u > v:
                edges.append((v, u))
    return Graph(n, edges)


def complete_multipartite(*sizes: int) -> Graph:
    """Complete multipartite graph; parts occupy contiguous vertex ranges."""
    if not sizes:
        raise ValueError("at least one part required")
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be >= 1")
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    edges = []
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            edges.extend(
                (u, v)
                for u in range(offsets[i], offsets[i + 1])
                for v in range(offsets[j], offsets[j + 1])
            )
    return Graph(offsets[-1], edges)


def star(leaves: int) -> Graph:
    """Star with center 0 and ``leaves`` pendant vertices ``1..leaves``."""
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def pendant_star(small_side: int, large_side: int) -> Graph:
    """Star with pendants: the tree whose bipartition sides have these sizes.

    Start from the star with center 0 and leaves ``1..large_side``, then
    attach one new pendant vertex to each of the first ``small_side - 1``
    leaves (distinct hosts).  The side containing the center has size
    ``small_side``; the leaves form the side of size ``large_side``.
    """
    if small_side < 1 or large_side < 1:
        raise ValueError("side sizes must be >= 1")
    if small_side > large_side:
        raise ValueError("small_side must not exceed large_side")
    edges = [(0, i) for i in range(1, large_side + 1)]
    next_id = large_side + 1
    for host in range(1, small_side):
        edges.append((host, next_id))
        next_id += 1
    return Graph(next_id, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree, decoded from a seeded Prüfer sequence.

    The sequence is drawn with :class:`random.Random`, so the tree is a pure
    function of ``(n, seed)`` on a given Python version.
    """
    if n < 1:
        raise ValueError("tree needs n >= 1")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapify(leaves)
    edges = []
    for x in seq:
        leaf = heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heappush(leaves, x)
    edges.append((heappop(leaves), heappop(leaves)))
    return Graph(n, edges)


_FAMILY_BUILDERS = {
    "path": lambda p: path(*p),
    "cycle": lambda p: cycle(*p),
    "grid": lambda p: grid(*p),
    "hypercube": lambda p: hypercube(*p),
    "multipartite": lambda p: complete_multipartite(*p),
    "star": lambda p: star(*p),
    "random-tree": lambda p: random_tree(*p),
    "pendant-star": lambda p: pendant_star(*p),
}

_FAMILY_ARITY = {
    "path": (1, 1),
    "cycle": (1, 1),
    "grid": (2, 2),
    "hypercube": (1, 1),
    "multipartite": (1, None),
    "star": (1, 1),
    "random-tree": (2, 2),
    "pendant-star": (2, 2),
}


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family plus its integer parameters, e.g. ``grid:3,4``."""

    kind: str
    params: tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        kind, sep, rest = text.partition(":")
        kind = kind.strip()
        if kind not in _FAMILY_ARITY:
            raise ValueError(f"unknown family {kind!r}")
        if not sep or not rest.strip():
            raise ValueError(f"family {kind!r} needs parameters, e.g. {kind}:3")
        try:
            params = tuple(int(tok) for tok in rest.split(","))
        except ValueError:
            raise ValueError(f"non-integer parameter in {text!r}") from None
        lo, hi = _FAMILY_ARITY[kind]
        if len(params) < lo or (hi is not None and len(params) > hi):
            raise ValueError(f"family {kind!r} takes {lo}..{hi or 'many'} parameters")
        return cls(kind, params)

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(str(p) for p in self.params)}"


def generate(spec: FamilySpec) -> Graph:
    """Build the standard graph of a family; parameter errors raise ValueError."""
    builder = _FAMILY_BUILDERS.get(spec.kind)
    if builder is None:
        raise ValueError(f"unknown family {spec.kind!r}")
    return builder(spec.params)


# ---------------------------------------------------------------------------
# Edge-list text I/O.
# ---------------------------------------------------------------------------


def _significant_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield line_no, body.split()


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format; every malformation names its line."""
    declared: tuple[int, int] | None = None
    header_line = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    max_index = -1
    for line_no, tokens in _significant_lines(text):
        tag = tokens[0]
        if tag == "p":
            if declared is not None:
                raise ParseError(line_no, "duplicate header")
            if edges:
                raise ParseError(line_no, "header must precede edges")
            if len(tokens) != 3:
                raise ParseError(line_no, "header must be 'p <n> <m>'")
            try:
                n_decl, m_decl = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(line_no, "header fields must be integers") from None
            if n_decl < 0 or m_decl < 0:
                raise ParseError(line_no, "header counts must be non-negative")
            declared = (n_decl, m_decl)
            header_line = line_no
        elif tag == "e":
            if len(tokens) != 3:
                raise ParseError(line_no, "edge must be 'e <u> <v>'")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(line_no, "edge endpoints must be integers") from None
            if u == v:
                raise ParseError(line_no, f"self-loop at vertex {u}")
            if u < 0 or v < 0:
                raise ParseError(line_no, "vertex index out of range")
            if declared is not None and (u >= declared[0] or v >= declared[0]):
                raise ParseError(line_no, "vertex index out of range")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ParseError(line_no, f"duplicate edge {key}")
            seen.add(key)
            edges.append(key)
            max_index = max(max_index, u, v)
        else:
            raise ParseError(line_no, f"unrecognized line tag {tag!r}")
    if declared is not None:
        n, m_decl = declared
        if m_decl != len(edges):
            raise ParseError(
                header_line, f"header declares {m_decl} edges, found {len(edges)}"
            )
    else:
        n = max_index + 1
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    """Canonical text: header plus edges in lexicographic order."""
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
