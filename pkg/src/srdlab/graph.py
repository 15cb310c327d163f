"""Simple undirected graphs: text format, generators, and structure checks.

The text format is a DIMACS-like edge list.  A header line ``p <n> <m>``
gives the vertex and edge counts, followed by exactly ``m`` lines
``e <u> <v>`` with 1-indexed endpoints.  Lines starting with ``#`` are
comments.  Vertices are 0-indexed everywhere inside the library; only the
text format is 1-indexed.  The writer is canonical: edges are emitted
sorted ascending, so parse/write is a bit-exact round trip.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Edge-list text violates the format or the simple-graph rules."""


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Edges are stored normalized (smaller endpoint first).  No self-loops,
    no duplicates, every endpoint in range.
    """

    n: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                raise ValueError(f"edge ({u},{v}) not normalized")
            if not (0 <= u and v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(_norm(u, v) for u, v in pairs))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> frozenset[int]:
        return self.adj[u]

    def closed_neighbors(self, u: int) -> frozenset[int]:
        return self.adj[u] | {u}

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def connected_components(self) -> list[list[int]]:
        """Components as sorted vertex lists, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for root in range(self.n):
            if seen[root]:
                continue
            stack, comp = [root], []
            seen[root] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled to 0..k-1 in sorted vertex order."""
        verts = sorted(set(vertices))
        index = {v: i for i, v in enumerate(verts)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph.from_edges(len(verts), edges)


def parse_graph(text: str | bytes) -> Graph:
    """Parse the edge-list format.  Raises GraphFormatError on bad input."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise GraphFormatError("malformed header: empty input")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "p":
        raise GraphFormatError(f"malformed header: {lines[0]!r}")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError:
        raise GraphFormatError(f"malformed header: {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise GraphFormatError(f"malformed header: negative count in {lines[0]!r}")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"malformed header: expected {m} edge lines, found {len(body)}")
    edges: set[Edge] = set()
    for ln in body:
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "e":
            raise GraphFormatError(f"malformed edge line: {ln!r}")
        try:
            a, b = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphFormatError(f"malformed edge line: {ln!r}") from None
        if not (1 <= a <= n and 1 <= b <= n):
            raise GraphFormatError(f"endpoint out of range in {ln!r} (n={n})")
        if a == b:
            raise GraphFormatError(f"self-loop in {ln!r}")
        e = _norm(a - 1, b - 1)
        if e in edges:
            raise GraphFormatError(f"duplicate edge in {ln!r}")
        edges.add(e)
    return Graph(n, frozenset(edges))


def write_graph(g: Graph) -> str:
    """Canonical serialization; parse_graph(write_graph(g)) == g."""
    out = [f"p {g.n} {g.m}"]
    out.extend(f"e {u + 1} {v + 1}" for u, v in sorted(g.edges))
    return "\n".join(out) + "\n"


GENERATOR_KINDS = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "star",
    "wheel",
    "random_gnp",
    "random_cubic",
    "random_split",
)


def generate(kind: str, params: list[int], seed: Optional[int] = None) -> Graph:
    """Build a graph from a named family.

    params by kind: path/cycle/complete/star/wheel take [n];
    complete_bipartite takes [a, b]; random_gnp takes [n, percent];
    random_cubic takes [n] (even, >= 4); random_split takes
    [clique_size, independent_size].  Random kinds are deterministic
    given seed (default 0).
    """
    rng = random.Random(0 if seed is None else seed)
    if kind == "path":
        (n,) = _params(params, 1, kind)
        _require(n >= 0, "path needs n >= 0")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        (n,) = _params(params, 1, kind)
        _require(n >= 3, "cycle needs n >= 3")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        (n,) = _params(params, 1, kind)
        _require(n >= 0, "complete needs n >= 0")
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "complete_bipartite":
        a, b = _params(params, 2, kind)
        _require(a >= 0 and b >= 0, "complete_bipartite needs a, b >= 0")
        return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if kind == "star":
        (n,) = _params(params, 1, kind)
        _require(n >= 1, "star needs n >= 1")
        return Graph.from_edges(n, [(0, i) for i in range(1, n)])
    if kind == "wheel":
        (n,) = _params(params, 1, kind)
        _require(n >= 4, "wheel needs n >= 4")
        rim = [(i, i % (n - 1) + 1) for i in range(1, n)]
        return Graph.from_edges(n, rim + [(0, i) for i in range(1, n)])
    if kind == "random_gnp":
        n, pct = _params(params, 2, kind)
        _require(n >= 0 and 0 <= pct <= 100, "random_gnp needs n >= 0 and percent in 0..100")
        p = pct / 100.0
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < p
        ]
        return Graph.from_edges(n, edges)
    if kind == "random_cubic":
        (n,) = _params(params, 1, kind)
        _require(n >= 4 and n % 2 == 0, "cubic graphs need even n >= 4")
        return _random_cubic(n, rng)
    if kind == "random_split":
        g, _ = random_split_with_witness_params(params, rng)
        return g
    raise ValueError(f"unknown generator kind {kind!r}")


def random_split_with_witness(
    clique_size: int, independent_size: int, seed: Optional[int] = None
) -> tuple[Graph, tuple[frozenset[int], frozenset[int]]]:
    """Random split graph plus its (clique, independent) witness."""
    rng = random.Random(0 if seed is None else seed)
    return random_split_with_witness_params([clique_size, independent_size], rng)


def random_split_with_witness_params(
    params: list[int], rng: random.Random
) -> tuple[Graph, tuple[frozenset[int], frozenset[int]]]:
    a, b = _params(params, 2, "random_split")
    _require(a >= 0 and b >= 0, "random_split needs clique_size, independent_size >= 0")
    edges = [(i, j) for i in range(a) for j in range(i + 1, a)]
    for i in range(a):
        for j in range(b):
            if rng.random() < 0.5:
                edges.append((i, a + j))
    g = Graph.from_edges(a + b, edges)
    return g, (frozenset(range(a)), frozenset(range(a, a + b)))


def _random_cubic(n: int, rng: random.Random) -> Graph:
    # Superposition of three random perfect matchings; redraw on any
    # coinciding pair so the union stays simple.
    while True:
        edges: set[Edge] = set()
        ok = True
        for _ in range(3):
            perm = rng.sample(range(n), n)
            for i in range(0, n, 2):
                e = _norm(perm[i], perm[i + 1])
                if e in edges:
                    ok = False
                    break
                edges.add(e)
            if not ok:
                break
        if ok:
            return Graph(n, frozenset(edges))


def _params(params: list[int], count: int, kind: str) -> list[int]:
    if len(params) != count:
        raise ValueError(f"{kind} takes {count} parameter(s), got {len(params)}")
    return list(params)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def is_split(
    g: Graph, witness: tuple[Iterable[int], Iterable[int]]
) -> bool:
    """True iff the witness (K, I) splits g into a clique and an independent set."""
    clique, indep = (set(witness[0]), set(witness[1]))
    if clique & indep or clique | indep != set(range(g.n)):
        raise ValueError("witness is not a partition of the vertex set")
    cl = sorted(clique)
    for i, u in enumerate(cl):
        for v in cl[i + 1 :]:
            if not g.has_edge(u, v):
                return False
    ind = sorted(indep)
    for i, u in enumerate(ind):
        for v in ind[i + 1 :]:
            if g.has_edge(u, v):
                return False
    return True


def is_bipartite(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """A two-coloring of g as (side0, side1), or None if none exists."""
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    return (
        frozenset(v for v in range(g.n) if color[v] == 0),
        frozenset(v for v in range(g.n) if color[v] == 1),
    )


def is_regular(g: Graph, r: int) -> bool:
    return all(g.degree(u) == r for u in range(g.n))
