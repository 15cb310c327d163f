"""Hardness-reduction constructions with labelings, witnesses, and oracles.

Each ``reduce_*`` function builds a reduced graph together with the target
weight ``k_prime``, a role map naming the construction set every vertex
belongs to, and a structural witness (split partition, bipartition,
feedback vertex set, or vertex cover).  The ``forward_label_*`` functions
apply the constructive labeling that turns a source-problem solution into
a signed Roman dominating function on the reduced graph.  The ``oracle_*``
functions solve the small source problems exhaustively.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Graph, GraphFormatError, is_bipartite, is_regular, is_split
from .solvers import CapExceeded
from .srdf import Labeling

Role = tuple[str, tuple[int, ...]]
RoleMap = dict[int, Role]


@dataclass(frozen=True)
class SplitWitness:
    clique: frozenset[int]
    independent: frozenset[int]


@dataclass(frozen=True)
class BipartitionWitness:
    left: frozenset[int]
    right: frozenset[int]


@dataclass(frozen=True)
class FvsWitness:
    vertices: frozenset[int]


@dataclass(frozen=True)
class VertexCoverWitness:
    vertices: frozenset[int]


@dataclass(frozen=True)
class ReductionOutput:
    graph: Graph
    k_prime: int
    roles: RoleMap
    witness: object
    source: object


def witness_holds(g: Graph, witness: object) -> bool:
    """Validate a structural witness against the graph it describes."""
    if isinstance(witness, SplitWitness):
        return is_split(g, (witness.clique, witness.independent))
    if isinstance(witness, BipartitionWitness):
        left, right = witness.left, witness.right
        if left & right or left | right != set(range(g.n)):
            return False
        return all((u in left) != (v in left) for u, v in g.edges)
    if isinstance(witness, FvsWitness):
        rest = [v for v in range(g.n) if v not in witness.vertices]
        sub = g.induced(rest)
        return sub.m == sub.n - len(sub.connected_components())
    if isinstance(witness, VertexCoverWitness):
        cover = witness.vertices
        return all(u in cover or v in cover for u, v in g.edges)
    raise TypeError(f"unknown witness type {type(witness).__name__}")


class _Builder:
    """Incremental reduced-graph builder that records vertex roles."""

    def __init__(self) -> None:
        self.n = 0
        self.edges: list[tuple[int, int]] = []
        self.roles: RoleMap = {}

    def add(self, tag: str, *idx: int) -> int:
        v = self.n
        self.n += 1
        self.roles[v] = (tag, tuple(idx))
        return v

    def edge(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def build(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    chosen = set(s)
    return all(u in chosen or g.neighbors(u) & chosen for u in range(g.n))


# ---------------------------------------------------------------------------
# Dominating set on cubic graphs -> split graph


def reduce_ds_cubic_to_split(g: Graph, k: int) -> ReductionOutput:
    """Split-graph instance from a cubic dominating-set instance.

    Five copies A, B, C, D, X of the source vertices; padding sets E, Y, Z
    of size ceil((2n-k+4)/2); A joined to X along closed source
    neighbourhoods; e_i matched to y_i and z_i; A+B+C+D+E made a clique.
    Target weight k - 3n.
    """
    if not is_regular(g, 3):
        raise ValueError("split reduction requires a cubic source graph")
    n = g.n
    if not 1 <= k <= n:
        raise ValueError(f"budget k={k} must satisfy 1 <= k <= n={n}")
    s = (2 * n - k + 5) // 2  # ceil((2n - k + 4) / 2)
    b = _Builder()
    A = [b.add("A", i) for i in range(n)]
    B = [b.add("B", i) for i in range(n)]
    C = [b.add("C", i) for i in range(n)]
    D = [b.add("D", i) for i in range(n)]
    X = [b.add("X", i) for i in range(n)]
    E = [b.add("E", i) for i in range(s)]
    Y = [b.add("Y", i) for i in range(s)]
    Z = [b.add("Z", i) for i in range(s)]
    for j in range(n):
        for i in g.neighbors(j):
            b.edge(A[i], X[j])
    for i in range(n):
        b.edge(X[i], A[i])
        b.edge(X[i], B[i])
        b.edge(X[i], C[i])
        b.edge(X[i], D[i])
    for i in range(s):
        b.edge(E[i], Y[i])
        b.edge(E[i], Z[i])
    clique = A + B + C + D + E
    for u, v in itertools.combinations(clique, 2):
        b.edge(u, v)
    witness = SplitWitness(frozenset(clique), frozenset(X + Y + Z))
    return ReductionOutput(b.build(), k - 3 * n, b.roles, witness, (g, k))


def forward_label_split(out: ReductionOutput, s: Iterable[int]) -> Labeling:
    """Constructive labeling from a dominating set of the cubic source.

    B, C, D, X, Y, Z get -1; E gets 2; the A-copy of a source vertex gets
    2 inside S and 1 outside.  Weight is |S| - 3n.  The result is a valid
    function exactly when the clique carries weight at least 5, which
    needs |S| = k with k odd (the padding sets contribute 2n - k + 4 or
    one more, so even budgets fall short by one).
    """
    g, k = out.source
    chosen = frozenset(s)
    if not is_dominating(g, chosen):
        raise ValueError("S is not a dominating set of the source graph")
    if len(chosen) > k:
        raise ValueError(f"|S| = {len(chosen)} exceeds the budget k = {k}")
    labels = [0] * out.graph.n
    for v, (tag, idx) in out.roles.items():
        if tag == "A":
            labels[v] = 2 if idx[0] in chosen else 1
        elif tag == "E":
            labels[v] = 2
        else:  # B, C, D, X, Y, Z
            labels[v] = -1
    return tuple(labels)


# ---------------------------------------------------------------------------
# Dominating set -> per-vertex path gadgets (weight-parameter reduction)


def reduce_ds_gadget(g: Graph, k: int) -> ReductionOutput:
    """Attach d(v)+1 pendant-decorated paths of length two to every vertex.

    Path i at vertex v is x_i - y_i - z_i with x_i adjacent to v; each z_i
    carries two pendants (Q_i); y_1 carries two pendants (R_1) and every
    later y_i carries one (r_i).  Target weight stays k.
    """
    n = g.n
    if not 1 <= k <= n:
        raise ValueError(f"budget k={k} must satisfy 1 <= k <= n={n}")
    if any(g.degree(v) == 0 for v in range(n)):
        raise ValueError("gadget reduction requires minimum degree 1")
    b = _Builder()
    src = [b.add("V", v) for v in range(n)]
    for u, v in g.edges:
        b.edge(src[u], src[v])
    for v in range(n):
        for i in range(1, g.degree(v) + 2):
            x = b.add("x", v, i)
            y = b.add("y", v, i)
            z = b.add("z", v, i)
            b.edge(src[v], x)
            b.edge(x, y)
            b.edge(y, z)
            for t in range(2):
                b.edge(z, b.add("Q", v, i, t))
            if i == 1:
                for t in range(2):
                    b.edge(y, b.add("R1", v, t))
            else:
                b.edge(y, b.add("r", v, i))
    graph = b.build()
    witness = _gadget_bipartition(g, b.roles) if is_bipartite(g) else None
    return ReductionOutput(graph, k, b.roles, witness, (g, k))


def _gadget_bipartition(g: Graph, roles: RoleMap) -> BipartitionWitness:
    # Source side A keeps v and its y's and Q-pendants; x, z and the
    # y-pendants flip sides.  Mirrored for source side B.
    side_a, _ = is_bipartite(g)  # type: ignore[misc]
    left, right = set(), set()
    for v, (tag, idx) in roles.items():
        src_left = idx[0] in side_a
        if tag in ("V", "y", "Q"):
            (left if src_left else right).add(v)
        else:  # x, z, R1, r
            (right if src_left else left).add(v)
    return BipartitionWitness(frozenset(left), frozenset(right))


def forward_label_gadget(out: ReductionOutput, s: Iterable[int]) -> Labeling:
    """Constructive labeling from a dominating set: every gadget weighs -1,
    so the total is exactly |S|."""
    g, k = out.source
    chosen = frozenset(s)
    if not is_dominating(g, chosen):
        raise ValueError("S is not a dominating set of the source graph")
    if len(chosen) > k:
        raise ValueError(f"|S| = {len(chosen)} exceeds the budget k = {k}")
    labels = [0] * out.graph.n
    for v, (tag, idx) in out.roles.items():
        if tag == "V":
            labels[v] = 2 if idx[0] in chosen else 1
        elif tag in ("y", "z"):
            labels[v] = 2
        else:  # x and all pendants
            labels[v] = -1
    return tuple(labels)


# ---------------------------------------------------------------------------
# Multidimensional relaxed subset sum -> bounded feedback vertex set


@dataclass(frozen=True)
class MrssInstance:
    """Choose at most m of the vectors so the coordinatewise sum reaches target."""

    k: int  # dimension
    m: int  # cardinality budget
    vectors: tuple[tuple[int, ...], ...]
    target: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 0 or self.m < 0:
            raise ValueError("dimension and budget must be nonnegative")
        if len(self.target) != self.k:
            raise ValueError("target length must equal the dimension")
        for vec in self.vectors:
            if len(vec) != self.k:
                raise ValueError("every vector must have length equal to the dimension")
            if any(x < 0 for x in vec):
                raise ValueError("vector entries must be nonnegative")
        if any(x < 0 for x in self.target):
            raise ValueError("target entries must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.vectors)


def reduce_mrss_to_fvs(inst: MrssInstance) -> ReductionOutput:
    """Reduced instance whose feedback vertex set is the 2k hub vertices.

    Per coordinate j: hubs u_j, v_j with single pendants, a sink set D_j of
    size (sum_i s_i(j)) + t(j) joined to both hubs, and F_j with two
    pendants each joined to v_j.  Per vector i: matched pairs b/c with
    collector a_i, four pendants per b, a path w-x-y off each b, and two
    cherry paths g-h, p-q off each c; u_j grabs the first s_i(j) vertices
    of each C-set.
    """
    if any(t < 1 for t in inst.target):
        raise ValueError("every target coordinate must be at least 1")
    if any(not any(vec) for vec in inst.vectors):
        raise ValueError("zero vectors are not allowed")
    b = _Builder()
    K, n = inst.k, inst.n
    sigma = [sum(vec[j] for vec in inst.vectors) + inst.target[j] for j in range(K)]
    u = [b.add("u", j) for j in range(K)]
    v = [b.add("v", j) for j in range(K)]
    for j in range(K):
        b.edge(u[j], b.add("r1", j))
        b.edge(v[j], b.add("r2", j))
    for j in range(K):
        for idx in range(sigma[j]):
            d = b.add("D", j, idx)
            b.edge(u[j], d)
            b.edge(v[j], d)
        for idx in range(math.ceil(sigma[j] / 2)):
            f = b.add("F", j, idx)
            b.edge(v[j], f)
            for t in range(2):
                b.edge(f, b.add("P", j, idx, t))
    c_sets: list[list[int]] = []
    for i, vec in enumerate(inst.vectors):
        mx = max(vec)
        a_i = b.add("a", i)
        cs = []
        for l in range(mx):
            bb = b.add("b", i, l)
            cc = b.add("c", i, l)
            b.edge(bb, cc)
            b.edge(a_i, bb)
            for t in range(4):
                b.edge(bb, b.add("Z", i, l, t))
            w = b.add("w", i, l)
            x = b.add("x", i, l)
            y = b.add("y", i, l)
            b.edge(bb, w)
            b.edge(w, x)
            b.edge(x, y)
            gg = b.add("g", i, l)
            b.edge(cc, gg)
            b.edge(gg, b.add("h", i, l))
            pp = b.add("p", i, l)
            b.edge(cc, pp)
            b.edge(pp, b.add("q", i, l))
            cs.append(cc)
        c_sets.append(cs)
    for j in range(K):
        for i, vec in enumerate(inst.vectors):
            for l in range(vec[j]):
                b.edge(u[j], c_sets[i][l])
    k_prime = (
        sum(3 * max(vec) + 1 for vec in inst.vectors)
        - sum(sigma)
        + 2 * K
        + inst.m
    )
    witness = FvsWitness(frozenset(u + v))
    return ReductionOutput(b.build(), k_prime, b.roles, witness, inst)


def mrss_labeling(out: ReductionOutput, s_prime: Iterable[int]) -> Labeling:
    """Apply the constructive labeling for an arbitrary index set, without
    checking that it solves the source instance."""
    chosen = frozenset(s_prime)
    labels = [0] * out.graph.n
    for vtx, (tag, idx) in out.roles.items():
        if tag in ("P", "D", "r1", "r2", "h", "q", "Z"):
            labels[vtx] = -1
        elif tag in ("u", "v", "F", "b", "g", "p"):
            labels[vtx] = 2
        elif tag in ("a", "c"):
            labels[vtx] = 2 if idx[0] in chosen else 1
        elif tag == "w":
            labels[vtx] = -1 if idx[0] in chosen else 1
        elif tag == "x":
            labels[vtx] = 1 if idx[0] in chosen else 2
        elif tag == "y":
            labels[vtx] = 1 if idx[0] in chosen else -1
        else:
            raise AssertionError(f"unexpected role tag {tag!r}")
    return tuple(labels)


def forward_label_mrss(out: ReductionOutput, s_prime: Iterable[int]) -> Labeling:
    """Constructive labeling from a solution of the vector instance."""
    inst: MrssInstance = out.source
    chosen = frozenset(s_prime)
    if len(chosen) > inst.m:
        raise ValueError(f"|S'| = {len(chosen)} exceeds the budget m = {inst.m}")
    for j in range(inst.k):
        if sum(inst.vectors[i][j] for i in chosen) < inst.target[j]:
            raise ValueError(f"chosen vectors miss the target in coordinate {j}")
    return mrss_labeling(out, chosen)


# ---------------------------------------------------------------------------
# Red-blue dominating set -> bounded vertex cover


@dataclass(frozen=True)
class RbdsInstance:
    """Choose at most k red (X) vertices dominating every blue (Y) vertex."""

    x_count: int
    y_count: int
    edges: tuple[tuple[int, int], ...]  # (x index, y index), 0-indexed
    k: int

    def __post_init__(self) -> None:
        if self.x_count < 0 or self.y_count < 0:
            raise ValueError("side sizes must be nonnegative")
        for x, y in self.edges:
            if not (0 <= x < self.x_count and 0 <= y < self.y_count):
                raise ValueError(f"edge ({x},{y}) out of range")
        object.__setattr__(self, "edges", tuple(sorted(set(self.edges))))

    def x_neighbors(self, y: int) -> frozenset[int]:
        return frozenset(x for x, yy in self.edges if yy == y)

    def y_neighbors(self, x: int) -> frozenset[int]:
        return frozenset(y for xx, y in self.edges if xx == x)


def reduce_rbds_to_vc(inst: RbdsInstance) -> ReductionOutput:
    """Three copies of X, two pendant-decorated copies of Y; the Y copies
    form a vertex cover of size 2|Y|.  Target weight -2|Y| - |X| + 4k."""
    if not 1 <= inst.k <= inst.x_count:
        raise ValueError(f"budget k={inst.k} must satisfy 1 <= k <= |X|={inst.x_count}")
    for x in range(inst.x_count):
        if not inst.y_neighbors(x):
            raise ValueError(f"X vertex {x} has no Y neighbour")
    for y in range(inst.y_count):
        if not inst.x_neighbors(y):
            raise ValueError(f"Y vertex {y} has no X neighbour")
    b = _Builder()
    X1 = [b.add("X1", v) for v in range(inst.x_count)]
    X2 = [b.add("X2", v) for v in range(inst.x_count)]
    X3 = [b.add("X3", v) for v in range(inst.x_count)]
    Y1 = [b.add("Y1", u) for u in range(inst.y_count)]
    Y2 = [b.add("Y2", u) for u in range(inst.y_count)]
    for x, y in inst.edges:
        b.edge(Y1[y], X1[x])
        b.edge(Y1[y], X2[x])
        b.edge(Y2[y], X2[x])
        b.edge(Y2[y], X3[x])
    for u in range(inst.y_count):
        for t in range(3):
            b.edge(Y1[u], b.add("P1", u, t))
            b.edge(Y2[u], b.add("P2", u, t))
    k_prime = -2 * inst.y_count - inst.x_count + 4 * inst.k
    witness = VertexCoverWitness(frozenset(Y1 + Y2))
    return ReductionOutput(b.build(), k_prime, b.roles, witness, inst)


def forward_label_rbds(out: ReductionOutput, s: Iterable[int]) -> Labeling:
    """Constructive labeling from a red-blue dominating set; the weight is
    -2|Y| - |X| + 4|S|."""
    inst: RbdsInstance = out.source
    chosen = frozenset(s)
    for y in range(inst.y_count):
        if not inst.x_neighbors(y) & chosen:
            raise ValueError(f"S does not dominate Y vertex {y}")
    labels = [0] * out.graph.n
    for vtx, (tag, idx) in out.roles.items():
        if tag in ("Y1", "Y2"):
            labels[vtx] = 2
        elif tag == "X2":
            labels[vtx] = 1
        elif tag in ("X1", "X3"):
            labels[vtx] = 1 if idx[0] in chosen else -1
        else:  # P1, P2
            labels[vtx] = -1
    return tuple(labels)


# ---------------------------------------------------------------------------
# Source-problem oracles (exhaustive, small instances only)


def oracle_ds(g: Graph, k: int, cap: int = 20) -> Optional[frozenset[int]]:
    """Smallest dominating set if its size is at most k, else None."""
    if g.n > cap:
        raise CapExceeded(f"dominating-set oracle capped at n <= {cap}")
    for size in range(0, min(k, g.n) + 1):
        for combo in itertools.combinations(range(g.n), size):
            if is_dominating(g, combo):
                return frozenset(combo)
    return None


def oracle_rbds(inst: RbdsInstance, cap: int = 20) -> Optional[frozenset[int]]:
    """Smallest X-subset dominating all of Y if at most k, else None."""
    if inst.x_count > cap:
        raise CapExceeded(f"red-blue oracle capped at |X| <= {cap}")
    x_of_y = [inst.x_neighbors(y) for y in range(inst.y_count)]
    for size in range(0, min(inst.k, inst.x_count) + 1):
        for combo in itertools.combinations(range(inst.x_count), size):
            chosen = frozenset(combo)
            if all(nbrs & chosen for nbrs in x_of_y):
                return chosen
    return None


def oracle_mrss(inst: MrssInstance, cap: int = 20) -> Optional[frozenset[int]]:
    """Some solution index set, padded with unused vectors to size
    min(m, n).

    Supersets of solutions are solutions (entries are nonnegative), and
    the constructive labeling weighs k' - m + |S'|, so returning a
    maximal-size solution makes the forward labeling hit k' exactly
    whenever m <= n.
    """
    if inst.n > cap:
        raise CapExceeded(f"vector oracle capped at n <= {cap}")
    want = min(inst.m, inst.n)
    for size in range(0, want + 1):
        for combo in itertools.combinations(range(inst.n), size):
            sums = [
                sum(inst.vectors[i][j] for i in combo) for j in range(inst.k)
            ]
            if all(s >= t for s, t in zip(sums, inst.target)):
                chosen = set(combo)
                for extra in range(inst.n):
                    if len(chosen) == want:
                        break
                    chosen.add(extra)
                return frozenset(chosen)
    return None


# ---------------------------------------------------------------------------
# Instance file formats


def parse_mrss_json(text: str | bytes) -> MrssInstance:
    """JSON object with keys k, m, vectors, target."""
    try:
        data = json.loads(text)
        return MrssInstance(
            k=int(data["k"]),
            m=int(data["m"]),
            vectors=tuple(tuple(int(x) for x in vec) for vec in data["vectors"]),
            target=tuple(int(x) for x in data["target"]),
        )
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ValueError(f"malformed vector-instance JSON: {exc}") from None


def write_mrss_json(inst: MrssInstance) -> str:
    return json.dumps(
        {
            "k": inst.k,
            "m": inst.m,
            "vectors": [list(vec) for vec in inst.vectors],
            "target": list(inst.target),
        }
    )


def parse_rbds_text(text: str | bytes) -> RbdsInstance:
    """Header ``p <|X|> <|Y|> <m> <k>`` then m lines ``e <x> <y>``,
    1-indexed per side."""
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
    if len(head) != 5 or head[0] != "p":
        raise GraphFormatError(f"malformed header: {lines[0]!r}")
    try:
        nx, ny, m, k = (int(x) for x in head[1:])
    except ValueError:
        raise GraphFormatError(f"malformed header: {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "e":
            raise GraphFormatError(f"malformed edge line: {ln!r}")
        x, y = int(parts[1]), int(parts[2])
        if not (1 <= x <= nx and 1 <= y <= ny):
            raise GraphFormatError(f"endpoint out of range in {ln!r}")
        edges.append((x - 1, y - 1))
    return RbdsInstance(nx, ny, tuple(edges), k)


def write_rbds_text(inst: RbdsInstance) -> str:
    out = [f"p {inst.x_count} {inst.y_count} {len(inst.edges)} {inst.k}"]
    out.extend(f"e {x + 1} {y + 1}" for x, y in sorted(inst.edges))
    return "\n".join(out) + "\n"
