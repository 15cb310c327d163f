"""Shared corpus builders and fixtures for the test suite."""
from __future__ import annotations

import random

from srdlab import Graph, MrssInstance, RbdsInstance, generate
from srdlab.graph import random_split_with_witness


def complete_multipartite(sizes: list[int]) -> Graph:
    starts = []
    total = 0
    for sz in sizes:
        starts.append(total)
        total += sz
    edges = []
    for a in range(len(sizes)):
        for b in range(a + 1, len(sizes)):
            for i in range(starts[a], starts[a] + sizes[a]):
                for j in range(starts[b], starts[b] + sizes[b]):
                    edges.append((i, j))
    return Graph.from_edges(total, edges)


def random_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return Graph.from_edges(n, edges)


def small_corpus() -> list[tuple[str, Graph]]:
    """Seeded corpus of graphs with n <= 10: mixed gnp densities, trees,
    cliques, complete multipartite, classic families, split graphs."""
    out: list[tuple[str, Graph]] = []
    densities = (10, 25, 40, 55, 70, 85)
    for s in range(120):
        n = 4 + s % 7
        pct = densities[s % len(densities)]
        out.append((f"gnp-{n}-{pct}-{s}", generate("random_gnp", [n, pct], seed=s)))
    for s in range(30):
        n = 2 + s % 9
        out.append((f"tree-{n}-{s}", random_tree(n, seed=1000 + s)))
    for n in range(1, 11):
        out.append((f"K{n}", generate("complete", [n])))
    multipartite = [
        [1, 1], [2, 2], [3, 3], [4, 4], [5, 5], [2, 3], [1, 4],
        [2, 2, 2], [3, 3, 3], [1, 2, 3], [2, 3, 4], [1, 1, 1],
        [2, 2, 2, 2], [1, 2, 2], [3, 4],
    ]
    for sizes in multipartite:
        name = "K" + ",".join(map(str, sizes))
        out.append((name, complete_multipartite(sizes)))
    for n in range(1, 11):
        out.append((f"P{n}", generate("path", [n])))
    for n in range(3, 11):
        out.append((f"C{n}", generate("cycle", [n])))
    for n in range(2, 11):
        out.append((f"S{n}", generate("star", [n])))
    for n in range(4, 11):
        out.append((f"W{n}", generate("wheel", [n])))
    for i, (a, b) in enumerate([(2, 3), (3, 3), (3, 4), (4, 4), (4, 5), (5, 5), (2, 8), (5, 4)]):
        g, _ = random_split_with_witness(a, b, seed=2000 + i)
        out.append((f"split-{a}-{b}", g))
    for n in range(1, 6):
        out.append((f"empty{n}", Graph(n)))
    return out


def medium_corpus() -> list[tuple[str, Graph]]:
    """Seeded corpus with 11 <= n <= 16 for the bb/nd comparison."""
    out: list[tuple[str, Graph]] = []
    i = 0
    for n in (11, 12, 13):
        for pct in (20, 50):
            for s in (0, 1):
                out.append((f"gnp-{n}-{pct}-{s}", generate("random_gnp", [n, pct], seed=3000 + i)))
                i += 1
    out.append(("gnp-14-20", generate("random_gnp", [14, 20], seed=3100)))
    out.append(("gnp-14-50", generate("random_gnp", [14, 50], seed=3101)))
    out.append(("gnp-15-20", generate("random_gnp", [15, 20], seed=3102)))
    out.append(("gnp-16-20", generate("random_gnp", [16, 20], seed=3103)))
    for s in range(12):
        n = 11 + s % 6
        out.append((f"tree-{n}-{s}", random_tree(n, seed=4000 + s)))
    multipartite = [
        [4, 4, 4], [5, 5, 5], [6, 6], [8, 8], [4, 4, 4, 4], [5, 6],
        [3, 4, 5], [2, 2, 2, 2, 2, 2], [4, 5, 6], [8, 4], [11, 5], [6, 5, 5],
    ]
    for sizes in multipartite:
        out.append(("K" + ",".join(map(str, sizes)), complete_multipartite(sizes)))
    for j, (a, b) in enumerate([(4, 7), (5, 6), (6, 6), (6, 8), (5, 10), (8, 8), (7, 4), (4, 12)]):
        g, _ = random_split_with_witness(a, b, seed=5000 + j)
        out.append((f"split-{a}-{b}", g))
    for n in range(11, 17):
        out.append((f"S{n}", generate("star", [n])))
        out.append((f"W{n}", generate("wheel", [n])))
        out.append((f"C{n}", generate("cycle", [n])))
    return out


def figure6_mrss() -> MrssInstance:
    return MrssInstance(k=2, m=2, vectors=((2, 1), (1, 2), (1, 1)), target=(3, 3))


def figure8_rbds() -> RbdsInstance:
    edges = ((0, 0), (1, 0), (0, 1), (2, 1), (1, 2), (2, 3))
    return RbdsInstance(x_count=3, y_count=4, edges=edges, k=2)


def random_mrss(seed: int) -> MrssInstance:
    """Small random instance with m <= n so solutions can be padded to m."""
    rng = random.Random(seed)
    k = rng.randint(1, 2)
    n = rng.randint(1, 3)
    m = rng.randint(1, n)
    vectors = []
    for _ in range(n):
        vec = tuple(rng.randint(0, 2) for _ in range(k))
        if not any(vec):
            vec = (1,) * k
        vectors.append(vec)
    target = tuple(rng.randint(1, 2) for _ in range(k))
    return MrssInstance(k=k, m=m, vectors=tuple(vectors), target=target)


def random_rbds(seed: int) -> RbdsInstance:
    """Small random nondegenerate instance: no isolated X or Y vertices."""
    rng = random.Random(seed)
    nx = rng.randint(1, 4)
    ny = rng.randint(1, 4)
    edges = {
        (x, y)
        for x in range(nx)
        for y in range(ny)
        if rng.random() < 0.5
    }
    for x in range(nx):
        if not any(e[0] == x for e in edges):
            edges.add((x, rng.randrange(ny)))
    for y in range(ny):
        if not any(e[1] == y for e in edges):
            edges.add((rng.randrange(nx), y))
    k = rng.randint(1, nx)
    return RbdsInstance(x_count=nx, y_count=ny, edges=tuple(sorted(edges)), k=k)


def label_presence(classes, labels) -> tuple[tuple[int, int, int], ...]:
    """Per-class presence triple of the label values -1, 1, 2."""
    out = []
    for cls in classes:
        vals = {labels[v] for v in cls}
        out.append((int(-1 in vals), int(1 in vals), int(2 in vals)))
    return tuple(out)
