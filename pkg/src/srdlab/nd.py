"""Neighbourhood-diversity solver.

Vertices u, v share a type when N(u)\\{v} = N(v)\\{u}; the coarsest type
partition has the property that every class induces a clique or an
independent set and two classes are joined either completely or not at
all.  A labeling restricted to a class is summarized by which of the
three label values occur in it (a presence triple) plus the class weight;
the whole problem then reduces to choosing, per class, a presence triple
and an achievable weight so that every class-granular labelsum condition
holds.  The optimum over all such choices equals the optimum over
labelings.

`solve_guess_ilp` solves the small integer program for one fixed guess of
presence triples; `solve_nd` searches over triples and weights together
with bound pruning, which is what makes graphs whose classes are all
singletons (t = n) tractable in practice.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .graph import Graph
from .solvers import SolveResult
from .srdf import Labeling, is_valid_srdf, weight

Flags = tuple[int, int, int]  # presence of -1, 1, 2 in a class
Guess = tuple[Flags, ...]

# All presence triples except (0,0,0), in binary ascending order.
FLAG_TRIPLES: tuple[Flags, ...] = (
    (0, 0, 1),
    (0, 1, 0),
    (0, 1, 1),
    (1, 0, 0),
    (1, 0, 1),
    (1, 1, 0),
    (1, 1, 1),
)


@dataclass(frozen=True)
class NdPartition:
    """Coarsest type partition: classes sorted by smallest vertex."""

    n: int
    classes: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]  # "clique" | "independent"; singletons independent
    adjacency: tuple[frozenset[int], ...]  # class indices, complete joins

    @property
    def t(self) -> int:
        return len(self.classes)


def nd_partition(g: Graph) -> NdPartition:
    """Group vertices into type classes and record the class-level structure."""
    n = g.n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    groups: dict[frozenset[int], int] = {}
    for u in range(n):
        key = g.neighbors(u)
        if key in groups:
            union(groups[key], u)
        else:
            groups[key] = u
    groups.clear()
    for u in range(n):
        key = g.closed_neighbors(u)
        if key in groups:
            union(groups[key], u)
        else:
            groups[key] = u

    members: dict[int, list[int]] = {}
    for u in range(n):
        members.setdefault(find(u), []).append(u)
    classes = tuple(tuple(sorted(v)) for v in sorted(members.values(), key=min))
    kinds = tuple(
        "clique" if len(cls) >= 2 and g.has_edge(cls[0], cls[1]) else "independent"
        for cls in classes
    )
    reps = [cls[0] for cls in classes]
    adjacency = tuple(
        frozenset(
            j for j, r in enumerate(reps) if j != i and g.has_edge(reps[i], r)
        )
        for i in range(len(classes))
    )
    return NdPartition(n, classes, kinds, adjacency)


@lru_cache(maxsize=None)
def achievable_weights(size: int, flags: Flags) -> tuple[int, ...]:
    """Exact set of class weights realizable with the given label presence.

    Enumerates counts (p, q, r) of labels -1, 1, 2 with p+q+r = size,
    each count positive exactly when its flag is set.
    """
    a, b, c = flags
    if (a, b, c) == (0, 0, 0):
        raise ValueError("a class must contain at least one label value")
    if a + b + c > size:
        raise ValueError(f"{a + b + c} required label values do not fit in {size} vertices")
    out = set()
    p_range = range(1, size + 1) if a else (0,)
    for p in p_range:
        r_range = range(1, size - p + 1) if c else (0,)
        for r in r_range:
            q = size - p - r
            if q < 0 or (q == 0) != (b == 0):
                continue
            out.add(-p + q + 2 * r)
    return tuple(sorted(out))


def _base(flags: Flags) -> int:
    """Smallest label present in a class: the binding one for labelsums."""
    a, b, _ = flags
    return -1 if a else (1 if b else 2)


def enumerate_guesses(p: NdPartition) -> Iterator[Guess]:
    """All presence-triple assignments that fit the class sizes."""
    allowed = [
        tuple(f for f in FLAG_TRIPLES if sum(f) <= len(cls)) for cls in p.classes
    ]
    yield from itertools.product(*allowed)


def check_guess_feasible(p: NdPartition, gv: Guess) -> bool:
    """Every class guessed to contain a -1 must see a class guessed to
    contain a 2: the class itself suffices only for clique classes."""
    for i, (a, _, c) in enumerate(gv):
        if not a:
            continue
        if p.kinds[i] == "clique" and c:
            continue
        if any(gv[j][2] for j in p.adjacency[i]):
            continue
        return False
    return True


def _search(
    p: NdPartition,
    options: Sequence[Sequence[tuple[Flags, int]]],
    initial_best: Optional[int] = None,
) -> Optional[tuple[int, list[tuple[Flags, int]], int]]:
    """Depth-first assignment of one (flags, weight) option per class.

    Minimizes the total weight subject to, for every class: the worst
    member labelsum (own weight for cliques, smallest present label for
    independent classes, plus all adjacent class weights) is at least 1,
    and a class containing -1 sees a class containing 2.  Prunes with
    interval propagation (optimistic maxima for undecided classes) and an
    objective bound from per-class minima.  Returns (total, assignment,
    nodes) strictly better than initial_best, or None.
    """
    t = p.t
    if t == 0:
        return (0, [], 0)
    if any(not opts for opts in options):
        return None
    adjacency = p.adjacency
    clique = [kind == "clique" for kind in p.kinds]
    order = sorted(range(t), key=lambda i: (len(options[i]), i))
    min_w = [min(w for _, w in opts) for opts in options]
    max_w = [max(w for _, w in opts) for opts in options]
    suffix_min = [0] * (t + 1)
    for d in range(t - 1, -1, -1):
        suffix_min[d] = suffix_min[d + 1] + min_w[order[d]]
    affected = [(i, *sorted(adjacency[i])) for i in range(t)]

    assigned: list[Optional[tuple[Flags, int]]] = [None] * t
    best_total = initial_best
    best_assign: Optional[list[tuple[Flags, int]]] = None
    nodes = 0

    def headroom(c: int) -> int:
        # Upper bound on the worst member labelsum of class c; exact once
        # every class in its scope is assigned.
        got = assigned[c]
        if clique[c]:
            val = got[1] if got is not None else max_w[c]
        else:
            val = _base(got[0]) if got is not None else 2
        for j in adjacency[c]:
            got = assigned[j]
            val += got[1] if got is not None else max_w[j]
        return val

    def two_provider_possible(c: int) -> bool:
        # Optimistic: an unassigned class may still contribute a 2.
        got = assigned[c]
        if got is None or not got[0][0]:
            return True
        if clique[c] and got[0][2]:
            return True
        for j in adjacency[c]:
            gj = assigned[j]
            if gj is None or gj[0][2]:
                return True
        return False

    def dfs(d: int, pw: int) -> None:
        nonlocal best_total, best_assign, nodes
        if d == t:
            if best_total is None or pw < best_total:
                best_total = pw
                best_assign = [a for a in assigned]  # type: ignore[misc]
            return
        i = order[d]
        rest = suffix_min[d + 1]
        for opt in options[i]:
            w = opt[1]
            if best_total is not None and pw + w + rest >= best_total:
                break  # options sorted by weight
            nodes += 1
            assigned[i] = opt
            if all(
                headroom(c) >= 1 and two_provider_possible(c) for c in affected[i]
            ):
                dfs(d + 1, pw + w)
            assigned[i] = None

    dfs(0, 0)
    if best_assign is None:
        return None
    return (best_total, best_assign, nodes)  # type: ignore[return-value]


def solve_guess_ilp(
    p: NdPartition, gv: Guess
) -> Optional[tuple[tuple[int, ...], int]]:
    """Minimize the total weight for one fixed guess; None when infeasible."""
    if not check_guess_feasible(p, gv):
        return None
    options = [
        [(gv[i], w) for w in achievable_weights(len(cls), gv[i])]
        for i, cls in enumerate(p.classes)
    ]
    found = _search(p, options)
    if found is None:
        return None
    total, assign, _ = found
    return (tuple(w for _, w in assign), total)


def realize_labeling(
    p: NdPartition, gv: Guess, weights: Sequence[int]
) -> Labeling:
    """Turn per-class weights into concrete labels.

    Picks label counts with the smallest number of -1s (the 2-count is
    then determined) and hands out -1 to the lowest-indexed vertices of
    each class, then 1, then 2.
    """
    labels = [0] * p.n
    for i, cls in enumerate(p.classes):
        size = len(cls)
        a, b, c = gv[i]
        target = weights[i]
        counts = None
        for minus in range(1, size + 1) if a else (0,):
            two = target - size + 2 * minus  # from -p + q + 2r with q = size-p-r
            one = size - minus - two
            if two < 0 or one < 0:
                continue
            if (two == 0) != (c == 0) or (one == 0) != (b == 0):
                continue
            counts = (minus, one, two)
            break
        if counts is None:
            raise ValueError(
                f"class weight {target} not achievable with {size} vertices and flags {gv[i]}"
            )
        minus, one, _ = counts
        for idx, v in enumerate(cls):
            labels[v] = -1 if idx < minus else (1 if idx < minus + one else 2)
    return tuple(labels)


def solve_nd(g: Graph) -> SolveResult:
    """Optimal weight via the type partition.

    Searches presence triples and class weights together; equivalent to
    taking the minimum of solve_guess_ilp over every feasible guess.  The
    realized witness is re-validated before returning.
    """
    if g.n == 0:
        return SolveResult(0, (), 0, "nd_ilp")
    p = nd_partition(g)
    options: list[list[tuple[Flags, int]]] = []
    for i, cls in enumerate(p.classes):
        size = len(cls)
        opts: list[tuple[Flags, int]] = []
        for fi, flags in enumerate(FLAG_TRIPLES):
            if sum(flags) > size:
                continue
            if flags[0] and not p.adjacency[i]:
                # no adjacent class can supply a 2 to this class's -1s
                if p.kinds[i] == "independent" or not flags[2]:
                    continue
            opts.extend((flags, w) for w in achievable_weights(size, flags))
        opts.sort(key=lambda fw: (fw[1], FLAG_TRIPLES.index(fw[0])))
        options.append(opts)
    found = _search(p, options, initial_best=g.n + 1)
    assert found is not None  # the all-1 assignment is always feasible
    total, assign, nodes = found
    gv = tuple(flags for flags, _ in assign)
    chosen = tuple(w for _, w in assign)
    labels = realize_labeling(p, gv, chosen)
    if weight(labels) != total or not is_valid_srdf(g, labels).valid:
        raise AssertionError("realized labeling failed re-validation")
    return SolveResult(total, labels, nodes, "nd_ilp")
