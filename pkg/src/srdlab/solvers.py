"""Ground-truth exact solvers: exhaustive enumeration and branch-and-bound."""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .graph import Graph
from .srdf import Labeling, as_labels, is_valid_srdf, weight

BRUTE_CAP_DEFAULT = 14


class CapExceeded(ValueError):
    """Instance is larger than the configured cap for this solver."""


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    witness: Labeling
    explored: int
    algo: str
    certified: bool = True


_VALUES = np.array([-1, 1, 2], dtype=np.int16)


def _labeling_chunks(g: Graph):
    """Yield (labels, valid) arrays covering all 3^n labelings in
    lexicographic order under the value order -1 < 1 < 2."""
    n = g.n
    closed = np.zeros((n, n), dtype=np.int16)
    openm = np.zeros((n, n), dtype=np.int16)
    for u in range(n):
        closed[u, u] = 1
        for w in g.neighbors(u):
            closed[u, w] = 1
            openm[u, w] = 1
    pow3 = 3 ** np.arange(n - 1, -1, -1, dtype=np.int64)
    total = 3**n
    chunk = 3 ** min(n, 9)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (idx[:, None] // pow3[None, :]) % 3
        labels = _VALUES[digits]
        sums = labels @ closed  # closed is symmetric
        twos = (labels == 2).astype(np.int16) @ openm
        ok = (sums >= 1).all(axis=1) & ((labels != -1) | (twos > 0)).all(axis=1)
        yield labels, ok


def solve_brute(g: Graph, cap: int = BRUTE_CAP_DEFAULT) -> SolveResult:
    """Exhaust all 3^n labelings; return the minimum-weight valid one.

    Ties break to the lexicographically smallest witness under the value
    order -1 < 1 < 2.  Enumeration is chunked so n up to the cap stays
    within memory.
    """
    n = g.n
    if n > cap:
        raise CapExceeded(f"brute force capped at n <= {cap}, got n = {n}")
    if n == 0:
        return SolveResult(0, (), 1, "brute")
    best_w: Optional[int] = None
    best_row: Optional[np.ndarray] = None
    for labels, ok in _labeling_chunks(g):
        if not ok.any():
            continue
        w = labels.sum(axis=1, dtype=np.int32)
        w_ok = np.where(ok, w, np.iinfo(np.int32).max)
        i = int(np.argmin(w_ok))  # first minimum = lexicographically smallest
        if best_w is None or int(w_ok[i]) < best_w:
            best_w = int(w_ok[i])
            best_row = labels[i].copy()
    assert best_w is not None and best_row is not None  # all-1 is always valid
    return SolveResult(best_w, tuple(int(x) for x in best_row), 3**n, "brute")


def valid_labelings_matrix(g: Graph, cap: int = 12) -> np.ndarray:
    """All valid labelings as one (count, n) array.  Small n only."""
    if g.n > cap:
        raise CapExceeded(f"valid-labeling enumeration capped at n <= {cap}")
    if g.n == 0:
        return np.zeros((1, 0), dtype=np.int16)
    parts = [labels[ok] for labels, ok in _labeling_chunks(g)]
    return np.concatenate(parts, axis=0)


def valid_labelings(g: Graph) -> Iterator[Labeling]:
    """Yield every valid labeling in lexicographic order.  Small n only."""
    if g.n == 0:
        yield ()
        return
    for labels in itertools.product((-1, 1, 2), repeat=g.n):
        if is_valid_srdf(g, labels).valid:
            yield labels


class _Timeout(Exception):
    pass


def solve_bb(
    g: Graph,
    initial_incumbent: Optional[tuple[Labeling, int]] = None,
    timeout_s: Optional[float] = None,
) -> SolveResult:
    """Branch-and-bound over vertex labels, assigned in decreasing-degree order.

    Branching tries 2, then 1, then -1 at each vertex (feasible completions
    surface early).  Pruning: a closed neighbourhood that can no longer
    reach labelsum 1 even with 2s everywhere; a decided -1 vertex with no
    2-neighbour; and partial weight minus one per remaining vertex already
    at or above the incumbent.  The default incumbent is the all-1 labeling.
    On timeout the best incumbent is returned flagged as non-certified.
    """
    n = g.n
    if n == 0:
        return SolveResult(0, (), 0, "bb")
    if initial_incumbent is not None:
        inc_labels = as_labels(initial_incumbent[0], n)
        inc_w = initial_incumbent[1]
        if weight(inc_labels) != inc_w:
            raise ValueError("incumbent weight does not match its labeling")
        if not is_valid_srdf(g, inc_labels).valid:
            raise ValueError("incumbent labeling is not a valid function")
    else:
        inc_labels, inc_w = (1,) * n, n

    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    closed = [sorted(g.closed_neighbors(u)) for u in range(n)]
    opened = [sorted(g.neighbors(u)) for u in range(n)]
    finalize: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        finalize[max(pos[w] for w in closed[u])].append(u)

    label = [0] * n
    sum_assigned = [0] * n  # over N[u]
    unassigned = [len(closed[u]) for u in range(n)]
    two_open = [0] * n  # assigned 2s in N(u)

    best_w = inc_w
    best_labels = list(inc_labels)
    nodes = 0
    deadline = None if timeout_s is None else time.monotonic() + timeout_s
    timed_out = False

    def dfs(i: int, pw: int) -> None:
        nonlocal nodes, best_w, best_labels
        nodes += 1
        if deadline is not None and nodes % 2048 == 0 and time.monotonic() > deadline:
            raise _Timeout
        if pw - (n - i) >= best_w:
            return
        if i == n:
            best_w = pw
            best_labels = label.copy()
            return
        v = order[i]
        for val in (2, 1, -1):
            label[v] = val
            for u in closed[v]:
                sum_assigned[u] += val
                unassigned[u] -= 1
            if val == 2:
                for u in opened[v]:
                    two_open[u] += 1
            ok = all(
                sum_assigned[u] + 2 * unassigned[u] >= 1 for u in closed[v]
            )
            if ok:
                for u in finalize[i]:
                    if sum_assigned[u] < 1 or (label[u] == -1 and two_open[u] == 0):
                        ok = False
                        break
            if ok:
                dfs(i + 1, pw + val)
            for u in closed[v]:
                sum_assigned[u] -= val
                unassigned[u] += 1
            if val == 2:
                for u in opened[v]:
                    two_open[u] -= 1
        label[v] = 0

    try:
        dfs(0, 0)
    except _Timeout:
        timed_out = True
    return SolveResult(best_w, tuple(best_labels), nodes, "bb", certified=not timed_out)


def decide(g: Graph, k: int, algo: str = "bb", **kwargs) -> bool:
    """True iff the optimal weight is at most k, using the chosen solver."""
    return solve_with(g, algo, **kwargs).optimum <= k


def solve_with(g: Graph, algo: str, **kwargs) -> SolveResult:
    """Dispatch by algorithm name: brute, bb, or nd-ilp."""
    name = algo.replace("-", "_")
    if name == "brute":
        return solve_brute(g, **kwargs)
    if name == "bb":
        return solve_bb(g, **kwargs)
    if name == "nd_ilp":
        from .nd import solve_nd

        return solve_nd(g, **kwargs)
    raise ValueError(f"unknown algorithm {algo!r}")
