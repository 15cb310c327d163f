"""Signed Roman dominating functions: validity, weight, degree-based bound.

A labeling maps every vertex to one of {-1, 1, 2}.  It is a signed Roman
dominating function when every closed neighbourhood sums to at least one
and every vertex labeled -1 has an open neighbour labeled 2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import Graph

LABEL_VALUES = (-1, 1, 2)

LABELSUM_BELOW_ONE = "labelsum_below_one"
MINUS_WITHOUT_TWO = "minus_without_two_neighbour"

Labeling = tuple[int, ...]


@dataclass(frozen=True)
class Verdict:
    """Validity check outcome; violations list every failing vertex."""

    violations: tuple[tuple[int, str], ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


def as_labels(values: Iterable[int], n: int) -> Labeling:
    """Validate a label sequence: length n, values in {-1, 1, 2}."""
    labels = tuple(values)
    if len(labels) != n:
        raise ValueError(f"labeling has {len(labels)} entries, graph has {n} vertices")
    for v, x in enumerate(labels):
        if x not in LABEL_VALUES:
            raise ValueError(f"invalid label {x!r} at vertex {v}; allowed: -1, 1, 2")
    return labels


def labelsum(g: Graph, f: Sequence[int], u: int) -> int:
    """Sum of labels over the closed neighbourhood of u."""
    return f[u] + sum(f[w] for w in g.neighbors(u))


def weight(f: Sequence[int]) -> int:
    return sum(f)


def is_valid_srdf(g: Graph, f: Sequence[int]) -> Verdict:
    """Check both conditions at every vertex; collect all violations."""
    labels = as_labels(f, g.n)
    bad: list[tuple[int, str]] = []
    for u in range(g.n):
        if labelsum(g, labels, u) < 1:
            bad.append((u, LABELSUM_BELOW_ONE))
        if labels[u] == -1 and not any(labels[w] == 2 for w in g.neighbors(u)):
            bad.append((u, MINUS_WITHOUT_TWO))
    return Verdict(tuple(bad))


def lower_bound_degree(g: Graph) -> Fraction:
    """Degree-based lower bound on the optimal weight, as an exact rational.

    ((-2*D^2 + 2*D*d + D + 2*d + 3) / ((D+1) * (2*D + d + 3))) * n,
    where D and d are the maximum and minimum degree.  Exact arithmetic
    only; callers compare via the ceiling.
    """
    if g.n < 1:
        raise ValueError("lower bound requires at least one vertex")
    big, small = g.max_degree, g.min_degree
    num = -2 * big * big + 2 * big * small + big + 2 * small + 3
    den = (big + 1) * (2 * big + small + 3)
    return Fraction(num, den) * g.n


def componentwise_lower_bound(g: Graph) -> int:
    """Sum over connected components of the ceiling of the degree bound."""
    total = 0
    for comp in g.connected_components():
        total += math.ceil(lower_bound_degree(g.induced(comp)))
    return total
