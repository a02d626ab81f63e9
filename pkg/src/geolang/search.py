"""Breadth-first search over Cayley graphs given by a neighbour function."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Optional

Neighbours = Callable[[Hashable], Iterable[Hashable]]


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class LayeredBall:
    """A ball grown one full sphere at a time.

    ``layers[d]`` holds the sphere of radius d in a deterministic order; the
    order is the sort order of ``sort_key`` applied to the nodes.
    """

    root: Hashable
    neighbours: Neighbours
    sort_key: Optional[Callable] = None
    dist: dict = field(default_factory=dict)
    layers: list = field(default_factory=list)

    def __post_init__(self):
        if not self.layers:
            self.dist[self.root] = 0
            self.layers.append([self.root])

    @property
    def radius(self) -> int:
        return len(self.layers) - 1

    def __len__(self) -> int:
        return len(self.dist)

    def grow(self, budget: Optional[int] = None) -> list:
        d = len(self.layers)
        dist = self.dist
        new = []
        for node in self.layers[-1]:
            for nb in self.neighbours(node):
                if nb not in dist:
                    dist[nb] = d
                    new.append(nb)
                    if budget is not None and len(dist) > budget:
                        raise BudgetExceeded(f"node budget {budget} exhausted at radius {d}")
        if self.sort_key is not None:
            new.sort(key=self.sort_key)
        self.layers.append(new)
        return new

    def grow_to(self, radius: int, budget: Optional[int] = None) -> "LayeredBall":
        while self.radius < radius:
            self.grow(budget)
        return self


def bidirectional_distance(
    start: LayeredBall,
    goal: LayeredBall,
    cap: int,
    budget: Optional[int] = None,
) -> Optional[int]:
    """Exact distance between the two roots if it is at most ``cap``, else None.

    Both balls are grown by whole spheres.  The first sphere that touches the
    other ball yields the exact distance.  ``start`` may be a cached ball that
    is already larger than needed; it is reused as is.
    """
    if start.root == goal.root:
        return 0
    best = _meet(start, goal)
    if best is not None:
        return best if best <= cap else None
    while start.radius + goal.radius < cap:
        # a cached side that is already deeper is free to use
        grow_start = len(start.layers[-1]) <= len(goal.layers[-1])
        side, other = (start, goal) if grow_start else (goal, start)
        used = len(start) + len(goal)
        new = side.grow(None if budget is None else max(budget - used + len(side), 0))
        hits = [side.radius + other.dist[n] for n in new if n in other.dist]
        if hits:
            best = min(hits)
            return best if best <= cap else None
        if not new:
            return None
    return None


def _meet(a: LayeredBall, b: LayeredBall) -> Optional[int]:
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    hits = [d + big.dist[n] for n, d in small.dist.items() if n in big.dist]
    return min(hits) if hits else None
