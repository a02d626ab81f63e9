"""Brute-force ground truth for L_m: Cayley-graph balls, exact distances,
geodesic enumeration, bounded cone types and seesaw detection.

Nothing here uses the closed-form length formulas; those are checked
against this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .lamp import INVERSE, Gens, LampElement, generators, step
from .search import LayeredBall, bidirectional_distance


class InsufficientBall(LookupError):
    pass


class CapExceeded(RuntimeError):
    pass


def _neighbours(letters: str):
    def nb(x):
        return [step(x, g) for g in letters]
    return nb


@dataclass
class Ball:
    m: int
    gens: Gens
    radius: int
    dist: dict
    spheres: list

    def __contains__(self, x) -> bool:
        return self.dist.get(x, self.radius + 1) <= self.radius

    def __len__(self) -> int:
        return sum(len(s) for s in self.spheres)

    @property
    def letters(self) -> str:
        return generators(self.gens, self.m)

    def distance(self, x: LampElement) -> int:
        d = self.dist.get(x)
        if d is None or d > self.radius:
            raise InsufficientBall(f"{x} lies outside the radius-{self.radius} ball")
        return d

    def sphere_sizes(self) -> list[int]:
        return [len(s) for s in self.spheres]

    def stats(self) -> dict:
        return {
            "m": self.m,
            "gens": self.gens.value,
            "radius": self.radius,
            "size": len(self),
            "sphere_sizes": self.sphere_sizes(),
        }


@lru_cache(maxsize=16)
def _layered(m: int, gens: Gens) -> LayeredBall:
    return LayeredBall(LampElement.identity(m), _neighbours(generators(gens, m)),
                       sort_key=LampElement.key)


def ball(m: int, gens: Gens | str, radius: int) -> Ball:
    """Ball of the given radius; spheres are cached and grown on demand."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    gens = Gens(gens)
    lb = _layered(m, gens).grow_to(radius)
    spheres = lb.layers[: radius + 1]
    # the shared dict may later hold entries beyond `radius`; Ball.distance guards that
    return Ball(m, gens, radius, lb.dist, spheres)


def distance(x: LampElement, gens: Gens | str = Gens.WREATH, cap: int = 64) -> int:
    """Exact word length by meet-in-the-middle BFS."""
    gens = Gens(gens)
    letters = generators(gens, x.m)
    start = _layered(x.m, gens)
    goal = LayeredBall(x, _neighbours(letters))
    d = bidirectional_distance(start, goal, cap)
    if d is None:
        raise CapExceeded(f"distance of {x} exceeds {cap}")
    return d


def distance_fn(gens: Gens | str = Gens.WREATH, cap: int = 64) -> Callable[[LampElement], int]:
    """Memoised exact length function, for elements too far out for a ball."""
    gens = Gens(gens)
    memo: dict = {}

    def length(x: LampElement) -> int:
        d = memo.get(x)
        if d is None:
            d = memo[x] = distance(x, gens, cap)
        return d

    return length


def geodesic_words(b: Ball, max_len: Optional[int] = None) -> list[str]:
    """All geodesic words of length <= max_len, in shortlex order."""
    max_len = b.radius if max_len is None else max_len
    if max_len > b.radius:
        raise InsufficientBall(f"need a ball of radius {max_len}, have {b.radius}")
    letters = sorted(b.letters)
    out = [""]
    frontier = [("", LampElement.identity(b.m))]
    for d in range(1, max_len + 1):
        nxt = []
        for w, x in frontier:
            for g in letters:
                y = step(x, g)
                if b.dist.get(y) == d:
                    nxt.append((w + g, y))
        frontier = nxt
        out.extend(w for w, _ in nxt)
    return sorted(out, key=lambda w: (len(w), w))


def all_geodesics(x: LampElement, gens: Gens | str = Gens.WREATH, cap: int = 16) -> list[str]:
    """Every geodesic word for x, found by walking back through the BFS spheres."""
    gens = Gens(gens)
    d = distance(x, gens, cap=max(cap, 1))
    if d > cap:
        raise CapExceeded(f"|x| = {d} exceeds the enumeration cap {cap}")
    b = ball(x.m, gens, d)
    letters = generators(gens, x.m)
    memo: dict = {}

    def back(y: LampElement, k: int) -> list[str]:
        if k == 0:
            return [""]
        if y in memo:
            return memo[y]
        words = []
        for g in letters:
            z = step(y, INVERSE[g])
            if b.dist.get(z) == k - 1:
                words.extend(w + g for w in back(z, k - 1))
        memo[y] = words
        return words

    return sorted(back(x, d))


def geodesic_count_extreme(k: int, m: int = 2) -> int:
    """Count geodesics of the element with bulbs -1, 0, 1, ..., k+1 lit and cursor 0.

    Bulb 0 is visited three times and bulbs 1..k twice on either construction
    order, so the count should be 6 * 2^k.
    """
    return len(all_geodesics(extreme_element(k, m), Gens.WREATH, cap=3 * k + 8))


def extreme_element(k: int, m: int = 2) -> LampElement:
    return LampElement.make(m, {p: 1 for p in range(-1, k + 2)}, 0)


# --- cone types -----------------------------------------------------------


@dataclass(frozen=True)
class ConeType:
    base: LampElement
    depth: int
    extensions: frozenset

    def contains(self, word: str) -> bool:
        return word in self.extensions


def _length_fn(x: LampElement, depth: int, gens: Gens, b: Optional[Ball]) -> Callable:
    if b is None:
        need = distance(x, gens) + depth
        b = ball(x.m, gens, need)
    return b.distance


def cone_type(
    x: LampElement,
    depth: int,
    gens: Gens | str = Gens.WREATH,
    b: Optional[Ball] = None,
    length: Optional[Callable[[LampElement], int]] = None,
) -> ConeType:
    """Outbound extensions of x of length <= depth.

    Lengths come from ``length`` if given, else from the ball ``b`` (or a
    ball large enough, built on demand).
    """
    gens = Gens(gens)
    if length is None:
        length = _length_fn(x, depth, gens, b)
    letters = sorted(generators(gens, x.m))
    found = {""}
    frontier = [("", x, length(x))]
    for _ in range(depth):
        nxt = []
        for w, y, d in frontier:
            for g in letters:
                z = step(y, g)
                dz = length(z)
                if dz == d + 1:
                    found.add(w + g)
                    nxt.append((w + g, z, dz))
        frontier = nxt
    return ConeType(x, depth, frozenset(found))


def distinct_cone_types(
    family: Iterable[LampElement],
    depth: int,
    gens: Gens | str = Gens.WREATH,
    length: Optional[Callable[[LampElement], int]] = None,
) -> list[list[LampElement]]:
    """Partition ``family`` by equality of depth-bounded cone types.

    Different classes certify different cone types; members of one class are
    only "not distinguished at this depth".
    """
    classes: dict[frozenset, list] = {}
    for x in family:
        ct = cone_type(x, depth, gens, length=length)
        classes.setdefault(ct.extensions, []).append(x)
    return list(classes.values())


def cone_witnesses(gens: Gens | str, n_max: int) -> list[tuple[str, LampElement]]:
    """Named families whose cone types separate, for L_2.

    Wreath letters: the prefixes t^n a t^{-2n} a (n = 1..n_max) of the
    geodesic of g_n.  Automaton letters: g_n t^{-k} for n = n_max, k = 0..n.
    """
    if Gens(gens) is Gens.WREATH:
        return [(f"n={n}", LampElement.make(2, {n: 1, -n: 1}, -n)) for n in range(1, n_max + 1)]
    n = n_max
    return [(f"k={k}", LampElement.make(2, {n: 1, -n: 1}, -k)) for k in range(n + 1)]


# --- seesaw elements ------------------------------------------------------


def _letter_inverse(g: str, m: int) -> str:
    inv = INVERSE[g]
    return g if (m == 2 and g == "a") else inv


def find_seesaw(
    m: int,
    gens: Gens | str,
    radius: int,
    min_swing: int = 1,
) -> list[tuple[LampElement, str, int]]:
    """All (w, g, swing) with |w| <= radius - 1 and swing >= min_swing."""
    gens = Gens(gens)
    b = ball(m, gens, radius)
    out = []
    for d, layer in enumerate(b.spheres):
        if d > radius - 1:
            break
        for w in layer:
            for g in gens.positive:
                k = swing(w, g, gens, b.distance)
                if k >= min_swing:
                    out.append((w, g, k))
    return out


def swing(w: LampElement, g: str, gens: Gens | str, length: Callable[[LampElement], int], limit: int = 64) -> int:
    """Largest k such that w is a seesaw element of swing k with respect to g."""
    gens = Gens(gens)
    m = w.m
    gi = _letter_inverse(g, m)
    others = [h for h in gens.positive if h != g]

    def steady(y: LampElement) -> bool:
        dy = length(y)
        return all(length(step(y, hh)) >= dy
                   for h in others for hh in {h, _letter_inverse(h, m)})

    if not steady(w):
        return 0
    up = down = w
    k = 0
    while k < limit:
        if k >= 1 and not (steady(up) and steady(down)):
            break
        nu, nd = step(up, g), step(down, gi)
        if length(nu) != length(up) - 1 or length(nd) != length(down) - 1:
            break
        up, down = nu, nd
        k += 1
    return k
