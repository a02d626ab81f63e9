"""Lamplighter groups L_m = Z_m wr Z.

An element is a finite configuration of bulbs (states mod m) on the integer
line together with a cursor position.  Words are strings over one of two
alphabets:

    wreath      a, A, t, T      (A = a^-1, T = t^-1)
    automaton   t, T, s, S      (s = ta, S = (ta)^-1, only meaningful for m = 2)

Letters act on the right: ``t`` moves the cursor one step right, ``a``
increments the bulb under the cursor, ``s`` moves right and then increments
the bulb it lands on, ``S`` decrements the bulb under the cursor and then
moves left.
"""

from __future__ import annotations

import bisect
import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping


class InvalidModulus(ValueError):
    pass


class WordError(ValueError):
    pass


class UnsupportedModulus(ValueError):
    pass


class Gens(str, Enum):
    WREATH = "wreath"
    AUTOMATON = "automaton"

    @property
    def letters(self) -> str:
        return "aAtT" if self is Gens.WREATH else "tTsS"

    @property
    def positive(self) -> str:
        """The generating set X itself (without inverses)."""
        return "at" if self is Gens.WREATH else "ts"


INVERSE = {"a": "A", "A": "a", "t": "T", "T": "t", "s": "S", "S": "s"}


def inverse_word(word: str) -> str:
    return "".join(INVERSE[c] for c in reversed(word))


def generators(gens: Gens | str, m: int) -> str:
    """Letters that label distinct Cayley-graph edges.

    For m = 2 the letters a and A are the same group element, so the wreath
    alphabet collapses to ``atT``.
    """
    gens = Gens(gens)
    if gens is Gens.WREATH and m == 2:
        return "atT"
    return gens.letters


def infer_gens(word: str) -> Gens:
    has_a = any(c in "aA" for c in word)
    has_s = any(c in "sS" for c in word)
    if has_a and has_s:
        raise WordError(f"word {word!r} mixes the wreath and automaton alphabets")
    return Gens.AUTOMATON if has_s else Gens.WREATH


def _check_modulus(m: int) -> None:
    if not isinstance(m, int) or m < 2:
        raise InvalidModulus(f"modulus must be an integer >= 2, got {m!r}")


@dataclass(frozen=True, order=True)
class LampElement:
    """Group element in canonical sparse form.

    ``bulbs`` is a tuple of ``(position, state)`` pairs sorted by position with
    every state in ``1..m-1``.  Use :meth:`make` to build one from arbitrary
    data; the raw constructor trusts its input.
    """

    m: int
    bulbs: tuple = ()
    cursor: int = 0

    @classmethod
    def make(cls, m: int, bulbs: Mapping[int, int] | Iterable = (), cursor: int = 0) -> "LampElement":
        _check_modulus(m)
        items = bulbs.items() if isinstance(bulbs, Mapping) else bulbs
        acc: dict[int, int] = {}
        for pos, state in items:
            acc[int(pos)] = (acc.get(int(pos), 0) + int(state)) % m
        return cls(m, tuple(sorted((p, s) for p, s in acc.items() if s)), int(cursor))

    @classmethod
    def identity(cls, m: int) -> "LampElement":
        _check_modulus(m)
        return cls(m)

    @property
    def bulb_map(self) -> dict[int, int]:
        return dict(self.bulbs)

    @property
    def support(self) -> list[int]:
        return [p for p, _ in self.bulbs]

    def state(self, pos: int) -> int:
        return self.bulb_map.get(pos, 0)

    def is_identity(self) -> bool:
        return not self.bulbs and self.cursor == 0

    def key(self) -> tuple:
        return (self.m, self.bulbs, self.cursor)

    def to_dict(self) -> dict:
        return {"m": self.m, "bulbs": {str(p): s for p, s in self.bulbs}, "cursor": self.cursor}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    @classmethod
    def from_dict(cls, data: Mapping) -> "LampElement":
        try:
            m = int(data["m"])
            bulbs = {int(k): int(v) for k, v in dict(data.get("bulbs", {})).items()}
            cursor = int(data.get("cursor", 0))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed element: {data!r}") from exc
        return cls.make(m, bulbs, cursor)

    @classmethod
    def from_json(cls, text: str) -> "LampElement":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        lit = ", ".join(f"{p}:{s}" for p, s in self.bulbs)
        return f"L{self.m}[{{{lit}}} @ {self.cursor}]"


def _bump(bulbs: tuple, pos: int, delta: int, m: int) -> tuple:
    i = bisect.bisect_left(bulbs, (pos,))
    if i < len(bulbs) and bulbs[i][0] == pos:
        new = (bulbs[i][1] + delta) % m
        if new:
            return bulbs[:i] + ((pos, new),) + bulbs[i + 1:]
        return bulbs[:i] + bulbs[i + 1:]
    return bulbs[:i] + ((pos, delta % m),) + bulbs[i:]


def step(x: LampElement, letter: str) -> LampElement:
    """Right-multiply ``x`` by a single generator letter."""
    m, b, c = x.m, x.bulbs, x.cursor
    if letter == "t":
        return LampElement(m, b, c + 1)
    if letter == "T":
        return LampElement(m, b, c - 1)
    if letter == "a":
        return LampElement(m, _bump(b, c, 1, m), c)
    if letter == "A":
        return LampElement(m, _bump(b, c, -1, m), c)
    if letter == "s":
        return LampElement(m, _bump(b, c + 1, 1, m), c + 1)
    if letter == "S":
        return LampElement(m, _bump(b, c, -1, m), c - 1)
    raise WordError(f"unknown letter {letter!r}")


def evaluate(word: str, m: int) -> LampElement:
    _check_modulus(m)
    infer_gens(word)
    bulbs: dict[int, int] = {}
    c = 0
    for ch in word:
        if ch == "t":
            c += 1
        elif ch == "T":
            c -= 1
        elif ch == "a":
            bulbs[c] = bulbs.get(c, 0) + 1
        elif ch == "A":
            bulbs[c] = bulbs.get(c, 0) - 1
        elif ch == "s":
            c += 1
            bulbs[c] = bulbs.get(c, 0) + 1
        elif ch == "S":
            bulbs[c] = bulbs.get(c, 0) - 1
            c -= 1
        else:
            raise WordError(f"unknown letter {ch!r} in {word!r}")
    return LampElement.make(m, bulbs, c)


def multiply(x: LampElement, y: LampElement) -> LampElement:
    if x.m != y.m:
        raise ValueError(f"modulus mismatch: {x.m} vs {y.m}")
    bulbs = dict(x.bulbs)
    for p, s in y.bulbs:
        q = p + x.cursor
        bulbs[q] = bulbs.get(q, 0) + s
    return LampElement.make(x.m, bulbs, x.cursor + y.cursor)


def inverse(x: LampElement) -> LampElement:
    return LampElement.make(x.m, {p - x.cursor: -s for p, s in x.bulbs}, -x.cursor)


def power(k: int) -> str:
    """The word a^k (k may be negative)."""
    return "a" * k if k >= 0 else "A" * (-k)


def symmetric_exponent(state: int, m: int) -> int:
    """Representative of ``state`` in {-h..h}, dropping -h when m is even."""
    state %= m
    return state if state <= m // 2 else state - m


def state_cost(state: int, m: int) -> int:
    state %= m
    return min(state, m - state)


def move(src: int, dst: int) -> str:
    return "t" * (dst - src) if dst >= src else "T" * (src - dst)


# --- normal forms --------------------------------------------------------


@dataclass(frozen=True)
class LampNormalForm:
    """Right-first or left-first normal form.

    ``positives`` are the bulbs on the origin's right-hand side, ascending;
    ``negatives`` those on the left, ordered away from the origin.  With the
    wreath convention position 0 counts as positive, with the automaton
    convention it is grouped with the negatives.
    """

    m: int
    positives: tuple
    negatives: tuple
    r: int
    side: str = "right"
    convention: str = "wreath"

    def conjugates(self) -> list[tuple[int, int]]:
        if self.side == "right":
            return list(self.positives) + list(self.negatives)
        return list(self.negatives) + list(self.positives)

    def word(self) -> str:
        """Expanded word a_{k1}^{e1} ... t^r over the wreath letters (not geodesic)."""
        out = []
        for pos, exp in self.conjugates():
            out.append(move(0, pos) + power(symmetric_exponent(exp, self.m)) + move(pos, 0))
        out.append(move(0, self.r))
        return free_reduce("".join(out))

    def evaluate(self) -> LampElement:
        return evaluate(self.word(), self.m)


def free_reduce(word: str) -> str:
    out: list[str] = []
    for ch in word:
        if out and INVERSE[ch] == out[-1]:
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def normal_form(x: LampElement, side: str = "right", convention: str = "wreath") -> LampNormalForm:
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', not {side!r}")
    if convention not in ("wreath", "automaton"):
        raise ValueError(f"unknown convention {convention!r}")
    split = 0 if convention == "wreath" else 1
    pos = tuple((p, s) for p, s in x.bulbs if p >= split)
    neg = tuple((p, s) for p, s in reversed(x.bulbs) if p < split)
    return LampNormalForm(x.m, pos, neg, x.cursor, side, convention)


# --- word length ---------------------------------------------------------


def _walk(i: int, j: int, r: int) -> int:
    """Shortest cursor walk from 0 to r that visits both i >= 0 and -j <= 0."""
    return min(2 * j + i + abs(r - i), 2 * i + j + abs(r + j))


def d_length(x: LampElement) -> int:
    """Word length over {a, t}.

    For m = 2 this is D(w) = m + l + min{2 j_l + i_m + |r - i_m|, 2 i_m + j_l + |r + j_l|};
    for larger m each lit bulb costs min(state, m - state) instead of 1.
    Empty sides contribute i_m = 0 / j_l = 0.
    """
    cost = sum(state_cost(s, x.m) for _, s in x.bulbs)
    i = max((p for p, _ in x.bulbs if p >= 0), default=0)
    j = max((-p for p, _ in x.bulbs if p < 0), default=0)
    return cost + _walk(i, j, x.cursor)


def dprime_length(x: LampElement) -> int:
    """Word length of an L_2 element over {t, ta}."""
    if x.m != 2:
        raise UnsupportedModulus("the {t, ta} length formula is only defined for m = 2")
    r = x.cursor
    i = max((p for p, _ in x.bulbs if p > 0), default=0)
    left = [-p for p, _ in x.bulbs if p <= 0]
    if not left:
        return i + abs(r - i)
    return _walk(i, max(left) + 1, r)


def word_length(x: LampElement, gens: Gens | str = Gens.WREATH) -> int:
    return d_length(x) if Gens(gens) is Gens.WREATH else dprime_length(x)


def is_geodesic(word: str, m: int, gens: Gens | str | None = None) -> bool:
    gens = infer_gens(word) if gens is None else Gens(gens)
    return len(word) == word_length(evaluate(word, m), gens)


# --- canonical geodesics -------------------------------------------------


def _sweep_wreath(x: LampElement, mirror: bool) -> str:
    # right-first: walk to the rightmost lit bulb, light bulbs while sweeping
    # left, then walk to the cursor.  mirror=True gives the left-first version.
    order = sorted(x.bulbs, reverse=not mirror)
    here = 0
    out = []
    for pos, state in order:
        out.append(move(here, pos))
        out.append(power(symmetric_exponent(state, x.m)))
        here = pos
    out.append(move(here, x.cursor))
    return "".join(out)


def _canonical_automaton(x: LampElement) -> str:
    lit = {p for p, _ in x.bulbs}
    r = x.cursor
    lo_req = min(0, min(lit, default=1) - 1)
    if r <= 0:
        hi = max(0, max(lit, default=0))
        lo = min(r, lo_req)
        sweep = "".join("S" if p in lit else "T" for p in range(hi, lo, -1))
        return "t" * hi + sweep + "t" * (r - lo)
    lo = lo_req
    hi = max(r, max(lit, default=0))
    sweep = "".join("s" if p in lit else "t" for p in range(lo + 1, hi + 1))
    return "T" * (-lo) + sweep + "T" * (hi - r)


def canonical_geodesic(x: LampElement, gens: Gens | str = Gens.WREATH) -> str:
    """The unique representative accepted by the unique-geodesic counter machines.

    Wreath letters: right-first sweep when the cursor ends left of the origin,
    left-first otherwise.  Automaton letters (m = 2): the walk out to the far
    end and back, toggling each lit bulb on the single sweep that crosses it.
    """
    gens = Gens(gens)
    if gens is Gens.WREATH:
        return _sweep_wreath(x, mirror=x.cursor >= 0)
    if x.m != 2:
        raise UnsupportedModulus("the {t, ta} generating set is only used for m = 2")
    return _canonical_automaton(x)
