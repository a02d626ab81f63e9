"""Thompson's group F: words over {x0, x1}, normal forms in the infinite
generators x_i, and exact word length by meet-in-the-middle search.

A normal form is a pair (P, N) of nondecreasing index tuples standing for
x_{p_1} ... x_{p_a} x_{n_b}^{-1} ... x_{n_1}^{-1}.  Products are computed
with the relations x_j x_i = x_i x_{j+1} (i < j) and their consequences,
then reduced until no index i occurs in both P and N without i + 1
occurring in either.  The reduced form is unique.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .search import BudgetExceeded, LayeredBall, bidirectional_distance

GENERATORS = ("x0", "X0", "x1", "X1")
_TOKEN = re.compile(r"\s*([xX])(\d+)\s*")


class FWordError(ValueError):
    pass


def parse_word(text: str) -> tuple:
    """Tokens x<i> / X<i> (capital = inverse), optionally space separated.

    Indices above 1 are kept as tokens; use :func:`expand` to rewrite them
    over x0, x1.
    """
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None:
            raise FWordError(f"cannot parse {text[pos:]!r} at offset {pos}")
        out.append(mt.group(1) + str(int(mt.group(2))))
        pos = mt.end()
    return tuple(out)


def format_word(word) -> str:
    return " ".join(word)


def _split(tok: str) -> tuple[int, int]:
    return int(tok[1:]), (1 if tok[0] == "x" else -1)


def invert_word(word) -> tuple:
    return tuple(tok.swapcase()[0] + tok[1:] for tok in reversed(word))


def free_reduce(word) -> tuple:
    out: list[str] = []
    for tok in word:
        if out and out[-1] == tok.swapcase()[0] + tok[1:]:
            out.pop()
        else:
            out.append(tok)
    return tuple(out)


def x_n_expansion(n: int) -> tuple:
    """x_n over {x0, x1}: x0^{-(n-1)} x1 x0^{n-1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return ("X0",) * (n - 1) + ("x1",) + ("x0",) * (n - 1)


def expand(word) -> tuple:
    """Rewrite every x_i^{±1} with i >= 2 over {x0, x1} and freely reduce."""
    out = []
    for tok in word:
        i, s = _split(tok)
        if i <= 1:
            out.append(tok)
            continue
        piece = x_n_expansion(i)
        out.extend(piece if s > 0 else invert_word(piece))
    return free_reduce(out)


# --- normal forms ------------------------------------------------------------


@dataclass(frozen=True)
class FNormalForm:
    pos: tuple = ()
    neg: tuple = ()

    @property
    def is_identity(self) -> bool:
        return not self.pos and not self.neg

    def key(self) -> tuple:
        return (self.pos, self.neg)

    def word(self) -> tuple:
        """Word in the infinite generators."""
        return tuple(f"x{i}" for i in self.pos) + tuple(f"X{i}" for i in reversed(self.neg))

    def exponents(self) -> tuple[list, list]:
        """Run-length form: [(index, exponent)] for the positive and negative parts."""
        def runs(seq):
            out = []
            for i in seq:
                if out and out[-1][0] == i:
                    out[-1][1] += 1
                else:
                    out.append([i, 1])
            return [tuple(r) for r in out]
        return runs(self.pos), runs(reversed(self.neg))

    def __str__(self) -> str:
        return format_word(self.word()) or "1"

    def to_dict(self) -> dict:
        p, n = self.exponents()
        return {"positive": [list(r) for r in p], "negative": [list(r) for r in n], "word": str(self)}


IDENTITY = FNormalForm()


def _insert_sorted(seq: list, c: int) -> list:
    """Sort c into a positive word: x_p x_c = x_c x_{p+1} for p > c."""
    out = [p for p in seq if p <= c] + [c] + [p + 1 for p in seq if p > c]
    return out


def _reduce(pos: list, neg: list) -> FNormalForm:
    while True:
        ps, ns = set(pos), set(neg)
        bad = [i for i in ps & ns if i + 1 not in ps and i + 1 not in ns]
        if not bad:
            return FNormalForm(tuple(pos), tuple(neg))
        i = max(bad)
        pos.remove(i)
        neg.remove(i)
        pos = [p - 1 if p > i else p for p in pos]
        neg = [n - 1 if n > i else n for n in neg]


def mul_gen(x: FNormalForm, k: int, sign: int) -> FNormalForm:
    """x * x_k^{sign}."""
    if sign > 0:
        c = k
        neg = list(x.neg)
        kept = []
        cancelled = False
        for n in neg:  # rightmost negative letter has the smallest index
            if cancelled:
                kept.append(n)
            elif n < c:
                c += 1
                kept.append(n)
            elif n == c:
                cancelled = True
            else:
                kept.append(n + 1)
        if cancelled:
            return _reduce(list(x.pos), kept)
        return _reduce(_insert_sorted(list(x.pos), c), kept)
    return _reduce(list(x.pos), _insert_neg(list(x.neg), k))


def _insert_neg(neg: list, k: int) -> list:
    # x_k x_{n_1} x_{n_2} ... sorted: pass x_k right over smaller indices
    c = k
    out = []
    for idx, n in enumerate(neg):
        if n < c:
            out.append(n)
            c += 1
        else:
            return out + [c] + neg[idx:]
    return out + [c]


def multiply(x: FNormalForm, y: FNormalForm) -> FNormalForm:
    for tok in y.word():
        i, s = _split(tok)
        x = mul_gen(x, i, s)
    return x


def rewrite_to_nf(word) -> FNormalForm:
    if isinstance(word, str):
        word = parse_word(word)
    x = IDENTITY
    for tok in word:
        i, s = _split(tok)
        x = mul_gen(x, i, s)
    return x


def nf_inverse(x: FNormalForm) -> FNormalForm:
    return rewrite_to_nf(invert_word(x.word()))


# --- the seesaw family ---------------------------------------------------------


def seesaw_indices(k: int) -> tuple[list, list]:
    """(positive tokens, negative tokens) of the family member of swing k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    head = ["x0"] * k + ["x1", f"x{3 * k + 3}"]
    tail = [f"X{i}" for i in range(3 * k + 2, k + 1, -2)] + ["X0"] * (k + 1)
    return head, tail


def seesaw_infinite(k: int) -> tuple:
    head, tail = seesaw_indices(k)
    return tuple(head + tail)


def seesaw_element(k: int) -> tuple:
    """The swing-k family member over {x0, x1}, freely reduced."""
    return expand(seesaw_infinite(k))


# --- distances -----------------------------------------------------------------


def _neighbours(x: FNormalForm):
    return [mul_gen(x, 0, 1), mul_gen(x, 0, -1), mul_gen(x, 1, 1), mul_gen(x, 1, -1)]


@lru_cache(maxsize=1)
def _identity_ball() -> LayeredBall:
    return LayeredBall(IDENTITY, _neighbours)


DEFAULT_BUDGET = 2_000_000


def distance_bidirectional(target, cap: int, budget: Optional[int] = DEFAULT_BUDGET) -> Optional[int]:
    """Word length over {x0^±1, x1^±1} if it is <= cap, else None.

    Raises BudgetExceeded when the two half-balls together would exceed
    ``budget`` nodes.
    """
    if cap < 0:
        raise ValueError("cap must be >= 0")
    goal = target if isinstance(target, FNormalForm) else rewrite_to_nf(target)
    if goal.is_identity:
        return 0
    start = _identity_ball()
    return bidirectional_distance(start, LayeredBall(goal, _neighbours), cap, budget)


@dataclass
class ClauseResult:
    name: str
    status: str  # verified | refuted | cap-exceeded | budget-exceeded
    detail: dict

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class SeesawReport:
    k: int
    cap: int
    word: str
    length: Optional[int]
    clauses: list

    @property
    def status(self) -> str:
        states = {c.status for c in self.clauses}
        for s in ("refuted", "budget-exceeded", "cap-exceeded"):
            if s in states:
                return s
        return "verified"

    def to_dict(self) -> dict:
        return {"k": self.k, "cap": self.cap, "word": self.word, "length": self.length,
                "status": self.status, "clauses": [c.to_dict() for c in self.clauses]}


def verify_seesaw(k: int, cap: int = 24, budget: Optional[int] = DEFAULT_BUDGET) -> SeesawReport:
    """Check the seesaw clauses for the swing-k family member with g = x0.

    Clauses: |w x0^{±l}| = |w x0^{±(l-1)}| - 1 for 1 <= l <= k, and
    |w x0^{±m} h| >= |w x0^{±m}| for h = x1^{±1}, 0 <= m <= k - 1.
    A lower bound ">= d" is verified when the neighbour is beyond the cap
    and d <= cap.
    """
    word = seesaw_element(k)
    w = rewrite_to_nf(word)
    memo: dict = {}
    budget_hit = []

    def dist(x: FNormalForm) -> Optional[int]:
        if x not in memo:
            try:
                memo[x] = distance_bidirectional(x, cap, budget)
            except BudgetExceeded:
                memo[x] = None
                budget_hit.append(x)
        return memo[x]

    def unknown() -> str:
        return "budget-exceeded" if budget_hit else "cap-exceeded"

    clauses = []
    base = dist(w)
    for sign, label in ((1, "x0"), (-1, "X0")):
        path = [w]
        for _ in range(k):
            path.append(mul_gen(path[-1], 0, sign))
        dists = [dist(p) for p in path]
        if any(d is None for d in dists):
            status = unknown()
        elif all(dists[l] == dists[l - 1] - 1 for l in range(1, k + 1)):
            status = "verified"
        else:
            status = "refuted"
        clauses.append(ClauseResult(f"descent along {label}", status, {"lengths": dists}))
        for mm in range(0 if sign > 0 else 1, k):
            y, dy = path[mm], dists[mm]
            side = {}
            results = set()
            for tok, s in (("x1", 1), ("X1", -1)):
                dz = dist(mul_gen(y, 1, s))
                side[tok] = dz
                if dy is None or (dz is None and dy > cap):
                    results.add("unknown")
                elif dz is not None and dz < dy:
                    results.add("refuted")
            if "refuted" in results:
                status = "refuted"
            elif results:
                status = unknown()
            else:
                status = "verified"
            clauses.append(ClauseResult(f"x1 steady at w {label}^{mm}", status,
                                        {"length": dy, "neighbours": side}))
    return SeesawReport(k, cap, format_word(word), base, clauses)
