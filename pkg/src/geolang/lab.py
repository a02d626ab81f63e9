"""Language experiments on lamplighter geodesics: machine-vs-oracle checks,
pumping witnesses, square-free words and the block-swap test.
"""

from __future__ import annotations

import re
from dataclasses import asdict, dataclass, field
from itertools import count

from . import oracle
from .automata import Automaton
from .lamp import Gens, LampElement, d_length, evaluate, power, word_length


# --- machine verification -----------------------------------------------------


@dataclass
class VerificationReport:
    max_len: int
    mode: str
    accepted: int = 0
    geodesics: int = 0
    soundness_violations: list = field(default_factory=list)
    completeness_violations: list = field(default_factory=list)
    uniqueness_violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.soundness_violations or self.completeness_violations or self.uniqueness_violations)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def verify_geodesic_language(
    machine: Automaton,
    m: int,
    gens: Gens | str,
    max_len: int,
    mode: str = "full",
    limit: int = 20,
) -> VerificationReport:
    """Compare the machine's words of length <= max_len with the oracle.

    ``full``: accepted words must be exactly the geodesics.
    ``unique``: accepted words must be geodesic and every element of the
    radius-max_len ball must have exactly one accepted word.
    At most ``limit`` violations of each kind are listed.
    """
    if mode not in ("full", "unique"):
        raise ValueError(f"mode must be 'full' or 'unique', not {mode!r}")
    gens = Gens(gens)
    words = machine.enumerate_language(max_len)
    b = oracle.ball(m, gens, max_len)
    rep = VerificationReport(max_len, mode, accepted=len(words))
    reps: dict[LampElement, list[str]] = {}
    for w in words:
        x = evaluate(w, m)
        if b.dist.get(x) != len(w):
            if len(rep.soundness_violations) < limit:
                rep.soundness_violations.append(w)
        reps.setdefault(x, []).append(w)
    if mode == "full":
        geo = oracle.geodesic_words(b, max_len)
        rep.geodesics = len(geo)
        accepted = set(words)
        missing = [w for w in geo if w not in accepted]
        rep.completeness_violations = missing[:limit]
    else:
        rep.geodesics = len(b)
        for layer in b.spheres:
            for x in layer:
                got = reps.get(x, [])
                if len(got) != 1 and len(rep.uniqueness_violations) < limit:
                    rep.uniqueness_violations.append({"element": x.to_dict(), "words": got})
    return rep


# --- pumping ---------------------------------------------------------------


@dataclass
class PumpRow:
    i: int
    j: int
    word: str
    length: int
    distance: int
    expected_distance: int

    @property
    def non_geodesic(self) -> bool:
        return self.length > self.distance


@dataclass
class PumpingRecord:
    n: int
    gens: str
    word: str
    word_distance: int
    rows: list

    @property
    def passed(self) -> bool:
        return (self.word_distance == len(self.word)
                and all(r.non_geodesic and r.distance == r.expected_distance for r in self.rows))

    def to_dict(self) -> dict:
        return {
            "n": self.n, "gens": self.gens, "word": self.word, "word_distance": self.word_distance,
            "rows": [dict(asdict(r), non_geodesic=r.non_geodesic) for r in self.rows],
            "passed": self.passed,
        }


def pumping_word(n: int, gens: Gens | str = Gens.WREATH) -> tuple[str, str]:
    """(prefix, rest) of the geodesic for the two-bulb element g_n."""
    if Gens(gens) is Gens.WREATH:
        return "t" * n, "a" + "T" * (2 * n) + "a" + "t" * n
    return "t" * n, "S" + "T" * (2 * n) + "s" + "t" * n


def pumping_witness(n: int, gens: Gens | str = Gens.WREATH) -> PumpingRecord:
    """Pump every nonempty factor y of the t^n prefix once (x y y z).

    The pumped word has length 4n + j + 2 but its element only needs 4n - j + 2.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    gens = Gens(gens)
    prefix, rest = pumping_word(n, gens)
    word = prefix + rest
    rows = []
    for i in range(n):
        for j in range(1, n - i + 1):
            pumped = prefix[:i] + prefix[i:i + j] * 2 + prefix[i + j:] + rest
            x = evaluate(pumped, 2)
            rows.append(PumpRow(i, j, pumped, len(pumped), word_length(x, gens), 4 * n - j + 2))
    return PumpingRecord(n, gens.value, word, word_length(evaluate(word, 2), gens), rows)


# --- square-free words --------------------------------------------------------


def thue_morse(n: int) -> list[int]:
    return [bin(k).count("1") & 1 for k in range(n)]


def squarefree_word(length: int) -> str:
    """Square-free word over {1, 2, 3}.

    Letter i is one more than the number of 1s between the i-th and (i+1)-th
    zero of the Thue-Morse sequence.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    out = []
    ones = None
    for k in count():
        if bin(k).count("1") & 1:
            if ones is not None:
                ones += 1
            continue
        if ones is not None:
            out.append(str(ones + 1))
            if len(out) == length:
                return "".join(out)
        ones = 0


def is_squarefree(word: str) -> bool:
    n = len(word)
    for half in range(1, n // 2 + 1):
        for start in range(n - 2 * half + 1):
            if word[start:start + half] == word[start + half:start + 2 * half]:
                return False
    return True


# --- t-exponent encoding -------------------------------------------------------


class EncodingError(ValueError):
    pass


def decode(e, m: int) -> str:
    """Blocks t^{e_i} a^h (T^{-e_i} a^h for negative e_i), with h = m // 2."""
    h = m // 2
    out = []
    for v in e:
        v = int(v)
        if v == 0 or abs(v) > 3:
            raise EncodingError(f"exponent {v} is not in ±{{1, 2, 3}}")
        out.append(("t" * v if v > 0 else "T" * -v) + power(h))
    return "".join(out)


def encode_t_exponents(word: str, m: int) -> list[int]:
    h = m // 2
    block = re.compile(r"(t{1,3}|T{1,3})" + re.escape(power(h)))
    out = []
    pos = 0
    while pos < len(word):
        mt = block.match(word, pos)
        if mt is None:
            raise EncodingError(f"{word!r} is not a sequence of t^e a^{h} blocks (offset {pos})")
        run = mt.group(1)
        out.append(len(run) if run[0] == "t" else -len(run))
        pos = mt.end()
    return out


def format_encoding(e) -> str:
    return "".join(str(v) if v > 0 else f"({v})" for v in e)


# --- swap test ----------------------------------------------------------------


def lighting_suffix(e, m: int) -> list[int]:
    """Negative exponents lighting every still-dark bulb in 1..sum(e), right to left.

    Each step walks to the nearest dark bulb on the left.
    """
    lit = set()
    pos = 0
    for v in e:
        pos += v
        lit.add(pos)
    suffix = []
    here = pos
    for p in range(pos - 1, 0, -1):
        if p not in lit:
            suffix.append(p - here)
            here = p
    return suffix


@dataclass
class SwapRow:
    index: int
    encoding: str
    word: str
    length: int
    distance: int
    failure: str

    @property
    def non_geodesic(self) -> bool:
        return self.length > self.distance


@dataclass
class SwapRecord:
    m: int
    positive: str
    suffix: str
    word: str
    length: int
    distance: int
    swaps: list
    skipped: list

    @property
    def geodesic(self) -> bool:
        return self.length == self.distance

    @property
    def passed(self) -> bool:
        return self.geodesic and all(s.non_geodesic for s in self.swaps)

    def to_dict(self) -> dict:
        return {
            "m": self.m, "positive": self.positive, "suffix": self.suffix, "word": self.word,
            "length": self.length, "distance": self.distance, "geodesic": self.geodesic,
            "swaps": [dict(asdict(s), non_geodesic=s.non_geodesic) for s in self.swaps],
            "skipped": self.skipped, "passed": self.passed,
        }


def swap_demo(len_positive: int, m: int = 2, positive=None) -> SwapRecord:
    """Light bulbs 1..N to state h with a square-free positive part, then swap blocks.

    Swapping two adjacent distinct blocks of the positive part moves one lit
    bulb onto a position that the (unchanged) suffix lights again, so that
    bulb ends in state 2h: switched off when 2h = m, or state m - 1 reached
    the long way when 2h = m - 1.
    """
    if len_positive < 2:
        raise ValueError("need at least two positive blocks")
    if positive is None:
        positive = [int(c) for c in squarefree_word(len_positive)]
    positive = list(positive)
    suffix = lighting_suffix(positive, m)
    word = decode(positive + suffix, m)
    dist = d_length(evaluate(word, m))
    h = m // 2
    mode = "2h = m: a bulb is switched on and off again" if 2 * h == m else \
        "2h = m - 1: a bulb is pushed to state m - 1 the long way"
    swaps, skipped = [], []
    for i in range(len(positive) - 1):
        if positive[i] == positive[i + 1]:
            skipped.append(i)
            continue
        sw = positive[:i] + [positive[i + 1], positive[i]] + positive[i + 2:]
        w2 = decode(sw + suffix, m)
        swaps.append(SwapRow(i, format_encoding(sw + suffix), w2, len(w2), d_length(evaluate(w2, m)), mode))
    return SwapRecord(m, format_encoding(positive), format_encoding(suffix), word, len(word), dist, swaps, skipped)
