import random
from fractions import Fraction as Fr
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geolang import thompson as T
from geolang.search import BudgetExceeded

# --- independent model: F as piecewise-linear maps of [0, 1] -------------------


def pl(breaks):
    """Map given by breakpoints [(x, y), ...] from (0, 0) to (1, 1)."""
    def f(x):
        for (x0, y0), (x1, y1) in zip(breaks, breaks[1:]):
            if x0 <= x <= x1:
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        raise ValueError(x)
    return f


def inv(breaks):
    return [(y, x) for x, y in breaks]


X0 = [(Fr(0), Fr(0)), (Fr(1, 2), Fr(1, 4)), (Fr(3, 4), Fr(1, 2)), (Fr(1), Fr(1))]
X1 = [(Fr(0), Fr(0)), (Fr(1, 2), Fr(1, 2)), (Fr(3, 4), Fr(5, 8)), (Fr(7, 8), Fr(3, 4)), (Fr(1), Fr(1))]
MAPS = {"x0": pl(X0), "X0": pl(inv(X0)), "x1": pl(X1), "X1": pl(inv(X1))}
PROBES = [Fr(k, 2 ** 9) for k in range(2 ** 9 + 1)] + [Fr(1, 3), Fr(2, 7), Fr(5, 11)]


def act(word):
    """Action of the word on probe points, composed as functions (rightmost letter first)."""
    pts = list(PROBES)
    for tok in reversed(word):
        f = MAPS[tok]
        pts = [f(p) for p in pts]
    return tuple(pts)


IDENT = tuple(PROBES)
words_f = st.lists(st.sampled_from(T.GENERATORS), max_size=14).map(tuple)


def commutator(a, b):
    return tuple(a) + tuple(b) + T.invert_word(a) + T.invert_word(b)


REL10 = commutator(T.parse_word("x0 X1"), T.parse_word("X0 x1 x0"))
REL14 = commutator(T.parse_word("x0 X1"), T.parse_word("X0 X0 x1 x0 x0"))


class TestModel:
    def test_relators_in_the_model(self):
        assert act(REL10) == IDENT and act(REL14) == IDENT

    def test_generators_nontrivial(self):
        assert act(("x0",)) != IDENT and act(("x1",)) != IDENT


class TestParse:
    def test_tokens(self):
        assert T.parse_word("x0 x1 X0") == ("x0", "x1", "X0")
        assert T.parse_word("x0x12X3") == ("x0", "x12", "X3")
        assert T.parse_word("") == ()

    def test_bad(self):
        with pytest.raises(T.FWordError):
            T.parse_word("x0 y1")


class TestNormalForm:
    def test_relators(self):
        assert len(REL10) == 10 and len(REL14) == 14
        assert T.rewrite_to_nf(REL10).is_identity
        assert T.rewrite_to_nf(REL14).is_identity

    def test_empty(self):
        assert T.rewrite_to_nf(()) == T.IDENTITY

    def test_conjugate_x1(self):
        assert T.rewrite_to_nf("X0 x1 x0") == T.FNormalForm((2,), ())

    @pytest.mark.parametrize("i,j", [(i, j) for j in range(7) for i in range(j)])
    def test_infinite_relation(self, i, j):
        lhs = T.rewrite_to_nf(T.expand((f"X{i}", f"x{j}", f"x{i}")))
        assert lhs == T.rewrite_to_nf(T.x_n_expansion(j + 1)) == T.FNormalForm((j + 1,), ())

    def test_format(self):
        nf = T.rewrite_to_nf(T.seesaw_element(1))
        assert str(nf) == "x0 x1 x6 X5 X3 X0 X0"
        assert nf.exponents() == ([(0, 1), (1, 1), (6, 1)], [(5, 1), (3, 1), (0, 2)])
        assert str(T.IDENTITY) == "1"

    @given(words_f, words_f)
    def test_homomorphism(self, u, v):
        assert T.rewrite_to_nf(u + v) == T.multiply(T.rewrite_to_nf(u), T.rewrite_to_nf(v))

    @given(words_f)
    def test_nf_word_is_equal(self, w):
        nf = T.rewrite_to_nf(w)
        assert T.rewrite_to_nf(T.expand(nf.word())) == nf
        assert act(T.expand(nf.word())) == act(w)

    @settings(max_examples=400)
    @given(words_f, words_f)
    def test_equal_forms_iff_equal_maps(self, u, v):
        assert (T.rewrite_to_nf(u) == T.rewrite_to_nf(v)) == (act(u) == act(v))

    @given(words_f)
    def test_inverse(self, w):
        assert T.multiply(T.rewrite_to_nf(w), T.nf_inverse(T.rewrite_to_nf(w))).is_identity

    @given(words_f)
    def test_form_is_reduced(self, w):
        nf = T.rewrite_to_nf(w)
        assert list(nf.pos) == sorted(nf.pos) and list(nf.neg) == sorted(nf.neg)
        for i in set(nf.pos) & set(nf.neg):
            assert i + 1 in nf.pos or i + 1 in nf.neg


class TestExpansion:
    def test_small(self):
        assert T.x_n_expansion(1) == ("x1",)
        assert T.x_n_expansion(2) == ("X0", "x1", "x0")
        assert len(T.x_n_expansion(6)) == 11

    def test_bad(self):
        with pytest.raises(ValueError):
            T.x_n_expansion(0)


class TestSeesawFamily:
    def test_k1_pattern(self):
        assert T.seesaw_infinite(1) == ("x0", "x1", "x6", "X5", "X3", "X0", "X0")

    def test_k2_pattern(self):
        assert T.seesaw_infinite(2) == ("x0", "x0", "x1", "x9", "X8", "X6", "X4", "X0", "X0", "X0")

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_nontrivial_and_reduced(self, k):
        w = T.seesaw_element(k)
        assert set(w) <= set(T.GENERATORS)
        assert T.free_reduce(w) == w
        assert not T.rewrite_to_nf(w).is_identity
        assert T.rewrite_to_nf(w) == T.rewrite_to_nf(T.expand(T.seesaw_infinite(k)))
        assert act(w) == act(T.expand(T.seesaw_infinite(k)))

    def test_bad_k(self):
        with pytest.raises(ValueError):
            T.seesaw_element(0)


def brute_force_lengths(n):
    best = {}
    for k in range(n + 1):
        for w in product(T.GENERATORS, repeat=k):
            best.setdefault(T.rewrite_to_nf(w), k)
    return best


class TestDistance:
    def test_identity(self):
        assert T.distance_bidirectional((), 0) == 0

    def test_x2(self):
        assert T.distance_bidirectional(T.parse_word("x2"), 5) == 3

    def test_relator(self):
        assert T.distance_bidirectional(REL14, 3) == 0

    def test_cap(self):
        assert T.distance_bidirectional(T.parse_word("x2"), 2) is None

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            T.distance_bidirectional(T.seesaw_element(2), 30, budget=50)

    def test_against_enumeration(self):
        best = brute_force_lengths(5)
        rng = random.Random(7)
        for x in rng.sample(sorted(best, key=str), 200):
            assert T.distance_bidirectional(x, 8) == best[x]

    @given(st.lists(st.sampled_from(T.GENERATORS), max_size=6).map(tuple))
    def test_zero_iff_identity(self, w):
        d = T.distance_bidirectional(w, 8)
        assert d is not None and d <= len(w)
        assert (d == 0) == T.rewrite_to_nf(w).is_identity


class TestVerifySeesaw:
    def test_k1(self):
        rep = T.verify_seesaw(1, 24)
        assert rep.status == "verified"
        assert rep.length == 11
        names = [c.name for c in rep.clauses]
        assert names == ["descent along x0", "x1 steady at w x0^0", "descent along X0"]

    def test_cap_zero(self):
        rep = T.verify_seesaw(1, 0)
        assert rep.status == "cap-exceeded"
        assert rep.length is None

    def test_tight_cap_still_decides_lower_bounds(self):
        rep = T.verify_seesaw(1, 11)
        assert rep.status == "verified"

    def test_budget_reported(self):
        rep = T.verify_seesaw(1, 24, budget=10)
        assert rep.status == "budget-exceeded"

    def test_dict(self):
        d = T.verify_seesaw(1, 24).to_dict()
        assert d["status"] == "verified" and len(d["clauses"]) == 3
