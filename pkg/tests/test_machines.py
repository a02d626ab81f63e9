import pytest

from geolang import lab, lamp, machines, oracle
from geolang.lamp import Gens, LampElement, evaluate


def g(n):
    return LampElement.make(2, {n: 1, -n: 1}, 0)


class TestSmallMachines:
    def test_anbn(self):
        p = machines.pda_anbn()
        assert p.accepts("ab") and p.accepts("") and not p.accepts("ba")

    def test_anbnan(self):
        c = machines.counter_anbnan()
        assert c.k == 2
        assert c.accepts("aabbaa") and c.accepts("") and not c.accepts("aabba")


class TestUniqueWreath:
    def test_g1(self):
        c = machines.counter_unique_wreath(2)
        assert c.accepts(lamp.canonical_geodesic(g(1)))
        assert not c.accepts("taTTat")
        assert not c.accepts("tT")
        assert c.accepts("")

    @pytest.mark.parametrize("m", [2, 3, 4, 5])
    def test_bijection_radius_6(self, m):
        c = machines.counter_unique_wreath(m)
        words = c.enumerate_language(6)
        elems = [evaluate(w, m) for w in words]
        b = oracle.ball(m, "wreath", 6)
        assert len(set(elems)) == len(elems) == len(b)
        assert all(b.distance(x) == len(w) for w, x in zip(words, elems))

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_accepts_canonical(self, m):
        c = machines.counter_unique_wreath(m)
        for layer in oracle.ball(m, "wreath", 5).spheres:
            for x in layer:
                assert c.accepts(lamp.canonical_geodesic(x))

    def test_m4_labels(self):
        c = machines.counter_unique_wreath(4)
        labels = {e.label for e in c.edges}
        assert {"a", "A", "aa"} <= labels and "AA" not in labels

    def test_bad_modulus(self):
        with pytest.raises(lamp.InvalidModulus):
            machines.counter_unique_wreath(1)


class TestFullWreath:
    def test_two_geodesics_of_g2(self):
        p = machines.pda_full_wreath()
        assert p.accepts("ttaTTTTatt")
        assert p.accepts("TTattttaTT")
        assert not p.accepts("tT")

    def test_stack_symbols(self):
        p = machines.pda_full_wreath()
        assert set(p.stack_alphabet) == {"$", "#", "0", "1"}
        assert {e.sym for e in p.edges if e.sym} == {"$", "#", "0", "1"}

    def test_m_other_than_two(self):
        with pytest.raises(lamp.UnsupportedModulus):
            machines.pda_full_wreath(3)

    def test_multiplicity_witness(self):
        p = machines.pda_full_wreath()
        x = LampElement.make(2, {1: 1, 2: 1, 3: 1}, -1)
        for w in oracle.all_geodesics(x):
            assert p.accepts(w)

    def test_oracle_length_10(self):
        rep = lab.verify_geodesic_language(machines.pda_full_wreath(), 2, "wreath", 10)
        assert rep.passed and rep.accepted == rep.geodesics == 1964


class TestTta:
    def test_unique_g1_length(self):
        c = machines.counter_unique_tta()
        got = [w for w in c.enumerate_language(6) if evaluate(w, 2) == g(1)]
        assert len(got) == 1 and len(got[0]) == 6

    def test_unique_identity(self):
        assert machines.counter_unique_tta().accepts("")

    def test_unique_bijection_radius_8(self):
        rep = lab.verify_geodesic_language(machines.counter_unique_tta(), 2, "automaton", 8, "unique")
        assert rep.passed

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_full_accepts_two_bulb_word(self, n):
        w = "t" * n + "S" + "T" * (2 * n) + "s" + "t" * n
        assert evaluate(w, 2) == g(n)
        assert machines.counter_full_tta().accepts(w)

    @pytest.mark.parametrize("n", [1, 2])
    def test_full_accepts_every_geodesic_of_g(self, n):
        c = machines.counter_full_tta()
        words = oracle.all_geodesics(g(n), "automaton", cap=12)
        assert len(words) > 2
        assert all(c.accepts(w) for w in words)

    def test_full_uses_one_counter(self):
        assert machines.counter_full_tta().k == 1

    def test_full_accepts_identity(self):
        assert machines.counter_full_tta().accepts("")

    def test_full_oracle_length_9(self):
        rep = lab.verify_geodesic_language(machines.counter_full_tta(), 2, "automaton", 9)
        assert rep.passed


def test_build_unknown():
    with pytest.raises(KeyError):
        machines.build("nope")


def test_soundness_by_formula():
    # every accepted word of every geodesic machine is geodesic by the length formula
    for name, (gens, _) in machines.GEODESIC_MACHINES.items():
        for w in machines.build(name).enumerate_language(8):
            assert lamp.is_geodesic(w, 2, gens), (name, w)
