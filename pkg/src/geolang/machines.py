"""Concrete machines: the two small textbook examples and the lamplighter
geodesic acceptors.

Lamplighter machines use one counter (or the stack) to track the cursor.
A geodesic walk for an element whose cursor ends at r <= 0 goes right to the
rightmost lit bulb, then left to the leftmost point it must reach, then right
to r ("right-first").  The mirror image handles r >= 0 ("left-first").  The
counter rejects a walk on the wrong side of the origin at the end, so no
state has to remember the cursor.
"""

from __future__ import annotations

from typing import Callable

from .automata import CounterMachine, Edge, PushdownMachine, union
from .lamp import Gens, UnsupportedModulus, _check_modulus, generators, power

# --- textbook examples ---------------------------------------------------


def pda_anbn() -> PushdownMachine:
    """{a^n b^n : n >= 0}."""
    edges = [
        Edge("q0", "qa", "", op="push", sym="$"),
        Edge("qa", "qa", "a", op="push", sym="1"),
        Edge("qa", "qb", ""),
        Edge("qb", "qb", "b", op="pop", sym="1"),
        Edge("qb", "A", "", op="pop", sym="$"),
    ]
    return PushdownMachine(("q0", "qa", "qb", "A"), "q0", {"A"}, edges, "ab", stack_alphabet="$1")


def counter_anbn() -> CounterMachine:
    """{a^n b^n : n >= 0} with one blind counter."""
    edges = [
        Edge("q0", "q0", "a", (1,)),
        Edge("q0", "A", "", (0,)),
        Edge("A", "A", "b", (-1,)),
    ]
    return CounterMachine(("q0", "A"), "q0", {"A"}, edges, "ab", k=1)


def counter_anbnan() -> CounterMachine:
    """{a^n b^n a^n : n >= 0} with two blind counters.

    Three states are needed: with only two, the b-loop and the second a-loop
    share a state and "aab" would be accepted.
    """
    edges = [
        Edge("q0", "q0", "a", (1, 1)),
        Edge("q0", "qb", "", (0, 0)),
        Edge("qb", "qb", "b", (-1, 0)),
        Edge("qb", "A", "", (0, 0)),
        Edge("A", "A", "a", (0, -1)),
    ]
    return CounterMachine(("q0", "qb", "A"), "q0", {"A"}, edges, "ab", k=2)


# --- unique geodesics over {a, t} --------------------------------------------


def _a_labels(m: int) -> list[str]:
    h = m // 2
    ks = [k for k in range(-h, h + 1) if k != 0 and not (m % 2 == 0 and k == -h)]
    return [power(k) for k in ks]


def _unique_wreath_half(m: int, left_first: bool) -> CounterMachine:
    # right-first: t^* or T^* to the first lit bulb, then a left sweep
    # lighting bulbs, then a final walk to the cursor.  Left-first is the
    # mirror image.  The counter is the cursor position.
    fwd, back = ("T", "t") if left_first else ("t", "T")
    sf, sb = (-1, 1) if left_first else (1, -1)
    labels = _a_labels(m)
    e = [
        Edge("q0", "out", fwd, (sf,)),
        Edge("out", "out", fwd, (sf,)),
        Edge("q0", "near", back, (sb,)),
        Edge("near", "near", back, (sb,)),
    ]
    for lab in labels:
        for src in ("q0", "out", "near"):
            e.append(Edge(src, "lit", lab, (0,)))
        e.append(Edge("gap", "lit", lab, (0,)))
    e += [
        Edge("lit", "gap", back, (sb,)),
        Edge("gap", "gap", back, (sb,)),
        Edge("lit", "home", fwd, (sf,)),
        Edge("home", "home", fwd, (sf,)),
    ]
    states = ["q0", "out", "near", "lit", "gap", "home", "A"]
    if left_first:
        # final cursor >= 0: enter A with no change, then drain positive values
        for src in ("q0", "near", "lit", "gap", "home"):
            e.append(Edge(src, "A", "", (0,)))
        e.append(Edge("A", "A", "", (-1,)))
    else:
        # final cursor < 0: at least one increment is needed to reach zero
        for src in ("near", "lit", "gap", "home"):
            e.append(Edge(src, "A", "", (1,)))
        e.append(Edge("A", "A", "", (1,)))
    return CounterMachine(tuple(states), "q0", {"A"}, e, generators(Gens.WREATH, m), k=1)


def counter_unique_wreath(m: int = 2) -> CounterMachine:
    """One geodesic over {a, t} per element of L_m."""
    _check_modulus(m)
    return union([_unique_wreath_half(m, False), _unique_wreath_half(m, True)])


# --- unique geodesics over {t, ta} -------------------------------------------


def _unique_tta_right() -> CounterMachine:
    # cursor ends at r <= 0: t^hi, then a left sweep over {T, S}, then t^*.
    # The sweep starts with S when hi > 0 and the final t^* needs the sweep
    # to end with S.
    e = [
        Edge("q0", "R", "t", (1,)),
        Edge("R", "R", "t", (1,)),
        Edge("R", "XS", "S", (-1,)),
        Edge("q0", "XS", "S", (-1,)),
        Edge("q0", "XT", "T", (-1,)),
        Edge("XS", "XS", "S", (-1,)),
        Edge("XS", "XT", "T", (-1,)),
        Edge("XT", "XS", "S", (-1,)),
        Edge("XT", "XT", "T", (-1,)),
        Edge("XS", "F", "t", (1,)),
        Edge("F", "F", "t", (1,)),
    ]
    for src in ("q0", "XS", "XT", "F"):
        e.append(Edge(src, "A", "", (0,)))
    e.append(Edge("A", "A", "", (1,)))
    return CounterMachine(("q0", "R", "XS", "XT", "F", "A"), "q0", {"A"}, e, "STst", k=1)


def _unique_tta_left() -> CounterMachine:
    # cursor ends at r > 0: T^a, then a right sweep over {t, s}, then T^*.
    e = [
        Edge("q0", "L", "T", (-1,)),
        Edge("L", "L", "T", (-1,)),
        Edge("L", "Ys", "s", (1,)),
        Edge("q0", "Ys", "s", (1,)),
        Edge("q0", "Yt", "t", (1,)),
        Edge("Ys", "Ys", "s", (1,)),
        Edge("Ys", "Yt", "t", (1,)),
        Edge("Yt", "Ys", "s", (1,)),
        Edge("Yt", "Yt", "t", (1,)),
        Edge("Ys", "F", "T", (-1,)),
        Edge("F", "F", "T", (-1,)),
    ]
    for src in ("Ys", "Yt", "F"):
        e.append(Edge(src, "A", "", (-1,)))
    e.append(Edge("A", "A", "", (-1,)))
    return CounterMachine(("q0", "L", "Ys", "Yt", "F", "A"), "q0", {"A"}, e, "STst", k=1)


def counter_unique_tta() -> CounterMachine:
    """One geodesic over {t, s = ta} per element of L_2."""
    return union([_unique_tta_right(), _unique_tta_left()])


# --- all geodesics over {t, ta} ----------------------------------------------


def _full_tta_case(left_first: bool, outward: bool) -> CounterMachine:
    """All geodesics of one walk shape over {t, s}.

    Right-first (r <= 0): out over {t, s} to the rightmost point, back over
    {T, S}, then forward over {t, s}.  ``outward`` selects whether the first
    leg is nonempty.  At each turning point the extreme bulb is toggled
    exactly once, by the letter on one side of the turn but not both.
    Left-first is the mirror image, with r >= 0.
    """
    if left_first:
        up, up_lit, dn, dn_lit = "T", "S", "t", "s"
        su, sd = -1, 1
    else:
        up, up_lit, dn, dn_lit = "t", "s", "T", "S"
        su, sd = 1, -1
    e = []
    states = ["q0", "Bp", "Bl", "Cp", "Cl", "A"]
    if outward:
        states[1:1] = ["Op", "Ol"]
        e += [Edge("q0", "Op", up, (su,)), Edge("q0", "Ol", up_lit, (su,))]
        for src in ("Op", "Ol"):
            e += [Edge(src, "Op", up, (su,)), Edge(src, "Ol", up_lit, (su,))]
        # turning at the far end: exactly one of arrival/departure toggles
        e += [Edge("Ol", "Bp", dn, (sd,)), Edge("Op", "Bl", dn_lit, (sd,))]
    else:
        e += [Edge("q0", "Bp", dn, (sd,)), Edge("q0", "Bl", dn_lit, (sd,))]
    for src in ("Bp", "Bl"):
        e += [Edge(src, "Bp", dn, (sd,)), Edge(src, "Bl", dn_lit, (sd,))]
    e += [Edge("Bl", "Cp", up, (su,)), Edge("Bp", "Cl", up_lit, (su,))]
    for src in ("Cp", "Cl"):
        e += [Edge(src, "Cp", up, (su,)), Edge(src, "Cl", up_lit, (su,))]
    finals = ["Bp", "Bl", "Cp", "Cl"] + ([] if outward else ["q0"])
    for src in finals:
        e.append(Edge(src, "A", "", (0,)))
    # right-first needs r <= 0, left-first r >= 0
    e.append(Edge("A", "A", "", (su,)))
    return CounterMachine(tuple(states), "q0", {"A"}, e, "STst", k=1)


def counter_full_tta() -> CounterMachine:
    """All geodesics over {t, s = ta}: a union of four 1-counter machines."""
    return union([_full_tta_case(lf, out) for lf in (False, True) for out in (False, True)])


# --- all geodesics over {a, t}, m = 2 -----------------------------------------


def _full_wreath_case(left_first: bool, outward: bool) -> PushdownMachine:
    """All geodesics of one walk shape over {a, t} for L_2.

    Right-first walk 0 -> I -> L -> r.  Positions crossed twice carry one
    stack record each (1 = toggled on the first visit, 0 = not), so the second
    visit may toggle only when the first did not.  The bottom marker is $ when
    bulb 0 is still off and # when it has been toggled.  ``outward`` selects
    I > 0.  Left-first swaps t and T.
    """
    fw, bw = ("T", "t") if left_first else ("t", "T")
    fa, ba = fw + "a", bw + "a"
    E = Edge
    e = [
        E("q0", "Start", "", op="push", sym="$"),
        E("q0", "Start", "a", op="push", sym="#"),
    ]
    states = ["q0", "Start", "N", "F", "End", "A"]
    if outward:
        states[2:2] = ["Out", "Turn", "Z$", "Z#"]
        e += [
            E("Start", "Out", fw, op="push", sym="0"),
            E("Start", "Out", fa, op="push", sym="1"),
            E("Out", "Out", fw, op="push", sym="0"),
            E("Out", "Out", fa, op="push", sym="1"),
            E("Start", "Turn", fa),
            E("Out", "Turn", fa),
            E("Turn", "Turn", bw, op="pop", sym="0"),
            E("Turn", "Turn", ba, op="pop", sym="0"),
            E("Turn", "Turn", bw, op="pop", sym="1"),
            E("Turn", "Z$", bw, op="pop", sym="$"),
            E("Turn", "Z#", ba, op="pop", sym="$"),
            E("Turn", "Z#", bw, op="pop", sym="#"),
            E("Z$", "N", "", op="push", sym="$"),
            E("Z#", "N", "", op="push", sym="#"),
        ]
    else:
        e.append(E("Start", "N", ""))
    e += [
        E("N", "N", bw, op="push", sym="0"),
        E("N", "N", ba, op="push", sym="1"),
        E("N", "F", ba),
        E("F", "F", fw, op="pop", sym="0"),
        E("F", "F", fa, op="pop", sym="0"),
        E("F", "F", fw, op="pop", sym="1"),
        E("F", "A", fw, op="pop", sym="$"),
        E("F", "A", fa, op="pop", sym="$"),
        E("F", "A", fw, op="pop", sym="#"),
        E("N", "End", ""),
        E("F", "End", ""),
        E("End", "End", "", op="pop", sym="0"),
        E("End", "End", "", op="pop", sym="1"),
        E("End", "A", "", op="pop", sym="$"),
        E("End", "A", "", op="pop", sym="#"),
    ]
    return PushdownMachine(tuple(states), "q0", {"A"}, e, "Tat", stack_alphabet="#$01")


def pda_full_wreath(m: int = 2) -> PushdownMachine:
    """All geodesics over {a, t} for L_2: a union of four pushdown machines."""
    if m != 2:
        raise UnsupportedModulus("the full-language pushdown machine is built for m = 2 only")
    return union([_full_wreath_case(lf, out) for lf in (False, True) for out in (False, True)])


# --- registry ------------------------------------------------------------


MACHINES: dict[str, Callable] = {
    "pda_anbn": pda_anbn,
    "counter_anbn": counter_anbn,
    "counter_anbnan": counter_anbnan,
    "counter_unique_wreath": counter_unique_wreath,
    "pda_full_wreath": pda_full_wreath,
    "counter_unique_tta": counter_unique_tta,
    "counter_full_tta": counter_full_tta,
}

# (generating set, mode) of the lamplighter machines, for verification
GEODESIC_MACHINES = {
    "counter_unique_wreath": (Gens.WREATH, "unique"),
    "pda_full_wreath": (Gens.WREATH, "full"),
    "counter_unique_tta": (Gens.AUTOMATON, "unique"),
    "counter_full_tta": (Gens.AUTOMATON, "full"),
}


def build(name: str, m: int = 2):
    try:
        ctor = MACHINES[name]
    except KeyError:
        raise KeyError(f"unknown machine {name!r}; choose from {sorted(MACHINES)}") from None
    if name in ("counter_unique_wreath", "pda_full_wreath"):
        return ctor(m)
    return ctor()
