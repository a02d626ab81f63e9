from hypothesis import strategies as st

from geolang.lamp import LampElement

wreath_words = st.text(alphabet="aAtT", max_size=24)
automaton_words = st.text(alphabet="tTsS", max_size=24)
moduli = st.integers(min_value=2, max_value=6)


@st.composite
def elements(draw, m=None, spread=8):
    m = draw(moduli) if m is None else m
    bulbs = draw(st.dictionaries(st.integers(-spread, spread), st.integers(1, m - 1), max_size=6))
    cursor = draw(st.integers(-spread, spread))
    return LampElement.make(m, bulbs, cursor)
