from fractions import Fraction

from hypothesis import strategies as st

from qdisc.disc import DiscElement, monomial
from qdisc.scalar import IntPoly, Scalar, q_pow

SAMPLE_Q = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))

small_ints = st.integers(min_value=-6, max_value=6)
polys = st.lists(small_ints, min_size=0, max_size=5).map(IntPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


@st.composite
def scalars(draw):
    num = draw(polys)
    den = draw(nonzero_polys)
    return Scalar(num, den) * q_pow(draw(st.integers(-2, 2)))


nonzero_scalars = scalars().filter(lambda s: not s.is_zero())


@st.composite
def disc_elements(draw, max_terms=3, max_k=3, max_l=3):
    out = DiscElement()
    for _ in range(draw(st.integers(1, max_terms))):
        k = draw(st.integers(0, max_k))
        l = draw(st.integers(-max_l, max_l))
        c = draw(st.sampled_from([1, -1, 2])) * q_pow(draw(st.integers(-2, 2)))
        out = out + monomial(k, l, c)
    return out


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
