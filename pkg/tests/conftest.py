import os
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from pillai_ff.field import Poly, RatFunc

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("ci", max_examples=25, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

small_fractions = st.builds(Fraction, st.integers(-100, 100), st.integers(1, 100))


@st.composite
def polys(draw, max_degree=4, nonzero=False):
    coeffs = draw(st.lists(small_fractions, min_size=0, max_size=max_degree + 1))
    p = Poly(coeffs)
    if nonzero and not p:
        p = Poly([draw(small_fractions.filter(bool))])
    return p


@st.composite
def ratfuncs(draw, max_degree=4, nonzero=True):
    num = draw(polys(max_degree, nonzero=nonzero))
    den = draw(polys(max_degree, nonzero=True))
    return RatFunc(num, den)


@st.composite
def int_polys(draw, min_degree=0, max_degree=3, bound=3):
    d = draw(st.integers(min_degree, max_degree))
    coeffs = draw(st.lists(st.integers(-bound, bound), min_size=d, max_size=d))
    lead = draw(st.integers(-bound, bound).filter(bool))
    return Poly(coeffs + [lead])


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
