from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

from twopoint.scalar import Scalar
from twopoint.series import TwoVarFun

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))

scalars = st.dictionaries(st.integers(-3, 3), rationals, max_size=4).map(Scalar)

funs = st.dictionaries(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
    st.builds(Scalar.mono, rationals, st.integers(-1, 1)),
    max_size=4,
).map(TwoVarFun)


# criterion number -> (title, status, seconds, limit); filled by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, status, secs, limit = ACCEPTANCE[num]
        terminalreporter.write_line("%-5s %2d. %s (%.2f s, limit %d s)" % (status, num, title, secs, limit))
