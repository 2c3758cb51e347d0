from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default", max_examples=200, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def small_rationals(lo=-8, hi=8, max_den=4):
    return st.builds(Fraction, st.integers(lo, hi), st.integers(1, max_den))


def positive_rationals(hi=8, max_den=4):
    return st.builds(Fraction, st.integers(1, hi), st.integers(1, max_den))
