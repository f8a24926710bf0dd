import os
import sys
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from genkac.funm import FunM, SL3_TAGS  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

rats = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
nonzero_rats = rats.filter(bool)


@st.composite
def monos(draw, lo=-3, hi=3, ab=3, l_min=None):
    e = draw(st.integers(0, ab))
    n, m = (e, 0) if draw(st.booleans()) else (0, e)
    k = draw(st.integers(lo, hi))
    l = draw(st.integers(lo if l_min is None else l_min, hi))
    return (n, m, k, l)


def funms(max_terms=3, **kw):
    return st.dictionaries(monos(**kw), nonzero_rats, min_size=0, max_size=max_terms).map(FunM)


tags = st.sampled_from(SL3_TAGS)
