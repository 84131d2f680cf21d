from __future__ import annotations

import os
import sys
from fractions import Fraction

from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from qverify.qseries import QSeries  # noqa: E402

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

DENOMS = [1, 2, 3, 4, 6]
small_rats = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 6))
nonzero_rats = st.builds(Fraction, st.integers(1, 5) | st.integers(-5, -1), st.integers(1, 6))


@st.composite
def sparse_terms(draw, L=None, span=6, extra=0, max_terms=6):
    """Up to max_terms coefficients on the grid m/L, 0 <= m/L < span + extra."""
    L = draw(st.sampled_from(DENOMS)) if L is None else L
    size = (span + extra) * L
    terms = draw(st.dictionaries(st.integers(0, size - 1), small_rats, max_size=max_terms))
    return L, terms


@st.composite
def qseries(draw, span=6, unit=False):
    """A random truncated series with exponents on a random 1/L grid."""
    L, terms = draw(sparse_terms(span=span))
    acc_steps = draw(st.integers(min_value=1, max_value=span * L))
    if unit:
        terms[0] = draw(nonzero_rats)
    return QSeries(terms, L, Fraction(acc_steps, L))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        ok, msg = RESULTS[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {msg}")
