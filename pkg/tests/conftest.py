"""Shared hypothesis strategies for triad-valued properties."""

import math

import hypothesis.strategies as st

from triadaudit import Triad

# Entries live on the same log range the audit sampler uses by default.
LOG_NINE = math.log(9.0)


def log_entries(span: float = LOG_NINE):
    return st.floats(min_value=-span, max_value=span, allow_nan=False, allow_infinity=False)


@st.composite
def triads(draw, span: float = LOG_NINE) -> Triad:
    return Triad(
        math.exp(draw(log_entries(span))),
        math.exp(draw(log_entries(span))),
        math.exp(draw(log_entries(span))),
    )


@st.composite
def consistent_triads(draw, span: float = LOG_NINE) -> Triad:
    w1, w2, w3 = (math.exp(draw(log_entries(span))) for _ in range(3))
    return Triad(w1 / w2, w1 / w3, w2 / w3)


@st.composite
def scale_factors(draw) -> float:
    return math.exp(draw(st.floats(min_value=-math.log(10.0), max_value=math.log(10.0))))
