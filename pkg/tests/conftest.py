from __future__ import annotations

import os

from hypothesis import HealthCheck, settings, strategies as st

from fockcrystal.multipartition import Multipartition, make_partition

settings.register_profile("default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=40, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def partitions_st(draw, max_size: int = 6) -> tuple[int, ...]:
    if max_size <= 0:
        return ()
    parts = draw(st.lists(st.integers(1, max_size), max_size=max_size))
    parts = sorted(parts, reverse=True)
    # keep the rank small so brute force oracles stay cheap
    while sum(parts) > max_size:
        parts.pop()
    return make_partition(parts)


@st.composite
def multipartitions_st(draw, l: int | None = None, max_rank: int = 6) -> Multipartition:
    if l is None:
        l = draw(st.integers(1, 3))
    comps, left = [], max_rank
    for _ in range(l):
        p = draw(partitions_st(max_size=max(left, 0)))
        left -= sum(p)
        comps.append(p)
    return Multipartition(tuple(comps))


@st.composite
def charged_st(draw, max_rank: int = 6, spread: int = 4):
    lam = draw(multipartitions_st(max_rank=max_rank))
    s = tuple(draw(st.integers(-spread, spread)) for _ in range(lam.l))
    return lam, s


e_st = st.integers(2, 5)


# one PASS/FAIL line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
