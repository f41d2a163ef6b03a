"""Shared strategies, the hypothesis profile, and the acceptance summary."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from wronski_schubert.errors import DegenerateSystemError
from wronski_schubert.exactalg import UniPoly
from wronski_schubert.partitions import Partition
from wronski_schubert.wmap import LinearSystemP1

settings.register_profile(
    "repo",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


# ---------------------------------------------------------------------------
# strategies

small_ints = st.integers(min_value=-9, max_value=9)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=5))


@st.composite
def partitions_in(draw, rows: int, cols: int):
    parts = draw(st.lists(st.integers(min_value=0, max_value=cols), min_size=rows, max_size=rows))
    return Partition(sorted(parts, reverse=True))


@st.composite
def unipolys(draw, max_degree: int = 5, nonzero: bool = False):
    cs = draw(st.lists(rationals, min_size=1, max_size=max_degree + 1))
    p = UniPoly(cs)
    if nonzero and not p:
        p = UniPoly((1,))
    return p


def random_rational(rng: random.Random, size: int = 6) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, 3))


def random_poly(rng: random.Random, degree: int) -> UniPoly:
    return UniPoly([random_rational(rng) for _ in range(degree + 1)])


def random_system(rng: random.Random, r: int, d: int, ramified: bool | None = None) -> LinearSystemP1:
    """A random point of G(r+1, Poly_d).

    Ramified systems get a rational point ``P`` where the basis vanishes to
    prescribed orders, and sometimes a degree drop (ramification at infinity).
    """
    if ramified is None:
        ramified = rng.random() < 0.7
    while True:
        if ramified:
            P = random_rational(rng, 4)
            orders = sorted(rng.sample(range(d + 1), r + 1))
            cap = d - rng.choice([0, 0, 1])
            basis = []
            for o in orders:
                top = max(cap - o, 0)
                basis.append(UniPoly((-P, 1)) ** o * random_poly(rng, top))
        else:
            basis = [random_poly(rng, d) for _ in range(r + 1)]
        try:
            return LinearSystemP1(basis, d)
        except DegenerateSystemError:
            continue


# ---------------------------------------------------------------------------
# acceptance summary: one pass/fail line per criterion at the end of the run

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    marker = report.user_properties and dict(report.user_properties).get("criterion")
    if not marker:
        return
    number, title = marker
    outcome = "PASS" if report.passed else "FAIL"
    _CRITERIA[number] = (title, outcome)


@pytest.fixture
def criterion(request, record_property):
    """Tag an acceptance test with its criterion number and title."""

    def tag(number: int, title: str):
        record_property("criterion", (number, title))

    return tag


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, outcome = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d} {outcome}  {title}")
