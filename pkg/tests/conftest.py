import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from adiclab.arithmetic import weight
from adiclab.sequence import EventuallyPeriodic, Increment, Tail, translate

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

Q2 = EventuallyPeriodic.constant(2)
Q3 = EventuallyPeriodic.constant(3)
CONST4 = EventuallyPeriodic.constant(4)
THREE_AT_ZERO = EventuallyPeriodic.from_lists([], [2], [3], [2])
THREE_AT_NEGATIVE = translate(THREE_AT_ZERO, 1)
P_EMPTY = EventuallyPeriodic.from_lists([], [2], [2], [3])
ADELES = Increment(2)

# small entries keep every prime valuation of a tail's preperiod low, which
# keeps the brute-force oracles within their exponent bound
ENTRY_POOL = [2, 3, 4, 5, 6, 9, 10, 12, 15]


@pytest.fixture
def q2():
    return Q2


@pytest.fixture
def three_at_zero():
    return THREE_AT_ZERO


@pytest.fixture
def three_at_negative():
    return THREE_AT_NEGATIVE


@pytest.fixture
def p_empty():
    return P_EMPTY


@pytest.fixture
def adeles():
    return ADELES


entries = st.sampled_from(ENTRY_POOL)
tails = st.builds(Tail, st.lists(entries, max_size=2).map(tuple),
                  st.lists(entries, min_size=1, max_size=2).map(tuple))
ep_specs = st.builds(EventuallyPeriodic, tails, tails)
increment_specs = st.builds(Increment, st.integers(2, 4), st.integers(-3, 3))
specs = st.one_of(ep_specs, ep_specs, increment_specs)


@st.composite
def rationals_in_N(draw, spec, depth=3, size=300):
    den = weight(spec, -draw(st.integers(0, depth))).denominator
    return Fraction(draw(st.integers(-size, size)), den)


def random_tail(rng: random.Random) -> Tail:
    pre = [rng.choice(ENTRY_POOL) for _ in range(rng.randrange(0, 3))]
    per = [rng.choice(ENTRY_POOL) for _ in range(rng.randrange(1, 3))]
    return Tail(tuple(pre), tuple(per))


def random_spec(rng: random.Random) -> EventuallyPeriodic:
    return EventuallyPeriodic(random_tail(rng), random_tail(rng))


def random_in_N(spec, rng: random.Random, depth=3, size=300) -> Fraction:
    den = weight(spec, -rng.randrange(0, depth + 1)).denominator
    return Fraction(rng.randrange(-size, size + 1), den)
