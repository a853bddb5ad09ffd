"""Finite descriptions of doubly infinite sequences a = (..., a_-1, a_0, a_1, ...).

Two kinds are representable:

* :class:`EventuallyPeriodic` -- each tail is a preperiod followed by a
  repeating period.  The negative tail is stored outward from the origin as
  ``(a_-1, a_-2, ...)`` so that reflecting a sequence only swaps tails.
* :class:`Increment` -- ``a_i = |i - center| + offset``.  With ``center=0`` and
  ``offset=2`` this is the sequence ``(..., 4, 3, 2, 3, 4, ...)`` whose a-adic
  numbers are the finite adeles.

Both kinds are closed under reflection and translation, which is what makes
every invariant below exactly computable.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import InvalidSpec
from .primes import PrimeSet, prime_divisors, rational_primes


def _check_entries(entries: Iterable[int], what: str) -> tuple[int, ...]:
    out = []
    for e in entries:
        if isinstance(e, bool) or not isinstance(e, int):
            raise InvalidSpec(f"{what}: entries must be integers, got {e!r}")
        if e < 2:
            raise InvalidSpec(f"{what}: entries must be >= 2, got {e}")
        out.append(e)
    return tuple(out)


@dataclass(frozen=True)
class Tail:
    """One-sided eventually periodic sequence ``t_0, t_1, ...``.

    Stored in canonical form (primitive period, shortest preperiod), so two
    tails with the same entries compare equal.
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        pre = _check_entries(self.preperiod, "preperiod")
        per = _check_entries(self.period, "period")
        if not per:
            raise InvalidSpec("period must be nonempty")
        n = len(per)
        for d in range(1, n + 1):
            if n % d == 0 and per == per[:d] * (n // d):
                per = per[:d]
                break
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = (per[-1],) + per[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError(k)
        if k < len(self.preperiod):
            return self.preperiod[k]
        return self.period[(k - len(self.preperiod)) % len(self.period)]

    def take(self, k: int) -> list[int]:
        return [self[i] for i in range(k)]

    def drop(self, k: int) -> "Tail":
        if k <= len(self.preperiod):
            return Tail(self.preperiod[k:], self.period)
        r = (k - len(self.preperiod)) % len(self.period)
        return Tail((), self.period[r:] + self.period[:r])

    def prepend(self, items: Iterable[int]) -> "Tail":
        return Tail(tuple(items) + self.preperiod, self.period)

    def entries(self) -> tuple[int, ...]:
        return self.preperiod + self.period

    def to_json(self) -> dict:
        return {"preperiod": list(self.preperiod), "period": list(self.period)}


@dataclass(frozen=True)
class EventuallyPeriodic:
    neg: Tail
    nonneg: Tail

    def __hash__(self):
        # specs key several caches; hashing the nested tuples each time is slow
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.neg, self.nonneg))
            object.__setattr__(self, "_hash", h)
        return h

    @classmethod
    def from_lists(cls, neg_preperiod: Sequence[int], neg_period: Sequence[int],
                   nonneg_preperiod: Sequence[int], nonneg_period: Sequence[int]):
        return cls(Tail(tuple(neg_preperiod), tuple(neg_period)),
                   Tail(tuple(nonneg_preperiod), tuple(nonneg_period)))

    @classmethod
    def constant(cls, c: int) -> "EventuallyPeriodic":
        return cls(Tail((), (c,)), Tail((), (c,)))

    def entry(self, i: int) -> int:
        return self.nonneg[i] if i >= 0 else self.neg[-1 - i]

    def all_entries(self) -> tuple[int, ...]:
        """Every distinct position class: both preperiods and both periods."""
        return self.neg.entries() + self.nonneg.entries()

    def rightward(self, p: int) -> Tail:
        """The tail ``a_p, a_{p+1}, ...``."""
        if p >= 0:
            return self.nonneg.drop(p)
        return self.nonneg.prepend(self.entry(i) for i in range(p, 0))

    def leftward(self, p: int) -> Tail:
        """The tail ``a_p, a_{p-1}, ...``."""
        if p < 0:
            return self.neg.drop(-1 - p)
        return self.neg.prepend(self.entry(i) for i in range(p, -1, -1))


@dataclass(frozen=True)
class Increment:
    """``a_i = |i - center| + offset``."""

    offset: int = 2
    center: int = 0

    def __post_init__(self):
        if isinstance(self.offset, bool) or not isinstance(self.offset, int) or self.offset < 2:
            raise InvalidSpec(f"increment offset must be an integer >= 2, got {self.offset!r}")
        if isinstance(self.center, bool) or not isinstance(self.center, int):
            raise InvalidSpec(f"increment center must be an integer, got {self.center!r}")

    def entry(self, i: int) -> int:
        return abs(i - self.center) + self.offset


SequenceSpec = Union[EventuallyPeriodic, Increment]


def entry(spec: SequenceSpec, i: int) -> int:
    return spec.entry(i)


def window(spec: SequenceSpec, lo: int, hi: int) -> list[int]:
    """Entries ``a_lo, ..., a_{hi-1}``."""
    return [entry(spec, i) for i in range(lo, hi)]


def shift(spec: SequenceSpec, n: int) -> SequenceSpec:
    """The reflected sequence a^(n) with ``a^(n)_i = a_{n-i}``.

    Applying the same ``n`` twice gives back ``spec``.
    """
    if isinstance(spec, Increment):
        return Increment(spec.offset, n - spec.center)
    return EventuallyPeriodic(neg=spec.rightward(n + 1), nonneg=spec.leftward(n))


def star(spec: SequenceSpec) -> SequenceSpec:
    return shift(spec, 0)


def sharp(spec: SequenceSpec) -> SequenceSpec:
    return shift(spec, -1)


def translate(spec: SequenceSpec, n: int) -> SequenceSpec:
    """The translated sequence b with ``b_i = a_{i+n}``."""
    if isinstance(spec, Increment):
        return Increment(spec.offset, spec.center - n)
    return EventuallyPeriodic(neg=spec.leftward(n - 1), nonneg=spec.rightward(n))


def splice(spec: EventuallyPeriodic, lo: int, hi: int, entries: Sequence[int]) -> EventuallyPeriodic:
    """Replace ``a_lo .. a_{hi-1}`` by ``entries``, keeping everything left of
    ``lo`` at its original index.

    Requires ``lo <= 0 <= lo + len(entries)`` so the origin stays inside the
    replaced block.
    """
    entries = _check_entries(entries, "splice")
    if not (lo <= 0 <= lo + len(entries)):
        raise ValueError("splice block must straddle the origin")
    left = spec.leftward(lo - 1)
    right = spec.rightward(hi)
    cut = -lo
    nonneg = right.prepend(entries[cut:])
    neg = left.prepend(reversed(entries[:cut]))
    return EventuallyPeriodic(neg=neg, nonneg=nonneg)


@lru_cache(maxsize=4096)
def prime_sets(spec: SequenceSpec) -> tuple[PrimeSet, PrimeSet]:
    """``(P, Q)``: primes dividing infinitely many entries of both tails, and
    primes dividing no entry at all."""
    if isinstance(spec, Increment):
        return PrimeSet.all(), PrimeSet.empty()
    left = set().union(*(prime_divisors(e) for e in spec.neg.period))
    right = set().union(*(prime_divisors(e) for e in spec.nonneg.period))
    occurring = set().union(*(prime_divisors(e) for e in spec.all_entries()))
    return PrimeSet.finite(left & right), PrimeSet.excluding(occurring)


def in_S(spec: SequenceSpec, h) -> bool:
    """Whether the positive rational ``h`` lies in S = <P>."""
    h = Fraction(h)
    if h <= 0:
        raise ValueError("h must be positive")
    P, _ = prime_sets(spec)
    return all(p in P for p in rational_primes(h))


# JSON ---------------------------------------------------------------------

def spec_from_json(d: dict) -> SequenceSpec:
    if not isinstance(d, dict) or "kind" not in d:
        raise InvalidSpec("sequence spec must be an object with a 'kind' field")
    kind = d["kind"]
    try:
        if kind == "eventually_periodic":
            neg, nonneg = d["neg"], d["nonneg"]
            return EventuallyPeriodic(
                Tail(tuple(neg.get("preperiod", [])), tuple(neg["period"])),
                Tail(tuple(nonneg.get("preperiod", [])), tuple(nonneg["period"])),
            )
        if kind == "increment":
            return Increment(d.get("offset", 2), d.get("center", 0))
    except (KeyError, TypeError, AttributeError) as exc:
        raise InvalidSpec(f"malformed sequence spec: {exc}") from exc
    raise InvalidSpec(f"unknown sequence kind {kind!r}")


def spec_to_json(spec: SequenceSpec) -> dict:
    if isinstance(spec, Increment):
        d = {"kind": "increment", "offset": spec.offset}
        if spec.center:
            d["center"] = spec.center
        return d
    return {"kind": "eventually_periodic", "neg": spec.neg.to_json(), "nonneg": spec.nonneg.to_json()}


def describe(spec: SequenceSpec, radius: int = 4) -> str:
    """Human-readable window around the origin, with a_0 bracketed."""
    items = [f"[{entry(spec, i)}]" if i == 0 else str(entry(spec, i))
             for i in range(-radius, radius + 1)]
    return "(..., " + ", ".join(items) + ", ...)"
