"""Prime factorization helpers and finite/cofinite sets of primes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from sympy import factorint, isprime


@lru_cache(maxsize=65536)
def _factor(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(factorint(n).items()))


def factor(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer as ``{p: e}``."""
    if n < 1:
        raise ValueError(f"factor expects a positive integer, got {n}")
    return dict(_factor(n))


def prime_divisors(n: int) -> set[int]:
    return {p for p, _ in _factor(n)} if n > 1 else set()


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    n = abs(n)
    if n == 0:
        raise ValueError("valuation of zero")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def rational_primes(q: Fraction) -> set[int]:
    """Primes dividing the numerator or denominator of ``q``."""
    q = Fraction(q)
    return prime_divisors(abs(q.numerator)) | prime_divisors(q.denominator)


@dataclass(frozen=True)
class PrimeSet:
    """A finite set of primes, or the complement of one.

    With ``cofinite=False`` the set is ``primes``; with ``cofinite=True`` it
    is every prime except ``primes``.
    """

    primes: frozenset = frozenset()
    cofinite: bool = False

    def __post_init__(self):
        ps = frozenset(int(p) for p in self.primes)
        for p in ps:
            if not isprime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "primes", ps)

    @classmethod
    def finite(cls, primes: Iterable[int] = ()) -> "PrimeSet":
        return cls(frozenset(primes), False)

    @classmethod
    def excluding(cls, primes: Iterable[int] = ()) -> "PrimeSet":
        return cls(frozenset(primes), True)

    @classmethod
    def all(cls) -> "PrimeSet":
        return cls(frozenset(), True)

    @classmethod
    def empty(cls) -> "PrimeSet":
        return cls(frozenset(), False)

    def __contains__(self, p: int) -> bool:
        return (p in self.primes) != self.cofinite

    def is_empty(self) -> bool:
        return not self.cofinite and not self.primes

    def is_all(self) -> bool:
        return self.cofinite and not self.primes

    def complement(self) -> "PrimeSet":
        return PrimeSet(self.primes, not self.cofinite)

    def __and__(self, other: "PrimeSet") -> "PrimeSet":
        if not self.cofinite and not other.cofinite:
            return PrimeSet.finite(self.primes & other.primes)
        if self.cofinite and other.cofinite:
            return PrimeSet.excluding(self.primes | other.primes)
        fin, cof = (self, other) if not self.cofinite else (other, self)
        return PrimeSet.finite(fin.primes - cof.primes)

    def __or__(self, other: "PrimeSet") -> "PrimeSet":
        return (self.complement() & other.complement()).complement()

    def __sub__(self, other: "PrimeSet") -> "PrimeSet":
        return self & other.complement()

    def issubset(self, other: "PrimeSet") -> bool:
        return (self - other).is_empty()

    def isdisjoint(self, other: "PrimeSet") -> bool:
        return (self & other).is_empty()

    def boundary(self) -> frozenset:
        """The finite set of primes that pins this set down."""
        return self.primes

    def __str__(self):
        body = ",".join(str(p) for p in sorted(self.primes))
        if self.cofinite:
            return "all primes" if not body else f"all primes except {{{body}}}"
        return "{" + body + "}"

    def to_json(self) -> dict:
        if self.cofinite:
            return {"mode": "cofinite", "excluded": sorted(self.primes)}
        return {"mode": "finite", "primes": sorted(self.primes)}

    @classmethod
    def from_json(cls, d: dict) -> "PrimeSet":
        if d["mode"] == "finite":
            return cls.finite(d["primes"])
        if d["mode"] == "cofinite":
            return cls.excluding(d.get("excluded", []))
        raise ValueError(f"unknown prime set mode {d['mode']!r}")
