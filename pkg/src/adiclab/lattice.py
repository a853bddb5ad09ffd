"""The lattice of subgroups (m/n)Z of N and the chain U_j.

A compact open subgroup of the a-adic numbers is always the closure of a
single ideal in this lattice, so a :class:`FracIdeal` is also how compact open
subgroups are represented.  Open subgroups that are unions of an increasing
chain of ideals have no runtime representation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotInLattice, NotInS, NotNested
from .primes import factor
from .sequence import SequenceSpec, entry, in_S, prime_sets
from .supernatural import lambda_rho


@dataclass(frozen=True, order=True)
class FracIdeal:
    """The subgroup ``(num/den) Z`` of Q, with ``gcd(num, den) == 1``."""

    num: int
    den: int = 1

    def __post_init__(self):
        if self.num < 1 or self.den < 1:
            raise ValueError("ideal generator must be positive")
        if math.gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not reduced")

    @classmethod
    def of(cls, q) -> "FracIdeal":
        q = abs(Fraction(q))
        if q == 0:
            raise ValueError("the zero subgroup is not in the lattice")
        return cls(q.numerator, q.denominator)

    @classmethod
    def parse(cls, text: str) -> "FracIdeal":
        return cls.of(Fraction(text.strip()))

    @property
    def generator(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __contains__(self, q) -> bool:
        return (Fraction(q) / self.generator).denominator == 1

    def issubset(self, other: "FracIdeal") -> bool:
        return self.generator in other

    def scale(self, h) -> "FracIdeal":
        return FracIdeal.of(self.generator * Fraction(h))

    def __str__(self):
        return str(self.generator)


ZZ = FracIdeal(1, 1)


def in_U(spec: SequenceSpec, ideal: FracIdeal) -> bool:
    lam, rho = lambda_rho(spec)
    return (all(e <= lam[p] for p, e in factor(ideal.num).items())
            and all(e <= rho[p] for p, e in factor(ideal.den).items()))


def intersect(i: FracIdeal, j: FracIdeal) -> FracIdeal:
    return FracIdeal(math.lcm(i.num, j.num), math.gcd(i.den, j.den))


def u_chain(spec: SequenceSpec, j: int) -> FracIdeal:
    """``U_j``: ``Z`` for ``j = 0`` and ``a_0 ... a_{j-1} Z`` for ``j >= 1``.

    Negative ``j`` is also accepted and gives ``(1 / (a_-1 ... a_j)) Z``,
    the ideal whose closure is ``O_j``.
    """
    if j >= 0:
        return FracIdeal(math.prod(entry(spec, i) for i in range(j)), 1)
    return FracIdeal(1, math.prod(entry(spec, i) for i in range(j, 0)))


def cofinal_index(spec: SequenceSpec, ideal: FracIdeal) -> int:
    """Smallest ``j >= 0`` with ``U_j`` contained in ``ideal``."""
    if not in_U(spec, ideal):
        raise NotInLattice(f"{ideal} is not in the lattice of this sequence")
    j, prod = 0, 1
    while prod % ideal.num:
        prod *= entry(spec, j)
        j += 1
    return j


def quotient_size(big: FracIdeal, small: FracIdeal) -> int:
    """``|big / small|`` for ``small`` contained in ``big``."""
    if not small.issubset(big):
        raise NotNested(f"{small} is not contained in {big}")
    q = small.generator / big.generator
    assert q.denominator == 1
    return q.numerator


def generalized_index(a: FracIdeal, b: FracIdeal) -> Fraction:
    """``|a/(a∩b)| / |b/(a∩b)|``, i.e. the Haar measure ratio of the closures."""
    c = intersect(a, b)
    return Fraction(quotient_size(a, c), quotient_size(b, c))


def is_dense_multiple(spec: SequenceSpec, q: int) -> bool:
    """Whether ``qN`` is dense, i.e. ``q`` is coprime to every entry."""
    if q < 2:
        raise ValueError("q must be >= 2")
    _, Q = prime_sets(spec)
    return all(p in Q for p in factor(q))


def s_action(spec: SequenceSpec, h, ideal: FracIdeal) -> FracIdeal:
    h = Fraction(h)
    if not in_S(spec, h):
        raise NotInS(f"{h} is not in S")
    if not in_U(spec, ideal):
        raise NotInLattice(f"{ideal} is not in the lattice of this sequence")
    return ideal.scale(h)
