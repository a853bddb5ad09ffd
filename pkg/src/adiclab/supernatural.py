"""Supernatural numbers and the equivalences behind the classification.

A :class:`GenSupernatural` is a finite exponent map together with a finite or
cofinite set of primes carrying exponent infinity.  Every sequence yields two
of them: ``lambda`` (from the nonnegative tail) and ``rho`` (from the negative
tail).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Optional

from .primes import PrimeSet, factor, prime_divisors
from .sequence import Increment, SequenceSpec, Tail

INF = math.inf


@dataclass(frozen=True)
class GenSupernatural:
    finite: tuple[tuple[int, int], ...] = ()
    inf: PrimeSet = field(default_factory=PrimeSet.empty)

    def __post_init__(self):
        items = dict(self.finite) if not isinstance(self.finite, dict) else self.finite
        clean = {}
        for p, e in items.items():
            p, e = int(p), int(e)
            if e < 0:
                raise ValueError(f"negative exponent at {p}")
            if e and p in self.inf:
                raise ValueError(f"prime {p} is both finite and infinite")
            if e:
                clean[p] = e
        if self.inf.is_empty():
            raise ValueError("a supernatural number here needs at least one infinite prime")
        object.__setattr__(self, "finite", tuple(sorted(clean.items())))

    @classmethod
    def make(cls, finite: Optional[dict] = None, inf=()) -> "GenSupernatural":
        if not isinstance(inf, PrimeSet):
            inf = PrimeSet.finite(inf)
        return cls(tuple((finite or {}).items()), inf)

    @property
    def finite_map(self) -> dict[int, int]:
        return dict(self.finite)

    def __getitem__(self, p: int):
        if p in self.inf:
            return INF
        return self.finite_map.get(p, 0)

    def support(self) -> set[int]:
        """Primes with a finite positive exponent."""
        return set(self.finite_map)

    def __str__(self):
        parts = [f"{p}^{e}" for p, e in self.finite]
        if self.inf.cofinite:
            parts.append(f"p^inf for p in {self.inf}")
        else:
            parts += [f"{p}^inf" for p in sorted(self.inf.primes)]
        return "·".join(parts)

    def to_json(self) -> dict:
        return {"finite": {str(p): e for p, e in self.finite}, "inf": self.inf.to_json()}

    @classmethod
    def from_json(cls, d: dict) -> "GenSupernatural":
        return cls(tuple((int(p), int(e)) for p, e in d.get("finite", {}).items()),
                   PrimeSet.from_json(d["inf"]))


def _from_tail(tail: Tail) -> GenSupernatural:
    inf = set().union(*(prime_divisors(e) for e in tail.period))
    finite: dict[int, int] = {}
    for e in tail.preperiod:
        for p, k in factor(e).items():
            if p not in inf:
                finite[p] = finite.get(p, 0) + k
    return GenSupernatural.make(finite, PrimeSet.finite(inf))


@lru_cache(maxsize=4096)
def lambda_rho(spec: SequenceSpec) -> tuple[GenSupernatural, GenSupernatural]:
    """The supernatural numbers of the nonnegative and negative tails."""
    if isinstance(spec, Increment):
        full = GenSupernatural.make({}, PrimeSet.all())
        return full, full
    return _from_tail(spec.nonneg), _from_tail(spec.neg)


def mul_natural(s: GenSupernatural, r: int) -> GenSupernatural:
    """``r * s`` for a positive integer ``r``; infinite exponents absorb."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    fin = s.finite_map
    if r > 1:
        for p, k in factor(r).items():
            if p not in s.inf:
                fin[p] = fin.get(p, 0) + k
    return GenSupernatural.make(fin, s.inf)


def _from_exponents(exps: dict[int, int]) -> int:
    return math.prod(p ** e for p, e in exps.items())


def equivalent_single(s1: GenSupernatural, s2: GenSupernatural) -> Optional[tuple[int, int]]:
    """Minimal ``(r1, r2)`` with ``r1*s1 == r2*s2``, or None."""
    if s1.inf != s2.inf:
        return None
    up, down = {}, {}
    for p in s1.support() | s2.support():
        d = s2[p] - s1[p]
        if d > 0:
            up[p] = d
        elif d < 0:
            down[p] = -d
    return _from_exponents(up), _from_exponents(down)


def equivalent_pair(lam1: GenSupernatural, rho1: GenSupernatural,
                    lam2: GenSupernatural, rho2: GenSupernatural) -> Optional[tuple[int, int]]:
    """Coprime ``(p, q)`` with ``p*lam1 == q*lam2`` and ``q*rho1 == p*rho2``, or None.

    Per prime r, with x = v_r(p) - v_r(q): the lambda equation pins x when the
    lambda exponents are finite, the rho equation pins it when the rho
    exponents are finite, and the two must agree.
    """
    if lam1.inf != lam2.inf or rho1.inf != rho2.inf:
        return None
    up, down = {}, {}
    for r in lam1.support() | lam2.support() | rho1.support() | rho2.support():
        lam_fin = r not in lam1.inf
        rho_fin = r not in rho1.inf
        wanted = set()
        if lam_fin:
            wanted.add(lam2[r] - lam1[r])
        if rho_fin:
            wanted.add(rho1[r] - rho2[r])
        if len(wanted) > 1:
            return None
        x = wanted.pop() if wanted else 0
        if x > 0:
            up[r] = x
        elif x < 0:
            down[r] = -x
    return _from_exponents(up), _from_exponents(down)


class CanonicalPair(NamedTuple):
    lambda_inf: PrimeSet
    rho_inf: PrimeSet
    totals: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {"lambda_inf": self.lambda_inf.to_json(), "rho_inf": self.rho_inf.to_json(),
                "totals": {str(p): t for p, t in self.totals}}

    @classmethod
    def from_json(cls, d: dict) -> "CanonicalPair":
        return cls(PrimeSet.from_json(d["lambda_inf"]), PrimeSet.from_json(d["rho_inf"]),
                   tuple(sorted((int(p), int(t)) for p, t in d["totals"].items())))


def canonical_pair_form(lam: GenSupernatural, rho: GenSupernatural) -> CanonicalPair:
    """Normal form of the class of ``(lam, rho)`` under ``equivalent_pair``:
    both infinity sets, plus ``lam(r) + rho(r)`` at primes finite in both."""
    totals = {}
    for r in lam.support() | rho.support():
        if r not in lam.inf and r not in rho.inf:
            totals[r] = lam[r] + rho[r]
    return CanonicalPair(lam.inf, rho.inf, tuple(sorted(totals.items())))
