"""Classification decisions built on the (lambda, rho) invariants."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .dynamics import HSubgroup
from .errors import EmptyP, OutOfRepresentableClass
from .lattice import FracIdeal, in_U
from .primes import PrimeSet, factor
from .sequence import (EventuallyPeriodic, Increment, SequenceSpec, Tail, shift,
                       splice, translate, window, prime_sets)
from .supernatural import (CanonicalPair, GenSupernatural, canonical_pair_form,
                           equivalent_pair, equivalent_single, lambda_rho)

Witness = Optional[tuple[int, int]]


def equivalent(a: SequenceSpec, b: SequenceSpec) -> bool:
    """``a ~ b``: same lattice, i.e. equal lambda and equal rho."""
    return lambda_rho(a) == lambda_rho(b)


def omega_isomorphic(a: SequenceSpec, b: SequenceSpec) -> Witness:
    """``(p, q)`` with ``p lam_a = q lam_b`` and ``q rho_a = p rho_b``, if any."""
    return equivalent_pair(*lambda_rho(a), *lambda_rho(b))


def delta_isomorphic(a: SequenceSpec, b: SequenceSpec) -> bool:
    return lambda_rho(a)[0] == lambda_rho(b)[0]


def n_equal(a: SequenceSpec, b: SequenceSpec) -> bool:
    return lambda_rho(a)[1] == lambda_rho(b)[1]


def n_isomorphic(a: SequenceSpec, b: SequenceSpec) -> bool:
    return equivalent_single(lambda_rho(a)[1], lambda_rho(b)[1]) is not None


def self_dual(a: SequenceSpec) -> Witness:
    """``(p, q)`` with ``p lam = q rho``, if any."""
    return equivalent_single(*lambda_rho(a))


def is_ring(a: SequenceSpec) -> bool:
    """Whether the a-adic numbers form a ring, i.e. ``N = Z[1/p : p in P]``.

    Decided as: rho has no finite part and every prime infinite in rho is
    infinite in lambda as well.
    """
    lam, rho = lambda_rho(a)
    return not rho.finite and rho.inf.issubset(lam.inf)


def _tail_for(s: GenSupernatural) -> Tail:
    inf = s.inf
    if inf.cofinite:
        raise OutOfRepresentableClass("cofinite infinity set needs an Increment sequence")
    pre = (math.prod(p ** e for p, e in s.finite),) if s.finite else ()
    return Tail(pre, (math.prod(inf.primes),))


def realize(lam: GenSupernatural, rho: GenSupernatural) -> SequenceSpec:
    """A concrete sequence with the given lambda and rho.

    Finite parts go into one composite preperiod entry, infinite primes into
    a single period entry.  Cofinite infinity sets are realizable only as
    "all primes" on both sides.
    """
    if lam.inf.is_all() and rho.inf.is_all():
        return Increment(2)
    return EventuallyPeriodic(neg=_tail_for(rho), nonneg=_tail_for(lam))


def ring_companion(a: SequenceSpec, H: Optional[HSubgroup] = None) -> SequenceSpec:
    """A sequence ``b`` whose a-adic numbers form a ring, with ``lam_b = lam_a``
    and ``rho_b`` infinite exactly on P."""
    P, _ = prime_sets(a)
    if P.is_empty():
        raise EmptyP("P is empty, so there is no nontrivial H to carry over")
    if H is not None:
        H.check_in(a)
    lam, _ = lambda_rho(a)
    return realize(lam, GenSupernatural((), P))


def is_integral_domain(a: SequenceSpec) -> Optional[int]:
    """The prime ``p`` when every entry is a power of ``p``, else None."""
    if isinstance(a, Increment):
        return None
    primes = set()
    for e in a.all_entries():
        primes |= set(factor(e))
    return primes.pop() if len(primes) == 1 else None


@dataclass(frozen=True)
class MaximalOpenRing:
    """The closure of ``Z[1/p : p in P]`` inside the a-adic numbers.

    It is the union of the lattice ideals whose denominators only involve
    primes of P.  ``automorphism_primes`` is ``P ∪ Q``: multiplication by
    ``±r`` with ``r`` generated by these primes is an automorphism.
    """

    spec: SequenceSpec
    P: PrimeSet
    automorphism_primes: PrimeSet

    def __contains__(self, ideal: FracIdeal) -> bool:
        return in_U(self.spec, ideal) and all(p in self.P for p in factor(ideal.den))

    def is_whole(self) -> bool:
        return is_ring(self.spec)

    def to_json(self) -> dict:
        return {"P": self.P.to_json(), "is_whole": self.is_whole(),
                "automorphism_primes": self.automorphism_primes.to_json()}


def maximal_open_ring(a: SequenceSpec) -> MaximalOpenRing:
    P, Q = prime_sets(a)
    return MaximalOpenRing(a, P, P | Q)


# Surgery --------------------------------------------------------------------

_LOCAL_SPAN = {"factor": 1, "merge": 2, "swap": 2, "remove": 1, "insert": 1}
SURGERY_OPS = tuple(_LOCAL_SPAN) + ("shift", "reflect")


def _local(spec: SequenceSpec, op: str, i: int, args: tuple) -> SequenceSpec:
    if not isinstance(spec, EventuallyPeriodic):
        raise OutOfRepresentableClass(f"{op} on an Increment sequence leaves the representable class")
    lo = min(i, 0) - 1
    hi = max(i + _LOCAL_SPAN[op], 1) + 1
    w = window(spec, lo, hi)
    k = i - lo
    if op == "factor":
        c, d = args
        if c < 2 or d < 2 or c * d != w[k]:
            raise ValueError(f"cannot factor a_{i} = {w[k]} as {c}*{d}")
        new = w[:k] + [c, d] + w[k + 1:]
    elif op == "merge":
        new = w[:k] + [w[k] * w[k + 1]] + w[k + 2:]
    elif op == "swap":
        new = w[:k] + [w[k + 1], w[k]] + w[k + 2:]
    elif op == "remove":
        new = w[:k] + w[k + 1:]
    else:
        (c,) = args
        new = w[: k + 1] + [c] + w[k + 1:]
    return splice(spec, lo, hi, new)


def apply_surgery(spec: SequenceSpec, op: str, *args: int) -> SequenceSpec:
    """Apply one entry operation.

    ``factor(i, c, d)`` splits ``a_i = c*d`` into ``c, d``; ``merge(i)``
    multiplies ``a_i`` and ``a_{i+1}``; ``swap(i)`` exchanges them;
    ``remove(i)`` drops ``a_i``; ``insert(i, c)`` puts ``c`` right after
    ``a_i``; ``shift(n)`` translates to ``b_i = a_{i+n}``; ``reflect(n=0)``
    gives ``a^(n)``.  Entries left of the edited block keep their indices.
    """
    if op == "shift":
        (n,) = args
        return translate(spec, n)
    if op == "reflect":
        return shift(spec, args[0] if args else 0)
    if op not in _LOCAL_SPAN:
        raise ValueError(f"unknown surgery {op!r}; expected one of {SURGERY_OPS}")
    i, *rest = args
    return _local(spec, op, i, tuple(rest))


def sequence_surgery(spec: SequenceSpec, op: str, *args: int) -> tuple[SequenceSpec, bool]:
    """Apply a surgery and report whether the a-adic group survived it
    (decided with :func:`omega_isomorphic`, not assumed)."""
    out = apply_surgery(spec, op, *args)
    return out, omega_isomorphic(spec, out) is not None


# Reports ----------------------------------------------------------------------

def _witness_json(w: Witness):
    return None if w is None else list(w)


def _witness_from(w) -> Witness:
    return None if w is None else tuple(w)


@dataclass
class ClassificationReport:
    lam: GenSupernatural
    rho: GenSupernatural
    canonical_pair: CanonicalPair
    P: PrimeSet
    Q: PrimeSet
    self_dual: bool
    is_ring: bool
    is_integral_domain: bool
    integral_domain_prime: Optional[int] = None
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "rho": self.rho.to_json(),
            "canonical_pair": self.canonical_pair.to_json(),
            "P": self.P.to_json(),
            "Q": self.Q.to_json(),
            "flags": {"self_dual": self.self_dual, "is_ring": self.is_ring,
                      "is_integral_domain": self.is_integral_domain},
            "integral_domain_prime": self.integral_domain_prime,
            "witnesses": {k: _witness_json(v) for k, v in self.witnesses.items()},
        }

    @classmethod
    def from_json(cls, d: dict) -> "ClassificationReport":
        return cls(
            GenSupernatural.from_json(d["lambda"]), GenSupernatural.from_json(d["rho"]),
            CanonicalPair.from_json(d["canonical_pair"]),
            PrimeSet.from_json(d["P"]), PrimeSet.from_json(d["Q"]),
            d["flags"]["self_dual"], d["flags"]["is_ring"], d["flags"]["is_integral_domain"],
            d["integral_domain_prime"],
            {k: _witness_from(v) for k, v in d["witnesses"].items()},
        )


def report(a: SequenceSpec) -> ClassificationReport:
    lam, rho = lambda_rho(a)
    P, Q = prime_sets(a)
    sd = self_dual(a)
    dom = is_integral_domain(a)
    return ClassificationReport(lam, rho, canonical_pair_form(lam, rho), P, Q,
                                sd is not None, is_ring(a), dom is not None, dom,
                                {"self_dual": sd})


@dataclass
class PairComparison:
    equivalent: bool
    omega_isomorphic: Witness
    delta_isomorphic: bool
    n_equal: bool
    n_isomorphic: Witness

    def to_json(self) -> dict:
        return {
            "equivalent": self.equivalent,
            "omega_isomorphic": self.omega_isomorphic is not None,
            "omega_witness": _witness_json(self.omega_isomorphic),
            "delta_isomorphic": self.delta_isomorphic,
            "n_equal": self.n_equal,
            "n_isomorphic": self.n_isomorphic is not None,
            "n_witness": _witness_json(self.n_isomorphic),
        }

    @classmethod
    def from_json(cls, d: dict) -> "PairComparison":
        return cls(d["equivalent"], _witness_from(d["omega_witness"]), d["delta_isomorphic"],
                   d["n_equal"], _witness_from(d["n_witness"]))


def compare(a: SequenceSpec, b: SequenceSpec) -> PairComparison:
    return PairComparison(equivalent(a, b), omega_isomorphic(a, b), delta_isomorphic(a, b),
                          n_equal(a, b), equivalent_single(lambda_rho(a)[1], lambda_rho(b)[1]))
