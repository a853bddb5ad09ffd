"""Digit arithmetic in the a-adic numbers.

An element is only ever known modulo ``O_j`` (the elements whose digits below
``j`` vanish), so :class:`AdicApprox` stores the digit window
``[floor, precision)`` and nothing above it.  Positional weights are

    w_i = a_0 ... a_{i-1}            (i >= 0)
    w_i = 1 / (a_-1 ... a_i)         (i < 0)

and the truncation of ``x`` below ``j`` is the rational ``sum x_i w_i``, which
determines ``x`` modulo ``U_j = w_j Z``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Sequence, Union

from .errors import InsufficientPrecision, NotInN, NotInS, SpecMismatch
from .primes import factor
from .sequence import SequenceSpec, entry, in_S
from .supernatural import lambda_rho


@lru_cache(maxsize=1 << 16)
def weight(spec: SequenceSpec, i: int) -> Fraction:
    if i >= 0:
        return Fraction(math.prod(entry(spec, k) for k in range(i)))
    return Fraction(1, math.prod(entry(spec, k) for k in range(i, 0)))


def in_N(spec: SequenceSpec, q) -> bool:
    """Whether ``q`` lies in N, the rationals whose denominator divides some
    ``a_-1 ... a_-k``."""
    _, rho = lambda_rho(spec)
    den = Fraction(q).denominator
    return all(e <= rho[p] for p, e in factor(den).items())


def _natural_floor(spec: SequenceSpec, q: Fraction) -> tuple[int, int]:
    """Largest ``k <= 0`` with ``q`` in ``U_k``, with ``a_-1 ... a_k``.

    ``q`` is in ``U_k`` exactly when its denominator divides that product;
    the caller guarantees ``q`` lies in N so the search ends.
    """
    den = Fraction(q).denominator
    k, prod = 0, 1
    while prod % den:
        k -= 1
        prod *= entry(spec, k)
    return k, prod


def _expand(spec: SequenceSpec, q: Fraction, j: int) -> tuple[int, list[int]]:
    k, prod = _natural_floor(spec, q)
    start = min(k, j)
    for i in range(start, k):
        prod *= entry(spec, i)
    t = q.numerator * prod // q.denominator  # q / w_start, an integer
    digits = []
    for i in range(start, j):
        t, d = divmod(t, entry(spec, i))
        digits.append(d)
    return start, digits


@dataclass(frozen=True)
class AdicApprox:
    """An element known modulo ``O_precision``.

    ``digits[k]`` is the digit at index ``floor + k``.  Leading zero digits are
    stripped on construction, so ``floor`` is the index of the first nonzero
    digit, or ``precision`` when the whole window vanishes.  ``exact`` records
    the rational when the element is known to be the image of one.
    """

    spec: SequenceSpec
    floor: int
    digits: tuple[int, ...]
    precision: int
    exact: Optional[Fraction] = None

    def __post_init__(self):
        digits = tuple(int(d) for d in self.digits)
        if self.floor + len(digits) != self.precision:
            raise ValueError("digit window must cover [floor, precision)")
        for k, d in enumerate(digits):
            a = entry(self.spec, self.floor + k)
            if not 0 <= d < a:
                raise ValueError(f"digit {d} at index {self.floor + k} outside [0, {a})")
        lead = 0
        while lead < len(digits) and digits[lead] == 0:
            lead += 1
        object.__setattr__(self, "floor", self.floor + lead)
        object.__setattr__(self, "digits", digits[lead:])
        if self.exact is not None:
            object.__setattr__(self, "exact", Fraction(self.exact))

    def digit(self, i: int) -> int:
        if i >= self.precision:
            raise InsufficientPrecision(f"digit {i} requested, precision is {self.precision}")
        if i < self.floor:
            return 0
        return self.digits[i - self.floor]

    def is_zero(self) -> bool:
        return not self.digits

    def partial(self, j: int) -> Fraction:
        """The rational ``sum_{i <= j} x_i w_i`` (the truncation ``x^(j)``)."""
        if j >= self.precision:
            raise InsufficientPrecision(f"truncation at {j} needs precision > {j}")
        return sum((Fraction(d) * weight(self.spec, self.floor + k)
                    for k, d in enumerate(self.digits[: max(0, j + 1 - self.floor)])),
                   Fraction(0))

    def representative(self) -> Fraction:
        """A rational congruent to this element modulo ``U_precision``."""
        return self.partial(self.precision - 1)

    def __add__(self, other: "AdicApprox") -> "AdicApprox":
        return add(self, other)

    def __neg__(self) -> "AdicApprox":
        return negate(self)

    def __sub__(self, other: "AdicApprox") -> "AdicApprox":
        return add(self, negate(other))

    def __str__(self):
        return f"{{floor:{self.floor}, digits:[{', '.join(map(str, self.digits))}], precision:{self.precision}}}"

    def to_json(self) -> dict:
        return {"floor": self.floor, "digits": list(self.digits), "precision": self.precision,
                "exact": None if self.exact is None else str(self.exact)}

    @classmethod
    def from_json(cls, spec: SequenceSpec, d: dict) -> "AdicApprox":
        exact = d.get("exact")
        return cls(spec, d["floor"], tuple(d["digits"]), d["precision"],
                   None if exact is None else Fraction(exact))


def _built(spec: SequenceSpec, floor: int, digits: list[int], precision: int,
           exact: Optional[Fraction] = None) -> AdicApprox:
    # digits here come out of mod arithmetic, so only leading zeros need work
    lead = 0
    while lead < len(digits) and digits[lead] == 0:
        lead += 1
    x = object.__new__(AdicApprox)
    for name, value in (("spec", spec), ("floor", floor + lead), ("digits", tuple(digits[lead:])),
                        ("precision", precision), ("exact", exact)):
        object.__setattr__(x, name, value)
    return x


def from_digits(spec: SequenceSpec, floor: int,
                digits: Union[Sequence[int], Callable[[int], int]],
                precision: Optional[int] = None) -> AdicApprox:
    """Build an element from digits starting at index ``floor``.

    ``digits`` is either a finite sequence or a function of the index; a
    function is evaluated on ``[floor, precision)``.
    """
    if callable(digits):
        if precision is None:
            raise ValueError("a digit generator needs an explicit precision")
        window = [digits(i) for i in range(floor, precision)]
    else:
        window = list(digits)
        if precision is None:
            precision = floor + len(window)
        elif precision < floor + len(window):
            window = window[: precision - floor]
        else:
            window += [0] * (precision - floor - len(window))
    return AdicApprox(spec, floor, tuple(window), precision)


def zero(spec: SequenceSpec, j: int) -> AdicApprox:
    return AdicApprox(spec, j, (), j, Fraction(0))


def unit(spec: SequenceSpec, i: int, precision: int) -> AdicApprox:
    """The element with a single digit 1 at index ``i``."""
    if precision <= i:
        raise InsufficientPrecision("unit digit lies above the precision")
    return from_digits(spec, i, [1], precision)


def embed(spec: SequenceSpec, q, j: int) -> AdicApprox:
    """The image of the rational ``q`` of N, known modulo ``O_j``."""
    q = Fraction(q)
    if not in_N(spec, q):
        raise NotInN(f"{q} is not in N for this sequence")
    start, digits = _expand(spec, q, j)
    return _built(spec, start, digits, j, q)


def _same_spec(x: AdicApprox, y: AdicApprox):
    if x.spec != y.spec:
        raise SpecMismatch("operands belong to different sequences")


def add(x: AdicApprox, y: AdicApprox) -> AdicApprox:
    """Digit-wise addition with carry; the result is known to the smaller
    precision and the carry out of the window is discarded."""
    _same_spec(x, y)
    spec = x.spec
    j = min(x.precision, y.precision)
    lo = min(x.floor, y.floor, j)
    out, carry = [], 0
    for i in range(lo, j):
        a = entry(spec, i)
        carry, d = divmod(x.digit(i) + y.digit(i) + carry, a)
        out.append(d)
    exact = x.exact + y.exact if x.exact is not None and y.exact is not None else None
    return _built(spec, lo, out, j, exact)


def negate(x: AdicApprox) -> AdicApprox:
    spec = x.spec
    out, borrow = [], 0
    for i in range(x.floor, x.precision):
        a = entry(spec, i)
        s = -x.digit(i) - borrow
        out.append(s % a)
        borrow = 1 if s < 0 else 0
    return _built(spec, x.floor, out, x.precision, None if x.exact is None else -x.exact)


def scaled_precision(spec: SequenceSpec, h, j: int) -> int:
    """Precision left after multiplying by ``h = m/n``: the largest ``i`` with
    ``(1/n) U_j`` contained in ``U_i``.  Integers keep precision ``j``."""
    n = Fraction(h).denominator
    i = j
    wj = weight(spec, j)
    while (wj / (n * weight(spec, i))).denominator != 1:
        i -= 1
        if j - i > 100_000:
            raise NotInS(f"multiplication by {h} is not continuous here")
    return i


def scalar_mul(h, x: AdicApprox) -> AdicApprox:
    """Multiply by a positive integer or by an element of S.

    Other rationals are rejected: multiplication by them is not continuous,
    so no finite window of the result is determined by a window of ``x``.
    """
    h = Fraction(h)
    if h <= 0:
        raise ValueError("multiplier must be positive")
    spec = x.spec
    if h.denominator != 1 and not in_S(spec, h):
        raise NotInS(f"{h} is not in S for this sequence")
    jp = scaled_precision(spec, h, x.precision)
    start, digits = _expand(spec, h * x.representative(), jp)
    return _built(spec, start, digits, jp, None if x.exact is None else h * x.exact)


def truncate(x: AdicApprox, j: int) -> AdicApprox:
    """Keep the digits below ``j``; the result is known modulo ``O_j``."""
    if j > x.precision:
        raise InsufficientPrecision(f"cannot truncate at {j} above precision {x.precision}")
    lo = min(x.floor, j)
    return AdicApprox(x.spec, lo, tuple(x.digit(i) for i in range(lo, j)), j)


def eq_mod(x: AdicApprox, y: AdicApprox, j: int) -> bool:
    """Whether ``x`` and ``y`` agree modulo ``O_j``."""
    _same_spec(x, y)
    if j > x.precision or j > y.precision:
        raise InsufficientPrecision(f"comparison at {j} exceeds a precision")
    return all(x.digit(i) == y.digit(i) for i in range(min(x.floor, y.floor), j))
