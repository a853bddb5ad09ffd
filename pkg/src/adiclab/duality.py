"""Duality pairings as exact rational angles.

For a sequence ``a`` and an integer ``n`` the a-adic numbers of ``a`` are
paired with those of the reflection ``a^(n)`` through

    <x, y> = lim_j exp(2 pi i * c_n * x^(j) y^(j)),

with ``c_n = 1/(a_0 ... a_n)`` for ``n >= 0``, ``1`` for ``n = -1`` and
``a_-1 ... a_{n+1}`` for ``n <= -2`` -- uniformly ``c_n = 1 / w_{n+1}``.
The star convention is ``n = 0`` and the sharp convention ``n = -1``.

Term by term, ``x_i y_m w_i w'_m c_n`` is an integer once ``i + m > n``, so
with ``k = -floor(x)`` and ``l = -floor(y)`` the limit is already reached at
``j = max(k, l) + max(n, 0)``.  Angles are stored as rationals in [0, 1);
nothing transcendental is ever evaluated.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arithmetic import AdicApprox, embed, in_N, unit, weight
from .errors import BadCase, InsufficientPrecision, NotInN, NotInNStar
from .sequence import SequenceSpec, shift

STAR = "star"
SHARP = "sharp"
FLAVOR_SHIFT = {STAR: 0, SHARP: -1}


@dataclass(frozen=True)
class Angle:
    """``exp(2 pi i * value)`` with ``value`` reduced into [0, 1)."""

    value: Fraction = Fraction(0)

    def __post_init__(self):
        v = Fraction(self.value)
        object.__setattr__(self, "value", v - (v.numerator // v.denominator))

    def __add__(self, other: "Angle") -> "Angle":
        return Angle(self.value + other.value)

    def __neg__(self) -> "Angle":
        return Angle(-self.value)

    def __sub__(self, other: "Angle") -> "Angle":
        return Angle(self.value - other.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self):
        return f"{self.value.numerator}/{self.value.denominator} mod 1"

    def to_json(self) -> str:
        return f"{self.value.numerator}/{self.value.denominator}"

    @classmethod
    def from_json(cls, s: str) -> "Angle":
        return cls(Fraction(s))


def pairing_scale(spec: SequenceSpec, n: int) -> Fraction:
    return 1 / weight(spec, n + 1)


def stabilization_level(x: AdicApprox, y: AdicApprox, n: int) -> int:
    return max(-x.floor, -y.floor) + max(n, 0)


def pair_general(n: int, x: AdicApprox, y: AdicApprox, level: int | None = None) -> Angle:
    """Pair ``x`` (over ``a``) with ``y`` (over ``a^(n)``).

    ``level`` forces evaluation of ``z_level``; it must be at or past the
    stabilization level, otherwise the value would not be the limit.
    """
    if y.spec != shift(x.spec, n):
        raise BadCase(f"second operand is not over the reflection a^({n})")
    bound = stabilization_level(x, y, n)
    j = bound if level is None else level
    if j < bound:
        raise InsufficientPrecision(f"level {j} is below the stabilization level {bound}")
    if x.precision <= j or y.precision <= j:
        raise InsufficientPrecision(
            f"pairing needs digits through index {j}; precisions are {x.precision}, {y.precision}")
    return Angle(x.partial(j) * y.partial(j) * pairing_scale(x.spec, n))


def pair_rational(spec: SequenceSpec, n: int, x, y, extra: int = 0) -> Angle:
    """Pair two rationals (``x`` in N of ``a``, ``y`` in N of ``a^(n)``) through
    their digit embeddings, evaluated ``extra`` levels past stabilization."""
    dual = shift(spec, n)
    fx, fy = embed(spec, x, 0).floor, embed(dual, y, 0).floor
    j = max(-fx, -fy) + max(n, 0) + extra
    return pair_general(n, embed(spec, x, j + 1), embed(dual, y, j + 1), level=j)


def pair_star(x: AdicApprox, y: AdicApprox, level: int | None = None) -> Angle:
    return pair_general(0, x, y, level)


def pair_sharp(x: AdicApprox, y: AdicApprox, level: int | None = None) -> Angle:
    return pair_general(-1, x, y, level)


def dual_spec(spec: SequenceSpec, flavor: str) -> SequenceSpec:
    return shift(spec, FLAVOR_SHIFT[flavor])


def annihilator_level(j: int, flavor: str) -> int:
    """Index ``m`` such that the dual ``O_m`` pairs onto the annihilator of ``O_j``."""
    if flavor == STAR:
        return -j + 1
    if flavor == SHARP:
        return -j
    raise ValueError(f"unknown flavor {flavor!r}")


def verify_annihilator(spec: SequenceSpec, j: int, flavor: str, window: int = 8,
                       level: int | None = None) -> bool:
    """Check the annihilator correspondence on topological generators.

    Every unit digit ``e_i`` (``j <= i < j + window``) of ``O_j`` must pair
    trivially with every unit digit ``e_m`` (``level <= m < level + window``)
    of the dual subgroup, and some ``e_i`` must pair nontrivially with
    ``e_{level-1}``.  ``level`` defaults to :func:`annihilator_level`; passing
    another value is how a wrong level is shown to fail.
    """
    n = FLAVOR_SHIFT[flavor]
    dual = shift(spec, n)
    if level is None:
        level = annihilator_level(j, flavor)

    def pairing(i: int, m: int) -> Angle:
        prec = max(-i, -m, i, m) + max(n, 0) + 1
        return pair_general(n, unit(spec, i, prec), unit(dual, m, prec))

    gens = range(j, j + window)
    if any(not pairing(i, m).is_zero() for i in gens for m in range(level, level + window)):
        return False
    return any(not pairing(i, level - 1).is_zero() for i in gens)


def character_eval(spec: SequenceSpec, v, y, q, flavor: str = STAR) -> Angle:
    """``omega((v, y) + N*)(q)`` for rational ``v``, ``y`` in N* and ``q`` in N.

    Equal to ``exp(-2 pi i c q v) <q, y>`` with ``c`` the flavor's scale; for
    rational ``y`` the second factor is ``exp(2 pi i c q y)``.
    """
    v, y, q = Fraction(v), Fraction(y), Fraction(q)
    if not in_N(spec, q):
        raise NotInN(f"{q} is not in N")
    if not in_N(dual_spec(spec, flavor), y):
        raise NotInNStar(f"{y} is not in the dual rationals")
    return Angle(q * (y - v) * pairing_scale(spec, FLAVOR_SHIFT[flavor]))


def character_eval_digits(spec: SequenceSpec, v, y: AdicApprox, q, flavor: str = STAR) -> Angle:
    """Same character, with ``y`` an arbitrary element of the dual given by digits."""
    v, q = Fraction(v), Fraction(q)
    n = FLAVOR_SHIFT[flavor]
    xq = embed(spec, q, 0)
    need = stabilization_level(xq, y, n) + 1
    xq = embed(spec, q, need)
    return Angle(-q * v * pairing_scale(spec, n)) + pair_general(n, xq, y)


def discreteness_witness(spec: SequenceSpec, q) -> bool:
    """Whether ``q`` stays outside ``(-1, 1) x Delta`` unless it is zero.

    Membership in Delta is read off the digits of the embedding (no digit
    below index 0), which is what makes ``N ∩ Delta = Z`` checkable.
    """
    q = Fraction(q)
    if not in_N(spec, q):
        raise NotInN(f"{q} is not in N")
    in_delta = embed(spec, q, 1).floor >= 0
    return q == 0 or not (abs(q) < 1 and in_delta)
