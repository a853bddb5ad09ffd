"""The ax+b group N x| H acting on the a-adic numbers.

Group elements are pairs ``(r, h)`` acting by ``x -> r + h x``; composition is
``(r1, h1)(r2, h2) = (r1 + h1 r2, h1 h2)``, the unique law for which the action
is a left action.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .arithmetic import AdicApprox, add, embed, eq_mod, in_N, scalar_mul
from .errors import NoContraction, NotInLattice, NotInN, NotInS, TrivialH
from .lattice import ZZ, FracIdeal, generalized_index, in_U
from .primes import factor, rational_primes
from .sequence import SequenceSpec, in_S


@dataclass(frozen=True)
class AffineElement:
    r: Fraction = Fraction(0)
    h: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "r", Fraction(self.r))
        object.__setattr__(self, "h", Fraction(self.h))
        if self.h <= 0:
            raise ValueError("h must be a positive rational")

    def __matmul__(self, other: "AffineElement") -> "AffineElement":
        return compose(self, other)

    def __call__(self, q) -> Fraction:
        return self.r + self.h * Fraction(q)

    def inverse(self) -> "AffineElement":
        return AffineElement(-self.r / self.h, 1 / self.h)

    def to_json(self) -> dict:
        return {"r": str(self.r), "h": str(self.h)}

    @classmethod
    def from_json(cls, d: dict) -> "AffineElement":
        return cls(Fraction(d["r"]), Fraction(d["h"]))


IDENTITY = AffineElement()


def compose(g1: AffineElement, g2: AffineElement) -> AffineElement:
    return AffineElement(g1.r + g1.h * g2.r, g1.h * g2.h)


def check_element(spec: SequenceSpec, g: AffineElement) -> None:
    if not in_N(spec, g.r):
        raise NotInN(f"{g.r} is not in N")
    if g.h != 1 and not in_S(spec, g.h):
        raise NotInS(f"{g.h} is not in S")


def act(g: AffineElement, x: AdicApprox) -> AdicApprox:
    """``r + h x``, known to the precision that multiplication by ``h`` leaves."""
    hx = scalar_mul(g.h, x)
    return add(embed(x.spec, g.r, hx.precision), hx)


class HSubgroup:
    """Subgroup of the positive rationals given by generators.

    Membership is decided on exponent vectors: ``h`` is in the group iff its
    vector lies in the integer span of the generators' vectors.
    """

    def __init__(self, generators: Sequence):
        gens = tuple(Fraction(g) for g in generators)
        for g in gens:
            if g <= 0 or g == 1:
                raise ValueError(f"generator {g} must be a positive rational other than 1")
        self.generators = gens
        self._primes = sorted(set().union(*(rational_primes(g) for g in gens)))
        self._echelon = _echelon([self._vector(g) for g in gens])

    def _vector(self, q: Fraction) -> list[int]:
        num, den = factor(q.numerator), factor(q.denominator)
        return [num.get(p, 0) - den.get(p, 0) for p in self._primes]

    def __contains__(self, h) -> bool:
        h = Fraction(h)
        if h <= 0:
            return False
        if not rational_primes(h) <= set(self._primes):
            return False
        return _reduces_to_zero(self._echelon, self._vector(h))

    def is_trivial(self) -> bool:
        return not self.generators

    def check_in(self, spec: SequenceSpec) -> None:
        for g in self.generators:
            if not in_S(spec, g):
                raise NotInS(f"generator {g} is not in S")

    def integers_above_one(self, bound: int = 4) -> list[int]:
        """Integers ``> 1`` reachable with generator exponents in ``[-bound, bound]``."""
        found = set()
        for exps in itertools.product(range(-bound, bound + 1), repeat=len(self.generators)):
            v = Fraction(1)
            for g, e in zip(self.generators, exps):
                v *= g ** e
            if v.denominator == 1 and v > 1:
                found.add(v.numerator)
        return sorted(found)

    def __repr__(self):
        return f"HSubgroup({[str(g) for g in self.generators]})"


def _echelon(rows: list[list[int]]) -> list[list[int]]:
    """Integer row echelon form (Euclidean row operations only)."""
    rows = [list(r) for r in rows if any(r)]
    out = []
    col = 0
    width = len(rows[0]) if rows else 0
    while rows and col < width:
        nz = [r for r in rows if r[col]]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                k = r[col] // piv[col]
                for c in range(width):
                    r[c] -= k * piv[c]
            nz = [r for r in nz if r[col]]
        piv = nz[0]
        if piv[col] < 0:
            piv[:] = [-c for c in piv]
        out.append(piv)
        rows = [r for r in rows if r is not piv and any(r)]
        col += 1
    return out


def _reduces_to_zero(echelon: list[list[int]], v: list[int]) -> bool:
    v = list(v)
    for row in echelon:
        col = next(c for c, x in enumerate(row) if x)
        if v[col] % row[col]:
            return False
        k = v[col] // row[col]
        v = [a - k * b for a, b in zip(v, row)]
    return not any(v)


def contraction_witness(spec: SequenceSpec, H: HSubgroup, q, ideal: FracIdeal,
                        bound: int = 4) -> AffineElement:
    """A group element mapping ``q + ideal`` onto the strictly smaller coset
    ``q + s*ideal``.

    ``s`` is the smallest integer above 1 found in ``H`` (searching generator
    exponents up to ``bound``); an ideal coset can only shrink under an
    integer multiplier, so a group without one has no such witness.
    """
    q = Fraction(q)
    if H.is_trivial():
        raise TrivialH("H must be nontrivial")
    H.check_in(spec)
    if not in_U(spec, ideal):
        raise NotInLattice(f"{ideal} is not in the lattice of this sequence")
    candidates = H.integers_above_one(bound)
    if not candidates:
        raise NoContraction(f"{H} contains no integer > 1 within exponent bound {bound}")
    s = candidates[0]
    g = AffineElement(q - s * q, s)
    image = ideal.scale(s)
    assert in_U(spec, image) and image.issubset(ideal) and image != ideal
    # (s, r) . (q + t) = q + s t for every t in the ideal
    assert g(q) == q
    return g


@dataclass(frozen=True)
class FixedPoints:
    kind: str  # "all", "none" or "at_most_one"
    point: Optional[Fraction] = None

    def to_json(self) -> dict:
        return {"kind": self.kind, "point": None if self.point is None else str(self.point)}


def fixed_point_in_N(spec: SequenceSpec, g: AffineElement) -> FixedPoints:
    if g.h == 1:
        return FixedPoints("all") if g.r == 0 else FixedPoints("none")
    x0 = g.r / (1 - g.h)
    return FixedPoints("at_most_one", x0 if in_N(spec, x0) else None)


def orbit_witness(spec: SequenceSpec, target: Union[AdicApprox, tuple]) -> AffineElement:
    """A translation ``(q', 1)`` moving 0 into the target coset ``q + O_j``.

    ``target`` is either ``(q, j)`` with ``q`` rational or an element given by
    digits, in which case ``q'`` is read off its digit window.
    """
    if isinstance(target, AdicApprox):
        elem = target
        g = AffineElement(elem.representative(), 1)
    else:
        q, j = target
        elem = embed(spec, q, j)
        g = AffineElement(q, 1)
    moved = act(g, embed(spec, 0, elem.precision))
    assert eq_mod(moved, elem, elem.precision)
    return g


def haar_index(spec: SequenceSpec, h) -> Fraction:
    """Haar scaling factor of ``x -> h x``, normalised so that
    ``integral psi(x) dx = delta(h) * integral psi(h x) dx``.

    With ``psi`` the indicator of Delta this is ``mu(Delta) / mu(h^-1 Delta)``,
    a generalized index of two lattice ideals.
    """
    h = Fraction(h)
    if not in_S(spec, h):
        raise NotInS(f"{h} is not in S")
    return generalized_index(ZZ, ZZ.scale(1 / h))
