from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from adiclab.arithmetic import add, embed, unit
from adiclab.duality import (SHARP, STAR, Angle, annihilator_level, character_eval,
                             character_eval_digits, discreteness_witness, dual_spec,
                             pair_general, pair_rational, pair_sharp, pair_star,
                             verify_annihilator)
from adiclab.errors import BadCase, InsufficientPrecision, NotInN, NotInNStar
from adiclab.sequence import shift

from conftest import ADELES, Q2, THREE_AT_ZERO, rationals_in_N, specs
from oracles import rational_pairing


def test_angles():
    assert Angle(Fraction(5, 4)) == Angle(Fraction(1, 4))
    assert Angle(Fraction(-1, 4)).value == Fraction(3, 4)
    assert str(Angle(Fraction(3, 8))) == "3/8 mod 1"
    assert Angle.from_json(Angle(Fraction(2, 3)).to_json()) == Angle(Fraction(2, 3))
    assert (Angle(Fraction(1, 2)) + Angle(Fraction(1, 2))).is_zero()


def test_star_examples():
    assert pair_star(embed(Q2, 1, 3), embed(Q2, 1, 3)) == Angle(Fraction(1, 2))
    assert pair_star(embed(Q2, Fraction(7, 4), 4), embed(Q2, 0, 4)).is_zero()
    # e_1 generates O_1 and e_0 generates the dual O*_0
    assert pair_star(unit(Q2, 1, 3), unit(Q2, 0, 3)).is_zero()


def test_sharp_and_general_examples():
    assert pair_sharp(embed(Q2, Fraction(1, 2), 2), embed(Q2, Fraction(1, 2), 2)) == Angle(Fraction(1, 4))
    assert pair_sharp(embed(Q2, 1, 2), embed(Q2, 1, 2)).is_zero()
    assert pair_general(1, embed(Q2, 1, 3), embed(Q2, 1, 3)) == Angle(Fraction(1, 4))


def test_pairing_guards():
    with pytest.raises(BadCase):
        pair_star(embed(THREE_AT_ZERO, 1, 3), embed(Q2, 1, 3))
    with pytest.raises(InsufficientPrecision):
        pair_star(embed(Q2, Fraction(1, 4), 1), embed(Q2, Fraction(1, 4), 1))
    with pytest.raises(InsufficientPrecision):
        pair_star(embed(Q2, 1, 3), embed(Q2, 1, 3), level=-5)


@pytest.mark.parametrize("flavor,n", [(STAR, 0), (SHARP, -1)])
@given(spec=specs, data=st.data())
def test_rational_formula(flavor, n, spec, data):
    x = data.draw(rationals_in_N(spec))
    y = data.draw(rationals_in_N(shift(spec, n)))
    expected = rational_pairing(x, y, spec.entry(0), flavor)
    assert pair_rational(spec, n, x, y) == Angle(expected)


@given(specs, st.integers(-3, 3), st.data())
def test_general_case_uses_scale(spec, n, data):
    x = data.draw(rationals_in_N(spec))
    y = data.draw(rationals_in_N(shift(spec, n)))
    w = Fraction(1)
    for i in range(0, n + 1):
        w *= spec.entry(i)
    for i in range(n + 1, 0):
        w /= spec.entry(i)
    assert pair_rational(spec, n, x, y) == Angle(x * y / w)


@given(specs, st.sampled_from([0, -1]), st.data())
def test_bicharacter(spec, n, data):
    dual = shift(spec, n)
    x1, x2 = data.draw(rationals_in_N(spec)), data.draw(rationals_in_N(spec))
    y1, y2 = data.draw(rationals_in_N(dual)), data.draw(rationals_in_N(dual))
    floors = [embed(spec, v, 0).floor for v in (x1, x2)] + [embed(dual, v, 0).floor for v in (y1, y2)]
    j = -min(floors) + max(n, 0) + 2
    ex = [embed(spec, v, j + 1) for v in (x1, x2)]
    ey = [embed(dual, v, j + 1) for v in (y1, y2)]
    p = lambda a, b: pair_general(n, a, b, level=j)
    assert p(add(*ex), ey[0]) == p(ex[0], ey[0]) + p(ex[1], ey[0])
    assert p(ex[0], add(*ey)) == p(ex[0], ey[0]) + p(ex[0], ey[1])


@given(specs, st.sampled_from([0, -1]), st.integers(1, 8), st.data())
def test_stabilization(spec, n, extra, data):
    x = data.draw(rationals_in_N(spec))
    y = data.draw(rationals_in_N(shift(spec, n)))
    assert pair_rational(spec, n, x, y) == pair_rational(spec, n, x, y, extra=extra)


@given(specs, st.data())
def test_general_matches_named_flavors(spec, data):
    # floors are >= -3 for these draws, so precision 8 is past stabilization
    x = embed(spec, data.draw(rationals_in_N(spec)), 8)
    for n, named in ((0, pair_star), (-1, pair_sharp)):
        dual = shift(spec, n)
        y = embed(dual, data.draw(rationals_in_N(dual)), 8)
        assert named(x, y) == pair_general(n, x, y)


@given(specs, st.data())
def test_nondegenerate(spec, data):
    q = data.draw(rationals_in_N(spec))
    assume(q != 0)
    dual = dual_spec(spec, STAR)
    assert any(not pair_rational(spec, 0, q, Fraction(1) / d).is_zero()
               for d in _dual_denominators(dual, 12))


def _dual_denominators(dual, depth):
    out, d = [], 1
    for i in range(1, depth + 1):
        d *= dual.entry(-i)
        out.append(d)
    return out


def test_annihilator_levels():
    assert annihilator_level(0, STAR) == 1
    assert annihilator_level(0, SHARP) == 0
    assert annihilator_level(3, STAR) == -2


def test_annihilator_examples():
    assert verify_annihilator(Q2, 0, STAR)
    assert verify_annihilator(THREE_AT_ZERO, 1, STAR)
    assert not verify_annihilator(Q2, 0, STAR, level=0)
    assert not verify_annihilator(Q2, 0, STAR, level=2)


@pytest.mark.parametrize("spec", [Q2, THREE_AT_ZERO, ADELES])
@pytest.mark.parametrize("flavor", [STAR, SHARP])
def test_annihilator_range(spec, flavor):
    for j in range(-3, 5):
        assert verify_annihilator(spec, j, flavor, window=6)
        assert not verify_annihilator(spec, j, flavor, window=6, level=annihilator_level(j, flavor) - 1)


def test_character_examples():
    assert character_eval(Q2, 0, 1, 1) == Angle(Fraction(1, 2))
    assert character_eval(Q2, Fraction(3, 8), 5, 0).is_zero()
    with pytest.raises(NotInN):
        character_eval(Q2, 0, 1, Fraction(1, 3))
    with pytest.raises(NotInNStar):
        character_eval(Q2, 0, Fraction(1, 3), 1)


@given(specs, st.data())
def test_diagonal_is_trivial(spec, data):
    y = data.draw(rationals_in_N(dual_spec(spec, STAR)))
    q = data.draw(rationals_in_N(spec))
    assert character_eval(spec, y, y, q).is_zero()


@given(specs, st.data())
def test_character_additive_in_q(spec, data):
    v = data.draw(st.fractions(max_denominator=20))
    y = data.draw(rationals_in_N(dual_spec(spec, STAR)))
    q1, q2 = data.draw(rationals_in_N(spec)), data.draw(rationals_in_N(spec))
    assert character_eval(spec, v, y, q1 + q2) == character_eval(spec, v, y, q1) + character_eval(spec, v, y, q2)


def test_character_vanishes_only_on_diagonal():
    box = [Fraction(m, 2 ** k) for m in range(-8, 9) for k in range(3)]
    qs = [Fraction(1, 2 ** k) for k in range(6)]
    for v in box:
        for y in box:
            trivial = all(character_eval(Q2, v, y, q).is_zero() for q in qs)
            assert trivial == (v == y)


@given(specs, st.data())
def test_character_digits_agree(spec, data):
    dual = dual_spec(spec, STAR)
    y = data.draw(rationals_in_N(dual))
    v, q = data.draw(st.fractions(max_denominator=9)), data.draw(rationals_in_N(spec))
    fl = embed(dual, y, 0).floor
    ey = embed(dual, y, -min(fl, embed(spec, q, 0).floor) + 2)
    assert character_eval_digits(spec, v, ey, q) == character_eval(spec, v, y, q)


def test_discreteness():
    assert discreteness_witness(Q2, 0)
    assert discreteness_witness(Q2, Fraction(1, 2))
    assert discreteness_witness(Q2, 1)


@given(specs, st.data())
def test_discreteness_everywhere(spec, data):
    assert discreteness_witness(spec, data.draw(rationals_in_N(spec)))
