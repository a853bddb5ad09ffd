import pytest
from hypothesis import given

from adiclab.primes import PrimeSet, factor, valuation
from adiclab.sequence import sharp, star
from adiclab.supernatural import (INF, CanonicalPair, GenSupernatural, canonical_pair_form,
                                  equivalent_pair, equivalent_single, lambda_rho, mul_natural)

from conftest import ADELES, Q2, Q3, THREE_AT_NEGATIVE, THREE_AT_ZERO, ep_specs, specs
from oracles import brute_pair, scanned_lambda_rho


def S(finite=None, inf=()):
    return GenSupernatural.make(finite or {}, inf)


def test_factor_and_valuation():
    assert factor(360) == {2: 3, 3: 2, 5: 1}
    assert valuation(48, 2) == 4


def test_prime_set_algebra():
    a, b = PrimeSet.finite({2, 3}), PrimeSet.excluding({3, 5})
    assert a & b == PrimeSet.finite({2})
    assert a | b == PrimeSet.excluding({5})
    assert b - a == PrimeSet.excluding({2, 3, 5})
    assert a.complement() == PrimeSet.excluding({2, 3})
    assert PrimeSet.finite({7}).issubset(b)
    assert not b.issubset(a)
    for s in (a, b, PrimeSet.all(), PrimeSet.empty()):
        assert PrimeSet.from_json(s.to_json()) == s


def test_lambda_rho_examples():
    lam, rho = lambda_rho(Q3)
    assert lam == rho == S(inf={3})
    lam, rho = lambda_rho(THREE_AT_ZERO)
    assert lam == S({3: 1}, {2}) and rho == S(inf={2})
    lam, rho = lambda_rho(ADELES)
    assert lam.inf.is_all() and rho == lam


@given(ep_specs)
def test_lambda_rho_matches_partial_products(spec):
    lam, rho = lambda_rho(spec)
    slam, srho = scanned_lambda_rho(spec)
    for s, scanned in ((lam, slam), (rho, srho)):
        for p in set(scanned) | s.support():
            assert s[p] == scanned.get(p, 0)


def test_mul_natural():
    assert mul_natural(S(inf={2}), 2) == S(inf={2})
    assert mul_natural(S({3: 1}, {2}), 3) == S({3: 2}, {2})
    s = S({5: 2}, {2})
    assert mul_natural(s, 1) == s
    with pytest.raises(ValueError):
        mul_natural(s, 0)


def test_equivalent_single_examples():
    assert equivalent_single(S(inf={2}), S({3: 1}, {2})) == (3, 1)
    assert equivalent_single(S(inf={2}), S(inf={3})) is None
    s = S({5: 1}, {2})
    assert equivalent_single(s, s) == (1, 1)


@given(specs)
def test_equivalent_single_witness_holds(spec):
    lam, rho = lambda_rho(spec)
    w = equivalent_single(lam, rho)
    if w is not None:
        assert mul_natural(lam, w[0]) == mul_natural(rho, w[1])


def test_equivalent_pair_examples():
    a, b = lambda_rho(THREE_AT_ZERO), lambda_rho(THREE_AT_NEGATIVE)
    assert equivalent_pair(*a, *b) == (1, 3)
    assert equivalent_pair(*a, *a) == (1, 1)
    two, three = S(inf={2}), S(inf={3})
    assert equivalent_pair(two, two, two, three) is None
    assert brute_pair({2: INF}, {2: INF}, {2: INF}, {3: INF}) is None


@given(specs)
def test_equivalent_pair_reflexive(spec):
    assert equivalent_pair(*lambda_rho(spec), *lambda_rho(spec)) == (1, 1)


@given(specs, specs)
def test_canonical_form_decides_equivalent_pair(a, b):
    la, ra = lambda_rho(a)
    lb, rb = lambda_rho(b)
    same = canonical_pair_form(la, ra) == canonical_pair_form(lb, rb)
    assert same == (equivalent_pair(la, ra, lb, rb) is not None)


def test_canonical_pair_form_examples():
    f = canonical_pair_form(*lambda_rho(THREE_AT_ZERO))
    assert f == CanonicalPair(PrimeSet.finite({2}), PrimeSet.finite({2}), ((3, 1),))
    assert canonical_pair_form(*lambda_rho(THREE_AT_NEGATIVE)) == f
    assert canonical_pair_form(*lambda_rho(Q2)) != canonical_pair_form(*lambda_rho(Q3))


@given(specs)
def test_reflection_swaps_invariants(spec):
    lam, rho = lambda_rho(spec)
    assert lambda_rho(sharp(spec)) == (rho, lam)
    # star moves a_0 from the nonnegative to the negative side
    a0 = spec.entry(0)
    assert mul_natural(lambda_rho(star(spec))[0], 1) == mul_natural(rho, a0)


@given(specs)
def test_json_round_trip(spec):
    lam, rho = lambda_rho(spec)
    for s in (lam, rho):
        assert GenSupernatural.from_json(s.to_json()) == s
    f = canonical_pair_form(lam, rho)
    assert CanonicalPair.from_json(f.to_json()) == f


def test_invalid_supernaturals():
    with pytest.raises(ValueError):
        S({2: -1}, {3})
    with pytest.raises(ValueError):
        S({2: 1}, {2})
    with pytest.raises(ValueError):
        S({2: 1})


def test_str():
    assert str(S({3: 1}, {2})) == "3^1·2^inf"
