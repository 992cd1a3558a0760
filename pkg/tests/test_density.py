import math
import random
from fractions import Fraction

import pytest

from cltgroups.density import (
    CERTIFICATE_ONLY,
    ORACLE_VERIFIED,
    ApproxResult,
    approximate_target,
    assign_pairs,
    lemma32_value,
    result_to_dict,
    verify_lemma32,
    witness_description,
)
from cltgroups.errors import DomainError
from cltgroups.numtheory import is_prime
from cltgroups.spectrum import spectrum
from cltgroups.constructions import g_pqn


def product_of(indices):
    return math.prod((Fraction(3 * n + 5, 3 * n + 6) for n in indices), start=Fraction(1))


def greedy_by_hand(t, eps):
    """Float-free restatement of the greedy, for cross-checking index sets."""
    chosen, P, n = [], Fraction(1), 0
    while P - t >= eps:
        if P * (3 * n + 5) >= t * (3 * n + 6):
            P = P * (3 * n + 5) / (3 * n + 6)
            chosen.append(n)
        n += 1
    return chosen


@pytest.mark.parametrize("n, value", [(0, Fraction(5, 6)), (1, Fraction(8, 9)), (2, Fraction(11, 12))])
def test_lemma32_value(n, value):
    assert lemma32_value(n) == value


def test_lemma32_value_rejects_negative():
    with pytest.raises(DomainError):
        lemma32_value(-1)


def test_lemma32_sequence_increases_to_one():
    values = [lemma32_value(n) for n in range(51)]
    assert all(0 < v < 1 for v in values)
    assert all(a < b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("p, q, n, missing", [(2, 3, 0, 6), (2, 3, 1, 18), (5, 3, 0, 15)])
def test_verify_lemma32_examples(p, q, n, missing):
    assert verify_lemma32(p, q, n)
    rep = spectrum(g_pqn(p, q, n))
    assert rep.missing_orders == (missing,)


def test_verify_lemma32_rejects_bad_pair():
    with pytest.raises(DomainError):
        verify_lemma32(2, 5, 0)


def test_approximate_one_is_empty():
    r = approximate_target(1, Fraction(1, 10))
    assert r.index_set == () and r.product == 1 and r.pairs == []


def test_approximate_nine_tenths():
    r = approximate_target(Fraction(9, 10), Fraction(1, 100))
    assert r.index_set == (2, 17)
    assert r.product == Fraction(154, 171) == Fraction(11, 12) * Fraction(56, 57)


def test_approximate_half():
    t, eps = Fraction(1, 2), Fraction(1, 1000)
    r = approximate_target(t, eps)
    assert t <= r.product < t + eps
    assert product_of(r.index_set) == r.product
    assert list(r.index_set) == greedy_by_hand(t, eps)


@pytest.mark.parametrize("t", [0, -1, Fraction(11, 10)])
def test_approximate_rejects_target(t):
    with pytest.raises(DomainError):
        approximate_target(t, Fraction(1, 10))


def test_approximate_rejects_eps():
    with pytest.raises(DomainError):
        approximate_target(Fraction(1, 2), 0)


def test_postcondition_on_random_targets():
    # below 1/10 the index set grows into the thousands, so sample the same range as the CLI sweep
    rng = random.Random(20261016)
    for _ in range(1000):
        t = Fraction(rng.randint(10**3, 10**4), 10**4)
        eps = Fraction(1, 10 ** rng.randint(1, 3))
        r = approximate_target(t, eps)
        assert t <= r.product < t + eps
        primes = [x for p, q, _ in r.pairs for x in (p, q)]
        assert len(primes) == len(set(primes))


def test_pairs_disjoint_and_valid():
    pairs = assign_pairs(tuple(range(200)))
    primes = [x for p, q, _ in pairs for x in (p, q)]
    assert len(primes) == len(set(primes))
    for p, q, _ in pairs:
        assert is_prime(p) and is_prime(q) and q % 2 == 1 and (p + 1) % q == 0


def test_pairs_first_assignments():
    assert assign_pairs((0, 1)) == [(2, 3, 0), (19, 5, 1)]


def test_witness_empty():
    w = witness_description(approximate_target(1, Fraction(1, 2)))
    assert w.verified == ORACLE_VERIFIED and w.degree == 1 and w.group.order == 1


def test_witness_single_a4():
    r = ApproxResult(Fraction(5, 6), Fraction(1, 100), (0,), Fraction(5, 6), assign_pairs((0,)))
    w = witness_description(r)
    assert r.pairs == [(2, 3, 0)]
    assert w.verified == ORACLE_VERIFIED and w.degree == Fraction(5, 6) and w.group.order == 12


def test_witness_two_pairs():
    r = ApproxResult(Fraction(20, 27), Fraction(1, 100), (0, 1), product_of((0, 1)), assign_pairs((0, 1)))
    assert r.product == Fraction(20, 27)
    w = witness_description(r)
    assert w.order == 12 * 19**2 * 5**2
    assert w.verified == CERTIFICATE_ONLY
    assert w.description == "(C_2^2 ⋊ C_3) × (C_19^2 ⋊ C_5) × C_5"


def test_witness_non_clt_factors():
    r = approximate_target(Fraction(3, 4), Fraction(1, 100))
    for p, q, n in r.pairs:
        assert lemma32_value(n) < 1


def test_result_dict():
    r = approximate_target(Fraction(9, 10), Fraction(1, 100))
    d = result_to_dict(r)
    assert d["product"] == "154/171" and d["index_set"] == [2, 17]
    assert d["pairs"] == [[2, 3, 2], [19, 5, 17]]
    assert d["witness_order"] == 2**2 * 3**3 * 19**2 * 5**18


def test_huge_witness_reported_by_factorization():
    r = approximate_target(Fraction(1, 10), Fraction(1, 1000))
    assert r.witness_order_log10 > 10**6
    d = result_to_dict(r)
    assert d["witness_order"] is None
    w = witness_description(r)
    assert w.order is None and w.verified == CERTIFICATE_ONLY
    # the factorization is exact: check it against the pairs on a prefix
    head = ApproxResult(r.target, r.epsilon, r.index_set[:5], product_of(r.index_set[:5]), r.pairs[:5])
    assert math.prod(p**e for p, e in head.witness_order_factorization) == head.witness_order
