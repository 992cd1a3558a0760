import pytest
from hypothesis import given
from hypothesis import strategies as st

from cltgroups.constructions import (
    CERTIFICATE_ONLY,
    ORACLE_VERIFIED,
    agl1,
    check_trace,
    frobenius_subgroup,
    g_pqn,
    plan,
    theorem1_construct,
    translation_subgroup,
)
from cltgroups.errors import DomainError
from cltgroups.numtheory import factorize, is_prime_power, prime_set
from cltgroups.permgroup import cyclic_group, direct_product, verify_frobenius
from cltgroups.spectrum import enumerate_subgroups, spectrum

COMPOSITE_NON_PRIME_POWERS = [d for d in range(6, 201) if not is_prime_power(d)]


def is_a4(G):
    """Order 12 with element orders {1, 2, 3}, 3 involutions, and no subgroup of order 6."""
    orders = G.element_orders()
    return (G.order == 12 and sorted(set(orders)) == [1, 2, 3] and orders.count(2) == 3
            and 6 not in spectrum(G).realized_orders)


@pytest.mark.parametrize("p, m, order", [(2, 1, 2), (2, 2, 12), (3, 2, 72), (5, 1, 20), (2, 3, 56)])
def test_agl1_orders(p, m, order):
    assert agl1(p, m).order == order


def test_agl_2_2_is_a4():
    assert is_a4(agl1(2, 2))


def test_frobenius_subgroup_examples():
    T = frobenius_subgroup(3, 2, 1)
    assert T.order == 9 and set(T.element_orders()) == {1, 3}
    assert frobenius_subgroup(3, 2, 4).order == 36
    assert is_a4(frobenius_subgroup(2, 2, 3))


def test_frobenius_subgroup_rejects_non_divisor():
    with pytest.raises(DomainError):
        frobenius_subgroup(3, 2, 3)


@pytest.mark.parametrize("p, q, n, order", [(2, 3, 0, 12), (2, 3, 1, 36), (5, 3, 0, 75), (13, 7, 0, 1183)])
def test_g_pqn_orders(p, q, n, order):
    assert g_pqn(p, q, n).order == order


def test_g_pqn_base_is_a4():
    assert is_a4(g_pqn(2, 3, 0))


def test_g_pqn_is_a4_times_c3():
    G = g_pqn(2, 3, 1)
    assert spectrum(G) == spectrum(direct_product(agl1(2, 2), cyclic_group(3)))


@pytest.mark.parametrize("p, q", [(2, 5), (5, 2), (4, 3), (2, 2), (3, 3), (7, 3)])
def test_g_pqn_rejects(p, q):
    with pytest.raises(DomainError):
        g_pqn(p, q, 0)


@pytest.mark.parametrize("p, q", [(2, 3), (5, 3), (11, 3), (13, 7), (19, 5)])
def test_g_pqn_core_is_frobenius(p, q):
    G = g_pqn(p, q, 0)
    assert verify_frobenius(G, translation_subgroup(G, p, 2))


def test_construct_6_is_a4():
    cert = theorem1_construct(6)
    (step,) = cert.trace
    assert (step.p1, step.n1, step.p2, step.n2, step.a, step.r) == (2, 1, 3, 1, 2, 1)
    assert cert.verified == ORACLE_VERIFIED and cert.missing_confirmed
    assert is_a4(cert.group)


def test_construct_12():
    cert = theorem1_construct(12)
    (step,) = cert.trace
    assert (step.p1, step.n1, step.p2, step.n2, step.a, step.r) == (3, 1, 2, 2, 2, 1)
    assert cert.order == 36 and cert.description == "(C_3^2 ⋊ C_4)"
    assert 12 not in spectrum(cert.group).realized_orders


def test_construct_60_and_full_affine_witness():
    cert = theorem1_construct(60)
    assert cert.order == 180
    assert cert.description == "(C_3^2 ⋊ C_4) × C_5"
    assert [s.kind for s in cert.trace] == ["case2", "case1"]
    assert cert.trace[0].stripped_prime == 5 and cert.trace[0].reduced_d == 12
    assert 60 not in spectrum(cert.group).realized_orders
    full = theorem1_construct(60, full_agl=True)
    assert full.order == 360 and full.description == "(C_3^2 ⋊ C_8) × C_5"
    assert 60 not in spectrum(full.group).realized_orders


@pytest.mark.parametrize("d", [1, 2, 4, 5, 8, 27, 125])
def test_construct_guard(d):
    with pytest.raises(DomainError):
        theorem1_construct(d)


def test_prime_power_message():
    with pytest.raises(DomainError, match="8 is a prime power"):
        theorem1_construct(8)


def test_large_witness_is_certificate_only():
    cert = theorem1_construct(158)  # 2^39 * 79
    assert cert.verified == CERTIFICATE_ONLY and cert.group is None
    assert cert.order == 2**39 * 79


def test_no_verify_skips_oracle():
    cert = theorem1_construct(60, verify=False)
    assert cert.verified == CERTIFICATE_ONLY and cert.group is not None


@pytest.mark.parametrize("d", COMPOSITE_NON_PRIME_POWERS)
def test_certificate_invariants(d):
    cert = theorem1_construct(d, verify=False)
    assert cert.order % d == 0
    assert prime_set(cert.order) == prime_set(d)
    check_trace(d, cert.trace)
    base = cert.trace[-1]
    assert (base.p1 ** (base.r * base.a) - 1) % base.p2**base.n2 == 0


def test_orientation_prefers_smaller_order():
    # d = 10: ord(2 mod 5) = 4 does not divide 1; ord(5 mod 2) = 1 divides 1
    (step,) = plan(10)
    assert (step.p1, step.p2, step.order) == (2, 5, 80)
    # d = 20: ord(2 mod 5) = 4 does not divide 2; ord(5 mod 4) = 1 divides 1
    (step,) = plan(20)
    assert (step.p1, step.r * step.a, step.order) == (2, 4, 80)


def test_case2_strips_largest_prime():
    trace = plan(2 * 3 * 5 * 7)
    assert [s.stripped_prime for s in trace[:-1]] == [7, 5]
    assert trace[-1].p1 * trace[-1].p2 == 6


@given(st.sampled_from(COMPOSITE_NON_PRIME_POWERS))
def test_tampered_trace_detected(d):
    trace = plan(d)
    base = trace[-1]
    base.r += 1
    with pytest.raises(AssertionError):
        check_trace(d, trace)


def test_construct_to_dict():
    data = theorem1_construct(12).to_dict()
    assert data["d"] == 12 and data["order"] == 36
    assert data["factorization"] == [[2, 2], [3, 1]]
    assert data["verified"] == ORACLE_VERIFIED
    assert data["generators"] and all(min(g) == 1 for g in data["generators"])
