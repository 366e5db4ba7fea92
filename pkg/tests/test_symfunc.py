import random

import pytest

from qrook.qalg import LaurentPoly, RationalFn, q_multinomial, q_number
from qrook.shapes import Partition, dominance_leq, partitions
from qrook.symfunc import (
    BASES,
    SymFunc,
    basis_element,
    charge,
    expand_in,
    htilde_t0,
    kostka,
    kostka_foulkes,
    omega,
    plethysm_over_qminus1,
    semistandard_tableaux,
    to_basis,
    w_basis_element,
    wtilde_basis_element,
)

Q = LaurentPoly.monomial(1)


def rf(x):
    return RationalFn(x)


def e(*lam):
    return basis_element("e", lam)


def h(*lam):
    return basis_element("h", lam)


def p(*lam):
    return basis_element("p", lam)


def m(*lam):
    return basis_element("m", lam)


def s(*lam):
    return basis_element("s", lam)


def _random_symfunc(n, basis, rng):
    coeffs = {}
    for lam in partitions(n):
        if rng.random() < 0.6:
            coeffs[lam] = RationalFn(LaurentPoly({rng.randrange(3): rng.randrange(-3, 4)}))
    return SymFunc(n, basis, coeffs)


def test_trivial_conversions():
    assert to_basis(e(1, 1), "m") == m(2) + m(1, 1) * 2
    assert to_basis(h(2), "m").coeffs == {Partition((2,)): rf(1), Partition((1, 1)): rf(1)}
    assert expand_in(p(2), "e") == {Partition((1, 1)): rf(1), Partition((2,)): rf(-2)}
    assert expand_in(h(2), "e") == {Partition((1, 1)): rf(1), Partition((2,)): rf(-1)}
    assert expand_in(e(1) * e(1) * e(1), "e") == {Partition((1, 1, 1)): rf(1)}


def test_keys_must_have_the_right_size():
    with pytest.raises(ValueError):
        SymFunc(3, "m", {(2,): 1})
    with pytest.raises(ValueError):
        SymFunc(2, "x", {})


@pytest.mark.parametrize("n", range(1, 7))
def test_round_trips_through_m(n):
    rng = random.Random(n)
    for basis in BASES:
        f = _random_symfunc(n, basis, rng)
        back = to_basis(to_basis(f, "m"), basis)
        assert back.coeffs == f.coeffs


@pytest.mark.parametrize("n", range(1, 6))
def test_pairwise_round_trips(n):
    rng = random.Random(100 + n)
    for a in BASES:
        f = _random_symfunc(n, a, rng)
        for b in BASES:
            assert to_basis(to_basis(f, b), a).coeffs == f.coeffs


def test_kostka_and_tableaux():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3, 2), (2, 2, 1)) == 2
    assert kostka((2, 2), (3, 1)) == 0
    assert len(semistandard_tableaux((2, 1), (2, 1))) == 1


def test_charge_examples():
    assert charge([3, 1, 2]) == 2
    assert charge([2, 1, 3]) == 1
    assert charge([1, 2, 3]) == 3
    assert charge([3, 2, 1]) == 0
    with pytest.raises(ValueError):
        charge([2, 2])


@pytest.mark.parametrize("n", range(1, 7))
def test_kostka_foulkes_properties(n):
    for lam in partitions(n):
        for mu in partitions(n):
            k = kostka_foulkes(lam, mu)
            assert k(1) == kostka(lam, mu) if not k.is_zero() else kostka(lam, mu) == 0
            if lam == mu:
                assert k == LaurentPoly.monomial(0)
            if not k.is_zero():
                assert dominance_leq(mu, lam)
                # monic of degree n(mu) - n(lam), where n(mu) = sum (i-1) mu_i
                assert k.degree == mu.conjugate().n_prime() - lam.conjugate().n_prime()
                assert k.leading_coefficient() == 1


def test_kostka_foulkes_known_value():
    assert kostka_foulkes(Partition((2, 1)), Partition((1, 1, 1))) == LaurentPoly({1: 1, 2: 1})
    assert kostka_foulkes(Partition((3,)), Partition((1, 1, 1))) == LaurentPoly.monomial(3)


@pytest.mark.parametrize("n", range(1, 7))
def test_omega(n):
    rng = random.Random(n)
    f = _random_symfunc(n, "s", rng)
    assert omega(omega(f)) == f
    for lam in partitions(n):
        assert omega(e(*lam)) == h(*lam)
        assert omega(s(*lam)) == s(*lam.conjugate())


def test_omega_examples():
    assert omega(e(2)) == h(2)
    assert omega(p(2)) == p(2) * -1


def test_product():
    assert to_basis(e(1) * e(1), "s") == s(2) + s(1, 1)
    assert to_basis(h(1) * h(2), "s") == s(3) + s(2, 1)
    assert (p(1) * p(2)).basis == "p"


def test_plethysm():
    one_minus = RationalFn(LaurentPoly({1: 1, 0: -1}))
    assert plethysm_over_qminus1(p(1)) == p(1) * (RationalFn(1) / one_minus)
    two = RationalFn(LaurentPoly({2: 1, 0: -1}))
    assert plethysm_over_qminus1(p(2)) == p(2) * (RationalFn(1) / two)
    for n in range(1, 5):
        f = basis_element("e", (1,) * n)
        assert plethysm_over_qminus1(f) * one_minus ** n == f


def test_htilde_small_cases():
    assert htilde_t0(Partition((1,))) == s(1)
    assert htilde_t0(Partition((2,))) == s(2) + s(1, 1) * rf(Q)
    assert htilde_t0(Partition((1, 1))) == s(2)


@pytest.mark.parametrize("n", range(1, 7))
def test_w_row_is_q_multinomial(n):
    w = w_basis_element(Partition((n,)))
    for mu in partitions(n):
        assert w[mu] == RationalFn(q_multinomial(n, mu))


@pytest.mark.parametrize("n", range(1, 6))
def test_w_column_is_elementary(n):
    assert w_basis_element(Partition((1,) * n)) == e(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_w_basis_is_unitriangular(n):
    for lam in partitions(n):
        w = w_basis_element(lam)
        for mu, c in w.coeffs.items():
            assert dominance_leq(mu, lam)
        assert w[lam] == RationalFn(1)


@pytest.mark.parametrize("n", range(1, 6))
def test_omega_htilde_is_wtilde(n):
    for lam in partitions(n):
        assert omega(htilde_t0(lam)) == wtilde_basis_element(lam)


@pytest.mark.parametrize("n", range(1, 6))
def test_wtilde_row_at_q1(n):
    w = wtilde_basis_element(Partition((n,))).at(1)
    for mu in partitions(n):
        assert w[mu] == RationalFn(q_multinomial(n, mu)(1))


def test_w_basis_identity():
    assert expand_in(w_basis_element(Partition((2,))), "W") == {Partition((2,)): rf(1)}


def test_json_round_trip():
    f = m(2) * rf(q_number(2)) + m(1, 1) * (RationalFn(1) / RationalFn(LaurentPoly({1: 1, 0: -1})))
    data = f.to_json()
    assert data["basis"] == "m" and data["coeffs"]["2"] == "q + 1"
    assert SymFunc.from_json(data) == f


def test_degree_limit():
    with pytest.raises(ValueError):
        htilde_t0(Partition((9,)))
