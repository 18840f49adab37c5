import pytest
import sympy
from hypothesis import given, strategies as st

from quandle_lab import DomainError
from quandle_lab.closed_forms import (
    CyclicPoly,
    SurfaceKnotLabel,
    constant_term,
    count_square_pairs,
    distinguish_pair,
    gauss_sum_poly,
    phi_FI,
    phi_closed_form,
    verify_prop31,
)

PRIMES_3_MOD_4 = [3, 7, 11, 19, 23]
ODD_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23]
t = sympy.Symbol("t")


def sympy_closed_form(p, variant):
    """Oracle: expand with sympy, fold negative exponents by t^p = 1, reduce mod t^p - 1."""
    plus = sum(t ** (2 * k * k) for k in range(p))
    minus = sum(t ** ((-2 * k * k) % p) for k in range(p))
    expr = p * plus * (plus if variant == 1 else minus)
    rem = sympy.rem(sympy.expand(expr), t**p - 1, t)
    poly = sympy.Poly(rem, t)
    return tuple(int(poly.coeff_monomial(t**i)) for i in range(p))


def test_gauss_sum_poly_p3():
    assert gauss_sum_poly(3, 1).coefficients == (1, 0, 2)
    assert gauss_sum_poly(3, -1).coefficients == (1, 2, 0)


@pytest.mark.parametrize("p", ODD_PRIMES)
@pytest.mark.parametrize("sign", [1, -1])
def test_gauss_sum_poly_mass(p, sign):
    assert gauss_sum_poly(p, sign).mass() == p


def test_closed_form_p3():
    assert phi_closed_form(3, 1).coefficients == (3, 12, 12)
    assert phi_closed_form(3, 2).coefficients == (15, 6, 6)
    assert phi_closed_form(3, 1).pretty() == "3 + 12t + 12t^2"


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
@pytest.mark.parametrize("variant", [1, 2])
def test_closed_form_matches_sympy(p, variant):
    assert phi_closed_form(p, variant).coefficients == sympy_closed_form(p, variant)


@pytest.mark.parametrize("p", ODD_PRIMES)
def test_mass_and_palindromes(p):
    v1, v2 = phi_closed_form(p, 1), phi_closed_form(p, 2)
    assert v1.mass() == v2.mass() == p**3
    assert constant_term(v1) + sum(v1.coefficients[1:]) == p**3
    assert v2.is_palindromic()


@pytest.mark.parametrize("p", PRIMES_3_MOD_4)
def test_variants_differ(p):
    assert phi_closed_form(p, 1) != phi_closed_form(p, 2)


@pytest.mark.parametrize("p", PRIMES_3_MOD_4)
def test_constant_terms(p):
    assert constant_term(phi_closed_form(p, 1)) == p
    assert constant_term(phi_closed_form(p, 2)) == p * (2 * p - 1)


def test_constant_term_zero():
    assert constant_term(CyclicPoly.zero(7)) == 0


@pytest.mark.parametrize("p,counts,terms", [(3, (1, 5), (3, 15)), (7, (1, 13), (7, 91)), (11, (1, 21), (11, 231))])
def test_verify_prop31_examples(p, counts, terms):
    r = verify_prop31(p)
    assert (r.sum_count, r.diff_count) == counts
    assert r.constant_terms == terms
    assert r.ok


@pytest.mark.parametrize("p", [q for q in ODD_PRIMES if q % 4 == 3])
def test_verify_prop31_all_small(p):
    assert verify_prop31(p).ok


@pytest.mark.parametrize("p", [5, 13, 17, 9, 2])
def test_verify_prop31_hypothesis_enforced(p):
    with pytest.raises(DomainError):
        verify_prop31(p)


@pytest.mark.parametrize("p", [5, 13, 17, 29])
def test_hypothesis_is_necessary(p):
    # -1 is a square mod p, so i^2 + j^2 = 0 has nonzero solutions
    plus, _ = count_square_pairs(p)
    assert plus > 1
    assert constant_term(phi_closed_form(p, 1)) == constant_term(phi_closed_form(p, 2))


def test_phi_FI():
    I = SurfaceKnotLabel((3, 7), (1, 2))
    assert phi_FI(1, I) == phi_closed_form(3, 1)
    assert phi_FI(2, I) == phi_closed_form(7, 2)
    m = SurfaceKnotLabel((3,), (2,), mirror=True)
    assert phi_FI(1, m).coefficients == (15, 6, 6)
    with pytest.raises(DomainError):
        phi_FI(3, I)


@pytest.mark.parametrize("p", PRIMES_3_MOD_4)
@pytest.mark.parametrize("e", [1, 2])
def test_mirror_preserves_constant_term(p, e):
    lab = SurfaceKnotLabel((p,), (e,))
    assert constant_term(phi_FI(1, lab)) == constant_term(phi_FI(1, lab.mirrored()))


def test_genus_does_not_change_invariant():
    assert phi_FI(1, SurfaceKnotLabel((7,), (1,), genus=3)) == phi_closed_form(7, 1)


@pytest.mark.parametrize(
    "kwargs",
    [dict(primes=(3, 3), exponents=(1, 1)), dict(primes=(4,), exponents=(1,)), dict(primes=(3,), exponents=(3,)),
     dict(primes=(3, 7), exponents=(1,))],
)
def test_label_validation(kwargs):
    with pytest.raises(DomainError):
        SurfaceKnotLabel(**kwargs)


def test_distinguish_examples():
    v = distinguish_pair((1,), (2,), (3,))
    assert v.distinguished and v.constant_terms == (3, 15) and v.text == "condition (ii') fails"
    v = distinguish_pair((1, 1), (1, 2), (3, 7))
    assert (v.index, v.prime, v.constant_terms) == (2, 7, (7, 91))
    with pytest.raises(DomainError):
        distinguish_pair((1, 2), (1, 2), (3, 7))


@given(st.lists(st.sampled_from([1, 2]), min_size=1, max_size=4), st.lists(st.sampled_from([1, 2]), min_size=1, max_size=4))
def test_distinct_labels_always_distinguished(I, J):
    n = min(len(I), len(J))
    I, J = tuple(I[:n]), tuple(J[:n])
    primes = (3, 7, 11, 19)[:n]
    if I == J:
        return
    assert distinguish_pair(I, J, primes).distinguished
