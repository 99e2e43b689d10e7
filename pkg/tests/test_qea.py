"""Word expressions, the triangular algebra, the Hopf pairing and canonical
forms."""

import pytest

from qminor.scalars import RatScalar, LaurentPoly
from qminor.rootdata import CartanDatum
from qminor.qea import (WordExpr, TriExpr, pairing, tri_mul, serre_element,
                        canonical_form, expr_equal, expr_is_zero,
                        sigma_eta, generator_pairing)

A2 = CartanDatum("A2")
A3 = CartanDatum("A3")
B2 = CartanDatum("B2")


def E(datum, i, k=1):
    return WordExpr.generator(datum, i, k)


def F(datum, i, k=1):
    return WordExpr.generator(datum, i, k, side="F")


def qp(k, c=1):
    return RatScalar.q_power(k, c)


def test_word_expr_ring():
    x = E(A2, 1) * E(A2, 2)
    y = E(A2, 2) * E(A2, 1)
    assert x + y == y + x
    assert x - x == WordExpr.zero(A2)
    assert (x + y).scale(qp(2)) == x.scale(qp(2)) + y.scale(qp(2))
    assert x * WordExpr.one(A2) == x


def test_divided_power_merge():
    # E_i E_i^{(k)} = [k+1]_{q_i} E_i^{(k+1)}.
    x = E(A2, 1) * E(A2, 1)
    two = RatScalar.from_laurent(LaurentPoly.q_power(1)
                                 + LaurentPoly.q_power(-1))
    assert x == E(A2, 1, 2).scale(two)


def test_weight_and_homogeneity():
    x = E(A2, 1, 2) * E(A2, 2)
    assert x.is_homogeneous()
    assert x.weight().root_coords_int() == (2, 1)
    mixed = E(A2, 1) + E(A2, 2)
    assert not mixed.is_homogeneous()
    parts = mixed.homogeneous_components()
    assert len(parts) == 2


def test_eta_inverts_scalars_and_fixes_words():
    x = (E(A2, 1) * E(A2, 2)).scale(qp(1))
    assert x.eta() == (E(A2, 1) * E(A2, 2)).scale(qp(-1))
    assert x.eta().eta() == x


def test_sigma_reverses_words():
    x = E(A2, 1) * E(A2, 2)
    assert x.sigma() == E(A2, 2) * E(A2, 1)
    assert (x.scale(qp(3))).sigma() == (E(A2, 2) * E(A2, 1)).scale(qp(3))


def test_sigma_eta_example():
    # sigma_eta(E1E2 - q^{-1}E2E1) = E2E1 - q E1E2.
    x = E(A2, 1) * E(A2, 2) - (E(A2, 2) * E(A2, 1)).scale(qp(-1))
    assert sigma_eta(x) == E(A2, 2) * E(A2, 1) - (E(A2, 1) * E(A2, 2)).scale(qp(1))


def test_triangular_commutation_ef():
    # E_1F_1 = F_1E_1 + (K_{a1} - K_{-a1})/(q - q^{-1}); E_1F_2 = F_2E_1.
    lhs = tri_mul(TriExpr.e_gen(A2, 1), TriExpr.f_gen(A2, 1))
    coeff = RatScalar.one() / (qp(1) - qp(-1))
    rhs = (tri_mul(TriExpr.f_gen(A2, 1), TriExpr.e_gen(A2, 1))
           + TriExpr.k_elt(A2, (1, 0)).scale(coeff)
           - TriExpr.k_elt(A2, (-1, 0)).scale(coeff))
    assert lhs == rhs
    assert tri_mul(TriExpr.e_gen(A2, 1), TriExpr.f_gen(A2, 2)) == \
        tri_mul(TriExpr.f_gen(A2, 2), TriExpr.e_gen(A2, 1))


def test_triangular_commutation_ke():
    # E_1 K_{a1} = q^{-<a1,a1>} K_{a1} E_1 = q^{-2} K_{a1} E_1.
    K1 = TriExpr.k_elt(A2, (1, 0))
    lhs = tri_mul(TriExpr.e_gen(A2, 1), K1)
    rhs = tri_mul(K1, TriExpr.e_gen(A2, 1)).scale(qp(-2))
    assert lhs == rhs


def test_generator_pairing_axioms():
    # (E_i, F_j) = delta_ij / (1 - q_i^{-2}); (K_lam, K_mu) = q^{-(lam,mu)}.
    one = RatScalar.one()
    assert pairing(E(A2, 1), F(A2, 1)) == one / (one - qp(-2))
    assert pairing(E(A2, 1), F(A2, 2)).is_zero()
    assert pairing(E(B2, 2), F(B2, 2)) == one / (one - qp(-4))
    assert pairing(TriExpr.k_elt(A2, (1, 0)), TriExpr.k_elt(A2, (0, 1))) == qp(1)
    assert pairing(TriExpr.k_elt(A2, (1, 0)), TriExpr.k_elt(A2, (1, 0))) == qp(-2)


def test_pairing_side_enforcement():
    with pytest.raises(ValueError):
        pairing(F(A2, 1), F(A2, 1))
    with pytest.raises(ValueError):
        pairing(E(A2, 1), E(A2, 1))


def test_serre_elements_vanish():
    # The quantum Serre element is nonzero as a word expression but has
    # vanishing canonical form (zero in the algebra).
    for datum in (A2, A3, B2):
        for i in datum.indices:
            for j in datum.indices:
                if i == j or datum.cartan[i - 1][j - 1] == 0:
                    continue
                s = serre_element(datum, i, j)
                assert not s.is_zero()
                assert canonical_form(s).is_zero()
                assert expr_is_zero(s)


def test_serre_element_shape_a2():
    # S_12 = E_1^{(2)}E_2 - E_1E_2E_1 + E_2E_1^{(2)}.
    s = serre_element(A2, 1, 2)
    expected = (E(A2, 1, 2) * E(A2, 2)
                - E(A2, 1) * E(A2, 2) * E(A2, 1)
                + E(A2, 2) * E(A2, 1, 2))
    assert s == expected


def test_canonical_form_separates():
    x = E(A2, 1) * E(A2, 2)
    y = E(A2, 2) * E(A2, 1)
    assert canonical_form(x) != canonical_form(y)
    assert expr_equal(x, x)
    assert not expr_equal(x, y)
    # q E2E1 + E_{b2} = E1E2 is a nontrivial algebra identity:
    b2 = E(A2, 1) * E(A2, 2) - y.scale(qp(-1))
    assert expr_equal(y.scale(qp(-1)) + b2, x)


def test_canonical_form_of_zero():
    assert canonical_form(WordExpr.zero(A2)).is_zero()
