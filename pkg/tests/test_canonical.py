"""The dual PBW basis, the twisted bar involution, the dual canonical
basis, lattice congruences, and quantum flag minors."""

import pytest

from qminor.scalars import RatScalar, LaurentPoly
from qminor.rootdata import (CartanDatum, ReducedWord, longest_word, form,
                             Vec, weyl_act)
from qminor.qea import WordExpr, expr_equal, sigma_eta
from qminor.pbw import (pbw_monomial, dual_pbw_normalizer, data_of_weight,
                        rlex_less, datum_weight, pbw_coordinates)
from qminor.canonical import (dual_pbw_element, dual_pbw_expansion,
                              from_dual_pbw, sigma_eta_dual_coords,
                              eigen_scalar, bar_matrix, dual_canonical_basis,
                              dual_canonical_element, expand_dual_canonical,
                              in_q_lattice, congruent_mod_qL,
                              flag_minor_datum, flag_minor, demazure_flag,
                              basis_element_json, dual_product,
                              pbw_to_dual_coords, NotUnitriangular)

A2 = CartanDatum("A2")
A3 = CartanDatum("A3")
B2 = CartanDatum("B2")
W_A2 = longest_word(A2)


def qp(k, c=1):
    return RatScalar.q_power(k, c)


def E(datum, i, k=1):
    return WordExpr.generator(datum, i, k)


# -- dual PBW ------------------------------------------------------------------

def test_dual_pbw_element():
    # E(m)* = f_m E(m); for m = e_1 that is (1 - q^2) E_1.
    x = dual_pbw_element(W_A2, (1, 0, 0))
    assert x == E(A2, 1).scale(RatScalar.one() - qp(2))


def test_dual_pbw_expansion_roundtrip():
    coords = {(1, 0, 1): qp(2), (0, 1, 0): qp(0, 3)}
    x = from_dual_pbw(W_A2, coords)
    back = dual_pbw_expansion(x, W_A2)
    assert back == coords


def test_dual_product_matches_elements():
    # dual_product in coordinates = multiply the elements, re-expand.
    ca = {(1, 0, 0): RatScalar.one()}
    cb = {(0, 1, 0): RatScalar.one()}
    prod = dual_product(W_A2, ca, cb)
    elt = from_dual_pbw(W_A2, ca) * from_dual_pbw(W_A2, cb)
    assert prod == dual_pbw_expansion(elt, W_A2)


# -- the twisted bar involution ------------------------------------------------

def test_eigen_scalar_values():
    # s_mu = (-1)^tr q^{-(<mu,mu>/2 + sum k_i d_i)} in this convention.
    assert eigen_scalar(A2, (1, 0)) == qp(-2, -1)
    assert eigen_scalar(A2, (1, 1)) == qp(-3)
    assert eigen_scalar(B2, (0, 1)) == qp(-4, -1)


def test_dual_pbw_is_twisted_bar_eigenvector_on_roots():
    # sigma_eta(E(e_k)*) = s_beta E(e_k)* for every root of A2 and B2.
    for datum in (A2, B2):
        w = longest_word(datum)
        for k in range(1, len(w) + 1):
            m = tuple(1 if t == k else 0 for t in range(1, len(w) + 1))
            x = dual_pbw_element(w, m)
            s = eigen_scalar(datum, w.betas[k - 1])
            assert expr_equal(sigma_eta(x), x.scale(s))


def test_bar_matrix_weight_alpha1():
    data, R = bar_matrix((1, 0), W_A2)
    assert data == ((1, 0, 0),)
    assert R[(1, 0, 0)][(1, 0, 0)].is_one()


def test_bar_matrix_weight_alpha1_alpha2():
    # 2x2 unitriangular over rlex with unit diagonal; the off-diagonal
    # entry is q - q^{-1} (bar-antisymmetric, as the involution forces).
    data, R = bar_matrix((1, 1), W_A2)
    assert data == ((0, 1, 0), (1, 0, 1))
    assert R[(0, 1, 0)][(0, 1, 0)].is_one()
    assert R[(1, 0, 1)][(1, 0, 1)].is_one()
    assert (1, 0, 1) not in R or (0, 1, 0) not in R[(1, 0, 1)]
    off = R[(0, 1, 0)][(1, 0, 1)]
    assert off + off.bar() == RatScalar.zero()


def test_bar_matrix_weight_zero():
    data, R = bar_matrix((0, 0), W_A2)
    assert data == ((0, 0, 0),)


def test_bar_matrix_is_involutive():
    # Applying the twisted involution twice in coordinates is the identity.
    for mu in ((1, 1), (2, 1), (1, 2)):
        s_inv = RatScalar.one() / eigen_scalar(A2, mu)
        for n in data_of_weight(W_A2, mu):
            col = sigma_eta_dual_coords(W_A2, {n: RatScalar.one()})
            col = {m: c * s_inv for m, c in col.items()}
            back = sigma_eta_dual_coords(W_A2, col)
            back = {m: c * s_inv for m, c in back.items()
                    if not (c * s_inv).is_zero()}
            assert back == {n: RatScalar.one()}


# -- the dual canonical basis --------------------------------------------------

def test_dual_canonical_basis_a2():
    basis = dual_canonical_basis((1, 1), W_A2)
    assert basis[(0, 1, 0)] == {(0, 1, 0): RatScalar.one()}
    assert basis[(1, 0, 1)] == {(1, 0, 1): RatScalar.one(),
                                (0, 1, 0): qp(1)}


def test_dual_canonical_unitriangular_qzq():
    for datum, w, mus in ((A2, W_A2, ((2, 1), (2, 2))),
                          (B2, longest_word(B2), ((1, 1), (1, 2), (2, 1)))):
        for mu in mus:
            basis = dual_canonical_basis(mu, w)
            for n, coords in basis.items():
                assert coords[n].is_one()
                for m, c in coords.items():
                    if m != n:
                        assert rlex_less(m, n)
                        assert c.is_in_qZq()


def test_dual_canonical_bar_fixed():
    # Each B(n)* is fixed by the twisted bar involution.
    for mu in ((1, 1), (2, 1)):
        s_inv = RatScalar.one() / eigen_scalar(A2, mu)
        for n, coords in dual_canonical_basis(mu, W_A2).items():
            img = sigma_eta_dual_coords(W_A2, coords)
            img = {m: c * s_inv for m, c in img.items()}
            assert img == coords


def test_expand_dual_canonical():
    # B(m)* expands as the delta; E(n)* expands unitriangularly with the
    # correction in qZ[q]; zero expands to nothing.
    x = dual_canonical_element(W_A2, (1, 0, 1))
    assert expand_dual_canonical(x, W_A2) == {(1, 0, 1): RatScalar.one()}
    y = dual_pbw_element(W_A2, (1, 0, 1))
    exp = expand_dual_canonical(y, W_A2)
    assert exp[(1, 0, 1)].is_one()
    assert exp[(0, 1, 0)] == qp(1, -1)
    assert exp[(0, 1, 0)].is_in_qZq()
    assert expand_dual_canonical(WordExpr.zero(A2), W_A2) == {}


# -- the lattice ---------------------------------------------------------------

def test_q_lattice_membership():
    x = dual_pbw_element(W_A2, (0, 1, 0))
    assert not in_q_lattice(x, W_A2)
    assert in_q_lattice(x.scale(qp(1)), W_A2)


def test_canonical_congruent_dual_pbw():
    # B(m)* = E(m)* mod qL* for every m of the tested weights.
    for mu in ((1, 1), (2, 1)):
        for m in data_of_weight(W_A2, mu):
            b = dual_canonical_element(W_A2, m)
            e = dual_pbw_element(W_A2, m)
            assert congruent_mod_qL(b, e, W_A2)


# -- flag minors and Demazure flags --------------------------------------------

def test_flag_minor_data_a2():
    assert flag_minor_datum(W_A2, 1) == (1, 0, 0)
    assert flag_minor_datum(W_A2, 2) == (0, 1, 0)
    assert flag_minor_datum(W_A2, 3) == (1, 0, 1)


def test_flag_minor_elements_and_weights():
    # k=1: the element (1 - q^2)E_1 of weight (Id - s_1)varpi_1 = a1.
    n, elt = flag_minor(W_A2, 1)
    assert n == (1, 0, 0)
    assert elt == E(A2, 1).scale(RatScalar.one() - qp(2))
    # every prefix: weight(minor) = (Id - s_{i_1}..s_{i_k}) varpi_{i_k}.
    for datum in (A2, A3, B2):
        w = longest_word(datum)
        for k in range(1, len(w) + 1):
            i = w.word[k - 1]
            target = datum.varpi(i) - weyl_act(
                datum, w.word[:k], datum.varpi(i))
            nk, minor = flag_minor(w, k)
            assert datum_weight(w, nk) == target
            assert minor.weight() == target


def test_flag_minor_is_canonical():
    # Flag minors are dual canonical basis elements.
    for k in range(1, 4):
        n, elt = flag_minor(W_A2, k)
        assert expr_equal(elt, dual_canonical_element(W_A2, n))


def test_demazure_flag():
    assert demazure_flag((1, 0, 1), 3)
    assert not demazure_flag((1, 0, 1), 2)
    assert demazure_flag((0, 0, 0), 1)


def test_basis_element_json_shape():
    obj = basis_element_json(W_A2, (1, 0, 1))
    assert obj["datum"] == [1, 0, 1]
    assert obj["word"] == [1, 2, 1]
    assert obj["weight"] == [1, 1]
    assert obj["dual_pbw"]["[1,0,1]"] == "1"
    assert obj["dual_pbw"]["[0,1,0]"] == "q"
