"""q-commutation, multiplicativity on the dual canonical basis, and the
product-verification harness."""

from qminor.scalars import RatScalar
from qminor.rootdata import CartanDatum, longest_word
from qminor.pbw import d_form, unit_datum
from qminor.canonical import flag_minor_datum
from qminor.mult import (q_commute_exponent, q_commute_exponent_coords,
                         is_multiplicative, check_511, adapted_monomials,
                         all_data_up_to, verify_theorem_51, _dual_can_coords)
from qminor.quiver import parse_orientation, all_orientations

A2 = CartanDatum("A2")
W_A2 = longest_word(A2)


def coords(m):
    return _dual_can_coords(W_A2, m)


def test_q_commute_self_is_zero():
    assert q_commute_exponent_coords(W_A2, coords((1, 0, 0)),
                                     coords((1, 0, 0))) == 0


def test_q_commute_flag_minor_example():
    # The full flag minor against E_1*: exponent <(Id + w_0)varpi_1, a1>
    # = <varpi_1 - varpi_2, a1> = 1.
    n3 = flag_minor_datum(W_A2, 3)
    assert q_commute_exponent_coords(W_A2, coords(n3), coords((1, 0, 0))) == 1


def test_q_commute_absent():
    # E_1* and E_2* do not q-commute: their commutator involves E(e_2).
    assert q_commute_exponent_coords(W_A2, coords((1, 0, 0)),
                                     coords((0, 0, 1))) is None


def test_q_commute_element_interface():
    from qminor.canonical import dual_canonical_element
    b = dual_canonical_element(W_A2, flag_minor_datum(W_A2, 3))
    bp = dual_canonical_element(W_A2, (1, 0, 0))
    assert q_commute_exponent(b, bp, W_A2) == 1


def test_multiplicative_unit():
    # Multiplying by B(0)* = 1 is trivially multiplicative.
    assert is_multiplicative(W_A2, (0, 0, 0), (1, 0, 0)) == (0, (1, 0, 0))


def test_multiplicative_flag_minors():
    # Two flag minors of one adapted word are multiplicative, with datum
    # the sum and exponent the d-form.
    m, mp = flag_minor_datum(W_A2, 1), flag_minor_datum(W_A2, 3)
    res = is_multiplicative(W_A2, m, mp)
    assert res == (d_form(W_A2, m, mp),
                   tuple(a + b for a, b in zip(m, mp)))
    assert check_511(W_A2, m, mp)


def test_multiplicative_powers_of_root():
    # E_1* against E_1* (a dual root vector power).
    assert is_multiplicative(W_A2, (1, 0, 0), (1, 0, 0)) == (1, (2, 0, 0))
    assert check_511(W_A2, (1, 0, 0), (1, 0, 0))


def test_adapted_monomials():
    # H=0 keeps only the zero datum; H=1 adds the height-1 flag minor e_1.
    assert adapted_monomials(W_A2, 0) == [(0, 0, 0)]
    h1 = adapted_monomials(W_A2, 1)
    assert (1, 0, 0) in h1 and (0, 0, 0) in h1
    # all entries are sums of flag-minor data
    gens = [flag_minor_datum(W_A2, k) for k in (1, 2, 3)]
    for m in adapted_monomials(W_A2, 3):
        assert all(c >= 0 for c in m)


def test_all_data_up_to():
    data = all_data_up_to(W_A2, 2)
    assert (1, 0, 0) in data and (0, 1, 0) in data and (1, 0, 1) in data
    assert (0, 0, 0) not in data
    assert all(sum(dim) <= 2 for dim in
               ((m[0] + m[1], m[1] + m[2]) for m in data))


def test_harness_a2_small():
    # Exhaustive scan at H=3 for both A2 orientations: no violations and
    # every q-commuting pair is multiplicative.
    for o in all_orientations(A2):
        report = verify_theorem_51(o, 3)
        assert report["violations"] == []
        assert report["q_commuting"] == report["multiplicative"]
        assert report["pairs_scanned"] > 0


def test_harness_report_shape():
    report = verify_theorem_51(parse_orientation(A2, "2>1"), 2)
    assert report["schema"] == 1
    assert report["orientation"] == "2>1"
    assert report["word"] == [1, 2, 1]
    assert set(report) >= {"pairs_scanned", "q_commuting", "multiplicative",
                           "violations", "height_bound"}
