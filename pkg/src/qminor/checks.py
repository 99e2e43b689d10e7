"""Named verification suites over the library: each function runs one
identity family exhaustively at desk scale and returns a JSON-ready
report with an "ok" flag.  The command-line `check` subcommand and the
test suite both dispatch here.
"""

from itertools import product

from .scalars import RatScalar
from .rootdata import (CartanDatum, ReducedWord, Vec, form, weyl_act,
                       longest_word)
from .qea import (WordExpr, TriExpr, pairing, canonical_form, serre_element,
                  expr_equal)
from . import pbw, canonical, quiver, mult


def standard_words(datum):
    """Two reduced words of w_0 per type: the lex-smallest one and its
    image under the index reversal i -> rank + 1 - i (a diagram symmetry
    for the path types; for D4 the 1<->3 swap)."""
    w0 = longest_word(datum)
    if datum.label == "D4":
        perm = {1: 3, 2: 2, 3: 1, 4: 4}
    else:
        perm = {i: datum.rank + 1 - i for i in datum.indices}
    other = tuple(perm[i] for i in w0.word)
    if other == w0.word:
        return [w0]
    return [w0, ReducedWord(datum, other)]


def weights_up_to(datum, bound):
    out = []
    for mu in product(range(bound + 1), repeat=datum.rank):
        if 0 < sum(mu) <= bound:
            out.append(mu)
    return out


def resolve_word(label, word=None):
    datum = CartanDatum(label)
    if word is None:
        return datum, longest_word(datum)
    return datum, ReducedWord(datum, word)


# -- foundation ----------------------------------------------------------------

def check_serre(label):
    """Quantum Serre elements vanish under canonical_form."""
    datum = CartanDatum(label)
    failures = []
    for i in datum.indices:
        for j in datum.indices:
            if i != j and datum.cartan[i - 1][j - 1] != 0:
                if not canonical_form(serre_element(datum, i, j)).is_zero():
                    failures.append([i, j])
    return _report(label, failures, pairs=sum(
        1 for i in datum.indices for j in datum.indices
        if i != j and datum.cartan[i - 1][j - 1] != 0))


def check_pairing(label):
    """The generator axioms of the Hopf pairing, verbatim:
    (E_i, F_j) = delta_ij / (1 - q_i^{-2}), (K_lam, K_mu) = q^{-(lam,mu)}."""
    datum = CartanDatum(label)
    failures = []
    for i in datum.indices:
        for j in datum.indices:
            got = pairing(WordExpr.generator(datum, i),
                          WordExpr.generator(datum, j, side="F"))
            if i == j:
                want = RatScalar.one() / (
                    RatScalar.one() - RatScalar.q_power(-datum.root_norm(i)))
            else:
                want = RatScalar.zero()
            if got != want:
                failures.append(["EF", i, j, got.render()])
    for i in datum.indices:
        for j in datum.indices:
            got = pairing(TriExpr.k_elt(datum, _alpha(datum, i)),
                          TriExpr.k_elt(datum, _alpha(datum, j)))
            want = RatScalar.q_power(-int(form(datum.alpha(i),
                                               datum.alpha(j))))
            if got != want:
                failures.append(["KK", i, j, got.render()])
    return _report(label, failures)


def _alpha(datum, i):
    return tuple(1 if t == i - 1 else 0 for t in range(datum.rank))


def check_biorthogonality(label, height_bound, words=None):
    """(E(m), F(n)) = delta_mn * (nonzero) within every weight space."""
    datum = CartanDatum(label)
    failures = []
    for w in (words or standard_words(datum)):
        for mu in weights_up_to(datum, height_bound):
            data = pbw.data_of_weight(w, mu)
            for m in data:
                for n in data:
                    p = pbw.pairing_em_fn(w, m, n)
                    if (m == n) != (not p.is_zero()):
                        failures.append([list(w.word), list(m), list(n)])
    return _report(label, failures)


def check_normalizers(label, height_bound, words=None):
    """f_m(0) = 1 and bar(f_m) = +-q^a f_m on every datum in range."""
    datum = CartanDatum(label)
    failures = []
    for w in (words or standard_words(datum)):
        for mu in weights_up_to(datum, height_bound):
            for m in pbw.data_of_weight(w, mu):
                f = pbw.dual_pbw_normalizer(w, m)
                if f.eval_at_zero() != 1:
                    failures.append([list(w.word), list(m), "f(0)"])
                    continue
                r = f.bar() / f
                rl = r.as_laurent().coeffs
                if len(rl) != 1 or abs(next(iter(rl.values()))) != 1:
                    failures.append([list(w.word), list(m), "bar"])
    return _report(label, failures)


# -- dual canonical basis ------------------------------------------------------

def check_prop21(label, words=None):
    """B(e_k)* = E(e_k)* for every k."""
    datum = CartanDatum(label)
    failures = []
    for w in (words or standard_words(datum)):
        for k in range(1, len(w.word) + 1):
            n = pbw.unit_datum(len(w.word), k)
            mu = pbw.datum_weight(w, n).root_coords_int()
            c = canonical.dual_canonical_basis(mu, w)[n]
            if set(c) != {n} or not c[n].is_one():
                failures.append([list(w.word), k])
    return _report(label, failures)


def check_cor22(label, height_bound, words=None, ext_support_adapted=True):
    """Unitriangularity over rlex with off-diagonal coefficients in qZ[q];
    for adapted words, support additionally below in the Ext order."""
    datum = CartanDatum(label)
    failures = []
    adapted = set()
    if ext_support_adapted and datum.is_simply_laced():
        adapted = {quiver.adapted_word(o).word
                   for o in quiver.all_orientations(datum)}
    for w in (words or standard_words(datum)):
        order = pbw.ext_order(w) if w.word in adapted else None
        for mu in weights_up_to(datum, height_bound):
            basis = canonical.dual_canonical_basis(mu, w)
            for n, c in basis.items():
                for m, cm in c.items():
                    if m == n:
                        if not cm.is_one():
                            failures.append([list(w.word), list(n), "diag"])
                    else:
                        if not pbw.rlex_less(m, n) or not cm.is_in_qZq():
                            failures.append([list(w.word), list(n), list(m)])
                        elif order is not None and not order.leq(m, n):
                            failures.append([list(w.word), list(n), list(m),
                                             "ext"])
    return _report(label, failures)


def check_prop31(label, height_bound, words=None):
    """Delta*_w E(m)* = q^{<(Id+w)varpi_{i_k}, mu>} E(m)* Delta*_w exactly,
    for every prefix and every datum supported on it."""
    datum = CartanDatum(label)
    failures = []
    for w in (words or standard_words(datum)):
        for k in range(1, len(w.word) + 1):
            nk = canonical.flag_minor_datum(w, k)
            dc = canonical.dual_canonical_basis(
                pbw.datum_weight(w, nk).root_coords_int(), w)[nk]
            vp = datum.varpi(w.word[k - 1])
            wv = weyl_act(datum, w.word[:k], vp)
            for mu in weights_up_to(datum, height_bound):
                for m in pbw.data_of_weight(w, mu):
                    if not canonical.demazure_flag(m, k):
                        continue
                    em = {m: RatScalar.one()}
                    lhs = canonical.dual_product(w, dc, em)
                    rhs = canonical.dual_product(w, em, dc)
                    ex = int(form(vp + wv, Vec(datum, mu)))
                    unit = RatScalar.q_power(ex)
                    if lhs != {d: c * unit for d, c in rhs.items()}:
                        failures.append([list(w.word), k, list(m)])
    return _report(label, failures)


def check_prop32(label, height_bound, words=None):
    """q^{d(n_w, m)} Delta*_w E(m)* = E(n_w + m)* mod qL*, plus the two
    d-form identities d(n,m)+d(m,n) = <nu,mu> and d(n,m)-d(m,n) = c(n,m)."""
    datum = CartanDatum(label)
    failures = []
    for w in (words or standard_words(datum)):
        for k in range(1, len(w.word) + 1):
            nk = canonical.flag_minor_datum(w, k)
            nu = pbw.datum_weight(w, nk)
            dc = canonical.dual_canonical_basis(
                nu.root_coords_int(), w)[nk]
            for mu in weights_up_to(datum, height_bound):
                muv = Vec(datum, mu)
                for m in pbw.data_of_weight(w, mu):
                    dnm = pbw.d_form(w, nk, m)
                    dmn = pbw.d_form(w, m, nk)
                    if dnm + dmn != int(form(nu, muv)):
                        failures.append([list(w.word), k, list(m), "dsum"])
                    if dnm - dmn != pbw.c_form(w, nk, m):
                        failures.append([list(w.word), k, list(m), "c"])
                    prod = canonical.dual_product(w, dc, {m: RatScalar.one()})
                    lhs = {d: c * RatScalar.q_power(dnm)
                           for d, c in prod.items()}
                    target = tuple(a + b for a, b in zip(nk, m))
                    if not canonical.coords_congruent_mod_qL(
                            lhs, {target: RatScalar.one()}):
                        failures.append([list(w.word), k, list(m), "cong"])
    return _report(label, failures)


# -- quiver side ---------------------------------------------------------------

def check_prop41(label, orientation=None):
    """d(iota M, iota N) = eps(N, M) - zeta(M, N) over all orientations
    (or one given orientation)."""
    datum = CartanDatum(label)
    if orientation is not None:
        orients = [quiver.parse_orientation(datum, orientation)]
    else:
        orients = quiver.all_orientations(datum)
    failures = []
    for o in orients:
        w = quiver.adapted_word(o)
        for fail in quiver.check_d_identity(o, w):
            failures.append([o.render(), list(fail[0]), list(fail[1])])
    return _report(label, failures, orientations=len(orients))


def check_prop42(label, height_bound, orientation=None):
    """d(n_w, .) = eps(., M_k) and monotonicity along the Ext order."""
    datum = CartanDatum(label)
    if orientation is not None:
        orients = [quiver.parse_orientation(datum, orientation)]
    else:
        orients = quiver.all_orientations(datum)
    failures = []
    for o in orients:
        w = quiver.adapted_word(o)
        for k in range(1, len(w.word) + 1):
            for fail in quiver.check_monotone(o, w, k, height_bound):
                failures.append([o.render(), k] + [str(x) for x in fail])
    return _report(label, failures, orientations=len(orients))


def check_thm51(label, height_bound, orientation=None):
    """The full multiplicativity harness; one orientation or all."""
    datum = CartanDatum(label)
    if orientation is not None:
        orients = [quiver.parse_orientation(datum, orientation)]
    else:
        orients = quiver.all_orientations(datum)
    reports = [mult.verify_theorem_51(o, height_bound) for o in orients]
    failures = [v for r in reports for v in r["violations"]]
    out = _report(label, failures)
    out["reports"] = reports
    return out


def check_claim43(label="A3"):
    """Type A: every quantum minor from a row set coincides with a flag
    minor of some orientation-adapted word (element-level comparison)."""
    datum = CartanDatum(label)
    adapted = [(o, quiver.adapted_word(o))
               for o in quiver.all_orientations(datum)]
    failures = []
    checked = 0
    n1 = datum.rank + 1
    for mask in range(1, 1 << n1):
        rows = [r + 1 for r in range(n1) if mask >> r & 1]
        prefix, w = quiver.typeA_flag_word(datum, rows)
        if not prefix:
            continue
        checked += 1
        _, elt = canonical.flag_minor(w, len(prefix))
        target = canonical_form(elt)
        if not any(_adapted_minor_match(wa, elt, target)
                   for _, wa in adapted):
            failures.append([rows, list(prefix)])
    return _report(label, failures, minors_checked=checked)


def _adapted_minor_match(wa, elt, target):
    wt = elt.weight()
    for k in range(1, len(wa.word) + 1):
        nk = canonical.flag_minor_datum(wa, k)
        if pbw.datum_weight(wa, nk) != wt:
            continue
        if canonical_form(canonical.flag_minor(wa, k)[1]) == target:
            return True
    return False


def check_remark43():
    """D4: the flag minor of the prefix s_2 s_1 s_3 s_2 is compared with
    every flag minor of every orientation-adapted word.  No match is the
    expected outcome; a match would be an open finding, not a bug."""
    datum = CartanDatum("D4")
    from .rootdata import reduced_completion
    w = reduced_completion(ReducedWord(datum, (2, 1, 3, 2)))
    n, elt = canonical.flag_minor(w, 4)
    target = canonical_form(elt)
    matches = []
    candidates = 0
    for o in quiver.all_orientations(datum):
        wa = quiver.adapted_word(o)
        wt = elt.weight()
        for k in range(1, len(wa.word) + 1):
            nk = canonical.flag_minor_datum(wa, k)
            if pbw.datum_weight(wa, nk) != wt:
                continue
            candidates += 1
            if canonical_form(canonical.flag_minor(wa, k)[1]) == target:
                matches.append([o.render(), k])
    return {
        "schema": 1,
        "type": "D4",
        "word": list(w.word),
        "prefix": [2, 1, 3, 2],
        "weight": list(elt.weight().root_coords_int()),
        "same_weight_candidates": candidates,
        "matches": matches,
        "ok": True,
        "open_finding": bool(matches),
    }


def _report(label, failures, **extra):
    out = {"schema": 1, "type": label, "ok": not failures,
           "failures": failures}
    out.update(extra)
    return out


SUITES = {
    "serre": lambda args: check_serre(args.type),
    "pairing": lambda args: check_pairing(args.type),
    "prop21": lambda args: check_prop21(args.type, _words(args)),
    "cor22": lambda args: check_cor22(args.type, args.height, _words(args)),
    "prop31": lambda args: check_prop31(args.type, args.height, _words(args)),
    "prop32": lambda args: check_prop32(args.type, args.height, _words(args)),
    "prop41": lambda args: check_prop41(args.type, args.orientation),
    "prop42": lambda args: check_prop42(args.type, args.height,
                                        args.orientation),
    "thm51": lambda args: check_thm51(args.type, args.height,
                                      args.orientation),
    "remark43": lambda args: check_remark43(),
}


def _words(args):
    if getattr(args, "word", None):
        datum = CartanDatum(args.type)
        return [ReducedWord(datum, args.word)]
    return None
