"""The dual canonical basis per weight space, the lattice L*, quantum
flag minors, and Demazure support flags.

Everything is phrased in dual-PBW coordinates for a fixed reduced word
of w_0: L* is the Z[q]-span of the E(m)*, and B(m)* is the unique
element of E(m)* + qL* fixed by the twisted bar involution
x -> s_mu^{-1} sigma(eta(x)).  The solve is the standard unitriangular
recursion over the right-lexicographic order.
"""

from .scalars import LaurentPoly, RatScalar, ONE, quantum_factorial
from .rootdata import Vec, form, weyl_act
from .qea import WordExpr, pairing
from .pbw import (pbw_monomial, dual_pbw_normalizer, dual_f_monomial,
                  data_of_weight, check_datum, datum_weight,
                  render_datum, rlex_less, root_vector, pbw_coordinates,
                  pbw_product, unit_datum)
from . import conventions


class NotUnitriangular(ArithmeticError):
    """The twisted bar matrix failed rlex unitriangularity (convention bug)."""


class NoSolution(ArithmeticError):
    """The triangular solve hit a constant-term obstruction."""


# -- dual PBW basis --------------------------------------------------------

def dual_pbw_element(w, m):
    """E(m)* = f_m E(m) as a UPlusExpr."""
    return pbw_monomial(w, m).scale(dual_pbw_normalizer(w, m))


def dual_pbw_expansion(x, w):
    """Coordinates of x in the dual PBW basis {E(m)*}."""
    if x.is_zero():
        return {}
    out = {}
    for mu, comp in x.homogeneous_components().items():
        for m in data_of_weight(w, mu):
            # (x, dual_f(m)) is exactly the E(m)*-coordinate
            c = pairing(comp, dual_f_monomial(w, m))
            if not c.is_zero():
                out[m] = c
    return out


def from_dual_pbw(w, coords):
    """Assemble a UPlusExpr from dual-PBW coordinates."""
    x = WordExpr.zero(w.datum)
    for m, c in coords.items():
        x = x + dual_pbw_element(w, m).scale(c)
    return x


# -- coordinate-level algebra ------------------------------------------------
#
# Dual-PBW coordinate dicts {datum: RatScalar} support exact products and
# sigma_eta through PBW straightening, with no pairing evaluation at the
# (possibly large) product weight.

def dual_to_pbw_coords(w, coords):
    """E(m)* = f_m E(m): convert {E(m)*}-coordinates to {E(m)}-coordinates."""
    return {m: c * dual_pbw_normalizer(w, m) for m, c in coords.items()}


def pbw_to_dual_coords(w, coords):
    return {m: c / dual_pbw_normalizer(w, m) for m, c in coords.items()}


def dual_product(w, ca, cb):
    """Product of two elements given in dual-PBW coordinates."""
    prod = pbw_product(w, dual_to_pbw_coords(w, ca), dual_to_pbw_coords(w, cb))
    return pbw_to_dual_coords(w, prod)


_SIGMA_ETA_ROOT_CACHE = conventions.register_cache({})
_SIGMA_ETA_MONOMIAL_CACHE = conventions.register_cache({})


def _sigma_eta_root_coords(w, k):
    """PBW coordinates of sigma_eta(E_{beta_k}); computed by pairing at the
    (small) root weight, once per (word, k)."""
    key = (w.datum.label, w.word, k)
    hit = _SIGMA_ETA_ROOT_CACHE.get(key)
    if hit is None:
        hit = dict(pbw_coordinates(root_vector(w, k).sigma_eta(), w).coeffs)
        _SIGMA_ETA_ROOT_CACHE[key] = hit
    return hit


def _sigma_eta_pbw_monomial(w, n):
    """PBW coordinates of sigma_eta(E(n)).  sigma_eta is a bar-linear
    antiautomorphism, so the image is the descending product of the
    sigma_eta(E_{beta_k})^{m_k}/[m_k]! factors, assembled by straightening."""
    key = (w.datum.label, w.word, n)
    hit = _SIGMA_ETA_MONOMIAL_CACHE.get(key)
    if hit is not None:
        return hit
    N = len(w.word)
    out = {(0,) * N: RatScalar.one()}
    for k in range(N, 0, -1):
        c = n[k - 1]
        if not c:
            continue
        factor = _sigma_eta_root_coords(w, k)
        for _ in range(c):
            out = pbw_product(w, out, factor)
        if c > 1:
            beta = w.betas[k - 1]
            fact = RatScalar.from_laurent(
                quantum_factorial(c, int(form(beta, beta))))
            out = {m: v / fact for m, v in out.items()}
    _SIGMA_ETA_MONOMIAL_CACHE[key] = out
    return out


def sigma_eta_dual_coords(w, coords):
    """Dual-PBW coordinates of sigma_eta(x) for x given the same way."""
    acc = {}
    for n, c in coords.items():
        f = dual_pbw_normalizer(w, n)
        pref = c.bar() * f.bar()
        for m, v in _sigma_eta_pbw_monomial(w, n).items():
            r = acc.get(m)
            t = pref * v
            r = t if r is None else r + t
            if r.is_zero():
                acc.pop(m, None)
            else:
                acc[m] = r
    return pbw_to_dual_coords(w, acc)


# -- the lattice L* ---------------------------------------------------------

def in_q_lattice(x, w):
    """True iff x lies in qL*: every dual-PBW coordinate is in qZ[q]."""
    return all(c.is_in_qZq() for c in dual_pbw_expansion(x, w).values())


def congruent_mod_qL(x, y, w):
    return in_q_lattice(x - y, w)


def coords_in_q_lattice(coords):
    """qL* membership for an element given in dual-PBW coordinates."""
    return all(c.is_in_qZq() for c in coords.values())


def coords_congruent_mod_qL(ca, cb):
    zero = RatScalar.zero()
    for m in set(ca) | set(cb):
        if not (ca.get(m, zero) - cb.get(m, zero)).is_in_qZq():
            return False
    return True


# -- the twisted bar involution ----------------------------------------------

def eigen_scalar(datum, mu):
    """s_mu = (-1)^tr(mu) q^{<mu,mu>/2} q_mu, with q_mu = q^{sum k_i d_i}
    for mu = sum k_i alpha_i."""
    if isinstance(mu, Vec):
        mu = mu.root_coords_int()
    v = Vec(datum, mu)
    tr = sum(mu)
    half_norm = int(form(v, v)) // 2
    dsum = sum(k * d for k, d in zip(mu, datum.d))
    e = conventions.active().eigen_exp * (half_norm + dsum)
    return RatScalar.q_power(e, -1 if tr % 2 else 1)


_BAR_MATRIX_CACHE = conventions.register_cache({})


def bar_matrix(mu, w):
    """Entries r[m][n] of x -> s_mu^{-1} sigma(eta(x)) on the dual PBW
    basis of the weight space; unitriangular for rlex with unit diagonal.
    """
    if isinstance(mu, Vec):
        mu = mu.root_coords_int()
    mu = tuple(mu)
    key = (w.datum.label, w.word, mu)
    hit = _BAR_MATRIX_CACHE.get(key)
    if hit is not None:
        return hit
    s_inv = RatScalar.one() / eigen_scalar(w.datum, mu)
    data = data_of_weight(w, mu)
    R = {}
    for n in data:
        col = sigma_eta_dual_coords(w, {n: RatScalar.one()})
        col = {m: c * s_inv for m, c in col.items()}
        diag = col.get(n)
        if diag is None or not diag.is_one():
            raise NotUnitriangular(
                "diagonal entry at %s is %s, expected 1"
                % (render_datum(n), diag.render() if diag else "0"))
        for m, c in col.items():
            if m != n and not rlex_less(m, n):
                raise NotUnitriangular(
                    "entry (%s, %s) = %s above the diagonal"
                    % (render_datum(m), render_datum(n), c.render()))
            R.setdefault(m, {})[n] = c
    out = (tuple(data), R)
    _BAR_MATRIX_CACHE[key] = out
    return out


def _solve_skew(g):
    """The unique p in qZ[q] with p - bar(p) = g (g a bar-antisymmetric
    Laurent polynomial with zero constant term)."""
    if not g.is_laurent():
        raise NoSolution("non-polynomial correction term %s" % g.render())
    gl = g.as_laurent()
    if (gl + gl.bar()) != LaurentPoly():
        raise NoSolution("correction term %s is not bar-antisymmetric"
                         % g.render())
    if gl.coeff(0) != 0:
        raise NoSolution("constant-term obstruction in %s" % g.render())
    return RatScalar.from_laurent(
        LaurentPoly({e: c for e, c in gl.coeffs.items() if e > 0}))


_DCB_CACHE = conventions.register_cache({})


def dual_canonical_basis(mu, w):
    """All B(n)* of the weight space, as dual-PBW coordinate dicts
    keyed by n.  Each satisfies B(n)* = E(n)* + sum_{m rlex< n} c_m E(m)*
    with c_m in qZ[q] and twisted-bar fixedness."""
    if isinstance(mu, Vec):
        mu = mu.root_coords_int()
    mu = tuple(mu)
    key = (w.datum.label, w.word, mu)
    hit = _DCB_CACHE.get(key)
    if hit is not None:
        return hit
    data, R = bar_matrix(mu, w)
    basis = {}
    for n in data:
        c = {n: RatScalar.one()}
        # fill in descending rlex below n
        below = [m for m in data if rlex_less(m, n)]
        for m in reversed(below):
            g = RatScalar.zero()
            for p, cp in c.items():
                if p != m:
                    r = R.get(m, {}).get(p)
                    if r is not None:
                        g = g + r * cp.bar()
            cm = _solve_skew(g)
            if not cm.is_zero():
                if not cm.is_in_qZq():
                    raise NoSolution("coefficient %s at %s not in qZ[q]"
                                     % (cm.render(), render_datum(m)))
                c[m] = cm
        basis[n] = c
    _DCB_CACHE[key] = basis
    return basis


def dual_canonical_element(w, n):
    """B(n)* as a UPlusExpr."""
    n = check_datum(w, n)
    mu = datum_weight(w, n).root_coords_int()
    return from_dual_pbw(w, dual_canonical_basis(mu, w)[n])


def expand_dual_canonical(x, w):
    """Coordinates of x in {B(m)*}: invert the unitriangular change of
    basis per weight component."""
    return expand_dual_canonical_coords(dual_pbw_expansion(x, w), w)


def expand_dual_canonical_coords(coords, w):
    """The same inversion, starting from dual-PBW coordinates."""
    out = {}
    by_weight = {}
    for m, c in coords.items():
        by_weight.setdefault(datum_weight(w, m).root_coords_int(), {})[m] = c
    for mu, cc in by_weight.items():
        basis = dual_canonical_basis(mu, w)
        rem = dict(cc)
        for n in reversed(data_of_weight(w, mu)):
            b = rem.pop(n, RatScalar.zero())
            if b.is_zero():
                continue
            out[n] = b
            for m, c in basis[n].items():
                if m != n:
                    r = rem.get(m, RatScalar.zero()) - b * c
                    if r.is_zero():
                        rem.pop(m, None)
                    else:
                        rem[m] = r
        if rem:
            raise AssertionError("unitriangular inversion left residue")
    return out


# -- flag minors and Demazure flags -------------------------------------------

def flag_minor_datum(w, k):
    """n_wtilde = sum of e_l over {l <= k : i_l = i_k}."""
    if not 1 <= k <= len(w.word):
        raise ValueError("prefix length out of range")
    i = w.word[k - 1]
    return tuple(1 if (l < k and w.word[l] == i) else 0
                 for l in range(len(w.word)))


def flag_minor(w, k):
    """The quantum flag minor of the length-k prefix: (datum, element).

    The weight is (Id - w)(varpi_{i_k}) for w = s_{i_1} ... s_{i_k}.
    """
    n = flag_minor_datum(w, k)
    elt = dual_canonical_element(w, n)
    datum = w.datum
    vp = datum.varpi(w.word[k - 1])
    expected = vp - weyl_act(datum, w.word[:k], vp)
    got = datum_weight(w, n)
    if expected != got:
        raise AssertionError("flag minor weight mismatch: %r vs %r"
                             % (expected, got))
    return n, elt


def demazure_flag(m, k):
    """True iff the datum is supported on the first k coordinates."""
    return all(c == 0 for c in m[k:])


# -- rendering -----------------------------------------------------------------

def basis_element_json(w, n):
    """JSON-ready dict for one dual canonical basis element."""
    n = check_datum(w, n)
    mu = datum_weight(w, n).root_coords_int()
    coords = dual_canonical_basis(mu, w)[n]
    return {
        "word": list(w.word),
        "datum": list(n),
        "weight": list(mu),
        "dual_pbw": {render_datum(m): coords[m].render()
                     for m in sorted(coords)},
    }
