"""Braid automorphisms, PBW root vectors and monomials, PBW coordinates,
the d- and c-forms, and the two orderings on Lusztig data.

A Lusztig datum is a vector m in Z_{>=0}^N tied to a reduced word of
w_0; the PBW monomial is E(m) = E_{beta_1}^{(m_1)} ... E_{beta_N}^{(m_N)}
with root vectors E_{beta_k} = T_{i_1} ... T_{i_{k-1}}(E_{i_k}).
Coordinates of arbitrary elements are computed through the Hopf pairing
against the mirrored F-side monomials (biorthogonality), never by
word rewriting.
"""

from .scalars import LaurentPoly, RatScalar, ONE, quantum_factorial
from .rootdata import ReducedWord, form, reflect
from .qea import (WordExpr, TriExpr, tri_mul, pairing, canonical_form,
                  NotInUqn)
from . import conventions


# -- braid automorphisms -------------------------------------------------

_BRAID_GEN_CACHE = conventions.register_cache({})


def _braid_gen(datum, i, kind, j, mult):
    """T_i applied to E_j^{(mult)}, F_j^{(mult)} or (kind 'K') K_lambda
    with lambda given by the coordinate tuple j."""
    key = (datum.label, i, kind, j, mult)
    hit = _BRAID_GEN_CACHE.get(key)
    if hit is not None:
        return hit
    conv = conventions.active()
    if kind == "K":
        lam = datum.zero()
        for idx, c in enumerate(j, start=1):
            if c:
                lam = lam + datum.alpha(idx) * c
        out = TriExpr.k_elt(datum, reflect(i, lam).root_coords_int())
    elif i == j:
        if kind == "E":
            # T_i(E_i) = -F_i K_{alpha_i}
            base = TriExpr(datum, {
                (((i, 1),), _alpha_coords(datum, i, 1), ()):
                RatScalar.from_laurent(LaurentPoly.from_int(-1))})
        else:
            # T_i(F_i) = -K_{-alpha_i} E_i
            base = TriExpr(datum, {
                ((), _alpha_coords(datum, i, -1), ((i, 1),)):
                RatScalar.from_laurent(LaurentPoly.from_int(-1))})
        out = _tri_divided_power(datum, base, mult,
                                 datum.root_norm(i))
    else:
        a = datum.cartan[i - 1][j - 1]
        di = datum.d[i - 1]
        total = TriExpr.zero(datum)
        for s in range(-a + 1):
            if kind == "E":
                exp = conv.e_braid_exp * (a + s)
                term = TriExpr.one(datum)
                if s:
                    term = tri_mul(term, TriExpr.e_gen(datum, i, s))
                term = tri_mul(term, TriExpr.e_gen(datum, j))
                if -a - s:
                    term = tri_mul(term, TriExpr.e_gen(datum, i, -a - s))
            else:
                exp = conv.f_braid_exp * (-a - s)
                term = TriExpr.one(datum)
                if -a - s:
                    term = tri_mul(term, TriExpr.f_gen(datum, i, -a - s))
                term = tri_mul(term, TriExpr.f_gen(datum, j))
                if s:
                    term = tri_mul(term, TriExpr.f_gen(datum, i, s))
            sign = -1 if (-a - s) % 2 else 1
            total = total + term.scale(
                RatScalar.q_power(di * exp, sign))
        out = _tri_divided_power(datum, total, mult,
                                 datum.root_norm(j))
    _BRAID_GEN_CACHE[key] = out
    return out


def _alpha_coords(datum, i, sign):
    return tuple(sign if t == i - 1 else 0 for t in range(datum.rank))


def _tri_divided_power(datum, x, mult, norm):
    """x^mult / [mult]! at the given root norm."""
    out = TriExpr.one(datum)
    for _ in range(mult):
        out = tri_mul(out, x)
    if mult > 1:
        out = out.scale(RatScalar(ONE, quantum_factorial(mult, norm)))
    return out


def braid_T(i, x):
    """The braid automorphism T_i on a TriExpr, generator by generator."""
    datum = x.datum
    out = TriExpr.zero(datum)
    zk = (0,) * datum.rank
    for (f, k, e), c in x.terms.items():
        term = TriExpr.one(datum)
        for j, m in f:
            term = tri_mul(term, _braid_gen(datum, i, "F", j, m))
        if k != zk:
            term = tri_mul(term, _braid_gen(datum, i, "K", k, 1))
        for j, m in e:
            term = tri_mul(term, _braid_gen(datum, i, "E", j, m))
        out = out + term.scale(c)
    return out


# -- root vectors ----------------------------------------------------------

_ROOT_VECTOR_CACHE = conventions.register_cache({})


def _root_tri(datum, word, side):
    """T_{i_1} ... T_{i_{k-1}} applied to the side-generator of i_k,
    where word = (i_1, ..., i_k).  Shared suffix recursion."""
    key = (datum.label, word, side)
    hit = _ROOT_VECTOR_CACHE.get(key)
    if hit is not None:
        return hit
    if len(word) == 1:
        if side == "E":
            out = TriExpr.e_gen(datum, word[0])
        else:
            out = TriExpr.f_gen(datum, word[0])
    else:
        out = braid_T(word[0], _root_tri(datum, word[1:], side))
    _ROOT_VECTOR_CACHE[key] = out
    return out


def _root_unit(datum, beta):
    """The normalizing unit q^(sum k_i d_i - <beta,beta>/2) of a root vector.

    It is trivial on simple roots and makes the dual PBW basis compatible
    with the twisted bar involution (unit diagonal) while keeping every
    dual normalizer f_m in 1 + qZ[q].
    """
    k = beta.root_coords_int()
    t = sum(c * d for c, d in zip(k, datum.d))
    h = int(form(beta, beta)) // 2
    return RatScalar.q_power(conventions.active().root_unit_exp * (t - h))


def root_vector(w, k):
    """E_{beta_k} for the reduced word w, as a UPlusExpr.

    Raises NotInUqn if the braid image fails to land in U_q(n): that
    signals a convention bug, not a user error.
    """
    x = _root_tri(w.datum, w.word[:k], "E").project_uplus()
    return x.scale(_root_unit(w.datum, w.betas[k - 1]))


def f_root_vector(w, k):
    """The mirrored F-side root vector F_{beta_k}."""
    x = _root_tri(w.datum, w.word[:k], "F").project_uminus()
    return x.scale(_root_unit(w.datum, w.betas[k - 1]))


# -- PBW monomials and coordinates ------------------------------------------

def check_datum(w, m):
    m = tuple(int(c) for c in m)
    if len(m) != len(w.word):
        raise ValueError("datum length %d != word length %d"
                         % (len(m), len(w.word)))
    if any(c < 0 for c in m):
        raise ValueError("negative entry in Lusztig datum %s" % (m,))
    return m


def datum_weight(w, m):
    """sum m_k beta_k as a Vec."""
    m = check_datum(w, m)
    v = w.datum.zero()
    for c, b in zip(m, w.betas):
        if c:
            v = v + b * c
    return v


def render_datum(m):
    return "[" + ",".join(str(c) for c in m) + "]"


_PBW_MONOMIAL_CACHE = conventions.register_cache({})


def pbw_monomial(w, m):
    """E(m) = E_{beta_1}^{(m_1)} ... E_{beta_N}^{(m_N)} as a UPlusExpr."""
    m = check_datum(w, m)
    key = (w.datum.label, w.word, m, "E")
    hit = _PBW_MONOMIAL_CACHE.get(key)
    if hit is not None:
        return hit
    out = WordExpr.one(w.datum)
    for k, c in enumerate(m, start=1):
        if c:
            out = out * _divided_root_power(w, k, c, "E")
    _PBW_MONOMIAL_CACHE[key] = out
    return out


def f_pbw_monomial(w, m):
    """F(m), the mirrored PBW monomial; factor order set by convention."""
    m = check_datum(w, m)
    conv = conventions.active()
    key = (w.datum.label, w.word, m, "F")
    hit = _PBW_MONOMIAL_CACHE.get(key)
    if hit is not None:
        return hit
    out = WordExpr.one(w.datum, side="F")
    ks = range(1, len(m) + 1)
    if conv.f_pbw_order < 0:
        ks = reversed(ks)
    for k in ks:
        if m[k - 1]:
            out = out * _divided_root_power(w, k, m[k - 1], "F")
    _PBW_MONOMIAL_CACHE[key] = out
    return out


def _divided_root_power(w, k, c, side):
    rv = root_vector(w, k) if side == "E" else f_root_vector(w, k)
    out = rv ** c
    if c > 1:
        beta = w.betas[k - 1]
        out = out.scale(RatScalar(ONE, quantum_factorial(c, int(form(beta, beta)))))
    return out


class PBWExpansion:
    """Coordinates in the PBW basis {E(m)} of one reduced word."""

    __slots__ = ("word", "coeffs")

    def __init__(self, word, coeffs):
        self.word = word
        self.coeffs = {m: c for m, c in coeffs.items() if not c.is_zero()}

    def support(self):
        return frozenset(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, PBWExpansion):
            return NotImplemented
        return self.word == other.word and self.coeffs == other.coeffs

    def __repr__(self):
        inner = ", ".join("%s: %s" % (render_datum(m), c.render())
                          for m, c in sorted(self.coeffs.items()))
        return "PBWExpansion(%s; {%s})" % (self.word.render(), inner)


def data_of_weight(w, mu):
    """All Lusztig data m with sum m_k beta_k = mu, sorted ascending
    for rlex (right-lexicographic)."""
    betas = [b.root_coords_int() for b in w.betas]
    if hasattr(mu, "root_coords_int"):
        mu = mu.root_coords_int()
    mu = tuple(int(c) for c in mu)
    rank = len(mu)
    N = len(betas)
    out = []

    def search(k, remaining, acc):
        if k < 0:
            if not any(remaining):
                out.append(tuple(reversed(acc)))
            return
        b = betas[k]
        top = min((remaining[t] // b[t]) for t in range(rank) if b[t])
        for c in range(top + 1):
            acc.append(c)
            search(k - 1, tuple(r - c * b[t] for t, r in enumerate(remaining)),
                   acc)
            acc.pop()

    search(N - 1, mu, [])
    # the search emits ascending in the last coordinate first: sort rlex
    out.sort(key=lambda m: tuple(reversed(m)))
    return out


def pairing_em_fn(w, m, n):
    """(E(m), F(n)) through the Hopf pairing."""
    return pairing(pbw_monomial(w, m), f_pbw_monomial(w, n))


def _unit_part(r):
    """Write a nonzero RatScalar as (+-q^a) * (element of 1 + qZ[[q]]);
    return the unit +-q^a as a RatScalar."""
    if r.is_zero():
        raise ValueError("zero scalar has no unit part")
    a = r.num.min_exp() - r.den.min_exp()
    c = r.num.coeff(r.num.min_exp())
    d = r.den.coeff(r.den.min_exp())
    if c % d != 0 or abs(c // d) != 1:
        raise ArithmeticError("leading coefficient of %s is not a unit"
                              % r.render())
    return RatScalar.q_power(a, c // d)


_NORMALIZER_CACHE = conventions.register_cache({})


def _normalizer_pair(w, m):
    """(f_m, u_m) with 1/(E(m), F(m)) = u_m f_m, u_m a unit and
    f_m(0) = 1."""
    m = check_datum(w, m)
    key = (w.datum.label, w.word, m)
    hit = _NORMALIZER_CACHE.get(key)
    if hit is not None:
        return hit
    g = pairing_em_fn(w, m, m)
    if g.is_zero():
        raise ArithmeticError("degenerate PBW pairing at %s (convention bug)"
                              % render_datum(m))
    raw = RatScalar.one() / g
    if conventions.active().normalizer_strip:
        u = _unit_part(raw)
        out = (raw / u, u)
    else:
        out = (raw, RatScalar.one())
    _NORMALIZER_CACHE[key] = out
    return out


def dual_pbw_normalizer(w, m):
    """f_m with E(m)* = f_m E(m) and f_m(0) = 1.

    The reciprocal diagonal pairing 1/(E(m), F(m)) is a unit +-q^a times
    an element of 1 + qZ[q]; the unit is stripped here and folded into
    the F side by dual_f_monomial, keeping the pair biorthonormal.
    """
    return _normalizer_pair(w, m)[0]


def dual_f_monomial(w, m):
    """The F-side element dual to E(m)* = f_m E(m): the mirrored braid
    monomial rescaled so that (E(m)*, dual_f_monomial(m)) = 1."""
    return f_pbw_monomial(w, m).scale(_normalizer_pair(w, m)[1])


def pbw_coordinates(x, w):
    """The expansion x = sum c_m E(m) via c_m = (x, F(m))/(E(m), F(m))."""
    if x.is_zero():
        return PBWExpansion(w, {})
    comps = x.homogeneous_components()
    coeffs = {}
    for mu, comp in comps.items():
        for m in data_of_weight(w, mu):
            f, u = _normalizer_pair(w, m)
            c = pairing(comp, f_pbw_monomial(w, m)) * f * u
            if not c.is_zero():
                coeffs[m] = c
    return PBWExpansion(w, coeffs)


# -- the d- and c-forms ------------------------------------------------------

def d_form(w, m, n):
    """d(m, n) = sum_{i>j} <beta_i, beta_j> m_i n_j
    + (1/2) sum_i <beta_i, beta_i> m_i n_i (an integer)."""
    m = check_datum(w, m)
    n = check_datum(w, n)
    betas = w.betas
    total = 0
    for i in range(len(m)):
        if not m[i]:
            continue
        for j in range(i):
            if n[j]:
                total += int(form(betas[i], betas[j])) * m[i] * n[j]
        if n[i]:
            total += int(form(betas[i], betas[i])) * m[i] * n[i] // 2
    return total


def c_form(w, n, m):
    """c(n, m) = d(n, m) - d(m, n)."""
    return d_form(w, n, m) - d_form(w, m, n)


# -- orderings ----------------------------------------------------------------

def rlex_less(m, n):
    """Right-lexicographic: compare at the largest index where m, n differ."""
    if len(m) != len(n):
        raise ValueError("data of different lengths")
    for a, b in zip(reversed(m), reversed(n)):
        if a != b:
            return a < b
    return False


def unit_datum(N, k):
    """e_k (1-based) in Z^N."""
    return tuple(1 if t == k - 1 else 0 for t in range(N))


_STRAIGHTEN_CACHE = conventions.register_cache({})


def straighten_commutator(w, k, kp):
    """The lower-order part of the straightening of E_{beta_k} E_{beta_k'}
    against its reversal (k < k').

    The leading datum e_k + e_k' is cancelled exactly (its coefficient in
    the reversed product is +-q^<beta_k, beta_k'> up to the sign noted in
    the straightening law); the remaining support is strictly rlex-between.
    """
    if not 1 <= k < kp <= len(w.word):
        raise ValueError("need 1 <= k < k' <= N, got (%d, %d)" % (k, kp))
    key = (w.datum.label, w.word, k, kp)
    hit = _STRAIGHTEN_CACHE.get(key)
    if hit is not None:
        return hit
    N = len(w.word)
    lead = tuple(1 if t in (k - 1, kp - 1) else 0 for t in range(N))
    forward = pbw_coordinates(root_vector(w, k) * root_vector(w, kp), w)
    backward = pbw_coordinates(root_vector(w, kp) * root_vector(w, k), w)
    lead_f = forward.coeffs.get(lead, RatScalar.zero())
    lead_b = backward.coeffs.get(lead, RatScalar.zero())
    if lead_b.is_zero():
        raise ArithmeticError("straightening has no leading term")
    ratio = lead_f / lead_b
    coeffs = {}
    for m in set(forward.coeffs) | set(backward.coeffs):
        c = (forward.coeffs.get(m, RatScalar.zero())
             - ratio * backward.coeffs.get(m, RatScalar.zero()))
        if not c.is_zero():
            coeffs[m] = c
    assert lead not in coeffs
    out = PBWExpansion(w, coeffs)
    _STRAIGHTEN_CACHE[key] = out
    return out


# -- products in PBW coordinates ----------------------------------------------

def _letters_of_datum(m):
    """Expand a Lusztig datum to the ascending sequence of its root indices."""
    letters = []
    for k, c in enumerate(m, start=1):
        letters.extend([k] * c)
    return tuple(letters)


def _datum_of_letters(N, letters):
    m = [0] * N
    for k in letters:
        m[k - 1] += 1
    return tuple(m)


def _letter_factorial(w, m):
    """prod_k [m_k]_{q_{beta_k}}! relating E(m) to the plain letter product:
    (letter product) = (this scalar) * E(m)."""
    out = RatScalar.one()
    for k, c in enumerate(m, start=1):
        if c > 1:
            beta = w.betas[k - 1]
            out = out * RatScalar.from_laurent(
                quantum_factorial(c, int(form(beta, beta))))
    return out


_NORM_LETTERS_CACHE = conventions.register_cache({})


def _straighten_letters(w, letters):
    """PBW coordinates of E_{beta_{l_1}} ... E_{beta_{l_r}} for an arbitrary
    sequence of root indices, by repeated application of the straightening
    law E_{beta_{k'}}E_{beta_k} = q^{-<beta_{k'},beta_k>}(E_{beta_k}E_{beta_{k'}}
    - lower-order terms), k < k'.  Terminates since each step either removes
    an adjacent inversion or replaces a pair by strictly intermediate letters.
    """
    key = (w.datum.label, w.word, letters)
    hit = _NORM_LETTERS_CACHE.get(key)
    if hit is not None:
        return hit
    pos = next((i for i in range(len(letters) - 1)
                if letters[i] > letters[i + 1]), None)
    if pos is None:
        m = _datum_of_letters(len(w.word), letters)
        out = {m: _letter_factorial(w, m)}
    else:
        x, y = letters[pos], letters[pos + 1]
        pre, suf = letters[:pos], letters[pos + 2:]
        unit = RatScalar.q_power(-int(form(w.betas[x - 1], w.betas[y - 1])))
        acc = {}

        def add(d, c):
            r = acc.get(d)
            r = c if r is None else r + c
            if r.is_zero():
                acc.pop(d, None)
            else:
                acc[d] = r

        for d, c in _straighten_letters(w, pre + (y, x) + suf).items():
            add(d, unit * c)
        for sm, sc in straighten_commutator(w, y, x).coeffs.items():
            corr = unit * sc / _letter_factorial(w, sm)
            sub = pre + _letters_of_datum(sm) + suf
            for d, c in _straighten_letters(w, sub).items():
                add(d, -(corr * c))
        out = acc
    _NORM_LETTERS_CACHE[key] = out
    return out


def pbw_product(w, ca, cb):
    """The product of two elements given by PBW coordinate dicts, again as
    a PBW coordinate dict; computed by straightening, with no pairing
    evaluation at the product weight."""
    out = {}
    for m, cm in ca.items():
        lm = _letters_of_datum(m)
        fm = _letter_factorial(w, m)
        for n, cn in cb.items():
            pref = (cm * cn) / (fm * _letter_factorial(w, n))
            for d, c in _straighten_letters(w, lm + _letters_of_datum(n)).items():
                r = out.get(d)
                r = pref * c if r is None else r + pref * c
                if r.is_zero():
                    out.pop(d, None)
                else:
                    out[d] = r
    return out


_EXT_DOWNSET_CACHE = conventions.register_cache({})


class ExtOrder:
    """The coarser partial order generated by straightening supports,
    extended additively, computed per weight as a reachability closure."""

    def __init__(self, w):
        self.w = w

    def _downsets(self, mu):
        key = (self.w.datum.label, self.w.word, tuple(mu))
        hit = _EXT_DOWNSET_CACHE.get(key)
        if hit is not None:
            return hit
        w = self.w
        N = len(w.word)
        nodes = data_of_weight(w, mu)
        # covering moves: replace a pair (e_k, e_k') inside n by any
        # element of the straightening support
        succ = {n: set() for n in nodes}
        for n in nodes:
            occupied = [k for k in range(1, N + 1) if n[k - 1] > 0]
            for ai, k in enumerate(occupied):
                for kp in occupied[ai + 1:]:
                    rem = list(n)
                    rem[k - 1] -= 1
                    rem[kp - 1] -= 1
                    for s in straighten_commutator(w, k, kp).support():
                        target = tuple(r + sc for r, sc in zip(rem, s))
                        succ[n].add(target)
        down = {}

        def close(n):
            if n in down:
                return down[n]
            acc = {n}
            for t in succ[n]:
                acc |= close(t)
            down[n] = frozenset(acc)
            return down[n]

        for n in nodes:
            close(n)
        _EXT_DOWNSET_CACHE[key] = down
        return down

    def leq(self, m, n):
        """m is below n (reachable by straightening moves), same weight."""
        m = tuple(m)
        n = tuple(n)
        if m == n:
            return True
        mu = datum_weight(self.w, n).root_coords_int()
        if datum_weight(self.w, m).root_coords_int() != mu:
            return False
        return m in self._downsets(mu)[n]


def ext_order(w):
    return ExtOrder(w)
