"""q-commutation and multiplicativity on the dual canonical basis, the
adapted-algebra monomials, and the exhaustive product-verification harness.

Two basis elements b, b' q-commute when bb' = q^e b'b exactly; they are
multiplicative when q^n bb' is again a basis element.  The harness scans
all q-commuting pairs (monomial in flag minors) x (basis element) up to a
height bound and verifies single-term expansion and the lattice congruence
q^{d(m,m')} B(m)* B(m')* = B(m+m')* mod qL*.  All products run through
PBW straightening in coordinates.
"""

from .scalars import RatScalar
from .pbw import d_form, datum_weight, data_of_weight, render_datum
from .canonical import (dual_canonical_basis, expand_dual_canonical_coords,
                        dual_product, coords_congruent_mod_qL,
                        flag_minor_datum)


def _dual_can_coords(w, m):
    """B(m)* in dual-PBW coordinates."""
    mu = datum_weight(w, m).root_coords_int()
    return dual_canonical_basis(mu, w)[m]


def _scale(coords, c):
    return {m: v * c for m, v in coords.items()}


def q_commute_exponent_coords(w, ca, cb):
    """The integer e with xy = q^e yx for x, y in dual-PBW coordinates,
    or None if the products are not proportional by a q-power."""
    xy = dual_product(w, ca, cb)
    yx = dual_product(w, cb, ca)
    if not xy and not yx:
        return 0
    if set(xy) != set(yx):
        return None
    m = next(iter(xy))
    ratio = xy[m] / yx[m]
    e = ratio.is_q_power()
    if e is None:
        return None
    if any(not (xy[n] - yx[n] * ratio).is_zero() for n in xy):
        return None
    return e


def q_commute_exponent(b, bp, w):
    """The exponent for two UPlusExprs (homogeneous), via PBW coordinates."""
    from .pbw import pbw_coordinates
    from .canonical import pbw_to_dual_coords
    ca = pbw_to_dual_coords(w, dict(pbw_coordinates(b, w).coeffs))
    cb = pbw_to_dual_coords(w, dict(pbw_coordinates(bp, w).coeffs))
    return q_commute_exponent_coords(w, ca, cb)


def is_multiplicative(w, m, mp):
    """If B(m)* B(mp)* expands as a single term q^{-n} B(m'')*, return
    (n, m''); otherwise None.  The test is convention-free: it only asks
    for a single-term dual canonical expansion."""
    prod = dual_product(w, _dual_can_coords(w, m), _dual_can_coords(w, mp))
    exp = expand_dual_canonical_coords(prod, w)
    if len(exp) != 1:
        return None
    (mpp, c), = exp.items()
    e = c.is_q_power()
    if e is None:
        return None
    return -e, mpp


def check_511(w, m, mp):
    """True iff q^{d(m,mp)} B(m)* B(mp)* = B(m+mp)* mod qL*."""
    prod = dual_product(w, _dual_can_coords(w, m), _dual_can_coords(w, mp))
    lhs = _scale(prod, RatScalar.q_power(d_form(w, m, mp)))
    target = tuple(a + b for a, b in zip(m, mp))
    return coords_congruent_mod_qL(lhs, _dual_can_coords(w, target))


def adapted_monomials(w, height_bound):
    """All Lusztig data sum_k a_k n_k (a_k >= 0) over the flag-minor data
    n_k of the prefixes of w, of weight height <= height_bound; these
    parametrize the basis elements inside the adapted algebra."""
    N = len(w.word)
    gens = [flag_minor_datum(w, k) for k in range(1, N + 1)]
    heights = [int(datum_weight(w, g).height()) for g in gens]
    found = set()

    def build(idx, acc, left):
        found.add(tuple(acc))
        for t in range(idx, N):
            if heights[t] <= left:
                nxt = tuple(a + b for a, b in zip(acc, gens[t]))
                build(t, nxt, left - heights[t])

    build(0, (0,) * N, height_bound)
    return sorted(found, key=lambda m: (sum(m), m))


def all_data_up_to(w, height_bound):
    """Every Lusztig datum of weight height <= height_bound (excluding 0)."""
    out = []
    rank = w.datum.rank

    def weights(i, acc, left):
        if i == rank:
            if any(acc):
                out.extend(data_of_weight(w, tuple(acc)))
            return
        for c in range(left + 1):
            acc.append(c)
            weights(i + 1, acc, left - c)
            acc.pop()

    weights(0, [], height_bound)
    return out


def verify_theorem_51(o, height_bound):
    """Scan every (monomial in flag minors) x (basis element) pair up to
    the height bound for the adapted word of the orientation o; every
    q-commuting pair must be multiplicative with the predicted datum and
    satisfy the lattice congruence.  Returns a JSON-ready report."""
    from .quiver import adapted_word
    w = adapted_word(o)
    lattice = [m for m in adapted_monomials(w, height_bound) if any(m)]
    others = all_data_up_to(w, height_bound)
    scanned = q_comm = mult = 0
    violations = []
    seen = set()
    for m in lattice:
        cm = _dual_can_coords(w, m)
        for mp in others:
            key = (m, mp) if m <= mp else (mp, m)
            if key in seen:
                continue
            seen.add(key)
            scanned += 1
            e = q_commute_exponent_coords(w, cm, _dual_can_coords(w, mp))
            if e is None:
                continue
            q_comm += 1
            res = is_multiplicative(w, m, mp)
            ok511 = check_511(w, m, mp)
            expected = (d_form(w, m, mp), tuple(a + b for a, b in zip(m, mp)))
            if res is None:
                violations.append({"pair": [render_datum(m), render_datum(mp)],
                                   "reason": "q-commuting but not a single "
                                             "basis term"})
            else:
                mult += 1
                if res != expected:
                    violations.append({"pair": [render_datum(m),
                                                render_datum(mp)],
                                       "reason": "power/datum mismatch",
                                       "got": [res[0], render_datum(res[1])],
                                       "expected": [expected[0],
                                                    render_datum(expected[1])]})
            if not ok511:
                violations.append({"pair": [render_datum(m), render_datum(mp)],
                                   "reason": "lattice congruence failed"})
    return {
        "schema": 1,
        "orientation": o.render(),
        "word": list(w.word),
        "height_bound": height_bound,
        "pairs_scanned": scanned,
        "q_commuting": q_comm,
        "multiplicative": mult,
        "violations": violations,
    }
