"""Exact arithmetic in Z[q, q^-1] and its fraction field Q(q).

Laurent polynomials are sparse maps exponent -> integer coefficient.
Fractions are kept reduced, with the denominator normalized to an
ordinary polynomial in q whose constant term is positive, so that
equality is structural.
"""

from fractions import Fraction


class PoleAtZero(ArithmeticError):
    """Raised when evaluating at q = 0 a scalar with a pole there."""


class LaurentPoly:
    """A Laurent polynomial over Z, stored as {exponent: coefficient}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        self.coeffs = {e: c for e, c in coeffs.items() if c != 0}

    # -- constructors -------------------------------------------------

    @classmethod
    def from_int(cls, n):
        return cls({0: n})

    @classmethod
    def q_power(cls, k, coeff=1):
        return cls({k: coeff})

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == {0: 1}

    def is_monomial(self):
        return len(self.coeffs) == 1

    def is_unit(self):
        """Units of Z[q, q^-1] are +-q^k."""
        return len(self.coeffs) == 1 and abs(next(iter(self.coeffs.values()))) == 1

    # -- structure ----------------------------------------------------

    def min_exp(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no valuation")
        return min(self.coeffs)

    def max_exp(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self.coeffs)

    def coeff(self, e):
        return self.coeffs.get(e, 0)

    def shift(self, k):
        """Multiply by q^k."""
        if k == 0:
            return self
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _as_laurent(other)
        res = dict(self.coeffs)
        for e, c in other.coeffs.items():
            res[e] = res.get(e, 0) + c
        return LaurentPoly(res)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) + (-self)

    def __mul__(self, other):
        other = _as_laurent(other)
        res = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                res[e] = res.get(e, 0) + c1 * c2
        return LaurentPoly(res)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a LaurentPoly; use RatScalar")
        res = LaurentPoly({0: 1})
        base = self
        while n:
            if n & 1:
                res = res * base
            base = base * base
            n >>= 1
        return res

    def bar(self):
        """Substitute q -> q^-1."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    # -- rendering ----------------------------------------------------

    def render(self):
        """Textual form with ascending exponents, e.g. 'q^-1 + 2 + q^3'."""
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                term = str(c)
            else:
                qpow = "q" if e == 1 else "q^%d" % e
                if c == 1:
                    term = qpow
                elif c == -1:
                    term = "-" + qpow
                else:
                    term = "%d*%s" % (c, qpow)
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out

    def __repr__(self):
        return "LaurentPoly(%s)" % self.render()


def _as_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.from_int(x)
    raise TypeError("cannot coerce %r to LaurentPoly" % (x,))


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Q = LaurentPoly({1: 1})


# -- gcd machinery ----------------------------------------------------

def _to_dense(p):
    """Laurent -> (shift, dense list of int coeffs from exponent 0)."""
    lo = p.min_exp()
    hi = p.max_exp()
    dense = [0] * (hi - lo + 1)
    for e, c in p.coeffs.items():
        dense[e - lo] = c
    return lo, dense


def _content(dense):
    from math import gcd
    g = 0
    for c in dense:
        g = gcd(g, c)
    return g


def _poly_mod(a, b):
    """Remainder of a by b over Q, dense Fraction lists (b nonzero)."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[i + shift] -= factor * c
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def laurent_gcd(a, b):
    """Gcd in Z[q, q^-1], normalized to an ordinary primitive polynomial
    with positive constant term (unique up to the unit group +-q^k)."""
    if a.is_zero():
        return _normalize_poly(b)
    if b.is_zero():
        return _normalize_poly(a)
    _, da = _to_dense(a)
    _, db = _to_dense(b)
    ca, cb = _content(da), _content(db)
    from math import gcd as igcd
    content = igcd(ca, cb)
    x, y = [Fraction(c) for c in da], [Fraction(c) for c in db]
    while any(y):
        x, y = y, _poly_mod(x, y)
    # clear denominators, make primitive
    den_lcm = 1
    for c in x:
        den_lcm = den_lcm * c.denominator // igcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in x]
    cont = _content(ints)
    ints = [c // cont for c in ints]
    g = LaurentPoly({e: c * content for e, c in enumerate(ints)})
    return _normalize_poly(g)


def _normalize_poly(p):
    """Shift to valuation 0 and make the constant term positive."""
    if p.is_zero():
        return p
    p = p.shift(-p.min_exp())
    if p.coeff(0) < 0:
        p = -p
    return p


def _exact_divide(a, g):
    """Divide Laurent a by Laurent g, assuming exactness."""
    if g.is_one():
        return a
    if a.is_zero():
        return a
    lo_a, da = _to_dense(a)
    lo_g, dg = _to_dense(g)
    quot = [0] * (len(da) - len(dg) + 1)
    da = list(da)
    for i in range(len(quot) - 1, -1, -1):
        c = da[i + len(dg) - 1]
        assert c % dg[-1] == 0, "non-exact polynomial division"
        qc = c // dg[-1]
        quot[i] = qc
        if qc:
            for j, gc in enumerate(dg):
                da[i + j] -= qc * gc
    assert not any(da), "non-exact polynomial division"
    return LaurentPoly({e + lo_a - lo_g: c for e, c in enumerate(quot) if c})


class RatScalar:
    """An element of Q(q) as a reduced fraction of Laurent polynomials.

    Normalization: the denominator is an ordinary polynomial in q with
    positive nonzero constant term, and gcd(num, den) is a unit.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        num = _as_laurent(num)
        den = ONE if den is None else _as_laurent(den)
        if den.is_zero():
            raise ZeroDivisionError("RatScalar with zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @classmethod
    def from_laurent(cls, p):
        return cls(p, ONE, _reduced=True)

    @classmethod
    def q_power(cls, k, coeff=1):
        return cls(LaurentPoly.q_power(k, coeff), ONE, _reduced=True)

    @classmethod
    def one(cls):
        return cls(ONE, ONE, _reduced=True)

    @classmethod
    def zero(cls):
        return cls(ZERO, ONE, _reduced=True)

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _as_rat(other)
        return RatScalar(self.num * other.den + other.num * self.den,
                         self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatScalar(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-_as_rat(other))

    def __rsub__(self, other):
        return _as_rat(other) + (-self)

    def __mul__(self, other):
        other = _as_rat(other)
        return RatScalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rat(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero RatScalar")
        return RatScalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_rat(other) / self

    def __pow__(self, n):
        if n < 0:
            return RatScalar.one() / (self ** (-n))
        res = RatScalar.one()
        for _ in range(n):
            res = res * self
        return res

    def bar(self):
        """The Q-automorphism q -> q^-1 of Q(q)."""
        return RatScalar(self.num.bar(), self.den.bar())

    def __eq__(self, other):
        try:
            other = _as_rat(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- predicates and evaluation -------------------------------------

    def is_laurent(self):
        return self.den.is_one()

    def as_laurent(self):
        if not self.den.is_one():
            raise ValueError("%r is not a Laurent polynomial" % self)
        return self.num

    def is_q_power(self):
        """Return k if self == q^k, else None."""
        if self.den.is_one() and self.num.is_monomial():
            e, c = next(iter(self.num.coeffs.items()))
            if c == 1:
                return e
        return None

    def is_in_qZq(self):
        """True iff self is a polynomial in q with integer coefficients
        and zero constant term."""
        if self.num.is_zero():
            return True
        if not self.den.is_monomial():
            return False
        # den is c * q^0 after normalization
        c = self.den.coeff(0)
        if c == 0:
            return False
        return (self.num.min_exp() >= 1
                and all(v % c == 0 for v in self.num.coeffs.values()))

    def eval_at_zero(self):
        """The value at q = 0 as a Fraction; raises PoleAtZero on a pole."""
        if self.num.is_zero():
            return Fraction(0)
        if self.num.min_exp() < 0:
            raise PoleAtZero("pole at q = 0: %s" % self.render())
        if self.num.min_exp() > 0:
            return Fraction(0)
        return Fraction(self.num.coeff(0), self.den.coeff(0))

    # -- rendering ----------------------------------------------------

    def render(self):
        if self.den.is_one():
            return self.num.render()
        return "(%s)/(%s)" % (self.num.render(), self.den.render())

    def __repr__(self):
        return "RatScalar(%s)" % self.render()


def _reduce(num, den):
    if num.is_zero():
        return ZERO, ONE
    g = laurent_gcd(num, den)
    if not g.is_one():
        num = _exact_divide(num, g)
        den = _exact_divide(den, g)
    # normalize denominator: ordinary polynomial, positive constant term
    shift = -den.min_exp()
    den = den.shift(shift)
    num = num.shift(shift)
    if den.coeff(0) < 0:
        den, num = -den, -num
    return num, den


def _as_rat(x):
    if isinstance(x, RatScalar):
        return x
    if isinstance(x, (int, LaurentPoly)):
        return RatScalar(_as_laurent(x), ONE, _reduced=isinstance(x, int))
    raise TypeError("cannot coerce %r to RatScalar" % (x,))


def bar(s):
    """q -> q^-1 on a RatScalar or LaurentPoly."""
    return s.bar()


# -- quantum integers -------------------------------------------------

def quantum_integer(k, norm):
    """[k] at q_alpha = q^(norm/2), as a Laurent polynomial.

    norm is the squared length (alpha, alpha); it must be even positive.
    """
    if k <= 0:
        raise ValueError("quantum_integer needs k >= 1, got %d" % k)
    if norm <= 0 or norm % 2 != 0:
        raise ValueError("norm must be even positive, got %d" % norm)
    d = norm // 2
    return LaurentPoly({d * (k - 1 - 2 * j): 1 for j in range(k)})


def quantum_factorial(k, norm):
    """[k]! at q_alpha = q^(norm/2)."""
    if k < 0:
        raise ValueError("negative quantum factorial")
    res = ONE
    for j in range(2, k + 1):
        res = res * quantum_integer(j, norm)
    return res


def quantum_binomial(n, k, norm):
    """Gaussian binomial [n choose k] at q_alpha = q^(norm/2)."""
    if k < 0 or k > n:
        return ZERO
    num = ONE
    for j in range(k):
        num = num * quantum_integer(n - j, norm)
    r = RatScalar(num, quantum_factorial(k, norm))
    return r.as_laurent()
