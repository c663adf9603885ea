"""Exact scalar arithmetic: rationals, Gaussian rationals and rational
functions in the formal variable v (with q = v**4).

All three scalar types are immutable, canonical on construction and support
the native arithmetic operators, so generic code can stay duck-typed.  Zero
tests go through ``bool(x)``.
"""

from __future__ import annotations

from fractions import Fraction


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a pole."""


# ---------------------------------------------------------------------------
# Gaussian rationals


class Gauss:
    """Gaussian rational re + im*i with i**2 = -1, components Fraction."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Gauss values are immutable")

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Gauss):
            return other
        if isinstance(other, (int, Fraction)):
            return Gauss(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Gauss(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Gauss(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Gauss(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Gauss(self.re * o.re - self.im * o.im,
                     self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return Gauss((self.re * o.re + self.im * o.im) / n,
                     (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = Gauss(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self):
        return Gauss(self.re, -self.im)

    # -- comparisons / hashing ----------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return "%s*i" % self.im if self.im != 1 else "i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        istr = "i" if mag == 1 else "%s*i" % mag
        return "(%s%s%s)" % (self.re, sign, istr)

    __repr__ = __str__


I_GAUSS = Gauss(0, 1)


# ---------------------------------------------------------------------------
# Dense univariate polynomials over Fraction (helper layer for RatFunc).
# A polynomial is a tuple of Fractions, ascending powers, no trailing zeros;
# () is the zero polynomial.

P_ZERO = ()
P_ONE = (Fraction(1),)


def p_trim(cs):
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


def p_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return p_trim(out)


def p_neg(a):
    return tuple(-c for c in a)


def p_sub(a, b):
    return p_add(a, p_neg(b))


def p_mul(a, b):
    if not a or not b:
        return P_ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] += ca * cb
    return p_trim(out)


def p_scale(a, s):
    if not s:
        return P_ZERO
    return tuple(c * s for c in a)


def p_divmod(a, b):
    """Exact polynomial division with remainder over the rationals."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db, lb = len(b) - 1, b[-1]
    if len(a) < len(b):
        return P_ZERO, p_trim(rem)
    quo = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if not c:
            continue
        f = c / lb
        quo[i - db] = f
        for j in range(db + 1):
            rem[i - db + j] -= f * b[j]
    return p_trim(quo), p_trim(rem)


def p_gcd(a, b):
    """Monic gcd (Euclid); gcd(0, 0) = 0."""
    while b:
        a, b = b, p_divmod(a, b)[1]
    if not a:
        return P_ZERO
    lead = a[-1]
    if lead == 1:
        return a
    return tuple(c / lead for c in a)


def p_eval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def p_shift(a, k):
    """Multiply by v**k, k >= 0."""
    if not a:
        return P_ZERO
    return (Fraction(0),) * k + tuple(a)


# ---------------------------------------------------------------------------
# Rational functions in v


class RatFunc:
    """Rational function v**shift * num/den over the rationals.

    Canonical form: num and den have nonzero constant term (the whole power
    of v is carried by ``shift``), den is monic, gcd(num, den) = 1.  Zero is
    (shift=0, num=(), den=(1,)).  The variable v stands for q**(1/4), so the
    scalar q is ``RatFunc.v_power(4)``.
    """

    __slots__ = ("shift", "num", "den")

    def __init__(self, num, den=P_ONE, shift=0, _canonical=False):
        if _canonical:
            object.__setattr__(self, "shift", shift)
            object.__setattr__(self, "num", num)
            object.__setattr__(self, "den", den)
            return
        num = p_trim(num)
        den = p_trim(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            object.__setattr__(self, "shift", 0)
            object.__setattr__(self, "num", P_ZERO)
            object.__setattr__(self, "den", P_ONE)
            return
        # pull powers of v out of num and den into the shift
        i = 0
        while not num[i]:
            i += 1
        j = 0
        while not den[j]:
            j += 1
        num = num[i:]
        den = den[j:]
        shift += i - j
        g = p_gcd(num, den)
        if len(g) > 1:
            num = p_divmod(num, g)[0]
            den = p_divmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc values are immutable")

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def from_fraction(f):
        f = Fraction(f)
        if not f:
            return RF_ZERO
        return RatFunc((f,), P_ONE, 0, _canonical=True)

    @staticmethod
    def v_power(k):
        """The monomial v**k (k may be negative)."""
        return RatFunc(P_ONE, P_ONE, k, _canonical=True)

    # -- helpers --------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.from_fraction(other)
        return None

    def is_monomial(self):
        return len(self.num) == 1 and self.den == P_ONE

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num:
            return o
        if not o.num:
            return self
        m = min(self.shift, o.shift)
        a = p_shift(self.num, self.shift - m)
        b = p_shift(o.num, o.shift - m)
        if self.den == o.den:
            return RatFunc(p_add(a, b), self.den, m)
        return RatFunc(p_add(p_mul(a, o.den), p_mul(b, self.den)),
                       p_mul(self.den, o.den), m)

    __radd__ = __add__

    def __neg__(self):
        if not self.num:
            return self
        return RatFunc(p_neg(self.num), self.den, self.shift, _canonical=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return RF_ZERO
        if self.den == P_ONE and o.den == P_ONE:
            if len(self.num) == 1:
                return RatFunc(p_scale(o.num, self.num[0]), P_ONE,
                               self.shift + o.shift, _canonical=True)
            if len(o.num) == 1:
                return RatFunc(p_scale(self.num, o.num[0]), P_ONE,
                               self.shift + o.shift, _canonical=True)
            return RatFunc(p_mul(self.num, o.num), P_ONE,
                           self.shift + o.shift, _canonical=True)
        return RatFunc(p_mul(self.num, o.num), p_mul(self.den, o.den),
                       self.shift + o.shift)

    __rmul__ = __mul__

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num, -self.shift)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        out = RF_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- evaluation -----------------------------------------------------------

    def specialize(self, v0):
        """Exact evaluation at v = v0 (a nonzero rational); PoleError at poles."""
        v0 = Fraction(v0)
        if self.shift < 0 and not v0:
            raise PoleError("pole at v = 0")
        d = p_eval(self.den, v0)
        if not d:
            raise PoleError("pole at v = %s" % v0)
        return v0 ** self.shift * p_eval(self.num, v0) / d

    # -- comparisons / hashing --------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.shift == o.shift and self.num == o.num
                and self.den == o.den)

    def __bool__(self):
        return bool(self.num)

    def __hash__(self):
        return hash((self.shift, self.num, self.den))

    # -- display ---------------------------------------------------------------

    def _poly_str(self, cs, shift=0):
        parts = []
        for k, c in enumerate(cs):
            if not c:
                continue
            e = k + shift
            if e == 0:
                parts.append(str(c))
            else:
                ve = "v" if e == 1 else "v^%d" % e
                if c == 1:
                    parts.append(ve)
                elif c == -1:
                    parts.append("-" + ve)
                else:
                    parts.append("%s*%s" % (c, ve))
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __str__(self):
        if not self.num:
            return "0"
        nshift = max(self.shift, 0)
        dshift = max(-self.shift, 0)
        nstr = self._poly_str(self.num, nshift)
        if self.den == P_ONE and dshift == 0:
            return nstr if len([c for c in self.num if c]) == 1 else "(%s)" % nstr
        dstr = self._poly_str(self.den, dshift)
        return "(%s)/(%s)" % (nstr, dstr)

    __repr__ = __str__


RF_ZERO = RatFunc(P_ZERO, P_ONE, 0, _canonical=True)
RF_ONE = RatFunc(P_ONE, P_ONE, 0, _canonical=True)


# ---------------------------------------------------------------------------
# Field adapters: the small amount of field-generic behaviour the engine needs.


class RationalField:
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_int(n):
        return Fraction(n)

    @staticmethod
    def from_fraction(f):
        return Fraction(f)

    @staticmethod
    def coerce(x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError("cannot coerce %r into QQ" % (x,))

    @staticmethod
    def inv(x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    @staticmethod
    def to_str(x):
        return str(x)


class GaussField:
    name = "QQ(i)"
    zero = Gauss(0)
    one = Gauss(1)
    i = I_GAUSS

    @staticmethod
    def from_int(n):
        return Gauss(n)

    @staticmethod
    def from_fraction(f):
        return Gauss(f)

    @staticmethod
    def coerce(x):
        if isinstance(x, Gauss):
            return x
        if isinstance(x, (int, Fraction)):
            return Gauss(x)
        raise TypeError("cannot coerce %r into QQ(i)" % (x,))

    @staticmethod
    def inv(x):
        return Gauss(1) / x

    @staticmethod
    def to_str(x):
        return str(x)


class RatFuncField:
    name = "QQ(v)"
    zero = RF_ZERO
    one = RF_ONE

    @staticmethod
    def from_int(n):
        return RatFunc.from_fraction(n)

    @staticmethod
    def from_fraction(f):
        return RatFunc.from_fraction(f)

    @staticmethod
    def coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc.from_fraction(x)
        raise TypeError("cannot coerce %r into QQ(v)" % (x,))

    @staticmethod
    def inv(x):
        return x.inv()

    @staticmethod
    def v_power(k):
        return RatFunc.v_power(k)

    @staticmethod
    def to_str(x):
        return str(x)


QQ = RationalField()
QQI = GaussField()
QV = RatFuncField()


def specialize(x, v0):
    """Exact evaluation of a RatFunc (or rational constant) at v = v0."""
    if isinstance(x, RatFunc):
        return x.specialize(v0)
    return Fraction(x)
