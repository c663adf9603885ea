"""Noncommutative polynomial engine with exact scalar coefficients.

Three generator families are supported, each with a confluent local rewrite
system defining canonical normal forms:

* ``weyl``      -- boson modes a, a+ with  a a+ = a+ a + 1.
* ``cliffdiff`` -- x, d (=d/dx) and gamma per mode over Gaussian rationals,
                   with  d x = x d + 1,  g_m g_m = -1  and gammas of distinct
                   modes anticommuting.
* ``qosc``      -- q-oscillator modes A+, A-, A0 and the group-like
                   E = q^(A0/2) (Laurent exponents), over rational functions
                   in v with q = v**4:
                        A- A+ = q A+ A- + 1,      A+ A- = (E^2 - 1)/(q - 1),
                        A0 A+- = A+- (A0 +- 1),   E A+- = q^(+-1/2) A+- E.

A letter is ``(code, exp)`` with ``code = (mode << 2) | kind``; a word is a
tuple of letters; an Element maps words to nonzero scalars and is kept in
normal form at all times.  Words of distinct modes commute (gammas up to
sign), so normalization sorts letters by mode and reduces each mode segment
independently;  a slow pure adjacent-pair rewriter is retained as a second,
independently-strategized reduction path for confluence testing.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .fields import QQ, QQI, QV, Gauss, RatFunc, PoleError


@lru_cache(maxsize=None)
def _binom_row(p):
    """Coefficients of (t+1)**p as [(j, C(p,j))]."""
    return tuple((j, Fraction(comb(p, j))) for j in range(p + 1))


@lru_cache(maxsize=None)
def _binom_row_shift(p):
    """Coefficients of (t-1)**p as [(j, C(p,j)*(-1)**(p-j))]."""
    return tuple((j, Fraction(-comb(p, j) if (p - j) % 2 else comb(p, j)))
                 for j in range(p + 1))

# kind tags (per family; values share the 2 low bits of a letter code)
W_CRE, W_ANN = 0, 1                 # weyl
C_X, C_DER, C_GAM = 0, 1, 2        # cliffdiff
Q_AP, Q_AM, Q_AN, Q_EE = 0, 1, 2, 3  # qosc

_KIND_NAMES = {
    "weyl": {W_CRE: "ad", W_ANN: "a"},
    "cliffdiff": {C_X: "x", C_DER: "d", C_GAM: "g"},
    "qosc": {Q_AP: "Ap", Q_AM: "Am", Q_AN: "A0", Q_EE: "E"},
}


class AlgebraError(Exception):
    """Ill-formed input: family mismatch, bad generator, bad mode."""


class RealizationError(AlgebraError):
    """A realization failed its defining relations on construction."""


def _code(mode, kind):
    return (mode << 2) | kind


def _mode(code):
    return code >> 2


def _kind(code):
    return code & 3


class Algebra:
    """A generator family over a fixed number of modes and scalar field.

    Instances hold the rewrite caches and the word intern table; Elements
    belonging to different Algebra instances never mix.  Use the module
    factories (``weyl_algebra`` etc.) so equal parameters share an instance.
    """

    family = None

    def __init__(self, nmodes, field):
        if nmodes < 1:
            raise AlgebraError("need at least one mode")
        self.nmodes = nmodes
        self.field = field
        self._intern = {}
        self._seg_cache = {}
        self._prod_cache = {}
        self.stats = {"pair_products": 0, "segment_reductions": 0}

    # -- element constructors -------------------------------------------------

    def zero(self):
        return Element(self, {})

    def one(self):
        return Element(self, {(): self.field.one})

    def scalar(self, c):
        c = self.field.coerce(c)
        return Element(self, {(): c} if c else {})

    def gen(self, kind, mode, exp=1):
        self._check_gen(kind, mode)
        if exp == 0:
            return self.one()
        return self.from_word(((_code(mode, kind), exp),))

    def from_word(self, letters):
        """Normalize an arbitrary word of (code, exp) letters into an Element."""
        return Element(self, self._normal_form(tuple(letters)))

    def element(self, terms):
        """Normalize a raw {word: coeff} map into an Element."""
        out = {}
        for word, c in terms.items():
            c = self.field.coerce(c)
            if not c:
                continue
            for w, cw in self._normal_form(tuple(word)).items():
                acc = out.get(w)
                s = c * cw if acc is None else acc + c * cw
                if s:
                    out[w] = s
                elif acc is not None:
                    del out[w]
        return Element(self, out)

    def _check_gen(self, kind, mode):
        if not 1 <= mode <= self.nmodes:
            raise AlgebraError("mode %d out of range 1..%d" % (mode, self.nmodes))
        if kind not in _KIND_NAMES[self.family]:
            raise AlgebraError("kind %r invalid for family %s" % (kind, self.family))

    # -- family hooks ----------------------------------------------------------

    def _clean_letter(self, code, exp):
        """Canonicalize one letter.

        Returns None to keep the letter as-is, else (coeff_or_None,
        letter_or_None): the optional scalar multiplies the term, a None
        letter is dropped.
        """
        if exp == 0:
            return None, None
        return None

    def _pair_rule(self, l1, l2):
        """Rewrite for an adjacent same-mode pair; None when already ordered."""
        raise NotImplementedError

    def _fold_letter(self, state, code, exp):
        """Closed-form right-multiplication of a canonical mode word by one
        letter; returns [(coeff, state), ...].  States are small per-family
        exponent tuples."""
        raise NotImplementedError

    def _fold_init(self):
        raise NotImplementedError

    def _state_word(self, mode, state):
        """Canonical word tuple for a fold state."""
        raise NotImplementedError

    def _is_odd(self, letter):
        return False

    # -- normalization ----------------------------------------------------------

    def _intern_word(self, w):
        return self._intern.setdefault(w, w)

    def _sort_by_mode(self, letters):
        """Stable insertion sort by mode; returns (list, parity_sign)."""
        arr = list(letters)
        flips = 0
        odd = self._is_odd
        for i in range(1, len(arr)):
            li = arr[i]
            mi = _mode(li[0])
            j = i
            while j > 0 and _mode(arr[j - 1][0]) > mi:
                if odd(arr[j - 1]) and odd(li):
                    flips ^= 1
                arr[j] = arr[j - 1]
                j -= 1
            arr[j] = li
        return arr, (-1 if flips else 1)

    def _normal_form(self, letters):
        """dict word -> coeff for an arbitrary letter sequence."""
        one = self.field.one
        if not letters:
            return {(): one}
        arr, sign = self._sort_by_mode(letters)
        # split into per-mode segments
        segs = []
        start = 0
        for i in range(1, len(arr) + 1):
            if i == len(arr) or _mode(arr[i][0]) != _mode(arr[start][0]):
                segs.append(tuple(arr[start:i]))
                start = i
        out = {(): self.field.coerce(sign) if sign != 1 else one}
        for seg in segs:
            nf = self._reduce_segment_fast(seg)
            new = {}
            for w1, c1 in out.items():
                for w2, c2 in nf.items():
                    w = self._intern_word(w1 + w2)
                    c = c1 * c2
                    acc = new.get(w)
                    s = c if acc is None else acc + c
                    if s:
                        new[w] = s
                    elif acc is not None:
                        del new[w]
            out = new
            if not out:
                break
        return out

    def _reduce_segment_fast(self, seg):
        """Normal form of a single-mode letter sequence by folding letters
        into canonical-word states with closed-form commutation rules."""
        hit = self._seg_cache.get(seg)
        if hit is not None:
            return hit
        self.stats["segment_reductions"] += 1
        mode = _mode(seg[0][0])
        states = {self._fold_init(): self.field.one}
        for code, exp in seg:
            if exp == 0:
                continue
            new = {}
            for st, c in states.items():
                for rc, rst in self._fold_letter(st, code, exp):
                    cc = c * rc
                    acc = new.get(rst)
                    s = cc if acc is None else acc + cc
                    if s:
                        new[rst] = s
                    elif acc is not None:
                        del new[rst]
            states = new
            if not states:
                break
        out = {}
        for st, c in states.items():
            out[self._intern_word(self._state_word(mode, st))] = c
        self._seg_cache[seg] = out
        return out

    def _reduce_segment(self, seg, strategy="left", use_cache=False):
        """Normal form of a single-mode letter sequence by generic worklist
        rewriting with the family pair rules; reference path for confluence
        tests (the fast fold above is the production path)."""
        self.stats["segment_reductions"] += 1
        one = self.field.one
        out = {}
        # dict worklist: identical intermediate words merge their coefficients,
        # which keeps high-exponent ladder rewrites polynomial instead of
        # exponentially branching
        work = {tuple(seg): one}
        while work:
            wkey, coeff = work.popitem()
            ls = list(wkey)
            restart = True
            while restart:
                restart = False
                # clean letters (zero exponents, gamma squares)
                i = 0
                while i < len(ls):
                    cleaned = self._clean_letter(*ls[i])
                    if cleaned is None:
                        i += 1
                        continue
                    c, letter = cleaned
                    if c is not None:
                        coeff = coeff * c
                    if letter is None:
                        del ls[i]
                    else:
                        ls[i] = letter
                        i += 1
                if not coeff:
                    ls = None
                    break
                # locate a redex
                n = len(ls)
                idxs = range(n - 1) if strategy == "left" else range(n - 2, -1, -1)
                for i in idxs:
                    l1, l2 = ls[i], ls[i + 1]
                    if l1[0] == l2[0]:
                        ls[i:i + 2] = [(l1[0], l1[1] + l2[1])]
                        restart = True
                        break
                    rule = self._pair_rule(l1, l2)
                    if rule is not None:
                        if len(rule) == 1:
                            rc, repl = rule[0]
                            coeff = coeff * rc
                            ls[i:i + 2] = list(repl)
                        else:
                            for rc, repl in rule:
                                key = tuple(ls[:i] + list(repl) + ls[i + 2:])
                                c = coeff * rc
                                acc = work.get(key)
                                s = c if acc is None else acc + c
                                if s:
                                    work[key] = s
                                elif acc is not None:
                                    del work[key]
                            ls = None
                        restart = ls is not None
                        break
                else:
                    continue
                if ls is None:
                    break
            if ls is None:
                continue
            w = self._intern_word(tuple(ls))
            acc = out.get(w)
            s = coeff if acc is None else acc + coeff
            if s:
                out[w] = s
            elif acc is not None:
                del out[w]
        return out

    def normal_form_raw(self, letters, strategy="left", structured=True):
        """Normalize a raw word; ``structured=False`` uses the pure
        adjacent-pair rewriter (cross-mode swaps as explicit steps), which is
        the independent reduction path used by confluence tests."""
        if structured:
            if strategy == "left":
                return Element(self, self._normal_form(tuple(letters)))
            # strategy-bearing structured path: bypass the segment cache
            arr, sign = self._sort_by_mode(tuple(letters))
            segs = []
            start = 0
            for i in range(1, len(arr) + 1):
                if i == len(arr) or _mode(arr[i][0]) != _mode(arr[start][0]):
                    segs.append(tuple(arr[start:i]))
                    start = i
            out = {(): self.field.coerce(sign)}
            for seg in segs:
                nf = self._reduce_segment(seg, strategy=strategy, use_cache=False)
                new = {}
                for w1, c1 in out.items():
                    for w2, c2 in nf.items():
                        w = w1 + w2
                        c = c1 * c2
                        acc = new.get(w)
                        s = c if acc is None else acc + c
                        if s:
                            new[w] = s
                        elif acc is not None:
                            del new[w]
                out = new
            return Element(self, out)
        return Element(self, self._reduce_pure(tuple(letters), strategy))

    def _reduce_pure(self, letters, strategy):
        """Pure adjacent-pair rewriting on whole words; no mode pre-sort."""
        one = self.field.one
        out = {}
        work = {tuple(letters): one}
        odd = self._is_odd
        while work:
            wkey, coeff = work.popitem()
            ls = list(wkey)
            restart = True
            while restart:
                restart = False
                i = 0
                while i < len(ls):
                    cleaned = self._clean_letter(*ls[i])
                    if cleaned is None:
                        i += 1
                        continue
                    c, letter = cleaned
                    if c is not None:
                        coeff = coeff * c
                    if letter is None:
                        del ls[i]
                    else:
                        ls[i] = letter
                        i += 1
                if not coeff:
                    ls = None
                    break
                n = len(ls)
                idxs = range(n - 1) if strategy == "left" else range(n - 2, -1, -1)
                for i in idxs:
                    l1, l2 = ls[i], ls[i + 1]
                    if l1[0] == l2[0]:
                        ls[i:i + 2] = [(l1[0], l1[1] + l2[1])]
                        restart = True
                        break
                    if _mode(l1[0]) != _mode(l2[0]):
                        if l1[0] > l2[0]:
                            if odd(l1) and odd(l2):
                                coeff = coeff * self.field.from_int(-1)
                            ls[i], ls[i + 1] = l2, l1
                            restart = True
                            break
                        continue
                    rule = self._pair_rule(l1, l2)
                    if rule is not None:
                        if len(rule) == 1:
                            rc, repl = rule[0]
                            coeff = coeff * rc
                            ls[i:i + 2] = list(repl)
                        else:
                            for rc, repl in rule:
                                key = tuple(ls[:i] + list(repl) + ls[i + 2:])
                                c = coeff * rc
                                acc = work.get(key)
                                s = c if acc is None else acc + c
                                if s:
                                    work[key] = s
                                elif acc is not None:
                                    del work[key]
                            ls = None
                        restart = ls is not None
                        break
                else:
                    continue
                if ls is None:
                    break
            if ls is None:
                continue
            w = tuple(ls)
            acc = out.get(w)
            s = coeff if acc is None else acc + coeff
            if s:
                out[w] = s
            elif acc is not None:
                del out[w]
        return out

    def mul_words(self, w1, w2):
        """Normal form of the concatenation of two canonical words (cached)."""
        key = (w1, w2)
        hit = self._prod_cache.get(key)
        if hit is None:
            hit = self._normal_form(w1 + w2)
            self._prod_cache[key] = hit
        return hit

    # -- display -----------------------------------------------------------------

    def letter_str(self, code, exp):
        name = "%s%d" % (_KIND_NAMES[self.family][_kind(code)], _mode(code))
        return name if exp == 1 else "%s^%d" % (name, exp)

    def word_str(self, word):
        if not word:
            return "1"
        return "*".join(self.letter_str(c, e) for c, e in word)


class WeylAlgebra(Algebra):
    family = "weyl"

    def __init__(self, nmodes):
        super().__init__(nmodes, QQ)
        self._one = QQ.one

    def _pair_rule(self, l1, l2):
        k1, k2 = _kind(l1[0]), _kind(l2[0])
        if k1 == W_ANN and k2 == W_CRE:
            a, b = l1[1], l2[1]
            m = _mode(l1[0])
            ann, cre = _code(m, W_ANN), _code(m, W_CRE)
            return [
                (self._one, ((ann, a - 1), (cre, 1), (ann, 1), (cre, b - 1))),
                (self._one, ((ann, a - 1), (cre, b - 1))),
            ]
        return None

    # fold state: (cre_exp, ann_exp)

    def _fold_init(self):
        return (0, 0)

    def _fold_letter(self, state, code, exp):
        a, b = state
        if _kind(code) == W_ANN:
            return [(self._one, (a, b + exp))]
        out = {state: self._one}
        for _ in range(exp):           # a^b ad = ad a^b + b a^(b-1)
            new = {}
            for (x, y), c in out.items():
                acc = new.get((x + 1, y))
                new[(x + 1, y)] = c if acc is None else acc + c
                if y:
                    cy = c * Fraction(y)
                    key = (x, y - 1)
                    acc = new.get(key)
                    new[key] = cy if acc is None else acc + cy
            out = new
        return list((c, st) for st, c in out.items())

    def _state_word(self, mode, state):
        a, b = state
        w = []
        if a:
            w.append((_code(mode, W_CRE), a))
        if b:
            w.append((_code(mode, W_ANN), b))
        return tuple(w)


class CliffDiffAlgebra(Algebra):
    family = "cliffdiff"

    def __init__(self, nmodes):
        super().__init__(nmodes, QQI)
        self._one = QQI.one
        self._m_one = QQI.from_int(-1)

    def _clean_letter(self, code, exp):
        if exp == 0:
            return None, None
        if _kind(code) == C_GAM and exp >= 2:
            sign = self._m_one if (exp // 2) % 2 else self._one
            if exp % 2:
                return sign, (code, 1)
            return sign, None
        return None

    def _pair_rule(self, l1, l2):
        k1, k2 = _kind(l1[0]), _kind(l2[0])
        if k1 == C_DER and k2 == C_X:
            a, b = l1[1], l2[1]
            m = _mode(l1[0])
            x, d = _code(m, C_X), _code(m, C_DER)
            return [
                (self._one, ((d, a - 1), (x, 1), (d, 1), (x, b - 1))),
                (self._one, ((d, a - 1), (x, b - 1))),
            ]
        if k1 == C_GAM and k2 in (C_X, C_DER):
            return [(self._one, (l2, l1))]
        return None

    def _is_odd(self, letter):
        return _kind(letter[0]) == C_GAM and letter[1] % 2 == 1

    # fold state: (x_exp, der_exp, gamma_parity)

    def _fold_init(self):
        return (0, 0, 0)

    def _fold_letter(self, state, code, exp):
        x, d, g = state
        kind = _kind(code)
        if kind == C_DER:
            return [(self._one, (x, d + exp, g))]
        if kind == C_GAM:
            g2 = g + exp
            sign = self._m_one if (g2 // 2) % 2 else self._one
            return [(sign, (x, d, g2 % 2))]
        out = {state: self._one}
        for _ in range(exp):           # d^k x = x d^k + k d^(k-1)
            new = {}
            for (u, w, gg), c in out.items():
                key = (u + 1, w, gg)
                acc = new.get(key)
                new[key] = c if acc is None else acc + c
                if w:
                    cw = c * Gauss(w)
                    key = (u, w - 1, gg)
                    acc = new.get(key)
                    new[key] = cw if acc is None else acc + cw
            out = new
        return list((c, st) for st, c in out.items())

    def _state_word(self, mode, state):
        x, d, g = state
        w = []
        if x:
            w.append((_code(mode, C_X), x))
        if d:
            w.append((_code(mode, C_DER), d))
        if g:
            w.append((_code(mode, C_GAM), g))
        return tuple(w)


class QOscAlgebra(Algebra):
    """q-oscillator family; symbolic over QQ(v), or specialized at v = v0."""

    family = "qosc"

    def __init__(self, nmodes, v0=None):
        if v0 is None:
            super().__init__(nmodes, QV)
            self.v0 = None
        else:
            v0 = Fraction(v0)
            if not v0:
                raise PoleError("v0 must be nonzero")
            if v0 ** 4 == 1:
                raise PoleError("v0**4 = 1 is a pole of the rewrite system")
            super().__init__(nmodes, QQ)
            self.v0 = v0
        self._one = self.field.one
        self._m_one = self.field.from_int(-1)
        q = self.v_pow(4)
        self._q = q
        self._inv_qm1 = self.field.inv(q - self.field.one)

    def v_pow(self, k):
        """The scalar v**k (q**(k/4))."""
        if self.v0 is None:
            return RatFunc.v_power(k)
        return self.v0 ** k

    def _pair_rule(self, l1, l2):
        k1, k2 = _kind(l1[0]), _kind(l2[0])
        if k1 == k2:
            return None
        m = _mode(l1[0])
        ap, am = _code(m, Q_AP), _code(m, Q_AM)
        an, ee = _code(m, Q_AN), _code(m, Q_EE)
        one = self._one
        if k1 == Q_AM and k2 == Q_AP:
            a, b = l1[1], l2[1]
            return [
                (self._q, ((am, a - 1), (ap, 1), (am, 1), (ap, b - 1))),
                (one, ((am, a - 1), (ap, b - 1))),
            ]
        if k1 == Q_AP and k2 == Q_AM:
            a, b = l1[1], l2[1]
            return [
                (self._inv_qm1, ((ap, a - 1), (ee, 2), (am, b - 1))),
                (-self._inv_qm1, ((ap, a - 1), (am, b - 1))),
            ]
        if k1 == Q_AN and k2 == Q_AP:
            a, b = l1[1], l2[1]
            return [
                (one, ((an, a - 1), (ap, 1), (an, 1), (ap, b - 1))),
                (one, ((an, a - 1), (ap, 1), (ap, b - 1))),
            ]
        if k1 == Q_AN and k2 == Q_AM:
            a, b = l1[1], l2[1]
            return [
                (one, ((an, a - 1), (am, 1), (an, 1), (am, b - 1))),
                (self._m_one, ((an, a - 1), (am, 1), (am, b - 1))),
            ]
        if k1 == Q_EE:
            k = l1[1]
            if k2 == Q_AP:
                return [(self.v_pow(2 * k * l2[1]), ((ap, l2[1]), (ee, k)))]
            if k2 == Q_AM:
                return [(self.v_pow(-2 * k * l2[1]), ((am, l2[1]), (ee, k)))]
            if k2 == Q_AN:
                return [(one, ((an, l2[1]), (ee, k)))]
        return None

    # fold state: (ap_exp, am_exp, a0_exp, e_exp) with ap_exp * am_exp == 0

    def _fold_init(self):
        return (0, 0, 0, 0)

    def _fold_letter(self, state, code, exp):
        kind = _kind(code)
        if kind == Q_EE:
            a, b, p, k = state
            return [(self._one, (a, b, p, k + exp))]
        if kind == Q_AN:
            a, b, p, k = state
            return [(self._one, (a, b, p + exp, k))]
        out = {state: self._one}
        step = self._fold_ap_unit if kind == Q_AP else self._fold_am_unit
        for _ in range(exp):
            new = {}
            for st, c in out.items():
                for rc, rst in step(st):
                    cc = c * rc
                    acc = new.get(rst)
                    s = cc if acc is None else acc + cc
                    if s:
                        new[rst] = s
                    elif acc is not None:
                        del new[rst]
            out = new
        return list((c, st) for st, c in out.items())

    def _fold_ap_unit(self, state):
        # (Ap^a Am^b A0^p E^k) * Ap
        a, b, p, k = state
        base = self.v_pow(2 * k)            # q^(k/2) from E^k Ap swap
        out = []
        if b == 0:
            for j, cb in _binom_row(p):     # (A0+1)^p expansion
                out.append((base * cb, (a + 1, 0, j, k)))
            return out
        # a == 0; Am^b Ap = q^b Ap Am^b + [b]_q Am^(b-1), then the Ap
        # contracts: Ap Am^b -> ((E^2 - 1)/(q-1)) Am^(b-1) with E^2 pushed right
        c_up = base * self._q * self._inv_qm1
        c_dn = -base * self._inv_qm1
        for j, cb in _binom_row(p):
            out.append((c_up * cb, (0, b - 1, j, k + 2)))
            out.append((c_dn * cb, (0, b - 1, j, k)))
        return out

    def _fold_am_unit(self, state):
        # (Ap^a Am^b A0^p E^k) * Am
        a, b, p, k = state
        base = self.v_pow(-2 * k)           # q^(-k/2) from E^k Am swap
        out = []
        if a == 0:
            for j, cb in _binom_row_shift(p):   # (A0-1)^p expansion
                out.append((base * cb, (0, b + 1, j, k)))
            return out
        # b == 0; Ap^a Am = Ap^(a-1) (E^2 - 1)/(q - 1)
        c_up = base * self._inv_qm1
        for j, cb in _binom_row_shift(p):
            out.append((c_up * cb, (a - 1, 0, j, k + 2)))
            out.append((-c_up * cb, (a - 1, 0, j, k)))
        return out

    def _state_word(self, mode, state):
        a, b, p, k = state
        w = []
        if a:
            w.append((_code(mode, Q_AP), a))
        if b:
            w.append((_code(mode, Q_AM), b))
        if p:
            w.append((_code(mode, Q_AN), p))
        if k:
            w.append((_code(mode, Q_EE), k))
        return tuple(w)

    def specialize_element(self, elem, v0):
        """Map a symbolic qosc Element to the algebra specialized at v = v0."""
        if self.v0 is not None:
            raise AlgebraError("element already specialized")
        target = qosc_algebra(self.nmodes, v0)
        terms = {}
        for w, c in elem.terms.items():
            cv = c.specialize(v0)
            if cv:
                terms[w] = cv
        return Element(target, terms)


_ALGEBRAS = {}


def weyl_algebra(nmodes):
    key = ("weyl", nmodes)
    if key not in _ALGEBRAS:
        _ALGEBRAS[key] = WeylAlgebra(nmodes)
    return _ALGEBRAS[key]


def cliffdiff_algebra(nmodes):
    key = ("cliffdiff", nmodes)
    if key not in _ALGEBRAS:
        _ALGEBRAS[key] = CliffDiffAlgebra(nmodes)
    return _ALGEBRAS[key]


def qosc_algebra(nmodes, v0=None):
    key = ("qosc", nmodes, None if v0 is None else Fraction(v0))
    if key not in _ALGEBRAS:
        _ALGEBRAS[key] = QOscAlgebra(nmodes, v0)
    return _ALGEBRAS[key]


class Element:
    """A finite linear combination of normal-form words with field scalars.

    Elements are immutable by convention and always normalized; two Elements
    of the same algebra are equal iff their term maps coincide.
    """

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = terms

    # -- basic queries ------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    @property
    def n_terms(self):
        return len(self.terms)

    def constant_term(self):
        return self.terms.get((), self.alg.field.zero)

    def ann_degree(self):
        """Max total lowering degree (a / d / A- exponents) over the words."""
        fam = self.alg.family
        low = {"weyl": (W_ANN,), "cliffdiff": (C_DER,), "qosc": (Q_AM,)}[fam]
        best = 0
        for w in self.terms:
            d = sum(e for c, e in w if _kind(c) in low)
            if d > best:
                best = d
        return best

    def cre_degree(self):
        fam = self.alg.family
        up = {"weyl": (W_CRE,), "cliffdiff": (C_X,), "qosc": (Q_AP,)}[fam]
        best = 0
        for w in self.terms:
            d = sum(e for c, e in w if _kind(c) in up)
            if d > best:
                best = d
        return best

    # -- arithmetic ----------------------------------------------------------------

    def _coerce_scalar(self, other):
        try:
            return self.alg.field.coerce(other)
        except TypeError:
            return None

    def __add__(self, other):
        if isinstance(other, Element):
            if other.alg is not self.alg:
                raise AlgebraError("family/context mismatch in addition")
            a, b = self.terms, other.terms
            if len(a) < len(b):
                a, b = b, a
            out = dict(a)
            for w, c in b.items():
                acc = out.get(w)
                s = c if acc is None else acc + c
                if s:
                    out[w] = s
                elif acc is not None:
                    del out[w]
            return Element(self.alg, out)
        c = self._coerce_scalar(other)
        if c is None:
            return NotImplemented
        return self + Element(self.alg, {(): c} if c else {})

    __radd__ = __add__

    def __neg__(self):
        return Element(self.alg, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, Element):
            return self + (-other)
        c = self._coerce_scalar(other)
        if c is None:
            return NotImplemented
        return self + Element(self.alg, {(): -c} if c else {})

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Element):
            if other.alg is not self.alg:
                raise AlgebraError("family/context mismatch in product")
            alg = self.alg
            mw = alg.mul_words
            out = {}
            stats = alg.stats
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    stats["pair_products"] += 1
                    c = c1 * c2
                    for w, cw in mw(w1, w2).items():
                        acc = out.get(w)
                        s = c * cw if acc is None else acc + c * cw
                        if s:
                            out[w] = s
                        elif acc is not None:
                            del out[w]
            return Element(alg, out)
        c = self._coerce_scalar(other)
        if c is None:
            return NotImplemented
        if not c:
            return Element(self.alg, {})
        return Element(self.alg, {w: cw * c for w, cw in self.terms.items()})

    def __rmul__(self, other):
        c = self._coerce_scalar(other)
        if c is None:
            return NotImplemented
        if not c:
            return Element(self.alg, {})
        return Element(self.alg, {w: c * cw for w, cw in self.terms.items()})

    def __truediv__(self, other):
        c = self._coerce_scalar(other)
        if c is None:
            return NotImplemented
        return self * self.alg.field.inv(c)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = self.alg.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.alg is other.alg and self.terms == other.terms
        c = self._coerce_scalar(other)
        if c is None:
            return NotImplemented
        return self.terms == ({(): c} if c else {})

    __hash__ = None

    # -- display ---------------------------------------------------------------------

    def serialize(self):
        """Deterministic text form: monomials sorted by (length, word)."""
        if not self.terms:
            return "0"
        alg = self.alg
        bits = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            cstr = alg.field.to_str(c)
            wstr = alg.word_str(w)
            if not w:
                bits.append(cstr)
            elif cstr == "1":
                bits.append(wstr)
            elif cstr == "-1":
                bits.append("-%s" % wstr)
            else:
                if any(ch in cstr for ch in "+-/* ") and not (
                        cstr.startswith("(") and cstr.endswith(")")):
                    cstr = "(%s)" % cstr
                bits.append("%s*%s" % (cstr, wstr))
        out = bits[0]
        for b in bits[1:]:
            out += " - " + b[1:] if b.startswith("-") else " + " + b
        return out

    def __repr__(self):
        s = self.serialize()
        if len(s) > 200:
            s = s[:200] + " ... <%d terms>" % self.n_terms
        return s


# -- bracket helpers (duck-typed: work for Elements and oracle operators) -------


def commutator(a, b):
    return a * b - b * a


def anticommutator(a, b):
    return a * b + b * a


def q_commutator(a, b, lam):
    """lam*a*b - lam^(-1)*b*a; lam must be an invertible scalar."""
    if not lam:
        raise ZeroDivisionError("q_commutator with lam = 0")
    return (a * b) * lam - (b * a) * (1 / lam)


def normalize(e):
    """Identity on Elements (they are kept normalized); hook for raw maps."""
    if isinstance(e, Element):
        return e
    raise TypeError("normalize expects an Element")
