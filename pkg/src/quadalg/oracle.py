"""Independent exact representation oracle.

Each family acts faithfully on a graded polynomial model with scalar-field
matrix entries (no floating point anywhere):

* weyl       -- Bargmann model on monomials z^m: a+ multiplies, a differentiates.
* cliffdiff  -- polynomials tensored with a 2^(N/2)-dimensional spinor space;
               gammas are i times the standard Hermitian tensor-product
               construction, so {g_u, g_v} = -2 delta_uv holds exactly.
* qosc       -- weight basis |m>: A+|m> = |m+1>, A-|m> = [m]_q |m-1>,
               E^k|m> = v^(2mk)|m>;  scalars are rational functions in v or,
               when specialized, exact rationals at v = v0.

Soundness of the zero test: a nonzero normal-form element applied to the
monomial of its (componentwise) minimal annihilation multi-index produces a
nonzero image, so scanning all states of total degree <= (annihilation
degree) + margin decides zero-ness; images are computed exactly without row
truncation, overflow rows (images beyond the basis degree) are tracked for
the matrix interface.  For qosc, diagonal factors (A0 powers, E Laurent
exponents) can vanish on low weights; the suite oracle therefore adds a
seeded sample of higher-weight states and, for symbolic scalars, evaluates
at random rational specializations of v.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct

from .engine import (C_DER, C_GAM, C_X, Q_AM, Q_AN, Q_AP, Q_EE, W_ANN, W_CRE,
                     AlgebraError, _kind, _mode)
from .fields import QQ, QQI, QV, Gauss, RatFunc


class OracleError(AlgebraError):
    """Margin-rule violation or model misuse."""


# ---------------------------------------------------------------------------
# Family models: letter actions on states


class WeylModel:
    family = "weyl"
    field = QQ

    def __init__(self, nmodes):
        self.nmodes = nmodes

    def states(self, degree):
        return _poly_states(self.nmodes, degree)

    def degree(self, state):
        return sum(state)

    def apply_letter(self, code, exp, state, coeff):
        mu = _mode(code) - 1
        if _kind(code) == W_CRE:
            out = list(state)
            out[mu] += exp
            return tuple(out), coeff
        m = state[mu]
        if m < exp:
            return None, None
        c = coeff
        for t in range(exp):
            c = c * (m - t)
        out = list(state)
        out[mu] = m - exp
        return tuple(out), c


class CliffDiffModel:
    family = "cliffdiff"
    field = QQI

    def __init__(self, nmodes):
        if nmodes % 2:
            raise OracleError("spinor model needs even dimension")
        self.nmodes = nmodes
        self.spin_dim = 1 << (nmodes // 2)
        self._gamma = [self._gamma_column_map(mu) for mu in range(nmodes)]

    def _gamma_column_map(self, mu):
        """gamma_(mu+1) = i * Gamma, Gamma the Hermitian Pauli tensor string."""
        j, rem = divmod(mu, 2)
        cols = {}
        for s in range(self.spin_dim):
            sign = 1
            for l in range(j):
                if (s >> l) & 1:
                    sign = -sign
            s2 = s ^ (1 << j)
            if rem == 0:          # sigma_x slot
                c = Gauss(sign)
            else:                 # sigma_y slot
                c = Gauss(0, sign) if not (s >> j) & 1 else Gauss(0, -sign)
            cols[s] = (s2, c * Gauss(0, 1))
        return cols

    def gamma_entries(self, mu):
        """Column map s -> (s', coeff) of gamma_mu (1-based mode index)."""
        return self._gamma[mu - 1]

    def states(self, degree):
        for m in _poly_states(self.nmodes, degree):
            for s in range(self.spin_dim):
                yield (m, s)

    def degree(self, state):
        return sum(state[0])

    def apply_letter(self, code, exp, state, coeff):
        mexp, s = state
        mu = _mode(code) - 1
        kind = _kind(code)
        if kind == C_GAM:
            c = coeff
            for _ in range(exp):
                s, g = self._gamma[mu][s]
                c = c * g
            return (mexp, s), c
        if kind == C_X:
            out = list(mexp)
            out[mu] += exp
            return (tuple(out), s), coeff
        m = mexp[mu]
        if m < exp:
            return None, None
        c = coeff
        for t in range(exp):
            c = c * Gauss(m - t)
        out = list(mexp)
        out[mu] = m - exp
        return (tuple(out), s), c


class QOscModel:
    family = "qosc"

    def __init__(self, nmodes, v0=None):
        self.nmodes = nmodes
        self.v0 = None if v0 is None else Fraction(v0)
        self.field = QQ if v0 is not None else QV
        self._qint_cache = {}

    def v_pow(self, k):
        if self.v0 is None:
            return RatFunc.v_power(k)
        return self.v0 ** k

    def q_int(self, m):
        """[m]_q = (q^m - 1)/(q - 1)."""
        hit = self._qint_cache.get(m)
        if hit is None:
            one = self.v_pow(0)
            hit = (self.v_pow(4 * m) - one) / (self.v_pow(4) - one)
            self._qint_cache[m] = hit
        return hit

    def states(self, degree):
        return _poly_states(self.nmodes, degree)

    def degree(self, state):
        return sum(state)

    def apply_letter(self, code, exp, state, coeff):
        mu = _mode(code) - 1
        kind = _kind(code)
        m = state[mu]
        if kind == Q_AP:
            out = list(state)
            out[mu] = m + exp
            return tuple(out), coeff
        if kind == Q_AM:
            if m < exp:
                return None, None
            c = coeff
            for t in range(exp):
                c = c * self.q_int(m - t)
            out = list(state)
            out[mu] = m - exp
            return tuple(out), c
        if kind == Q_AN:
            if m == 0:
                return None, None
            return state, coeff * (Fraction(m) ** exp if self.v0 is not None
                                   else RatFunc.from_fraction(m ** exp))
        # E^k, diagonal v^(2 m k)
        return state, coeff * self.v_pow(2 * m * exp)


def _poly_states(nmodes, degree):
    """Multi-indices with total degree <= degree, deterministic order."""
    def rec(prefix, remaining, modes_left):
        if modes_left == 1:
            for d in range(remaining + 1):
                yield prefix + (d,)
            return
        for d in range(remaining + 1):
            yield from rec(prefix + (d,), remaining - d, modes_left - 1)
    yield from rec((), degree, nmodes)


def model_for(alg):
    """Model matching an engine algebra instance."""
    if alg.family == "weyl":
        return WeylModel(alg.nmodes)
    if alg.family == "cliffdiff":
        return CliffDiffModel(alg.nmodes)
    return QOscModel(alg.nmodes, getattr(alg, "v0", None))


# ---------------------------------------------------------------------------
# Element action and the spec'd graded-matrix interface


def apply_word(model, word, state):
    """(state', coeff) image of one normal word, or (None, None)."""
    coeff = model.field.one
    for code, exp in reversed(word):
        state, coeff = model.apply_letter(code, exp, state, coeff)
        if state is None or not coeff:
            return None, None
    return state, coeff


def apply_element(model, terms, state):
    """Exact image dict of a {word: coeff} map on one basis state."""
    out = {}
    for word, c in terms.items():
        s2, cw = apply_word(model, word, state)
        if s2 is None:
            continue
        cc = c * cw
        acc = out.get(s2)
        s = cc if acc is None else acc + cc
        if s:
            out[s2] = s
        elif acc is not None:
            del out[s2]
    return out


class GradedBasis:
    """Enumerated model states up to a total degree bound."""

    def __init__(self, model, degree):
        self.model = model
        self.degree = degree
        self.states = list(model.states(degree))
        self.index = {s: i for i, s in enumerate(self.states)}

    def __len__(self):
        return len(self.states)


class ExactMatrix:
    """Sparse exact matrix of an element on a graded basis.

    Columns are basis states; rows hold the in-range part of each image;
    ``overflow`` lists the column indices whose image left the basis (those
    columns are exact only below the degree bound).
    """

    def __init__(self, basis, cols, overflow):
        self.basis = basis
        self.cols = cols
        self.overflow = overflow

    def column(self, j):
        return self.cols.get(j, {})

    def entry(self, i, j):
        return self.cols.get(j, {}).get(i, self.basis.model.field.zero)

    def matmul(self, other):
        if other.basis is not self.basis:
            raise OracleError("basis mismatch in matrix product")
        cols = {}
        overflow = set(other.overflow)
        for j, col in other.cols.items():
            acc = {}
            for i, c in col.items():
                if i in self.overflow:
                    overflow.add(j)
                for i2, c2 in self.cols.get(i, {}).items():
                    cc = c * c2
                    prev = acc.get(i2)
                    s = cc if prev is None else prev + cc
                    if s:
                        acc[i2] = s
                    elif prev is not None:
                        del acc[i2]
            if acc:
                cols[j] = acc
        return ExactMatrix(self.basis, cols, overflow)

    def equal_on_valid_columns(self, other):
        bad = self.overflow | other.overflow
        for j in range(len(self.basis)):
            if j in bad:
                continue
            if self.cols.get(j, {}) != other.cols.get(j, {}):
                return False
        return True


def matrix_of(element, basis):
    """Exact matrix of a normalized Element on the graded basis.

    Margin rule: the basis degree must be at least the element's total
    annihilation degree plus 2, so that a nonzero element is guaranteed a
    nonzero in-range witness column.
    """
    need = element.ann_degree() + 2
    if basis.degree < need:
        raise OracleError("margin rule violated: need basis degree >= %d, "
                          "got %d" % (need, basis.degree))
    model = basis.model
    cols = {}
    overflow = set()
    for j, s in enumerate(basis.states):
        img = apply_element(model, element.terms, s)
        col = {}
        for s2, c in img.items():
            i = basis.index.get(s2)
            if i is None:
                overflow.add(j)
            else:
                col[i] = c
        if col:
            cols[j] = col
    return ExactMatrix(basis, cols, overflow)


def oracle_is_zero(element, basis):
    """Exact zero test via the model action (margin rule enforced).

    Images are computed without truncation, so the verdict agrees with the
    engine's normal-form test whenever the margin precondition holds.
    """
    need = element.ann_degree() + 2
    if basis.degree < need:
        raise OracleError("margin rule violated: need basis degree >= %d, "
                          "got %d" % (need, basis.degree))
    model = basis.model
    for s in basis.states:
        if apply_element(model, element.terms, s):
            return False
    return True


# ---------------------------------------------------------------------------
# Lazy operator representations (the independent evaluation route for suites)


class MatRep:
    """Lazy exact operator on a family model; supports ring arithmetic.

    ``ann_bound`` is a structural upper bound for the total annihilation
    degree of the represented element (atoms carry the true degree, sums take
    the max, products add), used to pick witness domains.
    """

    __slots__ = ("model", "_fn", "_cache", "ann_bound")

    def __init__(self, model, fn, ann_bound):
        self.model = model
        self._fn = fn
        self._cache = {}
        self.ann_bound = ann_bound

    @staticmethod
    def from_element(model, element):
        terms = dict(element.terms)
        return MatRep(model, lambda s, t=terms, m=model: apply_element(m, t, s),
                      element.ann_degree())

    @staticmethod
    def zero(model):
        return MatRep(model, lambda s: {}, 0)

    def apply(self, state):
        hit = self._cache.get(state)
        if hit is None:
            hit = self._fn(state)
            self._cache[state] = hit
        return hit

    # -- combinators -------------------------------------------------------------

    def _scalar(self, other):
        try:
            return self.model.field.coerce(other)
        except TypeError:
            return None

    def __add__(self, other):
        if isinstance(other, MatRep):
            def fn(s, a=self, b=other):
                out = dict(a.apply(s))
                for k, c in b.apply(s).items():
                    prev = out.get(k)
                    v = c if prev is None else prev + c
                    if v:
                        out[k] = v
                    elif prev is not None:
                        del out[k]
                return out
            return MatRep(self.model, fn, max(self.ann_bound, other.ann_bound))
        c = self._scalar(other)
        if c is None:
            return NotImplemented
        return self + MatRep(self.model,
                             lambda s, cc=c: {s: cc} if cc else {},
                             0)

    __radd__ = __add__

    def __neg__(self):
        return MatRep(self.model,
                      lambda s, a=self: {k: -c for k, c in a.apply(s).items()},
                      self.ann_bound)

    def __sub__(self, other):
        if isinstance(other, MatRep):
            return self + (-other)
        c = self._scalar(other)
        if c is None:
            return NotImplemented
        return self + (-c)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, MatRep):
            def fn(s, a=self, b=other):
                out = {}
                for k, c in b.apply(s).items():
                    for k2, c2 in a.apply(k).items():
                        cc = c * c2
                        prev = out.get(k2)
                        v = cc if prev is None else prev + cc
                        if v:
                            out[k2] = v
                        elif prev is not None:
                            del out[k2]
                return out
            return MatRep(self.model, fn, self.ann_bound + other.ann_bound)
        c = self._scalar(other)
        if c is None:
            return NotImplemented
        if not c:
            return MatRep.zero(self.model)
        return MatRep(self.model,
                      lambda s, a=self, cc=c: {k: v * cc for k, v in a.apply(s).items()},
                      self.ann_bound)

    def __rmul__(self, other):
        c = self._scalar(other)
        if c is None:
            return NotImplemented
        return self * c

    def __truediv__(self, other):
        c = self._scalar(other)
        if c is None:
            return NotImplemented
        return self * self.model.field.inv(c)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = MatRep(self.model, lambda s: {s: self.model.field.one}, 0)
        for _ in range(k):
            out = out * self
        return out

    def is_zero_on(self, states):
        return all(not self.apply(s) for s in states)


# ---------------------------------------------------------------------------
# Oracle backends for the realization builders


class _OracleBackendBase:
    exact_zero = False

    def __init__(self, model):
        self.model = model
        self.nmodes = model.nmodes
        self.family = model.family
        self._atom_cache = {}

    def gen(self, kind, mode, exp=1):
        key = (kind, mode, exp)
        rep = self._atom_cache.get(key)
        if rep is None:
            word = (((mode << 2) | kind, exp),)
            low_kinds = {"weyl": W_ANN, "cliffdiff": C_DER, "qosc": Q_AM}
            ann = exp if kind == low_kinds[self.family] else 0
            rep = MatRep(self.model,
                         lambda s, w=word, m=self.model: _single_word_image(m, w, s),
                         ann)
            self._atom_cache[key] = rep
        return rep

    def one(self):
        return MatRep(self.model, lambda s: {s: self.model.field.one}, 0)


def _single_word_image(model, word, state):
    s2, c = apply_word(model, word, state)
    return {} if s2 is None else {s2: c}


class OracleWeylBackend(_OracleBackendBase):
    def __init__(self, nmodes):
        super().__init__(WeylModel(nmodes))


class OracleCliffDiffBackend(_OracleBackendBase):
    def __init__(self, nmodes):
        super().__init__(CliffDiffModel(nmodes))


class OracleQOscBackend(_OracleBackendBase):
    def __init__(self, nmodes, v0=None):
        super().__init__(QOscModel(nmodes, v0))

    def v_pow(self, k):
        return self.model.v_pow(k)


def witness_states(model, bound, rng=None, sample=0, high=None):
    """Deterministic low-degree states plus an optional seeded high sample."""
    states = list(model.states(bound))
    if sample and rng is not None:
        high = high if high is not None else bound + 4
        seen = set(states)
        tries = 0
        while sample > 0 and tries < 50 * sample:
            tries += 1
            s = tuple(rng.randint(0, high) for _ in range(model.nmodes))
            if model.family == "cliffdiff":
                s = (s, rng.randrange(model.spin_dim))
            if s in seen:
                continue
            seen.add(s)
            states.append(s)
            sample -= 1
    return states
