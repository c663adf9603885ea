"""q-oscillator realization of U_q(su(1,1)) and o_{q^(1/2)}(2n): coproduct
metaplectic generators, intermediate Casimir elements, the deformed rotation
generators L_{i,i+1}, and the q-Hahn pair.

Scalars are rational functions in v (q = v**4), or exact rationals when the
context is specialized at a nonzero rational v0 with v0**4 != 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import (Q_AM, Q_AN, Q_AP, Q_EE, AlgebraError, RealizationError,
                     commutator, q_commutator, qosc_algebra)


@dataclass
class QSu11Realization:
    """Coproduct-embedded U_q(su(1,1)) on a contiguous mode range [lo..hi]."""

    j0: object
    jplus: object
    jminus: object
    q2j0: object
    q2j0_inv: object
    lo: int
    hi: int


class QOscContext:
    """2n independent q-oscillators (nmodes even, >= 4)."""

    def __init__(self, nmodes=6, backend=None, check=None):
        if nmodes < 4 or nmodes % 2:
            raise AlgebraError("mode count must be even and >= 4, got %d" % nmodes)
        self.nmodes = nmodes
        self.backend = backend if backend is not None else qosc_algebra(nmodes)
        self.check = check if check is not None else getattr(
            self.backend, "exact_zero", True)

    # -- generators and scalars ---------------------------------------------------

    def ap(self, i):
        return self.backend.gen(Q_AP, i)

    def am(self, i):
        return self.backend.gen(Q_AM, i)

    def a0(self, i):
        return self.backend.gen(Q_AN, i)

    def e(self, i, k=1):
        """E_i**k with E_i = q^(A_i^0 / 2); k may be negative."""
        return self.backend.gen(Q_EE, i, k)

    def one(self):
        return self.backend.one()

    def v_pow(self, k):
        """Scalar v**k = q**(k/4)."""
        return self.backend.v_pow(k)

    @property
    def q(self):
        return self.v_pow(4)

    def q_int(self, n):
        """The q-number [n]_q = (q^n - 1)/(q - 1) as a scalar."""
        one = self.v_pow(0)
        return (self.v_pow(4 * n) - one) / (self.q - one)

    # -- U_q(su(1,1)) metaplectic coproduct realization -----------------------------

    def q_su11(self, lo, hi):
        """Summed q-metaplectic realization on the contiguous range [lo..hi].

        J0 = 1/2 sum (A_i^0 + 1/2);  J+- = (1/[2]_{q^(1/2)}) sum (A_i^+-)^2
        prod_{j>i} q^(A_j^0 + 1/2);  q^(2 J0) group-like.
        """
        if not (1 <= lo <= hi <= self.nmodes):
            raise AlgebraError("range [%d..%d] out of 1..%d bounds"
                               % (lo, hi, self.nmodes))
        m = hi - lo + 1
        half = self.v_pow(0) / 2
        j0 = None
        for i in range(lo, hi + 1):
            t = self.a0(i) * half + self.one() * (half / 2)
            j0 = t if j0 is None else j0 + t
        inv_two = self.v_pow(0) / (self.v_pow(2) + self.v_pow(-2))
        jp = jm = None
        for i in range(lo, hi + 1):
            # tail prod_{j>i} q^(A_j^0 + 1/2) = q^((hi-i)/2) * prod E_j^2
            tail = self.one() * self.v_pow(2 * (hi - i))
            for j in range(i + 1, hi + 1):
                tail = tail * self.e(j, 2)
            tp = (self.ap(i) * self.ap(i)) * tail
            tm = (self.am(i) * self.am(i)) * tail
            jp = tp if jp is None else jp + tp
            jm = tm if jm is None else jm + tm
        jp = jp * inv_two
        jm = jm * inv_two
        q2j0 = self.one() * self.v_pow(2 * m)
        q2j0_inv = self.one() * self.v_pow(-2 * m)
        for i in range(lo, hi + 1):
            q2j0 = q2j0 * self.e(i, 2)
            q2j0_inv = q2j0_inv * self.e(i, -2)
        real = QSu11Realization(j0, jp, jm, q2j0, q2j0_inv, lo, hi)
        if self.check:
            self._verify_q_su11(real)
        return real

    def _verify_q_su11(self, real):
        lohi = (real.lo, real.hi)
        if not (real.q2j0 * real.q2j0_inv - 1).is_zero():
            raise RealizationError("q2j0 not invertible on %s" % (lohi,))
        if not (commutator(real.j0, real.jplus) - real.jplus).is_zero():
            raise RealizationError("[J0,J+] != +J+ on %s" % (lohi,))
        if not (commutator(real.j0, real.jminus) + real.jminus).is_zero():
            raise RealizationError("[J0,J-] != -J- on %s" % (lohi,))
        one = self.v_pow(0)
        rhs = (real.q2j0 * real.q2j0 - 1) * (one / (self.q - self.v_pow(-4)))
        lhs = real.jminus * real.jplus - (real.jplus * real.jminus) * self.q ** 2
        if not (lhs - rhs).is_zero():
            raise RealizationError("U_q ladder relation fails on %s" % (lohi,))

    def q_casimir(self, lo, hi):
        """C = J+ J- q^(-2J0+1) - q/(1-q^2)^2 (q^(2J0-1) + q^(-2J0+1))
        + (1+q^2)/(1-q^2)^2, on the contiguous range [lo..hi]."""
        real = self.q_su11(lo, hi)
        return self.q_casimir_of(real)

    def q_casimir_of(self, real):
        q = self.q
        one = self.v_pow(0)
        denom = (one - q * q) ** 2
        t1 = real.jplus * real.jminus * (real.q2j0_inv * q)
        t2 = (real.q2j0 * (one / q) + real.q2j0_inv * q) * (q / denom)
        t3 = self.one() * ((one + q * q) / denom)
        return t1 - t2 + t3

    # -- o_{q^(1/2)}(2n) ------------------------------------------------------------------

    def qL(self, i):
        """L_{i,i+1} = q^(-(A_i^0 + 1/2)/2) (q^(1/4) A_i^+ A_{i+1}^-
        - q^(-1/4) A_i^- A_{i+1}^+)."""
        if not 1 <= i <= self.nmodes - 1:
            raise AlgebraError("L index %d out of 1..%d" % (i, self.nmodes - 1))
        # prefactor q^(-1/4) E_i^{-1}; the explicit q^(+-1/4) fold into v powers
        return (self.e(i, -1) * self.ap(i) * self.am(i + 1)
                - (self.e(i, -1) * self.am(i) * self.ap(i + 1)) * self.v_pow(-2))

    def extended_L(self, i, k, sign=1, chain=None):
        """L_ik^+- via nested q^(+-1/4)-brackets [L_ij, L_jk]_{q^(+-1/4)};
        the chain index j defaults to k-1."""
        if not (1 <= i < k <= self.nmodes) :
            raise AlgebraError("need 1 <= i < k <= %d" % self.nmodes)
        if sign not in (1, -1):
            raise AlgebraError("sign must be +1 or -1")
        if k == i + 1:
            return self.qL(i)
        j = k - 1 if chain is None else chain
        if not i < j < k:
            raise AlgebraError("chain index %d not strictly between %d and %d"
                               % (j, i, k))
        lam = self.v_pow(sign)
        return q_commutator(self.extended_L(i, j, sign),
                            self.extended_L(j, k, sign), lam)

    # -- q-Hahn pair -------------------------------------------------------------------------

    def qhahn_pair(self):
        """M1 = J0^(1..2) - J0^(3..4), M2 = C^(1..4); needs 2n = 4."""
        if self.nmodes != 4:
            raise AlgebraError("q-Hahn pair needs 2n = 4")
        j0a = self.q_su11(1, 2).j0
        j0b = self.q_su11(3, 4).j0
        return j0a - j0b, self.q_casimir(1, 4)
