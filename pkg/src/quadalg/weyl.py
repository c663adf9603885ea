"""Builders for the 2n-oscillator realization: rotation generators L_uv,
the metaplectic su(1,1) copies, and their Casimir elements.

All builders are written against a backend exposing ``gen(kind, mode)`` and
``one()`` whose values support ring arithmetic, so the same formulas produce
either symbolic Elements (engine backend) or exact operators on a graded
basis (oracle backend).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .engine import (W_ANN, W_CRE, AlgebraError, RealizationError, commutator,
                     weyl_algebra)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


@dataclass
class Su11Realization:
    """A metaplectic su(1,1) copy summed over a set of oscillator modes."""

    j0: object
    jplus: object
    jminus: object
    modes: tuple

    def casimir(self):
        return self.j0 * self.j0 - self.jplus * self.jminus - self.j0


class WeylContext:
    """2n harmonic oscillators; mode count must be even and >= 4."""

    def __init__(self, nmodes=6, backend=None, check=None):
        if nmodes < 4 or nmodes % 2:
            raise AlgebraError("mode count must be even and >= 4, got %d" % nmodes)
        self.nmodes = nmodes
        self.backend = backend if backend is not None else weyl_algebra(nmodes)
        # relation verification needs an exact zero test; oracle backends opt out
        self.check = check if check is not None else getattr(
            self.backend, "exact_zero", True)

    # -- generators -------------------------------------------------------------

    def a(self, mu):
        return self.backend.gen(W_ANN, mu)

    def ad(self, mu):
        return self.backend.gen(W_CRE, mu)

    def one(self):
        return self.backend.one()

    def number_op(self, mu):
        return self.ad(mu) * self.a(mu)

    def hamiltonian(self):
        """H = sum a+_u a_u (no zero-point constant)."""
        out = self.number_op(1)
        for mu in range(2, self.nmodes + 1):
            out = out + self.number_op(mu)
        return out

    # -- rotation generators ------------------------------------------------------

    def L(self, mu, nu):
        """L_uv = a+_u a_v - a_u a+_v; antisymmetric, modes must differ."""
        if mu == nu:
            raise AlgebraError("L requires two distinct modes")
        self._check_mode(mu)
        self._check_mode(nu)
        return self.ad(mu) * self.a(nu) - self.a(mu) * self.ad(nu)

    def so_casimir(self, modes=None):
        """Sum of L_uv**2 over mode pairs u < v of the given subset."""
        modes = tuple(modes) if modes is not None else tuple(
            range(1, self.nmodes + 1))
        out = None
        for i, mu in enumerate(modes):
            for nu in modes[i + 1:]:
                L = self.L(mu, nu)
                sq = L * L
                out = sq if out is None else out + sq
        if out is None:
            raise AlgebraError("need at least two modes")
        return out

    def casimir_o6(self):
        """The o(6) Casimir; requires the 6-mode context."""
        if self.nmodes != 6:
            raise AlgebraError("o(6) Casimir needs 2n = 6, context has %d"
                               % self.nmodes)
        return self.so_casimir()

    # -- su(1,1) ---------------------------------------------------------------------

    def su11(self, modes):
        """Summed metaplectic realization over a nonempty mode subset.

        J0 = sum 1/2 (a+ a + 1/2), J+ = sum 1/2 (a+)^2, J- = sum 1/2 a^2;
        the defining relations are verified on construction.
        """
        modes = tuple(modes)
        if not modes:
            raise AlgebraError("su11 needs a nonempty mode subset")
        for mu in modes:
            self._check_mode(mu)
        j0 = jp = jm = None
        for mu in modes:
            t0 = self.number_op(mu) * HALF + self.one() * QUARTER
            tp = (self.ad(mu) * self.ad(mu)) * HALF
            tm = (self.a(mu) * self.a(mu)) * HALF
            j0 = t0 if j0 is None else j0 + t0
            jp = tp if jp is None else jp + tp
            jm = tm if jm is None else jm + tm
        real = Su11Realization(j0, jp, jm, modes)
        if self.check:
            if not (commutator(j0, jp) - jp).is_zero():
                raise RealizationError("su11 [J0,J+] != +J+ on modes %s" % (modes,))
            if not (commutator(j0, jm) + jm).is_zero():
                raise RealizationError("su11 [J0,J-] != -J- on modes %s" % (modes,))
            if not (commutator(jp, jm) + 2 * j0).is_zero():
                raise RealizationError("su11 [J+,J-] != -2J0 on modes %s" % (modes,))
        return real

    def su11_casimir(self, modes):
        """C = J0^2 - J+J- - J0 for the summed realization on the subset."""
        return self.su11(modes).casimir()

    # -- misc -------------------------------------------------------------------------

    def _check_mode(self, mu):
        if not 1 <= mu <= self.nmodes:
            raise AlgebraError("mode %d out of range 1..%d" % (mu, self.nmodes))


def racah_generators(ctx):
    """The commutant pair K1, K2 (and K3 := [K1, K2]) of the three rotation
    planes, each 1/8 of a sum of six squared L's."""
    if ctx.nmodes != 6:
        raise AlgebraError("Racah generators need 2n = 6")
    eighth = Fraction(1, 8)
    k1 = ctx.so_casimir((1, 2, 3, 4)) * eighth
    k2 = ctx.so_casimir((3, 4, 5, 6)) * eighth
    k3 = commutator(k1, k2)
    return k1, k2, k3


def racah_central(ctx):
    """The central parameters d, e1, e2 of the Racah presentation, built from
    the o(6) Casimir and the squared plane rotations."""
    cas = ctx.casimir_o6()
    l12sq = ctx.L(1, 2) ** 2
    l34sq = ctx.L(3, 4) ** 2
    l56sq = ctx.L(5, 6) ** 2
    d = (cas + l12sq + l34sq + l56sq) * Fraction(-1, 8)
    e1 = ((cas - l12sq - 4 * ctx.one()) * (l34sq - l56sq)) * Fraction(-1, 64)
    e2 = ((cas - l56sq - 4 * ctx.one()) * (l34sq - l12sq)) * Fraction(-1, 64)
    return d, e1, e2


def hahn_generators(ctx):
    """Hahn pair for the 4-oscillator Clebsch-Gordan setting:
    M1 = (N1+N2-N3-N4)/2, M2 = -1/4 sum L_uv^2 over 1<=u<v<=4, M3 = [M1, M2]."""
    if ctx.nmodes != 4:
        raise AlgebraError("Hahn generators need 2n = 4")
    m1 = (ctx.number_op(1) + ctx.number_op(2)
          - ctx.number_op(3) - ctx.number_op(4)) * HALF
    m2 = ctx.so_casimir((1, 2, 3, 4)) * Fraction(-1, 4)
    m3 = commutator(m1, m2)
    return m1, m2, m3


def hahn_central(ctx):
    """delta1, delta2 in oscillator form for the Hahn presentation."""
    n = ctx.hamiltonian() + 2 * ctx.one()
    l12sq = ctx.L(1, 2) ** 2
    l34sq = ctx.L(3, 4) ** 2
    delta1 = (n * (l12sq - l34sq)) * Fraction(-1, 2)
    delta2 = (n * n) * HALF - (l12sq + l34sq + 2 * ctx.one())
    return delta1, delta2
