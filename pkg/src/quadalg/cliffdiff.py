"""Spinorial realization over Gaussian rationals: Clifford generators tensored
with polynomial differential operators, osp(1|2) copies, their Casimirs, and
the Bannai-Ito commutant generators.

The letter L_uv inside the M_i and Gamma_123 formulas is read as the orbital
rotation -i(x_u d_v - x_v d_u); the alternative (full J_uv including the spin
part) is selectable so the suites can determine the right reading empirically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import (C_DER, C_GAM, C_X, AlgebraError, RealizationError,
                     anticommutator, cliffdiff_algebra, commutator)
from .fields import Gauss

I = Gauss(0, 1)
HALF = Gauss("1/2")


@dataclass
class OspRealization:
    """An osp(1|2) copy on an even index subset A, with grade involution s."""

    j0: object
    jplus: object
    jminus: object
    s: object
    modes: tuple

    def casimir(self):
        """C = 1/2 ([J-, J+] - 1) S."""
        return (commutator(self.jminus, self.jplus) - 1) * self.s * HALF


class CliffDiffContext:
    """Dirac operators in N (even) dimensions over the Gaussian rationals."""

    def __init__(self, nmodes=6, backend=None, check=None):
        if nmodes < 2 or nmodes % 2:
            raise AlgebraError("dimension must be even and >= 2, got %d" % nmodes)
        self.nmodes = nmodes
        self.backend = backend if backend is not None else cliffdiff_algebra(nmodes)
        self.check = check if check is not None else getattr(
            self.backend, "exact_zero", True)

    # -- generators ---------------------------------------------------------------

    def x(self, mu):
        return self.backend.gen(C_X, mu)

    def d(self, mu):
        return self.backend.gen(C_DER, mu)

    def g(self, mu):
        return self.backend.gen(C_GAM, mu)

    def one(self):
        return self.backend.one()

    # -- rotation generators --------------------------------------------------------

    def sigma(self, mu, nu):
        """Spin part Sigma_uv = (i/2) g_u g_v."""
        if mu == nu:
            raise AlgebraError("sigma requires two distinct modes")
        return (self.g(mu) * self.g(nu)) * (I * HALF)

    def L_orb(self, mu, nu):
        """Orbital rotation -i(x_u d_v - x_v d_u)."""
        if mu == nu:
            raise AlgebraError("L_orb requires two distinct modes")
        return (self.x(mu) * self.d(nu) - self.x(nu) * self.d(mu)) * (-I)

    def J_rot(self, mu, nu):
        """Total rotation J_uv = -i(x_u d_v - x_v d_u) + Sigma_uv."""
        return self.L_orb(mu, nu) + self.sigma(mu, nu)

    # -- osp(1|2) ----------------------------------------------------------------------

    def osp(self, modes):
        """J-_A = -i sum g_u d_u, J+_A = -i sum g_u x_u,
        J0_A = |A|/2 + sum x_u d_u, S_A = i^(|A|/2) prod g_u (|A| even)."""
        modes = tuple(sorted(modes))
        if not modes or len(modes) % 2:
            raise AlgebraError("osp needs a nonempty even-size subset, got %s"
                               % (modes,))
        jm = jp = j0 = None
        for mu in modes:
            tm = self.g(mu) * self.d(mu)
            tp = self.g(mu) * self.x(mu)
            t0 = self.x(mu) * self.d(mu)
            jm = tm if jm is None else jm + tm
            jp = tp if jp is None else jp + tp
            j0 = t0 if j0 is None else j0 + t0
        jm = jm * (-I)
        jp = jp * (-I)
        j0 = j0 + self.one() * Gauss(len(modes)) * HALF
        s = self.one()
        for mu in modes:
            s = s * self.g(mu)
        s = s * I ** (len(modes) // 2)
        real = OspRealization(j0, jp, jm, s, modes)
        if self.check:
            for rel, msg in (
                    (commutator(j0, jp) - jp, "[J0,J+] != +J+"),
                    (commutator(j0, jm) + jm, "[J0,J-] != -J-"),
                    (s * s - 1, "S^2 != 1"),
                    (commutator(s, j0), "[S,J0] != 0"),
                    (anticommutator(s, jp), "{S,J+} != 0"),
                    (anticommutator(s, jm), "{S,J-} != 0")):
                if not rel.is_zero():
                    raise RealizationError("osp %s on modes %s" % (msg, modes))
        return real

    def osp_casimir(self, modes):
        return self.osp(modes).casimir()

    # -- Bannai-Ito generators ------------------------------------------------------------

    _BI_SETS = {1: (1, 2, 3, 4), 2: (3, 4, 5, 6), 3: (1, 2, 5, 6)}
    _BI_SIGMAS = {1: ((1, 2), (3, 4)), 2: ((3, 4), (5, 6)), 3: ((1, 2), (5, 6))}

    def _rot(self, mu, nu, convention):
        if convention == "orbital":
            return self.L_orb(mu, nu)
        if convention == "total":
            return self.J_rot(mu, nu)
        raise AlgebraError("unknown rotation convention %r" % (convention,))

    def M_BI(self, i, convention="orbital"):
        """M_i = (sum_{u<v in A_i} L_uv g_u g_v) Sigma Sigma' over the two
        planes attached to i."""
        self._check_bi(i)
        modes = self._BI_SETS[i]
        total = None
        for a, mu in enumerate(modes):
            for nu in modes[a + 1:]:
                t = self._rot(mu, nu, convention) * self.g(mu) * self.g(nu)
                total = t if total is None else total + t
        (p1, p2), (p3, p4) = self._BI_SIGMAS[i]
        return total * self.sigma(p1, p2) * self.sigma(p3, p4)

    def K_BI(self, i, convention="orbital"):
        """K_i = M_i + 3/2 Sigma Sigma'."""
        self._check_bi(i)
        (p1, p2), (p3, p4) = self._BI_SIGMAS[i]
        return self.M_BI(i, convention) + (
            self.sigma(p1, p2) * self.sigma(p3, p4)) * Gauss("3/2")

    def Gamma(self, i):
        """Gamma_1 = J_12, Gamma_2 = J_34, Gamma_3 = J_56 (full rotations)."""
        self._check_bi(i)
        mu, nu = {1: (1, 2), 2: (3, 4), 3: (5, 6)}[i]
        return self.J_rot(mu, nu)

    def Gamma123(self, convention="orbital"):
        """(5/2 - i sum_{u<v} L_uv Sigma_uv) Sigma_12 Sigma_34 Sigma_56."""
        if self.nmodes != 6:
            raise AlgebraError("Gamma123 needs N = 6")
        total = None
        for mu in range(1, 7):
            for nu in range(mu + 1, 7):
                t = self._rot(mu, nu, convention) * self.sigma(mu, nu)
                total = t if total is None else total + t
        head = self.one() * Gauss("5/2") - total * I
        return head * self.sigma(1, 2) * self.sigma(3, 4) * self.sigma(5, 6)

    def omega(self, k, convention="orbital"):
        """omega_k = 2 Gamma_k Gamma_123 + 2 Gamma_i Gamma_j with {i,j,k} = {1,2,3}."""
        self._check_bi(k)
        i, j = {1: (2, 3), 2: (3, 1), 3: (1, 2)}[k]
        return (self.Gamma(k) * self.Gamma123(convention)) * 2 + (
            self.Gamma(i) * self.Gamma(j)) * 2

    def _check_bi(self, i):
        if self.nmodes != 6:
            raise AlgebraError("Bannai-Ito generators need N = 6")
        if i not in (1, 2, 3):
            raise AlgebraError("index must be 1, 2 or 3, got %r" % (i,))

    # -- validated Bannai-Ito reading ------------------------------------------------
    #
    # The displayed K_i / Gamma_123 formulas close exactly once the gamma
    # bilinears attached to the planes are normalized as involutions
    # S_p = i g_a g_b (S_p^2 = 1) and the rotation letter is the full J_uv;
    # equivalently  K_i = (sum_{u<v in A_i} J_uv S_uv - 3/2) S_p S_q.
    # Under this reading K_i equals the intermediate osp(1|2) Casimir C^{A_i}
    # and Gamma_123 equals the total Casimir C^{(1..6)}. The three planes'
    # J_12, J_34, J_56 coincide with the two-mode Casimirs C^{(plane)}.

    _PLANES = {1: (1, 2), 2: (3, 4), 3: (5, 6)}
    _BI_PLANE_PAIRS = {1: (1, 2), 2: (2, 3), 3: (1, 3)}  # K_i -> plane labels
    _BI_SHARED_PLANE = {1: 3, 2: 1, 3: 2}  # relation index k -> plane shared by K_i, K_j

    def plane_involution(self, p):
        """S_p = i g_a g_b for plane p; squares to one."""
        a, b = self._PLANES[p]
        return (self.g(a) * self.g(b)) * I

    def pair_involution(self, mu, nu):
        """S_uv = i g_u g_v for an arbitrary index pair."""
        if mu == nu:
            raise AlgebraError("involution requires two distinct modes")
        return (self.g(mu) * self.g(nu)) * I

    def K_BI_validated(self, i):
        """K_i in the empirically validated normalization (= C^{A_i})."""
        self._check_bi(i)
        modes = self._BI_SETS[i]
        total = None
        for a, mu in enumerate(modes):
            for nu in modes[a + 1:]:
                t = self.J_rot(mu, nu) * self.pair_involution(mu, nu)
                total = t if total is None else total + t
        total = total - self.one() * Gauss("3/2")
        p, q = self._BI_PLANE_PAIRS[i]
        return total * self.plane_involution(p) * self.plane_involution(q)

    def Gamma123_validated(self):
        """Gamma_123 in the validated normalization (= C^{(1..6)})."""
        if self.nmodes != 6:
            raise AlgebraError("Gamma123 needs N = 6")
        total = None
        for mu in range(1, 7):
            for nu in range(mu + 1, 7):
                t = self.J_rot(mu, nu) * self.pair_involution(mu, nu)
                total = t if total is None else total + t
        total = total - self.one() * Gauss(5)
        return (total * self.plane_involution(1) * self.plane_involution(2)
                * self.plane_involution(3))

    def omega_validated(self, k, gamma123=None):
        """omega_k = 2 Gamma_s Gamma_123 + 2 Gamma_a Gamma_b, with s the plane
        shared by the two anticommuted K's and (a, b) the planes of K_k."""
        self._check_bi(k)
        if gamma123 is None:
            gamma123 = self.Gamma123_validated()
        s = self._BI_SHARED_PLANE[k]
        a, b = self._BI_PLANE_PAIRS[k]
        return (self.Gamma(s) * gamma123) * 2 + (self.Gamma(a) * self.Gamma(b)) * 2
