"""Sparse exact linear solving over the scalar fields, in the monomial
coordinates of normalized Elements, plus the central-combination fitter used
by the Askey-Wilson closure discovery.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .engine import AlgebraError, commutator


def solve_combination(target, candidates):
    """Exact coefficients c_j with target = sum c_j * candidates[j].

    Returns (coeffs, residual_terms): coeffs is None when no solution exists,
    in which case residual_terms counts the monomials of the irreducible part.
    Free coordinates (linearly dependent candidates) are set to zero.
    """
    if not candidates:
        return ([], target.n_terms) if not target.is_zero() else ([], 0)
    alg = candidates[0].alg
    fld = alg.field
    zero, one = fld.zero, fld.one
    ncols = len(candidates)
    rows = {}

    def row(w):
        r = rows.get(w)
        if r is None:
            r = rows[w] = [zero] * (ncols + 1)
        return r

    for j, cand in enumerate(candidates):
        if cand.alg is not alg:
            raise AlgebraError("candidates from mixed algebras")
        for w, c in cand.terms.items():
            row(w)[j] = c
    if target.alg is not alg:
        raise AlgebraError("target from a different algebra")
    for w, c in target.terms.items():
        row(w)[ncols] = c

    rowlist = list(rows.values())
    piv_of_col = [None] * ncols
    used = set()
    for col in range(ncols):
        piv = None
        for ri, vec in enumerate(rowlist):
            if ri not in used and vec[col]:
                piv = ri
                break
        if piv is None:
            continue
        used.add(piv)
        piv_of_col[col] = piv
        pv = rowlist[piv]
        inv = fld.inv(pv[col])
        for k in range(col, ncols + 1):
            if pv[k]:
                pv[k] = pv[k] * inv
        for ri, vec in enumerate(rowlist):
            if ri == piv or not vec[col]:
                continue
            f = vec[col]
            for k in range(col, ncols + 1):
                if pv[k]:
                    vec[k] = vec[k] - f * pv[k]

    coeffs = [zero] * ncols
    for col, piv in enumerate(piv_of_col):
        if piv is not None:
            coeffs[col] = rowlist[piv][ncols]
    # rows with a nonzero target entry but no candidate support are the residual
    bad = 0
    for ri, vec in enumerate(rowlist):
        if ri in used:
            continue
        if vec[ncols] and not any(vec[k] for k in range(ncols)):
            bad += 1
    if bad:
        return None, bad
    # dependent-candidate rows were fully eliminated; verify exactly anyway
    rebuilt = None
    for c, cand in zip(coeffs, candidates):
        if not c:
            continue
        t = cand * c
        rebuilt = t if rebuilt is None else rebuilt + t
    if rebuilt is None:
        rebuilt = alg.zero()
    resid = target - rebuilt
    if resid.is_zero():
        return coeffs, 0
    return None, resid.n_terms


@dataclass
class FitResult:
    """Outcome of fit_central_combination."""

    success: bool
    # {basis index: {central exponent tuple: coeff}}
    coefficients: dict = field(default_factory=dict)
    residual_terms: int = 0

    def describe(self, basis_names, central_names, to_str):
        lines = []
        for bi in sorted(self.coefficients):
            for expo, c in sorted(self.coefficients[bi].items()):
                factors = ["%s%s" % (central_names[g], "" if e == 1 else "^%d" % e)
                           for g, e in enumerate(expo) if e]
                mono = "*".join(factors) if factors else "1"
                lines.append("(%s) * %s * %s" % (to_str(c), mono, basis_names[bi]))
        return " + ".join(lines) if lines else "0"


def central_monomials(ngens, degree_cap):
    """Exponent tuples of total degree <= degree_cap over ngens generators."""
    out = [tuple([0] * ngens)]
    for deg in range(1, degree_cap + 1):
        for combo in combinations_with_replacement(range(ngens), deg):
            expo = [0] * ngens
            for g in combo:
                expo[g] += 1
            out.append(tuple(expo))
    return out


def fit_central_combination(target, basis, central_gens, degree_cap=2,
                            precheck=True):
    """Express target as sum over basis X of c_X * X with c_X polynomials of
    degree <= degree_cap in the central generators.

    The central generators are checked to commute pairwise and with every
    basis element.  Returns a FitResult; on success the rebuilt combination
    matches the target exactly.
    """
    if not basis:
        raise AlgebraError("fit needs a nonempty basis")
    alg = basis[0].alg
    if precheck:
        for a_i, a in enumerate(central_gens):
            for b in central_gens[a_i + 1:]:
                if not commutator(a, b).is_zero():
                    raise AlgebraError("central generators %d and more do not "
                                       "commute" % a_i)
            for b_i, b in enumerate(basis):
                if not commutator(a, b).is_zero():
                    raise AlgebraError("central generator %d does not commute "
                                       "with basis element %d" % (a_i, b_i))
    monos = central_monomials(len(central_gens), degree_cap)
    mono_elems = []
    for expo in monos:
        e = alg.one()
        for g, k in enumerate(expo):
            for _ in range(k):
                e = e * central_gens[g]
        mono_elems.append(e)
    candidates = []
    keys = []
    for bi, b in enumerate(basis):
        for expo, ze in zip(monos, mono_elems):
            candidates.append(ze * b)
            keys.append((bi, expo))
    coeffs, residual = solve_combination(target, candidates)
    if coeffs is None:
        return FitResult(False, {}, residual)
    out = {}
    for (bi, expo), c in zip(keys, coeffs):
        if c:
            out.setdefault(bi, {})[expo] = c
    return FitResult(True, out, 0)


def rebuild_fit(fit, basis, central_gens):
    """Element for a successful FitResult (for re-verification from scratch)."""
    alg = basis[0].alg
    total = alg.zero()
    for bi, polys in fit.coefficients.items():
        for expo, c in polys.items():
            e = alg.one()
            for g, k in enumerate(expo):
                for _ in range(k):
                    e = e * central_gens[g]
            total = total + (e * basis[bi]) * c
    return total
