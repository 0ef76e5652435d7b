"""Closed-form and quotient-form spectra for structured negative patterns.

Radicands are assembled in exact integer arithmetic; floating point enters
only at the final square roots.  The smaller root of each quadratic is
taken as ``product / larger`` to avoid cancellation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .linalg import GROUP_TOL, ZERO_TOL, Spectrum, group_spectrum, sym_eigenvalues
from .reduction import ReducedForm, pm_with_zeros, reduce, snap_squares
from .sgraph import (
    Arbitrary,
    Biclique,
    BicliqueUnion,
    NegativePattern,
    PathEven,
    PathOddU,
    PathOddV,
    Regular,
    build_from_pattern,
    check_regular_bipartite,
)


class NoClosedFormError(ValueError):
    pass


@dataclass(frozen=True)
class ClosedFormResult:
    spectrum: Spectrum
    quotient: Optional[ReducedForm] = None


def _quadratic_roots(total, product) -> tuple[float, float]:
    """Roots x1 >= x2 of x**2 - total*x + product, given exact inputs."""
    total, product = Fraction(total), Fraction(product)
    disc = total * total - 4 * product
    if disc < 0:
        raise ValueError(f"negative discriminant {disc}")
    big = (float(total) + math.sqrt(disc)) / 2
    if product == 0:
        return big, 0.0
    return big, float(product) / big


def _check_pq(p: int, q: int) -> None:
    if not 1 <= p <= q:
        raise ValueError(f"need 1 <= p <= q, got p={p}, q={q}")


def biclique_spectrum(p: int, q: int, r: int, s: int, tol: float = GROUP_TOL) -> ClosedFormResult:
    """Negative edges forming one K_{r,s}: {+-mu1, +-mu2, 0^(p+q-4)}.

    mu1**2 and mu2**2 are the nonzero eigenvalues of the rank-2 matrix
    [[q J_r, c (q-2s) 1], [c (q-2s) 1^T, q(p-r)]] with c = sqrt(p-r):
    their sum is pq and their squares sum to
    S = r^2 q^2 + 2 r (p-r)(q-2s)^2 + q^2 (p-r)^2.
    """
    _check_pq(p, q)
    Biclique(r, s).validate(p, q)
    total = p * q
    sq_sum = r * r * q * q + 2 * r * (p - r) * (q - 2 * s) ** 2 + q * q * (p - r) ** 2
    x1, x2 = _quadratic_roots(total, Fraction(total * total - sq_sum, 2))
    vals = pm_with_zeros(np.sqrt(snap_squares([x1, x2])), p + q - 4)
    border = np.full(r, float(q - 2 * s))
    z = np.zeros((r + 1, r + 1))
    z[:r, :r] = q
    z[:r, r] = z[r, :r] = math.sqrt(p - r) * border
    z[r, r] = q * (p - r)
    quotient = ReducedForm(p + q - 2 * r - 2, z) if r < p else None
    return ClosedFormResult(group_spectrum(vals, dim=p + q, tol=tol), quotient)


def disjoint_bicliques_z(p: int, q: int, parts) -> np.ndarray:
    """The (k+1)-order equitable quotient for disjoint negative bicliques."""
    rs = [r for r, _ in parts]
    ss = [s for _, s in parts]
    k = len(parts)
    r = sum(rs)
    c = math.sqrt(p - r)
    z = np.zeros((k + 1, k + 1))
    for i in range(k):
        for j in range(k):
            cij = q if i == j else q - 2 * ss[i] - 2 * ss[j]
            z[i, j] = rs[j] * cij
        z[i, k] = c * (q - 2 * ss[i])
        z[k, i] = rs[i] * c * (q - 2 * ss[i])
    z[k, k] = q * (p - r)
    return z


def disjoint_bicliques_quotient(p: int, q: int, parts, tol: float = GROUP_TOL) -> ClosedFormResult:
    """Negative edges forming disjoint bicliques K_{r_i, s_i}.

    When the bicliques use every U-vertex the quotient's border vanishes and
    the general reduction is used instead.
    """
    _check_pq(p, q)
    pattern = BicliqueUnion(tuple(parts))
    pattern.validate(p, q)
    parts = pattern.parts
    r, _ = pattern.footprint()
    if r == p:
        rf = reduce(build_from_pattern(p, q, pattern))
    else:
        k = len(parts)
        z = disjoint_bicliques_z(p, q, parts)
        rf = ReducedForm(p + q - 2 * k - 2, z, tuple(ri for ri, _ in parts) + (1,))
    return ClosedFormResult(rf.spectrum(tol), rf)


def path_spectral_block(variant) -> np.ndarray:
    """Sign block of the path restricted to the vertices it uses."""
    ru, sv = variant.footprint()
    x = np.ones((ru, sv), dtype=np.int64)
    for i, j in variant.edges():
        x[i, j] = -1
    return x


def path_quotient(p: int, q: int, variant, tol: float = GROUP_TOL) -> ClosedFormResult:
    """Negative edges forming a path (P_2r, or P_2r+1 with ends in U or in V).

    The reduced matrix has entries row_i(X).row_j(X) + (q - s), border
    sqrt(p - r_U) (rowsum_i + q - s) and corner q (p - r_U), where X is the
    path's sign block on its r_U U-vertices and s V-vertices.  The zero
    exponent is p + q - 2 r_U - 2, so the order-(r+2) form of the odd path
    with ends in U carries p + q - 2r - 4 zeros and the form with ends in V
    carries p + q - 2r - 2.
    """
    if not isinstance(variant, (PathEven, PathOddU, PathOddV)):
        raise TypeError(f"not a path pattern: {variant!r}")
    _check_pq(p, q)
    variant.validate(p, q)
    ru, sv = variant.footprint()
    if ru == p:
        rf = reduce(build_from_pattern(p, q, variant))
        return ClosedFormResult(rf.spectrum(tol), rf)
    x = path_spectral_block(variant)
    top = x @ x.T + (q - sv)
    border = x.sum(axis=1) + (q - sv)
    z = np.zeros((ru + 1, ru + 1))
    z[:ru, :ru] = top
    z[:ru, ru] = z[ru, :ru] = math.sqrt(p - ru) * border
    z[ru, ru] = q * (p - ru)
    rf = ReducedForm(p + q - 2 * ru - 2, z)
    return ClosedFormResult(rf.spectrum(tol), rf)


def p5_explicit(p: int, q: int, tol: float = GROUP_TOL) -> Spectrum:
    """P_5 with both ends in V: {+-mu1, +-mu2, +-2, 0^(p+q-6)} with
    mu**2 = (pq - 4 +- sqrt(p^2 q^2 - 56pq + 128p + 96q - 240)) / 2.
    """
    _check_pq(p, q)
    if p < 2 or q < 3:
        raise ValueError(f"P_5 with ends in V needs p >= 2, q >= 3; got ({p}, {q})")
    if p + q < 6:
        raise ValueError(f"zero multiplicity p+q-6 = {p + q - 6} is negative for ({p}, {q})")
    total = p * q - 4
    disc = p * p * q * q - 56 * p * q + 128 * p + 96 * q - 240
    x1, x2 = _quadratic_roots(total, Fraction(total * total - disc, 4))
    roots = np.concatenate([np.sqrt(snap_squares([x1, x2])), [2.0]])
    return group_spectrum(pm_with_zeros(roots, p + q - 6), dim=p + q, tol=tol)


def _h_eigenvalues(k: int, h_adj) -> tuple[int, np.ndarray]:
    h = np.asarray(h_adj)
    reg = check_regular_bipartite(k, h)
    return reg, np.sort(sym_eigenvalues(h))[::-1]


def regular_kk_spectrum(k: int, h_adj, tol: float = GROUP_TOL) -> Spectrum:
    """K_{k,k} whose negative edges form an r-regular bipartite H on all 2k vertices.

    With H's eigenvalues r = mu_1 >= ... >= mu_2k = -r the spectrum is
    {-2 mu_i : 1 < i < 2k} together with +-(k - 2r).
    """
    reg, mu = _h_eigenvalues(k, h_adj)
    vals = np.concatenate([-2.0 * mu[1: 2 * k - 1], [k - 2 * reg, -(k - 2 * reg)]])
    return group_spectrum(vals, dim=2 * k, tol=tol)


def _regular_alphas(p: int, q: int, k: int, reg: int) -> tuple[float, float]:
    t = p * q + (k - 2 * reg) ** 2 - k * k
    # (k-2r)^2 + k(q-k) - k(q-2r)^2/q, times q(p-k), cleared of the 1/q
    prod = ((k - 2 * reg) ** 2 + k * (q - k)) * q * (p - k) - k * (q - 2 * reg) ** 2 * (p - k)
    if prod < 0:
        raise ValueError("regular pattern quotient is not positive semidefinite")
    return _quadratic_roots(t, prod)


def regular_general_spectrum(p: int, q: int, k: int, h_adj, tol: float = GROUP_TOL) -> Spectrum:
    """K_{p,q} whose negative edges form an r-regular bipartite H on 2k vertices.

    Uses the k largest eigenvalues mu_1 = r >= ... >= mu_k >= 0 of H:
    {+-2 mu_i : i >= 2} together with +-sqrt(alpha1), +-sqrt(alpha2) and
    p + q - 2k - 2 zeros, where alpha1 + alpha2 = pq + (k-2r)^2 - k^2.
    At p = q = k the exponent is negative and absorbs alpha2 = 0.
    """
    _check_pq(p, q)
    if k > p:
        raise ValueError(f"k={k} exceeds p={p}")
    reg, mu = _h_eigenvalues(k, h_adj)
    top = np.clip(mu[1:k], 0.0, None)
    top[top < ZERO_TOL] = 0.0
    a1, a2 = _regular_alphas(p, q, k, reg)
    roots = np.concatenate([2.0 * top, np.sqrt(snap_squares([a1, a2]))])
    return group_spectrum(pm_with_zeros(roots, p + q - 2 * k - 2), dim=p + q, tol=tol)


def nonsingularity_check(p: int, q: int, k: int, h_adj) -> bool:
    """Whether the signed K_{p,q} with negative r-regular H is nonsingular.

    p = q = k with H nonsingular is not sufficient on its own: when k = 2r
    the eigenvalue k - 2r vanishes, and p = q = k + 1 can be nonsingular.
    The decision is read off the closed-form spectrum, which requires p = q.
    """
    if p != q:
        return False
    return regular_general_spectrum(p, q, k, h_adj).nullity() == 0


def closed_form(p: int, q: int, pattern: NegativePattern, tol: float = GROUP_TOL) -> ClosedFormResult:
    """Dispatch a structured pattern to its closed form."""
    if isinstance(pattern, Biclique):
        return biclique_spectrum(p, q, pattern.r, pattern.s, tol)
    if isinstance(pattern, BicliqueUnion):
        return disjoint_bicliques_quotient(p, q, pattern.parts, tol)
    if isinstance(pattern, (PathEven, PathOddU, PathOddV)):
        return path_quotient(p, q, pattern, tol)
    if isinstance(pattern, Regular):
        pattern.validate(p, q)
        return ClosedFormResult(regular_general_spectrum(p, q, pattern.k, pattern.matrix, tol))
    if pattern is None or isinstance(pattern, Arbitrary):
        raise NoClosedFormError("no closed form for an arbitrary signing")
    raise NoClosedFormError(f"no closed form for {type(pattern).__name__}")
