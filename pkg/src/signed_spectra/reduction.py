"""Reduce the (p+q)-order eigenproblem to a small matrix.

The characteristic polynomial of a signed K_{p,q} factors as
``x**alpha * phi(Z, x**2)``; this module builds ``Z`` from the negative
cover of the graph and lifts its eigenvalues back to the full spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .linalg import GROUP_TOL, Spectrum, group_spectrum, sym_eigenvalues, symmetrize_quotient
from .sgraph import SignedBipartiteGraph, minimal_cover

NEG_TOL = 1e-8
SNAP_RTOL = 1e-10


class InvalidGramError(ValueError):
    pass


@dataclass(frozen=True)
class ReducedForm:
    """``phi(graph, x) = x**zero_exponent * phi(z, x**2)``."""

    zero_exponent: int
    z: np.ndarray = field(repr=False)
    part_sizes: tuple[int, ...] = ()

    def __post_init__(self):
        z = np.asarray(self.z, dtype=float)
        object.__setattr__(self, "z", z)
        if not self.part_sizes:
            object.__setattr__(self, "part_sizes", (1,) * z.shape[0])

    @property
    def order(self) -> int:
        return self.z.shape[0]

    @property
    def degree(self) -> int:
        return self.zero_exponent + 2 * self.order

    def z_eigenvalues(self) -> np.ndarray:
        return sym_eigenvalues(symmetrize_quotient(self.z, self.part_sizes))

    def spectrum(self, tol: float = GROUP_TOL) -> Spectrum:
        return group_spectrum(lift(self.z_eigenvalues(), self.zero_exponent), tol=tol)


def snap_squares(mus) -> np.ndarray:
    """Clamp round-off in eigenvalues of a positive semidefinite matrix.

    Values below ``-NEG_TOL`` mean the input was not PSD.  Values within
    ``SNAP_RTOL * max(1, max|mu|)`` of zero are set to zero so that their
    square roots do not surface as spurious ~1e-7 eigenvalues.
    """
    mus = np.asarray(mus, dtype=float).ravel()
    if mus.size and mus.min() < -NEG_TOL:
        raise InvalidGramError(f"negative eigenvalue {mus.min():.3g} in a Gram-type matrix")
    scale = max(1.0, float(np.max(np.abs(mus)))) if mus.size else 1.0
    return np.where(mus <= SNAP_RTOL * scale, 0.0, mus)


def pm_with_zeros(roots, zero_count: int) -> np.ndarray:
    """``{+root, -root}`` for every root plus ``zero_count`` zeros.

    A negative ``zero_count`` cancels that many exact zeros from the roots;
    this is how degenerate closed forms (a zero exponent below 0 balanced
    by zero roots) are merged.
    """
    roots = np.asarray(roots, dtype=float).ravel()
    vals = np.concatenate([roots, -roots])
    if zero_count >= 0:
        return np.concatenate([vals, np.zeros(zero_count)])
    zeros = np.flatnonzero(vals == 0.0)
    if len(zeros) < -zero_count:
        raise ValueError(f"zero exponent {zero_count} cannot be absorbed by {len(zeros)} zero roots")
    return np.delete(vals, zeros[: -zero_count])


def lift(mus, zero_exponent: int) -> np.ndarray:
    """Eigenvalues mu of Z -> +-sqrt(mu) plus ``zero_exponent`` zeros."""
    return pm_with_zeros(np.sqrt(snap_squares(mus)), zero_exponent)


def bipartite_lift(gram_eigs, p: int, q: int, tol: float = GROUP_TOL) -> Spectrum:
    gram_eigs = np.asarray(gram_eigs, dtype=float).ravel()
    if p > q:
        raise ValueError("bipartite_lift expects p <= q")
    if len(gram_eigs) != p:
        raise ValueError(f"expected {p} Gram eigenvalues, got {len(gram_eigs)}")
    return group_spectrum(lift(gram_eigs, q - p), dim=p + q, tol=tol)


def gram_form(g: SignedBipartiteGraph) -> ReducedForm:
    b = g.signs.astype(np.int64)
    return ReducedForm(g.q - g.p, (b @ b.T).astype(float))


def _cover_block(g: SignedBipartiteGraph):
    neg = g.signs < 0
    rows = np.flatnonzero(neg.any(axis=1))
    cols = np.flatnonzero(neg.any(axis=0))
    return g.signs[np.ix_(rows, cols)].astype(np.int64)


def _bordered(top: np.ndarray, border: np.ndarray, c2: int, corner: int) -> np.ndarray:
    # integer blocks first, the single irrational factor sqrt(c2) last
    m = top.shape[0]
    z = np.zeros((m + 1, m + 1))
    z[:m, :m] = top
    z[:m, m] = z[m, :m] = np.sqrt(c2) * border
    z[m, m] = corner
    return z


def build_z1(g: SignedBipartiteGraph) -> ReducedForm:
    """Reduction through the U side of the negative cover.

    Falls back to the plain Gram matrix ``B B^T`` when the cover has no rows
    or every row (the bordered form needs ``1 <= r < p``).
    """
    p, q = g.p, g.q
    r, s = minimal_cover(g)
    if r == 0 or r == p:
        return gram_form(g)
    x = _cover_block(g)
    top = x @ x.T + (q - s)
    border = x.sum(axis=1) + (q - s)
    return ReducedForm(p + q - 2 * r - 2, _bordered(top, border, p - r, q * (p - r)))


def build_z2(g: SignedBipartiteGraph) -> ReducedForm:
    """Reduction through the V side of the negative cover (order s + 1)."""
    p, q = g.p, g.q
    r, s = minimal_cover(g)
    zeta = p + q - 2 * s - 2
    if s == 0 or s == q or zeta < 0:
        return gram_form(g)
    x = _cover_block(g)
    top = x.T @ x + (p - r)
    border = x.sum(axis=0) + (p - r)
    return ReducedForm(zeta, _bordered(top, border, q - s, p * (q - s)))


def reduce(g: SignedBipartiteGraph) -> ReducedForm:
    r, s = minimal_cover(g)
    return build_z1(g) if r <= s else build_z2(g)


def spectrum_via_reduction(g: SignedBipartiteGraph, tol: float = GROUP_TOL) -> Spectrum:
    return reduce(g).spectrum(tol)


def nullity_lower_bound(g: SignedBipartiteGraph) -> int:
    r, s = minimal_cover(g)
    return max(0, g.p + g.q - 2 * min(r, s) - 2)
