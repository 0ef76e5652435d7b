"""Dense symmetric eigenvalues and spectrum bookkeeping.

Matrices are plain numpy arrays.  The eigensolver is a cyclic Jacobi method
with a round-robin pair ordering, so each step applies ``n // 2`` disjoint
rotations at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

SYM_RTOL = 1e-12
CONV_TOL = 1e-12
MAX_SWEEPS = 100
GROUP_TOL = 1e-8
ZERO_TOL = 1e-8


class NotSymmetricError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    pass


def as_square(m) -> np.ndarray:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def is_symmetric(m) -> bool:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    if a.size == 0:
        return True
    scale = max(1.0, float(np.max(np.abs(a))))
    return float(np.max(np.abs(a - a.T))) <= SYM_RTOL * scale


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Rounds of disjoint index pairs covering every pair exactly once."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=int), np.array(qs, dtype=int)))
        # keep players[0] fixed, rotate the rest
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_norm(a: np.ndarray) -> float:
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def sym_eigenvalues(m, conv_tol: float = CONV_TOL, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius norm falls below
    ``conv_tol`` times the Frobenius norm of the input.  Raises
    `ConvergenceError` if that has not happened after ``max_sweeps``.
    The returned values are in diagonal order, not sorted.
    """
    a = as_square(m)
    if not is_symmetric(a):
        raise NotSymmetricError("matrix is not symmetric")
    a = 0.5 * (a + a.T)
    n = a.shape[0]
    if n <= 1:
        return np.diag(a).copy()

    target = conv_tol * float(np.linalg.norm(a))
    if _off_norm(a) <= target:
        return np.diag(a).copy()

    rounds = _round_robin(n)
    for _ in range(max_sweeps):
        for ps, qs in rounds:
            apq = a[ps, qs]
            active = apq != 0.0
            if not np.any(active):
                continue
            ps, qs, apq = ps[active], qs[active], apq[active]
            with np.errstate(over="ignore"):  # inf lands in the `big` branch below
                theta = (a[qs, qs] - a[ps, ps]) / (2.0 * apq)
            big = np.abs(theta) > 1e150
            safe = np.where(big, 1.0, theta)
            t = np.sign(safe) / (np.abs(safe) + np.sqrt(safe * safe + 1.0))
            t = np.where(big, 0.5 / np.where(big, theta, 1.0), t)
            t[theta == 0.0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            # A <- G^T A G, G acting on the disjoint (p, q) planes
            cp, cq = a[:, ps].copy(), a[:, qs].copy()
            a[:, ps] = c * cp - s * cq
            a[:, qs] = s * cp + c * cq
            rp, rq = a[ps, :].copy(), a[qs, :].copy()
            a[ps, :] = c[:, None] * rp - s[:, None] * rq
            a[qs, :] = s[:, None] * rp + c[:, None] * rq
            a[ps, qs] = 0.0
            a[qs, ps] = 0.0
        if _off_norm(a) <= target:
            return np.diag(a).copy()
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def symmetrize_quotient(z, part_sizes: Sequence[int]) -> np.ndarray:
    """Conjugate a quotient matrix by ``diag(part_sizes) ** 1/2``.

    An equitable quotient of a symmetric matrix becomes symmetric under this
    similarity, so the result doubles as a certificate: if it is not
    symmetric, ``z`` was not a valid quotient and `NotSymmetricError` is
    raised.
    """
    z = as_square(z)
    sizes = np.asarray(part_sizes, dtype=float)
    if sizes.shape != (z.shape[0],) or np.any(sizes <= 0):
        raise ValueError("part_sizes must be positive, one per row of z")
    root = np.sqrt(sizes)
    out = z * root[:, None] / root[None, :]
    if not is_symmetric(out):
        raise NotSymmetricError("quotient matrix does not symmetrize; not an equitable quotient")
    return out


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with multiplicities, sorted by decreasing value."""

    pairs: tuple[tuple[float, int], ...]
    tol: float = GROUP_TOL

    @property
    def dim(self) -> int:
        return sum(m for _, m in self.pairs)

    def values(self) -> np.ndarray:
        """Expanded eigenvalue list, descending."""
        return np.array([v for v, m in self.pairs for _ in range(m)], dtype=float)

    def multiplicity(self, value: float, tol: float | None = None) -> int:
        tol = self.tol if tol is None else tol
        return sum(m for v, m in self.pairs if abs(v - value) < tol)

    def nullity(self, zero_tol: float = ZERO_TOL) -> int:
        return sum(m for v, m in self.pairs if abs(v) < zero_tol)

    @property
    def max(self) -> float:
        return self.pairs[0][0]

    def is_symmetric(self, tol: float = GROUP_TOL) -> bool:
        vals = self.values()
        return bool(np.all(np.abs(vals + vals[::-1]) <= tol))

    def to_list(self, digits: int = 12) -> list[dict]:
        return [{"value": float(f"{v:.{digits}g}"), "multiplicity": m} for v, m in self.pairs]

    @classmethod
    def from_list(cls, items: Iterable[dict], tol: float = GROUP_TOL) -> "Spectrum":
        return cls(tuple((float(d["value"]), int(d["multiplicity"])) for d in items), tol)


def group_spectrum(values, dim: int | None = None, tol: float = GROUP_TOL) -> Spectrum:
    """Sort values descending and merge runs whose neighbours lie within ``tol``."""
    vals = np.sort(np.asarray(values, dtype=float).ravel())[::-1]
    if dim is not None and len(vals) != dim:
        raise ValueError(f"expected {dim} values, got {len(vals)}")
    groups: list[list[float]] = []
    for v in vals:
        if groups and groups[-1][-1] - v <= tol:
            groups[-1].append(float(v))
        else:
            groups.append([float(v)])
    pairs = []
    for g in groups:
        rep = float(np.mean(g))
        if abs(rep) < tol:
            rep = 0.0
        pairs.append((rep, len(g)))
    return Spectrum(tuple(pairs), tol)


def max_deviation(a: Spectrum, b: Spectrum) -> float:
    """Largest gap between the sorted expanded value lists (inf on size mismatch)."""
    va, vb = a.values(), b.values()
    if len(va) != len(vb):
        return float("inf")
    if len(va) == 0:
        return 0.0
    return float(np.max(np.abs(va - vb)))


def multiset_equal(a: Spectrum, b: Spectrum, tol: float = GROUP_TOL) -> bool:
    return max_deviation(a, b) <= tol


def char_poly_coeffs(s: Spectrum) -> list[float]:
    """Coefficients of prod(x - lambda), from degree n down to 0."""
    coeffs = np.array([1.0])
    for v, m in s.pairs:
        for _ in range(m):
            coeffs = np.convolve(coeffs, [1.0, -v])
    return [float(c) for c in coeffs]
