"""Signed complete bipartite graphs and their negative-edge patterns.

A graph is stored as its p x q sign table (the off-diagonal block of the
adjacency matrix).  Parts are kept in the order ``p <= q``: a taller table
is transposed on construction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Union

import numpy as np


class SignedBipartiteGraph:
    """Complete bipartite graph K_{p,q} with a +1/-1 sign on every edge."""

    __slots__ = ("_signs",)

    def __init__(self, signs):
        a = np.array(signs, dtype=np.int8, copy=True)
        if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
            raise ValueError(f"sign table must be a non-empty 2-d table, got shape {a.shape}")
        if not np.all((a == 1) | (a == -1)):
            raise ValueError("every sign must be +1 or -1")
        if a.shape[0] > a.shape[1]:
            a = a.T.copy()
        a.flags.writeable = False
        self._signs = a

    @property
    def p(self) -> int:
        return self._signs.shape[0]

    @property
    def q(self) -> int:
        return self._signs.shape[1]

    @property
    def signs(self) -> np.ndarray:
        return self._signs

    @property
    def order(self) -> int:
        return self.p + self.q

    def negative_edges(self) -> list[tuple[int, int]]:
        return [tuple(map(int, e)) for e in np.argwhere(self._signs < 0)]

    def __eq__(self, other):
        if not isinstance(other, SignedBipartiteGraph):
            return NotImplemented
        return self._signs.shape == other._signs.shape and bool(np.all(self._signs == other._signs))

    def __hash__(self):
        return hash((self._signs.shape, self._signs.tobytes()))

    def __repr__(self):
        return f"SignedBipartiteGraph(p={self.p}, q={self.q}, negative={len(self.negative_edges())})"

    @classmethod
    def all_positive(cls, p: int, q: int) -> "SignedBipartiteGraph":
        return cls(np.ones((p, q), dtype=np.int8))

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "signs": self._signs.astype(int).tolist()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "SignedBipartiteGraph":
        signs = np.asarray(d["signs"])
        if signs.ndim != 2 or signs.shape != (d["p"], d["q"]):
            raise ValueError(f"signs has shape {signs.shape}, expected ({d['p']}, {d['q']})")
        return cls(signs)

    @classmethod
    def from_json(cls, text: str) -> "SignedBipartiteGraph":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class SwitchingFunction:
    theta_u: tuple[int, ...]
    theta_v: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "theta_u", tuple(int(x) for x in self.theta_u))
        object.__setattr__(self, "theta_v", tuple(int(x) for x in self.theta_v))
        if any(x not in (1, -1) for x in self.theta_u + self.theta_v):
            raise ValueError("switching values must be +1 or -1")

    @classmethod
    def random(cls, p: int, q: int, rng: np.random.Generator) -> "SwitchingFunction":
        return cls(tuple(rng.choice([-1, 1], size=p)), tuple(rng.choice([-1, 1], size=q)))


# -- negative-edge patterns -------------------------------------------------


@dataclass(frozen=True)
class Biclique:
    r: int
    s: int

    def footprint(self) -> tuple[int, int]:
        return self.r, self.s

    def validate(self, p: int, q: int) -> None:
        if not (1 <= self.r <= p and 1 <= self.s <= q):
            raise ValueError(f"biclique K_{{{self.r},{self.s}}} does not fit in K_{{{p},{q}}}")

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.r) for j in range(self.s)]


@dataclass(frozen=True)
class BicliqueUnion:
    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple((int(r), int(s)) for r, s in self.parts))

    def footprint(self) -> tuple[int, int]:
        return sum(r for r, _ in self.parts), sum(s for _, s in self.parts)

    def validate(self, p: int, q: int) -> None:
        if not self.parts:
            raise ValueError("biclique union needs at least one part")
        if any(r < 1 or s < 1 for r, s in self.parts):
            raise ValueError("every biclique part needs r_i >= 1 and s_i >= 1")
        r, s = self.footprint()
        if r > p or s > q:
            raise ValueError(f"bicliques need {r} + {s} vertices, K_{{{p},{q}}} is too small")

    def edges(self) -> list[tuple[int, int]]:
        out = []
        u0 = v0 = 0
        for r, s in self.parts:
            out.extend((u0 + i, v0 + j) for i in range(r) for j in range(s))
            u0 += r
            v0 += s
        return out


@dataclass(frozen=True)
class _Path:
    r: int

    def validate(self, p: int, q: int) -> None:
        if self.r < 1:
            raise ValueError("path parameter r must be >= 1")
        ru, sv = self.footprint()
        if ru > p or sv > q:
            raise ValueError(
                f"{type(self).__name__}({self.r}) uses {ru} U- and {sv} V-vertices; "
                f"does not fit in K_{{{p},{q}}}"
            )


@dataclass(frozen=True)
class PathEven(_Path):
    """P_{2r}: u1 v1 u2 v2 ... ur vr."""

    def footprint(self):
        return self.r, self.r

    def edges(self):
        return [(i, i) for i in range(self.r)] + [(i, i - 1) for i in range(1, self.r)]


@dataclass(frozen=True)
class PathOddU(_Path):
    """P_{2r+1} with both ends in U: u1 v1 ... ur vr u_{r+1}."""

    def footprint(self):
        return self.r + 1, self.r

    def edges(self):
        return [(i, i) for i in range(self.r)] + [(i, i - 1) for i in range(1, self.r + 1)]


@dataclass(frozen=True)
class PathOddV(_Path):
    """P_{2r+1} with both ends in V: v1 u1 v2 ... ur v_{r+1}."""

    def footprint(self):
        return self.r, self.r + 1

    def edges(self):
        return [(i, i) for i in range(self.r)] + [(i, i + 1) for i in range(self.r)]


@dataclass(frozen=True)
class Regular:
    """Regular bipartite H on 2k vertices; rows 0..k-1 are the U side."""

    k: int
    h_adj: tuple[tuple[int, ...], ...] = field(repr=False)

    def __post_init__(self):
        h = np.asarray(self.h_adj, dtype=int)
        object.__setattr__(self, "h_adj", tuple(tuple(int(x) for x in row) for row in h))

    @property
    def matrix(self) -> np.ndarray:
        return np.asarray(self.h_adj, dtype=int)

    @property
    def regularity(self) -> int:
        return check_regular_bipartite(self.k, self.matrix)

    def footprint(self):
        return self.k, self.k

    def validate(self, p: int, q: int) -> None:
        check_regular_bipartite(self.k, self.matrix)
        if self.k > p or self.k > q:
            raise ValueError(f"H on 2*{self.k} vertices does not fit in K_{{{p},{q}}}")

    def edges(self):
        block = self.matrix[: self.k, self.k:]
        return [tuple(map(int, e)) for e in np.argwhere(block == 1)]


@dataclass(frozen=True)
class Arbitrary:
    signs: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.signs is not None:
            s = np.asarray(self.signs, dtype=int)
            object.__setattr__(self, "signs", tuple(tuple(int(x) for x in row) for row in s))

    def validate(self, p: int, q: int) -> None:
        if self.signs is None:
            raise ValueError("an arbitrary pattern needs an explicit sign table")
        s = np.asarray(self.signs)
        if s.shape not in ((p, q), (q, p)):
            raise ValueError(f"sign table has shape {s.shape}, expected ({p}, {q})")


NegativePattern = Union[Biclique, BicliqueUnion, PathEven, PathOddU, PathOddV, Regular, Arbitrary]


def check_regular_bipartite(k: int, h_adj) -> int:
    """Validate a 2k x 2k adjacency of a bipartite regular graph; return its degree."""
    h = np.asarray(h_adj)
    if h.shape != (2 * k, 2 * k) or k < 1:
        raise ValueError(f"h_adj must be {2 * k}x{2 * k}, got {h.shape}")
    if not np.all((h == 0) | (h == 1)):
        raise ValueError("h_adj must be a 0/1 table")
    if not np.array_equal(h, h.T):
        raise ValueError("h_adj must be symmetric")
    if np.any(np.diag(h)):
        raise ValueError("h_adj must have zero diagonal")
    if np.any(h[:k, :k]) or np.any(h[k:, k:]):
        raise ValueError("h_adj is not bipartite with parts {0..k-1}, {k..2k-1}")
    deg = h.sum(axis=1)
    if not np.all(deg == deg[0]):
        raise ValueError(f"h_adj is not regular (degrees {sorted(set(deg.tolist()))})")
    if deg[0] < 1:
        raise ValueError("h_adj has no edges")
    return int(deg[0])


def pattern_to_dict(pattern: NegativePattern) -> dict:
    name = type(pattern).__name__
    if isinstance(pattern, Biclique):
        return {"kind": name, "r": pattern.r, "s": pattern.s}
    if isinstance(pattern, BicliqueUnion):
        return {"kind": name, "parts": [list(x) for x in pattern.parts]}
    if isinstance(pattern, _Path):
        return {"kind": name, "r": pattern.r}
    if isinstance(pattern, Regular):
        return {"kind": name, "k": pattern.k, "h_adj": [list(r) for r in pattern.h_adj]}
    return {"kind": name}


def pattern_from_dict(d: dict) -> NegativePattern:
    kind = d["kind"]
    if kind == "Biclique":
        return Biclique(d["r"], d["s"])
    if kind == "BicliqueUnion":
        return BicliqueUnion(tuple(tuple(x) for x in d["parts"]))
    if kind in ("PathEven", "PathOddU", "PathOddV"):
        return {"PathEven": PathEven, "PathOddU": PathOddU, "PathOddV": PathOddV}[kind](d["r"])
    if kind == "Regular":
        return Regular(d["k"], d["h_adj"])
    if kind == "Arbitrary":
        return Arbitrary(d.get("signs"))
    raise ValueError(f"unknown pattern kind {kind!r}")


# -- operations ---------------------------------------------------------------


def build_from_pattern(p: int, q: int, pattern: NegativePattern) -> SignedBipartiteGraph:
    """Graph whose negative edges are exactly the pattern's, on the lowest indices."""
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    pattern.validate(p, q)
    if isinstance(pattern, Arbitrary):
        return SignedBipartiteGraph(pattern.signs)
    signs = np.ones((p, q), dtype=np.int8)
    for i, j in pattern.edges():
        signs[i, j] = -1
    return SignedBipartiteGraph(signs)


def adjacency_matrix(g: SignedBipartiteGraph) -> np.ndarray:
    p, q = g.p, g.q
    a = np.zeros((p + q, p + q))
    a[:p, p:] = g.signs
    a[p:, :p] = g.signs.T
    return a


def spectral_block(g: SignedBipartiteGraph) -> np.ndarray:
    return g.signs.astype(float)


def switch(g: SignedBipartiteGraph, f: SwitchingFunction) -> SignedBipartiteGraph:
    if len(f.theta_u) != g.p or len(f.theta_v) != g.q:
        raise ValueError(
            f"switching sizes ({len(f.theta_u)}, {len(f.theta_v)}) do not match ({g.p}, {g.q})"
        )
    tu = np.asarray(f.theta_u, dtype=np.int8)
    tv = np.asarray(f.theta_v, dtype=np.int8)
    return SignedBipartiteGraph(tu[:, None] * g.signs * tv[None, :])


def negate(g: SignedBipartiteGraph) -> SignedBipartiteGraph:
    return SignedBipartiteGraph(-g.signs)


def minimal_cover(g: SignedBipartiteGraph) -> tuple[int, int]:
    """(rows holding a negative edge, columns holding a negative edge)."""
    neg = g.signs < 0
    return int(np.count_nonzero(neg.any(axis=1))), int(np.count_nonzero(neg.any(axis=0)))


def is_balanced(g: SignedBipartiteGraph) -> bool:
    # balanced <=> sign table is the outer product of its first column and row
    s = g.signs.astype(int)
    return bool(np.array_equal(s, np.outer(s[:, 0], s[0, :]) * s[0, 0]))


def random_signing(p: int, q: int, rng: np.random.Generator) -> SignedBipartiteGraph:
    """Random signing whose negative edges sit inside a random r0 x s0 window.

    Drawing the window size first gives a spread of cover sizes, which a
    uniform +-1 table would not (its cover is almost always full).
    """
    r0 = int(rng.integers(0, p + 1))
    s0 = int(rng.integers(0, q + 1))
    density = float(rng.uniform(0.1, 0.9))
    signs = np.ones((p, q), dtype=np.int8)
    rows = rng.permutation(p)[:r0]
    cols = rng.permutation(q)[:s0]
    block = np.where(rng.random((r0, s0)) < density, -1, 1).astype(np.int8)
    signs[np.ix_(rows, cols)] = block
    return SignedBipartiteGraph(signs)
