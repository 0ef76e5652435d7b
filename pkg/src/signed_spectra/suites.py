"""Verification suites run by ``signed-spectra verify`` and ``sweep``."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .closedform import closed_form, disjoint_bicliques_quotient, p5_explicit, path_quotient
from .linalg import group_spectrum, max_deviation
from .oracle import AGREE_TOL, full_spectrum
from .reduction import build_z1, build_z2, nullity_lower_bound, spectrum_via_reduction
from .sgraph import (
    Biclique,
    BicliqueUnion,
    PathEven,
    PathOddU,
    PathOddV,
    Regular,
    SignedBipartiteGraph,
    SwitchingFunction,
    build_from_pattern,
    negate,
    random_signing,
    switch,
)

GOLDEN_TOL = 1e-9

K46_SIGNS = np.array(
    [
        [-1, -1, -1, 1, 1, 1],
        [-1, 1, -1, -1, 1, 1],
        [1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 1],
    ]
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}  {self.detail}".rstrip()


def k46_graph() -> SignedBipartiteGraph:
    return SignedBipartiteGraph(K46_SIGNS)


def golden_suite() -> list[CheckResult]:
    out = []

    g = k46_graph()
    r3, r2 = math.sqrt(3), math.sqrt(2)
    expected = group_spectrum([2 * r3, 2 * r2, 2, 0, 0, 0, 0, -2, -2 * r2, -2 * r3])
    oracle = full_spectrum(g)
    red = spectrum_via_reduction(g)
    dev = max(max_deviation(oracle, expected), max_deviation(red, expected), max_deviation(oracle, red))
    out.append(CheckResult("K_{4,6} spectrum", dev < GOLDEN_TOL, f"max_dev={dev:.2e}"))
    z1 = build_z1(g).z
    out.append(CheckResult(
        "K_{4,6} Z1", bool(np.allclose(z1, [[6, 2, 0], [2, 6, 0], [0, 0, 12]], atol=0)), str(z1.tolist())
    ))
    out.append(CheckResult("K_{4,6} nullity bound", nullity_lower_bound(g) == 4 <= oracle.nullity()))

    res = disjoint_bicliques_quotient(5, 7, [(2, 2), (2, 3)])
    g41 = build_from_pattern(5, 7, BicliqueUnion(((2, 2), (2, 3))))
    o41 = full_spectrum(g41)
    dev = max_deviation(res.spectrum, o41)
    out.append(CheckResult("K_{5,7} two bicliques, closed form vs oracle", dev < GOLDEN_TOL, f"max_dev={dev:.2e}"))
    out.append(CheckResult(
        "K_{5,7} two bicliques, quotient",
        bool(np.array_equal(res.quotient.z, [[14, -6, 3], [-6, 14, 1], [6, 2, 7]])),
        str(res.quotient.z.tolist()),
    ))
    reference = [4.50, 3.37, 1.82]
    pos = [v for v, _ in res.spectrum.pairs if v > 0]
    gap = max(abs(a - b) for a, b in zip(pos, reference))
    out.append(CheckResult(
        "K_{5,7} two bicliques, reference values within 0.01",
        gap < 0.01 and res.spectrum.nullity() == 6,
        "computed " + ", ".join(f"{v:.4f}" for v in pos),
    ))

    for p, q in [(3, 4), (4, 5), (5, 9)]:
        explicit = p5_explicit(p, q)
        quot = path_quotient(p, q, PathOddV(2)).spectrum
        o = full_spectrum(build_from_pattern(p, q, PathOddV(2)))
        dev = max(max_deviation(explicit, quot), max_deviation(explicit, o), max_deviation(quot, o))
        has_two = o.multiplicity(2.0) >= 1 and o.multiplicity(-2.0) >= 1
        out.append(CheckResult(f"P_5 ends in V ({p},{q})", dev < GOLDEN_TOL and has_two, f"max_dev={dev:.2e}"))
    return out


def random_instance(rng: np.random.Generator, max_order: int = 30) -> SignedBipartiteGraph:
    p = int(rng.integers(1, max_order // 2 + 1))
    q = int(rng.integers(p, max_order - p + 1))
    return random_signing(p, q, rng)


def property_trial(g: SignedBipartiteGraph, rng: np.random.Generator) -> dict[str, float | bool]:
    oracle = full_spectrum(g)
    red = spectrum_via_reduction(g)
    f = SwitchingFunction.random(g.p, g.q, rng)
    rf1, rf2 = build_z1(g), build_z2(g)
    z_dev = max_deviation(rf1.spectrum(), rf2.spectrum())
    return {
        "reduction": max_deviation(oracle, red),
        "z1_vs_z2": z_dev,
        "switching": max_deviation(oracle, full_spectrum(switch(g, f))),
        "negation": max_deviation(oracle, full_spectrum(negate(g))),
        "symmetric": oracle.is_symmetric(AGREE_TOL),
        "nullity_bound": oracle.nullity() >= nullity_lower_bound(g),
        "degree": rf1.degree == g.order and rf2.degree == g.order,
    }


def properties_suite(trials: int = 200, seed: int = 0) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    worst: dict[str, float] = {}
    failures: dict[str, int] = {}
    for _ in range(trials):
        g = random_instance(rng)
        for name, val in property_trial(g, rng).items():
            if isinstance(val, bool):
                failures[name] = failures.get(name, 0) + (not val)
            else:
                worst[name] = max(worst.get(name, 0.0), val)
    out = [CheckResult(f"{name} deviation", v < AGREE_TOL, f"max={v:.2e}") for name, v in worst.items()]
    out += [CheckResult(name, n == 0, f"failures={n}/{trials}") for name, n in failures.items()]
    return out


# -- parameter sweep -----------------------------------------------------------

SWEEP_PATTERNS = ("biclique", "bicliques", "path-even", "path-odd-u", "path-odd-v", "regular", "random")


def perfect_matching(k: int) -> np.ndarray:
    h = np.zeros((2 * k, 2 * k), dtype=int)
    for i in range(k):
        h[i, k + i] = h[k + i, i] = 1
    return h


def sweep_instances(p: int, q: int, kind: str, rng: np.random.Generator):
    """Yield (params, pattern or None, graph) for one grid cell."""
    if kind == "biclique":
        for r in range(1, p + 1):
            for s in range(1, q + 1):
                pat = Biclique(r, s)
                yield f"r={r};s={s}", pat, build_from_pattern(p, q, pat)
    elif kind == "bicliques":
        for r1 in range(1, p):
            for r2 in range(1, p - r1 + 1):
                for s1 in range(1, q):
                    for s2 in range(1, q - s1 + 1):
                        pat = BicliqueUnion(((r1, s1), (r2, s2)))
                        yield f"parts={r1}:{s1},{r2}:{s2}", pat, build_from_pattern(p, q, pat)
    elif kind in ("path-even", "path-odd-u", "path-odd-v"):
        cls = {"path-even": PathEven, "path-odd-u": PathOddU, "path-odd-v": PathOddV}[kind]
        r = 1
        while True:
            pat = cls(r)
            ru, sv = pat.footprint()
            if ru > p or sv > q:
                break
            yield f"r={r}", pat, build_from_pattern(p, q, pat)
            r += 1
    elif kind == "regular":
        for k in range(1, p + 1):
            pat = Regular(k, perfect_matching(k))
            yield f"k={k};H=matching", pat, build_from_pattern(p, q, pat)
    elif kind == "random":
        yield "random", None, random_signing(p, q, rng)
    else:
        raise ValueError(f"unknown sweep pattern {kind!r}; choose from {SWEEP_PATTERNS}")


def sweep(p_max: int, q_max: int, patterns, seed: int = 0) -> list[dict]:
    rng = np.random.default_rng(seed)
    rows = []
    for kind in patterns:
        for p in range(1, p_max + 1):
            for q in range(p, q_max + 1):
                for params, pat, g in sweep_instances(p, q, kind, rng):
                    oracle = full_spectrum(g)
                    dev = max_deviation(oracle, spectrum_via_reduction(g))
                    if pat is not None:
                        dev = max(dev, max_deviation(oracle, closed_form(p, q, pat).spectrum))
                    bound = nullity_lower_bound(g)
                    rows.append({
                        "p": p,
                        "q": q,
                        "pattern": kind,
                        "params": params,
                        "mu_max": float(f"{oracle.max:.12g}"),
                        "nullity": oracle.nullity(),
                        "bound": bound,
                        "pass": bool(dev < AGREE_TOL and oracle.nullity() >= bound),
                    })
    rows.sort(key=lambda d: (d["pattern"], d["p"], d["q"], d["params"]))
    return rows

