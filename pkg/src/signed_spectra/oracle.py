"""Ground-truth spectra from the full adjacency matrix, and route cross-checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .closedform import NoClosedFormError, closed_form
from .linalg import GROUP_TOL, Spectrum, group_spectrum, max_deviation, sym_eigenvalues
from .reduction import nullity_lower_bound, spectrum_via_reduction
from .sgraph import (
    Arbitrary,
    NegativePattern,
    SignedBipartiteGraph,
    SwitchingFunction,
    pattern_to_dict,
    switch,
)

METHODS = ("oracle", "reduction", "closedform")
AGREE_TOL = 1e-8


def full_spectrum(g: SignedBipartiteGraph, tol: float = GROUP_TOL) -> Spectrum:
    """Jacobi eigenvalues of the full adjacency matrix, assembled here from the sign table."""
    n = g.p + g.q
    a = np.zeros((n, n))
    for i in range(g.p):
        for j in range(g.q):
            a[i, g.p + j] = a[g.p + j, i] = g.signs[i, j]
    return group_spectrum(sym_eigenvalues(a), dim=n, tol=tol)


@dataclass
class VerificationReport:
    instance: dict
    methods: dict[str, Spectrum]
    max_deviation: float
    checks: dict[str, bool]
    passed: bool
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "methods": {name: s.to_list() for name, s in self.methods.items()},
            "max_deviation": float(f"{self.max_deviation:.12g}"),
            "checks": dict(self.checks),
            "pass": self.passed,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def method_spectrum(name: str, g: SignedBipartiteGraph, pattern: Optional[NegativePattern] = None) -> Spectrum:
    if name == "oracle":
        return full_spectrum(g)
    if name == "reduction":
        return spectrum_via_reduction(g)
    if name == "closedform":
        if pattern is None or isinstance(pattern, Arbitrary):
            raise NoClosedFormError("no closed form for an arbitrary signing")
        return closed_form(g.p, g.q, pattern).spectrum
    raise ValueError(f"unknown method {name!r}; choose from {METHODS}")


def verify(
    g: SignedBipartiteGraph,
    methods: Iterable[str] = ("oracle", "reduction"),
    pattern: Optional[NegativePattern] = None,
    seed: int = 0,
) -> VerificationReport:
    """Compute the requested spectra and run the standard checks.

    Checks: pairwise agreement of all routes, the zero-multiplicity lower
    bound, symmetry about 0, and invariance under one seeded random switching.
    """
    methods = list(dict.fromkeys(methods))
    if not methods:
        raise ValueError("no methods requested")
    spectra = {name: method_spectrum(name, g, pattern) for name in methods}
    reference = spectra["oracle"] if "oracle" in spectra else full_spectrum(g)

    names = list(spectra)
    dev = 0.0
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            dev = max(dev, max_deviation(spectra[a], spectra[b]))
    dev = max(dev, max(max_deviation(reference, s) for s in spectra.values()))

    bound = nullity_lower_bound(g)
    rng = np.random.default_rng(seed)
    switched = switch(g, SwitchingFunction.random(g.p, g.q, rng))
    switch_dev = max_deviation(reference, full_spectrum(switched))
    checks = {
        "methods_agree": dev < AGREE_TOL,
        "nullity_bound": reference.nullity() >= bound,
        "symmetric": reference.is_symmetric(AGREE_TOL),
        "switching_invariant": switch_dev < AGREE_TOL,
    }
    instance = g.to_dict()
    if pattern is not None:
        instance["pattern"] = pattern_to_dict(pattern)
    return VerificationReport(
        instance=instance,
        methods=spectra,
        max_deviation=dev,
        checks=checks,
        passed=all(checks.values()),
        details={"nullity": reference.nullity(), "bound": bound, "switching_deviation": switch_dev},
    )
