import json
import math

import numpy as np
import pytest
from hypothesis import given, settings

from signed_spectra.closedform import NoClosedFormError
from signed_spectra.linalg import max_deviation
from signed_spectra.oracle import full_spectrum, method_spectrum, verify
from signed_spectra.sgraph import Arbitrary, Biclique, BicliqueUnion, SignedBipartiteGraph, build_from_pattern

from conftest import numpy_spectrum, sign_tables


def test_full_spectrum_k46(k46):
    s = full_spectrum(k46)
    r3, r2 = math.sqrt(3), math.sqrt(2)
    np.testing.assert_allclose(s.values(), [2 * r3, 2 * r2, 2, 0, 0, 0, 0, -2, -2 * r2, -2 * r3], atol=1e-12)
    assert s.nullity() == 4


@settings(max_examples=80, deadline=None)
@given(sign_tables(max_side=8))
def test_oracle_matches_lapack(signs):
    g = SignedBipartiteGraph(signs)
    assert max_deviation(full_spectrum(g), numpy_spectrum(g)) < 1e-10


def test_verify_report(k46):
    rep = verify(k46, ["oracle", "reduction"])
    assert rep.passed
    assert rep.max_deviation < 1e-12
    assert set(rep.checks) == {"methods_agree", "nullity_bound", "symmetric", "switching_invariant"}
    d = json.loads(rep.to_json())
    assert d["pass"] is True
    assert d["instance"]["p"] == 4
    assert {"value", "multiplicity"} <= set(d["methods"]["oracle"][0])


def test_verify_with_closed_form_records_pattern():
    pat = BicliqueUnion(((2, 2), (2, 3)))
    g = build_from_pattern(5, 7, pat)
    rep = verify(g, ["closedform", "reduction", "oracle"], pattern=pat)
    assert rep.passed and rep.max_deviation < 1e-9
    assert rep.instance["pattern"]["kind"] == "BicliqueUnion"
    assert rep.details["nullity"] == 6


def test_verify_without_oracle_still_checks_against_it():
    g = build_from_pattern(3, 4, Biclique(1, 2))
    rep = verify(g, ["reduction"])
    assert list(rep.methods) == ["reduction"] and rep.passed


def test_method_errors():
    g = SignedBipartiteGraph([[1, -1]])
    with pytest.raises(NoClosedFormError):
        method_spectrum("closedform", g, Arbitrary([[1, -1]]))
    with pytest.raises(ValueError):
        method_spectrum("qr", g)
    with pytest.raises(ValueError):
        verify(g, [])


def test_verify_is_seeded(k46):
    a = verify(k46, seed=5).details["switching_deviation"]
    b = verify(k46, seed=5).details["switching_deviation"]
    assert a == b
