import math

import numpy as np
import pytest
from hypothesis import given, settings

from signed_spectra.linalg import group_spectrum, max_deviation
from signed_spectra.reduction import (
    InvalidGramError,
    ReducedForm,
    bipartite_lift,
    build_z1,
    build_z2,
    nullity_lower_bound,
    pm_with_zeros,
    reduce,
    snap_squares,
    spectrum_via_reduction,
)
from signed_spectra.sgraph import SignedBipartiteGraph, negate

from conftest import numpy_spectrum, sign_tables


def test_k46_z1_is_the_symmetric_matrix(k46):
    rf = build_z1(k46)
    np.testing.assert_array_equal(rf.z, [[6, 2, 0], [2, 6, 0], [0, 0, 12]])
    assert rf.zero_exponent == 4
    assert rf.degree == 10


def test_k46_z2(k46):
    rf = build_z2(k46)
    assert rf.order == 5 and rf.degree == 10
    # cover (2, 4): the V-side form has no spare zeros of its own
    assert rf.zero_exponent == 0
    mus = np.sort(rf.z_eigenvalues())[::-1]
    np.testing.assert_allclose(mus, [12, 8, 4, 0, 0], atol=1e-9)


def test_k46_spectrum(k46):
    r3, r2 = math.sqrt(3), math.sqrt(2)
    s = spectrum_via_reduction(k46)
    expected = [2 * r3, 2 * r2, 2, 0, 0, 0, 0, -2, -2 * r2, -2 * r3]
    np.testing.assert_allclose(s.values(), expected, atol=1e-12)
    assert nullity_lower_bound(k46) == 4


@pytest.mark.parametrize("p, q", [(4, 6), (3, 5), (1, 1), (2, 7)])
def test_all_positive_uses_gram_route(p, q):
    g = SignedBipartiteGraph.all_positive(p, q)
    s = spectrum_via_reduction(g)
    assert s.nullity() == p + q - 2
    assert s.max == pytest.approx(math.sqrt(p * q), abs=1e-12)
    assert nullity_lower_bound(g) == p + q - 2
    assert build_z1(g).order == p


def test_full_width_cover_falls_back():
    g = negate(SignedBipartiteGraph.all_positive(2, 3))
    assert build_z1(g).order == 2
    assert build_z2(g).order == 2
    assert max_deviation(spectrum_via_reduction(g), numpy_spectrum(g)) < 1e-12


def test_reduce_prefers_smaller_side(k46):
    assert reduce(k46).order == 3
    t = SignedBipartiteGraph(np.where(np.arange(6)[None, :] < 1, -1, 1).repeat(5, axis=0))
    assert reduce(t).order == 2  # cover (5, 1) -> V side


@settings(max_examples=150, deadline=None)
@given(sign_tables(max_side=7))
def test_reduction_matches_lapack(signs):
    g = SignedBipartiteGraph(signs)
    for rf in (build_z1(g), build_z2(g)):
        assert rf.degree == g.order
        assert max_deviation(rf.spectrum(), numpy_spectrum(g)) < 1e-8
    s = spectrum_via_reduction(g)
    assert s.nullity() >= nullity_lower_bound(g)


def test_pm_with_zeros():
    np.testing.assert_array_equal(np.sort(pm_with_zeros([1.0, 0.0], -1)), [-1.0, 0.0, 1.0])
    assert len(pm_with_zeros([2.0], 3)) == 5
    with pytest.raises(ValueError):
        pm_with_zeros([1.0], -1)


def test_snap_squares():
    np.testing.assert_array_equal(snap_squares([4.0, 1e-14, -1e-12]), [4.0, 0.0, 0.0])
    with pytest.raises(InvalidGramError):
        snap_squares([1.0, -0.5])


def test_bipartite_lift():
    s = bipartite_lift([4.0, 1.0], 2, 3)
    np.testing.assert_allclose(s.values(), [2, 1, 0, -1, -2])
    with pytest.raises(ValueError):
        bipartite_lift([1.0], 2, 3)
    with pytest.raises(ValueError):
        bipartite_lift([1.0, 1.0, 1.0], 3, 2)


def test_reduced_form_rejects_non_quotient():
    rf = ReducedForm(0, [[1.0, 2.0], [0.0, 1.0]])
    with pytest.raises(ValueError):
        rf.spectrum()


def test_group_of_lifted_values_is_symmetric(k46):
    s = spectrum_via_reduction(k46)
    assert s.is_symmetric()
    assert group_spectrum(s.values()).pairs == s.pairs
