import numpy as np
import pytest
from hypothesis import strategies as st

from signed_spectra import SignedBipartiteGraph
from signed_spectra.linalg import group_spectrum

K46_SIGNS = [
    [-1, -1, -1, 1, 1, 1],
    [-1, 1, -1, -1, 1, 1],
    [1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1],
]


@pytest.fixture
def k46():
    return SignedBipartiteGraph(K46_SIGNS)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def numpy_spectrum(g):
    """Independent reference: LAPACK on the adjacency matrix."""
    p, q = g.p, g.q
    a = np.block([[np.zeros((p, p)), g.signs], [g.signs.T, np.zeros((q, q))]])
    return group_spectrum(np.linalg.eigvalsh(a))


def from_squares(ys, zeros):
    """Spectrum {+-sqrt(y)} plus ``zeros`` zeros."""
    r = np.sqrt(np.asarray(ys, dtype=float))
    return group_spectrum(np.concatenate([r, -r, np.zeros(zeros)]))


def from_even_poly(coeffs, zeros):
    """Spectrum of x**zeros * f(x**2), f given by integer coefficients.

    Only for f with simple roots; np.roots loses precision on repeated ones.
    """
    ys = np.roots(coeffs).real
    ys[np.abs(ys) < 1e-12] = 0.0
    r = np.sqrt(ys)
    return group_spectrum(np.concatenate([r, -r, np.zeros(zeros)]))


@st.composite
def sign_tables(draw, max_side=6):
    p = draw(st.integers(1, max_side))
    q = draw(st.integers(1, max_side))
    flat = draw(st.lists(st.sampled_from([-1, 1]), min_size=p * q, max_size=p * q))
    return np.array(flat).reshape(p, q)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
