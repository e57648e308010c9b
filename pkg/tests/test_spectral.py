from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import signed_graphs
from sgs.graph import VertexPermutation, apply_permutation, cycle_graph, switch
from sgs.poly import is_spectrally_symmetric
from sgs.spectral import Spectrum, eigenvalues, jacobi_eigenvalues, numeric_symmetry_check


def test_known_spectra():
    assert np.allclose(eigenvalues(cycle_graph(4)).values, [2, 0, 0, -2], atol=1e-12)
    assert np.allclose(eigenvalues(cycle_graph(3)).values, [2, -1, -1], atol=1e-12)


@pytest.mark.parametrize("values,expected", [((2, 0, 0, -2), True), ((2, -1, -1), False),
                                             ((1, 1, -2), False)])
def test_pairing(values, expected):
    assert numeric_symmetry_check(Spectrum(values)) is expected


def test_jacobi_against_lapack():
    rng = np.random.default_rng(5)
    for n in (1, 2, 7, 16, 24):
        a = np.triu(rng.integers(-1, 2, (n, n)), 1)
        a = a + a.T
        assert np.allclose(np.sort(jacobi_eigenvalues(a)), np.linalg.eigvalsh(a), atol=1e-10)


def test_jacobi_reaches_tolerance_on_repeated_eigenvalues():
    # the complete graph has an eigenvalue of multiplicity n-1
    a = np.ones((9, 9)) - np.eye(9)
    vals = np.sort(jacobi_eigenvalues(a))
    assert np.allclose(vals, [-1] * 8 + [8], atol=1e-12)


@given(signed_graphs(min_n=1, max_n=9), st.data())
@settings(max_examples=80)
def test_spectrum_properties(g, data):
    s = eigenvalues(g)
    assert list(s.values) == sorted(s.values, reverse=True)
    assert abs(sum(s.values)) < 1e-9
    assert abs(sum(v * v for v in s.values) - 2 * g.m) < 1e-9 * g.n
    assert numeric_symmetry_check(s) == is_spectrally_symmetric(g)
    u = data.draw(st.sets(st.integers(0, g.n - 1)))
    p = VertexPermutation(tuple(data.draw(st.permutations(range(g.n)))))
    for h in (switch(g, u), apply_permutation(g, p)):
        assert max(abs(a - b) for a, b in zip(eigenvalues(h).values, s.values)) < 1e-9


def test_rounding_has_no_negative_zero():
    assert all(math.copysign(1, v) > 0 for v in eigenvalues(cycle_graph(4)).rounded(4) if v == 0)
