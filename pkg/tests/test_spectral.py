import math

import numpy as np
import pytest

from magiclab import graph as gr
from magiclab import spectral as sp


def test_jacobi_matches_numpy():
    rng = np.random.default_rng(7)
    for n in (2, 3, 8, 17, 40):
        a = rng.normal(size=(n, n))
        a = a + a.T
        assert np.allclose(sp.jacobi_eigenvalues(a), np.linalg.eigvalsh(a), atol=1e-10)


def test_jacobi_edge_cases():
    assert sp.jacobi_eigenvalues([[5.0]]).tolist() == [5.0]
    assert sp.jacobi_eigenvalues(np.zeros((3, 3))).tolist() == [0, 0, 0]
    with pytest.raises(sp.SpectralError):
        sp.jacobi_eigenvalues([[0, 1], [0, 0]])
    with pytest.raises(sp.NoConvergence):
        a = gr.petersen().matrix()
        sp.jacobi_eigenvalues(a, max_sweeps=1)


def test_clustering_and_text():
    s = sp.cycle_spectrum(6)
    assert s.clusters() == [pytest.approx((-2, 1)), pytest.approx((-1, 2)),
                            pytest.approx((1, 2)), pytest.approx((2, 1))]
    assert s.to_text() == "-2 1\n-1 2\n1 2\n2 1\n"
    assert sp.cycle_spectrum(5).to_text().splitlines()[0] == "-1.61803398875 2"


def test_env_tolerance(monkeypatch):
    monkeypatch.setenv("MAGICLAB_TOL", "0.5")
    assert sp.default_tol() == 0.5
    assert sp.Spectrum.of([0.0, 0.1]).multiplicity(0.0) == 2
    monkeypatch.setenv("MAGICLAB_TOL", "nope")
    with pytest.raises(sp.SpectralError):
        sp.default_tol()
    monkeypatch.delenv("MAGICLAB_TOL")
    assert sp.default_tol() == sp.DEFAULT_TOL


def test_closed_forms():
    assert sp.complete_spectrum(4).clusters() == [(-1, 3), (3, 1)]
    kb = sp.complete_bipartite_spectrum(2, 3)
    assert kb.multiplicity(0) == 3 and kb.contains(math.sqrt(6))
    ci = sp.circulant_spectrum(6, [1, 3])
    jac = sp.eigenvalues_symmetric(gr.circulant(6, [1, 3]))
    assert np.allclose(ci.eigenvalues, jac.eigenvalues)
    with pytest.raises(sp.SpectralError):
        sp.circulant_spectrum(6, [4])


def test_strong_product_spectrum():
    a, b = sp.cycle_spectrum(4), sp.cycle_spectrum(5)
    s = sp.strong_product_spectrum(a, b)
    j = sp.eigenvalues_symmetric(gr.strong_product(gr.cycle(4), gr.cycle(5)))
    assert np.allclose(s.eigenvalues, j.eigenvalues, atol=1e-9)


def test_cycle_minus_one():
    for n in range(3, 31):
        assert sp.multiplicity_of_minus_one(sp.cycle_spectrum(n)) == (2 if n % 3 == 0 else 0)


def test_necessary_conditions():
    assert sp.necessary_regular_cdm(gr.cycle(5)).refutes
    assert not sp.necessary_regular_cdm(gr.cycle(6)).refutes
    with pytest.raises(sp.SpectralError):
        sp.necessary_regular_cdm(gr.complete_bipartite(1, 2))
    assert sp.necessary_line_graph(gr.complete(4)).refutes
    assert not sp.necessary_line_graph(gr.cycle(6)).refutes
    with pytest.raises(sp.SpectralError):
        sp.necessary_line_graph(gr.complete(2))


def test_strongly_regular():
    assert sp.strongly_regular_params(gr.petersen()) == (3, 0, 1)
    assert sp.strongly_regular_params(gr.cycle(5)) == (2, 0, 1)
    assert sp.strongly_regular_params(gr.complete(5)) == (4, 3, None)
    assert sp.strongly_regular_params(gr.cycle(6)) is None
    assert sp.strongly_regular_cdm_test(gr.petersen()).refutes
    assert not sp.strongly_regular_cdm_test(gr.complete(5)).refutes
    with pytest.raises(sp.SpectralError):
        sp.strongly_regular_cdm_test(gr.cycle(6))


def test_ci_gap():
    assert sp.ci_gap_multiplicity(12, 2) == (0, 2, 2)
    assert sp.ci_gap_multiplicity(10, 2) == (4, 0, 4)
    assert sp.ci_gap_multiplicity(11, 3) == (0, 0, 0)
    assert sp.ci_gap_multiplicity(14, 3) == (6, 0, 6)
    assert sp.ci_gap_multiplicity(30, 2) == (4, 2, 6)
    with pytest.raises(sp.SpectralError):
        sp.ci_gap_multiplicity(8, 3)
    assert sp.gap_steps(3) == [1, 2, 4]


def test_cos_sum_roots():
    for k in range(1, 5):
        roots = sp.cos_sum_roots(k, 1)
        assert len(roots) == 2 * k
        assert all(abs(sp.cos_sum(x, k, 1) + 0.5) < 1e-12 for x in roots)
    assert len(sp.cos_sum_roots(3, 2)) == 8
    with pytest.raises(sp.SpectralError):
        sp.cos_sum_roots(1, 2)
    with pytest.raises(sp.SpectralError):
        sp.cos_sum_roots(2, 3)


def test_perfect_code():
    code = sp.find_perfect_code(gr.cycle(6))
    assert code is not None and len(code) == 2
    assert sp.find_perfect_code(gr.cycle(5)) is None
    assert sp.find_perfect_code(gr.complete(4)) == [0]
    assert sp.find_perfect_code(gr.petersen()) is None
