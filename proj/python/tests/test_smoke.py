from fractions import Fraction

import numpy as np
import pytest

import schurnorm as sn


def test_schur_norm_certificates():
    s = np.array([[4.0, 3.0], [3.0, 1.0]])
    r = sn.schur_norm(s)
    assert r["value"] == pytest.approx(4.0, abs=1e-8)
    # Haagerup vectors reproduce S: s_ij = <x_i, y_j>
    assert np.allclose(r["x"].conj() @ r["y"].T, s, atol=1e-6)
    assert r["lower"] <= r["value"] + r["tol"] <= r["upper"] + 2 * r["tol"]


def test_ones_minus_identity():
    for n in range(2, 6):
        a = np.ones((n, n)) - np.eye(n)
        assert sn.schur_norm(a)["value"] == pytest.approx(2 - 2 / n, abs=1e-6)


def test_flow():
    full = [(i, j) for i in range(3) for j in range(3)]
    assert sn.optimal_bound(3, 3, full)["m"] == 2
    assert sn.decompose(3, 3, full, 1, 1)["kind"] == "cut"
    m, (lo, hi) = sn.matrix_bound_interval(np.ones((4, 4)))
    assert m == pytest.approx(2 ** 0.5, rel=1e-5)


def test_kneser_and_symmetry():
    assert sn.kneser_schur_norm(2) == Fraction(8, 5)
    assert sn.kneser_eigenvalues(2) == [3, -2, 1]
    assert sn.cyclic_example_norm(3) == pytest.approx(4 / 3)
    assert sn.commutant_norm(5, [[1, 2, 3, 4, 0]], [1, 1, 0, 0, 0]) == pytest.approx(sn.cyclic_example_norm(5))
    assert sn.verify_scheme(5, 2)["ok"]


def test_patterns():
    assert sn.hankel_classify([2 ** k for k in range(11)], 2048)["m"] <= 2
    assert sn.lacunary_decompose(list(range(1, 33)))["max_count"] == 16
    r = sn.flat_sign_search(list(range(8)), 20000, 0, 1)
    assert r["sup_norm"] == pytest.approx(3.64503125981, abs=1e-9)


def test_errors():
    with pytest.raises(sn.SchurnormError) as info:
        sn.mathias_norm(np.diag([2.0, 1.0]))
    assert info.value.kind == "DiagonalNotScalar"
    with pytest.raises(ValueError):
        sn.flat_sign_search([], 10)
