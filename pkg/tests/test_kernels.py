"""Backend selection and numba/numpy agreement tests."""

import numpy as np
import pytest

from fracrelax import _kernels
from fracrelax.problems import make_power_problem
from fracrelax.solver import solve


class TestActiveBackend:
    def test_default_prefers_numba(self, monkeypatch):
        monkeypatch.delenv("FRACRELAX_BACKEND", raising=False)
        expect = "numba" if _kernels.HAVE_NUMBA else "numpy"
        assert _kernels.active_backend() == expect

    def test_explicit_numpy(self, monkeypatch):
        monkeypatch.setenv("FRACRELAX_BACKEND", "numpy")
        assert _kernels.active_backend() == "numpy"

    def test_auto(self, monkeypatch):
        monkeypatch.setenv("FRACRELAX_BACKEND", "auto")
        assert _kernels.active_backend() in ("numba", "numpy")

    def test_invalid_raises(self, monkeypatch):
        monkeypatch.setenv("FRACRELAX_BACKEND", "cuda")
        with pytest.raises(ValueError):
            _kernels.active_backend()

    @pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not importable")
    def test_explicit_numba(self, monkeypatch):
        monkeypatch.setenv("FRACRELAX_BACKEND", "numba")
        assert _kernels.active_backend() == "numba"


@pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not importable")
class TestBackendAgreement:
    @pytest.mark.parametrize("scheme", ["A", "A1", "A2", "A3", "A4"])
    def test_solutions_agree(self, scheme, monkeypatch):
        prob = make_power_problem(4.0, 0.5)
        monkeypatch.setenv("FRACRELAX_BACKEND", "numba")
        u_nb = solve(prob, scheme, 256).values
        monkeypatch.setenv("FRACRELAX_BACKEND", "numpy")
        u_np = solve(prob, scheme, 256).values
        assert float(np.max(np.abs(u_nb - u_np))) < 1e-13

    def test_raw_recurrence_agreement(self):
        rng = np.random.default_rng(42)
        n = 200
        forcing = rng.standard_normal(n + 1)
        weights = np.zeros(n + 1)
        weights[1:] = np.arange(1, n + 1, dtype=float) ** (-0.5)
        corr = np.array([0.7, -0.3])
        a = _kernels.recurrence_numpy(forcing, weights, corr, 0, 1.77, 0.07)
        b = _kernels.recurrence_numba(forcing, weights, corr, 0, 1.77, 0.07)
        assert np.allclose(a, b, rtol=0.0, atol=1e-12)


class TestDeterminism:
    def test_repeated_runs_identical(self):
        prob = make_power_problem(4.0, 0.5)
        u1 = solve(prob, "A2", 128).values
        u2 = solve(prob, "A2", 128).values
        assert np.array_equal(u1, u2)
