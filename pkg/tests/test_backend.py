"""Backend dispatch: compiled and pure kernels must agree bit for bit."""

import random
import subprocess
import sys

import numpy as np
import pytest

from powergeom import backend

HAVE_COMPILED = backend._compiled is not None


def random_points(seed, n, lo=-1.5, hi=1.5):
    rng = random.Random(seed)
    return [(rng.uniform(lo, hi), rng.uniform(lo, hi)) for _ in range(n)]


@pytest.mark.skipif(not HAVE_COMPILED, reason="extension not built")
class TestCompiledAgainstPure:
    def test_scalar_slots_bitwise_identical(self):
        for code in (backend.KIND_REAL, backend.KIND_IMAGINARY,
                     backend.KIND_COMPLEX):
            for (a1, a2) in random_points(31 + code, 500):
                compiled = backend._compiled.unit_slots(code, a1, a2)
                pure = backend._unit_slots_py(code, a1, a2)
                assert tuple(compiled) == tuple(pure)

    def test_batch_matches_scalar(self):
        pts = random_points(37, 300)
        a1 = np.array([p[0] for p in pts])
        a2 = np.array([p[1] for p in pts])
        for code in range(3):
            batch = backend.batch_slots(code, a1, a2, threads=1)
            scalar = np.array([backend.unit_slots(code, x, y)
                               for x, y in pts])
            assert (batch == scalar).all()

    def test_threaded_batch_identical(self):
        pts = random_points(41, 999)
        a1 = np.array([p[0] for p in pts])
        a2 = np.array([p[1] for p in pts])
        base = backend.batch_slots(1, a1, a2, threads=1)
        for threads in (2, 3, 8):
            assert (backend.batch_slots(1, a1, a2, threads=threads)
                    == base).all()


class TestSelection:
    def test_active_backend_is_reported(self):
        assert backend.BACKEND_NAME in ("compiled", "python")

    def test_python_backend_forced_in_subprocess(self):
        code = (
            "import os; os.environ['POWERGEOM_BACKEND']='python';"
            "from powergeom import backend;"
            "assert backend.BACKEND_NAME == 'python';"
            "s = backend.unit_slots(0, 0.0, 0.0);"
            "assert s.f11 == -2.0 and s.f12 == 2.0;"
            "print('ok')"
        )
        proc = subprocess.run([sys.executable, "-c", code],
                              capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        assert proc.stdout.strip() == "ok"

    def test_bad_backend_request_fails_loudly(self):
        code = (
            "import os; os.environ['POWERGEOM_BACKEND']='fortran';"
            "import powergeom.backend"
        )
        proc = subprocess.run([sys.executable, "-c", code],
                              capture_output=True, text=True)
        assert proc.returncode != 0
        assert "POWERGEOM_BACKEND" in proc.stderr

    def test_thread_env_parsing(self, monkeypatch):
        monkeypatch.delenv("POWERGEOM_THREADS", raising=False)
        assert backend.default_threads() == 1
        monkeypatch.setenv("POWERGEOM_THREADS", "6")
        assert backend.default_threads() == 6
        monkeypatch.setenv("POWERGEOM_THREADS", "0")
        assert backend.default_threads() == 1

    def test_batch_rejects_mismatched_arrays(self):
        with pytest.raises(ValueError):
            backend.batch_slots(0, np.zeros(3), np.zeros(4))
