import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from spechtb import _kernels_py, kernels

compiled = pytest.importorskip("spechtb._kernels", reason="compiled extension not built")

masks = st.integers(0, 13).flatmap(lambda n: st.tuples(st.integers(0, (1 << n) - 1), st.just(n)))


@given(masks)
def test_dominant_parity(mn):
    assert compiled.is_dominant(*mn) == _kernels_py.is_dominant(*mn)


@given(masks)
def test_iota_parity(mn):
    mask, n = mn
    if _kernels_py.is_dominant(mask, n):
        assert list(compiled.iota(mask, n)) == list(_kernels_py.iota(mask, n))


@given(masks)
def test_suitable_parity(mn):
    assert sorted(compiled.suitable(*mn)) == sorted(_kernels_py.suitable(*mn))
    assert compiled.count_suitable(*mn) == _kernels_py.count_suitable(*mn)


def test_long_sequences_fall_back():
    # beyond 62 signs the dispatcher must use the Python kernel
    n = 70
    mask = sum(1 << k for k in range(0, n, 2))
    assert kernels.is_dominant(mask, n) == _kernels_py.is_dominant(mask, n)


def test_env_forces_python():
    code = "from spechtb import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, SPECHTB_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_benchmark_script_runs(capsys):
    import runpy
    from pathlib import Path

    script = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    mod = runpy.run_path(str(script))
    mod["main"](["--lengths", "6", "8", "--samples", "3", "--repeat", "1"])
    out = capsys.readouterr().out
    assert out.splitlines()[0].split()[0] == "n" and len(out.splitlines()) == 3
