import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grasshadri import _kernel_py, oracle

compiled = pytest.mark.skipif(oracle._compiled_scan is None, reason="compiled kernel not built")


def test_python_scan_small_case():
    # A=2, B=3, theta=-1 (k=1), on Gamma_s: the section wins with ratio 2
    assert _kernel_py.scan_box(2, 3, 1, True, 4) == (2, 1, 1, 1, 0, 1)
    # off Gamma_s the fiber line wins
    assert _kernel_py.scan_box(2, 3, 1, False, 4) == (3, 1, 0, 0, 1, 1)
    # unconstrained horizontal curves reach A
    assert _kernel_py.scan_box(1, 2, 0, False, 4)[:3] == (1, 1, 2)


def test_scan_is_exhaustive_min():
    # compare against a direct min over the same candidate set
    A, B, k, box = 5, 2, 2, 4
    cands = [(B * n_l, m) for n_l in range(1, box + 1) for m in range(1, n_l + 1)]
    cands += [(A * n_s + B * n_l, m) for n_s in range(1, box + 1) for m in range(1, n_s + 1)
              for n_l in range(k * n_s, k * n_s + box + 1)]
    from fractions import Fraction

    best = min(Fraction(n, d) for n, d in cands)
    num, den, *_ = _kernel_py.scan_box(A, B, k, False, box)
    assert Fraction(num, den) == best


@compiled
@settings(max_examples=200)
@given(st.integers(1, 60), st.integers(1, 60), st.integers(0, 6), st.booleans(), st.integers(1, 9))
def test_compiled_matches_python(A, B, k, include_s, box):
    assert oracle._compiled_scan(A, B, k, include_s, box) == _kernel_py.scan_box(A, B, k, include_s, box)


def test_dispatch_falls_back_on_overflow():
    big = 1 << 70
    res, used = oracle.scan(big, big, 1, True, 3)
    assert used == "python"
    assert res == _kernel_py.scan_box(big, big, 1, True, 3)


def test_forced_kernels():
    res, used = oracle.scan(3, 4, 1, False, 5, kernel="python")
    assert used == "python"
    if oracle._compiled_scan is not None:
        res2, used2 = oracle.scan(3, 4, 1, False, 5, kernel="cython")
        assert used2 == "cython" and res2 == res
        with pytest.raises(OverflowError):
            oracle.scan(1 << 70, 1, 1, False, 3, kernel="cython")


def test_benchmark_smoke(capsys):
    import importlib.util
    from pathlib import Path

    path = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_oracle.py"
    spec = importlib.util.spec_from_file_location("bench_oracle", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert mod.main(["--boxes", "2", "--repeat", "1"]) == 0
    assert "large coefficients" in capsys.readouterr().out
