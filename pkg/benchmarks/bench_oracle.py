"""Time the oracle box scan in the compiled kernel against the Python fallback.

    python3 benchmarks/bench_oracle.py [--boxes 8 16 32 64] [--repeat 5]
"""

from __future__ import annotations

import argparse
import sys
import timeit

from grasshadri import oracle

# (A, B, k, include_s): scaled integer inputs typical of the example bundles
CASES = [
    ("tail-gap, on Gamma_s", 2, 3, 1, True),
    ("aligned-head, generic", 1, 2, 2, False),
    ("large coefficients", 997, 1009, 3, False),
]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--boxes", type=int, nargs="+", default=[8, 16, 32, 64])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    if oracle.kernel_name() != "cython":
        print("compiled kernel not built; only the Python fallback is timed", file=sys.stderr)

    print(f"{'case':<24}{'box':>5}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for label, A, B, k, include_s in CASES:
        for box in args.boxes:
            timings = {}
            results = {}
            for kernel in ("python", "cython"):
                if kernel == "cython" and oracle.kernel_name() != "cython":
                    continue
                call = lambda: oracle.scan(A, B, k, include_s, box, kernel=kernel)  # noqa: E731
                results[kernel] = call()[0]
                timings[kernel] = min(timeit.repeat(call, number=1, repeat=args.repeat)) * 1e3
            if len(results) == 2 and results["python"] != results["cython"]:
                print(f"kernel mismatch on {label}, box {box}", file=sys.stderr)
                return 1
            py = timings["python"]
            cy = timings.get("cython")
            cy_s = f"{cy:12.3f}" if cy is not None else f"{'-':>12}"
            speed = f"{py / cy:9.1f}x" if cy else f"{'-':>10}"
            print(f"{label:<24}{box:>5}{py:12.3f}{cy_s}{speed}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
