"""Brute-force Seshadri ratio oracle.

Instead of the closed-form case analysis this enumerates curve classes
``n_s*Gamma_s + n_l*Gamma_l`` with a multiplicity ``mult`` at the point,
restricted by the constraints an irreducible curve through a point of the
given stratum must satisfy, and minimizes ``(a*n_s + b*n_l)/mult``:

* fiber curves: n_s = 0, mult <= n_l (a degree-n_l curve in a Grassmannian);
* Gamma_s itself, only for points on it;
* other horizontal curves: mult <= n_s (Bezout against the fiber), and
  n_l >= k*n_s whenever the curve must meet O(1) nonnegatively.

The scan runs in a compiled kernel when it is importable and the scaled
integers fit in 64 bits, otherwise in the pure-Python fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Union

from . import _kernel_py
from .errors import HypothesisUnavailable
from .hn import HNData
from .seshadri import ALIGNED_HEAD, TAIL_GAP, LevelAnalysis, Stratum, _check_ample, analyze_level

try:
    from ._kernel import scan_box as _compiled_scan
except ImportError:  # pragma: no cover - depends on the build
    _compiled_scan = None

Number = Union[int, Fraction]

DEFAULT_BOX = 8
BOX_ENV = "GRASSHADRI_ORACLE_BOX"
FAMILIES = ("fiber", "gamma-s", "horizontal")

_INT64_HEADROOM = 1 << 62


def kernel_name() -> str:
    return "cython" if _compiled_scan is not None else "python"


def default_box() -> int:
    raw = os.environ.get(BOX_ENV)
    if raw is None or raw == "":
        return DEFAULT_BOX
    box = int(raw)
    if box < 1:
        raise ValueError(f"{BOX_ENV} must be a positive integer, got {raw!r}")
    return box


@dataclass(frozen=True)
class Witness:
    family: str
    n_s: int
    n_l: int
    mult: int


@dataclass(frozen=True)
class OracleResult:
    min: Fraction
    witness: Witness
    kernel: str


def _fits_int64(A: int, B: int, k: int, box: int) -> bool:
    biggest_num = A * box + B * (k * box + box)
    return biggest_num * box < _INT64_HEADROOM


def scan(A: int, B: int, k: int, include_s: bool, box: int, kernel: Optional[str] = None):
    """Dispatch the raw integer scan; ``kernel`` forces "python" or "cython"."""
    if kernel is None:
        kernel = "cython" if _compiled_scan is not None and _fits_int64(A, B, k, box) else "python"
    if kernel == "cython":
        if _compiled_scan is None:
            raise RuntimeError("compiled kernel is not available")
        if not _fits_int64(A, B, k, box):
            raise OverflowError("scaled inputs overflow the 64-bit kernel")
        return _compiled_scan(A, B, k, include_s, box), "cython"
    return _kernel_py.scan_box(A, B, k, include_s, box), "python"


def admissible_families(analysis: LevelAnalysis, stratum: Stratum) -> tuple[int, bool]:
    """Return (k, include_gamma_s) for the horizontal-curve constraint n_l >= k*n_s."""
    theorem = analysis.theorem
    if theorem == TAIL_GAP:
        return analysis.horizontal_slope(), stratum is Stratum.ON_GAMMA_S
    if theorem == ALIGNED_HEAD:
        if stratum is Stratum.GENERIC:
            # off the base locus, O(1) has a section not vanishing on the curve
            return analysis.horizontal_slope(), False
        return 0, stratum is Stratum.ON_GAMMA_S
    raise HypothesisUnavailable("the oracle needs the tail-gap or aligned-head criterion")


def oracle_min_ratio(
    hn: HNData,
    r: int,
    a: Number,
    b: Number,
    stratum: Stratum,
    box: Optional[int] = None,
    kernel: Optional[str] = None,
) -> OracleResult:
    a, b = _check_ample(a, b)
    box = default_box() if box is None else box
    if box < 1:
        raise ValueError("box must be a positive integer")
    k, include_s = admissible_families(analyze_level(hn, r), stratum)
    scale = lcm(a.denominator, b.denominator)
    A, B = int(a * scale), int(b * scale)
    (num, den, fam, n_s, n_l, mult), used = scan(A, B, k, include_s, box, kernel)
    return OracleResult(Fraction(num, den * scale), Witness(FAMILIES[fam], n_s, n_l, mult), used)
