"""Seshadri constants of ample classes a*L + b*M on Gr(E).

Two criteria give exact answers:

* ``tail-gap``: on normalized data (theta in [-r, 0)) the slope gap
  slope(E_m/E_{m-1}) - slope(E_{m-1}/E_{m-2}) is at most theta.  Then
  Gamma_s is the only curve meeting O(1) negatively and
  eps(x) = a if a < b and x lies on Gamma_s, b otherwise.
* ``aligned-head``: some head E_c has rank r and r | degree(E_c).  Then
  eps(x) = b when b <= a; when a < b it is b off the base locus of |O(1)|,
  a on Gamma_s, and somewhere in [a, b] on the rest of the base locus.

``tail-gap`` takes precedence when both apply.  When neither applies only the
bounds [min(a, b), b] are reported, flagged as non-authoritative.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import HypothesisUnavailable, NotAmple
from .hn import (
    HNData,
    LevelSelection,
    Sc1Check,
    Sc2Check,
    check_sc1_hypothesis,
    check_sc2_hypothesis,
    normalize_twist,
    select_level,
)

Number = Union[int, Fraction]

TAIL_GAP = "tail-gap"
ALIGNED_HEAD = "aligned-head"
BOUNDS_ONLY = "bounds-only"


class Stratum(enum.Enum):
    ON_GAMMA_S = "gamma-s"
    BASE_LOCUS = "base-locus"
    GENERIC = "generic"

    @classmethod
    def parse(cls, text: str) -> "Stratum":
        try:
            return cls(text)
        except ValueError:
            raise ValueError(
                f"unknown stratum {text!r}; expected one of generic, base-locus, gamma-s"
            ) from None


# reporting order
STRATA = (Stratum.GENERIC, Stratum.BASE_LOCUS, Stratum.ON_GAMMA_S)


@dataclass(frozen=True)
class SeshadriValue:
    lower: Fraction
    upper: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lower", Fraction(self.lower))
        object.__setattr__(self, "upper", Fraction(self.upper))
        if self.lower > self.upper:
            raise ValueError(f"empty interval [{self.lower}, {self.upper}]")

    @classmethod
    def point(cls, v: Number) -> "SeshadriValue":
        return cls(v, v)

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def scaled(self, lam: Number) -> "SeshadriValue":
        return SeshadriValue(lam * self.lower, lam * self.upper)


@dataclass(frozen=True)
class LevelAnalysis:
    """Everything the engine derives from (HN data, r) before looking at (a, b)."""

    hn: HNData
    selection: LevelSelection
    normalized: HNData
    normalized_selection: LevelSelection
    alpha: int
    sc2: Sc2Check
    sc1: Sc1Check

    @property
    def theorem(self) -> str:
        if self.sc2.holds:
            return TAIL_GAP
        if self.sc1.holds:
            return ALIGNED_HEAD
        return BOUNDS_ONLY

    @property
    def theta(self) -> int:
        return self.normalized_selection.theta

    def horizontal_slope(self) -> int:
        """k such that curves meeting O(1) nonnegatively satisfy n_l >= k*n_s.

        Uses theta for the twist the applicable criterion works in: the
        [-r, 0) normalization for tail-gap, determinant-zero E_c for
        aligned-head.
        """
        if self.sc2.holds:
            return -self.theta
        if self.sc1.holds:
            return self.sc1.zeta - self.selection.theta
        raise HypothesisUnavailable("neither Seshadri criterion applies")


def analyze_level(hn: HNData, r: int) -> LevelAnalysis:
    sel = select_level(hn, r)
    norm, alpha = normalize_twist(hn, sel)
    nsel = select_level(norm, r)
    return LevelAnalysis(
        hn=hn,
        selection=sel,
        normalized=norm,
        normalized_selection=nsel,
        alpha=alpha,
        sc2=check_sc2_hypothesis(norm, nsel),
        sc1=check_sc1_hypothesis(hn, r),
    )


@dataclass(frozen=True)
class StratumResult:
    stratum: Stratum
    value: SeshadriValue
    theorem: str

    @property
    def authoritative(self) -> bool:
        return self.theorem != BOUNDS_ONLY


def _check_ample(a: Number, b: Number) -> tuple[Fraction, Fraction]:
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise NotAmple(f"a*L + b*M is ample only for a, b > 0; got a={a}, b={b}")
    return a, b


def seshadri_value(theorem: str, a: Fraction, b: Fraction, stratum: Stratum) -> SeshadriValue:
    """Case analysis for one stratum once the applicable criterion is known."""
    if theorem == TAIL_GAP:
        if a < b and stratum is Stratum.ON_GAMMA_S:
            return SeshadriValue.point(a)
        return SeshadriValue.point(b)
    if theorem == ALIGNED_HEAD:
        if b <= a or stratum is Stratum.GENERIC:
            return SeshadriValue.point(b)
        if stratum is Stratum.ON_GAMMA_S:
            return SeshadriValue.point(a)
        return SeshadriValue(a, b)
    return SeshadriValue(min(a, b), b)


def seshadri_at(
    hn: HNData,
    r: int,
    a: Number,
    b: Number,
    stratum: Stratum,
    analysis: Optional[LevelAnalysis] = None,
) -> StratumResult:
    a, b = _check_ample(a, b)
    analysis = analysis or analyze_level(hn, r)
    theorem = analysis.theorem
    return StratumResult(stratum, seshadri_value(theorem, a, b, stratum), theorem)


@dataclass(frozen=True)
class SeshadriReport:
    a: Fraction
    b: Fraction
    theorem_used: str
    strata: dict
    eps_one: Fraction
    eps_inf: Fraction
    analysis: LevelAnalysis

    @property
    def authoritative(self) -> bool:
        return self.theorem_used != BOUNDS_ONLY


def seshadri_summary(hn: HNData, r: int, a: Number, b: Number, strict: bool = False) -> SeshadriReport:
    """Per-stratum values plus eps(L, 1) (the sup) and eps(L) (the inf).

    With ``strict`` a bundle to which neither criterion applies raises
    HypothesisUnavailable instead of degrading to bounds.
    """
    a, b = _check_ample(a, b)
    analysis = analyze_level(hn, r)
    if strict and analysis.theorem == BOUNDS_ONLY:
        raise HypothesisUnavailable(
            "neither the tail-gap nor the aligned-head criterion holds; only bounds are known"
        )
    strata = {s: seshadri_at(hn, r, a, b, s, analysis) for s in STRATA}
    eps_one = max(res.value.upper for res in strata.values())
    eps_inf = min(res.value.lower for res in strata.values())
    return SeshadriReport(a, b, analysis.theorem, strata, eps_one, eps_inf, analysis)


def ruled_surface_hn(e: int) -> HNData:
    """HN data of a normalized rank-2 bundle with invariant e = -degree(E) > 0."""
    if e < 1:
        raise ValueError(f"e must be a positive integer, got {e}")
    return HNData.from_pairs([(1, 0), (1, -e)])


def ruled_surface(e: int, a: Number, b: Number) -> SeshadriReport:
    return seshadri_summary(ruled_surface_hn(e), 1, a, b)
