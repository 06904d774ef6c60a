"""Neron-Severi lattice of Gr(E), curve classes, cones and section counts.

Divisor classes are stored in the basis ([O(1)], L) where L is the fiber
class of Gr(E) -> X.  The nef basis is (L, M) with M = [O(1)] - theta*L;
curve classes are written over the Mori generators (Gamma_s, Gamma_l).
All coefficients are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Union

from .errors import BelowThetaBound, ZetaUnavailable
from .hn import HNData, SplitBundle, Summand, check_sc1_hypothesis, hn_filtration

Number = Union[int, Fraction]

__all__ = [
    "DivisorClass",
    "LMCoords",
    "CurveClass",
    "SectionCount",
    "Prop1Report",
    "GAMMA_S",
    "GAMMA_L",
    "to_lm",
    "from_lm",
    "pair",
    "pairing_matrix",
    "is_nef",
    "is_ample",
    "is_pseff",
    "nef_generators",
    "pseff_generators",
    "curve_cone_generators",
    "section_class",
    "exterior_power_degrees",
    "h0_estimate",
    "h0_split",
    "prop1_check",
]


@dataclass(frozen=True)
class DivisorClass:
    e_taut: Fraction
    e_fib: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "e_taut", Fraction(self.e_taut))
        object.__setattr__(self, "e_fib", Fraction(self.e_fib))

    @classmethod
    def fiber(cls) -> "DivisorClass":
        return cls(0, 1)

    @classmethod
    def tautological(cls) -> "DivisorClass":
        return cls(1, 0)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.e_taut + other.e_taut, self.e_fib + other.e_fib)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.e_taut - other.e_taut, self.e_fib - other.e_fib)

    def __rmul__(self, k: Number) -> "DivisorClass":
        return DivisorClass(k * self.e_taut, k * self.e_fib)


@dataclass(frozen=True)
class LMCoords:
    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))


@dataclass(frozen=True)
class CurveClass:
    n_s: Fraction
    n_l: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "n_s", Fraction(self.n_s))
        object.__setattr__(self, "n_l", Fraction(self.n_l))

    @property
    def effective(self) -> bool:
        return self.n_s >= 0 and self.n_l >= 0


GAMMA_S = CurveClass(1, 0)
GAMMA_L = CurveClass(0, 1)


@dataclass(frozen=True)
class SectionCount:
    """h^0 value; ``exact=False`` means ``value`` is only a lower bound."""

    value: int
    exact: bool


def to_lm(c: DivisorClass, theta: int) -> LMCoords:
    return LMCoords(c.e_fib + theta * c.e_taut, c.e_taut)


def from_lm(lm: LMCoords, theta: int) -> DivisorClass:
    return DivisorClass(lm.b, lm.a - theta * lm.b)


def pair(c: DivisorClass, gamma: CurveClass, theta: int) -> Fraction:
    # O(1).Gamma_s = theta, O(1).Gamma_l = 1, L.Gamma_s = 1, L.Gamma_l = 0
    return c.e_taut * (theta * gamma.n_s + gamma.n_l) + c.e_fib * gamma.n_s


def nef_generators(theta: int) -> tuple[DivisorClass, DivisorClass]:
    """(L, M) with M = [O(1)] - theta*L."""
    return DivisorClass.fiber(), DivisorClass(1, -theta)


def curve_cone_generators() -> tuple[CurveClass, CurveClass]:
    return GAMMA_S, GAMMA_L


def pairing_matrix(theta: int) -> list[list[Fraction]]:
    """Rows (L, M), columns (Gamma_s, Gamma_l)."""
    return [[pair(D, g, theta) for g in curve_cone_generators()] for D in nef_generators(theta)]


def is_nef(c: DivisorClass, theta: int) -> bool:
    lm = to_lm(c, theta)
    return lm.a >= 0 and lm.b >= 0


def is_ample(c: DivisorClass, theta: int) -> bool:
    lm = to_lm(c, theta)
    return lm.a > 0 and lm.b > 0


def pseff_generators(zeta: Optional[int]) -> tuple[DivisorClass, DivisorClass]:
    if zeta is None:
        raise ZetaUnavailable("no HN head has rank r; pseudo-effective cone not determined")
    return DivisorClass.fiber(), DivisorClass(1, -zeta)


def is_pseff(c: DivisorClass, zeta: Optional[int]) -> bool:
    if zeta is None:
        raise ZetaUnavailable("no HN head has rank r; pseudo-effective cone not determined")
    return c.e_taut >= 0 and c.e_fib + zeta * c.e_taut >= 0


def section_class(delta: int, theta: int) -> CurveClass:
    """Class of the section of Gr(E) -> X given by a rank-r quotient of degree delta."""
    if delta < theta:
        raise BelowThetaBound(f"a rank-r quotient has degree >= theta={theta}, got {delta}")
    return CurveClass(1, delta - theta)


def _wedge_members(bundle: SplitBundle, r: int):
    lines = bundle.line_bundles()
    if not 0 <= r <= len(lines):
        raise ValueError(f"r must be between 0 and {len(lines)}")
    for idx in combinations(range(len(lines)), r):
        yield idx, [lines[i] for i in idx]


def exterior_power_degrees(bundle: SplitBundle, r: int) -> list[tuple[int, bool]]:
    """Line-bundle summands of the r-th exterior power, one per r-subset.

    A summand is flagged trivial only when all its factors are trivial; a
    product involving a nontrivial degree-0 factor is treated as nontrivial.
    """
    return [
        (sum(s.degree for s in members), all(s.trivial for s in members))
        for _, members in _wedge_members(bundle, r)
    ]


def h0_estimate(degree: int, trivial: bool, genus: int) -> SectionCount:
    """Riemann-Roch style h^0 of a line bundle, generic when not determined."""
    if trivial and degree != 0:
        raise ValueError("a trivial line bundle has degree 0")
    if degree < 0:
        return SectionCount(0, True)
    if degree == 0:
        return SectionCount(1 if trivial or genus == 0 else 0, True)
    if genus == 0:
        return SectionCount(degree + 1, True)
    if degree > 2 * genus - 2:
        return SectionCount(degree - genus + 1, True)
    return SectionCount(max(degree - genus + 1, 0), False)


def h0_split(entries, genus: int) -> SectionCount:
    """Sum of h0_estimate over ``(degree, trivial)`` entries."""
    total = 0
    exact = True
    for degree, trivial in entries:
        sc = h0_estimate(degree, trivial, genus)
        total += sc.value
        exact = exact and sc.exact
    return SectionCount(total, exact)


@dataclass(frozen=True)
class Prop1Report:
    hypothesis_holds: bool
    r: int
    c: Optional[int]
    zeta: Optional[int]
    alpha_twist: Optional[int]
    class_is_effective: Optional[bool]
    unique: Optional[bool]
    divisor_class: Optional[DivisorClass]
    h0: Optional[SectionCount]


def prop1_check(bundle: Union[SplitBundle, HNData], r: int) -> Prop1Report:
    """Effectivity and uniqueness of the divisor in class [O(1)] - zeta*L.

    For split input the section count of O(1) after twisting E_c to
    determinant zero is computed through the exterior-power expansion.
    """
    hn = hn_filtration(bundle) if isinstance(bundle, SplitBundle) else bundle
    sc1 = check_sc1_hypothesis(hn, r)
    if not sc1.holds:
        return Prop1Report(False, r, sc1.c, sc1.zeta, None, None, None, None, None)
    alpha = sc1.zeta // r
    h0 = None
    if isinstance(bundle, SplitBundle):
        h0 = _prop1_h0(bundle, r, alpha)
    return Prop1Report(
        True, r, sc1.c, sc1.zeta, alpha, True, True, DivisorClass(1, -sc1.zeta), h0
    )


def _prop1_h0(bundle: SplitBundle, r: int, alpha: int) -> SectionCount:
    # The twisting line bundle is an r-th root of det(E_c)^*; its degree is
    # -alpha but it may be a nontrivial root, so triviality flags survive only
    # when there is no twist.  On genus 0 every degree-0 bundle is trivial.
    # The head subset E_c (first r lines, highest degrees) is trivial by construction.
    lines = [
        Summand(s.degree - alpha, 1, (s.trivial and alpha == 0) or
                (bundle.genus == 0 and s.degree == alpha))
        for s in bundle.line_bundles()
    ]
    head = tuple(range(r))
    entries = []
    for idx in combinations(range(len(lines)), r):
        members = [lines[i] for i in idx]
        trivial = idx == head or all(s.trivial for s in members)
        entries.append((sum(s.degree for s in members), trivial))
    return h0_split(entries, bundle.genus)
