"""Harder-Narasimhan data of a non-semistable bundle on a curve.

Everything here works on the numerical skeleton of the filtration
``0 = E_0 < E_1 < ... < E_d = E``: the ranks and degrees of the graded
pieces ``E_i/E_{i-1}``.  Pieces are stored head first (largest slope first)
and indexed 1..d in the public API, to match the usual notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import (
    InvalidBundle,
    NotNormalized,
    RankNotAligned,
    RhoOutOfRange,
    SemistableInput,
)

__all__ = [
    "HNPiece",
    "HNData",
    "Summand",
    "SplitBundle",
    "LevelSelection",
    "Sc1Check",
    "Sc2Check",
    "hn_filtration",
    "slope",
    "select_level",
    "tail_ranks",
    "normalize_twist",
    "zeta_if_aligned",
    "theta_for_rank",
    "quotient_degree_bounds",
    "cover_quotient_floor",
    "check_sc1_hypothesis",
    "check_sc2_hypothesis",
]


@dataclass(frozen=True)
class HNPiece:
    rank: int
    degree: int

    def __post_init__(self) -> None:
        if not isinstance(self.rank, int) or not isinstance(self.degree, int):
            raise InvalidBundle("rank and degree must be integers")
        if self.rank < 1:
            raise InvalidBundle(f"HN piece rank must be >= 1, got {self.rank}")

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)


def slope(p: HNPiece) -> Fraction:
    """Exact slope degree/rank of a piece."""
    return Fraction(p.degree, p.rank)


@dataclass(frozen=True)
class HNData:
    pieces: tuple[HNPiece, ...]
    genus: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if not isinstance(self.genus, int) or self.genus < 0:
            raise InvalidBundle(f"genus must be a nonnegative integer, got {self.genus!r}")
        if len(self.pieces) < 2:
            raise SemistableInput("a non-semistable bundle has at least two HN pieces")
        for i in range(len(self.pieces) - 1):
            if not slope(self.pieces[i]) > slope(self.pieces[i + 1]):
                raise InvalidBundle(
                    f"HN slopes must strictly decrease: piece {i + 1} has slope "
                    f"{slope(self.pieces[i])}, piece {i + 2} has slope {slope(self.pieces[i + 1])}"
                )

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], genus: int = 0) -> "HNData":
        return cls(tuple(HNPiece(rk, deg) for rk, deg in pairs), genus)

    @property
    def d(self) -> int:
        return len(self.pieces)

    @property
    def rank(self) -> int:
        return sum(p.rank for p in self.pieces)

    @property
    def degree(self) -> int:
        return sum(p.degree for p in self.pieces)

    def piece(self, i: int) -> HNPiece:
        """1-based access, ``piece(i) = E_i/E_{i-1}``."""
        if not 1 <= i <= self.d:
            raise IndexError(i)
        return self.pieces[i - 1]

    def pairs(self) -> list[tuple[int, int]]:
        return [(p.rank, p.degree) for p in self.pieces]


@dataclass(frozen=True)
class Summand:
    """``multiplicity`` copies of a line bundle of the given degree."""

    degree: int
    multiplicity: int = 1
    trivial: bool = False


@dataclass(frozen=True)
class SplitBundle:
    summands: tuple[Summand, ...]
    genus: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "summands", tuple(self.summands))
        if not isinstance(self.genus, int) or self.genus < 0:
            raise InvalidBundle(f"genus must be a nonnegative integer, got {self.genus!r}")
        if not self.summands:
            raise InvalidBundle("a split bundle needs at least one summand")
        for s in self.summands:
            if not isinstance(s.degree, int) or not isinstance(s.multiplicity, int):
                raise InvalidBundle("summand degree and multiplicity must be integers")
            if s.multiplicity < 1:
                raise InvalidBundle(f"summand multiplicity must be >= 1, got {s.multiplicity}")
            if s.trivial and s.degree != 0:
                raise InvalidBundle(f"a trivial summand must have degree 0, got {s.degree}")
            if not s.trivial and s.degree == 0 and self.genus == 0:
                raise InvalidBundle("a nontrivial degree-0 line bundle needs genus >= 1")
        if len({s.degree for s in self.summands}) < 2:
            raise SemistableInput("all summands have the same degree; the bundle is semistable")

    @classmethod
    def from_tuples(cls, items: Iterable[Sequence], genus: int = 0) -> "SplitBundle":
        """Build from ``(degree, multiplicity[, trivial])`` tuples."""
        return cls(tuple(Summand(*item) for item in items), genus)

    @property
    def rank(self) -> int:
        return sum(s.multiplicity for s in self.summands)

    @property
    def degree(self) -> int:
        return sum(s.degree * s.multiplicity for s in self.summands)

    def line_bundles(self) -> list[Summand]:
        """Summands expanded to one entry per line bundle, highest degree first."""
        out = []
        for s in sorted(self.summands, key=lambda s: -s.degree):
            out.extend([Summand(s.degree, 1, s.trivial)] * s.multiplicity)
        return out


@dataclass(frozen=True)
class LevelSelection:
    m: int
    r: int
    theta: int


@dataclass(frozen=True)
class Sc2Check:
    """Verdict for ``slope(E_m/E_{m-1}) - slope(E_{m-1}/E_{m-2}) <= theta``."""

    holds: bool
    slope_gap: Fraction
    theta: int


@dataclass(frozen=True)
class Sc1Check:
    """Verdict for: some head E_c has rank r and r divides its degree."""

    holds: bool
    r: int
    c: Optional[int]
    zeta: Optional[int]


def hn_filtration(bundle: SplitBundle) -> HNData:
    """Group summands by degree; each distinct degree is one semistable piece."""
    by_degree: dict[int, int] = {}
    for s in bundle.summands:
        by_degree[s.degree] = by_degree.get(s.degree, 0) + s.multiplicity
    if len(by_degree) < 2:
        raise SemistableInput("all summands have the same degree; the bundle is semistable")
    pieces = tuple(HNPiece(rk, rk * deg) for deg, rk in sorted(by_degree.items(), reverse=True))
    return HNData(pieces, bundle.genus)


def tail_ranks(hn: HNData) -> dict[int, int]:
    """Map rank(E/E_{m-1}) -> m for every admissible level 2 <= m <= d."""
    out = {}
    acc = 0
    for m in range(hn.d, 1, -1):
        acc += hn.piece(m).rank
        out[acc] = m
    return out


def select_level(hn: HNData, r: int) -> LevelSelection:
    levels = tail_ranks(hn)
    if r not in levels:
        raise RankNotAligned(
            f"r={r} is not the rank of an HN tail; admissible values are {sorted(levels)}"
        )
    m = levels[r]
    theta = sum(hn.piece(i).degree for i in range(m, hn.d + 1))
    return LevelSelection(m, r, theta)


def normalize_twist(hn: HNData, sel: LevelSelection) -> tuple[HNData, int]:
    """Twist by a line bundle of degree -alpha so that theta lands in [-r, 0).

    Returns the twisted data and alpha.  The Grassmann bundle does not change
    under twisting, so neither do any cone or Seshadri answers.
    """
    alpha = (sel.theta + sel.r) // sel.r
    if alpha == 0:
        return hn, 0
    pieces = tuple(HNPiece(p.rank, p.degree - alpha * p.rank) for p in hn.pieces)
    return HNData(pieces, hn.genus), alpha


def zeta_if_aligned(hn: HNData, r: int) -> Optional[tuple[int, int]]:
    """Return ``(c, degree(E_c))`` for the head E_c of rank r with c < d, if any."""
    rank_acc = deg_acc = 0
    for c in range(1, hn.d):
        rank_acc += hn.piece(c).rank
        deg_acc += hn.piece(c).degree
        if rank_acc == r:
            return c, deg_acc
        if rank_acc > r:
            break
    return None


def theta_for_rank(hn: HNData, rho: int) -> Fraction:
    """Lowest possible degree of a rank-rho quotient (the nef-bound truncation).

    With t the smallest index such that rank(E/E_t) <= rho this is
    degree(E/E_t) + (rho - rank(E/E_t)) * slope(E_t/E_{t-1}).
    """
    n = hn.rank
    if not 1 <= rho < n:
        raise RhoOutOfRange(f"rho must satisfy 1 <= rho < {n}, got {rho}")
    tail_rank = n
    tail_deg = hn.degree
    for t in range(1, hn.d + 1):
        tail_rank -= hn.piece(t).rank
        tail_deg -= hn.piece(t).degree
        if tail_rank <= rho:
            return tail_deg + (rho - tail_rank) * slope(hn.piece(t))
    raise AssertionError("unreachable: rank(E/E_d) = 0")


def quotient_degree_bounds(hn: HNData, sel: LevelSelection) -> tuple[Fraction, Fraction]:
    """Lower bounds for rank-r quotients: every one, and every one but the HN tail."""
    if sel.m < 2:
        raise RankNotAligned("level m must be at least 2")
    base = Fraction(sel.theta)
    refined = base + slope(hn.piece(sel.m - 1)) - slope(hn.piece(sel.m))
    return base, refined


def cover_quotient_floor(hn: HNData, sel: LevelSelection, cover_degree: int = 1) -> Fraction:
    """Degree floor for non-tail rank-r quotients of a pullback under a cover of the given degree.

    Degrees of pulled back bundles scale by the cover degree, so this is the
    refined bound times ``cover_degree``; it is >= 0 whenever the second
    Seshadri hypothesis holds on normalized data.
    """
    if cover_degree < 1:
        raise ValueError("cover degree must be positive")
    return cover_degree * quotient_degree_bounds(hn, sel)[1]


def check_sc2_hypothesis(hn_normalized: HNData, sel: LevelSelection) -> Sc2Check:
    if not -sel.r <= sel.theta < 0:
        raise NotNormalized(f"theta={sel.theta} is not in [-{sel.r}, 0)")
    gap = slope(hn_normalized.piece(sel.m)) - slope(hn_normalized.piece(sel.m - 1))
    return Sc2Check(gap <= sel.theta, gap, sel.theta)


def check_sc1_hypothesis(hn: HNData, r: int) -> Sc1Check:
    found = zeta_if_aligned(hn, r)
    if found is None:
        return Sc1Check(False, r, None, None)
    c, zeta = found
    return Sc1Check(zeta % r == 0, r, c, zeta)
