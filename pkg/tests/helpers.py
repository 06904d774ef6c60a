"""Shared example bundles, random generators and brute-force oracles.

The oracles here deliberately avoid the package's formulas: they enumerate
split quotients or search integers directly.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from pathlib import Path

from hypothesis import strategies as st

from grasshadri import HNData, SplitBundle, hn_filtration

EXAMPLES_DIR = Path(__file__).resolve().parents[1] / "src" / "grasshadri" / "examples"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"

# L_{-1} + O^3 on a genus-1 curve
EX1 = SplitBundle.from_tuples([(-1, 1), (0, 3, True)], genus=1)
# L_{-1}^2 + O^2
EX2 = SplitBundle.from_tuples([(-1, 2), (0, 2, True)], genus=0)
# L_1^2 + L_{-1}^2
EX3 = SplitBundle.from_tuples([(1, 2), (-1, 2)], genus=0)
# L_{-1} + O^2 + L_0, L_0 nontrivial of degree 0
EX4 = SplitBundle.from_tuples([(-1, 1), (0, 2, True), (0, 1, False)], genus=1)

EXAMPLES = {"ex1": (EX1, 1), "ex2": (EX2, 2), "ex3": (EX3, 2), "ex4": (EX4, 1)}


def hn_of(name: str) -> HNData:
    return hn_filtration(EXAMPLES[name][0])


# ---- brute-force oracles ---------------------------------------------------


def line_degrees(bundle: SplitBundle) -> list[int]:
    return [s.degree for s in bundle.summands for _ in range(s.multiplicity)]


def split_quotient_degrees(bundle: SplitBundle, r: int):
    """Yield (sorted degree tuple, total degree) for every rank-r split quotient."""
    degs = line_degrees(bundle)
    for idx in combinations(range(len(degs)), r):
        chosen = tuple(sorted(degs[i] for i in idx))
        yield chosen, sum(chosen)


def min_split_quotient_degree(bundle: SplitBundle, r: int) -> int:
    return min(total for _, total in split_quotient_degrees(bundle, r))


def brute_alpha(theta: int, r: int) -> int:
    candidates = [a for a in range(-abs(theta) - 2 * r - 2, abs(theta) + 2 * r + 3)
                  if -r <= theta - a * r < 0]
    assert len(candidates) == 1
    return candidates[0]


def tail_sums(pairs):
    """All (rank, degree) tail sums E/E_{m-1}, m = 2..d, computed from scratch."""
    out = []
    for m in range(1, len(pairs)):
        tail = pairs[m:]
        out.append((sum(p[0] for p in tail), sum(p[1] for p in tail)))
    return out


# ---- random inputs -----------------------------------------------------------


def random_split_bundle(rng: random.Random, max_rank: int = 8, deg_range=(-5, 5)) -> SplitBundle:
    while True:
        n = rng.randint(2, max_rank)
        genus = rng.randint(0, 2)
        degs = [rng.randint(*deg_range) for _ in range(n)]
        if len(set(degs)) < 2:
            continue
        items = []
        for d in degs:
            trivial = d == 0 and (genus == 0 or rng.random() < 0.5)
            items.append((d, 1, trivial))
        return SplitBundle.from_tuples(items, genus)


def random_hn(rng: random.Random, max_pieces: int = 5, max_rank: int = 4) -> HNData:
    d = rng.randint(2, max_pieces)
    pieces = []
    prev = None
    for _ in range(d):
        rank = rng.randint(1, max_rank)
        if prev is None:
            deg = rng.randint(-20, 20)
        else:
            ceiling = -((-prev.numerator * rank) // prev.denominator)  # ceil(prev*rank)
            deg = ceiling - 1 - rng.randint(0, 6)
        pieces.append((rank, deg))
        prev = Fraction(deg, rank)
    return HNData.from_pairs(pieces, rng.randint(0, 3))


@st.composite
def hn_data(draw, max_pieces: int = 4, max_rank: int = 3):
    d = draw(st.integers(2, max_pieces))
    pieces = []
    prev = None
    for _ in range(d):
        rank = draw(st.integers(1, max_rank))
        if prev is None:
            deg = draw(st.integers(-15, 15))
        else:
            ceiling = -((-prev.numerator * rank) // prev.denominator)
            deg = ceiling - 1 - draw(st.integers(0, 5))
        pieces.append((rank, deg))
        prev = Fraction(deg, rank)
    return HNData.from_pairs(pieces, draw(st.integers(0, 3)))


@st.composite
def split_bundles(draw, max_rank: int = 8):
    genus = draw(st.integers(0, 2))
    degs = draw(st.lists(st.integers(-5, 5), min_size=2, max_size=max_rank).filter(lambda ds: len(set(ds)) > 1))
    items = []
    for d in degs:
        trivial = d == 0 and (genus == 0 or draw(st.booleans()))
        items.append((d, 1, trivial))
    return SplitBundle.from_tuples(items, genus)


positive_rationals = st.fractions(min_value=Fraction(1, 12), max_value=50, max_denominator=12)
