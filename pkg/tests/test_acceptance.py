"""Exit criteria.  Every check is exact rational equality; no tolerances."""

import json
import random
from fractions import Fraction

from grasshadri import (
    DivisorClass,
    HNData,
    Stratum,
    check_sc1_hypothesis,
    check_sc2_hypothesis,
    hn_filtration,
    is_nef,
    normalize_twist,
    oracle_min_ratio,
    pair,
    prop1_check,
    quotient_degree_bounds,
    ruled_surface,
    section_class,
    select_level,
    seshadri_at,
    seshadri_summary,
    slope,
)
from grasshadri import cli
from grasshadri.hn import tail_ranks
from grasshadri.ns import GAMMA_L, GAMMA_S, exterior_power_degrees, h0_split, pairing_matrix
from grasshadri.oracle import OracleResult, Witness
from grasshadri.seshadri import STRATA

from helpers import (
    EX1,
    EX2,
    EX3,
    EX4,
    EXAMPLES,
    EXAMPLES_DIR,
    GOLDEN_DIR,
    line_degrees,
    random_hn,
    random_split_bundle,
    split_quotient_degrees,
)
from test_cli import SESHADRI_ARGS

GS, BL, GEN = Stratum.ON_GAMMA_S, Stratum.BASE_LOCUS, Stratum.GENERIC
O1 = DivisorClass.tautological()


def test_criterion_01_example_one(criterion):
    hn = hn_filtration(EX1)
    sel = select_level(hn, 1)
    sc2 = check_sc2_hypothesis(hn, sel)
    rep = seshadri_summary(hn, 1, 2, 3)
    ok = (
        sel.theta == -1
        and sc2.holds
        and sc2.slope_gap == sel.theta == -1
        and rep.strata[GS].value.exact and rep.strata[GS].value.lower == 2
        and all(rep.strata[s].value.exact and rep.strata[s].value.lower == 3 for s in (GEN, BL))
        and rep.eps_one == 3
        and rep.eps_inf == 2
    )
    criterion(1, "EX1 theta=-1, tail-gap equality, eps 2 on Gamma_s / 3 elsewhere", ok)
    assert ok


def test_criterion_02_example_two(criterion):
    hn = hn_filtration(EX2)
    sel = select_level(hn, 2)
    sc2 = check_sc2_hypothesis(hn, sel)
    sc1 = check_sc1_hypothesis(hn, 2)
    p1 = prop1_check(EX2, 2)
    ok = (
        sel.theta == -2
        and not sc2.holds and sc2.slope_gap == -1
        and sc1.holds and sc1.zeta == 0
        and pair(O1, section_class(-1, sel.theta), sel.theta) == -1
        and p1.unique and p1.h0.value == 1 and p1.h0.exact
    )
    criterion(2, "EX2 theta=-2, tail-gap fails, aligned-head holds, h0=1", ok)
    assert ok


def test_criterion_03_example_three(criterion):
    hn = hn_filtration(EX3)
    sel = select_level(hn, 2)
    sc2 = check_sc2_hypothesis(hn, sel)
    sc1 = check_sc1_hypothesis(hn, 2)
    p1 = prop1_check(EX3, 2)
    ok = (
        sel.theta == -2
        and sc2.holds and sc2.slope_gap == sel.theta
        and sc1.zeta == 2 and sc1.c == 1
        and p1.hypothesis_holds and p1.alpha_twist == 1
    )
    criterion(3, "EX3 theta=-2, tail-gap equality, zeta=2, twist 1", ok)
    assert ok


def test_criterion_04_example_four(criterion):
    hn = hn_filtration(EX4)
    sel = select_level(hn, 1)
    sc = h0_split(exterior_power_degrees(EX4, 1), EX4.genus)
    ok = (
        EX4.genus >= 1
        and sel.theta == -1
        and check_sc2_hypothesis(hn, sel).holds
        and sc.value == 2 and sc.exact
    )
    criterion(4, "EX4 theta=-1, tail-gap holds, h0(O(1))=2 exact", ok)
    assert ok


def test_criterion_05_oracle_equivalence(criterion):
    cases = exact_cases = mismatches = 0
    for name, (bundle, r) in sorted(EXAMPLES.items()):
        hn = hn_filtration(bundle)
        for a in range(1, 6):
            for b in range(1, 6):
                for s in STRATA:
                    cases += 1
                    v = seshadri_at(hn, r, a, b, s).value
                    got = oracle_min_ratio(hn, r, a, b, s, box=8).min
                    exact_cases += v.exact
                    # on an interval stratum the oracle realizes the lower end
                    mismatches += got != v.lower or (not v.exact and v.upper != b)
    ok = cases == 300 and mismatches == 0
    criterion(5, "oracle (box 8) equals closed form", ok,
              f"{cases} cases, {exact_cases} exact, {mismatches} mismatches")
    assert ok


def test_criterion_06_split_quotient_bounds(criterion):
    rng = random.Random(20261018)
    bundles = [random_split_bundle(rng, max_rank=8, deg_range=(-5, 5)) for _ in range(50)]
    checked = failures = 0
    for bundle in bundles:
        hn = hn_filtration(bundle)
        tail_sorted = sorted(line_degrees(bundle))
        for r in tail_ranks(hn):
            sel = select_level(hn, r)
            base, refined = quotient_degree_bounds(hn, sel)
            quotients = list(split_quotient_degrees(bundle, r))
            checked += len(quotients)
            if min(t for _, t in quotients) != sel.theta or base != sel.theta:
                failures += 1
            tail = tuple(tail_sorted[:r])
            failures += sum(1 for chosen, t in quotients if chosen != tail and t < refined)
    ok = failures == 0 and len(bundles) == 50
    criterion(6, "split quotients: min degree = theta, non-tail >= refined bound", ok,
              f"50 bundles, {checked} quotients")
    assert ok


def test_criterion_07_cone_duality(criterion):
    rng = random.Random(7)
    thetas = []
    for _ in range(100):
        r = rng.randint(1, 12)
        thetas.append(rng.randint(-r, -1))  # normalized: theta in [-r, 0)
    identity = all(pairing_matrix(t) == [[1, 0], [0, 1]] for t in thetas)
    grid = [Fraction(k, 3) for k in range(-10, 11)]
    mismatches = 0
    for t in thetas[:5]:
        for x in grid:
            for y in grid:
                c = DivisorClass(x, y)
                nonneg = pair(c, GAMMA_S, t) >= 0 and pair(c, GAMMA_L, t) >= 0
                mismatches += is_nef(c, t) != nonneg
    ok = identity and mismatches == 0 and len(grid) == 21
    criterion(7, "pairing matrix identity; nef iff nonnegative on Mori generators", ok,
              "100 theta values, 21x21 grid")
    assert ok


def test_criterion_08_normalization(criterion):
    rng = random.Random(8)
    failures = 0
    for _ in range(100):
        hn = random_hn(rng)
        r = rng.choice(sorted(tail_ranks(hn)))
        out, alpha = normalize_twist(hn, select_level(hn, r))
        nsel = select_level(out, r)
        gaps = [slope(p) - slope(q) for p, q in zip(hn.pieces, hn.pieces[1:])]
        new_gaps = [slope(p) - slope(q) for p, q in zip(out.pieces, out.pieces[1:])]
        if not (-r <= nsel.theta < 0) or gaps != new_gaps or normalize_twist(out, nsel)[1] != 0:
            failures += 1
    ok = failures == 0
    criterion(8, "normalization lands in [-r, 0), keeps slope gaps, idempotent", ok, "100 HN data")
    assert ok


def test_criterion_09_rank_two(criterion):
    failures = 0
    for e in range(1, 5):
        hn = HNData.from_pairs([(1, 0), (1, -e)])
        for a in range(1, 5):
            for b in range(1, 5):
                got, want = ruled_surface(e, a, b), seshadri_summary(hn, 1, a, b)
                if any(got.strata[s] != want.strata[s] for s in STRATA) or got != want:
                    failures += 1
    ok = failures == 0
    criterion(9, "ruled surface adapter matches explicit rank-2 HN data", ok, "64 cases")
    assert ok


def test_criterion_10_cli_contract(criterion, tmp_path, capsys, monkeypatch):
    goldens = 0
    golden_ok = True
    for name in ("ex1", "ex2", "ex3", "ex4"):
        spec = str(EXAMPLES_DIR / f"{name}.json")
        for command in ("analyze", "cones", "seshadri", "h0"):
            extra = SESHADRI_ARGS[name] + ["--oracle"] if command == "seshadri" else []
            out = tmp_path / f"{name}_{command}.json"
            code = cli.main([command, spec, *extra, "--json", str(out)])
            golden_ok &= code == 0 and out.read_bytes() == (GOLDEN_DIR / f"{name}_{command}.json").read_bytes()
            goldens += 1

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"genus": 0, "summands": [{"degree": "minus one"}, {"degree": 0}]}))
    exit_malformed = cli.main(["analyze", str(bad)])

    none = tmp_path / "none.json"
    none.write_text(json.dumps({"genus": 0, "hn": [{"rank": 1, "degree": 0}, {"rank": 3, "degree": -2}], "r": 3}))
    exit_strict = cli.main(["seshadri", str(none), "--a", "1", "--b", "2", "--strict"])

    monkeypatch.setattr(
        cli.oracle_mod, "oracle_min_ratio",
        lambda *args, **kw: OracleResult(Fraction(1, 9), Witness("fiber", 0, 1, 9), "python"),
    )
    exit_disagree = cli.main(["seshadri", str(EXAMPLES_DIR / "ex1.json"), "--a", "2", "--b", "3", "--oracle"])
    capsys.readouterr()

    ok = golden_ok and goldens == 16 and (exit_malformed, exit_strict, exit_disagree) == (1, 2, 3)
    criterion(10, "CLI goldens byte-identical; exit codes 1/2/3", ok,
              f"{goldens} goldens, exits {exit_malformed}/{exit_strict}/{exit_disagree}")
    assert ok
