"""Bundle spec files and machine-readable reports.

Spec files are JSON objects::

    {"genus": 1,
     "summands": [{"degree": -1, "multiplicity": 1},
                  {"degree": 0, "multiplicity": 3, "trivial": true}],
     "r": 1}

or, with HN data given directly, ``"hn": [{"rank": 3, "degree": 0}, ...]``
in place of ``"summands"`` (head first).  ``r`` is optional.

Reports are plain dicts with a fixed key order.  Every rational is written
as a ``"p/q"`` string (``"p"`` when integral); ranks, degrees and indices are
JSON integers.  No floats appear anywhere.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from .errors import GrasshadriError, InvalidBundle
from .hn import (
    HNData,
    HNPiece,
    SplitBundle,
    Summand,
    hn_filtration,
    quotient_degree_bounds,
    zeta_if_aligned,
)
from .ns import (
    curve_cone_generators,
    nef_generators,
    pairing_matrix,
    prop1_check,
    pseff_generators,
    to_lm,
    h0_split,
    exterior_power_degrees,
    DivisorClass,
)
from .oracle import OracleResult
from .seshadri import STRATA, LevelAnalysis, SeshadriReport, SeshadriValue, Stratum

_RATIONAL = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


class SpecError(GrasshadriError, ValueError):
    """Malformed spec file; ``where`` names the line or field."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


def q(x: Union[int, Fraction]) -> str:
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL.match(str(text))
    if not m:
        raise ValueError(f"expected a rational 'p' or 'p/q', got {text!r}")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


@dataclass(frozen=True)
class BundleSpec:
    genus: int
    bundle: Optional[SplitBundle]
    hn: HNData
    r: Optional[int]
    raw: dict

    def echo(self) -> dict:
        out: dict[str, Any] = {"genus": self.genus}
        if self.bundle is not None:
            out["summands"] = [
                {"degree": s.degree, "multiplicity": s.multiplicity, "trivial": s.trivial}
                for s in self.bundle.summands
            ]
        else:
            out["hn"] = [{"rank": p.rank, "degree": p.degree} for p in self.hn.pieces]
        return out


def _int_field(obj: dict, key: str, where: str, *, required: bool = True, default=None) -> Any:
    if key not in obj:
        if required:
            raise SpecError(where, f"missing field {key!r}")
        return default
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise SpecError(f"{where}.{key}" if where != "$" else key, f"expected an integer, got {v!r}")
    return v


def parse_spec(data: Any) -> BundleSpec:
    if not isinstance(data, dict):
        raise SpecError("$", "top level must be a JSON object")
    unknown = set(data) - {"genus", "summands", "hn", "r"}
    if unknown:
        raise SpecError(sorted(unknown)[0], "unknown field")
    genus = _int_field(data, "genus", "$")
    if genus < 0:
        raise SpecError("genus", "must be >= 0")
    r = _int_field(data, "r", "$", required=False)
    if r is not None and r < 1:
        raise SpecError("r", "must be a positive integer")
    if ("summands" in data) == ("hn" in data):
        raise SpecError("$", "exactly one of 'summands' or 'hn' is required")

    try:
        if "summands" in data:
            items = data["summands"]
            if not isinstance(items, list) or not items:
                raise SpecError("summands", "expected a nonempty list")
            summands = []
            for i, item in enumerate(items):
                where = f"summands[{i}]"
                if not isinstance(item, dict):
                    raise SpecError(where, "expected an object")
                extra = set(item) - {"degree", "multiplicity", "trivial"}
                if extra:
                    raise SpecError(f"{where}.{sorted(extra)[0]}", "unknown field")
                deg = _int_field(item, "degree", where)
                mult = _int_field(item, "multiplicity", where, required=False, default=1)
                trivial = item.get("trivial", False)
                if not isinstance(trivial, bool):
                    raise SpecError(f"{where}.trivial", f"expected true/false, got {trivial!r}")
                if mult < 1:
                    raise SpecError(f"{where}.multiplicity", "must be >= 1")
                if trivial and deg != 0:
                    raise SpecError(f"{where}.trivial", "a trivial summand must have degree 0")
                summands.append(Summand(deg, mult, trivial))
            bundle = SplitBundle(tuple(summands), genus)
            hn = hn_filtration(bundle)
        else:
            items = data["hn"]
            if not isinstance(items, list) or not items:
                raise SpecError("hn", "expected a nonempty list")
            pieces = []
            for i, item in enumerate(items):
                where = f"hn[{i}]"
                if not isinstance(item, dict):
                    raise SpecError(where, "expected an object")
                extra = set(item) - {"rank", "degree"}
                if extra:
                    raise SpecError(f"{where}.{sorted(extra)[0]}", "unknown field")
                try:
                    pieces.append(HNPiece(_int_field(item, "rank", where), _int_field(item, "degree", where)))
                except InvalidBundle as exc:
                    raise SpecError(where, str(exc)) from None
            bundle = None
            hn = HNData(tuple(pieces), genus)
    except InvalidBundle as exc:
        raise SpecError("summands" if "summands" in data else "hn", str(exc)) from None
    return BundleSpec(genus, bundle, hn, r, data)


def load_spec(path: Union[str, Path]) -> BundleSpec:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecError(str(path), exc.strerror or str(exc)) from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None
    return parse_spec(data)


# ---- report sections -------------------------------------------------------


def hn_table(hn: HNData) -> list[dict]:
    return [
        {"index": i, "rank": p.rank, "degree": p.degree, "slope": q(p.slope)}
        for i, p in enumerate(hn.pieces, start=1)
    ]


def analysis_section(an: LevelAnalysis) -> dict:
    base, refined = quotient_degree_bounds(an.normalized, an.normalized_selection)
    zeta = zeta_if_aligned(an.hn, an.selection.r)
    return {
        "hn": hn_table(an.hn),
        "level": {
            "m": an.selection.m,
            "r": an.selection.r,
            "theta_raw": an.selection.theta,
            "alpha": an.alpha,
            "theta": an.theta,
        },
        "normalized_hn": hn_table(an.normalized),
        "aligned_head": None if zeta is None else {"c": zeta[0], "zeta": zeta[1]},
        "quotient_degree_bounds": {"all": q(base), "non_tail": q(refined)},
        "hypotheses": {
            "tail_gap": {
                "holds": an.sc2.holds,
                "slope_gap": q(an.sc2.slope_gap),
                "theta": q(an.sc2.theta),
            },
            "aligned_head": {
                "holds": an.sc1.holds,
                "r": an.sc1.r,
                "c": an.sc1.c,
                "zeta": an.sc1.zeta,
            },
        },
        "criterion": an.theorem,
    }


def _divisor(c: DivisorClass, theta: int) -> dict:
    lm = to_lm(c, theta)
    return {"O1": q(c.e_taut), "L": q(c.e_fib), "a": q(lm.a), "b": q(lm.b)}


def cones_section(an: LevelAnalysis) -> dict:
    theta = an.theta
    nef_l, nef_m = nef_generators(theta)
    zeta = zeta_if_aligned(an.normalized, an.selection.r)
    if zeta is None:
        pseff: Any = "unknown (no aligned level)"
    else:
        gl, gz = pseff_generators(zeta[1])
        pseff = {"zeta": zeta[1], "generators": [_divisor(gl, theta), _divisor(gz, theta)]}
    gs, gl_ = curve_cone_generators()
    return {
        "theta": theta,
        "basis_note": "O1/L: coefficients of [O(1)] and L; a/b: coefficients of L and M = [O(1)] - theta*L",
        "nef": [_divisor(nef_l, theta), _divisor(nef_m, theta)],
        "pseff": pseff,
        "mori": [
            {"name": "Gamma_s", "n_s": q(gs.n_s), "n_l": q(gs.n_l)},
            {"name": "Gamma_l", "n_s": q(gl_.n_s), "n_l": q(gl_.n_l)},
        ],
        "pairing_matrix": [[q(x) for x in row] for row in pairing_matrix(theta)],
    }


def value_dict(v: SeshadriValue) -> dict:
    return {"lower": q(v.lower), "upper": q(v.upper), "exact": v.exact}


def seshadri_section(rep: SeshadriReport) -> dict:
    return {
        "a": q(rep.a),
        "b": q(rep.b),
        "criterion": rep.theorem_used,
        "authoritative": rep.authoritative,
        "strata": {s.value: value_dict(rep.strata[s].value) for s in STRATA},
        "eps_one": q(rep.eps_one),
        "eps_inf": q(rep.eps_inf),
    }


def oracle_agrees(value: SeshadriValue, res: OracleResult) -> bool:
    # for an interval the oracle's families realize its lower end
    return res.min == value.lower


def oracle_section(box: int, res: Optional[OracleResult], value: Optional[SeshadriValue]) -> dict:
    if res is None:
        return {"box": box, "available": False, "agree": None}
    return {
        "box": box,
        "available": True,
        "min": q(res.min),
        "witness": {
            "family": res.witness.family,
            "n_s": res.witness.n_s,
            "n_l": res.witness.n_l,
            "mult": res.witness.mult,
        },
        "agree": oracle_agrees(value, res),
    }


def h0_section(spec: BundleSpec, an: LevelAnalysis) -> dict:
    """h^0(O(1)) on Gr(E) for the normalized twist, i.e. h^0 of the r-th wedge."""
    r = an.selection.r
    alpha = an.alpha
    lines = [
        Summand(s.degree - alpha, 1, (s.trivial and alpha == 0) or (spec.genus == 0 and s.degree == alpha))
        for s in spec.bundle.line_bundles()
    ]
    twisted = SplitBundle(tuple(lines), spec.genus)
    entries = exterior_power_degrees(twisted, r)
    # a degree-0 factor twisted by a non-identity bundle has unknown triviality
    h0 = h0_split(entries, spec.genus)
    uncertain = alpha != 0 and spec.genus > 0 and any(d == 0 for d, _ in entries)
    degrees: dict[int, int] = {}
    for d, _ in entries:
        degrees[d] = degrees.get(d, 0) + 1
    return {
        "r": r,
        "alpha": alpha,
        "wedge_degrees": [{"degree": d, "count": degrees[d]} for d in sorted(degrees, reverse=True)],
        "h0": {"value": h0.value, "exact": h0.exact and not uncertain},
    }


def prop1_section(spec: BundleSpec, r: int) -> dict:
    rep = prop1_check(spec.bundle if spec.bundle is not None else spec.hn, r)
    if not rep.hypothesis_holds:
        return {
            "hypothesis_holds": False,
            "r": r,
            "c": rep.c,
            "zeta": rep.zeta,
            "message": "unique-divisor hypothesis not satisfied",
        }
    return {
        "hypothesis_holds": True,
        "r": r,
        "c": rep.c,
        "zeta": rep.zeta,
        "alpha_twist": rep.alpha_twist,
        "divisor_class": {"O1": q(rep.divisor_class.e_taut), "L": q(rep.divisor_class.e_fib)},
        "effective": rep.class_is_effective,
        "unique": rep.unique,
        "h0": None if rep.h0 is None else {"value": rep.h0.value, "exact": rep.h0.exact},
    }


# ---- serialization ---------------------------------------------------------


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def render_text(report: dict) -> str:
    lines: list[str] = []
    req = report.get("seshadri", {}).get("requested")
    if req is not None:
        sec = report["seshadri"]
        val = req["lower"] if req["exact"] else f"[{req['lower']}, {req['upper']}]"
        lines.append(f"eps = {val} ({sec['criterion']}) at {req['stratum']}")
    _render(report, 0, lines)
    return "\n".join(lines) + "\n"


def _scalar(v: Any) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _render(obj: Any, depth: int, lines: list[str]) -> None:
    pad = "  " * depth
    for key, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{key}:")
            _render(v, depth + 1, lines)
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{key}:")
            for item in v:
                lines.append(pad + "  - " + ", ".join(f"{k}={_scalar(x)}" for k, x in item.items() if not isinstance(x, (dict, list))))
                nested = {k: x for k, x in item.items() if isinstance(x, (dict, list))}
                if nested:
                    _render(nested, depth + 2, lines)
        elif isinstance(v, list):
            lines.append(f"{pad}{key}: " + "  ".join(
                "[" + " ".join(_scalar(x) for x in row) + "]" if isinstance(row, list) else _scalar(row)
                for row in v
            ))
        else:
            lines.append(f"{pad}{key}: {_scalar(v)}")
