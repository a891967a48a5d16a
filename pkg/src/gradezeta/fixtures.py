"""Fixture corpus: published numbers with their sources, and a verifier.

A fixture file is UTF-8 JSON holding either one record or a list of records::

    {"id": "veronese-b2", "descriptor": "veronese:2",
     "expected": {"exponents": ["4", "-3", ...], "degree": "3"},
     "tolerance": {}, "provenance": "TAG: quote"}

Exact values are strings ("-3", "1/6", "true"); lists are lists of strings.
Float-valued keys must have an entry in ``tolerance``. ``provenance`` is one
"TAG: quote" string or a map from expected key to such a string.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Callable

from . import combinat, eulerprod, hilbert, regularize
from .series import IntPoly, LaurentPoly

__all__ = [
    "FixtureError",
    "FixtureRecord",
    "FixtureReport",
    "KeyResult",
    "default_fixture_dir",
    "load_fixtures",
    "verify_all",
    "verify_fixture",
]

ENV_VAR = "GRADEZETA_FIXTURES"
_PROVENANCE_RE = re.compile(r"^[A-Z]+: \S")
_REQUIRED = ("id", "descriptor", "expected", "provenance")


class FixtureError(ValueError):
    """Malformed fixture file or unresolvable record."""


@dataclass(frozen=True)
class FixtureRecord:
    id: str
    descriptor: str
    expected: dict[str, Any]
    provenance: str | dict[str, str]
    tolerance: dict[str, float] = field(default_factory=dict)
    source: str = ""

    def provenance_for(self, key: str) -> str:
        if isinstance(self.provenance, str):
            return self.provenance
        return self.provenance.get(key, "")


def default_fixture_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(str(resources.files("gradezeta") / "data" / "fixtures"))


def _line_of(text: str, rid: str) -> int:
    needle = f'"{rid}"'
    for lineno, line in enumerate(text.splitlines(), 1):
        if needle in line:
            return lineno
    return 1


def _check_record(obj: Any, where: str) -> FixtureRecord:
    if not isinstance(obj, dict):
        raise FixtureError(f"{where}: record must be an object")
    missing = [k for k in _REQUIRED if k not in obj]
    if missing:
        raise FixtureError(f"{where}: missing field(s) {', '.join(missing)}")
    unknown = set(obj) - set(_REQUIRED) - {"tolerance"}
    if unknown:
        raise FixtureError(f"{where}: unknown field(s) {', '.join(sorted(unknown))}")
    expected, tol, prov = obj["expected"], obj.get("tolerance", {}), obj["provenance"]
    if not isinstance(obj["id"], str) or not obj["id"]:
        raise FixtureError(f"{where}: id must be a nonempty string")
    if not isinstance(expected, dict) or not expected:
        raise FixtureError(f"{where}: expected must be a nonempty object")
    for key, value in expected.items():
        if isinstance(value, list):
            if not all(isinstance(v, str) for v in value):
                raise FixtureError(f"{where}: expected[{key!r}] must hold strings")
        elif not isinstance(value, str):
            raise FixtureError(f"{where}: expected[{key!r}] must be a string")
    if not isinstance(tol, dict) or not all(isinstance(v, (int, float)) for v in tol.values()):
        raise FixtureError(f"{where}: tolerance must map keys to numbers")
    if set(tol) - set(expected):
        raise FixtureError(f"{where}: tolerance for unknown key(s) {sorted(set(tol) - set(expected))}")
    tags = [prov] if isinstance(prov, str) else list(prov.values()) if isinstance(prov, dict) else None
    if tags is None or not all(isinstance(t, str) and _PROVENANCE_RE.match(t) for t in tags):
        raise FixtureError(f"{where}: provenance must be 'TAG: quote' text")
    if isinstance(prov, dict) and set(prov) != set(expected):
        raise FixtureError(f"{where}: provenance keys must match expected keys")
    return FixtureRecord(obj["id"], obj["descriptor"], dict(expected), prov,
                         {k: float(v) for k, v in tol.items()}, where.split(":")[0])


def load_fixtures(path: str | os.PathLike | None = None) -> list[FixtureRecord]:
    """Load every ``*.json`` under ``path`` (a directory or a single file), sorted by id."""
    root = Path(path) if path is not None else default_fixture_dir()
    if root.is_dir():
        files = sorted(root.glob("*.json"))
    elif root.is_file():
        files = [root]
    else:
        raise FixtureError(f"{root}: no such fixture file or directory")
    records: dict[str, FixtureRecord] = {}
    for f in files:
        text = f.read_text(encoding="utf-8")
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FixtureError(f"{f}:{exc.lineno}: {exc.msg}") from None
        items = data if isinstance(data, list) else [data]
        for obj in items:
            rid = obj.get("id", "") if isinstance(obj, dict) else ""
            rec = _check_record(obj, f"{f}:{_line_of(text, rid) if rid else 1}")
            if rec.id in records:
                raise FixtureError(f"{rec.source}: duplicate id {rec.id!r} (first in {records[rec.id].source})")
            records[rec.id] = rec
    return [records[k] for k in sorted(records)]


# verification

@dataclass(frozen=True)
class KeyResult:
    key: str
    ok: bool
    expected: Any
    actual: Any


@dataclass(frozen=True)
class FixtureReport:
    id: str
    results: tuple[KeyResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def mismatches(self) -> list[KeyResult]:
        return [r for r in self.results if not r.ok]

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "ok": self.ok,
            "results": [{"key": r.key, "ok": r.ok, "expected": r.expected, "actual": r.actual}
                        for r in self.results],
        }


def _render(x) -> Any:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return x
    if isinstance(x, (list, tuple)):
        return [_render(v) for v in x]
    return str(x)


def _parse_scalar(text: str):
    if text in ("true", "false"):
        return text == "true"
    if re.fullmatch(r"\s*-?\d+(/\d+)?\s*", text):
        return Fraction(text)
    return LaurentPoly.parse(text)


def _compare(key: str, expected, actual, tol: float | None, base: int) -> list[KeyResult]:
    if isinstance(expected, list):
        actual = list(actual)
        if len(actual) != len(expected):
            return [KeyResult(key, False, expected, _render(actual))]
        out = []
        for i, (e, a) in enumerate(zip(expected, actual)):
            out.extend(_compare(f"{key}[{i + base}]", e, a, tol, base))
        return out
    if tol is not None:
        ok = abs(float(actual) - float(Fraction(expected))) <= tol
        return [KeyResult(key, ok, expected, float(actual))]
    want = _parse_scalar(expected)
    if isinstance(actual, LaurentPoly):
        try:
            ok = actual == LaurentPoly.parse(expected, actual.variables)
        except ValueError:
            ok = False
    elif isinstance(want, bool) or isinstance(actual, bool):
        ok = want is actual
    elif isinstance(want, LaurentPoly):
        ok = False
    else:
        ok = Fraction(actual) == want
    return [KeyResult(key, ok, expected, _render(actual))]


# Each evaluator maps (parameters, expected key, expected value) to the computed value.
# List-valued keys whose entries are a_n are reported 1-based.
_ONE_BASED = {"exponents", "reduced_exponents", "M", "finite_exponents", "lambert_M"}


def _kv(text: str) -> dict[str, str]:
    out = {}
    for part in filter(None, re.split(r"[,;](?=[A-Za-z_]+=)", text)):
        k, sep, v = part.partition("=")
        if not sep:
            raise FixtureError(f"bad parameter {part!r}")
        out[k.strip()] = v.strip()
    return out


def _series_value(H: hilbert.HilbertSeries, key: str, value):
    n = len(value) if isinstance(value, list) else 0
    if key == "coeffs":
        return hilbert.expand(H, n - 1).coeffs
    if key == "exponents":
        return eulerprod.exponents(hilbert.expand(H, n), n).values
    if key == "reduced_exponents":
        return eulerprod.exponents(H.reduced_numerator.to_series(n), n).values
    if key == "finite_exponents":
        vec = regularize.finite_exponent_certificate(H)
        return vec.values if vec is not None else []
    if key == "reduced_numerator":
        return H.reduced_numerator.coeffs
    simple: dict[str, Callable[[], Any]] = {
        "dim_plus_one": lambda: regularize.z_zero(H),
        "krull_dim": lambda: H.krull_dim,
        "degree": lambda: hilbert.degree(H),
        "lambert_z0": lambda: regularize.lambert_z0(H),
        "star": lambda: hilbert.check_star_condition(H.reduced_numerator),
        "sturm_count": lambda: hilbert.sturm_root_count(H.reduced_numerator, 0, 1),
        "z_minus_1": lambda: regularize.moment_one(H),
        "reciprocal": lambda: regularize.reciprocal_check(H.reduced_numerator)["is_reciprocal"],
    }
    if key in simple:
        return simple[key]()
    if m := re.fullmatch(r"z_minus_(\d+)", key):
        k = int(m.group(1))
        if k % 2:
            raise FixtureError(f"{key}: odd points are residues, use odd_residue_l")
        return regularize.moment_even(H, k // 2)
    if m := re.fullmatch(r"odd_residue_(\d+)", key):
        return regularize.odd_residue(H, int(m.group(1)))
    if m := re.fullmatch(r"hilbert_e_(\d+)", key):
        return hilbert.hilbert_e(H, int(m.group(1)))
    if key == "verlinde_p1":
        g = re.fullmatch(r"verlinde:(\d+)", H.name)
        if not g:
            raise FixtureError("verlinde_p1 needs a verlinde:G descriptor")
        return regularize.verlinde_p1(int(g.group(1)))
    raise FixtureError(f"unknown key {key!r} for series descriptors")


def _hurwitz(p: dict, key: str, value):
    if key != "value":
        raise FixtureError(f"unknown key {key!r} for hurwitz")
    return regularize.hurwitz_partial(int(p["p"]), int(p["N"]))


def _eisenstein(p: dict, key: str, value):
    report = regularize.eisenstein_anomaly(int(p["p"]))
    table = {"value": report["eisenstein"], "minus_q0": report["minus_q0"], "differ": report["differ"]}
    if key not in table:
        raise FixtureError(f"unknown key {key!r} for eisenstein")
    return table[key]


def _necklace(p: dict, key: str, value):
    n, b = int(p["n"]), int(p["b"])
    table: dict[str, Callable[[], Any]] = {
        "M": lambda: combinat.necklace_poly(n, b),
        "Phi": lambda: combinat.phi_poly(n, b),
        "brute_primitive": lambda: combinat.brute_primitive_necklaces(n, b),
        "brute": lambda: combinat.brute_necklaces(n, b),
        "lyndon": lambda: combinat.count_lyndon_words(n, b),
        "cycle_index_at_b": lambda: combinat.cycle_index_cyclic(n).evaluate(b),
    }
    if key not in table:
        raise FixtureError(f"unknown key {key!r} for necklace")
    return table[key]()


def _gauss(p: dict, key: str, value):
    q, d = int(p["p"]), int(p["d"])
    if key == "count":
        return combinat.count_irreducible(q, d)
    if key == "brute":
        return combinat.brute_irreducible(q, d)
    raise FixtureError(f"unknown key {key!r} for gauss")


def _qnecklace(p: dict, key: str, value):
    f = LaurentPoly.parse(p["f"])
    if key != "M":
        raise FixtureError(f"unknown key {key!r} for qnecklace")
    return eulerprod.multi_cyclotomic_exponents(f, len(value)).per_n


def _qtaylor(p: dict, key: str, value):
    P = IntPoly(int(c) for c in p["P"].split(":"))
    if key == "q":
        return regularize.q_taylor(P, len(value) - 1).values
    if key in ("M1", "degree"):
        ms = regularize.moment_series(P, 1)
        return ms.M1 if key == "M1" else ms.degree
    if m := re.fullmatch(r"M(\d+)", key):
        k = int(m.group(1))
        if k % 2:
            raise FixtureError(f"{key}: only M1 and even moments exist")
        return regularize.moment_series(P, k // 2).even[k // 2]
    raise FixtureError(f"unknown key {key!r} for qtaylor")


def _verlinde(p: dict, key: str, value):
    if key != "p1":
        raise FixtureError(f"unknown key {key!r} for verlinde_p1")
    return regularize.verlinde_p1(int(p["g"]))


_KINDS = {
    "hurwitz": _hurwitz,
    "eisenstein": _eisenstein,
    "necklace": _necklace,
    "gauss": _gauss,
    "qnecklace": _qnecklace,
    "qtaylor": _qtaylor,
    "verlinde_p1": _verlinde,
}


def _resolver(descriptor: str) -> Callable[[str, Any], Any]:
    kind, sep, rest = descriptor.partition(":")
    if sep and kind in _KINDS:
        try:
            params = _kv(rest)
        except FixtureError as exc:
            raise FixtureError(f"{descriptor!r}: {exc}") from None
        return lambda key, value: _KINDS[kind](params, key, value)
    try:
        H = hilbert.parse_descriptor(descriptor)
    except ValueError as exc:
        raise FixtureError(f"unresolvable descriptor {descriptor!r}: {exc}") from None
    return lambda key, value: _series_value(H, key, value)


def verify_fixture(record: FixtureRecord) -> FixtureReport:
    """Recompute every expected key through the public operations."""
    evaluate = _resolver(record.descriptor)
    results: list[KeyResult] = []
    for key, value in record.expected.items():
        try:
            actual = evaluate(key, value)
        except (KeyError, FixtureError) as exc:
            raise FixtureError(f"{record.id}: {exc}") from None
        base = 1 if key in _ONE_BASED else 0
        results.extend(_compare(key, value, actual, record.tolerance.get(key), base))
    return FixtureReport(record.id, tuple(results))


def verify_all(records: list[FixtureRecord]) -> list[FixtureReport]:
    return [verify_fixture(r) for r in sorted(records, key=lambda r: r.id)]
