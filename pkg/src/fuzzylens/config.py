"""JSON configuration for the enhancement engine.

Schema (all keys required unless noted)::

    {
      "input_variable":  {"name": str, "universe": [lo, hi], "terms": [TERM, ...]},
      "output_variable": {"name": str, "universe": [lo, hi], "terms": [TERM, ...]},
      "rules": [{"if": input label, "then": output label}, ...],
      "grid_points": int >= 101,          # optional, default 1001
      "luma_conversion": bool             # optional, default true
    }

    TERM = {"label": str, "kind": "gaussian", "center": num, "sigma": num > 0}
         | {"label": str, "kind": "trapezoid", "a": num, "b": num, "c": num, "d": num}

Validation failures raise ConfigError with a dotted field path, e.g.
``input_variable.terms[2].sigma: must be > 0``.
"""

from __future__ import annotations

import copy
import json
import os
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

from .fuzzy import FisEngine, Gaussian, LinguisticVariable, Rule, Trapezoid

ENV_VAR = "FUZZYLENS_CONFIG"


class ConfigError(ValueError):
    pass


def _trap(label, a, b, c, d):
    return {"label": label, "kind": "trapezoid", "a": a, "b": b, "c": c, "d": d}


def _gauss(label, center, sigma):
    return {"label": label, "kind": "gaussian", "center": center, "sigma": sigma}


DEFAULT_CONFIG: dict = {
    "input_variable": {
        "name": "intensity",
        "universe": [0, 255],
        "terms": [
            _trap("Very Dark", 0, 0, 10, 40),
            _gauss("Dark", 42, 18),
            _gauss("Dark Gray", 85, 18),
            _gauss("Gray", 128, 18),
            _gauss("Light Gray", 170, 18),
            _gauss("Bright", 212, 18),
            _trap("Very Bright", 215, 245, 255, 255),
        ],
    },
    "output_variable": {
        "name": "offset",
        "universe": [-128, 128],
        "terms": [
            _gauss("Very Dark", -64, 16),
            _gauss("Slightly Dark", -24, 16),
            _gauss("No Change", 0, 16),
            _gauss("Slightly Bright", 24, 16),
        ],
    },
    "rules": [
        {"if": "Very Dark", "then": "Slightly Dark"},
        {"if": "Dark Gray", "then": "Slightly Dark"},
        {"if": "Gray", "then": "Slightly Dark"},
        {"if": "Bright", "then": "Slightly Bright"},
        {"if": "Dark", "then": "Very Dark"},
        {"if": "Very Bright", "then": "No Change"},
        {"if": "Light Gray", "then": "Slightly Dark"},
    ],
    "grid_points": 1001,
    "luma_conversion": True,
}


@dataclass(frozen=True)
class AppConfig:
    input_variable: LinguisticVariable
    output_variable: LinguisticVariable
    rules: tuple
    grid_points: int = 1001
    luma_conversion: bool = True

    def build_engine(self) -> FisEngine:
        return FisEngine(self.input_variable, self.output_variable, self.rules, self.grid_points)

    def to_dict(self) -> dict:
        return {
            "input_variable": _variable_to_dict(self.input_variable),
            "output_variable": _variable_to_dict(self.output_variable),
            "rules": [{"if": r.antecedent, "then": r.consequent} for r in self.rules],
            "grid_points": self.grid_points,
            "luma_conversion": self.luma_conversion,
        }


def _num(obj: dict, key: str, path: str) -> float:
    if key not in obj:
        raise ConfigError(f"{path}.{key}: missing")
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(f"{path}.{key}: must be a number, got {v!r}")
    return float(v)


def _parse_term(raw: Any, path: str):
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: must be an object")
    label = raw.get("label")
    if not isinstance(label, str) or not label:
        raise ConfigError(f"{path}.label: must be a non-empty string")
    kind = raw.get("kind")
    if kind == "gaussian":
        center = _num(raw, "center", path)
        sigma = _num(raw, "sigma", path)
        if not sigma > 0:
            raise ConfigError(f"{path}.sigma: must be > 0")
        return label, Gaussian(center, sigma)
    if kind == "trapezoid":
        knots = [_num(raw, k, path) for k in "abcd"]
        if not (knots[0] <= knots[1] <= knots[2] <= knots[3]):
            raise ConfigError(f"{path}: trapezoid knots must satisfy a <= b <= c <= d")
        return label, Trapezoid(*knots)
    raise ConfigError(f"{path}.kind: must be 'gaussian' or 'trapezoid', got {kind!r}")


def _parse_variable(raw: Any, path: str) -> LinguisticVariable:
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: must be an object")
    name = raw.get("name", path)
    if not isinstance(name, str):
        raise ConfigError(f"{path}.name: must be a string")
    uni = raw.get("universe")
    if (
        not isinstance(uni, list)
        or len(uni) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in uni)
    ):
        raise ConfigError(f"{path}.universe: must be [lo, hi]")
    if not uni[0] < uni[1]:
        raise ConfigError(f"{path}.universe: lo must be < hi")
    terms = raw.get("terms")
    if not isinstance(terms, list) or not terms:
        raise ConfigError(f"{path}.terms: must be a non-empty list")
    parsed = []
    seen = set()
    for i, t in enumerate(terms):
        label, mf = _parse_term(t, f"{path}.terms[{i}]")
        if label in seen:
            raise ConfigError(f"{path}.terms[{i}].label: duplicate label {label!r}")
        seen.add(label)
        parsed.append((label, mf))
    return LinguisticVariable(name, (uni[0], uni[1]), tuple(parsed))


def _variable_to_dict(var: LinguisticVariable) -> dict:
    terms = []
    for label, mf in var.terms:
        if isinstance(mf, Gaussian):
            terms.append(_gauss(label, mf.center, mf.sigma))
        else:
            terms.append(_trap(label, mf.a, mf.b, mf.c, mf.d))
    return {"name": var.name, "universe": list(var.universe), "terms": terms}


def parse_config(raw: Any) -> AppConfig:
    """Validate a decoded JSON document into an AppConfig."""
    if not isinstance(raw, dict):
        raise ConfigError("config: top level must be an object")
    known = {"input_variable", "output_variable", "rules", "grid_points", "luma_conversion"}
    extra = sorted(set(raw) - known)
    if extra:
        raise ConfigError(f"config: unknown key(s) {', '.join(extra)}")
    inp = _parse_variable(raw.get("input_variable"), "input_variable")
    out = _parse_variable(raw.get("output_variable"), "output_variable")

    grid_points = raw.get("grid_points", 1001)
    if isinstance(grid_points, bool) or not isinstance(grid_points, int) or grid_points < 101:
        raise ConfigError(f"grid_points: must be an integer >= 101, got {grid_points!r}")
    luma = raw.get("luma_conversion", True)
    if not isinstance(luma, bool):
        raise ConfigError("luma_conversion: must be true or false")

    rules_raw = raw.get("rules")
    if not isinstance(rules_raw, list):
        raise ConfigError("rules: must be a list")
    rules = []
    used = set()
    for i, r in enumerate(rules_raw):
        path = f"rules[{i}]"
        if not isinstance(r, dict) or set(r) != {"if", "then"}:
            raise ConfigError(f"{path}: must be an object with keys 'if' and 'then'")
        if r["if"] not in inp.labels:
            raise ConfigError(f"{path}.if: unknown input term {r['if']!r}")
        if r["then"] not in out.labels:
            raise ConfigError(f"{path}.then: unknown output term {r['then']!r}")
        if r["if"] in used:
            raise ConfigError(f"{path}.if: input term {r['if']!r} already has a rule")
        used.add(r["if"])
        rules.append(Rule(r["if"], r["then"]))

    for var, path in ((inp, "input_variable"), (out, "output_variable")):
        gaps = var.coverage_gaps(grid_points)
        if gaps.size:
            raise ConfigError(
                f"{path}.terms: coverage gap, no term is positive at "
                f"{gaps.size} sampled point(s) starting at {gaps[0]:g}"
            )

    cfg = AppConfig(inp, out, tuple(rules), grid_points, luma)
    # catch anything the engine rejects that the checks above missed
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            cfg.build_engine()
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return cfg


def default_config() -> AppConfig:
    return parse_config(copy.deepcopy(DEFAULT_CONFIG))


def load_config(path: Optional[os.PathLike | str] = None) -> AppConfig:
    """Load ``path``, else $FUZZYLENS_CONFIG, else the built-in default."""
    if path is None:
        path = os.environ.get(ENV_VAR) or None
    if path is None:
        return default_config()
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read config ({exc.strerror})") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    try:
        return parse_config(raw)
    except ConfigError as exc:
        raise ConfigError(f"{path}: {exc}") from exc


def dump_config(cfg: AppConfig) -> str:
    return json.dumps(cfg.to_dict(), indent=2) + "\n"
