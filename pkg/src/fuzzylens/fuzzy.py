"""Single-input, single-output Mamdani inference.

Min implication, max aggregation and centroid defuzzification over a
sampled output universe. Everything here is immutable once built, so an
engine can be shared freely between threads.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Sequence, Tuple, Union

import numpy as np

ArrayLike = Union[float, np.ndarray]


def gaussian(x: ArrayLike, center: ArrayLike, sigma: ArrayLike) -> ArrayLike:
    """exp(-((x - center) / sigma)**2 / 2), broadcasting over all arguments."""
    z = (x - center) / sigma
    return np.exp(-0.5 * z * z)


@dataclass(frozen=True)
class Gaussian:
    center: float
    sigma: float

    def __post_init__(self) -> None:
        if not (self.sigma > 0 and math.isfinite(self.sigma)):
            raise ValueError(f"sigma: must be > 0, got {self.sigma!r}")
        if not math.isfinite(self.center):
            raise ValueError(f"center: must be finite, got {self.center!r}")

    def __call__(self, x: ArrayLike) -> ArrayLike:
        return gaussian(x, self.center, self.sigma)


@dataclass(frozen=True)
class Trapezoid:
    """Rises linearly a->b, equals 1 on [b, c], falls linearly c->d.

    Equal knots are allowed (shoulders, triangles). A vertical edge takes
    the plateau value at the knot itself.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.a, self.b, self.c, self.d)):
            raise ValueError("knots must be finite")
        if not (self.a <= self.b <= self.c <= self.d):
            raise ValueError(
                f"knots must satisfy a <= b <= c <= d, got "
                f"({self.a}, {self.b}, {self.c}, {self.d})"
            )

    def __call__(self, x: ArrayLike) -> ArrayLike:
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        out[(x >= self.b) & (x <= self.c)] = 1.0
        if self.b > self.a:
            m = (x > self.a) & (x < self.b)
            out[m] = (x[m] - self.a) / (self.b - self.a)
        if self.d > self.c:
            m = (x > self.c) & (x < self.d)
            out[m] = (self.d - x[m]) / (self.d - self.c)
        return out if out.ndim else float(out)


MembershipFunction = Union[Gaussian, Trapezoid]


def triangle(a: float, peak: float, c: float) -> Trapezoid:
    return Trapezoid(a, peak, peak, c)


def mf_eval(mf: MembershipFunction, x: ArrayLike) -> ArrayLike:
    """Membership degree of ``x`` (scalar or array); always within [0, 1]."""
    y = mf(x)
    if isinstance(y, np.ndarray) and y.ndim == 0:
        return float(y)
    return y


@dataclass(frozen=True)
class LinguisticVariable:
    name: str
    universe: Tuple[float, float]
    terms: Tuple[Tuple[str, MembershipFunction], ...]

    def __post_init__(self) -> None:
        lo, hi = self.universe
        if not lo < hi:
            raise ValueError(f"{self.name}: universe must satisfy lo < hi, got {self.universe}")
        object.__setattr__(self, "universe", (float(lo), float(hi)))
        object.__setattr__(self, "terms", tuple((str(k), mf) for k, mf in self.terms))
        if not self.terms:
            raise ValueError(f"{self.name}: at least one term is required")
        seen = set()
        for label, _ in self.terms:
            if label in seen:
                raise ValueError(f"{self.name}: duplicate term label {label!r}")
            seen.add(label)

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(label for label, _ in self.terms)

    def term(self, label: str) -> MembershipFunction:
        for name, mf in self.terms:
            if name == label:
                return mf
        raise KeyError(label)

    def clamp(self, x: float) -> float:
        lo, hi = self.universe
        return min(max(float(x), lo), hi)

    def coverage_gaps(self, points: int) -> np.ndarray:
        """Sample points of the universe where no term has positive membership."""
        xs = np.linspace(self.universe[0], self.universe[1], points)
        covered = np.zeros(points, dtype=bool)
        for _, mf in self.terms:
            covered |= np.asarray(mf(xs)) > 0
        return xs[~covered]


def fuzzify(var: LinguisticVariable, x: float) -> list[tuple[str, float]]:
    x = var.clamp(x)
    return [(label, float(mf_eval(mf, x))) for label, mf in var.terms]


@dataclass(frozen=True)
class Rule:
    antecedent: str
    consequent: str


@dataclass(frozen=True, eq=False)
class FisEngine:
    """Validated Mamdani engine.

    ``fallback`` is the crisp output when no rule fires (zero aggregated
    mass). The output grid includes both universe endpoints.
    """

    input_var: LinguisticVariable
    output_var: LinguisticVariable
    rules: Tuple[Rule, ...]
    grid_points: int = 1001
    fallback: float = 0.0
    grid: np.ndarray = field(init=False, repr=False)
    _consequent_curves: dict = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "rules", tuple(self.rules))
        if int(self.grid_points) != self.grid_points or self.grid_points < 101:
            raise ValueError(f"grid_points: must be an integer >= 101, got {self.grid_points!r}")
        inputs = set(self.input_var.labels)
        outputs = set(self.output_var.labels)
        seen = set()
        for i, rule in enumerate(self.rules):
            if rule.antecedent not in inputs:
                raise ValueError(
                    f"rules[{i}].if: unknown input term {rule.antecedent!r}"
                )
            if rule.consequent not in outputs:
                raise ValueError(
                    f"rules[{i}].then: unknown output term {rule.consequent!r}"
                )
            if rule.antecedent in seen:
                raise ValueError(
                    f"rules[{i}].if: input term {rule.antecedent!r} already has a rule"
                )
            seen.add(rule.antecedent)
        for var in (self.input_var, self.output_var):
            gaps = var.coverage_gaps(self.grid_points)
            if gaps.size:
                raise ValueError(
                    f"{var.name}: no term covers {gaps.size} sampled point(s), "
                    f"first at {gaps[0]:g}"
                )
        unused = self.unreferenced_terms()
        if unused:
            warnings.warn(
                f"input terms without a rule: {', '.join(unused)}", stacklevel=2
            )

        grid = np.linspace(*self.output_var.universe, int(self.grid_points))
        grid.setflags(write=False)
        object.__setattr__(self, "grid", grid)
        curves = {}
        for label, mf in self.output_var.terms:
            c = np.asarray(mf(grid), dtype=float)
            c.setflags(write=False)
            curves[label] = c
        object.__setattr__(self, "_consequent_curves", curves)

    def unreferenced_terms(self) -> list[str]:
        used = {r.antecedent for r in self.rules}
        return [label for label in self.input_var.labels if label not in used]

    def consequent_curve(self, label: str) -> np.ndarray:
        return self._consequent_curves[label]


def fire_rules(
    engine: FisEngine, degrees: Sequence[tuple[str, float]]
) -> list[tuple[str, float]]:
    """Activation per consequent; rules sharing a consequent combine by max."""
    lookup = dict(degrees)
    out: dict[str, float] = {}
    for rule in engine.rules:
        d = lookup.get(rule.antecedent, 0.0)
        if d > 0:
            out[rule.consequent] = max(out.get(rule.consequent, 0.0), d)
    return list(out.items())


def aggregate(engine: FisEngine, activations: Sequence[tuple[str, float]]) -> np.ndarray:
    curve = np.zeros(engine.grid.shape)
    for label, level in activations:
        np.maximum(curve, np.minimum(level, engine.consequent_curve(label)), out=curve)
    return curve


def defuzzify_centroid(curve: np.ndarray, grid: np.ndarray, fallback: float = 0.0) -> float:
    mass = float(np.sum(curve))
    if mass <= 0:
        return float(fallback)
    return float(np.dot(grid, curve) / mass)


def infer(engine: FisEngine, x: float) -> float:
    degrees = fuzzify(engine.input_var, x)
    curve = aggregate(engine, fire_rules(engine, degrees))
    y = defuzzify_centroid(curve, engine.grid, engine.fallback)
    lo, hi = engine.output_var.universe
    # summation rounding can push a centroid a hair past a bound
    return min(max(y, lo), hi)
