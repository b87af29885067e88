"""Randomized and targeted generation of test polynomials with oracle
cross-validation: every generated case is classified, the class predicts the
verdict, and exact root counting checks the prediction."""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from enum import Enum

from .polycore import Polynomial, format_polynomial, from_coefficients, parse_polynomial
from .shapiro import (
    ClassLabel,
    DeltaIdenticallyZeroError,
    actual_verdict,
    build,
    classify,
    predict_verdict,
)

MAX_DEGREE = 32


class Strategy(Enum):
    UNIFORM = "uniform"
    POSITIVE_ONLY = "positive_only"
    TARGETED = "targeted"


@dataclass(frozen=True)
class FuzzConfig:
    seed: int
    cases: int
    degree_range: tuple[int, int] = (2, 8)
    coeff_bound: int = 10
    strategy: Strategy = Strategy.UNIFORM
    target: ClassLabel | None = None

    def __post_init__(self) -> None:
        lo, hi = self.degree_range
        if not (2 <= lo <= hi <= MAX_DEGREE):
            raise ValueError(f"degree range must lie within [2, {MAX_DEGREE}]")
        if lo % 2 or hi % 2:
            raise ValueError("degree range bounds must be even")
        if self.cases < 0:
            raise ValueError("case count must be non-negative")
        if self.coeff_bound < 1:
            raise ValueError("coefficient bound must be positive")


@dataclass(frozen=True)
class Disagreement:
    case_index: int
    polynomial: str
    predicted: str
    actual: str


@dataclass
class FuzzSummary:
    total: int
    agreements: int
    disagreements: list[Disagreement] = field(default_factory=list)
    class_histogram: dict[str, int] = field(default_factory=dict)
    delta_zero_count: int = 0

    def to_json_dict(self) -> dict:
        return {
            "total": self.total,
            "agreements": self.agreements,
            "disagreements": [
                {
                    "case_index": d.case_index,
                    "polynomial": d.polynomial,
                    "predicted": d.predicted,
                    "actual": d.actual,
                }
                for d in self.disagreements
            ],
            "class_histogram": {
                label.value: self.class_histogram.get(label.value, 0)
                for label in ClassLabel
            },
            "delta_zero_count": self.delta_zero_count,
        }


def _case_rng(config: FuzzConfig, case_index: int) -> random.Random:
    return random.Random(config.seed * (2 ** 32) + case_index)


def _even_degrees(lo: int, hi: int) -> list[int]:
    return list(range(lo, hi + 1, 2))


def _uniform_poly(rng: random.Random, degree: int, bound: int) -> Polynomial:
    coeffs = [rng.randint(-bound, bound) for _ in range(degree)]
    lead = rng.randint(1, bound) * rng.choice((-1, 1))
    return from_coefficients(coeffs + [lead])


def _positive_only_poly(rng: random.Random, degree: int, bound: int) -> Polynomial:
    """Product of irreducible monic quadratics: guaranteed no real roots."""
    p = from_coefficients([1])
    for _ in range(degree // 2):
        while True:
            b = rng.randint(-bound, bound)
            c_min = b * b // 4 + 1
            if c_min <= bound:
                break
        c = rng.randint(c_min, bound)
        p = p * from_coefficients([c, b, 1])
    return p


def random_polynomial(config: FuzzConfig, case_index: int) -> Polynomial:
    """Deterministic in (seed, case_index); even degree within the range."""
    rng = _case_rng(config, case_index)
    lo, hi = config.degree_range
    if config.strategy is Strategy.UNIFORM:
        return _uniform_poly(rng, rng.choice(_even_degrees(lo, hi)), config.coeff_bound)
    if config.strategy is Strategy.POSITIVE_ONLY:
        return _positive_only_poly(rng, rng.choice(_even_degrees(lo, hi)), config.coeff_bound)
    # TARGETED: escalate degree and coefficient bound as the search runs on,
    # mixing both generators; the filtering happens in find_class_example.
    tier = case_index // 64
    hi_t = min(max(lo, 4) + 2 * (tier % 4), hi)
    degrees = _even_degrees(lo, hi_t)
    bound = config.coeff_bound * (1 + tier % 5)
    if case_index % 3 == 2:
        return _uniform_poly(rng, rng.choice(degrees), bound)
    return _positive_only_poly(rng, rng.choice(degrees), bound)


def run_fuzz(config: FuzzConfig) -> FuzzSummary:
    """Classify every generated case and verify the predicted verdict."""
    summary = FuzzSummary(total=config.cases, agreements=0)
    for i in range(config.cases):
        poly = random_polynomial(config, i)
        text = format_polynomial(poly)
        try:
            instance = build(poly)
            label, _ = classify(instance)
            summary.class_histogram[label.value] = summary.class_histogram.get(label.value, 0) + 1
            predicted = predict_verdict(label)
        except Exception as exc:  # never abort the run on a single case
            summary.disagreements.append(
                Disagreement(i, text, "ERROR", f"ERROR: {exc}"))
            continue
        try:
            actual = actual_verdict(instance)
        except DeltaIdenticallyZeroError:
            summary.delta_zero_count += 1
            continue
        except Exception as exc:
            summary.disagreements.append(
                Disagreement(i, text, predicted.value, f"ERROR: {exc}"))
            continue
        if predicted == actual.verdict:
            summary.agreements += 1
        else:
            summary.disagreements.append(
                Disagreement(i, text, predicted.value, actual.verdict.value))
    return summary


#: Seeded example polynomials, one per class known to be reachable.  Each is
#: validated by the test suite: it classifies to its key and the predicted
#: verdict matches the counted one.
FIXTURES: dict[ClassLabel, str] = {
    ClassLabel.LAMBDA_1: "-1,0,1",               # x^2 - 1
    ClassLabel.LAMBDA_21: "2,0,-2,0,1",          # x^4 - 2x^2 + 2
    ClassLabel.LAMBDA_22: "1,0,0,0,1",           # x^4 + 1
    ClassLabel.GAMMA_11: "1,0,1",                # x^2 + 1
    ClassLabel.GAMMA_121: "11,-6,4,-3,1",        # x^4 - 3x^3 + 4x^2 - 6x + 11
    ClassLabel.GAMMA_122: "6,-6,4,-3,1",         # x^4 - 3x^3 + 4x^2 - 6x + 6
    ClassLabel.GAMMA_211: "2,0,6,-4,1",          # x^4 - 4x^3 + 6x^2 + 2
    ClassLabel.GAMMA_22: "9,-8,6,-4,1",          # x^4 - 4x^3 + 6x^2 - 8x + 9
    ClassLabel.GAMMA_231: "100,0,84,0,-15,0,1",  # x^6 - 15x^4 + 84x^2 + 100
}

# The four remaining classes require an odd multiplicity-weighted count of
# p'' zeros on the right of p0.  With p positive (or negative) everywhere
# and p0 its only critical point, p'' has the same sign at p0 and at both
# infinities, so each side's count is even: those classes are empty under
# the multiplicity counting convention and the search reports NOT_FOUND.


def find_class_example(label: ClassLabel, budget: int,
                       config: FuzzConfig) -> Polynomial | None:
    """First polynomial classifying to the label; None when the budget runs out.

    Seeded fixtures are consulted first and re-verified by classification,
    never trusted blindly.
    """
    text = FIXTURES.get(label)
    if text is not None:
        poly = parse_polynomial(text)
        found, _ = classify(build(poly))
        if found is label:
            return poly
    search_cfg = replace(config, strategy=Strategy.TARGETED, target=label)
    for i in range(budget):
        poly = random_polynomial(search_cfg, i)
        try:
            found, _ = classify(build(poly))
        except ValueError:
            continue
        if found is label:
            return poly
    return None
