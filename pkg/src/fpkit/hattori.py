"""Certification of rigidity hypotheses and conclusions.

This module decides, from fixed-point data alone, whether the hypotheses of
Hattori's rigidity theorem hold (an affine relation between weight sums and
line-bundle weights, pairwise distinct bundle weights, nonvanishing top
power) and whether the advertised conclusion holds (every weight multiset
has the pairwise-difference form of the standard projective model, with top
bundle power exactly 1).  It also houses the Vandermonde grouping argument
for distinctness of weight sums and the quadratic solver for the admissible
first Chern numbers.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from math import isqrt
from typing import Sequence

from . import localization
from .core import BundleWeights, FixedPointData, ValidationError


class ConditionCError(ValueError):
    """No integer offset makes weight_sum = k0 * bundle_weight + offset hold
    at every point.  Carries the first violating point."""

    def __init__(self, message: str, index: int, label: str):
        super().__init__(message)
        self.index = index
        self.label = label


class BundleDerivationError(ValueError):
    """Bundle weights cannot be recovered from the weight sums because some
    pairwise difference is not divisible by the point count."""

    def __init__(self, message: str, index: int, label: str):
        super().__init__(message)
        self.index = index
        self.label = label


@dataclasses.dataclass(frozen=True)
class ConditionCCertificate:
    """Witness of the affine relation weight_sum_i = k0 * bundle_i + offset."""

    k0: int
    offset: int
    bundle: BundleWeights


@dataclasses.dataclass(frozen=True)
class DistinctnessReport:
    """Outcome of grouping points by equal weight sum.

    ``group_mu`` holds the reciprocal-product sum of each group; when the
    number of groups is at most n and the residue constraints hold, the
    Vandermonde system over the distinct weight sums forces every one of
    them to vanish, and ``forced_mu`` is the solved (zero) vector.  A group
    with a single member then cannot occur, since its mu would be a lone
    nonzero reciprocal.
    """

    verdict: str
    groups: tuple[tuple[str, ...], ...]
    group_sums: tuple[int, ...]
    group_mu: tuple[Fraction, ...]
    forced_mu: tuple[Fraction, ...] | None
    vandermonde_applies: bool
    top_power: Fraction


@dataclasses.dataclass(frozen=True)
class PointMismatch:
    """A point whose weight multiset differs from the pairwise-difference
    prediction of the normalized bundle weights."""

    label: str
    expected: tuple[int, ...]
    actual: tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class RigidityVerdict:
    """Full outcome of the rigidity pipeline.

    ``passes`` is true only when the bundle weights are quasi-ample, the
    affine relation holds with multiplier n+1, the top bundle power is
    exactly 1, and every point's weights are the pairwise differences of
    the normalized bundle weights.  All stages are evaluated even after the
    first failure so the verdict localizes everything that went wrong.
    """

    passes: bool
    normalized_a: tuple[int, ...]
    mismatches: tuple[PointMismatch, ...]
    quasi_ample: bool
    bundle_power: Fraction
    condition_c: ConditionCCertificate | None
    condition_c_violation: str | None


@dataclasses.dataclass(frozen=True)
class ChernClassCandidate:
    """A root of the quadratic constraining the top power of the first
    Chern class, with its admissibility under integrality and parity."""

    value: Fraction
    admissible: bool
    reason: str


def _check_k0(k0: int) -> int:
    if not isinstance(k0, int) or isinstance(k0, bool):
        raise ValidationError(f"k0 must be a nonnegative integer, got {k0!r}")
    if k0 < 0:
        raise ValidationError(f"k0 must be a nonnegative integer, got {k0}")
    return k0


def check_condition_c(
    data: FixedPointData, bundle: BundleWeights, k0: int
) -> ConditionCCertificate:
    """Find the unique offset with weight_sum_i = k0 * bundle_i + offset.

    The offset is pinned by the first point; the first point violating the
    relation is reported in the raised error.
    """
    _check_k0(k0)
    if len(bundle) != data.point_count:
        raise ValidationError(
            f"bundle weight count {len(bundle)} does not match point count "
            f"{data.point_count}"
        )
    offset = data.points[0].weight_sum - k0 * bundle.values[0]
    for index, (point, a) in enumerate(zip(data.points, bundle.values)):
        if point.weight_sum != k0 * a + offset:
            raise ConditionCError(
                f"point {point.label} breaks the affine relation: weight sum "
                f"{point.weight_sum} != {k0} * {a} + {offset}",
                index=index,
                label=point.label,
            )
    return ConditionCCertificate(k0, offset, bundle)


def derive_bundle_weights(data: FixedPointData) -> BundleWeights:
    """Invert the affine relation with multiplier n+1 on data with n+1
    points, normalizing the first bundle weight to 0.

    Every weight-sum difference from the first point must be divisible by
    n+1; the certificate check_condition_c(data, result, n+1) then succeeds
    by construction.
    """
    scale = data.n + 1
    if data.point_count != scale:
        raise ValidationError(
            f"bundle derivation needs exactly n + 1 = {scale} points, got "
            f"{data.point_count}"
        )
    base = data.points[0].weight_sum
    values = []
    for index, point in enumerate(data.points):
        quotient, remainder = divmod(point.weight_sum - base, scale)
        if remainder:
            raise BundleDerivationError(
                f"weight-sum difference {point.weight_sum - base} at point "
                f"{point.label} is not divisible by {scale}",
                index=index,
                label=point.label,
            )
        values.append(quotient)
    return BundleWeights(tuple(values))


def check_quasi_ample(data: FixedPointData, bundle: BundleWeights) -> bool:
    """True iff the bundle weights are pairwise distinct and the top power
    is nonzero, under the caller's normalization."""
    if len(bundle) != data.point_count:
        raise ValidationError(
            f"bundle weight count {len(bundle)} does not match point count "
            f"{data.point_count}"
        )
    return bundle.pairwise_distinct() and localization.line_bundle_power(data, bundle) != 0


def _solve_vandermonde(nodes: Sequence[int]) -> tuple[Fraction, ...]:
    # Solve sum_s nodes[s]^r * x_s = 0 for r = 0..t-1 by elimination and
    # back-substitution; distinct nodes make the system uniquely solvable.
    t = len(nodes)
    rows = [[Fraction(node) ** r for node in nodes] + [Fraction(0)] for r in range(t)]
    for col in range(t):
        pivot = next((r for r in range(col, t) if rows[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("grouped weight sums produced a singular system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(col + 1, t):
            factor = rows[r][col] / rows[col][col]
            if factor:
                for c in range(col, t + 1):
                    rows[r][c] -= factor * rows[col][c]
    solution = [Fraction(0)] * t
    for r in range(t - 1, -1, -1):
        acc = rows[r][t]
        for c in range(r + 1, t):
            acc -= rows[r][c] * solution[c]
        solution[r] = acc / rows[r][r]
    return tuple(solution)


def distinctness_analysis(
    data: FixedPointData, *, require_residue_constraints: bool = True
) -> DistinctnessReport:
    """Group points by equal weight sum and run the Vandermonde argument.

    With the residue constraints verified and at most n distinct weight
    sums, the homogeneous Vandermonde system forces every group's mu to
    vanish, so the top power vanishes as well; data with nonzero top power
    must therefore have pairwise distinct weight sums.  By default the
    residue constraints are enforced as a precondition; pass
    ``require_residue_constraints=False`` to inspect data that fails them
    (for example a single point, whose lone constraint can never hold).
    """
    constraints_ok = localization.residue_constraints_hold(data)
    if require_residue_constraints and not constraints_ok:
        raise ValidationError(
            "residue constraints fail on this data; pass "
            "require_residue_constraints=False to analyze it anyway"
        )
    grouped: dict[int, list[str]] = {}
    products: dict[int, list[int]] = {}
    for point in data.points:
        grouped.setdefault(point.weight_sum, []).append(point.label)
        products.setdefault(point.weight_sum, []).append(point.weight_product)
    sums = tuple(sorted(grouped))
    groups = tuple(tuple(grouped[s]) for s in sums)
    mu = tuple(
        sum((Fraction(1, e) for e in products[s]), Fraction(0)) for s in sums
    )
    verdict = "distinct" if len(groups) == data.point_count else "grouped"
    applies = constraints_ok and len(groups) <= data.n
    forced = _solve_vandermonde(sums) if applies else None
    return DistinctnessReport(
        verdict=verdict,
        groups=groups,
        group_sums=sums,
        group_mu=mu,
        forced_mu=forced,
        vandermonde_applies=applies,
        top_power=localization.c1_power(data),
    )


def first_chern_candidates(n: int) -> tuple[ChernClassCandidate, ...]:
    """Solve 2c^2 - 3(n+1)c + (n+1)^2 = 0 exactly and flag each root.

    A root is admissible when it is an integer of the same parity as n+1
    (the mod-2 class of the first Chern number is fixed by the dimension).
    The larger root n+1 always qualifies; the smaller root (n+1)/2
    qualifies exactly when n = 3 (mod 4).
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValidationError(f"dimension must be a positive integer, got {n!r}")
    discriminant = 9 * (n + 1) ** 2 - 8 * (n + 1) ** 2
    root = isqrt(discriminant)
    if root * root != discriminant:
        raise ArithmeticError("discriminant is not a perfect square")
    candidates = []
    for value in (Fraction(3 * (n + 1) + root, 4), Fraction(3 * (n + 1) - root, 4)):
        if value.denominator != 1:
            candidates.append(
                ChernClassCandidate(value, False, "rejected: not an integer")
            )
        elif int(value) % 2 != (n + 1) % 2:
            candidates.append(
                ChernClassCandidate(
                    value, False, f"rejected: parity differs from {n + 1} mod 2"
                )
            )
        else:
            candidates.append(
                ChernClassCandidate(
                    value, True, f"integer with the same parity as {n + 1}"
                )
            )
    return tuple(candidates)


def hattori_verdict(
    data: FixedPointData, bundle: BundleWeights | None = None
) -> RigidityVerdict:
    """Run the full rigidity pipeline on data with n+1 points.

    Bundle weights are taken from the explicit argument first, then from
    the data's attached bundle, and are otherwise derived from the weight
    sums (which may fail with BundleDerivationError).  The chosen weights
    are normalized so the first one is 0, making the verdict invariant
    under a simultaneous shift of the bundle.
    """
    scale = data.n + 1
    if data.point_count != scale:
        raise ValidationError(
            f"rigidity check needs exactly n + 1 = {scale} points, got "
            f"{data.point_count}"
        )
    if bundle is None:
        bundle = data.bundle
    if bundle is None:
        bundle = derive_bundle_weights(data)
    elif len(bundle) != data.point_count:
        raise ValidationError(
            f"bundle weight count {len(bundle)} does not match point count "
            f"{data.point_count}"
        )
    normalized = bundle.normalized()
    quasi_ample = check_quasi_ample(data, normalized)
    bundle_power = localization.line_bundle_power(data, normalized)
    try:
        certificate = check_condition_c(data, normalized, scale)
        violation = None
    except ConditionCError as exc:
        certificate = None
        violation = str(exc)
    values = normalized.values
    mismatches = []
    for i, point in enumerate(data.points):
        expected = tuple(
            sorted(values[i] - values[j] for j in range(len(values)) if j != i)
        )
        if expected != point.weights:
            mismatches.append(PointMismatch(point.label, expected, point.weights))
    passes = (
        quasi_ample
        and bundle_power == 1
        and certificate is not None
        and not mismatches
    )
    return RigidityVerdict(
        passes=passes,
        normalized_a=values,
        mismatches=tuple(mismatches),
        quasi_ample=quasi_ample,
        bundle_power=bundle_power,
        condition_c=certificate,
        condition_c_violation=violation,
    )
