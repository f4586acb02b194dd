"""Bounded exhaustive search over small weight configurations.

Candidate data has n+1 points whose weight multisets are drawn (with
repetition) from all size-n multisets over [-B, B] without 0.  Survivors
are the candidates passing the residue constraints, plus optional
projective-profile and affine-relation filters.  The stream is canonically
ordered and byte-deterministic: the multiset pool is sorted by
(weight sum, weight product, weights) and candidates are emitted in
lexicographic order of their non-decreasing pool-index tuples, which makes
every emitted candidate's points already canonically sorted.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Iterator

from .core import FixedPointData, FixedPointDatum, ValidationError, projective_profile
from .hattori import (
    BundleDerivationError,
    RigidityVerdict,
    derive_bundle_weights,
    hattori_verdict,
)
from .localization import line_bundle_power, residue_sum


class SearchSpaceError(RuntimeError):
    """The requested space exceeds the configured leaf budget."""


@dataclasses.dataclass(frozen=True)
class SearchSpec:
    """Parameters of one bounded sweep.

    ``k0`` is the affine-relation multiplier used when
    ``require_condition_c`` is set; it defaults to n+1 and may be a
    noninteger rational, in which case no candidate can satisfy the
    relation and the sweep is vacuously empty.  ``max_leaves`` bounds the
    raw number of point-multiset combinations before pruning.
    """

    n: int
    bound: int
    require_projective_profile: bool = False
    require_condition_c: bool = False
    k0: int | Fraction | None = None
    max_leaves: int = 10**8

    def __post_init__(self):
        for name in ("n", "bound"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValidationError(
                    f"{name} must be a positive integer, got {value!r}"
                )
        if not isinstance(self.max_leaves, int) or self.max_leaves < 1:
            raise ValidationError(
                f"max_leaves must be a positive integer, got {self.max_leaves!r}"
            )
        if self.k0 is not None:
            if isinstance(self.k0, bool) or not isinstance(self.k0, (int, Fraction)):
                raise ValidationError(
                    f"k0 must be an integer or exact rational, got {self.k0!r}"
                )
            if self.k0 < 0:
                raise ValidationError(f"k0 must be nonnegative, got {self.k0}")

    @property
    def point_count(self) -> int:
        return self.n + 1

    @property
    def effective_k0(self) -> int | Fraction:
        return self.n + 1 if self.k0 is None else self.k0


@dataclasses.dataclass(frozen=True)
class RigidityExperiment:
    """Partition of the survivor stream by the rigidity pipeline.

    ``counterexamples`` holds survivors that satisfy the hypotheses
    (derivable, pairwise distinct, nonvanishing bundle weights) yet fail
    the conclusion; a correct theorem makes it empty, so any member is the
    headline of the report.  ``hypothesis_failures`` pairs each remaining
    survivor with the reason it falls outside the theorem's scope.
    """

    spec: SearchSpec
    survivors: tuple[FixedPointData, ...]
    matches: tuple[FixedPointData, ...]
    counterexamples: tuple[tuple[FixedPointData, RigidityVerdict], ...]
    hypothesis_failures: tuple[tuple[FixedPointData, str], ...]

    @property
    def survivor_count(self) -> int:
        return len(self.survivors)


def _weight_pool(spec: SearchSpec) -> list[tuple[int, int, tuple[int, ...]]]:
    values = [w for w in range(-spec.bound, spec.bound + 1) if w != 0]
    pool = [
        (sum(combo), math.prod(combo), combo)
        for combo in itertools.combinations_with_replacement(values, spec.n)
    ]
    pool.sort()
    return pool


def leaf_count(spec: SearchSpec) -> int:
    """Raw combinations of point multisets the sweep would visit unpruned."""
    # size-n multisets over the 2B admissible values, then (n+1)-multisets
    # of those
    pool_size = math.comb(2 * spec.bound + spec.n - 1, spec.n)
    return math.comb(pool_size + spec.point_count - 1, spec.point_count)


def _satisfies_relation(sums: list[int], k0: int | Fraction) -> bool:
    # an integer solution of sum_i = k0 * a_i + offset exists iff all
    # pairwise sum differences are integer multiples of k0
    if isinstance(k0, Fraction):
        if k0.denominator != 1:
            return False
        k0 = int(k0)
    if k0 == 0:
        return len(set(sums)) == 1
    return all((s - sums[0]) % k0 == 0 for s in sums)


def _accept(spec: SearchSpec, data: FixedPointData) -> bool:
    for r in range(1, spec.n):
        if residue_sum(data, r) != 0:
            return False
    if spec.require_projective_profile and not projective_profile(data):
        return False
    if spec.require_condition_c:
        sums = [p.weight_sum for p in data.points]
        if not _satisfies_relation(sums, spec.effective_k0):
            return False
    return True


def _build(n: int, entries: list[tuple[int, int, tuple[int, ...]]]) -> FixedPointData:
    points = tuple(
        FixedPointDatum(f"P{i + 1}", entry[2]) for i, entry in enumerate(entries)
    )
    return FixedPointData(n, points)


def _complete_from(
    spec: SearchSpec,
    pool: list[tuple[int, int, tuple[int, ...]]],
    first: int,
) -> list[FixedPointData]:
    # all survivors whose lowest pool index is exactly `first`
    m = spec.point_count
    out: list[FixedPointData] = []
    chosen = [first]

    def descend(start: int, partial: Fraction) -> None:
        depth = len(chosen)
        if depth == m:
            if partial == 0:
                data = _build(spec.n, [pool[i] for i in chosen])
                if _accept(spec, data):
                    out.append(data)
            return
        # each further point shifts the reciprocal-product sum by at most 1
        if abs(partial) > m - depth:
            return
        for index in range(start, len(pool)):
            chosen.append(index)
            descend(index, partial + Fraction(1, pool[index][1]))
            chosen.pop()

    descend(first, Fraction(1, pool[first][1]))
    return out


def enumerate_survivors(spec: SearchSpec, workers: int = 1) -> Iterator[FixedPointData]:
    """Yield every survivor of the sweep in canonical order.

    The stream is identical across runs and across worker counts: work is
    partitioned by the first point's pool index and results are merged in
    pool order.  Raises SearchSpaceError when the raw space exceeds the
    spec's leaf budget.
    """
    if not isinstance(workers, int) or isinstance(workers, bool) or workers < 1:
        raise ValidationError(f"workers must be a positive integer, got {workers!r}")
    leaves = leaf_count(spec)
    if leaves > spec.max_leaves:
        raise SearchSpaceError(
            f"search space has {leaves} raw leaves, above the limit "
            f"{spec.max_leaves}; raise max_leaves to proceed"
        )
    pool = _weight_pool(spec)
    if workers == 1:
        for first in range(len(pool)):
            yield from _complete_from(spec, pool, first)
        return
    with ThreadPoolExecutor(max_workers=workers) as executor:
        for chunk in executor.map(
            lambda first: _complete_from(spec, pool, first), range(len(pool))
        ):
            yield from chunk


def rigidity_experiment(spec: SearchSpec, workers: int = 1) -> RigidityExperiment:
    """Sweep the space and sort every survivor into match, counterexample,
    or hypothesis failure."""
    survivors: list[FixedPointData] = []
    matches: list[FixedPointData] = []
    counterexamples: list[tuple[FixedPointData, RigidityVerdict]] = []
    failures: list[tuple[FixedPointData, str]] = []
    for data in enumerate_survivors(spec, workers=workers):
        survivors.append(data)
        try:
            bundle = derive_bundle_weights(data)
        except BundleDerivationError as exc:
            failures.append((data, f"bundle derivation failed: {exc}"))
            continue
        if not bundle.pairwise_distinct():
            failures.append((data, "derived bundle weights are not pairwise distinct"))
            continue
        if line_bundle_power(data, bundle) == 0:
            failures.append((data, "top power of the derived bundle vanishes"))
            continue
        verdict = hattori_verdict(data, bundle=bundle)
        if verdict.passes:
            matches.append(data)
        else:
            counterexamples.append((data, verdict))
    return RigidityExperiment(
        spec=spec,
        survivors=tuple(survivors),
        matches=tuple(matches),
        counterexamples=tuple(counterexamples),
        hypothesis_failures=tuple(failures),
    )
