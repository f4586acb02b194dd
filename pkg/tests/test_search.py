import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fpkit.core import ValidationError, iter_documents, serialize, validate
from fpkit.localization import residue_constraints_hold
from fpkit.models import linear_pn
from fpkit.search import (
    RigidityExperiment,
    SearchSpaceError,
    SearchSpec,
    enumerate_survivors,
    leaf_count,
    rigidity_experiment,
)


def weight_lists(data):
    return [list(point.weights) for point in data.points]


def test_spec_validation():
    with pytest.raises(ValidationError):
        SearchSpec(n=0, bound=3)
    with pytest.raises(ValidationError):
        SearchSpec(n=1, bound=0)
    with pytest.raises(ValidationError):
        SearchSpec(n=1, bound=3, k0=-1)
    with pytest.raises(ValidationError):
        SearchSpec(n=1, bound=3, max_leaves=0)
    assert SearchSpec(n=2, bound=3).effective_k0 == 3
    assert SearchSpec(n=2, bound=3, k0=2).effective_k0 == 2


def test_leaf_count_matches_hand_computation():
    # n=1, B=3: pool of 6 singletons, pairs with repetition: C(7,2) = 21
    assert leaf_count(SearchSpec(n=1, bound=3)) == 21
    # n=2, B=4: pool C(9,2) = 36 multisets, triples: C(38,3) = 8436
    assert leaf_count(SearchSpec(n=2, bound=4)) == 8436


def test_size_guard_trips():
    spec = SearchSpec(n=2, bound=4, max_leaves=100)
    with pytest.raises(SearchSpaceError, match="raise max_leaves"):
        list(enumerate_survivors(spec))


def test_n1_survivors_are_mirror_pairs():
    survivors = list(enumerate_survivors(SearchSpec(n=1, bound=3)))
    assert [weight_lists(d) for d in survivors] == [
        [[-3], [3]],
        [[-2], [2]],
        [[-1], [1]],
    ]


def test_survivors_revalidate_from_serialized_form():
    for data in enumerate_survivors(SearchSpec(n=2, bound=3)):
        reloaded = validate(json.loads(serialize(data)))
        assert residue_constraints_hold(reloaded)


def test_survivor_stream_reads_back_as_documents():
    survivors = list(enumerate_survivors(SearchSpec(n=1, bound=2)))
    stream = "".join(serialize(data) for data in survivors)
    docs = [validate(doc) for doc in iter_documents(stream)]
    assert docs == survivors


def test_enumeration_is_deterministic_across_runs_and_workers():
    spec = SearchSpec(n=2, bound=3)
    streams = [
        "".join(serialize(d) for d in enumerate_survivors(spec, workers=workers))
        for workers in (1, 1, 2, 4)
    ]
    assert len(set(streams)) == 1


def test_bound_monotonicity():
    small = {
        tuple(tuple(p.weights) for p in d.points)
        for d in enumerate_survivors(SearchSpec(n=2, bound=2))
    }
    large = {
        tuple(tuple(p.weights) for p in d.points)
        for d in enumerate_survivors(SearchSpec(n=2, bound=3))
    }
    assert small <= large


def test_profile_filter_keeps_the_reference_model():
    spec = SearchSpec(n=2, bound=3, require_projective_profile=True)
    model = weight_lists(linear_pn((0, 1, 3)))
    assert model in [weight_lists(d) for d in enumerate_survivors(spec)]


def test_condition_c_filter_with_default_multiplier():
    # n=1 mirror pairs have weight sums -w, w; difference 2w is always
    # divisible by n+1 = 2, so the filter keeps everything
    spec = SearchSpec(n=1, bound=3, require_condition_c=True)
    assert len(list(enumerate_survivors(spec))) == 3


def test_condition_c_filter_with_zero_multiplier():
    spec = SearchSpec(n=1, bound=3, require_condition_c=True, k0=0)
    assert list(enumerate_survivors(spec)) == []


def test_fractional_multiplier_is_vacuous():
    spec = SearchSpec(n=2, bound=3, require_condition_c=True, k0=Fraction(3, 2))
    assert list(enumerate_survivors(spec)) == []


def test_workers_argument_validated():
    with pytest.raises(ValidationError):
        list(enumerate_survivors(SearchSpec(n=1, bound=2), workers=0))


def test_rigidity_experiment_small_sweep():
    experiment = rigidity_experiment(SearchSpec(n=1, bound=5))
    assert isinstance(experiment, RigidityExperiment)
    assert experiment.survivor_count == 5
    assert len(experiment.matches) == 5
    assert experiment.counterexamples == ()
    assert experiment.hypothesis_failures == ()


def test_rigidity_experiment_partitions_survivors():
    experiment = rigidity_experiment(SearchSpec(n=2, bound=4), workers=2)
    assert experiment.survivor_count == len(experiment.matches) + len(
        experiment.counterexamples
    ) + len(experiment.hypothesis_failures)
    assert experiment.counterexamples == ()
    recognized = (
        "derived bundle weights are not pairwise distinct",
        "top power of the derived bundle vanishes",
        "bundle derivation failed",
    )
    for _, reason in experiment.hypothesis_failures:
        assert reason.startswith(recognized)


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=1, max_value=3))
def test_every_survivor_passes_residue_constraints(bound):
    for data in enumerate_survivors(SearchSpec(n=2, bound=bound)):
        assert residue_constraints_hold(data)
