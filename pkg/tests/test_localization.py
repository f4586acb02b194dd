import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fpkit.core import BundleWeights, FixedPointData, FixedPointDatum
from fpkit.laurent import LaurentPoly
from fpkit.localization import (
    ChernMonomial,
    c1cn1_from_k2,
    c1_power,
    chern_monomial,
    chi_y_from_data,
    chi_y_hrr_projective,
    k_coefficients,
    line_bundle_power,
    residue_constraints_hold,
    residue_sum,
)
from fpkit.models import linear_pn


def distinct_tuples(rng, count, size):
    return [tuple(rng.sample(range(-30, 31), size)) for _ in range(count)]


def test_residue_sums_on_reference_model():
    data = linear_pn((0, 1, 3))
    assert residue_sum(data, 0) == 0
    assert residue_sum(data, 1) == 0
    assert residue_sum(data, 2) == 9
    assert residue_sum(data, 0) == Fraction(1, 3) - Fraction(1, 2) + Fraction(1, 6)


def test_residue_sum_smallest_model():
    assert residue_sum(linear_pn((0, 1)), 1) == 2


def test_residue_sum_rejects_negative_power():
    with pytest.raises(ValueError):
        residue_sum(linear_pn((0, 1)), -1)


def test_residue_constraints_examples():
    assert residue_constraints_hold(linear_pn((0, 1, 3)))
    doubled = FixedPointData(
        1, (FixedPointDatum("A", (1,)), FixedPointDatum("B", (1,)))
    )
    assert not residue_constraints_hold(doubled)
    perturbed = FixedPointData(
        2,
        (
            FixedPointDatum("P1", (-3, -1)),
            FixedPointDatum("P2", (-2, 1)),
            FixedPointDatum("P3", (3, 1)),
        ),
    )
    assert residue_sum(perturbed, 0) == Fraction(1, 6)
    assert not residue_constraints_hold(perturbed)


def test_c1_power_examples():
    assert c1_power(linear_pn((0, 1))) == 2
    assert c1_power(linear_pn((0, 1, 3))) == 9


def test_c1_power_on_random_models_is_dimension_power():
    rng = random.Random(7)
    for n in range(1, 7):
        for values in distinct_tuples(rng, 3, n + 1):
            assert c1_power(linear_pn(values)) == (n + 1) ** n


def test_chern_monomial_reference_values():
    data = linear_pn((0, 1, 3))
    assert chern_monomial(data, (2,)) == 3
    assert chern_monomial(data, ChernMonomial((1, 1))) == 9
    assert chern_monomial(linear_pn((0, 1)), (1,)) == c1_power(linear_pn((0, 1)))


def test_chern_monomial_rejects_wrong_degree():
    with pytest.raises(ValueError, match="degree"):
        chern_monomial(linear_pn((0, 1, 3)), (1,))
    with pytest.raises(ValueError):
        ChernMonomial(())
    with pytest.raises(ValueError):
        ChernMonomial((0, 2))


def test_line_bundle_power_examples():
    data = linear_pn((0, 1, 3))
    assert line_bundle_power(data, data.bundle) == 1
    assert line_bundle_power(linear_pn((0, 1)), BundleWeights((0, 1))) == 1
    inverted = BundleWeights(tuple(-a for a in data.bundle.values))
    assert line_bundle_power(data, inverted) == 1


def test_line_bundle_power_checks_alignment():
    with pytest.raises(ValueError, match="does not match point count"):
        line_bundle_power(linear_pn((0, 1, 3)), BundleWeights((0, 1)))


def test_chi_y_from_data_examples():
    assert chi_y_from_data(linear_pn((0, 1, 3))).fmt() == "1 - y + y^2"
    assert chi_y_from_data(linear_pn((0, 1))).fmt() == "1 - y"
    assert chi_y_from_data(linear_pn((0, 1, 2, 3))).fmt() == "1 - y + y^2 - y^3"


def test_chi_y_hrr_matches_alternating_polynomial():
    for n in range(1, 8):
        expected = LaurentPoly({i: (-1) ** i for i in range(n + 1)})
        assert chi_y_hrr_projective(n) == expected


def test_chi_y_hrr_rejects_nonpositive_dimension():
    with pytest.raises(ValueError):
        chi_y_hrr_projective(0)


def test_k_coefficients_reference_values():
    assert k_coefficients(LaurentPoly({0: 1, 1: -1, 2: 1}), 2).values == (3, -3, 1)
    assert k_coefficients(LaurentPoly({0: 1, 1: -1}), 1).values == (2, -1)
    assert k_coefficients(LaurentPoly.zero(), 2).values == (0, 0, 0)


def test_k_coefficients_invert_the_expansion():
    chi = chi_y_from_data(linear_pn((0, 2, 5, 6)))
    coefficients = k_coefficients(chi, 3)
    shifted = LaurentPoly({0: 1, 1: 1})
    rebuilt = LaurentPoly.zero()
    for j, value in enumerate(coefficients.values):
        rebuilt = rebuilt + value * shifted**j
    assert rebuilt == chi


def test_k_coefficients_reject_bad_polynomials():
    with pytest.raises(ValueError, match="exceeds"):
        k_coefficients(LaurentPoly({3: 1}), 2)
    with pytest.raises(ValueError, match="polynomial"):
        k_coefficients(LaurentPoly({-1: 1}), 2)


def test_c1cn1_reference_values():
    assert c1cn1_from_k2(1, 3, 2) == 9
    with pytest.raises(ValueError, match="non-integral"):
        c1cn1_from_k2(Fraction(1, 5), 3, 2)
    with pytest.raises(ValueError):
        c1cn1_from_k2(1, 3, 0)


@st.composite
def arbitrary_data(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    m = draw(st.integers(min_value=1, max_value=5))
    weight = st.integers(min_value=-8, max_value=8).filter(lambda w: w != 0)
    points = tuple(
        FixedPointDatum(
            f"P{i + 1}", tuple(draw(st.lists(weight, min_size=n, max_size=n)))
        )
        for i in range(m)
    )
    return FixedPointData(n, points)


@given(arbitrary_data())
def test_chi_y_at_minus_one_is_euler_characteristic(data):
    assert chi_y_from_data(data)(-1) == data.point_count


@given(arbitrary_data())
def test_chi_y_duality_when_profile_symmetric(data):
    # when the negative-count multiset is symmetric under d -> n - d, the
    # genus agrees with its reflected form sum of (-y)^(n - d_i)
    counts = [p.negative_count for p in data.points]
    if sorted(counts) == sorted(data.n - d for d in counts):
        chi = chi_y_from_data(data)
        reflected = LaurentPoly(
            (data.n - d, (-1) ** (data.n - d)) for d in counts
        )
        assert chi == reflected
        assert chi == (-1) ** data.n * chi.mirror(data.n)


@given(st.integers(min_value=1, max_value=6))
def test_hrr_agrees_with_fixed_point_route(n):
    assert chi_y_hrr_projective(n) == chi_y_from_data(linear_pn(tuple(range(n + 1))))
