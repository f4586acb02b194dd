"""Exact localization sums over fixed-point data.

Every quantity here is a finite sum over fixed points of symmetric
functions of the weights divided by the weight product, evaluated in exact
rational arithmetic.  The genus polynomial of the standard projective
model is additionally computed a second, independent way, from a truncated
power series with exact rational coefficients, so the two routes can be
checked against each other.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from .core import BundleWeights, FixedPointData
from .laurent import LaurentPoly


@dataclasses.dataclass(frozen=True)
class ChernMonomial:
    """A degree-n Chern-class monomial c_{i_1} ... c_{i_k}, as a multiset of
    indices summing to n (stored sorted descending)."""

    indices: tuple[int, ...]

    def __init__(self, indices: Iterable[int]):
        object.__setattr__(self, "indices", tuple(sorted(indices, reverse=True)))
        for i in self.indices:
            if not isinstance(i, int) or isinstance(i, bool) or i < 1:
                raise ValueError(f"Chern indices must be positive integers, got {i!r}")
        if not self.indices:
            raise ValueError("a Chern monomial needs at least one index")

    @property
    def degree(self) -> int:
        return sum(self.indices)


@dataclasses.dataclass(frozen=True)
class KCoefficients:
    """Coefficients of the genus polynomial re-expanded in powers of (y+1).

    The constant coefficient equals the Euler characteristic when the input
    polynomial came from fixed-point data.
    """

    values: tuple[int, ...]

    def __getitem__(self, index: int) -> int:
        return self.values[index]

    def __len__(self) -> int:
        return len(self.values)


def _common_denominator_sum(numerator_for_point, data: FixedPointData) -> Fraction:
    # Accumulate sum_i f_i / e_i over the common denominator prod |e_i|;
    # keeps every intermediate value an integer.
    products = [p.weight_product for p in data.points]
    denominator = 1
    for e in products:
        denominator *= abs(e)
    numerator = 0
    for point, e in zip(data.points, products):
        cofactor = denominator // abs(e)
        if e < 0:
            cofactor = -cofactor
        numerator += numerator_for_point(point) * cofactor
    return Fraction(numerator, denominator)


def residue_sum(data: FixedPointData, power: int) -> Fraction:
    """The exact sum over points of (weight sum)^power / (weight product).

    Vanishes for all ``power < n`` on data coming from an actual action; at
    ``power = n`` it is the top self-intersection number of the first Chern
    class.
    """
    if power < 0:
        raise ValueError(f"power must be nonnegative, got {power}")
    return _common_denominator_sum(lambda p: p.weight_sum**power, data)


def residue_constraints_hold(data: FixedPointData) -> bool:
    """True when residue_sum(data, r) vanishes for every r in 0..n-1."""
    return all(residue_sum(data, r) == 0 for r in range(data.n))


def c1_power(data: FixedPointData) -> Fraction:
    """residue_sum at power n: the Chern number c_1^n for consistent data."""
    return residue_sum(data, data.n)


def _elementary_symmetric(values: Sequence[int]) -> list[int]:
    # coefficients of prod (1 + v z); entry j is sigma_j
    sigma = [1] + [0] * len(values)
    for v in values:
        for j in range(len(values), 0, -1):
            sigma[j] += v * sigma[j - 1]
    return sigma


def chern_monomial(data: FixedPointData, monomial: ChernMonomial | Iterable[int]) -> Fraction:
    """Evaluate a degree-n Chern monomial by summation over fixed points.

    Each Chern class c_j contributes the j-th elementary symmetric
    polynomial of the point's weights; the product over the monomial's
    indices is divided by the weight product and summed exactly.  The data
    is taken at face value; no realizability check is attempted.
    """
    if not isinstance(monomial, ChernMonomial):
        monomial = ChernMonomial(monomial)
    if monomial.degree != data.n:
        raise ValueError(
            f"monomial degree {monomial.degree} does not match n = {data.n}"
        )

    def term(point):
        sigma = _elementary_symmetric(point.weights)
        product = 1
        for i in monomial.indices:
            product *= sigma[i]
        return product

    return _common_denominator_sum(term, data)


def line_bundle_power(data: FixedPointData, bundle: BundleWeights) -> Fraction:
    """Top self-intersection of a line bundle from its weights: sum of
    a_i^n / e_i.

    The caller's normalization of the bundle weights is used as-is; only
    shift-invariant downstream conclusions are geometrically meaningful.
    """
    if len(bundle) != data.point_count:
        raise ValueError(
            f"bundle weight count {len(bundle)} does not match point count "
            f"{data.point_count}"
        )
    values = dict(zip(data.labels, bundle.values))
    return _common_denominator_sum(lambda p: values[p.label] ** data.n, data)


def chi_y_from_data(data: FixedPointData) -> LaurentPoly:
    """The genus polynomial from fixed-point data: sum of (-y)^{d_i} with
    d_i the number of negative weights at point i."""
    return LaurentPoly(
        (p.negative_count, (-1) ** p.negative_count) for p in data.points
    )


# -- power-series route for the standard projective model --------------------

def _series_reciprocal(series: list[Fraction], order: int) -> list[Fraction]:
    # reciprocal of a unit power series, truncated at x^order
    lead = series[0]
    if lead == 0:
        raise ValueError("series has no reciprocal: constant term is zero")
    inverse = [Fraction(1) / lead]
    for k in range(1, order + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if j < len(series):
                acc += series[j] * inverse[k - j]
        inverse.append(-acc / lead)
    return inverse


def _ypoly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _xseries_mul(a, b, order: int):
    # product of x-series whose coefficients are polynomials in y
    out = [[Fraction(0)] for _ in range(order + 1)]
    for i, ai in enumerate(a):
        for j in range(0, order + 1 - i):
            if j < len(b):
                term = _ypoly_mul(ai, b[j])
                acc = out[i + j]
                if len(acc) < len(term):
                    acc.extend([Fraction(0)] * (len(term) - len(acc)))
                for k, c in enumerate(term):
                    acc[k] += c
    return out


def chi_y_hrr_projective(n: int) -> LaurentPoly:
    """The genus polynomial of the dimension-n projective model from its
    characteristic power series.

    The n Chern roots contribute the (n+1)-fold product of the series
    x(1 + y e^{-x}) / (1 - e^{-x}) divided by the value (1 + y) that the
    trivial summand of the twisted tangent sum contributes; the coefficient
    of x^n is the answer.  All series coefficients are exact rationals.
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    # (1 - e^{-x}) / x and its reciprocal, truncated at x^n
    base = [Fraction((-1) ** k, factorial(k + 1)) for k in range(n + 1)]
    todd = _series_reciprocal(base, n)
    # one factor: todd * (1 + y e^{-x}); x-coefficients are linear in y
    expneg = [Fraction((-1) ** k, factorial(k)) for k in range(n + 1)]
    factor = []
    for k in range(n + 1):
        ycoef = sum((todd[k - j] * expneg[j] for j in range(k + 1)), Fraction(0))
        factor.append([todd[k], ycoef])
    power = [[Fraction(1)]] + [[Fraction(0)] for _ in range(n)]
    for _ in range(n + 1):
        power = _xseries_mul(power, factor, n)
    top = power[n]
    # exact division by (1 + y)
    quotient = [Fraction(0)] * (len(top) - 1)
    for k in range(len(top) - 1):
        quotient[k] = top[k] - (quotient[k - 1] if k else Fraction(0))
    if (quotient[-1] if quotient else Fraction(0)) != top[-1]:
        raise ArithmeticError("genus series is not divisible by 1 + y")
    if any(c.denominator != 1 for c in quotient):
        raise ArithmeticError("genus polynomial has non-integer coefficients")
    return LaurentPoly((k, int(c)) for k, c in enumerate(quotient))


def k_coefficients(chi: LaurentPoly, n: int) -> KCoefficients:
    """Re-expand a genus polynomial of degree <= n in powers of (y+1)."""
    if not chi.is_zero():
        if not chi.is_polynomial():
            raise ValueError("genus input must be a polynomial (no negative powers)")
        if chi.degree() > n:
            raise ValueError(f"polynomial degree {chi.degree()} exceeds n = {n}")
    values = [0] * (n + 1)
    for i, c in chi.terms:
        for j in range(i + 1):
            values[j] += c * comb(i, j) * (-1) ** (i - j)
    return KCoefficients(tuple(values))


def c1cn1_from_k2(k2: int | Fraction, euler: int, n: int) -> int:
    """Recover the Chern number c_1 c_{n-1} from the quadratic Taylor
    coefficient of the genus at y = -1 and the Euler characteristic.

    Raises when the result is not an integer, which signals inconsistent
    input data.
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    value = 12 * Fraction(k2) - Fraction(n * (3 * n - 5), 2) * euler
    if value.denominator != 1:
        raise ValueError(f"c1*c(n-1) came out non-integral ({value}); inconsistent input")
    return int(value)
