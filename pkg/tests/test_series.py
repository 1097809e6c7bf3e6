"""Power-series engine: rational expansion, dimension formulas, identities."""

import random

import pytest

from mild2.series import (
    DimensionSequence,
    IntSeries,
    NonRealizableError,
    WeightSignature,
    expand_rational,
    gamma_series,
    lower_central_dims,
    power_sums,
    reduced_dims_bn,
    strongly_free_series,
    verify_cent_g,
    zassenhaus_dims,
)


def mul_series(a, b, n_max):
    out = [0] * (n_max + 1)
    for i, x in enumerate(a[: n_max + 1]):
        for j, y in enumerate(b[: n_max + 1 - i]):
            out[i + j] += x * y
    return out


def test_expand_rational_geometric():
    assert expand_rational([1], [1, -1], 6).coeffs == (1,) * 7
    assert expand_rational([1], [1, -2], 5).coeffs == (1, 2, 4, 8, 16, 32)
    assert expand_rational([1, 1], [1], 4).coeffs == (1, 1, 0, 0, 0)


def test_expand_rational_requires_unit_constant_term():
    with pytest.raises(ValueError, match="zero constant term"):
        expand_rational([1], [0, 1], 3)
    with pytest.raises(ValueError, match="constant term"):
        expand_rational([1], [2, 1], 3)


def test_expand_rational_inverts_multiplication():
    rng = random.Random(3)
    for _ in range(100):
        den = [1] + [rng.randint(-4, 4) for _ in range(rng.randint(1, 5))]
        num = [rng.randint(-4, 4) for _ in range(rng.randint(1, 4))]
        n_max = 12
        series = expand_rational(num, den, n_max).coeffs
        back = mul_series(series, den, n_max)
        expected = (num + [0] * (n_max + 1))[: n_max + 1]
        assert back == expected


def test_weight_signature_validation():
    sig = WeightSignature((1, 1), (2,))
    assert sig.r == 2 and sig.denominator() == [1, -2, 1]
    with pytest.raises(ValueError):
        WeightSignature((), ())
    with pytest.raises(ValueError):
        WeightSignature((0, 1), ())
    with pytest.raises(ValueError):
        WeightSignature((1,), (0,))


def test_strongly_free_series_frozen_values():
    sig = WeightSignature((1, 1, 1, 1), (2, 2, 2, 2))
    assert strongly_free_series(sig, 7).coeffs == (1, 4, 12, 32, 80, 192, 448, 1024)
    free2 = WeightSignature((1, 1), ())
    assert strongly_free_series(free2, 5).coeffs == (1, 2, 4, 8, 16, 32)


def test_strongly_free_series_denominator_identity():
    # the series times its defining denominator is 1
    rng = random.Random(5)
    for _ in range(50):
        d = rng.randint(1, 5)
        e = tuple(sorted(rng.randint(1, 3) for _ in range(d)))
        h = tuple(sorted(rng.randint(2, 4) for _ in range(rng.randint(0, 3))))
        sig = WeightSignature(e, h)
        n_max = 10
        series = strongly_free_series(sig, n_max).coeffs
        den = sig.denominator()
        product = mul_series(series, den, n_max)
        assert product == [1] + [0] * n_max


def test_gamma_series_is_prefix_sum():
    sig = WeightSignature((1, 1, 1, 1), (2, 2, 2, 2))
    plain = strongly_free_series(sig, 6).coeffs
    gamma = gamma_series(sig, 6).coeffs
    assert gamma == tuple(sum(plain[: n + 1]) for n in range(7))
    assert gamma == (1, 5, 17, 49, 129, 321, 769)


def test_power_sums_known_factorizations():
    # 1 - 2t + t^2 = (1 - t)^2: two roots equal to 1
    assert power_sums(WeightSignature((1, 1), (2,)), 4) == (2, 2, 2, 2)
    # 1 - 4t + 4t^2 = (1 - 2t)^2: p_n = 2 * 2^n
    assert power_sums(WeightSignature((1, 1, 1, 1), (2, 2, 2, 2)), 3) == (4, 8, 16)
    # 1 - 4t + 3t^2 = (1 - t)(1 - 3t): p_n = 1 + 3^n
    sig = WeightSignature((1, 1, 1, 1), (2, 2, 2))
    assert power_sums(sig, 4) == (4, 10, 28, 82)


def test_power_sums_match_newton_recurrence_spot():
    sig = WeightSignature((1, 1, 2), (3,))
    assert power_sums(sig, 3) == (2, 6, 11)


def test_reduced_dims_bn_frozen():
    sig = WeightSignature((1, 1, 1, 1), (2, 2, 2, 2))
    dims = reduced_dims_bn(sig, 4)
    assert dims.start == 2 and dims.values == (6, 4, 6)
    # free on two generators: the reduced algebra still has the square terms
    free2 = WeightSignature((1, 1), ())
    assert reduced_dims_bn(free2, 4).values == (3, 2, 3)


def test_lower_central_dims_partial_sums():
    sig = WeightSignature((1, 1, 1, 1), (2, 2, 2, 2))
    a = lower_central_dims(sig, 4)
    assert a.start == 1 and a.values == (4, 6, 10, 16)
    # a_1 = generator count; for n >= 2, a_n accumulates b_2 + ... + b_n
    b = reduced_dims_bn(sig, 4)
    rebuilt, acc = [sig.r], 0
    for value in b.values:
        acc += value
        rebuilt.append(acc)
    assert tuple(rebuilt) == a.values


def test_zassenhaus_dims_frozen_and_free_case():
    assert zassenhaus_dims(4, 4, 4).values == (4, 6, 4, 12)
    # m = 0 gives the free restricted algebra: partial sums of Witt numbers
    # over divisor chains, frozen from the defining product expansion
    assert zassenhaus_dims(2, 0, 8).values == (2, 3, 2, 6, 6, 11, 18, 36)


def test_zassenhaus_product_identity():
    # prod (1 + t^n)^(a_n) must reproduce 1/(1 - d t + m t^2)
    for d, m in ((2, 0), (3, 2), (4, 4), (5, 4)):
        n_max = 10
        a = zassenhaus_dims(d, m, n_max).values
        product = [1] + [0] * n_max
        for n, a_n in enumerate(a, start=1):
            factor = [0] * (n_max + 1)
            from math import comb

            for k in range(0, n_max // n + 1):
                factor[n * k] = comb(a_n, k)
            product = mul_series(product, factor, n_max)
        expected = expand_rational([1], [1, -d, m], n_max).coeffs
        assert tuple(product) == expected, (d, m)


def test_nonrealizable_negative_dimension():
    sig = WeightSignature((1, 1), (2, 2))
    with pytest.raises(NonRealizableError) as info:
        reduced_dims_bn(sig, 5)
    assert info.value.n == 3 and info.value.reason == "negative"


def test_nonrealizable_fractional_dimension():
    with pytest.raises(NonRealizableError) as info:
        zassenhaus_dims(1, 1, 6)
    assert info.value.reason in ("negative", "fractional")


def test_verify_cent_g_degenerate_and_standard():
    assert verify_cent_g(WeightSignature((1, 1, 1, 1), (2, 2, 2, 2)), 10)
    assert verify_cent_g(WeightSignature((1, 1), ()), 10)
    assert verify_cent_g(WeightSignature((1,), ()), 8)


def test_int_series_and_dimension_sequence_accessors():
    s = IntSeries((1, 2, 3))
    assert s.n_max == 2 and s[1] == 2 and list(s.pairs()) == [(0, 1), (1, 2), (2, 3)]
    with pytest.raises(IndexError):
        s[3]
    dims = DimensionSequence("lower_central", 1, (4, 6))
    assert list(dims.pairs()) == [(1, 4), (2, 6)]
    data = dims.to_json_dict()
    assert data["kind"] == "lower_central" and data["start"] == 1 and data["values"] == [4, 6]
