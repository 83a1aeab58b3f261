import cmath
import math
import random

import pytest

from matgauss.cyclotomic import (
    CyclotomicInteger,
    cyclotomic_polynomial,
    get_ring,
    zeta_pow,
)

# little-endian coefficients of the first few cyclotomic polynomials,
# from the classical table
KNOWN_POLYNOMIALS = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    5: (1, 1, 1, 1, 1),
    6: (1, -1, 1),
    8: (1, 0, 0, 0, 1),
    9: (1, 0, 0, 1, 0, 0, 1),
    10: (1, -1, 1, -1, 1),
    12: (1, 0, -1, 0, 1),
}


def naive_cyclotomic(m):
    """Oracle: divide x^m - 1 by the product of all proper-divisor factors,
    with exact integer long division."""
    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def div(a, b):
        a = list(a)
        q = [0] * (len(a) - len(b) + 1)
        for k in range(len(q) - 1, -1, -1):
            q[k], rem = divmod(a[k + len(b) - 1], b[-1])
            assert rem == 0
            for j, y in enumerate(b):
                a[k + j] -= q[k] * y
        assert not any(a)
        return q

    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = div(poly, list(naive_cyclotomic(d)))
    return tuple(poly)


class TestCyclotomicPolynomial:
    @pytest.mark.parametrize("m,expected", sorted(KNOWN_POLYNOMIALS.items()))
    def test_known_table(self, m, expected):
        assert cyclotomic_polynomial(m) == expected

    @pytest.mark.parametrize("m", list(range(1, 31)) + [36, 60, 105])
    def test_against_naive_recursion(self, m):
        assert cyclotomic_polynomial(m) == naive_cyclotomic(m)

    def test_degree_is_euler_phi(self):
        phi = {1: 1, 2: 1, 6: 2, 12: 4, 30: 8, 100: 40, 210: 48}
        for m, expected in phi.items():
            assert len(cyclotomic_polynomial(m)) - 1 == expected

    def test_coefficient_beyond_one_appears_at_105(self):
        # the first m whose cyclotomic polynomial has a coefficient of size 2
        assert -2 in cyclotomic_polynomial(105)

    def test_rejects_bad_orders(self):
        with pytest.raises(ValueError):
            cyclotomic_polynomial(0)
        with pytest.raises(ValueError):
            cyclotomic_polynomial(10**6 + 1)


class TestRootPowers:
    def test_power_zero_is_one(self):
        for m in (1, 2, 5, 12):
            assert zeta_pow(m, 0) == 1

    def test_zeta_two_is_minus_one(self):
        assert zeta_pow(2, 1) == -1

    def test_zeta_four_cubed(self):
        assert zeta_pow(4, 3).coeffs == (0, -1)

    def test_full_cycle(self):
        for m in range(1, 25):
            assert zeta_pow(m, m) == 1
            assert zeta_pow(m, -1) == zeta_pow(m, m - 1)

    def test_all_powers_sum_to_zero(self):
        for m in range(2, 31):
            total = get_ring(m).zero()
            for k in range(m):
                total = total + zeta_pow(m, k)
            assert total.is_zero()

    @pytest.mark.parametrize("m", [7, 12, 30, 100, 360, 3660])
    def test_embedding_round_trip(self, m):
        rng = random.Random(f"roundtrip:{m}")
        ks = {0, 1, m - 1} | {rng.randrange(m) for _ in range(20)}
        for k in ks:
            v = zeta_pow(m, k)
            target = cmath.exp(2j * cmath.pi * k / m)
            total = sum(
                c * cmath.exp(2j * cmath.pi * i / m)
                for i, c in enumerate(v.coeffs)
                if c
            )
            assert abs(total - target) <= 1e-9


class TestRingArithmetic:
    def test_one_plus_minus_one(self):
        one = get_ring(4).one()
        assert (one + (-one)).is_zero()

    def test_cube_roots_sum(self):
        # 1 + zeta + zeta^2 = 0 for the third roots of unity
        assert zeta_pow(3, 1) + zeta_pow(3, 2) == -1

    def test_zeta4_squared(self):
        assert zeta_pow(4, 1) * zeta_pow(4, 1) == -1

    def test_mixed_orders_raise(self):
        with pytest.raises(ValueError):
            zeta_pow(4, 1) + zeta_pow(6, 1)
        with pytest.raises(ValueError):
            zeta_pow(4, 1) * zeta_pow(6, 1)

    def test_integer_promotion(self):
        v = zeta_pow(5, 2)
        assert (v + 0) == v
        assert 3 * v == v + v + v
        assert (1 - v) + v == 1

    @pytest.mark.parametrize("m", [3, 4, 5, 6, 8, 12])
    def test_ring_axioms_random(self, m):
        ring = get_ring(m)
        rng = random.Random(f"axioms:{m}")

        def rand():
            return ring.element([rng.randint(-9, 9) for _ in range(ring.degree)])

        for _ in range(40):
            a, b, c = rand(), rand(), rand()
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_powers_match_repeated_multiplication(self):
        v = zeta_pow(12, 5) + 2
        acc = get_ring(12).one()
        for k in range(6):
            assert v**k == acc
            acc = acc * v

    @pytest.mark.parametrize("m", [4, 6, 12, 30])
    def test_abs_is_multiplicative(self, m):
        ring = get_ring(m)
        rng = random.Random(f"absmul:{m}")
        for _ in range(25):
            a = ring.element([rng.randint(-5, 5) for _ in range(ring.degree)])
            b = ring.element([rng.randint(-5, 5) for _ in range(ring.degree)])
            lhs = (a * b).abs_embed()
            rhs = a.abs_embed() * b.abs_embed()
            assert abs(lhs - rhs) <= 1e-6 * max(1.0, rhs)

    def test_abs_of_integers(self):
        assert get_ring(5).zero().abs_embed() == 0.0
        assert get_ring(5).from_int(-7).abs_embed() == pytest.approx(7.0)
        assert CyclotomicInteger.from_int(8, 3).abs_embed() == pytest.approx(3.0)


class TestPowerCounts:
    def test_counts_match_explicit_sum(self):
        ring = get_ring(12)
        rng = random.Random("counts")
        for _ in range(10):
            counts = [rng.randint(0, 4) for _ in range(12)]
            via_counts = ring.from_power_counts(counts)
            explicit = ring.zero()
            for k, c in enumerate(counts):
                explicit = explicit + c * zeta_pow(12, k)
            assert via_counts == explicit

    def test_indices_wrap_modulo_m(self):
        ring = get_ring(5)
        counts = [0] * 9
        counts[7] = 3  # zeta^7 = zeta^2
        assert ring.from_power_counts(counts) == 3 * zeta_pow(5, 2)


def test_json_serialization_shape():
    v = zeta_pow(6, 1) * 2 - 1
    doc = v.to_json_dict()
    assert doc["m"] == 6
    assert doc["coeffs"] == [-1, 2]
    assert doc["abs"] == pytest.approx(math.sqrt(3))
