import pytest

from matgauss.finite_field import (
    build_mult_table,
    enumerate_elements,
    is_prime,
    make_field,
    trace_to_prime,
)


def brute_irreducible(coeffs, p):
    """Degree-2/3 irreducibility by root search; the oracle for modulus picks."""
    deg = len(coeffs) - 1
    assert deg in (2, 3)
    for r in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * r + c) % p
        if acc == 0:
            return False
    return True


class TestConstruction:
    def test_prime_field(self):
        f = make_field(2, 1)
        assert f.q == 2
        assert [x.enc for x in f.elements()] == [0, 1]

    def test_f4_modulus_is_the_unique_irreducible_quadratic(self):
        f = make_field(2, 2)
        assert f.q == 4
        assert f.modulus == (1, 1, 1)  # x^2 + x + 1
        # oracle: exhaust all monic quadratics over F_2
        irreducibles = [
            (c0, c1, 1)
            for c0 in range(2)
            for c1 in range(2)
            if brute_irreducible([c0, c1, 1], 2)
        ]
        assert irreducibles == [(1, 1, 1)]

    def test_f9_modulus_is_first_irreducible_in_encoding_order(self):
        f = make_field(3, 2)
        assert f.modulus == (1, 0, 1)  # x^2 + 1
        assert brute_irreducible([1, 0, 1], 3)
        # nothing earlier in encoding order is irreducible
        assert not brute_irreducible([0, 0, 1], 3)

    def test_larger_extensions_have_irreducible_moduli(self):
        for p, e in [(2, 3), (2, 6), (3, 3), (5, 2), (7, 2)]:
            f = make_field(p, e)
            assert len(f.modulus) == e + 1
            assert f.modulus[-1] == 1
            if e <= 3:
                assert brute_irreducible(list(f.modulus), p)

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            make_field(4, 1)
        with pytest.raises(ValueError):
            make_field(1, 1)
        with pytest.raises(ValueError):
            make_field(2, 0)
        with pytest.raises(ValueError):
            make_field(2, 25)  # 2^25 over the default budget

    def test_same_parameters_share_construction(self):
        assert make_field(3, 2) is make_field(3, 2)


class TestArithmetic:
    def test_f4_multiplication(self):
        f = make_field(2, 2)
        x = f.element(2)
        assert (x * x).enc == 3  # x^2 = x + 1 mod (x^2 + x + 1)

    def test_inverse_examples(self):
        f5 = make_field(5)
        assert f5.element(2).inv().enc == 3  # 2*3 = 6 = 1 mod 5
        for p, e in [(2, 1), (3, 1), (2, 2), (3, 2), (7, 1)]:
            f = make_field(p, e)
            assert f.one().inv() == f.one()

    def test_inverse_of_zero_raises(self):
        f = make_field(3)
        with pytest.raises(ZeroDivisionError):
            f.zero().inv()

    def test_mixed_fields_raise(self):
        a = make_field(3).element(1)
        b = make_field(5).element(1)
        with pytest.raises(ValueError):
            a + b

    @pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2)])
    def test_field_axioms_exhaustive(self, p, e):
        f = make_field(p, e)
        elems = list(f.elements())
        one = f.one()
        for x in elems:
            if x.enc:
                assert x * x.inv() == one
                assert x ** (f.q - 1) == one  # Lagrange
            assert (x ** f.q) == x
        for x in elems:
            for y in elems:
                assert x + y == y + x
                assert x * y == y * x
                # Frobenius is additive
                assert (x + y) ** p == x**p + y**p

    @pytest.mark.parametrize("p,e", [(2, 2), (3, 2), (2, 4), (5, 2)])
    def test_distributivity_exhaustive_pairs(self, p, e):
        f = make_field(p, e)
        elems = list(f.elements())
        z = elems[min(3, len(elems) - 1)]
        for x in elems:
            for y in elems:
                assert x * (y + z) == x * y + x * z


class TestTrace:
    def test_trace_of_zero(self):
        for p, e in [(2, 2), (3, 2), (5, 1)]:
            f = make_field(p, e)
            assert trace_to_prime(f.zero()) == 0

    def test_trace_in_f4(self):
        f = make_field(2, 2)
        assert trace_to_prime(f.element(2)) == 1  # x + x^2 = 1

    def test_trace_identity_on_prime_field(self):
        f = make_field(7)
        for x in f.elements():
            assert trace_to_prime(x) == x.enc

    @pytest.mark.parametrize("p,e", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
    def test_trace_additive_and_surjective(self, p, e):
        f = make_field(p, e)
        seen = set()
        elems = list(f.elements())
        for x in elems:
            seen.add(trace_to_prime(x))
        assert seen == set(range(p))
        for x in elems[:16]:
            for y in elems:
                assert trace_to_prime(x + y) == (trace_to_prime(x) + trace_to_prime(y)) % p


class TestMultTable:
    def test_f2_table(self):
        t = build_mult_table(make_field(2))
        assert t.generator.enc == 1
        assert t.dlog[1] == 0

    def test_f5_generator_and_dlog(self):
        t = build_mult_table(make_field(5))
        assert t.generator.enc == 2  # smallest primitive root mod 5
        assert t.dlog[4] == 2  # 2^2 = 4

    def test_f7_skips_non_generator(self):
        # 2 has order 3 mod 7 (2, 4, 1); 3 has order 6
        t = build_mult_table(make_field(7))
        assert t.generator.enc == 3

    @pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (7, 1), (2, 2), (2, 4), (3, 2), (13, 1)])
    def test_dlog_round_trip(self, p, e):
        f = make_field(p, e)
        t = build_mult_table(f)
        g = t.generator
        for x in f.elements():
            if x.enc:
                assert g ** t.dlog[x.enc] == x
        logs = [t.dlog[x] for x in range(1, f.q)]
        assert sorted(logs) == list(range(f.q - 1))

    def test_dlog_of_zero_raises(self):
        f = make_field(3)
        t = build_mult_table(f)
        with pytest.raises(ZeroDivisionError):
            t.dlog_of(f.zero())


class TestEnumeration:
    def test_orders(self):
        assert [x.enc for x in enumerate_elements(make_field(2))] == [0, 1]
        assert [x.enc for x in enumerate_elements(make_field(3))] == [0, 1, 2]
        f4 = make_field(2, 2)
        elems = list(enumerate_elements(f4))
        assert [x.coeffs for x in elems] == [(0, 0), (1, 0), (0, 1), (1, 1)]

    def test_count(self):
        for p, e in [(2, 3), (3, 2), (5, 2)]:
            assert sum(1 for _ in enumerate_elements(make_field(p, e))) == p**e


def test_is_prime_small_values():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
