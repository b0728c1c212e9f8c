import random

import pytest

from llclab.finitefield import FiniteField, field_of_size, finite_field, is_prime

GRID_Q = [3, 5, 7, 9, 11, 13]


def all_fields():
    return [field_of_size(q) for q in GRID_Q]


def test_field_of_size_factors_correctly():
    ff = field_of_size(9)
    assert (ff.p, ff.f, ff.q) == (3, 2, 9)
    ff = field_of_size(7)
    assert (ff.p, ff.f, ff.q) == (7, 1, 7)
    for bad in (2, 4, 8, 12, 15):
        with pytest.raises(ValueError):
            field_of_size(bad)


def test_is_prime_small():
    primes = [n for n in range(2, 30) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_modulus_is_irreducible_for_f9():
    ff = finite_field(3, 2)
    c0, c1 = ff.modulus
    # no root in F_3 means irreducible for a quadratic
    for x in range(3):
        assert (x * x + c1 * x + c0) % 3 != 0


def test_field_axioms_random():
    rng = random.Random(20240801)
    for ff in all_fields():
        for _ in range(60):
            a = rng.randrange(ff.q)
            b = rng.randrange(ff.q)
            c = rng.randrange(ff.q)
            assert ff.add(a, b) == ff.add(b, a)
            assert ff.mul(a, b) == ff.mul(b, a)
            assert ff.add(ff.add(a, b), c) == ff.add(a, ff.add(b, c))
            assert ff.mul(ff.mul(a, b), c) == ff.mul(a, ff.mul(b, c))
            assert ff.mul(a, ff.add(b, c)) == ff.add(ff.mul(a, b), ff.mul(a, c))
            assert ff.add(a, ff.neg(a)) == 0
            if a:
                assert ff.mul(a, ff.inv(a)) == 1


def test_frobenius_fixes_field():
    for ff in all_fields():
        for a in range(ff.q):
            assert ff.pow(a, ff.q) == a


def test_dlog_inverts_exp():
    for ff in all_fields():
        assert ff.dlog(ff.gen) == 1
        assert sorted(ff.exp) == list(range(1, ff.q))
        for a in ff.units():
            assert ff.exp[ff.dlog(a)] == a
        with pytest.raises(ZeroDivisionError):
            ff.dlog(0)


def test_trace_against_frobenius_formula():
    ff = finite_field(3, 2)
    for a in range(9):
        expected = ff.add(a, ff.pow(a, 3))
        assert expected < 3  # trace lands in the prime field
        assert ff.trace(a) == expected
    # prime field: trace is the identity
    ff = finite_field(7)
    assert [ff.trace(a) for a in range(7)] == list(range(7))


def test_trace_is_additive_and_surjective():
    for ff in all_fields():
        p = ff.p
        for a in range(ff.q):
            for b in range(0, ff.q, max(1, ff.q // 5)):
                assert ff.trace(ff.add(a, b)) == (ff.trace(a) + ff.trace(b)) % p
        assert set(ff.trace(a) for a in range(ff.q)) == set(range(p))


def test_square_census():
    for ff in all_fields():
        squares = {ff.mul(a, a) for a in range(ff.q)}
        assert sum(1 for a in ff.units() if ff.is_square(a)) == (ff.q - 1) // 2
        for a in ff.units():
            assert ff.is_square(a) == (a in squares)


def test_scalar_embedding():
    for ff in all_fields():
        assert ff.scalar(0) == 0
        assert ff.scalar(1) == 1
        assert ff.scalar(ff.p) == 0
        a = 2 % ff.q
        total = 0
        for _ in range(5):
            total = ff.add(total, a)
        assert ff.scalar_mul(5, a) == total


def test_minus_one():
    for ff in all_fields():
        assert ff.add(1, ff.minus_one()) == 0


def test_even_characteristic_rejected():
    with pytest.raises(ValueError):
        FiniteField(2)
    with pytest.raises(ValueError):
        FiniteField(6)
    with pytest.raises(ValueError):
        FiniteField(5, 3)
