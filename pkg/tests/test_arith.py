"""Tests for gcd, primality, factorization, totient, and powmod."""

import math

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from gencong.arith import Factorization, factorize, gcd, is_prime, mod_pow, totient


def naive_mod_pow(base, exp, m):
    """Repeated multiplication, the obvious oracle."""
    acc = 1 % m
    for _ in range(exp):
        acc = acc * base % m
    return acc


def naive_totient(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


class TestGcd:
    def test_frozen_values(self):
        assert gcd(6, 105765) == 3
        assert gcd(3, 35255) == 1
        assert gcd(0, 0) == 0
        assert gcd(0, 7) == 7
        assert gcd(-6, 105765) == 3
        assert gcd(6, -105765) == 3

    def test_small_exhaustive(self):
        for a in range(-30, 31):
            for b in range(-30, 31):
                g = gcd(a, b)
                if a == b == 0:
                    assert g == 0
                    continue
                assert g > 0
                assert a % g == 0 and b % g == 0
                assert all(
                    not (a % d == 0 and b % d == 0) for d in range(g + 1, max(abs(a), abs(b)) + 1)
                )

    def test_identities_to_200(self):
        for a in range(-200, 201):
            for b in range(-200, 201):
                g = gcd(a, b)
                assert g == gcd(b, a) == gcd(abs(a), abs(b)) == math.gcd(a, b)
                if g:
                    assert a % g == 0 and b % g == 0


class TestIsPrime:
    def test_small_against_sieve(self):
        limit = 1_000_000
        sieve = bytearray([1]) * (limit + 1)
        sieve[0] = sieve[1] = 0
        for p in range(2, int(limit**0.5) + 1):
            if sieve[p]:
                sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
        for n in range(limit + 1):
            assert is_prime(n) == bool(sieve[n]), n

    def test_negative_and_edge(self):
        for n in (-7, -2, -1, 0, 1):
            assert not is_prime(n)

    def test_known_primes(self):
        for p in (2, 3, 5, 101, 641, 7919, 104729, 2**31 - 1, 2**61 - 1, 2**89 - 1,
                  10**18 + 9, 4294967311, 2305843009213693951):
            assert is_prime(p), p

    def test_known_composites(self):
        # Carmichael numbers and strong pseudoprimes to small bases
        for n in (341, 561, 1105, 1729, 2047, 41041, 825265, 3215031751,
                  3825123056546413051, 2**32 + 1, (2**31 - 1) * (2**61 - 1)):
            assert not is_prime(n), n

    @settings(max_examples=300, deadline=None)
    @given(st.integers(min_value=0, max_value=10**13))
    def test_matches_sympy(self, n):
        assert is_prime(n) == sympy.isprime(n)


class TestFactorize:
    def test_rejects_nonpositive(self):
        for n in (0, -1, -12):
            with pytest.raises(ValueError):
                factorize(n)

    def test_one_has_no_factors(self):
        assert factorize(1) == Factorization(n=1, factors=())

    def test_frozen_values(self):
        assert factorize(105765).factors == ((3, 1), (5, 1), (11, 1), (641, 1))
        assert factorize(35255).factors == ((5, 1), (11, 1), (641, 1))
        assert factorize(64).factors == ((2, 6),)
        assert factorize(2**32 + 1).factors == ((641, 1), (6700417, 1))
        assert factorize(2**20).factors == ((2, 20),)
        assert factorize(999999999989).factors == ((999999999989, 1),)

    def test_round_trip_small(self):
        for n in range(1, 5000):
            result = factorize(n)
            product = 1
            previous = 1
            for p, e in result.factors:
                assert is_prime(p)
                assert e >= 1
                assert p > previous
                previous = p
                product *= p**e
            assert product == n == result.n

    def test_semiprime_with_large_factors(self):
        p, q = 2147483647, 2305843009213693951
        assert factorize(p * q).factors == ((p, 1), (q, 1))

    @settings(max_examples=150, deadline=None)
    @given(st.integers(min_value=1, max_value=10**12))
    def test_matches_sympy(self, n):
        assert dict(factorize(n).factors) == sympy.factorint(n)


class TestTotient:
    def test_frozen_values(self):
        assert totient(1) == 1
        assert totient(2) == 1
        assert totient(12) == 4
        assert totient(35255) == 25600
        assert totient(10**9) == 400000000

    def test_rejects_nonpositive(self):
        for n in (0, -1, -35255):
            with pytest.raises(ValueError):
                totient(n)

    def test_brute_force_small(self):
        for n in range(1, 2001):
            assert totient(n) == naive_totient(n), n

    @settings(max_examples=200, deadline=None)
    @given(st.integers(min_value=1, max_value=10**10))
    def test_matches_sympy(self, n):
        assert totient(n) == sympy.totient(n)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(min_value=1, max_value=10**4), st.integers(min_value=1, max_value=10**4))
    def test_multiplicative_on_coprime_pairs(self, a, b):
        if math.gcd(a, b) == 1:
            assert totient(a * b) == totient(a) * totient(b)


class TestModPow:
    def test_rejects_bad_domain(self):
        with pytest.raises(ValueError):
            mod_pow(2, 3, 0)
        with pytest.raises(ValueError):
            mod_pow(2, 3, -5)
        with pytest.raises(ValueError):
            mod_pow(2, -1, 5)

    def test_conventions(self):
        assert mod_pow(0, 0, 7) == 1
        assert mod_pow(0, 0, 1) == 0
        assert mod_pow(5, 0, 13) == 1
        assert mod_pow(7, 0, 5) == 1
        assert mod_pow(0, 9, 13) == 0
        assert mod_pow(2, 10, 4) == 0
        assert mod_pow(-1, 3, 5) == 4

    def test_worked_example(self):
        assert mod_pow(6, 4, 105765) == 1296
        assert mod_pow(6, 25604, 105765) == naive_mod_pow(6, 25604, 105765)

    def test_naive_oracle_sweep(self):
        for m in range(1, 40):
            for base in range(-m, m + 1):
                acc = 1 % m
                for exp in range(25):
                    assert mod_pow(base, exp, m) == acc
                    acc = acc * base % m

    @settings(max_examples=500, deadline=None)
    @given(
        st.integers(min_value=-(10**30), max_value=10**30),
        st.integers(min_value=0, max_value=10**30),
        st.integers(min_value=1, max_value=10**30),
    )
    def test_matches_builtin_pow(self, base, exp, m):
        assert mod_pow(base, exp, m) == pow(base, exp, m)

    def test_huge_exponent_is_fast(self):
        exp = (1 << 40000) - 1
        assert mod_pow(3, exp, 1000003) == pow(3, exp, 1000003)
