import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from necklaces.number_theory import (DELTA, IDENTITY, MU, ONE, PHI, ArithmeticFunction,
                                     dirichlet_convolve, divisors, euler_phi, factorize,
                                     gcd, mobius)


def naive_phi(n):
    return sum(1 for i in range(1, n + 1) if math.gcd(i, n) == 1)


def naive_mobius(n):
    m = 0
    p = 2
    while n > 1:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            m += 1
        p += 1
    return (-1) ** m


@pytest.mark.parametrize('n, expected', [(1, [1]), (12, [1, 2, 3, 4, 6, 12]), (7, [1, 7])])
def test_divisors_examples(n, expected):
    assert divisors(n) == expected


@pytest.mark.parametrize('n, expected', [(1, 1), (6, 2), (12, 4)])
def test_phi_examples(n, expected):
    assert euler_phi(n) == expected


@pytest.mark.parametrize('n, expected', [(1, 1), (4, 0), (30, -1)])
def test_mobius_examples(n, expected):
    assert mobius(n) == expected


def test_gcd_examples():
    assert gcd(6, 4) == 2
    assert gcd(7, 7) == 7
    assert all(gcd(n, 1) == 1 for n in range(0, 50))


def test_direct_count_oracle_up_to_1000():
    for n in range(1, 1001):
        assert euler_phi(n) == naive_phi(n), n
        assert mobius(n) == naive_mobius(n), n
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0], n


def test_factorize():
    assert factorize(360) == ((2, 3), (3, 2), (5, 1))
    assert factorize(1) == ()
    assert factorize(97) == ((97, 1),)


@pytest.mark.parametrize('bad', [0, -3])
def test_rejects_nonpositive(bad):
    for fn in (divisors, euler_phi, mobius, factorize):
        with pytest.raises(ValueError):
            fn(bad)


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        euler_phi(2.0)
    with pytest.raises(TypeError):
        divisors(True)


def test_gcd_rejects_negative():
    with pytest.raises(ValueError):
        gcd(-1, 3)


def test_convolution_examples():
    assert dirichlet_convolve(PHI, ONE, 6) == 6
    assert dirichlet_convolve(MU, ONE, 12) == 0
    f = ArithmeticFunction(lambda n: n * n + 3)
    for n in range(1, 30):
        assert dirichlet_convolve(f, DELTA, n) == f(n)


def test_gauss_identity():
    for n in range(1, 10**4 + 1):
        assert sum(euler_phi(d) for d in divisors(n)) == n


def test_phi_star_one_is_identity():
    conv = PHI * ONE
    assert all(conv(n) == IDENTITY(n) for n in range(1, 200))


def test_mu_star_one_is_delta():
    conv = MU * ONE
    assert all(conv(n) == DELTA(n) for n in range(1, 200))


def test_values_are_exact():
    f = ArithmeticFunction(lambda n: Fraction(1, n))
    assert dirichlet_convolve(f, ONE, 6) == Fraction(1) + Fraction(1, 2) + Fraction(1, 3) + Fraction(1, 6)
    assert isinstance(dirichlet_convolve(PHI, ONE, 10), int)
    with pytest.raises(TypeError):
        ArithmeticFunction(lambda n: 0.5)(1)


def test_from_values_bound():
    f = ArithmeticFunction.from_values([1, 2, 3])
    assert [f(k) for k in (1, 2, 3)] == [1, 2, 3]
    with pytest.raises(ValueError):
        f(4)


def _random_function(rng, size=200):
    return ArithmeticFunction.from_values([rng.randint(-50, 50) for _ in range(size)])


@pytest.mark.parametrize('seed', range(20))
def test_mobius_inversion_round_trip(seed):
    f = _random_function(random.Random(seed))
    g = f * ONE
    for k in range(1, 201):
        assert sum(mobius(d) * g(k // d) for d in divisors(k)) == f(k)


@pytest.mark.parametrize('seed', range(20))
def test_convolution_identity(seed):
    # sum (k/d) f(d) == sum phi(k/d) g(d) with g = f * 1
    f = _random_function(random.Random(1000 + seed))
    g = f * ONE
    for k in range(1, 201):
        lhs = sum((k // d) * f(d) for d in divisors(k))
        rhs = sum(euler_phi(k // d) * g(d) for d in divisors(k))
        assert lhs == rhs


small_values = st.lists(st.integers(-20, 20), min_size=100, max_size=100)


@given(small_values, small_values, small_values, st.integers(1, 100))
def test_convolution_commutative_associative(a, b, c, n):
    f, g, h = (ArithmeticFunction.from_values(v) for v in (a, b, c))
    assert dirichlet_convolve(f, g, n) == dirichlet_convolve(g, f, n)
    assert ((f * g) * h)(n) == (f * (g * h))(n)


@given(st.integers(0, 500), st.integers(0, 500), st.integers(0, 500))
def test_gcd_divisibility(a, b, c):
    if a == 0 and b == 0:
        return
    g = gcd(a, b)
    if a == 0:
        # 0 | bc  <=>  0 | c when b != 0
        assert (b * c == 0) == (c == 0)
        return
    assert (b * c) % a == 0 or (c % (a // g)) != 0
    assert ((b * c) % a == 0) == (c % (a // g) == 0)


@given(st.integers(1, 10**6))
def test_phi_multiplicative_structure(n):
    expected = n
    for p, _ in factorize(n):
        expected = expected // p * (p - 1)
    assert euler_phi(n) == expected
