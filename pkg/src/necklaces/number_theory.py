"""
Divisors, Euler's totient, the Moebius function and Dirichlet convolution.

Everything here is exact: arithmetic functions return integers or
``fractions.Fraction`` values, never floats.
"""

import numbers
from fractions import Fraction
from functools import lru_cache
import math

__all__ = [
    'factorize', 'divisors', 'euler_phi', 'mobius', 'gcd',
    'ArithmeticFunction', 'dirichlet_convolve',
    'ONE', 'IDENTITY', 'DELTA', 'PHI', 'MU',
]


def _check_positive(n):
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected an integer, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=4096)
def factorize(n):
    """Prime factorization of ``n`` by trial division.

    Returns a tuple of ``(prime, exponent)`` pairs in increasing prime order.
    ``factorize(1) == ()``.
    """
    _check_positive(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=4096)
def _divisors(n):
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def divisors(n):
    """All positive divisors of ``n`` in increasing order."""
    _check_positive(n)
    return list(_divisors(n))


def euler_phi(n):
    """Number of ``i`` in ``1..n`` coprime to ``n``."""
    _check_positive(n)
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def mobius(n):
    _check_positive(n)
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def gcd(a, b):
    """Greatest common divisor of two nonnegative integers; ``gcd(a, 0) == a``."""
    if a < 0 or b < 0:
        raise ValueError("gcd expects nonnegative integers")
    return math.gcd(a, b)


class ArithmeticFunction:
    """A function on the positive integers with exact rational values.

    Wraps a plain callable. ``bound`` (optional) is the largest argument the
    function is declared on; evaluating past it raises ``ValueError``.
    Values are memoized, so the callable is assumed pure.
    """

    def __init__(self, fn, name=None, bound=None):
        self._fn = fn
        self.name = name or getattr(fn, '__name__', 'f')
        self.bound = bound
        self._cache = {}

    def __call__(self, n):
        _check_positive(n)
        if self.bound is not None and n > self.bound:
            raise ValueError(f"{self.name} is only defined up to {self.bound}, got {n}")
        try:
            return self._cache[n]
        except KeyError:
            v = self._fn(n)
            if isinstance(v, bool) or not isinstance(v, numbers.Rational):
                raise TypeError(f"{self.name}({n}) = {v!r} is not an exact rational")
            if not isinstance(v, (int, Fraction)):
                v = Fraction(v)
            self._cache[n] = v
            return v

    def __mul__(self, other):
        """Dirichlet convolution as a new arithmetic function."""
        if not isinstance(other, ArithmeticFunction):
            return NotImplemented
        bound = min((b for b in (self.bound, other.bound) if b is not None), default=None)
        return ArithmeticFunction(lambda n: dirichlet_convolve(self, other, n),
                                  name=f"({self.name}*{other.name})", bound=bound)

    @classmethod
    def from_values(cls, values, name='f'):
        """Function on ``1..len(values)`` with ``f(k) = values[k-1]``."""
        values = [Fraction(v) for v in values]
        return cls(lambda n: values[n - 1], name=name, bound=len(values))

    def __repr__(self):
        return f"ArithmeticFunction({self.name})"


def dirichlet_convolve(f, g, n):
    """``(f * g)(n) = sum over d | n of f(d) g(n/d)``, computed exactly."""
    _check_positive(n)
    total = sum((Fraction(f(d)) * Fraction(g(n // d)) for d in _divisors(n)), Fraction(0))
    return total.numerator if total.denominator == 1 else total


ONE = ArithmeticFunction(lambda n: 1, name='1')
IDENTITY = ArithmeticFunction(lambda n: n, name='id')
DELTA = ArithmeticFunction(lambda n: 1 if n == 1 else 0, name='delta')
PHI = ArithmeticFunction(euler_phi, name='phi')
MU = ArithmeticFunction(mobius, name='mu')
