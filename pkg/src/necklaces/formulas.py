"""
Closed-form necklace counts.

Each count is a divisor sum divided by a length. The sum is kept alongside the
quotient (``CountResult.numerator_check``) so that its exact divisibility can
be audited; a sum that is not divisible is a bug and raises
:class:`~necklaces.errors.IntegralityError`.
"""

from dataclasses import dataclass, field
from math import gcd, prod

from .errors import IntegralityError
from .groups import torsion_count, torsion_count_K
from .number_theory import divisors, euler_phi, mobius

__all__ = [
    'CountResult', 'Term',
    'count_identity_necklaces', 'count_identity_necklaces_abelian',
    'count_aperiodic', 'count_smallest_period',
    'count_K_necklaces', 'count_K_aperiodic',
    'count_moreau', 'count_homogeneous',
]


@dataclass(frozen=True)
class Term:
    """One summand ``weight(k/d) * torsion * base**(d-1)`` of a divisor sum."""
    d: int
    weight: int
    torsion: int
    power: int

    @property
    def value(self):
        return self.weight * self.torsion * self.power


@dataclass(frozen=True)
class CountResult:
    value: int
    numerator_check: int
    denominator: int = 1
    method: str = 'formula'
    terms: tuple = field(default=(), compare=False, repr=False)
    note: str = field(default='', compare=False, repr=False)

    def __post_init__(self):
        if self.method not in ('formula', 'oracle'):
            raise ValueError(f"unknown method tag {self.method!r}")
        if self.value * self.denominator != self.numerator_check:
            raise IntegralityError(
                f"value {self.value} * {self.denominator} != {self.numerator_check}")

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, CountResult):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    @classmethod
    def exact(cls, value, method='oracle', note=''):
        """Wrap a directly counted value (denominator 1)."""
        return cls(value, value, 1, method, note=note)


def _divisor_sum(k, weight, torsion_at, base, context):
    """``(1/k) * sum_{d|k} weight(k/d) * torsion_at(d) * base**(d-1)``."""
    if k < 1:
        raise ValueError(f"length must be positive, got {k}")
    terms = tuple(Term(d, weight(k // d), torsion_at(d), base ** (d - 1)) for d in divisors(k))
    total = sum(t.value for t in terms)
    q, r = divmod(total, k)
    if r:
        raise IntegralityError(f"divisor sum {total} not divisible by {k} for {context}")
    return CountResult(q, total, k, 'formula', terms)


def count_identity_necklaces(G, n):
    """Number of rotation classes of n-tuples over ``G`` whose product is 1."""
    return _divisor_sum(n, euler_phi, lambda d: torsion_count(G, n // d), G.order,
                        (G.spec_string, n))


def count_identity_necklaces_abelian(cyclic_orders, n):
    """Same count for ``C_k1 x ... x C_km``, using only gcds of the orders."""
    ks = list(cyclic_orders)
    if not ks or any(k < 1 for k in ks):
        raise ValueError("need a nonempty list of positive cyclic orders")
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    terms = []
    total = 0
    for d in divisors(n):
        e = n // d
        t = euler_phi(e) * prod(gcd(k, e) * k ** (d - 1) for k in ks)
        terms.append(Term(d, euler_phi(e), prod(gcd(k, e) for k in ks), prod(ks) ** (d - 1)))
        total += t
    q, r = divmod(total, n)
    if r:
        raise IntegralityError(f"divisor sum {total} not divisible by {n} for {ks}")
    return CountResult(q, total, n, 'formula', tuple(terms))


def count_aperiodic(G, n):
    """Identity-product n-necklaces with n distinct rotations."""
    return _divisor_sum(n, mobius, lambda d: torsion_count(G, n // d), G.order,
                        (G.spec_string, n))


def count_smallest_period(G, n, k):
    """Identity-product n-necklaces whose smallest period is exactly ``k``."""
    if n < 1 or k < 1 or n % k:
        raise ValueError(f"period {k} does not divide length {n}")
    return _divisor_sum(k, mobius, lambda d: torsion_count(G, n // d), G.order,
                        (G.spec_string, n, k))


def count_K_necklaces(G, K, n):
    """Rotation classes of n-tuples whose product lies in ``K``.

    The torsion factor is evaluated at ``n/d`` inside the sum; a factor fixed
    at ``n`` disagrees with brute force already for ``K = {1}``.
    """
    return _divisor_sum(n, euler_phi, lambda d: torsion_count_K(G, K, n // d), G.order,
                        (G.spec_string, sorted(K.members), n))


def count_K_aperiodic(G, K, n):
    return _divisor_sum(n, mobius, lambda d: torsion_count_K(G, K, n // d), G.order,
                        (G.spec_string, sorted(K.members), n))


def count_moreau(q, n):
    """Classical count of n-necklaces over a q-letter alphabet."""
    if q < 1:
        raise ValueError(f"alphabet size must be positive, got {q}")
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    # written as phi(n/d) q^d over d | n so the terms line up with the others
    terms = tuple(Term(d, euler_phi(n // d), q, q ** (d - 1)) for d in divisors(n))
    total = sum(t.value for t in terms)
    q_, r = divmod(total, n)
    if r:
        raise IntegralityError(f"divisor sum {total} not divisible by {n} for q={q}")
    return CountResult(q_, total, n, 'formula', terms)


def count_homogeneous(G, n):
    """Orbits of ``C_n x G`` (rotation plus left multiplication) on ``G^n``.

    Equal to :func:`count_identity_necklaces`; the equality is checked by
    brute force in :mod:`necklaces.oracle`.
    """
    res = count_identity_necklaces(G, n)
    return CountResult(res.value, res.numerator_check, res.denominator, 'formula', res.terms,
                       note='equals the identity-product necklace count')
