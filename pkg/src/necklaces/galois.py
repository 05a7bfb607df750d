"""
Finite fields, Frobenius orbits, traces and normal bases.

A base field ``F = F_q`` (``q = p^e``) stores its elements as integer codes
``c_0 + c_1 p + ... + c_{e-1} p^(e-1)`` of coefficient vectors modulo a
canonical irreducible of degree ``e`` over ``F_p``, with full addition and
multiplication tables. An extension ``K = F_{q^n}`` stores elements the same
way one level up: codes ``c_0 + c_1 q + ... + c_{n-1} q^(n-1)`` with each
``c_i`` a code of ``F``. The trace and Frobenius are those of ``K/F``; the
tower is never flattened to ``F_p``.

Polynomials are tuples of coefficient codes, lowest degree first, with no
trailing zeros (``()`` is the zero polynomial). The canonical ordering of
monic polynomials of a fixed degree compares coefficients from the top down.
"""

from dataclasses import dataclass, field
from functools import lru_cache
import itertools
import random

from .errors import BudgetExceeded
from .formulas import CountResult, count_aperiodic, count_identity_necklaces
from .groups import build_group
from .number_theory import factorize
from .oracle import rotate, smallest_period

__all__ = [
    'PrimeField', 'BaseField', 'ExtensionField', 'FieldElement', 'Poly', 'FieldClass',
    'PhiReport', 'build_base_field', 'build_extension', 'prime_power',
    'is_irreducible', 'monic_polys', 'frobenius', 'trace', 'find_normal_basis',
    'phi_map', 'phi_inverse', 'conjugacy_classes_of_field', 'min_poly',
    'enumerate_irreducibles', 'count_trace_zero_classes', 'verify_phi_equivariance',
    'additive_group', 'MAX_BASE_ORDER', 'MAX_EXTENSION_ORDER',
]

MAX_BASE_ORDER = 1024
MAX_EXTENSION_ORDER = 2**20
FROBENIUS_TABLE_LIMIT = 2**16


# polynomial arithmetic over any object with add/sub/mul/neg/inv ----------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _padd(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    return _trim([F.add(x, b[i]) if i < len(b) else x for i, x in enumerate(a)])


def _psub(F, a, b):
    return _padd(F, a, tuple(F.neg(x) for x in b))


def _pmul(F, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _trim(out)


def _pdivmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    lead_inv = F.inv(b[-1])
    quot = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        c = F.mul(c, lead_inv)
        quot[i - db] = c
        for j, y in enumerate(b):
            a[i - db + j] = F.sub(a[i - db + j], F.mul(c, y))
    return _trim(quot), _trim(a[:db])


def monic_polys(F, degree):
    """All monic polynomials of ``degree`` over ``F`` in canonical order."""
    for top_down in itertools.product(range(F.q), repeat=degree):
        yield tuple(reversed(top_down)) + (1,)


def is_irreducible(F, f):
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    f = _trim(f)
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in monic_polys(F, d):
            if not _pdivmod(F, f, g)[1]:
                return False
    return True


def _first_irreducible(F, degree):
    for f in monic_polys(F, degree):
        if is_irreducible(F, f):
            return f
    raise AssertionError(f"no irreducible polynomial of degree {degree} over F_{F.q}")


# fields ---------------------------------------------------------------------

class PrimeField:
    """Integers modulo a prime ``p``."""

    def __init__(self, p):
        if p < 2 or len(factorize(p)) != 1 or factorize(p)[0][1] != 1:
            raise ValueError(f"{p} is not prime")
        self.p = self.q = p
        self.e = 1

    def __repr__(self):
        return f"PrimeField({self.p})"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)


class BaseField:
    """``F_q`` with ``q = p^e``, as coefficient vectors modulo an irreducible.

    Elements are codes ``0 .. q-1``; 0 and 1 are the field's zero and one.
    """

    def __init__(self, p, e=1):
        self.prime_field = PrimeField(p)
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = _first_irreducible(self.prime_field, e)
        Fp = self.prime_field
        q = self.q

        def vec(c):
            out = []
            for _ in range(e):
                c, r = divmod(c, p)
                out.append(r)
            return out

        def code(v):
            return sum(x * p**i for i, x in enumerate(v))

        vecs = [vec(c) for c in range(q)]
        self._add = [[code([(x + y) % p for x, y in zip(vecs[a], vecs[b])]) for b in range(q)]
                     for a in range(q)]
        self._mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                prod = _pdivmod(Fp, _pmul(Fp, _trim(vecs[a]), _trim(vecs[b])), self.modulus)[1]
                self._mul[a][b] = self._mul[b][a] = code(prod)
        self._neg = [code([(-x) % p for x in vecs[a]]) for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            self._inv[a] = self._mul[a].index(1)

    def __repr__(self):
        return f"BaseField(q={self.q})"

    @property
    def elements(self):
        return range(self.q)

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv[a]

    def check_axioms(self):
        """Exhaustive field-axiom check (cubic in q; meant for q <= 64)."""
        q = self.q
        R = range(q)
        for a in R:
            assert self.add(a, 0) == a and self.mul(a, 1) == a
            assert self.add(a, self.neg(a)) == 0
            if a:
                assert self.mul(a, self.inv(a)) == 1
            for b in R:
                assert self.add(a, b) == self.add(b, a)
                assert self.mul(a, b) == self.mul(b, a)
                for c in R:
                    assert self.add(self.add(a, b), c) == self.add(a, self.add(b, c))
                    assert self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
                    assert self.mul(a, self.add(b, c)) == self.add(self.mul(a, b), self.mul(a, c))
        return True


def prime_power(q):
    """``(p, e)`` with ``q == p**e``; ValueError if ``q`` is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    return fac[0]


@lru_cache(maxsize=64)
def build_base_field(p, e=1, max_order=MAX_BASE_ORDER):
    if len(factorize(p)) != 1 or factorize(p)[0][1] != 1:
        raise ValueError(f"{p} is not prime")
    if p**e > max_order:
        raise BudgetExceeded(f"base field F_{p}^{e}", p**e, max_order)
    F = BaseField(p, e)
    if F.q <= 64:
        F.check_axioms()
    return F


@dataclass(frozen=True)
class Poly:
    """Polynomial over a base field; ``coeffs`` lowest degree first."""
    field: object
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _trim(self.coeffs))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def second_coeff(self):
        """Coefficient of ``x^(deg-1)``."""
        return self.coeff(self.degree - 1)

    def sort_key(self):
        return (self.degree, tuple(reversed(self.coeffs)))

    def __str__(self):
        if not self.coeffs:
            return '0'
        bracket = getattr(self.field, 'e', 1) > 1
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = '' if i == 0 else ('x' if i == 1 else f'x^{i}')
            if c == 1 and i > 0:
                parts.append(mono)
            else:
                cs = f'[{c}]' if bracket else str(c)
                parts.append(cs + mono)
        return '+'.join(parts)

    def __repr__(self):
        return f"Poly({self})"


class ExtensionField:
    """``K = F_{q^n}`` over a base field ``F``.

    ``theta`` (a normal element) stays ``None`` until :func:`find_normal_basis`.
    """

    def __init__(self, base, n, max_order=MAX_EXTENSION_ORDER):
        if n < 1:
            raise ValueError(f"extension degree must be positive, got {n}")
        if base.q**n > max_order:
            raise BudgetExceeded(f"extension F_{base.q}^{n}", base.q**n, max_order)
        self.base = base
        self.n = n
        self.q = base.q
        self.order = base.q**n
        self.modulus = _first_irreducible(base, n)
        self.theta = None
        self._normal_inv = None
        self._frob_table = None
        self._char2 = base.p == 2
        # images of the power basis under x -> x^q; Frobenius is F-linear
        self._frob_basis = [self.from_vec(self._pow_vec(self._unit(i), self.q))
                            for i in range(n)]

    def __repr__(self):
        return f"ExtensionField(q={self.q}, n={self.n})"

    @property
    def modulus_poly(self):
        return Poly(self.base, self.modulus)

    # representation
    def to_vec(self, code):
        q = self.q
        out = []
        for _ in range(self.n):
            code, r = divmod(code, q)
            out.append(r)
        return out

    def from_vec(self, v):
        code = 0
        for x in reversed(v):
            code = code * self.q + x
        return code

    def _unit(self, i):
        v = [0] * self.n
        v[i] = 1
        return v

    def from_base(self, c):
        """Embed a base-field code into K."""
        return c

    def is_base(self, code):
        return code < self.q

    def element(self, code):
        return FieldElement(self, code)

    # arithmetic on codes
    def add(self, a, b):
        if self._char2:
            # codes are bit strings of F_2-coordinates
            return a ^ b
        F = self.base
        return self.from_vec([F.add(x, y) for x, y in zip(self.to_vec(a), self.to_vec(b))])

    def neg(self, a):
        if self._char2:
            return a
        F = self.base
        return self.from_vec([F.neg(x) for x in self.to_vec(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scale(self, c, a):
        F = self.base
        return self.from_vec([F.mul(c, x) for x in self.to_vec(a)])

    def _mul_vec(self, u, v):
        r = _pdivmod(self.base, _pmul(self.base, _trim(u), _trim(v)), self.modulus)[1]
        return list(r) + [0] * (self.n - len(r))

    def mul(self, a, b):
        return self.from_vec(self._mul_vec(self.to_vec(a), self.to_vec(b)))

    def _pow_vec(self, v, m):
        result = self._unit(0)
        while m:
            if m & 1:
                result = self._mul_vec(result, v)
            v = self._mul_vec(v, v)
            m >>= 1
        return result

    def pow(self, a, m):
        if m < 0:
            a, m = self.inv(a), -m
        return self.from_vec(self._pow_vec(self.to_vec(a), m))

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.pow(a, self.order - 2)

    def _frob_linear(self, a):
        F = self.base
        acc = [0] * self.n
        for c, img in zip(self.to_vec(a), self._frob_basis):
            if c:
                acc = [F.add(x, F.mul(c, y)) for x, y in zip(acc, self.to_vec(img))]
        return self.from_vec(acc)

    def frob(self, a, k=1):
        """``a^(q^k)`` via the precomputed linear map (tabulated for small K)."""
        k %= self.n
        if not k:
            return a
        if self._frob_table is None and self.order <= FROBENIUS_TABLE_LIMIT:
            self._frob_table = [self._frob_linear(c) for c in range(self.order)]
        table = self._frob_table
        for _ in range(k):
            a = table[a] if table is not None else self._frob_linear(a)
        return a

    def frob_direct(self, a, k=1):
        """``a^(q^k)`` by plain exponentiation (independent of :meth:`frob`)."""
        return self.pow(a, self.q**k)

    def orbit(self, a):
        """Frobenius orbit ``a, a^q, a^(q^2), ...`` up to the first repeat."""
        out = [a]
        x = self.frob(a)
        while x != a:
            out.append(x)
            x = self.frob(x)
        return out

    def trace_code(self, a):
        total = 0
        x = a
        for _ in range(self.n):
            total = self.add(total, x)
            x = self.frob(x)
        if not self.is_base(total):
            raise ArithmeticError(f"trace of {a} left the base field: {self.to_vec(total)}")
        return total


@dataclass(frozen=True)
class FieldElement:
    field: ExtensionField
    code: int

    @property
    def vec(self):
        return tuple(self.field.to_vec(self.code))

    def _wrap(self, code):
        return FieldElement(self.field, code)

    def _other(self, other):
        return other.code if isinstance(other, FieldElement) else self.field.from_base(other)

    def __add__(self, other):
        return self._wrap(self.field.add(self.code, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.code, self._other(other)))

    def __neg__(self):
        return self._wrap(self.field.neg(self.code))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.code, self._other(other)))

    __rmul__ = __mul__

    def __pow__(self, m):
        return self._wrap(self.field.pow(self.code, m))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == other
        return NotImplemented

    def __hash__(self):
        return hash(self.code)

    def __str__(self):
        return str(Poly(self.field.base, self.vec))


def build_extension(F, n, max_order=MAX_EXTENSION_ORDER):
    return ExtensionField(F, n, max_order)


def additive_group(F):
    """``(F, +)`` as the elementary abelian group ``C_p x ... x C_p``."""
    return build_group('x'.join([f'C{F.p}'] * F.e))


# operations -----------------------------------------------------------------

def _code(z):
    return z.code if isinstance(z, FieldElement) else z


def frobenius(K, z, k=1):
    """``z^(q^k)``."""
    return K.element(K.frob(_code(z), k))


def trace(K, z):
    """Trace of ``z`` over the base field, returned as a base-field code."""
    return K.trace_code(_code(z))


def _rank(F, rows):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = F.inv(rows[rank][col])
        rows[rank] = [F.mul(inv, x) for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = rows[i][col]
                rows[i] = [F.sub(x, F.mul(c, y)) for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _invert_matrix(F, m):
    n = len(m)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        pivot = next(i for i in range(col, n) if aug[i][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = F.inv(aug[col][col])
        aug[col] = [F.mul(inv, x) for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                c = aug[i][col]
                aug[i] = [F.sub(x, F.mul(c, y)) for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def find_normal_basis(K):
    """First element (in code order) whose Frobenius conjugates form a basis.

    Sets ``K.theta`` and returns it as a FieldElement.
    """
    if K.theta is None:
        for c in range(1, K.order):
            rows = [K.to_vec(K.frob(c, i)) for i in range(K.n)]
            if _rank(K.base, rows) == K.n:
                K.theta = c
                K._normal_inv = _invert_matrix(K.base, rows)
                K._normal_basis = [K.frob(c, i) for i in range(K.n)]
                break
        else:
            raise AssertionError(f"no normal element found in {K}")
        if K.trace_code(K.theta) == 0:
            raise AssertionError(f"normal element {K.theta} has trace 0")
    return K.element(K.theta)


def phi_map(K, a):
    """``a_0 theta + a_1 theta^q + ... + a_{n-1} theta^(q^(n-1))``."""
    if K.theta is None:
        raise ValueError("normal element not set; call find_normal_basis first")
    a = tuple(a)
    if len(a) != K.n:
        raise ValueError(f"expected {K.n} coefficients, got {len(a)}")
    total = 0
    for c, b in zip(a, K._normal_basis):
        if c:
            total = K.add(total, K.scale(c, b))
    return K.element(total)


def phi_inverse(K, z):
    """Coordinates of ``z`` in the normal basis."""
    if K.theta is None:
        raise ValueError("normal element not set; call find_normal_basis first")
    F = K.base
    v = K.to_vec(_code(z))
    out = []
    for j in range(K.n):
        acc = 0
        for i, x in enumerate(v):
            if x:
                acc = F.add(acc, F.mul(x, K._normal_inv[i][j]))
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class FieldClass:
    """A Frobenius orbit in K, with its common trace."""
    members: tuple
    trace: int

    @property
    def size(self):
        return len(self.members)


def _check_enumerable(K, bound):
    if K.order > bound:
        raise BudgetExceeded(f"elements of {K}", K.order, bound)


def conjugacy_classes_of_field(K, bound=MAX_EXTENSION_ORDER):
    """Partition of K into Frobenius orbits, ordered by smallest member."""
    _check_enumerable(K, bound)
    seen = [False] * K.order
    out = []
    for c in range(K.order):
        if seen[c]:
            continue
        orb = K.orbit(c)
        for x in orb:
            seen[x] = True
        out.append(FieldClass(tuple(sorted(orb)), K.trace_code(c)))
    return out


def min_poly(K, z):
    """Minimal polynomial of ``z`` over the base field: the product of ``x - z_i``
    over the Frobenius orbit of ``z``."""
    z = _code(z)
    f = (1,)
    for r in K.orbit(z):
        f = _pmul(K, f, (K.neg(r), 1))
    for c in f:
        if not K.is_base(c):
            raise ArithmeticError(f"minimal polynomial of {z} has a coefficient outside the base field")
    return Poly(K.base, f)


def enumerate_irreducibles(F, n, second_coeff=None, bound=MAX_EXTENSION_ORDER):
    """Monic irreducible degree-n polynomials over F, optionally with a fixed
    coefficient of ``x^(n-1)``, in canonical order."""
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    if F.q**n > bound:
        raise BudgetExceeded(f"monic degree-{n} polynomials over F_{F.q}", F.q**n, bound)
    out = []
    for f in monic_polys(F, n):
        if second_coeff is not None and f[n - 1] != second_coeff:
            continue
        if is_irreducible(F, f):
            out.append(Poly(F, f))
    return out


def count_trace_zero_classes(K, bound=MAX_EXTENSION_ORDER):
    """``(trace-0 classes, trace-0 classes of size exactly n)`` by enumeration."""
    classes = conjugacy_classes_of_field(K, bound)
    zero = [c for c in classes if c.trace == 0]
    full = [c for c in zero if c.size == K.n]
    return CountResult.exact(len(zero)), CountResult.exact(len(full))


@dataclass
class PhiReport:
    q: int
    n: int
    theta: int = 0
    tuples_checked: int = 0
    exhaustive: bool = True
    equivariance: list = field(default_factory=list)
    zero_sum_trace: list = field(default_factory=list)
    orbit_size: list = field(default_factory=list)
    injectivity: list = field(default_factory=list)
    trace_coefficient: list = field(default_factory=list)
    trace_zero_classes: int = 0
    zero_sum_necklaces: int = 0
    trace_zero_full_classes: int = 0
    aperiodic_zero_sum_necklaces: int = 0

    @property
    def ok(self):
        return (self.trace_zero_classes == self.zero_sum_necklaces
                and self.trace_zero_full_classes == self.aperiodic_zero_sum_necklaces
                and not (self.equivariance or self.zero_sum_trace or self.orbit_size
                         or self.injectivity or self.trace_coefficient))

    def lines(self):
        yield f"theta={self.theta} tuples checked={self.tuples_checked} exhaustive={self.exhaustive}"
        for name in ('equivariance', 'zero_sum_trace', 'orbit_size', 'injectivity',
                     'trace_coefficient'):
            bad = getattr(self, name)
            yield f"{name}: {'pass' if not bad else f'{len(bad)} failures, first {bad[0]}'}"
        yield (f"trace-0 classes={self.trace_zero_classes} "
               f"zero-sum necklaces={self.zero_sum_necklaces}")
        yield (f"trace-0 classes of size n={self.trace_zero_full_classes} "
               f"aperiodic zero-sum necklaces={self.aperiodic_zero_sum_necklaces}")


def verify_phi_equivariance(K, sample_above=10**5, seed=0):
    """Check the normal-basis map against rotation and Frobenius.

    For every tuple ``a`` in ``F^n`` (a seeded random sample of
    ``sample_above`` tuples when there are more):

    * ``phi(rotate(a)) == frobenius(phi(a))``;
    * ``a`` sums to 0 iff ``phi(a)`` has trace 0;
    * the rotation orbit of ``a`` and the Frobenius orbit of ``phi(a)`` have
      the same size;
    * ``phi`` is injective (exhaustive runs only).

    Also counts trace-0 classes (all, and of size n) against the zero-sum and
    aperiodic zero-sum necklace formulas, and checks that each size-n class's
    minimal polynomial has ``x^(n-1)`` coefficient ``-trace``.
    """
    F = K.base
    find_normal_basis(K)
    rep = PhiReport(K.q, K.n, theta=K.theta)
    total = K.order
    if total > sample_above:
        rng = random.Random(seed)
        tuples = (tuple(rng.randrange(F.q) for _ in range(K.n)) for _ in range(sample_above))
        rep.exhaustive = False
    else:
        tuples = itertools.product(range(F.q), repeat=K.n)
    images = set()
    for a in tuples:
        rep.tuples_checked += 1
        z = phi_map(K, a).code
        if phi_map(K, rotate(a, 1)).code != K.frob(z):
            rep.equivariance.append(a)
        s = 0
        for x in a:
            s = F.add(s, x)
        if (s == 0) != (K.trace_code(z) == 0):
            rep.zero_sum_trace.append(a)
        if smallest_period(a) != len(K.orbit(z)):
            rep.orbit_size.append(a)
        if rep.exhaustive:
            if z in images:
                rep.injectivity.append(a)
            images.add(z)
    if rep.exhaustive and len(images) != total:
        rep.injectivity.append(('image size', len(images)))

    all_zero, full_zero = count_trace_zero_classes(K)
    rep.trace_zero_classes = all_zero.value
    rep.trace_zero_full_classes = full_zero.value
    A = additive_group(F)
    rep.zero_sum_necklaces = count_identity_necklaces(A, K.n).value
    rep.aperiodic_zero_sum_necklaces = count_aperiodic(A, K.n).value
    for cls in conjugacy_classes_of_field(K):
        if cls.size == K.n:
            f = min_poly(K, cls.members[0])
            if f.second_coeff != F.neg(cls.trace):
                rep.trace_coefficient.append(cls.members[0])
    return rep
