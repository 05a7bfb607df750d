"""
Explicit finite groups on dense element indices.

Every group has elements ``0 .. order-1`` with index 0 the identity. Small
groups (order up to ``TABLE_LIMIT``) carry an eagerly built multiplication
table; larger ones multiply structurally (componentwise, or by composing
permutations). Groups are built from a tiny spec grammar::

    spec := term ("x" term)*
    term := "C" int | "S" int | "D" int

e.g. ``"C2xC2xC3"``, ``"S4"``, ``"D4xC2"``.
"""

from dataclasses import dataclass
from functools import cached_property
import itertools
import random
import re

import numpy as np

from .errors import BudgetExceeded, ConjugationClosureError, GroupSpecError

__all__ = [
    'FiniteGroup', 'ConjClosedSubset', 'build_group', 'parse_group_spec',
    'iter_group_specs', 'mul', 'inverse', 'power', 'torsion_count',
    'torsion_count_K', 'make_subset', 'parse_subset', 'conjugacy_classes',
    'TABLE_LIMIT', 'MAX_ORDER', 'MAX_SYMMETRIC_DEGREE',
]

TABLE_LIMIT = 512
MAX_ORDER = 10**4
MAX_SYMMETRIC_DEGREE = 6

_TERM = re.compile(r'([CSD])(\d+)')


class FiniteGroup:
    """A finite group given by its multiplication law on indices.

    Not meant to be constructed directly; use :func:`build_group`.
    """

    def __init__(self, order, labels, mulfn, invfn, spec_string, factors=None):
        self.order = order
        self.labels = tuple(labels)
        self.spec_string = spec_string
        self.factors = tuple(factors) if factors else (self,)
        self._mulfn = mulfn
        self._inverses = [invfn(a) for a in range(order)]
        self._table = None
        if order <= TABLE_LIMIT:
            self._table = [[mulfn(a, b) for b in range(order)] for a in range(order)]
        self._label_index = {lab: i for i, lab in enumerate(self.labels)}

    identity = 0

    def __repr__(self):
        return f"FiniteGroup({self.spec_string!r}, order={self.order})"

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    @property
    def has_table(self):
        return self._table is not None

    def mul(self, a, b):
        if self._table is not None:
            return self._table[a][b]
        return self._mulfn(a, b)

    def mul_structural(self, a, b):
        """The law evaluated without the table (used to cross-check it)."""
        return self._mulfn(a, b)

    def inv(self, a):
        return self._inverses[a]

    def index(self, label):
        """Element index for a label such as ``'g^2'`` or ``'(123)'``."""
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"no element labelled {label!r} in {self.spec_string}") from None

    def product(self, elements):
        acc = 0
        for x in elements:
            acc = self.mul(acc, x)
        return acc

    def pow(self, a, m):
        if m < 0:
            a, m = self._inverses[a], -m
        result = 0
        while m:
            if m & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            m >>= 1
        return result

    def conj(self, g, k):
        """``g k g^-1``."""
        return self.mul(self.mul(g, k), self._inverses[g])

    @cached_property
    def element_orders(self):
        orders = []
        for a in range(self.order):
            x, k = a, 1
            while x != 0:
                x = self.mul(x, a)
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def exponent(self):
        from math import lcm
        return lcm(*self.element_orders)

    @cached_property
    def is_abelian(self):
        return all(self.mul(a, b) == self.mul(b, a)
                   for a in range(self.order) for b in range(a + 1, self.order))

    @cached_property
    def table_array(self):
        """Multiplication table as an ``(order, order)`` numpy array."""
        if self._table is not None:
            return np.asarray(self._table, dtype=np.int64)
        return np.array([[self._mulfn(a, b) for b in range(self.order)]
                         for a in range(self.order)], dtype=np.int64)

    @cached_property
    def inverse_array(self):
        return np.asarray(self._inverses, dtype=np.int64)

    def check_axioms(self, samples=2000, seed=0):
        """Verify identity, inverses and associativity.

        Associativity is exhaustive for order <= 12 and sampled above.
        Raises ``AssertionError`` naming the first failure.
        """
        n = self.order
        for a in range(n):
            assert self.mul(0, a) == a and self.mul(a, 0) == a, f"identity fails at {a}"
            b = self._inverses[a]
            assert self.mul(a, b) == 0 and self.mul(b, a) == 0, f"inverse fails at {a}"
        if n <= 12:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(seed)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(samples))
        for a, b, c in triples:
            assert self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)), \
                f"associativity fails at {(a, b, c)}"
        assert len(set(self.labels)) == n, "labels are not unique"
        return True


# constructors -------------------------------------------------------------

def _cyclic(k):
    labels = ['1', 'g'] + [f'g^{i}' for i in range(2, k)]
    return FiniteGroup(k, labels[:k], lambda a, b: (a + b) % k, lambda a: (-a) % k, f'C{k}')


def _cycle_label(perm):
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        parts.append('(' + ''.join(str(i + 1) for i in cyc) + ')')
    return ''.join(parts) or '1'


def _symmetric(m):
    if m > MAX_SYMMETRIC_DEGREE:
        raise GroupSpecError(f"S{m}: symmetric groups are supported up to S{MAX_SYMMETRIC_DEGREE}")
    perms = list(itertools.permutations(range(m)))
    index = {p: i for i, p in enumerate(perms)}

    def mulfn(a, b):
        # (ab)(x) = a(b(x)): b acts first
        pa, pb = perms[a], perms[b]
        return index[tuple(pa[x] for x in pb)]

    def invfn(a):
        p = perms[a]
        q = [0] * m
        for i, x in enumerate(p):
            q[x] = i
        return index[tuple(q)]

    return FiniteGroup(len(perms), [_cycle_label(p) for p in perms], mulfn, invfn, f'S{m}')


def _dihedral(m):
    if m < 2:
        raise GroupSpecError(f"D{m}: dihedral groups need m >= 2")
    # index i -> r^i, index m+i -> s r^i
    def split(a):
        return divmod(a, m)

    def mulfn(a, b):
        sa, i = split(a)
        sb, j = split(b)
        if sb:
            return ((sa + 1) % 2) * m + (j - i) % m
        return sa * m + (i + j) % m

    def invfn(a):
        s, i = split(a)
        return a if s else (-i) % m

    rot = ['1', 'r'] + [f'r^{i}' for i in range(2, m)]
    refl = ['s', 'sr'] + [f'sr^{i}' for i in range(2, m)]
    return FiniteGroup(2 * m, rot + refl, mulfn, invfn, f'D{m}')


_BASE = {'C': _cyclic, 'S': _symmetric, 'D': _dihedral}


def _direct_product(factors, spec_string):
    sizes = [f.order for f in factors]
    order = 1
    for s in sizes:
        order *= s

    def decode(a):
        out = []
        for s in reversed(sizes):
            a, r = divmod(a, s)
            out.append(r)
        return out[::-1]

    def encode(parts):
        a = 0
        for s, x in zip(sizes, parts):
            a = a * s + x
        return a

    def mulfn(a, b):
        return encode([f.mul(x, y) for f, x, y in zip(factors, decode(a), decode(b))])

    def invfn(a):
        return encode([f.inv(x) for f, x in zip(factors, decode(a))])

    labels = ['(' + ','.join(f.labels[x] for f, x in zip(factors, decode(a))) + ')'
              for a in range(order)]
    return FiniteGroup(order, labels, mulfn, invfn, spec_string, factors=factors)


def parse_group_spec(spec):
    """Split a spec into ``[(letter, int), ...]``; raises GroupSpecError."""
    if not isinstance(spec, str) or not spec:
        raise GroupSpecError(f"empty or non-string group spec: {spec!r}")
    terms = []
    for term in spec.split('x'):
        m = _TERM.fullmatch(term)
        if not m:
            raise GroupSpecError(f"malformed term {term!r} in group spec {spec!r}")
        k = int(m.group(2))
        if k < 1:
            raise GroupSpecError(f"term {term!r} needs a positive parameter")
        terms.append((m.group(1), k))
    return terms


def _term_order(letter, k):
    if letter == 'C':
        return k
    if letter == 'D':
        return 2 * k
    from math import factorial
    return factorial(k)


def build_group(spec, max_order=MAX_ORDER):
    """Build and validate the group named by ``spec``.

    >>> build_group("C2xC3").order
    6
    """
    terms = parse_group_spec(spec)
    order = 1
    for letter, k in terms:
        order *= _term_order(letter, k)
    if order > max_order:
        raise BudgetExceeded(f"group {spec}", order, max_order)
    factors = [_BASE[letter](k) for letter, k in terms]
    G = factors[0] if len(factors) == 1 else _direct_product(factors, spec)
    G.check_axioms()
    return G


def iter_group_specs(max_order, max_terms=3):
    """Every spec string (up to ``max_terms`` factors) of order <= max_order.

    Factors are listed in a fixed order so each product appears once.
    """
    bases = []
    for k in range(1, max_order + 1):
        bases.append((f'C{k}', k))
    for m in range(1, MAX_SYMMETRIC_DEGREE + 1):
        if _term_order('S', m) <= max_order:
            bases.append((f'S{m}', _term_order('S', m)))
    for m in range(2, max_order // 2 + 1):
        bases.append((f'D{m}', 2 * m))
    nontrivial = [b for b in bases if b[1] > 1]
    yield from (b[0] for b in bases)
    for r in range(2, max_terms + 1):
        for combo in itertools.combinations_with_replacement(nontrivial, r):
            order = 1
            for _, o in combo:
                order *= o
            if order <= max_order:
                yield 'x'.join(name for name, _ in combo)


# functional surface --------------------------------------------------------

def _check_index(G, a):
    if not (0 <= a < G.order):
        raise IndexError(f"element index {a} out of range for {G.spec_string} (order {G.order})")


def mul(G, a, b):
    _check_index(G, a)
    _check_index(G, b)
    return G.mul(a, b)


def inverse(G, a):
    _check_index(G, a)
    return G.inv(a)


def power(G, a, m):
    """``a**m`` by repeated squaring; negative ``m`` goes through the inverse."""
    _check_index(G, a)
    return G.pow(a, m)


def torsion_count(G, n):
    """Number of elements ``a`` with ``a**n == 1`` (the elements whose order divides n)."""
    return sum(1 for o in G.element_orders if n % o == 0)


def torsion_count_K(G, K, n):
    """Number of elements ``a`` with ``a**n`` in the subset ``K``."""
    if K.group is not G:
        raise ValueError(f"subset belongs to {K.group.spec_string}, not {G.spec_string}")
    members = K.members
    return sum(1 for a in range(G.order) if G.pow(a, n) in members)


@dataclass(frozen=True)
class ConjClosedSubset:
    """A nonempty union of conjugacy classes of ``group``."""
    group: FiniteGroup
    members: frozenset

    def __contains__(self, a):
        return a in self.members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __repr__(self):
        return f"ConjClosedSubset({self.group.spec_string}, {sorted(self.members)})"


def make_subset(G, members):
    members = frozenset(members)
    if not members:
        raise ValueError("subset must be nonempty")
    for k in members:
        _check_index(G, k)
    for g in range(G.order):
        for k in sorted(members):
            image = G.conj(g, k)
            if image not in members:
                raise ConjugationClosureError(g, k, image)
    return ConjClosedSubset(G, members)


def conjugacy_classes(G):
    """Conjugacy classes as sorted lists, ordered by smallest member (identity first)."""
    assigned = [False] * G.order
    classes = []
    for x in range(G.order):
        if assigned[x]:
            continue
        cls = sorted({G.conj(g, x) for g in range(G.order)})
        for y in cls:
            assigned[y] = True
        classes.append(cls)
    return classes


def parse_subset(G, spec):
    """Subset from ``identity | all | class:<i> | elems:<i,j,...>``."""
    if spec == 'identity':
        return make_subset(G, {0})
    if spec == 'all':
        return make_subset(G, range(G.order))
    kind, _, arg = spec.partition(':')
    try:
        if kind == 'class':
            i = int(arg)
            _check_index(G, i)
            return make_subset(G, {G.conj(g, i) for g in range(G.order)})
        if kind == 'elems':
            return make_subset(G, {int(t) for t in arg.split(',')})
    except (ValueError, IndexError) as exc:
        if isinstance(exc, ConjugationClosureError):
            raise
        raise GroupSpecError(f"bad subset spec {spec!r}: {exc}") from None
    raise GroupSpecError(f"bad subset spec {spec!r}")
