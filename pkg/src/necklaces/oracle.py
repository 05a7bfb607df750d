"""
Brute-force ground truth for the necklace counts.

Tuples are plain Python tuples of element indices. Internally a tuple
``(a_1, ..., a_n)`` over a group of order ``r`` is encoded as the mixed-radix
integer ``a_1 r^(n-1) + ... + a_n``, so lexicographic order on tuples is
numeric order on codes. Orbits are found with a seen-set over codes: walk the
action from each unseen tuple and mark everything reached. Nothing here uses
the closed-form formulas.
"""

from collections import Counter
from dataclasses import dataclass, field
from math import gcd
import itertools

import numpy as np

from .errors import BudgetExceeded, OracleMismatch
from .formulas import CountResult
from .groups import ConjClosedSubset, make_subset, torsion_count_K

__all__ = [
    'DEFAULT_BUDGET', 'TupleOrbit', 'HomogeneousOrbit', 'BijectionReport',
    'rotate', 'encode', 'decode', 'smallest_period',
    'enumerate_identity_tuples', 'enumerate_K_tuples', 'K_tuple_codes',
    'orbits_rotation', 'rotation_orbits', 'period_census',
    'burnside_count_rotation', 'fixed_tuple_count',
    'orbits_homogeneous', 'act_homogeneous', 'delta_map', 'gamma_map',
    'verify_bijection', 'format_orbit',
]

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True, order=True)
class TupleOrbit:
    representative: tuple
    size: int
    smallest_period: int


@dataclass(frozen=True, order=True)
class HomogeneousOrbit:
    representative: tuple
    size: int


def format_orbit(orbit):
    """One line of the orbit dump: ``rep=0,1,1 size=3``."""
    return f"rep={','.join(map(str, orbit.representative))} size={orbit.size}"


# tuples and codes ----------------------------------------------------------

def rotate(a, i=1):
    """Rotate ``a`` by ``i`` steps to the right: ``rotate((x, y, z)) == (z, x, y)``."""
    a = tuple(a)
    n = len(a)
    if n == 0:
        return a
    i %= n
    return a[n - i:] + a[:n - i]


def encode(a, r):
    code = 0
    for x in a:
        code = code * r + x
    return code


def decode(code, r, n):
    out = [0] * n
    for j in range(n - 1, -1, -1):
        code, out[j] = divmod(code, r)
    return tuple(out)


def smallest_period(a):
    """Least ``k >= 1`` with ``rotate(a, k) == a``."""
    a = tuple(a)
    for k in range(1, len(a) + 1):
        if rotate(a, k) == a:
            return k
    return max(len(a), 1)


def _check_budget(what, size, budget):
    if size > budget:
        raise BudgetExceeded(what, size, budget)


def _members(G, K):
    if K is None:
        return [0]
    if isinstance(K, ConjClosedSubset):
        if K.group is not G:
            raise ValueError(f"subset belongs to {K.group.spec_string}, not {G.spec_string}")
        return sorted(K.members)
    return sorted(make_subset(G, K).members)


# enumeration ---------------------------------------------------------------

def K_tuple_codes(G, K, n, budget=DEFAULT_BUDGET):
    """Codes of all n-tuples whose product lies in ``K`` (``None`` means ``{1}``).

    Order: lexicographic in the first ``n-1`` entries; within one prefix the
    last entry runs over ``prefix^-1 k`` for ``k`` in ``K`` ascending.
    """
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    ks = _members(G, K)
    r = G.order
    count = len(ks) * r ** (n - 1)
    _check_budget(f"{'K' if K is not None else 'identity'}-product {n}-tuples over {G.spec_string}",
                  count, budget)
    if not G.has_table:
        return np.fromiter(
            (encode(a, r) for a in _K_tuples_python(G, ks, n)), dtype=np.int64, count=count)
    table = G.table_array
    inv = G.inverse_array
    m = r ** (n - 1)
    prefix = np.arange(m, dtype=np.int64)
    acc = np.zeros(m, dtype=np.int64)
    for j in range(n - 1):
        digit = (prefix // r ** (n - 2 - j)) % r
        acc = table[acc, digit]
    acc_inv = inv[acc]
    last = np.stack([table[acc_inv, k] for k in ks], axis=1)
    return (prefix[:, None] * r + last).ravel()


def _K_tuples_python(G, ks, n):
    for prefix in itertools.product(range(G.order), repeat=n - 1):
        p_inv = G.inv(G.product(prefix))
        for k in ks:
            yield prefix + (G.mul(p_inv, k),)


def enumerate_K_tuples(G, K, n, budget=DEFAULT_BUDGET):
    """Stream every n-tuple over ``G`` whose product lies in ``K``."""
    r = G.order
    for code in K_tuple_codes(G, K, n, budget).tolist():
        yield decode(code, r, n)


def enumerate_identity_tuples(G, n, budget=DEFAULT_BUDGET):
    """Stream every n-tuple over ``G`` with product 1 (exactly ``|G|^(n-1)`` of them)."""
    return enumerate_K_tuples(G, None, n, budget)


# rotation orbits -----------------------------------------------------------

def _partition_rotation(codes, r, n):
    """Split a rotation-closed set of codes into orbits.

    Returns ``(orbits, label)`` where ``orbits`` is a list of
    ``(min_code, size, smallest_period)`` and ``label`` maps code -> orbit index.
    """
    present = set(codes)
    if len(present) != len(codes):
        raise OracleMismatch("tuple stream contains duplicates")
    top = r ** (n - 1)
    label = {}
    orbits = []
    for c in codes:
        if c in label:
            continue
        idx = len(orbits)
        x = c
        period = 0
        members = {c}
        for step in range(1, n + 1):
            x = (x % r) * top + x // r
            if not period and x == c:
                period = step
            members.add(x)
        for y in members:
            if y not in present:
                raise OracleMismatch(f"stream not closed under rotation: missing code {y}")
            label[y] = idx
        orbits.append((min(members), len(members), period))
    return orbits, label


def _to_orbits(raw, r, n):
    return sorted(TupleOrbit(decode(c, r, n), size, period) for c, size, period in raw)


def orbits_rotation(G, tuples):
    """Partition a rotation-closed stream of tuples into rotation orbits.

    Each orbit is reported by its lexicographically least member.
    """
    tuples = [tuple(a) for a in tuples]
    if not tuples:
        return []
    n = len(tuples[0])
    if any(len(a) != n for a in tuples):
        raise ValueError("tuples of mixed length")
    r = G.order
    raw, _ = _partition_rotation([encode(a, r) for a in tuples], r, n)
    return _to_orbits(raw, r, n)


def rotation_orbits(G, n, K=None, budget=DEFAULT_BUDGET):
    """All rotation orbits of K-product n-tuples (identity-product by default)."""
    codes = K_tuple_codes(G, K, n, budget).tolist()
    raw, _ = _partition_rotation(codes, G.order, n)
    return _to_orbits(raw, G.order, n)


def period_census(orbits):
    """``{smallest period: number of orbits}``."""
    return dict(sorted(Counter(o.smallest_period for o in orbits).items()))


# fixed points --------------------------------------------------------------

def _block_hits(G, ks, g, e, budget):
    """Number of g-blocks whose product, raised to the e-th power, lies in ks."""
    r = G.order
    _check_budget(f"{g}-blocks over {G.spec_string}", r ** g, budget)
    members = set(ks)
    if not G.has_table:
        return sum(1 for block in itertools.product(range(r), repeat=g)
                   if G.pow(G.product(block), e) in members)
    table = G.table_array
    codes = np.arange(r ** g, dtype=np.int64)
    acc = np.zeros(r ** g, dtype=np.int64)
    for j in range(g):
        acc = table[acc, (codes // r ** (g - 1 - j)) % r]
    powered = np.zeros_like(acc)
    for _ in range(e):
        powered = table[powered, acc]
    return int(np.isin(powered, np.fromiter(members, dtype=np.int64)).sum())


def burnside_count_rotation(G, K=None, n=1, budget=DEFAULT_BUDGET):
    """Orbit count as the average number of tuples fixed by each rotation.

    A tuple fixed by ``g^k`` repeats a block of length ``gcd(k, n)``; such a
    tuple has product in K iff the block product to the power
    ``n / gcd(k, n)`` does. Blocks are enumerated outright.
    """
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    ks = _members(G, K)
    cache = {}
    total = 0
    for k in range(1, n + 1):
        g = gcd(k, n)
        if g not in cache:
            cache[g] = _block_hits(G, ks, g, n // g, budget)
        total += cache[g]
    q, rem = divmod(total, n)
    if rem:
        raise OracleMismatch(f"fixed-point total {total} not divisible by {n}")
    return CountResult(q, total, n, 'oracle')


def fixed_tuple_count(G, K, n, k, budget=DEFAULT_BUDGET):
    """Number of K-product n-tuples fixed by rotation through ``k`` steps (``k | n``).

    Computed as ``[G : K : n/k] |G|^(k-1)`` and, when the tuples fit in the
    budget, also by enumerating them; the two must agree.
    """
    if n < 1 or k < 1 or n % k:
        raise ValueError(f"{k} does not divide {n}")
    ks = _members(G, K)
    subset = K if isinstance(K, ConjClosedSubset) else make_subset(G, ks)
    r = G.order
    by_formula = torsion_count_K(G, subset, n // k) * r ** (k - 1)
    if len(ks) * r ** (n - 1) > budget:
        return CountResult.exact(by_formula, 'formula')
    codes = K_tuple_codes(G, subset, n, budget)
    shifted = (codes % r ** k) * r ** (n - k) + codes // r ** k
    by_enum = int((shifted == codes).sum())
    if by_enum != by_formula:
        raise OracleMismatch(
            f"fixed tuples disagree for ({G.spec_string}, K={ks}, n={n}, k={k}): "
            f"formula {by_formula}, enumeration {by_enum}")
    return CountResult.exact(by_enum, 'oracle')


# homogeneous orbits and the bijection -------------------------------------

def act_homogeneous(G, a, i, h):
    """``(g^i, h) . a``: left-multiply every entry by ``h``, then rotate ``i`` right."""
    return rotate(tuple(G.mul(h, x) for x in a), i)


def _partition_homogeneous(G, n, budget):
    r = G.order
    _check_budget(f"{n}-tuples over {G.spec_string}", r ** n, budget)
    label = [-1] * (r ** n)
    orbits = []
    for c in range(r ** n):
        if label[c] >= 0:
            continue
        idx = len(orbits)
        a = decode(c, r, n)
        members = set()
        for h in range(r):
            b = [G.mul(h, x) for x in a]
            for i in range(n):
                members.add(encode(b[n - i:] + b[:n - i], r))
        for y in members:
            label[y] = idx
        orbits.append((min(members), len(members)))
    return orbits, label


def orbits_homogeneous(G, n, budget=DEFAULT_BUDGET):
    """Orbits of ``C_n x G`` acting on all of ``G^n``."""
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    raw, _ = _partition_homogeneous(G, n, budget)
    return sorted(HomogeneousOrbit(decode(c, G.order, n), size) for c, size in raw)


def delta_map(G, a):
    """Consecutive quotients ``a_(j-1)^-1 a_j`` with ``a_0 = a_n``."""
    a = tuple(a)
    return tuple(G.mul(G.inv(a[j - 1]), a[j]) for j in range(len(a)))


def gamma_map(G, a):
    """Prefix products ``a_1 a_2 ... a_j`` of an identity-product tuple."""
    out = []
    acc = 0
    for x in a:
        acc = G.mul(acc, x)
        out.append(acc)
    if out and out[-1] != 0:
        raise ValueError(f"gamma_map needs an identity-product tuple, got {tuple(a)}")
    return tuple(out)


@dataclass
class BijectionReport:
    group: str
    n: int
    homogeneous_orbits: int = 0
    rotation_orbits: int = 0
    delta_well_defined: list = field(default_factory=list)
    gamma_well_defined: list = field(default_factory=list)
    gamma_after_delta: list = field(default_factory=list)
    delta_after_gamma: list = field(default_factory=list)
    pointwise: list = field(default_factory=list)

    @property
    def ok(self):
        return (self.homogeneous_orbits == self.rotation_orbits
                and not (self.delta_well_defined or self.gamma_well_defined or self.gamma_after_delta
                         or self.delta_after_gamma or self.pointwise))

    def lines(self):
        yield f"orbit counts: homogeneous={self.homogeneous_orbits} rotation={self.rotation_orbits}"
        for name in ('delta_well_defined', 'gamma_well_defined', 'gamma_after_delta', 'delta_after_gamma', 'pointwise'):
            bad = getattr(self, name)
            yield f"{name}: {'pass' if not bad else f'{len(bad)} counterexamples, first {bad[0]}'}"


def verify_bijection(G, n, budget=DEFAULT_BUDGET):
    """Check that delta and gamma descend to mutually inverse maps on orbits.

    * delta_well_defined: delta sends each ``C_n x G``-orbit into a single rotation orbit;
    * gamma_well_defined: gamma sends each rotation orbit into a single ``C_n x G``-orbit;
    * the induced orbit maps compose to the identity both ways;
    * ``delta(gamma(a)) == a`` for every identity-product tuple.

    Counterexamples are collected, not raised.
    """
    r = G.order
    rep = BijectionReport(G.spec_string, n)
    h_raw, h_label = _partition_homogeneous(G, n, budget)
    codes = K_tuple_codes(G, None, n, budget).tolist()
    r_raw, r_label = _partition_rotation(codes, r, n)
    rep.homogeneous_orbits = len(h_raw)
    rep.rotation_orbits = len(r_raw)

    delta_image = [None] * len(h_raw)
    for c in range(r ** n):
        a = decode(c, r, n)
        target = r_label[encode(delta_map(G, a), r)]
        o = h_label[c]
        if delta_image[o] is None:
            delta_image[o] = target
        elif delta_image[o] != target:
            rep.delta_well_defined.append(a)

    gamma_image = [None] * len(r_raw)
    for c in codes:
        a = decode(c, r, n)
        b = gamma_map(G, a)
        if delta_map(G, b) != a:
            rep.pointwise.append(a)
        target = h_label[encode(b, r)]
        o = r_label[c]
        if gamma_image[o] is None:
            gamma_image[o] = target
        elif gamma_image[o] != target:
            rep.gamma_well_defined.append(a)

    for o, (c, _) in enumerate(h_raw):
        x = delta_image[o]
        if gamma_image[x] != o:
            rep.gamma_after_delta.append(decode(c, r, n))
    for x, (c, _, _) in enumerate(r_raw):
        o = gamma_image[x]
        if delta_image[o] != x:
            rep.delta_after_gamma.append(decode(c, r, n))
    return rep
