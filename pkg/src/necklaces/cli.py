"""Command-line front end: ``necklaces <count|enumerate|sequence|field|verify>``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 budget exceeded.
"""

import argparse
import json
import sys

from .errors import BudgetExceeded, GroupSpecError
from .formulas import (count_K_aperiodic, count_K_necklaces, count_aperiodic,
                       count_homogeneous, count_identity_necklaces, count_moreau,
                       count_smallest_period)
from .galois import (additive_group, build_base_field, build_extension,
                     enumerate_irreducibles, prime_power, verify_phi_equivariance)
from .groups import build_group, conjugacy_classes, make_subset, parse_subset
from .number_theory import divisors
from .oracle import (DEFAULT_BUDGET, fixed_tuple_count, burnside_count_rotation,
                     format_orbit, orbits_homogeneous, period_census, rotation_orbits,
                     verify_bijection)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

SEQUENCES = {
    'a000013': lambda n: 'C2',
    'a130293': lambda n: f'C{n}',
    'a121774': lambda n: f'C{n + 1}',
}


class UsageError(Exception):
    pass


def _n_values(args):
    if args.n_range:
        lo, sep, hi = args.n_range.partition('..')
        try:
            lo, hi = int(lo), int(hi)
        except ValueError:
            raise UsageError(f"bad --n-range {args.n_range!r}; expected A..B") from None
        if not sep or lo < 1 or hi < lo:
            raise UsageError(f"bad --n-range {args.n_range!r}; need 1 <= A <= B")
        return list(range(lo, hi + 1))
    if args.n is None:
        raise UsageError("one of --n or --n-range is required")
    if args.n < 1:
        raise UsageError("--n must be positive")
    return [args.n]


def _group_and_subset(args):
    if not args.group:
        raise UsageError("--group is required")
    G = build_group(args.group)
    K = parse_subset(G, args.k_subset)
    return G, K


def _emit(args, record, human_lines):
    if args.json:
        print(json.dumps(record, sort_keys=False))
    else:
        for line in human_lines:
            print(line)


# count ----------------------------------------------------------------------

def _formula(G, K, n, args):
    identity = K.members == frozenset({0})
    if args.period is not None:
        if not identity:
            raise UsageError("--period is only supported with --k-subset identity")
        if n % args.period:
            raise UsageError(f"--period {args.period} does not divide n={n}")
        return count_smallest_period(G, n, args.period)
    if args.homogeneous:
        if not identity:
            raise UsageError("--homogeneous is only defined for --k-subset identity")
        return count_homogeneous(G, n)
    if args.aperiodic:
        return count_aperiodic(G, n) if identity else count_K_aperiodic(G, K, n)
    return count_identity_necklaces(G, n) if identity else count_K_necklaces(G, K, n)


def _oracle(G, K, n, args):
    if args.homogeneous:
        return len(orbits_homogeneous(G, n, args.budget))
    orbits = rotation_orbits(G, n, K, args.budget)
    if args.period is not None:
        return sum(1 for o in orbits if o.smallest_period == args.period)
    if args.aperiodic:
        return sum(1 for o in orbits if o.smallest_period == n)
    return len(orbits)


def cmd_count(args):
    G, K = _group_and_subset(args)
    status = EXIT_OK
    for n in _n_values(args):
        res = _formula(G, K, n, args)
        record = {'subcommand': 'count', 'group': G.spec_string, 'n': n,
                  'count': str(res.value), 'method': res.method}
        lines = [f"group={G.spec_string} n={n} count={res.value}"]
        if not args.json:
            lines.append(f"  sum={res.numerator_check} / {res.denominator}")
            lines.append("  d  weight  torsion  |G|^(d-1)  term")
            for t in res.terms:
                lines.append(f"  {t.d}  {t.weight}  {t.torsion}  {t.power}  {t.value}")
        if args.oracle:
            got = _oracle(G, K, n, args)
            match = got == res.value
            record.update({'oracle_count': str(got), 'match': match})
            lines.append(f"formula={res.value} oracle={got} match={str(match).lower()}")
            if not match:
                status = EXIT_MISMATCH
        _emit(args, record, lines)
    return status


# enumerate ------------------------------------------------------------------

def cmd_enumerate(args):
    G, K = _group_and_subset(args)
    for n in _n_values(args):
        if args.homogeneous:
            orbits = orbits_homogeneous(G, n, args.budget)
            census = {}
        else:
            orbits = rotation_orbits(G, n, K, args.budget)
            census = period_census(orbits)
        tuples = sum(o.size for o in orbits)
        summary = f"orbits={len(orbits)} tuples={tuples}" + ''.join(
            f" period[{k}]={v}" for k, v in census.items())
        record = {'subcommand': 'enumerate', 'group': G.spec_string, 'n': n,
                  'count': str(len(orbits)), 'method': 'oracle',
                  'orbits': [{'rep': list(o.representative), 'size': o.size} for o in orbits],
                  'periods': {str(k): str(v) for k, v in census.items()}}
        _emit(args, record, [format_orbit(o) for o in orbits] + [summary])
    return EXIT_OK


# sequence -------------------------------------------------------------------

def sequence_terms(name, max_n):
    """Terms ``1..max_n`` of one of the supported OEIS sequences."""
    if name not in SEQUENCES:
        raise UsageError(f"unknown sequence {name!r}; choose from {', '.join(SEQUENCES)}")
    return [count_identity_necklaces(build_group(SEQUENCES[name](n)), n).value
            for n in range(1, max_n + 1)]


def cmd_sequence(args):
    max_n = args.n if args.n is not None else 9
    if max_n < 1:
        raise UsageError("--n must be positive")
    terms = sequence_terms(args.name, max_n)
    record = {'subcommand': 'sequence', 'name': args.name, 'n': max_n,
              'terms': [str(t) for t in terms], 'method': 'formula'}
    _emit(args, record, [f"{args.name}: " + ','.join(map(str, terms))])
    return EXIT_OK


# field ----------------------------------------------------------------------

def _base_field(q):
    try:
        p, e = prime_power(q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return build_base_field(p, e)


def cmd_field(args):
    if args.q is None:
        raise UsageError("--q is required")
    F = _base_field(args.q)
    status = EXIT_OK
    for n in _n_values(args):
        polys = enumerate_irreducibles(F, n, second_coeff=0)
        necklaces = count_aperiodic(additive_group(F), n).value
        match = len(polys) == necklaces
        if not match:
            status = EXIT_MISMATCH
        record = {'subcommand': 'field', 'q': args.q, 'n': n, 'count': str(len(polys)),
                  'method': 'oracle', 'necklaces': str(necklaces), 'match': match}
        lines = [f"q={args.q} n={n} irreducibles={len(polys)} necklaces={necklaces} "
                 f"match={str(match).lower()}"]
        if args.list:
            record['polynomials'] = [str(f) for f in polys]
            lines += [f"  {f}" for f in polys]
        _emit(args, record, lines)
    return status


# verify ---------------------------------------------------------------------

def _group_checks(G, K, n, budget):
    checks = []
    identity = K.members == frozenset({0})
    formula = (count_identity_necklaces(G, n) if identity else count_K_necklaces(G, K, n)).value
    orbits = rotation_orbits(G, n, K, budget)
    checks.append(('formula = rotation orbits', formula == len(orbits), f"{formula} vs {len(orbits)}"))
    burn = burnside_count_rotation(G, K, n, budget).value
    checks.append(('burnside = rotation orbits', burn == len(orbits), f"{burn} vs {len(orbits)}"))
    census = period_census(orbits)
    if identity:
        per = {k: count_smallest_period(G, n, k).value for k in divisors(n)}
        ok = all(per[k] == census.get(k, 0) for k in per) and sum(per.values()) == formula
        checks.append(('smallest-period census', ok, f"formula {per} oracle {census}"))
        ap = count_aperiodic(G, n).value
        checks.append(('aperiodic count', ap == census.get(n, 0), f"{ap} vs {census.get(n, 0)}"))
    else:
        ap = count_K_aperiodic(G, K, n).value
        checks.append(('K-aperiodic count', ap == census.get(n, 0), f"{ap} vs {census.get(n, 0)}"))
    ok = True
    for k in divisors(n):
        fixed = fixed_tuple_count(G, K, n, k, budget).value
        ok &= fixed == sum(d * census.get(d, 0) for d in divisors(k))
    checks.append(('fixed tuples = sum of smaller periods', ok, ''))
    total = sum(count_K_necklaces(G, make_subset(G, c), n).value for c in conjugacy_classes(G))
    moreau = count_moreau(G.order, n).value
    checks.append(('class partition = Moreau', total == moreau, f"{total} vs {moreau}"))
    if identity and G.order ** n <= budget:
        hom = len(orbits_homogeneous(G, n, budget))
        checks.append(('homogeneous orbits = formula', hom == formula, f"{hom} vs {formula}"))
        rep = verify_bijection(G, n, budget)
        checks.append(('delta/gamma bijection', rep.ok, '; '.join(rep.lines())))
    return checks


def _field_checks(q, n):
    K = build_extension(_base_field(q), n)
    rep = verify_phi_equivariance(K)
    polys = len(enumerate_irreducibles(K.base, n, second_coeff=0))
    return [
        ('phi equivariance and trace-zero correspondence', rep.ok, '; '.join(rep.lines())),
        ('irreducibles = aperiodic zero-sum necklaces',
         polys == rep.aperiodic_zero_sum_necklaces,
         f"{polys} vs {rep.aperiodic_zero_sum_necklaces}"),
    ]


def cmd_verify(args):
    results = []
    for n in _n_values(args):
        if args.group:
            G, K = _group_and_subset(args)
            label = f"group={G.spec_string} n={n}"
            checks = _group_checks(G, K, n, args.budget)
        elif args.q is not None:
            label = f"q={args.q} n={n}"
            checks = _field_checks(args.q, n)
        else:
            raise UsageError("verify needs --group or --q")
        results.append((label, checks))
    all_ok = all(ok for _, checks in results for _, ok, _ in checks)
    if args.json:
        for label, checks in results:
            print(json.dumps({'subcommand': 'verify', 'instance': label,
                              'match': all(ok for _, ok, _ in checks),
                              'checks': [{'name': nm, 'pass': ok, 'detail': d}
                                         for nm, ok, d in checks]}))
    else:
        for label, checks in results:
            print(label)
            for nm, ok, detail in checks:
                print(f"  {'PASS' if ok else 'FAIL'} {nm}" + (f" ({detail})" if detail else ''))
        print("all pass" if all_ok else "FAILURES")
    return EXIT_OK if all_ok else EXIT_MISMATCH


# parser -----------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog='necklaces', description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest='subcommand', required=True)

    def common(p, group=True):
        if group:
            p.add_argument('--group', help='group spec, e.g. C2xC3, S3, D4')
            p.add_argument('--k-subset', default='identity',
                           help='identity | all | class:<i> | elems:<i,j,...>')
        nn = p.add_mutually_exclusive_group()
        nn.add_argument('--n', type=int)
        nn.add_argument('--n-range', metavar='A..B')
        p.add_argument('--json', action='store_true')
        p.add_argument('--budget', type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser('count', help='closed-form counts')
    common(p)
    p.add_argument('--aperiodic', action='store_true')
    p.add_argument('--period', type=int)
    p.add_argument('--homogeneous', action='store_true')
    p.add_argument('--oracle', action='store_true', help='also count by brute force')
    p.set_defaults(func=cmd_count)

    p = sub.add_parser('enumerate', help='list orbits')
    common(p)
    p.add_argument('--homogeneous', action='store_true')
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser('sequence', help='OEIS sequence terms')
    p.add_argument('name', choices=sorted(SEQUENCES))
    p.add_argument('--n', type=int, help='number of terms (default 9)')
    p.add_argument('--json', action='store_true')
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser('field', help='irreducible polynomial census')
    common(p, group=False)
    p.add_argument('--q', type=int)
    p.add_argument('--list', action='store_true')
    p.set_defaults(func=cmd_field)

    p = sub.add_parser('verify', help='run the invariant suite on one instance')
    common(p)
    p.add_argument('--q', type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GroupSpecError, ValueError) as exc:
        print(f"necklaces {args.subcommand}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"necklaces {args.subcommand}: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == '__main__':
    sys.exit(main())
