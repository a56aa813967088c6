"""Command line front end.

Exit codes: 0 success (and predicate true), 1 predicate false or
counterexamples found, 2 invalid input, 3 internal invariant violation.

Signatures are written as comma-separated invariant factors ("2,4"),
matrices with ';' between rows and ',' between entries ("1,1;0,2").
Lattices serialize to JSON as {"signature", "nodes", "hasse_edges"} with
nodes {"id", "matrix", "order"}, and to DOT as a digraph named "lattice"
whose edges point from lower to upper cover.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import equivalence, oracle, posets
from .errors import InternalInvariantError, UsageError
from .fundamental import (
    GroupSignature,
    build_lattice,
    enumerate_lattice,
    is_member,
    leq,
    matrix_from_text,
    matrix_to_text,
)


def dump_json(payload) -> str:
    'Canonical JSON: no whitespace, insertion order; reload+dump is stable.'
    return json.dumps(payload, separators=(',', ':'))


def parse_signature(text: str) -> GroupSignature:
    try:
        parts = tuple(int(x.strip()) for x in text.strip().split(','))
    except ValueError as e:
        raise UsageError(f'cannot parse signature {text!r}') from e
    return GroupSignature(parts)


def nodes_payload(sig: GroupSignature) -> dict:
    return {
        'signature': list(sig.d),
        'nodes': [
            {'id': e.id, 'matrix': [list(row) for row in e.matrix],
             'order': e.subgroup_order}
            for e in enumerate_lattice(sig)
        ],
    }


def lattice_payload(sig: GroupSignature) -> dict:
    payload = nodes_payload(sig)
    payload['hasse_edges'] = [[lo, hi] for lo, hi in build_lattice(sig).hasse_edges]
    return payload


def lattice_dot(sig: GroupSignature) -> str:
    lines = ['digraph lattice {']
    for e in enumerate_lattice(sig):
        label = f'{matrix_to_text(e.matrix)}\\norder {e.subgroup_order}'
        lines.append(f'  n{e.id} [label="{label}"];')
    for lo, hi in build_lattice(sig).hasse_edges:
        lines.append(f'  n{lo} -> n{hi};')
    lines.append('}')
    return '\n'.join(lines)


def report_payload(report: equivalence.TheoremReport) -> dict:
    return {
        'theorem': report.theorem,
        'max_order': report.max_order,
        'cases': report.cases,
        'counterexamples': report.counterexamples,
        'oracle_checked': report.oracle_checked,
        'pass': report.passed,
    }


def _cmd_enumerate(args) -> int:
    sig = parse_signature(args.sig)
    if args.json:
        print(dump_json(nodes_payload(sig)))
    else:
        for e in enumerate_lattice(sig):
            print(f'{e.id}: {matrix_to_text(e.matrix)} order={e.subgroup_order}')
    return 0


def _cmd_hasse(args) -> int:
    sig = parse_signature(args.sig)
    if args.format == 'json':
        print(dump_json(lattice_payload(sig)))
    else:
        print(lattice_dot(sig))
    return 0


def _cmd_member(args) -> int:
    sig = parse_signature(args.sig)
    verdict = is_member(sig, matrix_from_text(args.matrix))
    print('true' if verdict else 'false')
    return 0 if verdict else 1


def _cmd_leq(args) -> int:
    sig = parse_signature(args.sig)
    verdict = leq(sig, matrix_from_text(args.left), matrix_from_text(args.right))
    print('true' if verdict else 'false')
    return 0 if verdict else 1


def _cmd_iso(args) -> int:
    left = parse_signature(args.left)
    right = parse_signature(args.right)
    rep = equivalence.tuples_equivalent(left, right)
    print('true' if rep.equivalent else 'false')
    print(f'  {rep.detail}')
    if rep.r is not None:
        print(f'  r={rep.r} new_left={list(rep.new_primes_left)} '
              f'new_right={list(rep.new_primes_right)}')
    if rep.pairing:
        print('  pairing: ' + ', '.join(f'{p}<->{q} (exp {s})' for p, q, s in rep.pairing))
    if args.oracle:
        brute = posets.are_isomorphic(
            oracle.subgroup_lattice(left, args.oracle_bound),
            oracle.subgroup_lattice(right, args.oracle_bound))
        print(f'  oracle: {"true" if brute else "false"}')
        if brute != rep.equivalent:
            raise InternalInvariantError(
                'criterion disagrees with brute-force lattice isomorphism')
    return 0 if rep.equivalent else 1


def _cmd_oracle_subgroups(args) -> int:
    sig = parse_signature(args.sig)
    subs = oracle.all_subgroups(sig, args.oracle_bound)
    print(f'{len(subs)} subgroups of Z{list(sig.d)}')
    for i, s in enumerate(subs):
        elems = ' '.join('(' + ','.join(map(str, e)) + ')' for e in s.elements)
        print(f'{i}: order={s.order} {elems}')
    return 0


def _cmd_verify(args) -> int:
    if args.theorem == 'theorem-a':
        report = equivalence.verify_theorem_a(args.max_order, args.oracle_bound)
    elif args.theorem == 'theorem-b':
        report = equivalence.verify_theorem_b(args.max_order)
    elif args.theorem == 'theorem-1':
        report = equivalence.verify_theorem_1(args.max_order)
    elif args.theorem == 'theorem-2':
        report = equivalence.verify_theorem_2(args.max_order, args.power)
    else:
        report = equivalence.verify_theorem_3(args.max_order, args.max_exp)
    print(dump_json(report_payload(report)))
    return 0 if report.passed else 1


def _cmd_explore(args) -> int:
    findings = equivalence.explore_open_problem(args.max_order, args.max_exp)
    print(dump_json(findings))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='abelian-lattices',
        description='Subgroup lattices of finite abelian groups as integer matrices.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('enumerate', help='list the member matrices of a signature')
    p.add_argument('--sig', required=True)
    p.add_argument('--json', action='store_true')
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser('hasse', help='emit the lattice with its covering edges')
    p.add_argument('--sig', required=True)
    p.add_argument('--format', choices=['dot', 'json'], default='dot')
    p.set_defaults(func=_cmd_hasse)

    p = sub.add_parser('member', help='test membership of one matrix')
    p.add_argument('--sig', required=True)
    p.add_argument('--matrix', required=True)
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser('leq', help='compare two member matrices')
    p.add_argument('--sig', required=True)
    p.add_argument('--left', required=True)
    p.add_argument('--right', required=True)
    p.set_defaults(func=_cmd_leq)

    p = sub.add_parser('iso', help='decide lattice isomorphism of two signatures')
    p.add_argument('--left', required=True)
    p.add_argument('--right', required=True)
    p.add_argument('--oracle', action='store_true',
                   help='also compare brute-force lattices')
    p.add_argument('--oracle-bound', type=int, default=oracle.DEFAULT_ORDER_BOUND)
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser('oracle-subgroups', help='enumerate subgroups by brute force')
    p.add_argument('--sig', required=True)
    p.add_argument('--oracle-bound', type=int, default=oracle.DEFAULT_ORDER_BOUND)
    p.set_defaults(func=_cmd_oracle_subgroups)

    p = sub.add_parser('verify', help='run a verification sweep')
    p.add_argument('theorem', choices=[
        'theorem-a', 'theorem-b', 'theorem-1', 'theorem-2', 'theorem-3'])
    p.add_argument('--max-order', type=int, required=True)
    p.add_argument('--power', type=int, default=2, help='power n for theorem-2')
    p.add_argument('--max-exp', type=int, default=4, help='exponent bound for theorem-3')
    p.add_argument('--oracle-bound', type=int, default=oracle.DEFAULT_ORDER_BOUND)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser('explore', help='search the open problem at small scale')
    p.add_argument('--max-order', type=int, required=True)
    p.add_argument('--max-exp', type=int, required=True)
    p.set_defaults(func=_cmd_explore)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f'error: {e}', file=sys.stderr)
        return 2
    except InternalInvariantError as e:
        print(f'internal invariant violated: {e}', file=sys.stderr)
        return 3


if __name__ == '__main__':
    raise SystemExit(main())
