"""Command-line front end.

Exit status for ``check`` and ``oracle``: 0 = Yes, 1 = No, 2 = Unknown,
3 = unreadable input, 4 = capability or convention violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import automaton as am
from . import decide, reductions
from .matrix import Matrix, MatrixError
from .semiring import (SEMIRING_NAMES, SemiringError, default_samples, law_check,
                       make_semiring, semiring_from_json)

EXIT = {decide.YES: 0, decide.NO: 1, decide.UNKNOWN: 2}
EXIT_PARSE = 3
EXIT_CAPABILITY = 4

DEFAULT_MAX_LEN = 12
DEFAULT_MAX_MATRICES = 10 ** 6

log = logging.getLogger('wsync')


class InputError(Exception):
    pass


def dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def matrix_set_to_json(mats, letters=None):
    s = mats[0].semiring
    return {'semiring': s.describe(), 'n': mats[0].n,
            'alphabet': list(letters or (str(i) for i in range(len(mats)))),
            'matrices': [m.to_json(with_semiring=False) for m in mats]}


def load_instance(obj):
    """(matrices, letter names, automaton or None) from a matrix-set or automaton document."""
    try:
        if 'transitions' in obj:
            aut = am.WeightedAutomaton.from_json(obj)
            return list(aut.transitions), list(aut.letters), aut
        s = semiring_from_json(obj['semiring'])
        mats = [Matrix.from_json(m if isinstance(m, dict) else {'rows': m}, semiring=s)
                for m in obj['matrices']]
        if not mats:
            raise InputError('matrix set is empty')
        if any(m.n != mats[0].n for m in mats) or ('n' in obj and obj['n'] != mats[0].n):
            raise InputError('matrices disagree on dimension')
        letters = list(obj.get('alphabet') or (str(i) for i in range(len(mats))))
        if len(letters) != len(mats):
            raise InputError('alphabet length differs from number of matrices')
        return mats, letters, None
    except (KeyError, TypeError, AttributeError) as e:
        raise InputError(f'malformed instance: {e!r}') from None
    except (SemiringError, MatrixError, am.AutomatonError) as e:
        raise InputError(str(e)) from None


def read_json(path):
    try:
        if path == '-':
            return json.load(sys.stdin)
        with open(path, encoding='utf-8') as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f'cannot read {path}: {e}') from None


def write_json(obj, path):
    text = dump(obj) + '\n'
    if path in (None, '-'):
        sys.stdout.write(text)
    else:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)


def budget_for(args, semiring) -> decide.SearchBudget:
    finite = semiring.flags.is_finite or semiring.flags.is_locally_finite
    max_len = args.max_len
    max_mats = args.max_matrices
    if not finite:
        max_len = DEFAULT_MAX_LEN if max_len is None else max_len
        max_mats = DEFAULT_MAX_MATRICES if max_mats is None else max_mats
    return decide.SearchBudget(max_len, max_mats, args.max_products)


def cmd_check(args):
    mats, letters, aut = load_instance(read_json(args.input))
    target = decide.target_name(args.target)
    s = mats[0].semiring
    if args.route == 'classical':
        if target != decide.SYNC:
            raise decide.CapabilityError('the classical route only decides sync')
        if aut is None:
            aut = am.from_matrices(mats, letters)
        word = decide.classical_dfa_sync(aut)
        verdict = (decide.Verdict(decide.YES, witness=word) if word is not None
                   else decide.Verdict(decide.NO))
    elif args.route == 'sigma':
        if target == decide.SYNC and s.name != 'boolean':
            raise decide.CapabilityError('sync depends on entry values; use --route closure')
        search = (mats if s.name == 'boolean' else decide.sigma_project(mats))
        target = decide.SYNC if target == decide.LOCSYNC else target
        verdict = decide.closure_decide(search, target, budget_for(args, search[0].semiring))
    else:
        verdict = decide.closure_decide(mats, target, budget_for(args, s))
    out = verdict.to_json(letters)
    write_json(out, None)
    if args.json_out:
        write_json(out, args.json_out)
    return EXIT[verdict.outcome]


def cmd_oracle(args):
    mats, letters, _ = load_instance(read_json(args.input))
    found = decide.shortest_word_oracle(mats, args.target, args.max_len)
    if found is None:
        verdict = decide.Verdict(decide.UNKNOWN, bound=args.max_len,
                                 reason='no witness up to the length bound')
    else:
        verdict = decide.Verdict(decide.YES, witness=found[0])
    out = verdict.to_json(letters)
    write_json(out, None)
    if args.json_out:
        write_json(out, args.json_out)
    return EXIT[verdict.outcome]


def cmd_reduce(args):
    obj = read_json(args.input)
    if args.kind == 'mortality':
        mats, _, _ = load_instance(obj)
        out = reductions.mortality_to_sync(mats)
        letters = [f'A{i}' for i in range(len(out))]
    else:
        inst = reductions.FpcpInstance.from_json(obj)
        if args.kind == 'fpcp-nat':
            out = reductions.fpcp_to_nat_sync(inst, args.digits)
            letters = reductions.nat_sync_letters(inst)
        else:
            out = reductions.fpcp_to_free_sync(inst)
            letters = reductions.free_sync_letters(inst)
    write_json(matrix_set_to_json(out, letters), args.output)
    return 0


def cmd_generate(args):
    s = make_semiring(args.semiring, k=args.k, alphabet=args.alphabet)
    aut = am.cerny_automaton(s, args.n)
    write_json(aut.to_json(), args.output)
    return 0


def cmd_verify_claims(args):
    inst = reductions.FpcpInstance.from_json(read_json(args.input))
    report = reductions.verify_claims_abc(inst, args.samples, args.seed, digits=args.digits)
    write_json(report.to_json(), args.json_out)
    return 0 if report.ok else 1


def cmd_law_check(args):
    s = make_semiring(args.semiring, k=args.k, alphabet=args.alphabet)
    report = law_check(s, default_samples(s, seed=args.seed), args.trials, args.seed)
    write_json(report.to_json(), args.json_out)
    return 0 if report.ok else 1


def build_parser():
    p = argparse.ArgumentParser(prog='wsync', description=(
        'Synchronizability of weighted automata / matrix sets over semirings.'))
    p.add_argument('-v', '--verbose', action='store_true')
    sub = p.add_subparsers(dest='verb', required=True)

    def search_flags(sp):
        sp.add_argument('input', help='matrix-set or automaton JSON file (- for stdin)')
        sp.add_argument('--target', default='sync',
                        choices=['sync', 'locsync', 'mortal', 'zero-corner'])
        sp.add_argument('--max-len', type=int)
        sp.add_argument('--json-out')


    def digit_flag(sp):
        sp.add_argument('--digits', default=reductions.PLAIN_DIGITS,
                        choices=[reductions.PLAIN_DIGITS, reductions.SHIFTED_DIGITS],
                        help='base-3 digits for symbols 0 and 1 in the 6x6 construction '
                             '(12 avoids zero and leading-zero collisions)')

    sp = sub.add_parser('check', help='decide a target property')
    search_flags(sp)
    sp.add_argument('--route', default='closure', choices=['closure', 'sigma', 'classical'])
    sp.add_argument('--max-matrices', type=int)
    sp.add_argument('--max-products', type=int)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser('oracle', help='exhaustive shortest-witness search')
    search_flags(sp)
    sp.set_defaults(func=cmd_oracle, max_len=DEFAULT_MAX_LEN)

    sp = sub.add_parser('reduce', help='build a reduction instance')
    sp.add_argument('kind', choices=['fpcp-nat', 'fpcp-free', 'mortality'])
    sp.add_argument('input')
    sp.add_argument('-o', '--output')
    digit_flag(sp)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser('generate', help='emit a generated automaton family')
    sp.add_argument('family', choices=['cerny'])
    sp.add_argument('n', type=int)
    sp.add_argument('semiring', nargs='?', default='boolean', choices=SEMIRING_NAMES)
    sp.add_argument('--k', type=int, help='modulus for int_mod')
    sp.add_argument('--alphabet', help='alphabet for fin_lang, e.g. ab')
    sp.add_argument('-o', '--output')
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser('verify-claims', help='probe the structural claims of the 6x6 construction')
    sp.add_argument('input')
    sp.add_argument('--samples', type=int, default=100)
    sp.add_argument('--seed', type=int, default=0)
    sp.add_argument('--json-out')
    digit_flag(sp)
    sp.set_defaults(func=cmd_verify_claims)

    sp = sub.add_parser('law-check', help='randomized semiring axiom check')
    sp.add_argument('semiring', choices=SEMIRING_NAMES)
    sp.add_argument('--k', type=int)
    sp.add_argument('--alphabet')
    sp.add_argument('--trials', type=int, default=1000)
    sp.add_argument('--seed', type=int, default=0)
    sp.add_argument('--json-out')
    sp.set_defaults(func=cmd_law_check)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')
    try:
        return args.func(args)
    except InputError as e:
        log.error('%s', e)
        return EXIT_PARSE
    except (decide.CapabilityError, reductions.ConventionError) as e:
        log.error('%s', e)
        return EXIT_CAPABILITY
    except (SemiringError, reductions.ReductionError, am.AutomatonError,
            decide.DecideError, MatrixError) as e:
        log.error('%s', e)
        return EXIT_PARSE


if __name__ == '__main__':
    sys.exit(main())
