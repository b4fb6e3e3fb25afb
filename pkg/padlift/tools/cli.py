# -*- coding: utf-8 -*-
#
#    PadLift - Hensel lifting for continuous p-adic functions
#
#    CLI - Command line tool for coefficient tables, membership checks, lifts and brute force root searches
#
#    © 2026 October - PadLift developers
#

import csv
import argparse
from io import StringIO
from datetime import datetime
from padlift.approx import *
from padlift.oracle import *
from padlift.db_cache import DbCacheError


_logger = logging.getLogger(__name__)

COMMANDS = ['coeffs', 'verify', 'lift', 'approx', 'oracle', 'psi', 'examples']
TABULAR_COMMANDS = ['coeffs', 'oracle', 'psi', 'examples']
LIBRARY_ERRORS = (PAdicError, ScaleError, FunctionError, CoefficientError, HenselError, ApproxError, OracleError,
                  DbCacheError)
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2


class CliError(Exception):
    """
    Handle command line usage Exceptions

    """
    def __init__(self, msg=''):
        self.msg = msg
        _logger.error(msg)

    def __str__(self):
        return self.msg


class ArgumentParser(argparse.ArgumentParser):
    """
    Argument parser which exits with status 1 on usage errors

    """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, '%s: error: %s\n' % (self.prog, message))


def _add_lift_arguments(parser, u_required=True):
    group = parser.add_argument_group("Lift parameters")
    group.add_argument('--h', type=int, default=0, help="Valuation shift h of the correction condition. Default 0")
    group.add_argument('--n0', type=int, default=0, help="Start level n0. Default 0")
    group.add_argument('--u', type=int, required=u_required, help="Start value u < p^(1+Phi(n0))")
    group.add_argument('--nmax', type=int, help="Last lift level")
    group.add_argument('--s-sets', metavar='JSON',
                       help="Correction sets: a list used at every level, or a dictionary level -> list")
    group.add_argument('--s-strategy', choices=S_STRATEGIES,
                       help="Use given correction sets, discover them per level or use {1, ..., p-1}. Default is "
                            "explicit if --s-sets is given, else auto")
    group.add_argument('--mode', choices=S_MODES, default='trajectory',
                       help="Check correction sets for the iterates only or for every admissible m. "
                            "Default trajectory")
    group.add_argument('--strict', action='store_true',
                       help="Fail if more than one digit lifts an iterate instead of choosing the smallest")
    group.add_argument('--K', type=int, help="Working precision of the lift steps")


def parse_args(argv=None):
    common = argparse.ArgumentParser(add_help=False)
    group_common = common.add_argument_group("Input and output")
    group_common.add_argument('--fn', metavar='SPEC',
                              help="Function spec as json string, or @FILENAME. For example "
                                   "'{\"family\": \"digit_linear\", \"p\": 3, \"a\": \"1\"}'")
    group_common.add_argument('--phi', metavar='SPEC',
                              help="Scale function spec as json string, @FILENAME or 'id'. Default is the declared "
                                   "scale of the function")
    group_common.add_argument('--format', choices=OUTPUT_FORMATS,
                              help="Output format, csv and table are available for tabular results only. "
                                   "Default is %s" % DEFAULT_OUTPUT_FORMAT)
    group_common.add_argument('--out', metavar='PATH', help="Write output to file instead of stdout")
    group_common.add_argument('--timestamp', action='store_true', help="Add a timestamp to the output document")
    group_common.add_argument('--database', metavar='URI',
                              help="Database URI or sqlite filename for a persistent coefficient cache")
    group_common.add_argument('--workers', type=int, help="Number of worker processes for brute force scans")

    parser = ArgumentParser(description='PadLift - Hensel lifting for continuous p-adic functions')
    parser.add_argument('--version', action='version', version='PadLift %s' % PADLIFT_VERSION)
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    p_coeffs = subparsers.add_parser('coeffs', parents=[common], help="Table of van der Put coefficients")
    p_coeffs.add_argument('--m-start', type=int, default=0, help="First index m. Default 0")
    p_coeffs.add_argument('--m-stop', type=int, help="Stop index, default p^(1+Phi(depth))")
    p_coeffs.add_argument('--depth', type=int, default=1, help="Window level if --m-stop is omitted. Default 1")
    p_coeffs.add_argument('--K', type=int, default=4, help="Precision of b(m). Default 4")

    p_verify = subparsers.add_parser('verify', parents=[common], help="Verify f in F(Phi) on a window")
    p_verify.add_argument('--depth', type=int, default=2, help="Window level. Default 2")
    p_verify.add_argument('--K', type=int, help="Working precision, default 1+Phi(depth+1)")
    p_verify.add_argument('--xxx', action='store_true',
                          help="Also check the continuity condition on all pairs in the window")

    p_lift = subparsers.add_parser('lift', parents=[common], help="Generalized Hensel lift")
    _add_lift_arguments(p_lift)
    p_lift.add_argument('--uniqueness-depth', type=int,
                        help="Check the uniqueness condition on the window of this level")
    p_lift.add_argument('--oracle-check', action='store_true',
                        help="Confirm the root with a brute force search")

    p_approx = subparsers.add_parser('approx', parents=[common], help="Approximability certificate")
    p_approx.add_argument('--u', type=int, required=True, help="Start value u < p^(1+Phi(n0))")
    p_approx.add_argument('--n0', type=int, default=0, help="Start level n0. Default 0")
    p_approx.add_argument('--h', type=int, default=0, help="Valuation shift h. Default 0")
    p_approx.add_argument('--l', type=int, help="First approximation level, searched if omitted")
    p_approx.add_argument('--nmax', type=int, default=3, help="Highest tested level. Default 3")
    p_approx.add_argument('--depth', type=int, help="Window level of the residue class, default n0+1")
    p_approx.add_argument('--s', type=int,
                          help="Derive approximability from differentiability modulo p^s, identity scale only")
    p_approx.add_argument('--lift', action='store_true', help="Also lift with correction sets {1, ..., p-1}")

    p_oracle = subparsers.add_parser('oracle', parents=[common], help="Brute force root search")
    _add_lift_arguments(p_oracle, u_required=False)
    p_oracle.add_argument('--k-search', type=int, help="Search all residues below p^K_SEARCH")
    p_oracle.add_argument('--k-target', type=int, help="Require f(r) = 0 modulo p^K_TARGET")
    p_oracle.add_argument('--from-lift', action='store_true',
                          help="Run the lift and search with the constraints of its trace")

    p_psi = subparsers.add_parser('psi', parents=[common], help="Modulus of continuity and derived scale")
    p_psi.add_argument('--nmax', type=int, default=3, help="Estimate psi(f;n) for n up to NMAX. Default 3")
    p_psi.add_argument('--depth', type=int, required=True, help="Window exponent of the exhaustive scan")

    p_examples = subparsers.add_parser('examples', parents=[common], help="Run the example suite")
    p_examples.add_argument('--suite', metavar='PATH', help="Example suite json file, default the shipped suite")

    return parser.parse_args(argv)


def _read_spec(value):
    if value.startswith('@'):
        try:
            with open(value[1:]) as f:
                return f.read()
        except IOError as e:
            raise CliError("Cannot read spec file %s: %s" % (value[1:], e))
    return value


def _function_and_scale(args):
    if not args.fn:
        raise CliError("Command '%s' needs a function spec, use --fn" % args.command)
    f = function_from_spec(_read_spec(args.fn))
    if args.phi:
        phi = scale_from_spec(_read_spec(args.phi))
    elif f.scale is not None:
        phi = f.scale
    else:
        raise CliError("Function %s has no declared scale, use --phi" % f.name)
    return f, phi


def _parse_s_sets(value):
    if not value:
        return None
    try:
        s_sets = json.loads(value)
    except json.decoder.JSONDecodeError as e:
        raise CliError("Invalid S sets %s: %s" % (value, e))
    if isinstance(s_sets, dict):
        return {int(n): [int(i) for i in s] for n, s in s_sets.items()}
    if isinstance(s_sets, list):
        return [int(i) for i in s_sets]
    raise CliError("S sets must be a list or a dictionary, got %s" % value)


def _lift_problem(args, f, phi):
    if args.nmax is None:
        raise CliError("Lift needs the last level, use --nmax")
    if args.u is None:
        raise CliError("Lift needs a start value, use --u")
    s_sets = _parse_s_sets(args.s_sets)
    strategy = args.s_strategy
    if strategy is None:
        strategy = 'explicit' if s_sets else 'auto'
    return LiftProblem(f, phi, args.h, args.n0, args.u, args.nmax, s_strategy=strategy, s_sets=s_sets,
                       mode=args.mode, K=args.K, strict=args.strict)


def _function_dict(f):
    return json_value(f.as_dict())


def run_coeffs(args):
    f, phi = _function_and_scale(args)
    m_stop = args.m_stop if args.m_stop is not None else phi.block_power(f.p, args.depth)
    if args.m_start < 0 or m_stop <= args.m_start:
        raise CliError("Empty index range %d..%d" % (args.m_start, m_stop))
    if m_stop - args.m_start > MAX_SEARCH_SPACE:
        raise CliError("Index range exceeds search space limit %d" % MAX_SEARCH_SPACE)
    if args.K < 1:
        raise CliError("Precision must be 1 or more")
    rows = [c.as_dict() for c in coefficient_table(f, phi, args.m_start, m_stop, args.K)]
    return EXIT_OK, {'command': 'coeffs', 'function': _function_dict(f), 'scale': phi.as_dict(),
                     'precision': args.K, 'rows': rows}


def run_verify(args):
    f, phi = _function_and_scale(args)
    report = verify_membership(f, phi, args.depth, args.K)
    document = {'command': 'verify', 'function': _function_dict(f), 'scale': phi.as_dict()}
    document.update(report.as_dict())
    if args.xxx:
        pair_report = brute_check_xxx(f, phi, args.depth)
        document['xxx'] = pair_report.as_dict()
        document['agree'] = report.passed == pair_report.passed
    return EXIT_OK if report else EXIT_FAILURE, document


def run_lift(args):
    f, phi = _function_and_scale(args)
    problem = _lift_problem(args, f, phi)
    trace = lift(problem)
    document = {'command': 'lift'}
    document.update(trace.as_dict())
    document['trace_verified'] = verify_trace(trace).passed
    if args.uniqueness_depth is not None:
        document['uniqueness'] = verify_uniqueness_condition(f, phi, args.h, args.u, args.n0,
                                                             args.uniqueness_depth).as_dict()
    if args.oracle_check and trace:
        roots = brute_roots(RootQuery.from_trace(trace), args.workers)
        document['oracle_roots'] = [str(r) for r in roots]
        document['oracle_contains_root'] = trace.root in roots
    if not trace:
        document['reason'] = trace.status.reason
    return EXIT_OK if trace else EXIT_FAILURE, document


def run_approx(args):
    f, phi = _function_and_scale(args)
    if args.s is not None and not phi.is_identity():
        raise CliError("Approximability from differentiability modulo p^s needs the identity scale")
    if args.u >= phi.block_power(f.p, args.n0):
        raise CliError("Start value u=%d must be smaller than p^(1+Phi(n0))" % args.u)
    document = {'command': 'approx', 'function': _function_dict(f), 'scale': phi.as_dict()}
    try:
        if args.s is not None:
            cert = from_derivative_mod_ps(f, args.s, args.u, n_hi=args.nmax)
        else:
            cert = approx_certificate(f, phi, args.u, args.n0, args.h, args.nmax, args.depth, args.l)
    except ApproxError as e:
        document.update({'status': 'FAIL', 'reason': str(e)})
        return EXIT_FAILURE, document
    document['status'] = 'PASS'
    document.update(cert.as_dict())
    if args.lift:
        try:
            trace = corollary_lift(f, phi, args.u, args.n0, cert.h, cert.l, args.nmax, verify=False)
        except (ApproxError, HenselError) as e:
            document.update({'status': 'FAIL', 'reason': str(e)})
            return EXIT_FAILURE, document
        document['lift'] = trace.as_dict()
        if not trace:
            document['status'] = 'FAIL'
            document['reason'] = trace.status.reason
            return EXIT_FAILURE, document
    return EXIT_OK, document


def run_oracle(args):
    f, phi = _function_and_scale(args)
    if args.from_lift:
        trace = lift(_lift_problem(args, f, phi))
        if not trace:
            return EXIT_FAILURE, {'command': 'oracle', 'status': 'FAIL', 'reason': trace.status.reason}
        query = RootQuery.from_trace(trace)
    else:
        if args.k_search is None or args.k_target is None:
            raise CliError("Oracle needs --k-search and --k-target, or --from-lift")
        congruence_exponent = None if args.u is None else 1 + phi(args.n0)
        allowed = None
        s_sets = _parse_s_sets(args.s_sets)
        if s_sets:
            if isinstance(s_sets, list):
                n_stop = args.nmax
                if n_stop is None:
                    n_stop = args.n0
                    while 1 + phi(n_stop + 1) <= args.k_search:
                        n_stop += 1
                s_sets = {n: s_sets for n in range(args.n0, n_stop)}
            allowed = {n + 1: {0} | set(s) for n, s in s_sets.items()}
        query = RootQuery(f, args.k_search, args.k_target, args.u, congruence_exponent, phi, allowed)
    roots = brute_roots(query, args.workers)
    rows = [{'root': str(r), 'digits': digits_of(r, f.p, query.k_search)} for r in roots]
    return EXIT_OK, {'command': 'oracle', 'query': query.as_dict(), 'roots': [str(r) for r in roots],
                     'count': len(roots), 'rows': rows}


def run_psi(args):
    f, _ = _function_and_scale(args)
    if f.p ** args.depth > MAX_SEARCH_SPACE:
        raise CliError("Window %d^%d exceeds search space limit %d" % (f.p, args.depth, MAX_SEARCH_SPACE))
    if args.nmax < 1:
        raise CliError("NMAX must be 1 or more")
    document = {'command': 'psi'}
    try:
        table = modulus_table(f, args.nmax, args.depth)
    except FunctionError as e:
        document.update({'status': 'FAIL', 'reason': str(e)})
        return EXIT_FAILURE, document
    document.update(table.as_dict())
    document['status'] = 'PASS'
    document['derived_scale'] = phi_from_psi(table).as_dict()
    document['rows'] = [{'n': n, 'psi': l} for n, l in sorted(table.entries.items())]
    return EXIT_OK, document


def _lookup(document, path):
    value = document
    for key in path.split('.'):
        if not isinstance(value, dict) or key not in value:
            return None
        value = value[key]
    return value


def run_examples(args):
    suite_file = args.suite or Path(PADLIFT_INSTALL_DIR, 'data', 'examples.json')
    try:
        with open(str(suite_file)) as f:
            suite = json.load(f)
    except (IOError, json.decoder.JSONDecodeError) as e:
        raise CliError("Cannot read example suite %s: %s" % (suite_file, e))
    rows = []
    for example in suite:
        detail = ''
        try:
            status, document = run(parse_args(example['argv']))
        except SystemExit as e:
            status, document = e.code, {}
        document = json.loads(json.dumps(document))
        if status != example.get('status', EXIT_OK):
            detail = "exit status %s, expected %s" % (status, example.get('status', EXIT_OK))
        else:
            for path, expected in sorted(example.get('expect', {}).items()):
                found = _lookup(document, path)
                if found != expected:
                    detail = "%s is %s, expected %s" % (path, json.dumps(found), json.dumps(expected))
                    break
        rows.append({'name': example['name'], 'status': 'FAIL' if detail else 'PASS', 'detail': detail})
    failed = len([r for r in rows if r['status'] == 'FAIL'])
    return EXIT_FAILURE if failed else EXIT_OK, \
        {'command': 'examples', 'passed': len(rows) - failed, 'failed': failed, 'rows': rows}


COMMAND_HANDLERS = {
    'coeffs': run_coeffs,
    'verify': run_verify,
    'lift': run_lift,
    'approx': run_approx,
    'oracle': run_oracle,
    'psi': run_psi,
    'examples': run_examples,
}


def output_format(args):
    """
    Output format of a run: the --format option, or table for examples and the configured default for other
    commands. Commands without tabular results are always written as json if no format is given.

    :return str:
    """
    if args.format:
        if args.format != 'json' and args.command not in TABULAR_COMMANDS:
            raise CliError("Format %s is not available for command '%s'" % (args.format, args.command))
        return args.format
    if args.command == 'examples':
        return 'table'
    if args.command not in TABULAR_COMMANDS:
        return 'json'
    return DEFAULT_OUTPUT_FORMAT


def run(args):
    """
    Run a parsed command. Returns the exit status and the output document: 0 for a passed check or successful
    lift, 2 for a mathematical failure and 1 for usage errors, with the message in the 'error' key.

    :param args: Parsed command line arguments, see :func:`parse_args`
    :type args: argparse.Namespace

    :return tuple: Exit status and document dictionary
    """
    try:
        output_format(args)
        if args.database:
            set_default_coefficient_cache(CoefficientCache(args.database))
        status, document = COMMAND_HANDLERS[args.command](args)
    except (CliError,) + LIBRARY_ERRORS as e:
        return EXIT_USAGE, {'command': args.command, 'error': str(e)}
    if args.timestamp:
        document['timestamp'] = datetime.now().isoformat()
    return status, document


def _cell(value):
    if isinstance(value, list):
        return ' '.join(str(v) for v in value)
    if value is None:
        return ''
    return str(value)


def format_document(document, fmt):
    """
    Render an output document as json, or its rows as csv or an aligned table

    :return str:
    """
    if fmt == 'json':
        return json.dumps(document, indent=4)
    rows = document.get('rows', [])
    if not rows:
        return ''
    columns = list(rows[0].keys())
    cells = [[_cell(row.get(c)) for c in columns] for row in rows]
    if fmt == 'csv':
        output = StringIO()
        writer = csv.writer(output, lineterminator='\n')
        writer.writerow(columns)
        writer.writerows(cells)
        return output.getvalue().rstrip('\n')
    widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(columns)]
    lines = ['  '.join(c.ljust(widths[i]) for i, c in enumerate(columns)).rstrip()]
    lines += ['  '.join(v.ljust(widths[i]) for i, v in enumerate(r)).rstrip() for r in cells]
    if document.get('command') == 'examples':
        lines.append("\n%d passed, %d failed" % (document['passed'], document['failed']))
    return '\n'.join(lines)


def main(argv=None):
    args = parse_args(argv)
    status, document = run(args)
    if 'error' in document:
        sys.stderr.write("padlift: error: %s\n" % document['error'])
        sys.exit(status)
    text = format_document(document, output_format(args))
    if args.out:
        with open(args.out, 'w') as f:
            f.write(text + '\n')
    else:
        print(text)
    if status == EXIT_FAILURE:
        sys.stderr.write("padlift: %s failed: %s\n" %
                         (args.command, document.get('reason') or 'see output document'))
    sys.exit(status)


if __name__ == '__main__':
    main()
