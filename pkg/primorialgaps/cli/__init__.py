"""
Command line front end

```
primorialgaps table --kmax 12 --format csv --witness-out witnesses.json
primorialgaps membership --k 6 --m 22
primorialgaps oracle --k 8 --compare
primorialgaps verify witnesses.json
primorialgaps conjectures --kmax 20
```
"""
from ..constants import (DEFAULT_THREADS, ENV_MAX_K, ENV_ORACLE_CAP, ENV_THREADS, ENV_TIME_BUDGET,
                         EXIT_FAILURE, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, FORMATS, MAX_K,
                         ORACLE_CAP_K, TABLE)
from ..errors import ConstructionFailed, PeriodTooLarge, SearchTimeout
from ..explorer import Explorer
from .output import render_conjectures, render_reports, render_spectrum
from .witness_file import WitnessRecord, load_witness_file, verify_record, write_witness_file
from typing import Callable, Optional, Sequence
import argparse
import os
import sys


def _from_env(name: str, cast: Callable, default):
    """
    Read an environment override, falling back to default when unset

    :raises ValueError: If the variable is set but cannot be parsed
    """
    value = os.environ.get(name, '').strip()
    if not value:
        return default
    try:
        return cast(value)
    except ValueError:
        raise ValueError(f'Invalid value for {name}: {value}')



def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--threads', type=int,
                        default=_from_env(ENV_THREADS, int, DEFAULT_THREADS),
                        help='Worker processes for membership searches')
    common.add_argument('--time-budget', type=float,
                        default=_from_env(ENV_TIME_BUDGET, float, None),
                        help='Seconds before a run is aborted, completed rows are still reported')
    common.add_argument('--log', action='store_true', help='Write a log file')
    common.add_argument('--debug', action='store_true', help='Log at debug level')

    parser = argparse.ArgumentParser(
        prog='primorialgaps',
        description='Differences between consecutive integers coprime to primorials')
    commands = parser.add_subparsers(dest='command', required=True)

    table = commands.add_parser('table', parents=[common], help='Rows k = 1..kmax of the results table')
    table.add_argument('--kmax', type=int, required=True)
    table.add_argument('--format', choices=FORMATS, default=TABLE)
    table.add_argument('--witness-out', type=str, default=None, help='Write every witness to this JSON file')

    membership = commands.add_parser('membership', parents=[common], help='Decide if m is in D(k)')
    membership.add_argument('--k', type=int, required=True)
    membership.add_argument('--m', type=int, required=True)

    oracle = commands.add_parser('oracle', parents=[common], help='Brute-force gap spectrum of p_k#')
    oracle.add_argument('--k', type=int, required=True)
    oracle.add_argument('--compare', action='store_true', help='Compare with the search result')
    oracle.add_argument('--oracle-cap', type=int,
                        default=_from_env(ENV_ORACLE_CAP, int, ORACLE_CAP_K))

    verify = commands.add_parser('verify', parents=[common], help='Re-verify a witness file')
    verify.add_argument('file', type=str)

    conjectures = commands.add_parser('conjectures', parents=[common], help='Audit the conjectures up to kmax')
    conjectures.add_argument('--kmax', type=int, required=True)
    return parser



def cmd_table(explorer: Explorer, kmax: int, format: str = TABLE, witness_out: Optional[str] = None) -> int:
    """
    Print rows 1..kmax and optionally write their witnesses
    """
    run = explorer.table(kmax)
    sys.stdout.write(render_reports(run.reports, format))
    if witness_out:
        records = [WitnessRecord(k, m, cov)
                   for (k, m), cov in sorted(explorer.witnesses().items()) if k <= len(run.reports)]
        write_witness_file(witness_out, records)
        explorer.logger.info(f'[WITNESS][WRITE] {len(records)} records to {witness_out}')
    if not run.completed:
        print(f'Time budget exhausted, completed rows 1..{len(run.reports)} of {kmax}', file=sys.stderr)
        return EXIT_RESOURCE
    return EXIT_OK



def cmd_membership(explorer: Explorer, k: int, m: int) -> int:
    """
    Print if m is in D(k), with the witness covering and pair when it is
    """
    result = explorer.membership(k, m)
    print(f'k={k} m={m}: {"present" if result.present else "absent"}')
    if result.note:
        print(f'note: {result.note}')
    if result.present:
        print(f'covering: {result.covering!r}')
        print(f'pair: ({result.pair.x}, {result.pair.y})')
    return EXIT_OK



def cmd_oracle(explorer: Explorer, k: int, compare: bool = False) -> int:
    """
    Print the brute-force spectrum of k, optionally diffed against the search
    """
    if not compare:
        sys.stdout.write(render_spectrum(explorer.oracle(k)))
        return EXIT_OK
    comparison = explorer.compare(k)
    sys.stdout.write(render_spectrum(comparison.spectrum))
    if comparison.match:
        print('MATCH')
        return EXIT_OK
    print(f'MISMATCH at {", ".join(str(m) for m in comparison.mismatches)}')
    return EXIT_FAILURE



def cmd_verify(path: str) -> int:
    """
    Re-verify every record of a witness file
    """
    try:
        raw_records = load_witness_file(path)
    except (OSError, ValueError) as e:
        print(f'Cannot read witness file {path}: {e}', file=sys.stderr)
        return EXIT_USAGE
    if not raw_records:
        print(f'Warning: {path} contains no records', file=sys.stderr)
        return EXIT_OK

    failures = []
    for index, raw in enumerate(raw_records):
        try:
            record = WitnessRecord.from_dict(raw)
            label = f'record {index} ({record.describe()})'
            passed = verify_record(record)
        except (KeyError, TypeError, ValueError) as e:
            label = f'record {index}'
            passed = False
            print(f'{label}: malformed, {e}', file=sys.stderr)
        if not passed:
            failures.append(label)

    for label in failures:
        print(f'FAILED {label}')
    print(f'verified {len(raw_records) - len(failures)} of {len(raw_records)} records')
    return EXIT_FAILURE if failures else EXIT_OK



def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point of the `primorialgaps` command

    :param argv: Arguments without the program name, defaults to `sys.argv[1:]`
    :return: Exit status
    """
    try:
        parser = build_parser()
        max_k = _from_env(ENV_MAX_K, int, MAX_K)
    except ValueError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if args.command == 'verify':
        return cmd_verify(args.file)

    limits = {'max_k': max_k}
    if args.command == 'oracle':
        limits['oracle_cap'] = args.oracle_cap
    explorer = None
    try:
        explorer = Explorer(enable_logging=args.log,
                            debug=args.debug,
                            threads=args.threads,
                            time_budget=args.time_budget,
                            config={'limits': limits})
        if args.command == 'table':
            return cmd_table(explorer, args.kmax, args.format, args.witness_out)
        if args.command == 'membership':
            return cmd_membership(explorer, args.k, args.m)
        if args.command == 'oracle':
            return cmd_oracle(explorer, args.k, args.compare)
        sys.stdout.write(render_conjectures(explorer.conjectures(args.kmax)))
        return EXIT_OK
    except (PeriodTooLarge, SearchTimeout) as e:
        print(f'Resource limit reached: {e}', file=sys.stderr)
        return EXIT_RESOURCE
    except ConstructionFailed as e:
        explorer.logger.error(f'[CLI][VERIFY] {e}')
        print(f'Verification failed: {e}', file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    finally:
        if explorer is not None:
            explorer.cleanup()
