#!/usr/bin/env python3
"""
Pascal Network Command-Line Tool

Generates Pascal matrices and Pascal graphs, checks their structural
properties, locates Dependable Nodes, and measures how the network
degrades when nodes fail.
"""

import argparse
import sys

from pascalnet import __version__
from pascalnet.cli import parse_fail_set, parse_seed, resolve_orders
from pascalnet.commands import EXIT_USAGE, FORMATS, Command, run
from pascalnet.config import load_settings
from pascalnet.errors import ConfigError, DomainError, PascalNetError, UsageError

SUBCOMMAND_HELP = {
    'gen': 'Print the Pascal matrix PM(n)',
    'props': 'Check the structural properties of PG(n) (default range 3..64)',
    'dnp': 'Dependable Nodes of PG(n): formula against brute force',
    'table1': 'Reproduce the published Dependable Node table',
    'resilience': 'Fail vertices of PG(n) and measure what is left',
    'export': 'Export PG(n) as DOT or an edge list',
}


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', dest='fmt', help='Output format (see each command)')
    common.add_argument('--out', metavar='PATH', help='Write the artifact to PATH instead of stdout')
    common.add_argument('--range', dest='range_text', metavar='A..B', help='Inclusive range of orders')
    common.add_argument('--seed', metavar='U64', help='Seed for random failure draws')
    common.add_argument('--trials', type=int, default=1, metavar='K', help='Number of failure trials')
    common.add_argument('--failures', type=int, default=0, metavar='F', help='Vertices failed per trial')
    common.add_argument('--fail-set', metavar='"i,j,..."', help='Fail exactly these vertices')
    common.add_argument('--config', metavar='PATH', help='JSON failure scenario for resilience')
    common.add_argument('--no-color', action='store_true', help='Disable colored output')
    common.add_argument('--verbose', '-v', action='store_true', help='Enable verbose debug output on stderr')

    parser = argparse.ArgumentParser(
        description='Pascal matrices, Pascal graphs and their Dependable Nodes',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s gen 5                          Print PM(5)
  %(prog)s props --range 3..16            Check every property for n = 3..16
  %(prog)s dnp 33 --format json           Dependable Nodes of PG(33) as JSON
  %(prog)s table1 --format csv            Published table with discrepancies
  %(prog)s resilience 33 --fail-set 1     Fail v1 in PG(33)
  %(prog)s resilience --range 33..33 --seed 42 --trials 100 --failures 2 --format csv
  %(prog)s export 8 --format dot          PG(8) for Graphviz
        """
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')

    subparsers = parser.add_subparsers(dest='subcommand', metavar='COMMAND')
    subparsers.required = True
    for name, help_text in SUBCOMMAND_HELP.items():
        sub = subparsers.add_parser(name, parents=[common], help=help_text,
                                    description=f"{help_text}. Formats: {', '.join(FORMATS[name])}")
        if name != 'table1':
            sub.add_argument('n', nargs='?', type=int, help='Order of the matrix / graph')
    return parser


def build_command(args: argparse.Namespace, use_color: bool) -> Command:
    """Turn parsed arguments into a Command (raises UsageError)"""
    return Command(
        subcommand=args.subcommand,
        orders=resolve_orders(getattr(args, 'n', None), args.range_text),
        fmt=args.fmt,
        out=args.out,
        seed=parse_seed(args.seed),
        trials=args.trials,
        failures=args.failures,
        fail_set=parse_fail_set(args.fail_set) if args.fail_set is not None else None,
        config_path=args.config,
        use_color=use_color,
        verbose=args.verbose,
    )


def emit(artifact: str, out: str = None) -> None:
    if out:
        with open(out, 'w', encoding='utf-8', newline='') as handle:
            handle.write(artifact)
    else:
        sys.stdout.write(artifact)
        sys.stdout.flush()


def main(argv=None) -> int:
    """Main entry point for the Pascal network CLI"""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = load_settings()
        use_color = (settings.use_color and not args.no_color and not args.out
                     and sys.stdout.isatty())
        command = build_command(args, use_color)
        if args.verbose:
            print(f"[CLI] {command.subcommand} orders={command.orders} format={command.fmt}",
                  file=sys.stderr)
        status, artifact = run(command)
        emit(artifact, command.out)
        return status

    except (UsageError, DomainError, ConfigError) as e:
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except KeyboardInterrupt:
        print("\n\nCancelled by user.", file=sys.stderr)
        return 1
    except PascalNetError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
