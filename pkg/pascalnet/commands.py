"""
Command Dispatch
Validated command objects and the logic shared by every subcommand
"""

import sys
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .config import load_settings
from .dnp import DEFAULT_TABLE_ORDERS, dnp_report, table1_report
from .errors import UsageError
from . import export
from .formatter import ReportFormatter
from .graph import from_matrix
from .matrix import generate
from .properties import run_property_suite, topology_summary
from .resilience import FailureScenario, failure_sweep

FORMATS = {
    'gen': ('text', 'json'),
    'props': ('text', 'json', 'csv'),
    'dnp': ('text', 'json', 'csv'),
    'table1': ('text', 'json', 'csv'),
    'resilience': ('text', 'json', 'csv'),
    'export': ('dot', 'csv'),
}

DEFAULT_PROPS_RANGE = tuple(range(3, 65))

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


@dataclass
class Command:
    """One parsed invocation"""
    subcommand: str
    orders: List[int] = field(default_factory=list)
    fmt: Optional[str] = None
    out: Optional[str] = None
    seed: Optional[int] = None
    trials: int = 1
    failures: int = 0
    fail_set: Optional[Tuple[int, ...]] = None
    config_path: Optional[str] = None
    use_color: bool = False
    verbose: bool = False

    def __post_init__(self):
        if self.fmt is None and self.subcommand in FORMATS:
            self.fmt = FORMATS[self.subcommand][0]

    def validate(self) -> None:
        """
        Check flag combinations.

        Raises:
            UsageError: unknown subcommand, wrong format, or wrong number of orders
        """
        if self.subcommand not in FORMATS:
            raise UsageError(f"unknown subcommand {self.subcommand!r}")
        if self.fmt not in FORMATS[self.subcommand]:
            allowed = ', '.join(FORMATS[self.subcommand])
            raise UsageError(f"format {self.fmt!r} is not available for {self.subcommand} "
                             f"(choose from {allowed})")
        single = self.subcommand in ('gen', 'dnp', 'export')
        if self.subcommand == 'resilience':
            single = self.config_path is None or bool(self.orders)
        if single and len(self.orders) != 1:
            raise UsageError(f"{self.subcommand} takes exactly one order, got {len(self.orders)}")
        if self.trials < 1:
            raise UsageError(f"--trials must be >= 1, got {self.trials}")
        if self.failures < 0:
            raise UsageError(f"--failures must be >= 0, got {self.failures}")

    def scenario(self) -> FailureScenario:
        """The failure scenario described by --config or the resilience flags"""
        if self.config_path:
            scenario = FailureScenario.from_config(self.config_path)
            if self.orders and self.orders[0] != scenario.n:
                raise UsageError(f"order {self.orders[0]} conflicts with n={scenario.n} in {self.config_path}")
            return scenario
        seed = load_settings().default_seed if self.seed is None else self.seed
        return FailureScenario(n=self.orders[0], failures=self.failures, trials=self.trials,
                               seed=seed, forced_failed=self.fail_set)


def _debug(command: Command, message: str) -> None:
    if command.verbose:
        print(f"[Command] {message}", file=sys.stderr)


def _gen(command: Command, formatter: ReportFormatter) -> Tuple[int, str]:
    pm = generate(command.orders[0])
    if command.fmt == 'json':
        return EXIT_OK, export.dumps(pm.to_dict())
    return EXIT_OK, formatter.format_matrix(pm)


def _props(command: Command, formatter: ReportFormatter) -> Tuple[int, str]:
    orders = command.orders or list(DEFAULT_PROPS_RANGE)
    everything = []
    sections = []
    for n in orders:
        _debug(command, f"checking PG({n})")
        reports = run_property_suite(n, verbose=command.verbose)
        everything.extend(reports)
        if command.fmt == 'text':
            summary = topology_summary(from_matrix(generate(n)))
            sections.append(formatter.format_properties(n, reports, summary))
    status = EXIT_OK if all(r.passed for r in everything) else EXIT_CHECK_FAILED
    if command.fmt == 'json':
        return status, export.dumps([r.to_dict() for r in everything])
    if command.fmt == 'csv':
        return status, export.property_csv(everything)
    return status, '\n'.join(sections)


def _dnp(command: Command, formatter: ReportFormatter) -> Tuple[int, str]:
    report = dnp_report(command.orders[0])
    status = EXIT_OK if report.agrees else EXIT_CHECK_FAILED
    if command.fmt == 'json':
        return status, export.dumps(report.to_dict())
    if command.fmt == 'csv':
        return status, export.dnp_csv([report])
    return status, formatter.format_dnp(report)


def _table1(command: Command, formatter: ReportFormatter) -> Tuple[int, str]:
    orders = command.orders or list(DEFAULT_TABLE_ORDERS)
    reports = table1_report(orders, verbose=command.verbose)
    status = EXIT_OK if all(r.agrees for r in reports) else EXIT_CHECK_FAILED
    if command.fmt == 'json':
        return status, export.dumps([r.to_dict() for r in reports])
    if command.fmt == 'csv':
        return status, export.dnp_csv(reports)
    return status, formatter.format_table1(reports)


def _resilience(command: Command, formatter: ReportFormatter) -> Tuple[int, str]:
    scenario = command.scenario()
    reports = failure_sweep(scenario, verbose=command.verbose)
    if command.fmt == 'json':
        return EXIT_OK, export.dumps({
            'n': scenario.n,
            'failures': scenario.failures,
            'trials': scenario.trials,
            'seed': scenario.seed,
            'reports': [r.to_dict() for r in reports],
        })
    if command.fmt == 'csv':
        return EXIT_OK, export.sweep_csv(reports)
    return EXIT_OK, formatter.format_sweep(scenario, reports)


def _export(command: Command, formatter: ReportFormatter) -> Tuple[int, str]:
    g = from_matrix(generate(command.orders[0]))
    if command.fmt == 'csv':
        return EXIT_OK, export.to_edge_csv(g)
    return EXIT_OK, export.to_dot(g)


HANDLERS = {
    'gen': _gen,
    'props': _props,
    'dnp': _dnp,
    'table1': _table1,
    'resilience': _resilience,
    'export': _export,
}


def run(command: Command) -> Tuple[int, str]:
    """
    Execute a command.

    Returns:
        tuple: (exit_status, artifact)
            - exit_status: 0 on success, 1 when a check failed
            - artifact: text to emit

    Raises:
        UsageError, DomainError, CapacityError: invalid input (exit status 2)
    """
    command.validate()
    _debug(command, f"{command.subcommand} orders={command.orders} format={command.fmt}")
    formatter = ReportFormatter(use_color=command.use_color)
    return HANDLERS[command.subcommand](command, formatter)
