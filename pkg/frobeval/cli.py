"""
frobeval CLI Module

Parses the command line into a RunConfig, dispatches to the registered
subcommand and maps errors to the exit-code contract:
0 success, 1 unexpected failure, 2 input error, 3 verification mismatch.
"""

import argparse
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from .commands import RunConfig
from .commands.bench import cmd_bench
from .commands.cost import cmd_cost
from .commands.evaluate import cmd_eval
from .commands.syndromes import cmd_syndromes
from .config import (
    APP_DESCRIPTION, APP_NAME, APP_VERSION, BENCH_CSV_COLUMNS, COMMAND_CATEGORIES,
    COST_CSV_COLUMNS, DEFAULT_FORMAT, DEFAULT_TRIALS, EVAL_CSV_COLUMNS, EXIT_FAILURE,
    EXIT_OK, OUTPUT_FORMATS, SYNDROME_CSV_COLUMNS, THREADS_ENV_VAR,
    get_error_message, get_success_message
)
from .utils import FrobevalError, InputError, colorize, report, use_color, write_output


class CommandRegistry:
    """Registry for managing available commands."""

    def __init__(self):
        self.commands: Dict[str, Callable] = {}
        self.command_help: Dict[str, str] = {}
        self.command_categories: Dict[str, List[str]] = {}

    def register(self, name: str, func: Callable, help_text: str = "", category: Optional[str] = None):
        """
        Register a command function.

        Args:
            name: Command name
            func: Command function taking a RunConfig
            help_text: Help text for the command
            category: Command category; looked up in COMMAND_CATEGORIES when omitted
        """
        if category is None:
            category = next((c for c, names in COMMAND_CATEGORIES.items() if name in names), "general")
        self.commands[name] = func
        self.command_help[name] = help_text
        self.command_categories.setdefault(category, []).append(name)

    def get_command(self, name: str) -> Optional[Callable]:
        """Get a command function by name."""
        return self.commands.get(name)

    def list_commands(self, category: Optional[str] = None) -> List[str]:
        """List available commands, optionally filtered by category."""
        if category:
            return self.command_categories.get(category, [])
        return list(self.commands.keys())

    def get_help(self, command: str) -> str:
        """Get help text for a command."""
        return self.command_help.get(command, "No help available")


class _Parser(argparse.ArgumentParser):
    """argparse that raises InputError instead of exiting."""

    def error(self, message: str):
        raise InputError(get_error_message("bad_option", error=message), "bad_option")


def _degree_list(text: str) -> List[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'")
    if not values:
        raise argparse.ArgumentTypeError("empty degree list")
    return values


CSV_EPILOG = "\n".join([
    "CSV columns (header always emitted):",
    "  eval:      " + ",".join(EVAL_CSV_COLUMNS),
    "  cost:      " + ",".join(COST_CSV_COLUMNS),
    "  bench:     " + ",".join(BENCH_CSV_COLUMNS),
    "  syndromes: " + ",".join(SYNDROME_CSV_COLUMNS),
    f"Environment: {THREADS_ENV_VAR} caps worker threads (0 = auto).",
])


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", help='field description, e.g. "p=2 m=8 modulus=100101011"')
    common.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS, default=DEFAULT_FORMAT)
    common.add_argument("--out", type=Path, help="write the report to FILE instead of stdout")
    common.add_argument("--seed", type=int)
    common.add_argument("--strategy")
    common.add_argument("--L", type=int, dest="L")
    common.add_argument("--subfield-d", type=int, dest="subfield_d")
    common.add_argument("--verbose", action="store_true")

    parser = _Parser(
        prog=APP_NAME, description=APP_DESCRIPTION, epilog=CSV_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {APP_VERSION}")
    sub = parser.add_subparsers(dest="subcommand", parser_class=_Parser)

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate a polynomial file at a point")
    p_eval.add_argument("--poly", type=Path)
    p_eval.add_argument("--point", type=int)
    p_eval.add_argument("--split", action="store_true")
    p_eval.add_argument("--check", action="store_true")
    p_eval.add_argument("--raw", action="store_true", help="byte-per-coefficient GF(2^8) file")

    p_cost = sub.add_parser("cost", parents=[common], help="closed-form cost model table")
    p_cost.add_argument("--n", type=_degree_list, default=[])

    p_bench = sub.add_parser("bench", parents=[common], help="seeded benchmark of both strategies")
    p_bench.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p_bench.add_argument("--degree", type=int)
    p_bench.add_argument("--rs-words", type=int, dest="rs_words")

    p_syn = sub.add_parser("syndromes", parents=[common], help="Reed-Solomon syndromes of a word file")
    p_syn.add_argument("--words", type=Path)
    p_syn.add_argument("--subfield-arith", action="store_true", dest="subfield_arith")
    return parser


def parse_args(argv: List[str]) -> RunConfig:
    """
    Parse argv (without the program name) into a RunConfig.

    Raises:
        InputError: unknown flags, bad values or a missing subcommand
    """
    namespace = build_parser().parse_args(argv)
    if not namespace.subcommand:
        raise InputError(get_error_message("bad_option", error="missing subcommand"), "bad_option")
    fields = {key: value for key, value in vars(namespace).items() if value is not None}
    return RunConfig(**fields)


class FrobevalCLI:
    """Dispatches subcommands and owns the exit-code mapping."""

    def __init__(self):
        self.registry = CommandRegistry()
        self._register_builtin_commands()

    def _register_builtin_commands(self):
        self.registry.register("eval", cmd_eval, "Evaluate a polynomial at a point")
        self.registry.register("bench", cmd_bench, "Time and count Horner vs automorphic evaluation")
        self.registry.register("cost", cmd_cost, "Tabulate the closed-form cost model")
        self.registry.register("syndromes", cmd_syndromes, "Reed-Solomon [255,223] syndromes")
        self.registry.register("help", self._cmd_help, "Show help information")

    def _cmd_help(self, args: List[str]) -> str:
        """Show help information."""
        color = use_color()
        if not args:
            help_text = f"{colorize(f'{APP_NAME} - {APP_DESCRIPTION}', 'bold', color)}\n"
            help_text += f"Version: {colorize(APP_VERSION, 'cyan', color)}\n\n"
            help_text += "Available commands:\n"
            for category in self.registry.command_categories:
                help_text += f"\n{colorize(category.title(), 'yellow', color)}:\n"
                for cmd in self.registry.list_commands(category):
                    help_text += f"  {colorize(cmd, 'green', color)} - {self.registry.get_help(cmd)}\n"
            help_text += f"\n{CSV_EPILOG}\n"
            help_text += f"\nType {colorize('help <command>', 'cyan', color)} for the flags of one command.\n"
            return help_text

        command = args[0]
        if command == "help" or command not in self.registry.commands:
            raise InputError(get_error_message("command_not_found", command=command), "command_not_found")
        func = self.registry.get_command(command)
        return f"Help for {colorize(command, 'green', color)}:\n  {self.registry.get_help(command)}\n{func.__doc__ or ''}"

    def execute_command(self, argv: List[str]) -> str:
        """Run one command line and return its report text."""
        if not argv or argv[0] in ("help", "-h", "--help"):
            return self._cmd_help(argv[1:])
        if argv[0] not in self.registry.commands and not argv[0].startswith("-"):
            raise InputError(get_error_message("command_not_found", command=argv[0]), "command_not_found")
        config = parse_args(argv)
        output = self.registry.get_command(config.subcommand)(config)
        write_output(output, config.out)
        if config.out is not None:
            report(get_success_message("output_written", path=config.out), "green")
        return output

    def main(self, argv: List[str]) -> int:
        """
        Entry point; returns the process exit code.

        Errors never escape: FrobevalError maps to its exit_code, anything
        else to EXIT_FAILURE.
        """
        try:
            if not argv or argv[0] in ("help", "-h", "--help"):
                print(self._cmd_help(argv[1:]))
            else:
                self.execute_command(argv)
            return EXIT_OK
        except FrobevalError as e:
            report(f"Error: {e.message}", "red")
            return e.exit_code
        except SystemExit as e:
            # argparse --version
            return e.code if isinstance(e.code, int) else EXIT_OK
        except Exception as e:
            report(f"Unexpected error: {e}", "red")
            return EXIT_FAILURE


def main(argv: Optional[List[str]] = None) -> int:
    return FrobevalCLI().main(sys.argv[1:] if argv is None else argv)
