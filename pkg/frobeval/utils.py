"""
Utility Functions Module

Helpers shared by the library and the CLI:
- Error classes (everything frobeval raises derives from FrobevalError)
- Console reporting with optional ANSI colors
- Table/number formatting for the text reports
- Output file handling for --out
"""

import csv
import io
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union, Any, TextIO
from .config import COLORS, EXIT_INPUT_ERROR, EXIT_MISMATCH


class FrobevalError(Exception):
    """Base exception class for frobeval errors."""

    exit_code = EXIT_INPUT_ERROR

    def __init__(self, message: str, error_code: str = "general"):
        self.message = message
        self.error_code = error_code
        super().__init__(self.message)


class FieldError(FrobevalError):
    """Invalid field construction or mixed-field arithmetic."""
    pass


class PolynomialError(FrobevalError):
    """Invalid polynomial input."""
    pass


class PlanError(FrobevalError):
    """Invalid evaluation plan or violated coefficient subfield."""
    pass


class CostModelError(FrobevalError):
    """Invalid cost-model parameters."""
    pass


class CodeError(FrobevalError):
    """Reed-Solomon input or setup problem."""
    pass


class InputError(FrobevalError):
    """Bad flags or unreadable input files."""
    pass


class VerificationError(FrobevalError):
    """Two computations that must agree did not."""

    exit_code = EXIT_MISMATCH


def colorize(text: str, color: str = "reset", enabled: bool = True) -> str:
    """
    Add color to text using ANSI escape sequences.

    Args:
        text: The text to colorize
        color: The color name from COLORS
        enabled: Return the text untouched when False (machine formats, pipes)

    Returns:
        Colorized text string
    """
    if not enabled:
        return text
    color_code = COLORS.get(color, COLORS["reset"])
    return f"{color_code}{text}{COLORS['reset']}"


def use_color(stream: Optional[TextIO] = None) -> bool:
    """True when the stream is an interactive terminal."""
    stream = stream or sys.stdout
    try:
        return stream.isatty()
    except (AttributeError, ValueError):
        return False


def report(message: str, color: str = "dim", stream: Optional[TextIO] = None) -> None:
    """Write a status line to stderr (never mixed into report output)."""
    stream = stream or sys.stderr
    print(colorize(message, color, use_color(stream)), file=stream)


def format_table(data: List[List[Any]], headers: Optional[List[str]] = None) -> str:
    """
    Format data as a table.

    Args:
        data: List of rows, each row is a list of cells
        headers: Optional list of header strings

    Returns:
        Formatted table string
    """
    if not data and not headers:
        return ""

    rows = [[str(cell) for cell in row] for row in data]
    if headers:
        rows = [list(headers)] + rows

    num_cols = max(len(row) for row in rows)
    col_widths = [0] * num_cols
    for row in rows:
        for i, cell in enumerate(row):
            col_widths[i] = max(col_widths[i], len(cell))

    lines = []
    for i, row in enumerate(rows):
        lines.append("  ".join(cell.rjust(col_widths[j]) for j, cell in enumerate(row)).rstrip())
        if headers and i == 0:
            lines.append("  ".join("-" * width for width in col_widths))

    return "\n".join(lines)


def format_duration(nanoseconds: Union[int, float]) -> str:
    """
    Format a duration in human-readable units.

    Args:
        nanoseconds: Duration in ns

    Returns:
        Formatted string (e.g., "1.5 ms")
    """
    units = ["ns", "us", "ms", "s"]
    value = float(nanoseconds)
    unit_index = 0

    while value >= 1000 and unit_index < len(units) - 1:
        value /= 1000
        unit_index += 1

    if unit_index == 0:
        return f"{int(value)} {units[unit_index]}"
    return f"{value:.1f} {units[unit_index]}"


def format_ratio(value: float, total: float) -> str:
    """
    Format value/total as a ratio with three decimals.

    Returns "n/a" when total is zero.
    """
    if total == 0:
        return "n/a"
    return f"{value / total:.3f}"


def ensure_directory(path: Union[str, Path]) -> None:
    """
    Ensure a directory exists, creating it if necessary.

    Raises:
        InputError: If directory cannot be created
    """
    try:
        Path(path).mkdir(parents=True, exist_ok=True)
    except (OSError, PermissionError) as e:
        raise InputError(f"Cannot create directory {path}: {e}")


def write_output(text: str, out_path: Optional[Union[str, Path]] = None) -> None:
    """Print the report, or write it to out_path (parent directories created)."""
    if out_path is None:
        print(text)
        return
    target = Path(out_path)
    ensure_directory(target.parent)
    try:
        target.write_text(text + "\n", encoding="utf-8")
    except OSError as e:
        raise InputError(f"Cannot write {target}: {e}")


def format_json(payload: Any) -> str:
    """Stable JSON rendering (sorted keys, two-space indent)."""
    return json.dumps(payload, indent=2, sort_keys=True)


def format_csv(columns: Sequence[str], rows: List[Dict[str, Any]]) -> str:
    """CSV with a header line always present; missing cells are empty."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(columns), extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: "" if row.get(key) is None else row.get(key) for key in columns})
    return buffer.getvalue().rstrip("\n")
