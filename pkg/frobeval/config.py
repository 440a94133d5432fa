"""
Configuration Module

Every constant frobeval depends on lives here: built-in field moduli, the
thresholds that switch between exhaustive and clever algorithms, CLI defaults,
exit codes and the message templates used by the error classes.

Keeping these in one place means the CLI, the library and the tests all agree
on the same numbers (the Reed-Solomon parameters in particular).
"""

import os
from typing import Dict, Any, Tuple

import psutil

# Application configuration
APP_NAME = "frobeval"
APP_VERSION = "1.0.0"
APP_DESCRIPTION = "Finite-field polynomial evaluation with operation accounting"

# Built-in moduli, digits from degree m down to 0.
# Degree 1 uses the monomial x for every prime.
BUILTIN_MODULI: Dict[Tuple[int, int], str] = {
    (2, 1): "10",
    (2, 2): "111",
    (2, 3): "1011",
    (2, 4): "11001",
    (2, 5): "100101",
    (2, 6): "1000011",
    (2, 7): "10000011",
    (2, 8): "100101011",
    (2, 9): "1000010001",
    (2, 10): "10000001001",
    (2, 11): "100000000101",
    (2, 12): "1000001010011",
    (2, 13): "10000000011011",
    (2, 14): "100010001000011",
    (2, 15): "1000000000000011",
    (2, 16): "10001000000001011",
    (3, 1): "10",
    (3, 2): "122",
    (3, 3): "1021",
    (3, 4): "12002",
    (3, 5): "100021",
    (5, 1): "10",
    (5, 2): "142",
    (5, 3): "1033",
    (7, 1): "10",
}

# Arithmetic thresholds
TABLE_MAX_ORDER = 1 << 16  # exp/log tables for fields up to this order
EXHAUSTIVE_IRREDUCIBILITY_LIMIT = 1 << 20  # Rabin's test above this order
SPLIT_SEARCH_MAX_ORDER = 1 << 16  # make_split searches exhaustively

# Reed-Solomon [255,223,33] over GF(2^8)
RS_FIELD_DESCRIPTION = "p=2 m=8 modulus=100101011"
RS_LENGTH = 255
RS_DIMENSION = 223
RS_ROOTS = 32
RS_DEPTH = 4
RS_SUBFIELD_DEGREE = 4
RS_BETA_EXPONENT = 17  # (2^8 - 1) / (2^4 - 1)

# CLI settings
DEFAULT_TRIALS = 11
DEFAULT_FORMAT = "text"
OUTPUT_FORMATS = ("text", "json", "csv")
EVAL_STRATEGIES = ("horner", "auto")
SYNDROME_STRATEGIES = ("horner", "auto", "both")
THREADS_ENV_VAR = "FROBEVAL_THREADS"

# Exit codes (stable contract)
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_MISMATCH = 3

# CSV columns, one tuple per subcommand
OP_COLUMNS = ("mul", "pth_pow", "add", "frob", "paper_mult_equiv")
EVAL_CSV_COLUMNS = ("strategy", "L", "leaf_mode", "value") + OP_COLUMNS
COST_CSV_COLUMNS = (
    "p", "m", "d", "n", "L_star", "L_int", "g_L_int", "min_closed_form",
    "horner_mul", "crossover", "split_cost", "split_cost_approx",
)
BENCH_CSV_COLUMNS = ("strategy", "L", "trials", "median_ns") + OP_COLUMNS + ("mult_ratio",)
SYNDROME_CSV_COLUMNS = ("word", "strategy", "j", "syndrome")

# Command categories
COMMAND_CATEGORIES = {
    "evaluation": ["eval", "bench"],
    "analysis": ["cost"],
    "coding": ["syndromes"],
    "utility": ["help"],
}

# Error messages
ERROR_MESSAGES = {
    "not_prime": "Characteristic {p} is not prime",
    "bad_degree": "Extension degree must be >= 1, got {m}",
    "bad_modulus": "Modulus must be monic of degree {m} over GF({p}): {modulus}",
    "reducible_modulus": "Modulus {modulus} is reducible over GF({p})",
    "no_builtin_modulus": "No built-in modulus for GF({p}^{m}); pass modulus=... explicitly",
    "bad_field_description": "Cannot parse field description '{text}': {error}",
    "bad_element": "Element {value} out of range for GF({p}^{m})",
    "mixed_fields": "Operands belong to different fields: {left} vs {right}",
    "negative_exponent": "Exponent must be non-negative, got {e}",
    "not_divisor": "Subfield degree {d} does not divide extension degree {m}",
    "odd_degree": "Quadratic split needs an even extension degree, got m={m}",
    "split_too_large": "Split search limited to fields of order <= {limit}, got {order}",
    "split_not_found": "No quadratic split found for GF({p}^{m})",
    "bad_stride": "Stride must be >= 2, got {s}",
    "bad_poly_degree": "Polynomial degree must be >= 0, got {degree}",
    "bad_depth": "Decomposition depth must be >= 0, got {L}",
    "bad_leaf_mode": "Unknown leaf mode '{mode}'",
    "fixed_needs_subfield": "fixed-coeffs mode needs a declared coefficient subfield",
    "fixed_needs_divisor": "fixed-coeffs mode needs d | L (d={d}, L={L})",
    "coeff_not_in_subfield": "Coefficient of x^{index} ({value}) is not in GF({p}^{d})",
    "bad_cost_degree": "Polynomial degree must be >= 1, got {n}",
    "bad_cost_params": "Invalid cost parameters: {error}",
    "rs_length": "Expected {expected} symbols, got {actual}",
    "rs_split_mismatch": "Split element does not satisfy gamma^2 + gamma = alpha^17",
    "rs_tables_missing": "Syndrome tables must be built before automorphic evaluation",
    "empty_batch": "Batch must contain at least one word",
    "unknown_strategy": "Unknown strategy '{strategy}' (choose from {choices})",
    "file_not_found": "File not found: {path}",
    "bad_poly_line": "{path}, line {line}: {error}",
    "raw_needs_gf256": "Raw byte polynomials need GF(2^8), got GF({p}^{m})",
    "bad_record_length": "Word file size {size} is not a multiple of {record}",
    "bad_option": "{error}",
    "seed_required": "--seed is required for randomized runs",
    "check_mismatch": "Verification failed: {left} != {right}",
    "strategy_mismatch": "Strategies disagree on word {word}, S_{j}: {left} != {right}",
    "command_not_found": "Command '{command}' not found. Type 'help' for available commands.",
}

# Success messages
SUCCESS_MESSAGES = {
    "check_passed": "Horner cross-check passed",
    "strategies_agree": "Strategies agree on {words} word(s)",
    "output_written": "Output written to '{path}'",
}

# Color codes for terminal output (ANSI escape sequences)
COLORS = {
    "reset": "\033[0m",
    "bold": "\033[1m",
    "dim": "\033[2m",
    "red": "\033[31m",
    "green": "\033[32m",
    "yellow": "\033[33m",
    "blue": "\033[34m",
    "magenta": "\033[35m",
    "cyan": "\033[36m",
    "white": "\033[37m"
}


def get_config() -> Dict[str, Any]:
    """
    Get the current configuration as a dictionary.

    Returns:
        Dict containing the settings echoed in machine-readable reports
    """
    return {
        "app_name": APP_NAME,
        "app_version": APP_VERSION,
        "table_max_order": TABLE_MAX_ORDER,
        "exhaustive_irreducibility_limit": EXHAUSTIVE_IRREDUCIBILITY_LIMIT,
        "default_trials": DEFAULT_TRIALS,
        "threads": get_thread_limit(),
    }


def get_thread_limit() -> int:
    """
    Read the worker cap from FROBEVAL_THREADS.

    Unset, empty, 0 or garbage all mean "auto", which is the logical CPU count.
    """
    raw = os.environ.get(THREADS_ENV_VAR, "").strip()
    try:
        limit = int(raw) if raw else 0
    except ValueError:
        limit = 0
    if limit > 0:
        return limit
    return psutil.cpu_count(logical=True) or 1


def get_error_message(error_key: str, **kwargs) -> str:
    """
    Get a formatted error message.

    Args:
        error_key: The error message key
        **kwargs: Format parameters

    Returns:
        Formatted error message
    """
    template = ERROR_MESSAGES.get(error_key, "Unknown error: {error}")
    return template.format(**kwargs)


def get_success_message(success_key: str, **kwargs) -> str:
    """
    Get a formatted success message.

    Args:
        success_key: The success message key
        **kwargs: Format parameters

    Returns:
        Formatted success message
    """
    template = SUCCESS_MESSAGES.get(success_key, "Operation completed successfully")
    return template.format(**kwargs)
