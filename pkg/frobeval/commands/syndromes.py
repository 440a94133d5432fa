"""
Syndromes Command Module

`syndromes`: read concatenated 255-byte received words and print the 32
syndromes of each, plus the operation ledger. With `--strategy both` the two
strategies must agree on every syndrome (exit code 3 otherwise).
"""

import time
from typing import Any, Dict, List

from . import RunConfig, build_payload, render
from ..config import (
    SYNDROME_CSV_COLUMNS, SYNDROME_STRATEGIES, get_error_message,
    get_success_message, get_thread_limit
)
from ..rs import BatchResult, rs_new, syndromes_batch, words_from_bytes
from ..utils import InputError, VerificationError, colorize, format_table, report, use_color


def _read_words(config: RunConfig) -> List[bytes]:
    if config.words is None:
        raise InputError(get_error_message("bad_option", error="syndromes needs --words FILE"), "bad_option")
    if not config.words.is_file():
        raise InputError(get_error_message("file_not_found", path=config.words), "file_not_found")
    try:
        data = config.words.read_bytes()
    except OSError as e:
        raise InputError(get_error_message("bad_option", error=e), "bad_option")
    return words_from_bytes(data)


def _compare(batches: Dict[str, BatchResult]) -> None:
    horner, auto = batches["horner"], batches["auto"]
    for w, (left, right) in enumerate(zip(auto.sets, horner.sets)):
        for j, (a, h) in enumerate(zip(left.values, right.values), 1):
            if a != h:
                raise VerificationError(
                    get_error_message("strategy_mismatch", word=w, j=j, left=a.value, right=h.value),
                    "strategy_mismatch"
                )


def _ledger_lines(batch: BatchResult) -> List[str]:
    return [
        f"  precompute: {batch.precompute_ops.paper_mult_equiv}",
        f"  words:      {batch.word_ops.paper_mult_equiv}",
        f"  total:      {batch.ops.paper_mult_equiv}",
    ]


def cmd_syndromes(config: RunConfig) -> str:
    """
    Syndromes of a word file.

    Usage: syndromes --words FILE [--strategy horner|auto|both] [--subfield-arith]
    """
    strategy = config.strategy or "both"
    if strategy not in SYNDROME_STRATEGIES:
        raise InputError(
            get_error_message("unknown_strategy", strategy=strategy, choices=", ".join(SYNDROME_STRATEGIES)),
            "unknown_strategy"
        )
    words = _read_words(config)
    code = rs_new()
    workers = get_thread_limit()
    if config.verbose:
        report(f"{len(words)} word(s), {workers} worker(s)")

    names = ["horner", "auto"] if strategy == "both" else [strategy]
    batches: Dict[str, BatchResult] = {}
    timings: Dict[str, int] = {}
    for name in names:
        started = time.perf_counter_ns()
        batches[name] = syndromes_batch(words, name, code, workers, config.subfield_arith)
        timings[name] = time.perf_counter_ns() - started

    if strategy == "both":
        _compare(batches)
        report(get_success_message("strategies_agree", words=len(words)), "green")

    primary = batches["auto"] if "auto" in batches else batches["horner"]
    results: List[Dict[str, Any]] = []
    rows: List[Dict[str, Any]] = []
    for name in names:
        for w, syndrome_set in enumerate(batches[name].sets):
            result = syndrome_set.as_dict()
            result["word"] = w
            result["zero"] = syndrome_set.is_zero()
            results.append(result)
            for j, value in enumerate(syndrome_set.hex(), 1):
                rows.append({"word": w, "strategy": name, "j": j, "syndrome": value})

    ledgers = {
        name: {
            "precompute": batch.precompute_ops.as_dict(),
            "words": batch.word_ops.as_dict(),
            "total": batch.ops.as_dict(),
        }
        for name, batch in batches.items()
    }
    payload = build_payload(config, results, primary.ops, timings, {"words": len(words), "ledgers": ledgers})

    color = config.out is None and use_color()
    lines: List[str] = []
    for w, syndrome_set in enumerate(primary.sets):
        status = colorize("codeword", "green", color) if syndrome_set.is_zero() else colorize("errors", "red", color)
        lines.append(f"{colorize(f'word {w}', 'bold', color)} ({status})")
        hexes = syndrome_set.hex()
        lines.append(format_table([hexes[i:i + 16] for i in range(0, len(hexes), 16)]))
    for name, batch in batches.items():
        lines.append(colorize(f"ledger ({name}, mult equiv)", "cyan", color))
        lines.extend(_ledger_lines(batch))
    return render(config, "\n".join(lines), payload, SYNDROME_CSV_COLUMNS, rows)
