"""
Bench Command Module

`bench`: seeded random instances, wall time (median over --trials) and the
operation ledger per strategy. Timings are reported, never asserted; the
ledgers depend only on the seed and the sizes.

Two modes:
- polynomial: random degree-n polynomial (optionally over GF(p^d)) and a
  random nonzero point, Horner against automorphic evaluation
- Reed-Solomon (--rs-words K): K random words, both syndrome strategies
  through syndromes_batch
"""

import time
from typing import Any, Callable, Dict, List, Tuple

import numpy as np
import psutil

from . import RunConfig, build_payload, render
from .evaluate import load_field, plan_for
from ..autoeval import auto_eval
from ..config import BENCH_CSV_COLUMNS, get_error_message, get_thread_limit
from ..poly import OpCount, horner_eval, poly_random
from ..rs import random_word, rs_new, syndromes_batch
from ..utils import (
    InputError, colorize, format_duration, format_ratio, format_table, report, use_color
)

DEFAULT_BENCH_DEGREE = 254


def median_ns(run: Callable[[], Any], trials: int) -> Tuple[int, Any]:
    """Median wall time of `trials` calls and the last call's result."""
    samples = []
    result = None
    for _ in range(max(trials, 1)):
        started = time.perf_counter_ns()
        result = run()
        samples.append(time.perf_counter_ns() - started)
    return int(np.median(samples)), result


def machine_info() -> Dict[str, Any]:
    memory = psutil.virtual_memory()
    return {
        "cpu_count_logical": psutil.cpu_count(logical=True),
        "cpu_count_physical": psutil.cpu_count(logical=False),
        "memory_total": memory.total,
    }


def _polynomial_rows(config: RunConfig) -> Tuple[List[Dict[str, Any]], Dict[str, Any]]:
    field = load_field(config)
    degree = config.degree if config.degree is not None else DEFAULT_BENCH_DEGREE
    rng = np.random.default_rng(config.seed)
    P = poly_random(field, degree, config.subfield_d, rng)
    alpha = field.element(int(rng.integers(1, field.order))) if field.order > 1 else field.one
    plan = plan_for(P, config)

    horner_ns, horner_ops = median_ns(lambda: _horner_ops(P, alpha), config.trials)
    auto_ns, auto_report = median_ns(lambda: auto_eval(P, alpha, plan), config.trials)

    rows = [
        _row("horner", 0, config.trials, horner_ns, horner_ops, horner_ops),
        _row("auto", plan.L, config.trials, auto_ns, auto_report.ops, horner_ops),
    ]
    context = {"field": str(field), "degree": degree, "point": alpha.value, "plan": plan.as_dict()}
    return rows, context


def _horner_ops(P, alpha) -> OpCount:
    ops = OpCount()
    horner_eval(P, alpha, ops)
    return ops


def _rs_rows(config: RunConfig) -> Tuple[List[Dict[str, Any]], Dict[str, Any]]:
    code = rs_new()
    rng = np.random.default_rng(config.seed)
    words = [random_word(rng) for _ in range(config.rs_words)]
    workers = get_thread_limit()

    horner_ns, horner_batch = median_ns(lambda: syndromes_batch(words, "horner", code, workers), config.trials)
    auto_ns, auto_batch = median_ns(lambda: syndromes_batch(words, "auto", code, workers), config.trials)

    rows = [
        _row("horner", 0, config.trials, horner_ns, horner_batch.ops, horner_batch.ops),
        _row("auto", 4, config.trials, auto_ns, auto_batch.ops, horner_batch.ops),
    ]
    context = {
        "rs_words": config.rs_words,
        "workers": workers,
        "precompute": {
            "horner": horner_batch.precompute_ops.as_dict(),
            "auto": auto_batch.precompute_ops.as_dict(),
        },
    }
    return rows, context


def _row(strategy: str, L: int, trials: int, median: int, ops: OpCount, baseline: OpCount) -> Dict[str, Any]:
    row: Dict[str, Any] = {"strategy": strategy, "L": L, "trials": trials, "median_ns": median}
    row.update(ops.as_dict())
    row["mult_ratio"] = format_ratio(ops.paper_mult_equiv, baseline.paper_mult_equiv)
    return row


def cmd_bench(config: RunConfig) -> str:
    """
    Benchmark Horner against automorphic evaluation.

    Usage: bench --seed S [--field DESC] [--degree N] [--subfield-d D] [--L N] [--trials T]
           bench --seed S --rs-words K [--trials T]
    """
    if config.seed is None:
        raise InputError(get_error_message("seed_required"), "seed_required")
    if config.trials < 1:
        raise InputError(get_error_message("bad_option", error="--trials must be >= 1"), "bad_option")

    if config.rs_words is not None:
        if config.rs_words < 1:
            raise InputError(get_error_message("bad_option", error="--rs-words must be >= 1"), "bad_option")
        rows, context = _rs_rows(config)
    else:
        rows, context = _polynomial_rows(config)
    if config.verbose:
        report(f"bench finished: {len(rows)} strategies, {config.trials} trials each")

    auto_ops = OpCount(rows[1]["mul"], rows[1]["pth_pow"], rows[1]["add"], rows[1]["frob"])
    context["machine"] = machine_info()
    timings = {row["strategy"]: row["median_ns"] for row in rows}
    payload = build_payload(config, rows, auto_ops, timings, context)

    color = config.out is None and use_color()
    table = format_table(
        [[r["strategy"], r["L"], format_duration(r["median_ns"]), r["mul"], r["pth_pow"],
          r["add"], r["paper_mult_equiv"], r["mult_ratio"]] for r in rows],
        ["strategy", "L", "median", "mul", "pth_pow", "add", "mult_equiv", "ratio"],
    )
    title = f"{config.rs_words} RS word(s)" if config.rs_words is not None else context["field"]
    text = "\n".join([colorize(f"Benchmark: {title}, seed {config.seed}", "bold", color), table])
    return render(config, text, payload, BENCH_CSV_COLUMNS, rows)
