"""
Evaluate Command Module

`eval`: load one polynomial, evaluate it at one point with Horner or automorphic
evaluation and report the value and the operation ledger. `--check` reruns
Horner and fails with exit code 3 on disagreement.
"""

import time
from typing import Any, Dict, List, Tuple

from . import RunConfig, build_payload, render
from ..autoeval import EvalPlan, EvalReport, LeafMode, auto_eval, choose_L, split_eval
from ..config import (
    EVAL_CSV_COLUMNS, EVAL_STRATEGIES, RS_FIELD_DESCRIPTION,
    get_error_message, get_success_message
)
from ..gf import FieldElement, FieldSpec, field_from_description, make_split
from ..poly import DEGREE_ZERO, OpCount, Polynomial, horner_eval, read_poly_file
from ..utils import InputError, VerificationError, colorize, format_table, report, use_color


def load_field(config: RunConfig) -> FieldSpec:
    return field_from_description(config.field or RS_FIELD_DESCRIPTION)


def _degree(P: Polynomial) -> int:
    degree = P.degree()
    return 0 if degree == DEGREE_ZERO else int(degree)


def plan_for(P: Polynomial, config: RunConfig) -> EvalPlan:
    """Depth from --L or the cost model; fixed-coeffs whenever the subfield allows it."""
    field = P.field
    d = config.subfield_d
    n = _degree(P)
    if config.L is not None:
        L = config.L
    else:
        L = choose_L(n, field, d) if n >= 1 else 0
    mode = LeafMode.FIXED_COEFFS if d is not None and L % d == 0 else LeafMode.TRANSFORM_OUTPUTS
    return EvalPlan(L=L, leaf_mode=mode, coeff_subfield_d=d)


def evaluate(P: Polynomial, alpha: FieldElement, config: RunConfig) -> Tuple[FieldElement, OpCount, Dict[str, Any]]:
    """Run the configured strategy; returns value, ledger and the plan description."""
    strategy = config.strategy or "auto"
    if strategy not in EVAL_STRATEGIES:
        raise InputError(
            get_error_message("unknown_strategy", strategy=strategy, choices=", ".join(EVAL_STRATEGIES)),
            "unknown_strategy"
        )
    if strategy == "horner":
        ops = OpCount()
        value = horner_eval(P, alpha, ops)
        return value, ops, {"strategy": "horner", "L": 0, "leaf_mode": None}

    result: EvalReport
    if config.split:
        split = make_split(P.field)
        n = _degree(P)
        L = config.L if config.L is not None else (choose_L(n, P.field, split.d) if n >= 1 else 0)
        result = split_eval(P, alpha, split, L)
    else:
        result = auto_eval(P, alpha, plan_for(P, config))
    described = {"strategy": "split" if config.split else "auto"}
    described.update(result.as_dict())
    described["leaf_mode"] = described["plan"]["leaf_mode"]
    described["L"] = described["plan"]["L"]
    return result.value, result.ops, described


def cmd_eval(config: RunConfig) -> str:
    """
    Evaluate a polynomial file at a point.

    Usage: eval --poly FILE --point INT [--field DESC] [--strategy horner|auto]
                [--L N] [--subfield-d D] [--split] [--raw] [--check]
    """
    if config.poly is None:
        raise InputError(get_error_message("bad_option", error="eval needs --poly FILE"), "bad_option")
    if config.point is None:
        raise InputError(get_error_message("bad_option", error="eval needs --point INT"), "bad_option")

    field = load_field(config)
    P = read_poly_file(field, config.poly, raw=config.raw)
    alpha = field.element(config.point)
    if config.verbose:
        report(f"{field}: degree {P.degree()}, point {alpha.value}")

    started = time.perf_counter_ns()
    value, ops, described = evaluate(P, alpha, config)
    elapsed = time.perf_counter_ns() - started

    checked = None
    if config.check:
        expected = horner_eval(P, alpha)
        if expected != value:
            raise VerificationError(
                get_error_message("check_mismatch", left=value.value, right=expected.value), "check_mismatch"
            )
        checked = True
        report(get_success_message("check_passed"), "green")

    row: Dict[str, Any] = {
        "strategy": described["strategy"],
        "L": described["L"],
        "leaf_mode": described["leaf_mode"],
        "value": value.value,
    }
    row.update(ops.as_dict())

    result = dict(described)
    result["value"] = value.value
    result["op_counts"] = ops.as_dict()
    result["check"] = checked
    payload = build_payload(config, [result], ops, {"eval": elapsed}, {"field": str(field)})

    color = config.out is None and use_color()
    lines: List[str] = [
        colorize(f"P(alpha) over {field}", "bold", color),
        f"Strategy: {colorize(str(row['strategy']), 'cyan', color)}"
        + (f" (L={row['L']}, {row['leaf_mode']})" if row["leaf_mode"] else ""),
        f"Value: {colorize(str(value.value), 'green', color)}",
        "",
        format_table([[ops.mul, ops.pth_pow, ops.add, ops.frob, ops.paper_mult_equiv]],
                     ["mul", "pth_pow", "add", "frob", "mult_equiv"]),
    ]
    return render(config, "\n".join(lines), payload, EVAL_CSV_COLUMNS, [row])
