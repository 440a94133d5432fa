"""
Cost Command Module

`cost`: the closed-form cost model for each requested degree: the g(L) sweep,
the continuous and integer optimum depth, the closed-form minimum, the Horner
baseline and, for even m, the cost of evaluating through the quadratic split.
"""

from typing import Any, Dict, List

from . import RunConfig, build_payload, render
from ..config import COST_CSV_COLUMNS, RS_FIELD_DESCRIPTION, get_error_message
from ..costmodel import CostParams, cost_row, sweep
from ..gf import parse_field_description
from ..poly import OpCount
from ..utils import InputError, colorize, format_table, use_color


def _fmt(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.3f}"
    return str(value)


def cmd_cost(config: RunConfig) -> str:
    """
    Tabulate the cost model.

    Usage: cost --n N[,N...] [--field "p=2 m=16"] [--subfield-d D]
    """
    if not config.n:
        raise InputError(get_error_message("bad_option", error="cost needs --n N[,N...]"), "bad_option")
    p, m, _ = parse_field_description(config.field or RS_FIELD_DESCRIPTION)

    color = config.out is None and use_color()
    rows: List[Dict[str, Any]] = []
    results: List[Dict[str, Any]] = []
    sections: List[str] = []
    for n in config.n:
        params = CostParams(n=n, p=p, m=m, d=config.subfield_d)
        row = cost_row(params)
        table = sweep(params)
        rows.append(row)
        result = dict(row)
        result["sweep"] = [[L, g] for L, g in table]
        results.append(result)

        marks = [[L, f"{g:.3f}", "*" if L == row["L_int"] else ""] for L, g in table]
        verdict = colorize("beats Horner", "green", color) if row["crossover"] else colorize("Horner wins", "yellow", color)
        sections.append("\n".join([
            colorize(f"p={p} m={m} d={params.d} n={n}", "bold", color),
            format_table(marks, ["L", "g(L)", ""]),
            f"L* = {row['L_star']:.3f}, L_int = {row['L_int']}, g(L_int) = {row['g_L_int']:.3f}",
            f"closed-form minimum {_fmt(row['min_closed_form'])}, Horner {row['horner_mul']} ({verdict})",
            f"split cost {_fmt(row['split_cost'])}, approximation 2 sqrt(2) n^(3/4) sqrt(log2 n) = {_fmt(row['split_cost_approx'])}",
        ]))

    payload = build_payload(config, results, OpCount(), {}, {"p": p, "m": m})
    return render(config, "\n\n".join(sections), payload, COST_CSV_COLUMNS, rows)
