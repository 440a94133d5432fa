"""
frobeval Commands Package

One module per subcommand:
- evaluate.py: eval (single polynomial, single point)
- cost.py: cost (closed-form cost tables)
- bench.py: bench (seeded timing and op-count comparison)
- syndromes.py: syndromes (Reed-Solomon word files)

Every command takes a RunConfig and returns the report text.
"""

from dataclasses import asdict, dataclass, field as dc_field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from ..config import DEFAULT_FORMAT, DEFAULT_TRIALS, get_config
from ..poly import OpCount
from ..utils import format_csv, format_json


@dataclass
class RunConfig:
    """Parsed command line; seed is mandatory wherever randomness is involved."""

    subcommand: str
    field: Optional[str] = None
    poly: Optional[Path] = None
    point: Optional[int] = None
    strategy: Optional[str] = None
    L: Optional[int] = None
    subfield_d: Optional[int] = None
    split: bool = False
    seed: Optional[int] = None
    trials: int = DEFAULT_TRIALS
    output_format: str = DEFAULT_FORMAT
    check: bool = False
    words: Optional[Path] = None
    out: Optional[Path] = None
    raw: bool = False
    n: List[int] = dc_field(default_factory=list)
    degree: Optional[int] = None
    rs_words: Optional[int] = None
    subfield_arith: bool = False
    verbose: bool = False

    def as_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        for key in ("poly", "words", "out"):
            if data[key] is not None:
                data[key] = str(data[key])
        return data


def build_payload(config: RunConfig, results: List[Dict[str, Any]], op_counts: OpCount,
                  timings_ns: Dict[str, Any], extra_config: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """{config, results[], op_counts, timings_ns}, the machine-readable report."""
    echoed = {"run": config.as_dict(), "settings": get_config()}
    if extra_config:
        echoed.update(extra_config)
    return {
        "config": echoed,
        "results": results,
        "op_counts": op_counts.as_dict(),
        "timings_ns": timings_ns,
    }


def render(config: RunConfig, text: str, payload: Dict[str, Any],
           columns: Sequence[str], rows: List[Dict[str, Any]]) -> str:
    if config.output_format == "json":
        return format_json(payload)
    if config.output_format == "csv":
        return format_csv(columns, rows)
    return text
