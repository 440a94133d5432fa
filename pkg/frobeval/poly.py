"""
Polynomial Module

Polynomials over one FieldSpec, the Horner baseline and the two building
blocks of automorphic evaluation: the stride split P(x) = sum x^i P_i(x^s)
and the coefficient-wise Frobenius map.

Operation counts are never global: every evaluator takes an OpCount
accumulator owned by the caller. Horner charges deg(P) multiplications and
deg(P) additions whatever the data is (no shortcuts on 0 or 1), so counts only
depend on the shape of the input.

File formats handled here:
- text: one integer per line, line i = coefficient of x^i, `#` starts a comment
- raw (GF(2^8) only): byte i = coefficient of x^i
"""

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

import numpy as np

from .config import get_error_message
from .gf import (
    FieldSpec, FieldElement, add, mul, frobenius, trace_to_subfield
)
from .utils import FieldError, PolynomialError, InputError

# Degree of the zero polynomial. Never -1, so (n - i) / s bounds stay meaningful.
DEGREE_ZERO = -math.inf


@dataclass
class OpCount:
    """Tally of field operations; merge is associative and commutative."""

    mul: int = 0
    pth_pow: int = 0
    add: int = 0
    frob: int = 0

    @property
    def paper_mult_equiv(self) -> int:
        """Multiplications plus p-th powers (squares counted as multiplications)."""
        return self.mul + self.pth_pow

    def merge(self, other: "OpCount") -> "OpCount":
        self.mul += other.mul
        self.pth_pow += other.pth_pow
        self.add += other.add
        self.frob += other.frob
        return self

    def __add__(self, other: "OpCount") -> "OpCount":
        return OpCount(
            self.mul + other.mul, self.pth_pow + other.pth_pow,
            self.add + other.add, self.frob + other.frob
        )

    def copy(self) -> "OpCount":
        return OpCount(self.mul, self.pth_pow, self.add, self.frob)

    def as_dict(self) -> Dict[str, int]:
        return {
            "mul": self.mul,
            "pth_pow": self.pth_pow,
            "add": self.add,
            "frob": self.frob,
            "paper_mult_equiv": self.paper_mult_equiv,
        }


@dataclass(frozen=True)
class Polynomial:
    """Coefficients over one field, index i = coefficient of x^i; trailing zeros allowed."""

    field: FieldSpec
    coeffs: tuple

    def __post_init__(self):
        for c in self.coeffs:
            if c.field is not self.field and c.field != self.field:
                raise FieldError(
                    get_error_message("mixed_fields", left=c.field, right=self.field), "mixed_fields"
                )

    @classmethod
    def from_ints(cls, field: FieldSpec, values: Sequence[int]) -> "Polynomial":
        return cls(field, tuple(field.element(v) for v in values))

    @classmethod
    def zero(cls, field: FieldSpec) -> "Polynomial":
        return cls(field, ())

    def to_ints(self) -> List[int]:
        return [c.value for c in self.coeffs]

    def degree(self) -> Union[int, float]:
        """Highest index with a nonzero coefficient; DEGREE_ZERO for the zero polynomial."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i].value:
                return i
        return DEGREE_ZERO

    def is_zero(self) -> bool:
        return self.degree() == DEGREE_ZERO

    def __len__(self) -> int:
        return len(self.coeffs)


def horner_eval_dense(coeffs: Sequence[FieldElement], alpha: FieldElement,
                      counter: Optional[OpCount] = None) -> FieldElement:
    """
    Horner over the full coefficient vector: len - 1 multiplications and
    additions, leading zeros included.
    """
    if not coeffs:
        return alpha.field.zero
    value = coeffs[-1]
    for i in range(len(coeffs) - 2, -1, -1):
        value = add(mul(value, alpha), coeffs[i])
    if counter is not None and len(coeffs) > 1:
        counter.mul += len(coeffs) - 1
        counter.add += len(coeffs) - 1
    return value


def horner_eval(P: Polynomial, alpha: FieldElement, counter: Optional[OpCount] = None) -> FieldElement:
    """
    P(alpha) by Horner's rule: exactly deg(P) multiplications and deg(P)
    additions (none for constants and the zero polynomial).

    Raises:
        FieldError: alpha not in P's field
    """
    if alpha.field is not P.field and alpha.field != P.field:
        raise FieldError(get_error_message("mixed_fields", left=alpha.field, right=P.field), "mixed_fields")
    n = P.degree()
    if n == DEGREE_ZERO:
        return P.field.zero
    return horner_eval_dense(P.coeffs[:n + 1], alpha, counter)


def stride_split(P: Polynomial, s: int) -> List[Polynomial]:
    """
    [P_0, ..., P_{s-1}] with P_i(y) = sum_a a_{a*s+i} y^a, so that
    P(x) = sum_i x^i P_i(x^s). Parts are never zero-padded.
    """
    if not isinstance(s, int) or s < 2:
        raise PolynomialError(get_error_message("bad_stride", s=s), "bad_stride")
    return [Polynomial(P.field, P.coeffs[i::s]) for i in range(s)]


def coeff_frobenius(P: Polynomial, k: int, counter: Optional[OpCount] = None) -> Polynomial:
    """Apply sigma^k to every coefficient; one frob charged per nonzero coefficient."""
    if k % P.field.m == 0:
        return P
    coeffs = tuple(frobenius(c, k) for c in P.coeffs)
    if counter is not None:
        counter.frob += sum(1 for c in P.coeffs if c.value)
    return Polynomial(P.field, coeffs)


def poly_random(field: FieldSpec, degree: int, d: Optional[int] = None,
                seed: Union[int, np.random.Generator] = 0) -> Polynomial:
    """
    Seeded random polynomial of exact degree.

    Coefficients are uniform over the field, or over GF(p^d) when d is given
    (the relative trace of a uniform element is uniform on the subfield). The
    leading coefficient is resampled until nonzero.

    Raises:
        FieldError: d does not divide m
        PolynomialError: negative degree
    """
    if degree < 0:
        raise PolynomialError(get_error_message("bad_poly_degree", degree=degree), "bad_poly_degree")
    if d is not None and (d < 1 or field.m % d):
        raise FieldError(get_error_message("not_divisor", d=d, m=field.m), "not_divisor")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)

    def draw() -> FieldElement:
        digits = rng.integers(0, field.p, size=field.m)
        element = field.from_coeffs(digits)
        if d is not None and d != field.m:
            element = trace_to_subfield(element, d)
        return element

    coeffs = [draw() for _ in range(degree)]
    leading = draw()
    while leading.is_zero():
        leading = draw()
    coeffs.append(leading)
    return Polynomial(field, tuple(coeffs))


def parse_poly_text(field: FieldSpec, text: str, source: str = "<text>") -> Polynomial:
    """One integer per line (line i = coefficient of x^i); blank lines and `#` comments skipped."""
    values = []
    for line_no, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            values.append(field.element(int(body)))
        except (ValueError, FieldError) as e:
            raise InputError(
                get_error_message("bad_poly_line", path=source, line=line_no, error=e), "bad_poly_line"
            )
    return Polynomial(field, tuple(values))


def poly_from_bytes(field: FieldSpec, data: bytes) -> Polynomial:
    """Raw GF(2^8) format: byte i = coefficient of x^i."""
    if field.p != 2 or field.m != 8:
        raise InputError(get_error_message("raw_needs_gf256", p=field.p, m=field.m), "raw_needs_gf256")
    return Polynomial(field, tuple(field.element(b) for b in data))


def format_poly_text(P: Polynomial) -> str:
    lines = [f"# {P.field}, {len(P.coeffs)} coefficients, line i = coefficient of x^i"]
    lines.extend(str(c.value) for c in P.coeffs)
    return "\n".join(lines)


def read_poly_file(field: FieldSpec, path: Union[str, Path], raw: bool = False) -> Polynomial:
    """Load a polynomial file in text or raw byte format."""
    path = Path(path)
    if not path.is_file():
        raise InputError(get_error_message("file_not_found", path=path), "file_not_found")
    if raw:
        return poly_from_bytes(field, path.read_bytes())
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise InputError(get_error_message("bad_poly_line", path=path, line=0, error=e), "bad_poly_line")
    return parse_poly_text(field, text, str(path))
