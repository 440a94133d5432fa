"""
Reed-Solomon Syndrome Module

Syndromes S_j = r(alpha^j), j = 1..32, of the [255,223,33] code over GF(2^8)
with modulus x^8+x^5+x^3+x+1, computed two ways:

- horner: 31 multiplications for alpha^2..alpha^32, then 254 per point.
- auto: r = r1 + gamma*r2 with r1, r2 over GF(16) (gamma^2 + gamma = beta,
  beta = alpha^17), four stride-2 rounds into 16 leaves of degree <= 15,
  leaves evaluated by table lookups and additions only, then 30 squarings
  and 15 multiplications per half plus one multiplication to join the halves.

Ledgers (paper_mult_equiv): 91 per syndrome, 2912 per word, 3823 for the
tables, so a batch of K words costs 3823 + 2912K against 31 + 8128K.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .autoeval import decompose, recombine
from .config import (
    RS_FIELD_DESCRIPTION, RS_LENGTH, RS_DIMENSION, RS_ROOTS, RS_DEPTH,
    RS_SUBFIELD_DEGREE, RS_BETA_EXPONENT, get_error_message
)
from .gf import (
    FieldElement, FieldSpec, SubfieldSplit, add, sub, mul, neg, frobenius,
    field_from_description, find_primitive, make_split, split_element, recompose
)
from .poly import OpCount, Polynomial, horner_eval_dense
from .utils import CodeError, InputError

Word = Union[bytes, bytearray, Sequence[int], Sequence[FieldElement]]

SUBFIELD_UNITS = 2 ** RS_SUBFIELD_DEGREE - 1  # |GF(16)*| = 15


@dataclass(frozen=True)
class RSCode:
    field: FieldSpec
    alpha: FieldElement
    t2: int
    n_code: int
    k_code: int
    generator: Polynomial


@dataclass(frozen=True)
class SyndromeTables:
    """
    alpha_pows[i] = alpha^i, i < 255; mixed[i][j] = alpha^i * beta^j, j < 15
    (column 0 repeats alpha_pows); log_beta maps a nonzero GF(16) value to
    its exponent base beta.
    """

    alpha_pows: Tuple[FieldElement, ...]
    mixed: Tuple[Tuple[FieldElement, ...], ...]
    beta: FieldElement
    log_beta: Dict[int, int]
    build_ops: OpCount


@dataclass
class SyndromeSet:
    values: Tuple[FieldElement, ...]
    ops: OpCount
    strategy: str
    arithmetic: str = "field"

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def hex(self) -> List[str]:
        return [f"{v.value:02x}" for v in self.values]

    def as_dict(self) -> Dict[str, Any]:
        return {
            "strategy": self.strategy,
            "arithmetic": self.arithmetic,
            "syndromes": self.hex(),
            "op_counts": self.ops.as_dict(),
        }


@dataclass
class BatchResult:
    """Per-word syndromes in input order plus the amortized ledger."""

    sets: List[SyndromeSet]
    ops: OpCount
    precompute_ops: OpCount
    strategy: str
    word_ops: OpCount = dc_field(default_factory=OpCount)


def _mul_by_linear(coeffs: List[FieldElement], root: FieldElement) -> List[FieldElement]:
    """coeffs * (x - root)"""
    zero = root.field.zero
    out = [zero] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i + 1] = add(out[i + 1], c)
        out[i] = sub(out[i], mul(root, c))
    return out


def rs_new() -> RSCode:
    """The [255,223,33] code; alpha is x whenever x is primitive for the modulus."""
    gf256 = field_from_description(RS_FIELD_DESCRIPTION)
    alpha = find_primitive(gf256)
    coeffs = [gf256.one]
    root = alpha
    for _ in range(RS_ROOTS):
        coeffs = _mul_by_linear(coeffs, root)
        root = mul(root, alpha)
    return RSCode(
        field=gf256, alpha=alpha, t2=RS_ROOTS, n_code=RS_LENGTH, k_code=RS_DIMENSION,
        generator=Polynomial(gf256, tuple(coeffs))
    )


def _as_elements(word: Word, field: FieldSpec, length: int) -> List[FieldElement]:
    if len(word) != length:
        raise CodeError(get_error_message("rs_length", expected=length, actual=len(word)), "rs_length")
    return [w if isinstance(w, FieldElement) else field.element(w) for w in word]


def encode(message: Word, code: RSCode) -> List[FieldElement]:
    """
    Systematic encoding: message symbol i becomes the coefficient of
    x^(32 + i), the low 32 coefficients are minus the remainder mod g.
    """
    msg = _as_elements(message, code.field, code.k_code)
    parity = code.n_code - code.k_code
    remainder = [code.field.zero] * parity + msg
    divisor = code.generator.coeffs
    for i in range(len(remainder) - 1, parity - 1, -1):
        lead = remainder[i]
        if lead.is_zero():
            continue
        for j in range(parity + 1):
            k = i - parity + j
            remainder[k] = sub(remainder[k], mul(lead, divisor[j]))
    return [neg(r) for r in remainder[:parity]] + msg


def build_tables(code: RSCode) -> SyndromeTables:
    """alpha^i and alpha^i * beta^j tables; 253 + 3570 multiplications charged."""
    ops = OpCount()
    pows = [code.field.one, code.alpha]
    for _ in range(2, code.n_code):
        pows.append(mul(pows[-1], code.alpha))
    ops.mul += code.n_code - 2

    beta_pows = [pows[(RS_BETA_EXPONENT * j) % code.n_code] for j in range(SUBFIELD_UNITS)]
    mixed = []
    for i in range(code.n_code):
        mixed.append(tuple([pows[i]] + [mul(pows[i], beta_pows[j]) for j in range(1, SUBFIELD_UNITS)]))
    # every row charged, including alpha^0 whose products are copies
    ops.mul += code.n_code * (SUBFIELD_UNITS - 1)

    return SyndromeTables(
        alpha_pows=tuple(pows),
        mixed=tuple(mixed),
        beta=beta_pows[1],
        log_beta={b.value: e for e, b in enumerate(beta_pows)},
        build_ops=ops,
    )


def prepare_points(code: RSCode, counter: Optional[OpCount] = None) -> List[FieldElement]:
    """alpha^1..alpha^32 by repeated multiplication (31 multiplications)."""
    points = [code.alpha]
    for _ in range(1, code.t2):
        points.append(mul(points[-1], code.alpha))
    if counter is not None:
        counter.mul += code.t2 - 1
    return points


def syndromes_horner(received: Word, code: RSCode, counter: Optional[OpCount] = None,
                     points: Optional[Sequence[FieldElement]] = None) -> SyndromeSet:
    """
    Horner over all 255 symbols at each root. Point preparation is charged
    here unless shared points are passed in.
    """
    r = _as_elements(received, code.field, code.n_code)
    ops = OpCount()
    if points is None:
        points = prepare_points(code, ops)
    values = tuple(horner_eval_dense(r, point, ops) for point in points)
    if counter is not None:
        counter.merge(ops)
    return SyndromeSet(values, ops, "horner")


def check_split(split: SubfieldSplit, tables: SyndromeTables) -> None:
    """gamma must satisfy gamma^2 + gamma = beta and lie outside GF(16)."""
    gamma = split.gamma
    if (split.d != RS_SUBFIELD_DEGREE
            or add(mul(gamma, gamma), gamma) != tables.beta
            or frobenius(gamma, RS_SUBFIELD_DEGREE) == gamma):
        raise CodeError(get_error_message("rs_split_mismatch"), "rs_split_mismatch")


@lru_cache(maxsize=None)
def code_split(field: FieldSpec) -> SubfieldSplit:
    """The GF(16) split of the code's field, searched once per field."""
    return make_split(field)


def _leaf_terms(half: Sequence[FieldElement], field: FieldSpec,
                tables: SyndromeTables) -> List[List[Tuple[int, int]]]:
    """Per leaf, (degree, log_beta(coefficient)) for every nonzero coefficient."""
    leaves = decompose(Polynomial(field, tuple(half)), 2, RS_DEPTH)
    terms = []
    for leaf in leaves:
        entries = []
        for k, c in enumerate(leaf.coeffs):
            if c.is_zero():
                continue
            if c.value not in tables.log_beta:
                raise CodeError(get_error_message("rs_split_mismatch"), "rs_split_mismatch")
            entries.append((k, tables.log_beta[c.value]))
        terms.append(entries)
    return terms


def _leaf_value(terms: Sequence[Tuple[int, int]], j: int, tables: SyndromeTables,
                zero: FieldElement, ops: OpCount) -> FieldElement:
    """sum_k c_k alpha^(jk) with c_k = beta^e: lookups and additions only."""
    value = None
    for k, e in terms:
        entry = tables.mixed[(j * k) % RS_LENGTH][e]
        if value is None:
            value = entry
        else:
            value = add(value, entry)
            ops.add += 1
    return zero if value is None else value


# Arithmetic on pairs (a, b) = a + b*gamma with a, b in GF(16),
# gamma^2 = -c1*gamma - c0.

Pair = Tuple[FieldElement, FieldElement]


def _pair_add(x: Pair, y: Pair, ops: OpCount) -> Pair:
    ops.add += 2
    return add(x[0], y[0]), add(x[1], y[1])


def _pair_mul(x: Pair, y: Pair, split: SubfieldSplit, ops: OpCount) -> Pair:
    """Three subfield products for (a + b*gamma)(c + d*gamma), then reduce gamma^2."""
    a, b = x
    c, d = y
    ac = mul(a, c)
    bd = mul(b, d)
    cross = sub(sub(mul(add(a, b), add(c, d)), ac), bd)
    real = sub(ac, mul(bd, split.c0))
    imag = cross
    ops.mul += 4
    ops.add += 5
    if split.c1 == split.field.one:
        imag = sub(imag, bd)
    else:
        imag = sub(imag, mul(bd, split.c1))
        ops.mul += 1
    ops.add += 1
    return real, imag


def _pair_square(x: Pair, split: SubfieldSplit, ops: OpCount) -> Pair:
    """Characteristic 2: (a + b*gamma)^2 = a^2 + b^2 * gamma^2."""
    a, b = x
    a2 = frobenius(a, 1)
    b2 = frobenius(b, 1)
    ops.pth_pow += 2
    real = sub(a2, mul(b2, split.c0))
    ops.mul += 1
    ops.add += 1
    if split.c1 == split.field.one:
        return real, neg(b2)
    ops.mul += 1
    return real, neg(mul(b2, split.c1))


def _recombine_pairs(leaf_pairs: List[Pair], point: Pair, split: SubfieldSplit, ops: OpCount) -> Pair:
    values = leaf_pairs
    while len(values) > 1:
        size = len(values) // 2
        values = [
            _pair_add(_pair_square(values[t], split, ops),
                      _pair_mul(point, _pair_square(values[t + size], split, ops), split, ops),
                      ops)
            for t in range(size)
        ]
    return values[0]


def _join_pairs(first: Pair, second: Pair, split: SubfieldSplit, ops: OpCount) -> Pair:
    """first + gamma * second."""
    u1, v1 = first
    u2, v2 = second
    ops.mul += 1
    ops.add += 3
    twisted = v2
    if split.c1 != split.field.one:
        twisted = mul(v2, split.c1)
        ops.mul += 1
    return sub(u1, mul(v2, split.c0)), sub(add(v1, u2), twisted)


def syndromes_auto(received: Word, code: RSCode, tables: Optional[SyndromeTables],
                   split: SubfieldSplit, counter: Optional[OpCount] = None,
                   subfield_arith: bool = False) -> SyndromeSet:
    """
    Syndromes by automorphic evaluation with table-driven leaves.

    With subfield_arith the leaf values and alpha^j are carried as pairs over
    GF(16) and recombined with subfield arithmetic; values are identical, the
    ledger counts GF(16) operations instead.

    Raises:
        CodeError: wrong length, missing tables, or a split that does not match beta
    """
    if tables is None:
        raise CodeError(get_error_message("rs_tables_missing"), "rs_tables_missing")
    r = _as_elements(received, code.field, code.n_code)
    check_split(split, tables)

    field = code.field
    pairs = [split_element(c, split) for c in r]
    halves = [
        _leaf_terms([a1 for a1, _ in pairs], field, tables),
        _leaf_terms([a2 for _, a2 in pairs], field, tables),
    ]

    ops = OpCount()
    powers_one = field.one
    values = []
    for j in range(1, code.t2 + 1):
        point = tables.alpha_pows[j]
        leaf_values = [
            [_leaf_value(terms, j, tables, field.zero, ops) for terms in half]
            for half in halves
        ]
        if subfield_arith:
            point_pair = split_element(point, split)
            evaluated = [
                _recombine_pairs([split_element(v, split) for v in half_values], point_pair, split, ops)
                for half_values in leaf_values
            ]
            a1, a2 = _join_pairs(evaluated[0], evaluated[1], split, ops)
            values.append(recompose(a1, a2, split))
        else:
            first, second = (recombine(half_values, [powers_one, point], 2, ops) for half_values in leaf_values)
            values.append(add(first, mul(split.gamma, second)))
            ops.mul += 1
            ops.add += 1

    if counter is not None:
        counter.merge(ops)
    return SyndromeSet(tuple(values), ops, "auto", "subfield" if subfield_arith else "field")


def syndromes_batch(words: Sequence[Word], strategy: str, code: RSCode, workers: int = 1,
                    subfield_arith: bool = False) -> BatchResult:
    """
    Syndromes of K words with the precomputation done once.

    The aggregate ledger is precompute + sum of per-word ledgers, so the auto
    strategy reports 3823 + 2912K and horner 31 + 8128K. Results keep input
    order whatever the worker count.

    Raises:
        CodeError: empty batch or unknown strategy
    """
    if not words:
        raise CodeError(get_error_message("empty_batch"), "empty_batch")

    precompute = OpCount()
    if strategy == "horner":
        points = prepare_points(code, precompute)

        def run(word: Word) -> SyndromeSet:
            return syndromes_horner(word, code, points=points)
    elif strategy == "auto":
        tables = build_tables(code)
        precompute.merge(tables.build_ops)
        split = code_split(code.field)

        def run(word: Word) -> SyndromeSet:
            return syndromes_auto(word, code, tables, split, subfield_arith=subfield_arith)
    else:
        raise CodeError(
            get_error_message("unknown_strategy", strategy=strategy, choices="horner, auto"),
            "unknown_strategy"
        )

    if workers > 1 and len(words) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            sets = list(pool.map(run, words))
    else:
        sets = [run(word) for word in words]

    word_ops = OpCount()
    for result in sets:
        word_ops.merge(result.ops)
    return BatchResult(sets, precompute + word_ops, precompute, strategy, word_ops)


def words_from_bytes(data: bytes) -> List[bytes]:
    """Split concatenated 255-byte records."""
    if len(data) % RS_LENGTH:
        raise InputError(
            get_error_message("bad_record_length", size=len(data), record=RS_LENGTH), "bad_record_length"
        )
    return [bytes(data[i:i + RS_LENGTH]) for i in range(0, len(data), RS_LENGTH)]


def _rng(seed: Union[int, np.random.Generator]) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_message(code: RSCode, seed: Union[int, np.random.Generator] = 0) -> List[int]:
    return [int(v) for v in _rng(seed).integers(0, code.field.order, size=code.k_code)]


def random_word(seed: Union[int, np.random.Generator] = 0) -> bytes:
    return bytes(int(v) for v in _rng(seed).integers(0, 256, size=RS_LENGTH))
