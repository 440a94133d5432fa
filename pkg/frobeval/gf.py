"""
Finite Field Module

Arithmetic in GF(p^m) in polynomial basis over GF(p), the Frobenius
automorphism sigma: a -> a^p and its powers, subfield membership, relative
traces and the quadratic split GF(p^m) = GF(p^d) + gamma * GF(p^d) for m = 2d.

Elements are stored as integers in [0, p^m): the base-p digits are the
polynomial-basis coefficients, index 0 least significant. That integer is also
the serialization format used by the CLI and the canonical ordering used by
every deterministic search in this module.

Fields small enough (see TABLE_MAX_ORDER) get exp/log tables at construction.
They only speed things up: the table path and the direct product give the
same answers, and the tables are built before the FieldSpec is handed out, so
a FieldSpec never changes after construction.
"""

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product
from math import gcd
from typing import Iterator, Optional, Sequence, Tuple, Union

import galois
import numpy as np

from .config import (
    BUILTIN_MODULI, TABLE_MAX_ORDER, EXHAUSTIVE_IRREDUCIBILITY_LIMIT,
    SPLIT_SEARCH_MAX_ORDER, get_error_message
)
from .utils import FieldError


# ---------------------------------------------------------------------------
# GF(p)[x] through galois.Poly (coefficient tuples, index i = coefficient of x^i)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _gfp_poly(p: int, coeffs: Tuple[int, ...]) -> galois.Poly:
    return galois.Poly(list(reversed(coeffs)), field=galois.GF(p))


def is_irreducible(p: int, modulus: Sequence[int]) -> bool:
    """
    Irreducibility of a monic polynomial over GF(p).

    Exhaustive trial division by every monic polynomial of degree <= m/2 for
    p^m up to EXHAUSTIVE_IRREDUCIBILITY_LIMIT, Rabin's criterion beyond.

    Args:
        p: prime characteristic
        modulus: coefficients, index i = coefficient of x^i, monic

    Returns:
        True if modulus is irreducible over GF(p)
    """
    modulus = tuple(int(c) for c in modulus)
    m = len(modulus) - 1
    if m <= 1:
        return m == 1

    f = _gfp_poly(p, modulus)
    GFp = galois.GF(p)
    zero = galois.Poly.Zero(GFp)

    if p ** m <= EXHAUSTIVE_IRREDUCIBILITY_LIMIT:
        for k in range(1, m // 2 + 1):
            for lower in product(range(p), repeat=k):
                divisor = galois.Poly([1, *reversed(lower)], field=GFp)
                if f % divisor == zero:
                    return False
        return True

    x = galois.Poly.Identity(GFp)
    if (pow(x, p ** m, f) - x) % f != zero:
        return False
    primes, _ = galois.factors(m)
    for r in primes:
        h = pow(x, p ** (m // r), f)
        if galois.gcd(f, h - x).degree != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Digits
# ---------------------------------------------------------------------------

def _to_digits(value: int, p: int, m: int) -> Tuple[int, ...]:
    digits = []
    for _ in range(m):
        value, digit = divmod(value, p)
        digits.append(digit)
    return tuple(digits)


def _from_digits(digits: Sequence[int], p: int) -> int:
    value = 0
    for digit in reversed(list(digits)):
        value = value * p + int(digit)
    return value


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """
    GF(p^m) defined by p, m and a monic irreducible modulus over GF(p).

    Identity is (p, m, modulus); the optional exp/log tables are an
    implementation detail and take no part in equality.
    """

    p: int
    m: int
    modulus: Tuple[int, ...]
    _exp: Optional[Tuple[int, ...]] = dc_field(default=None, compare=False, repr=False)
    _log: Optional[Tuple[int, ...]] = dc_field(default=None, compare=False, repr=False)
    _primitive: Optional[int] = dc_field(default=None, compare=False, repr=False)

    @property
    def order(self) -> int:
        return self.p ** self.m

    @property
    def has_tables(self) -> bool:
        return self._exp is not None

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def element(self, value: int) -> "FieldElement":
        """Element from its integer serialization in [0, p^m)."""
        value = int(value)
        if not 0 <= value < self.order:
            raise FieldError(
                get_error_message("bad_element", value=value, p=self.p, m=self.m),
                "bad_element"
            )
        return FieldElement(self, value)

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElement":
        """Element from m polynomial-basis coefficients, index 0 first."""
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) != self.m or any(not 0 <= c < self.p for c in coeffs):
            raise FieldError(
                get_error_message("bad_element", value=coeffs, p=self.p, m=self.m),
                "bad_element"
            )
        return FieldElement(self, _from_digits(coeffs, self.p))

    def elements(self) -> Iterator["FieldElement"]:
        """All elements in canonical order."""
        for value in range(self.order):
            yield FieldElement(self, value)

    def __str__(self) -> str:
        return f"GF({self.p}^{self.m})"


@dataclass(frozen=True, slots=True)
class FieldElement:
    """An element of a FieldSpec; value is the base-p packed coefficient vector."""

    field: FieldSpec
    value: int

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return _to_digits(self.value, self.field.p, self.field.m)

    def is_zero(self) -> bool:
        return self.value == 0

    def __int__(self) -> int:
        return self.value

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return add(self, other)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return sub(self, other)

    def __neg__(self) -> "FieldElement":
        return neg(self)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return mul(self, other)

    def __pow__(self, e: int) -> "FieldElement":
        return power(self, e)

    def __repr__(self) -> str:
        return f"FieldElement({self.value}, {self.field})"


@dataclass(frozen=True, eq=False)
class SubfieldSplit:
    """
    GF(p^m) as GF(p^d) + gamma * GF(p^d), m = 2d.

    gamma is a root of z^2 + c1*z + c0 with c0, c1 in GF(p^d); for p = 2,
    c1 = 1 and c0 = beta. to_coords maps polynomial-basis coefficients to
    coordinates in the basis (b_0..b_{d-1}, gamma*b_0..gamma*b_{d-1}).
    """

    field: FieldSpec
    d: int
    gamma: FieldElement
    c0: FieldElement
    c1: FieldElement
    sub_basis: Tuple[FieldElement, ...]
    to_coords: np.ndarray = dc_field(repr=False)
    from_sub: np.ndarray = dc_field(repr=False)

    @property
    def beta(self) -> FieldElement:
        return self.c0


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def _parse_modulus_digits(text: str, p: int) -> Tuple[int, ...]:
    """Digits from degree m down to 0 -> coefficient tuple, index 0 first."""
    text = text.strip()
    parts = text.split(",") if "," in text else list(text)
    try:
        digits = [int(part) for part in parts]
    except ValueError:
        raise FieldError(
            get_error_message("bad_modulus", m="?", p=p, modulus=text), "bad_modulus"
        )
    return tuple(reversed(digits))


def _format_modulus_digits(modulus: Sequence[int], p: int) -> str:
    digits = [str(c) for c in reversed(modulus)]
    return ",".join(digits) if p > 10 else "".join(digits)


def _slow_mul(field: FieldSpec, x: int, y: int) -> int:
    """Product reduced by the modulus; shift-and-xor for p = 2, galois.Poly otherwise."""
    p, m = field.p, field.m
    if p == 2:
        prod = 0
        while y:
            if y & 1:
                prod ^= x
            x <<= 1
            y >>= 1
        mod_int = _from_digits(field.modulus, 2)
        for bit in range(prod.bit_length() - 1, m - 1, -1):
            if (prod >> bit) & 1:
                prod ^= mod_int << (bit - m)
        return prod
    GFp = galois.GF(p)
    prod = galois.Poly.Int(x, field=GFp) * galois.Poly.Int(y, field=GFp)
    return int(prod % _gfp_poly(p, field.modulus))


def _slow_pow(field: FieldSpec, x: int, e: int) -> int:
    result = 1
    while e:
        if e & 1:
            result = _slow_mul(field, result, x)
        x = _slow_mul(field, x, x)
        e >>= 1
    return result


def _search_primitive(field: FieldSpec) -> int:
    """Smallest element (canonical order) of multiplicative order p^m - 1."""
    q = field.order
    if q == 2:
        return 1
    primes, _ = galois.factors(q - 1)
    for value in range(1, q):
        if all(_slow_pow(field, value, (q - 1) // r) != 1 for r in primes):
            return value
    raise FieldError(get_error_message("reducible_modulus", modulus=field.modulus, p=field.p))


@lru_cache(maxsize=None)
def _build_field(p: int, m: int, modulus: Tuple[int, ...]) -> FieldSpec:
    bare = FieldSpec(p, m, modulus)
    q = bare.order
    if q > TABLE_MAX_ORDER:
        return bare

    generator = _search_primitive(bare)
    exp = [0] * (2 * (q - 1))
    log = [0] * q
    x = 1
    for i in range(q - 1):
        exp[i] = x
        log[x] = i
        x = _slow_mul(bare, x, generator)
    for i in range(q - 1, 2 * (q - 1)):
        exp[i] = exp[i - (q - 1)]
    return FieldSpec(p, m, modulus, tuple(exp), tuple(log), generator)


def field_new(p: int, m: int, modulus: Union[None, str, Sequence[int]] = None) -> FieldSpec:
    """
    Build and validate GF(p^m).

    Args:
        p: prime characteristic
        m: extension degree >= 1
        modulus: None for the built-in table, a digit string in the text
            format (degree m first, e.g. "100101011"), or a coefficient
            sequence with index i = coefficient of x^i

    Returns:
        A validated FieldSpec (the same object for the same arguments)

    Raises:
        FieldError: non-prime p, bad m, mis-shaped or reducible modulus,
            no built-in modulus for (p, m)
    """
    if not isinstance(p, int) or p < 2 or not galois.is_prime(p):
        raise FieldError(get_error_message("not_prime", p=p), "not_prime")
    if not isinstance(m, int) or m < 1:
        raise FieldError(get_error_message("bad_degree", m=m), "bad_degree")

    if modulus is None:
        if (p, m) not in BUILTIN_MODULI:
            raise FieldError(get_error_message("no_builtin_modulus", p=p, m=m), "no_builtin_modulus")
        coeffs = _parse_modulus_digits(BUILTIN_MODULI[(p, m)], p)
    elif isinstance(modulus, str):
        coeffs = _parse_modulus_digits(modulus, p)
    else:
        coeffs = tuple(int(c) for c in modulus)

    if len(coeffs) != m + 1 or coeffs[-1] != 1 or any(not 0 <= c < p for c in coeffs):
        raise FieldError(
            get_error_message("bad_modulus", m=m, p=p, modulus=_format_modulus_digits(coeffs, p)),
            "bad_modulus"
        )
    if not is_irreducible(p, coeffs):
        raise FieldError(
            get_error_message("reducible_modulus", modulus=_format_modulus_digits(coeffs, p), p=p),
            "reducible_modulus"
        )
    return _build_field(p, m, coeffs)


def parse_field_description(text: str) -> Tuple[int, int, Optional[Tuple[int, ...]]]:
    """
    Parse `p=2 m=8 modulus=100101011` (modulus optional).

    Returns:
        (p, m, modulus coefficients index 0 first, or None)
    """
    values = {}
    for token in text.split():
        key, sep, value = token.partition("=")
        if not sep or key not in ("p", "m", "modulus"):
            raise FieldError(
                get_error_message("bad_field_description", text=text, error=f"unexpected token '{token}'"),
                "bad_field_description"
            )
        values[key] = value
    if "p" not in values or "m" not in values:
        raise FieldError(
            get_error_message("bad_field_description", text=text, error="p and m are required"),
            "bad_field_description"
        )
    try:
        p, m = int(values["p"]), int(values["m"])
    except ValueError as e:
        raise FieldError(
            get_error_message("bad_field_description", text=text, error=str(e)),
            "bad_field_description"
        )
    modulus = _parse_modulus_digits(values["modulus"], p) if "modulus" in values else None
    return p, m, modulus


def field_from_description(text: str) -> FieldSpec:
    p, m, modulus = parse_field_description(text)
    return field_new(p, m, modulus)


def format_field_description(field: FieldSpec) -> str:
    return f"p={field.p} m={field.m} modulus={_format_modulus_digits(field.modulus, field.p)}"


# ---------------------------------------------------------------------------
# Arithmetic
# ---------------------------------------------------------------------------

def _check_same(a: FieldElement, b: FieldElement) -> None:
    if a.field is not b.field and a.field != b.field:
        raise FieldError(
            get_error_message("mixed_fields", left=a.field, right=b.field), "mixed_fields"
        )


def _add_values(field: FieldSpec, x: int, y: int) -> int:
    p = field.p
    if p == 2:
        return x ^ y
    result, place = 0, 1
    while x or y:
        x, dx = divmod(x, p)
        y, dy = divmod(y, p)
        result += ((dx + dy) % p) * place
        place *= p
    return result


def _neg_value(field: FieldSpec, x: int) -> int:
    p = field.p
    if p == 2:
        return x
    result, place = 0, 1
    while x:
        x, dx = divmod(x, p)
        result += ((p - dx) % p) * place
        place *= p
    return result


def _mul_values(field: FieldSpec, x: int, y: int) -> int:
    if x == 0 or y == 0:
        return 0
    exp = field._exp
    if exp is not None:
        log = field._log
        return exp[log[x] + log[y]]
    return _slow_mul(field, x, y)


def _pow_value(field: FieldSpec, x: int, e: int) -> int:
    if e == 0:
        return 1
    if x == 0:
        return 0
    if field._exp is not None:
        return field._exp[(field._log[x] * e) % (field.order - 1)]
    return _slow_pow(field, x, e)


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return FieldElement(a.field, _add_values(a.field, a.value, b.value))


def neg(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, _neg_value(a.field, a.value))


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return FieldElement(a.field, _add_values(a.field, a.value, _neg_value(a.field, b.value)))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return FieldElement(a.field, _mul_values(a.field, a.value, b.value))


def power(a: FieldElement, e: int) -> FieldElement:
    """
    a^e by square-and-multiply (or the log table when present).

    power(0, 0) is 1 so Horner on constant polynomials needs no special case.
    """
    if e < 0:
        raise FieldError(get_error_message("negative_exponent", e=e), "negative_exponent")
    return FieldElement(a.field, _pow_value(a.field, a.value, e))


def frobenius(a: FieldElement, k: int) -> FieldElement:
    """sigma^k(a) = a^(p^(k mod m)); negative k gives the inverse powers."""
    field = a.field
    k %= field.m
    if k == 0:
        return a
    return FieldElement(field, _pow_value(field, a.value, field.p ** k))


def multiplicative_order(a: FieldElement) -> int:
    if a.is_zero():
        raise FieldError(get_error_message("bad_element", value=0, p=a.field.p, m=a.field.m), "bad_element")
    q = a.field.order
    if q == 2:
        return 1
    order = q - 1
    primes, _ = galois.factors(q - 1)
    for r in primes:
        while order % r == 0 and _pow_value(a.field, a.value, order // r) == 1:
            order //= r
    return order


def find_primitive(field: FieldSpec) -> FieldElement:
    """Smallest element in canonical order whose multiplicative order is p^m - 1."""
    if field._primitive is not None:
        return FieldElement(field, field._primitive)
    return FieldElement(field, _cached_primitive(field))


@lru_cache(maxsize=None)
def _cached_primitive(field: FieldSpec) -> int:
    return _search_primitive(field)


# ---------------------------------------------------------------------------
# Subfields
# ---------------------------------------------------------------------------

def _check_divisor(field: FieldSpec, d: int) -> None:
    if not isinstance(d, int) or d < 1 or field.m % d:
        raise FieldError(get_error_message("not_divisor", d=d, m=field.m), "not_divisor")


def is_in_subfield(a: FieldElement, d: int) -> bool:
    """True iff a lies in GF(p^d), i.e. sigma^d fixes it."""
    _check_divisor(a.field, d)
    return frobenius(a, d) == a


def trace_to_subfield(a: FieldElement, d: int) -> FieldElement:
    """Relative trace GF(p^m) -> GF(p^d): sum of sigma^(d*i)(a), i < m/d."""
    _check_divisor(a.field, d)
    total = a
    for i in range(1, a.field.m // d):
        total = add(total, frobenius(a, d * i))
    return total


def subfield_elements(field: FieldSpec, d: int) -> Tuple[FieldElement, ...]:
    """The p^d elements of GF(p^d) inside field, in canonical order."""
    _check_divisor(field, d)
    return _cached_subfield(field, d)


@lru_cache(maxsize=None)
def _cached_subfield(field: FieldSpec, d: int) -> Tuple[FieldElement, ...]:
    if d == field.m:
        return tuple(field.elements())
    q = field.order
    zeta = power(find_primitive(field), (q - 1) // (field.p ** d - 1))
    values = {0}
    x = field.one
    for _ in range(field.p ** d - 1):
        values.add(x.value)
        x = mul(x, zeta)
    return tuple(FieldElement(field, v) for v in sorted(values))


def _absolute_trace(a: FieldElement, d: int) -> FieldElement:
    """Trace of an element of GF(p^d) down to GF(p)."""
    total = a
    for i in range(1, d):
        total = add(total, frobenius(a, i))
    return total


def make_split(field: FieldSpec) -> SubfieldSplit:
    """
    Choose gamma so that {1, gamma} is a basis of GF(p^m) over GF(p^d), m = 2d.

    For p = 2 the primitive elements beta of GF(2^d) are tried in order
    alpha^(e*k), e = (2^m-1)/(2^d-1), k coprime to 2^d - 1 ascending; the first
    beta with absolute trace 1 whose polynomial z^2 + z + beta has no root in
    GF(2^d) wins, and gamma is its smallest root in GF(2^m). For odd p, gamma
    is the smallest element outside GF(p^d).

    Raises:
        FieldError: m odd, or field larger than SPLIT_SEARCH_MAX_ORDER
    """
    p, m = field.p, field.m
    if m % 2:
        raise FieldError(get_error_message("odd_degree", m=m), "odd_degree")
    q = field.order
    if q > SPLIT_SEARCH_MAX_ORDER:
        raise FieldError(
            get_error_message("split_too_large", limit=SPLIT_SEARCH_MAX_ORDER, order=q),
            "split_too_large"
        )

    d = m // 2
    sub_q = p ** d
    zeta = power(find_primitive(field), (q - 1) // (sub_q - 1))
    sub_elems = subfield_elements(field, d)
    sub_values = {e.value for e in sub_elems}

    gamma = c0 = c1 = None
    if p == 2:
        for k in range(1, max(sub_q - 1, 2)):
            if gcd(k, sub_q - 1) != 1:
                continue
            beta = power(zeta, k)
            if _absolute_trace(beta, d) != field.one:
                continue
            if any(add(mul(z, z), z) == beta for z in sub_elems):
                continue
            for candidate in field.elements():
                if add(mul(candidate, candidate), candidate) == beta:
                    gamma = candidate
                    break
            if gamma is not None:
                c0, c1 = beta, field.one
                break
    else:
        for candidate in field.elements():
            if candidate.value not in sub_values:
                gamma = candidate
                break
        if gamma is not None:
            conjugate = frobenius(gamma, d)
            c1 = neg(add(gamma, conjugate))
            c0 = mul(gamma, conjugate)

    if gamma is None:
        raise FieldError(get_error_message("split_not_found", p=p, m=m), "split_not_found")

    sub_basis = tuple(power(zeta, i) for i in range(d))
    columns = list(sub_basis) + [mul(gamma, b) for b in sub_basis]
    basis = np.array([[col.coeffs[r] for col in columns] for r in range(m)], dtype=np.int64)
    GFp = galois.GF(p)
    to_coords = np.array(np.linalg.inv(GFp(basis)), dtype=np.int64)

    return SubfieldSplit(
        field=field, d=d, gamma=gamma, c0=c0, c1=c1, sub_basis=sub_basis,
        to_coords=to_coords, from_sub=basis[:, :d].copy()
    )


def split_element(a: FieldElement, s: SubfieldSplit) -> Tuple[FieldElement, FieldElement]:
    """
    Unique (a1, a2) in GF(p^d)^2 with a = a1 + gamma * a2.

    One matrix-vector product over GF(p) for the coordinates, two more to
    rebuild a1 and a2 in polynomial basis; no field multiplications.
    """
    if a.field is not s.field and a.field != s.field:
        raise FieldError(get_error_message("mixed_fields", left=a.field, right=s.field), "mixed_fields")
    p, d = s.field.p, s.d
    coords = (s.to_coords @ np.array(a.coeffs, dtype=np.int64)) % p
    a1 = (s.from_sub @ coords[:d]) % p
    a2 = (s.from_sub @ coords[d:]) % p
    return s.field.from_coeffs(a1), s.field.from_coeffs(a2)


def recompose(a1: FieldElement, a2: FieldElement, s: SubfieldSplit) -> FieldElement:
    return add(a1, mul(s.gamma, a2))
