"""
Cost Model Module

Closed-form multiplication counts for automorphic evaluation and the depth
that minimizes them.

With w the cost of one p-th power (1 for p = 2, 2*floor(log2 p) otherwise,
successive squaring) and k the degree of the field the coefficients live in:

    g(L) = w(p^(L+1) - p)/(p - 1) + p^L - 1 + w(k - 1)(p^L + 1) + (n/p^L)(p^k - 1)

k = m is the general case, k = 1 coefficients in GF(p), 1 < k < m coefficients
in a proper subfield. Writing g(L) = A p^L + B / p^L + C gives the continuous
optimum p^L* = sqrt(B / A) and the minimum 2 sqrt(A B) + C.

Everything here is descriptive accounting; autoeval reports measured counts.
"""

import math
from dataclasses import dataclass
from typing import Dict, Any, List, NamedTuple, Optional, Tuple

import galois

from .config import get_error_message
from .utils import CostModelError


def power_weight(p: int) -> int:
    """Multiplications charged for one p-th power."""
    if p == 2:
        return 1
    return 2 * (int(p).bit_length() - 1)


@dataclass(frozen=True)
class CostParams:
    """Degree n, characteristic p, extension degree m, coefficient subfield degree d (defaults to m)."""

    n: float
    p: int
    m: int
    d: Optional[int] = None

    def __post_init__(self):
        if self.d is None:
            object.__setattr__(self, "d", self.m)
        problem = None
        if not isinstance(self.p, int) or self.p < 2 or not galois.is_prime(self.p):
            problem = f"p={self.p} is not prime"
        elif not isinstance(self.m, int) or self.m < 1:
            problem = f"m={self.m} must be >= 1"
        elif not isinstance(self.d, int) or self.d < 1 or self.m % self.d:
            problem = f"d={self.d} does not divide m={self.m}"
        elif self.n < 0:
            problem = f"n={self.n} must be >= 0"
        if problem:
            raise CostModelError(get_error_message("bad_cost_params", error=problem), "bad_cost_params")

    @property
    def w(self) -> int:
        return power_weight(self.p)


class OptimalDepth(NamedTuple):
    L_star: float
    L_int: int


class HornerCost(NamedTuple):
    mul: int
    add: int


def _g(L: float, n: float, p: int, w: int, k: int) -> float:
    pL = p ** L
    return (
        w * (p * pL - p) / (p - 1)
        + pL - 1
        + w * (k - 1) * (pL + 1)
        + n / pL * (p ** k - 1)
    )


def _coefficients(n: float, p: int, w: int, k: int) -> Tuple[float, float, float]:
    """(A, B, C) with g(L) = A p^L + B / p^L + C."""
    A = 1 + w * (k - 1 + p / (p - 1))
    B = n * (p ** k - 1)
    C = w * (k - 1) - 1 - w * p / (p - 1)
    return A, B, C


def _require_degree(n: float) -> None:
    if n < 1:
        raise CostModelError(get_error_message("bad_cost_degree", n=n), "bad_cost_degree")


def g_general(L: float, params: CostParams) -> float:
    """Cost with coefficients anywhere in GF(p^m)."""
    return _g(L, params.n, params.p, params.w, params.m)


def g_prime_coeffs(L: float, params: CostParams) -> float:
    """Cost with coefficients in GF(p); params.d is ignored."""
    return _g(L, params.n, params.p, params.w, 1)


def g_subfield(L: float, params: CostParams) -> float:
    """Cost with coefficients in GF(p^d); d = 1 and d = m give the other two variants."""
    return _g(L, params.n, params.p, params.w, params.d)


def applicable_cost(L: float, params: CostParams) -> float:
    if params.d == 1:
        return g_prime_coeffs(L, params)
    if params.d == params.m:
        return g_general(L, params)
    return g_subfield(L, params)


def optimal_L(params: CostParams) -> OptimalDepth:
    """
    Continuous optimum L* (clamped at 0) and the better of its floor and
    ceiling under the discrete cost; ties go to the smaller depth.

    Raises:
        CostModelError: n < 1
    """
    _require_degree(params.n)
    A, B, _ = _coefficients(params.n, params.p, params.w, params.d)
    ratio = math.sqrt(B) / math.sqrt(A)
    L_star = math.log(ratio, params.p) if ratio > 1 else 0.0
    candidates = sorted({max(0, math.floor(L_star)), math.ceil(L_star)})
    L_int = min(candidates, key=lambda L: (applicable_cost(L, params), L))
    return OptimalDepth(L_star, L_int)


def _closed_form_min(params: CostParams, k: int) -> float:
    _require_degree(params.n)
    A, B, C = _coefficients(params.n, params.p, params.w, k)
    return 2 * math.sqrt(B) * math.sqrt(A) + C


def min_cost_general(params: CostParams) -> float:
    """Minimum of g_general over real L >= 0 assuming the optimum is interior."""
    return _closed_form_min(params, params.m)


def min_cost_subfield(params: CostParams) -> float:
    """Same minimum for coefficients in GF(p^d); d = 1 gives 2 sqrt(3n) - 3 at p = 2."""
    return _closed_form_min(params, params.d)


def split_cost(n: float, p: int, m: int) -> float:
    """
    Two half-field evaluations: m even, each half has coefficients in
    GF(p^(m/2)) and costs the subfield minimum.

    Raises:
        CostModelError: odd m or n < 1
    """
    if m % 2:
        raise CostModelError(get_error_message("bad_cost_params", error=f"m={m} must be even"), "bad_cost_params")
    return 2 * min_cost_subfield(CostParams(n, p, m, m // 2))


def split_cost_approx(n: float) -> float:
    """2 sqrt(2) n^(3/4) sqrt(log2 n): the split cost at p = 2 when 2^m is about n."""
    _require_degree(n)
    return 2 * math.sqrt(2) * n ** 0.75 * math.sqrt(math.log2(n))


def horner_cost(n: int) -> HornerCost:
    if n < 0:
        raise CostModelError(get_error_message("bad_poly_degree", degree=n), "bad_poly_degree")
    return HornerCost(n, n)


def default_sweep_limit(params: CostParams) -> int:
    """ceil(log_p n) + 2, the range over which the integer optimum is checked."""
    n = max(params.n, 1)
    limit, power = 0, 1
    while power < n:
        power *= params.p
        limit += 1
    return limit + 2


def sweep(params: CostParams, L_max: Optional[int] = None) -> List[Tuple[int, float]]:
    """[(L, applicable_cost(L))] for L = 0..L_max."""
    if L_max is None:
        L_max = default_sweep_limit(params)
    return [(L, applicable_cost(L, params)) for L in range(L_max + 1)]


def cost_row(params: CostParams) -> Dict[str, Any]:
    """One row of the `cost` report."""
    depth = optimal_L(params)
    horner_mul = horner_cost(int(params.n)).mul
    g_int = applicable_cost(depth.L_int, params)
    closed = min_cost_general(params) if params.d == params.m else min_cost_subfield(params)
    split = split_cost(params.n, params.p, params.m) if params.m % 2 == 0 else None
    return {
        "p": params.p,
        "m": params.m,
        "d": params.d,
        "n": params.n,
        "L_star": depth.L_star,
        "L_int": depth.L_int,
        "g_L_int": g_int,
        "min_closed_form": closed,
        "horner_mul": horner_mul,
        "crossover": g_int < horner_mul,
        "split_cost": split,
        "split_cost_approx": split_cost_approx(params.n),
    }
