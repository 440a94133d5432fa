"""
Automorphic Evaluation Module

Evaluates P(alpha) over GF(p^m) by splitting P into p^L stride parts,
evaluating the short leaves, and putting the value back together with p-th
powers:

    P(x) = sum_i x^i P_i(x^p),   P_i(alpha^p) = (P_i^{sigma^-1}(alpha))^p

After L rounds the leaves would need their coefficients pushed through
sigma^-L. Instead each leaf is evaluated at sigma^L(alpha) and sigma^-L is
applied to the p^L leaf values (transform-outputs mode). When the coefficients
live in GF(p^d) and d | L, sigma^L fixes them and the leaves are evaluated at
alpha directly (fixed-coeffs mode).

Recombination cost does not depend on the data: (p^(L+1) - p)/(p - 1) p-th
powers, p^L - 1 multiplications by powers of alpha, p^L - 1 additions.
"""

from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .config import get_error_message
from .costmodel import CostParams, optimal_L
from .gf import (
    FieldElement, FieldSpec, SubfieldSplit, add, mul, frobenius,
    is_in_subfield, split_element
)
from .poly import DEGREE_ZERO, OpCount, Polynomial, horner_eval, stride_split
from .utils import FieldError, PlanError


class LeafMode(str, Enum):
    TRANSFORM_OUTPUTS = "transform-outputs"
    FIXED_COEFFS = "fixed-coeffs"


@dataclass(frozen=True)
class EvalPlan:
    """Decomposition depth L, leaf mode and the declared coefficient subfield."""

    L: int = 0
    leaf_mode: LeafMode = LeafMode.TRANSFORM_OUTPUTS
    coeff_subfield_d: Optional[int] = None

    def validate(self, field: FieldSpec) -> None:
        if not isinstance(self.L, int) or self.L < 0:
            raise PlanError(get_error_message("bad_depth", L=self.L), "bad_depth")
        try:
            mode = LeafMode(self.leaf_mode)
        except ValueError:
            raise PlanError(get_error_message("bad_leaf_mode", mode=self.leaf_mode), "bad_leaf_mode")
        d = self.coeff_subfield_d
        if d is not None and (not isinstance(d, int) or d < 1 or field.m % d):
            raise PlanError(get_error_message("not_divisor", d=d, m=field.m), "not_divisor")
        if mode is LeafMode.FIXED_COEFFS:
            if d is None:
                raise PlanError(get_error_message("fixed_needs_subfield"), "fixed_needs_subfield")
            if self.L % d:
                raise PlanError(get_error_message("fixed_needs_divisor", d=d, L=self.L), "fixed_needs_divisor")

    def as_dict(self) -> Dict[str, Any]:
        return {
            "L": self.L,
            "leaf_mode": LeafMode(self.leaf_mode).value,
            "coeff_subfield_d": self.coeff_subfield_d,
        }


@dataclass
class EvalReport:
    """Value of one evaluation plus its ledger, split by phase."""

    value: FieldElement
    ops: OpCount
    plan: EvalPlan
    leaf_count: int
    max_leaf_degree: Union[int, float]
    leaf_ops: OpCount = dc_field(default_factory=OpCount)
    recombine_ops: OpCount = dc_field(default_factory=OpCount)
    setup_ops: OpCount = dc_field(default_factory=OpCount)
    parts: Tuple["EvalReport", ...] = ()

    def as_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value.value,
            "plan": self.plan.as_dict(),
            "leaf_count": self.leaf_count,
            "max_leaf_degree": None if self.max_leaf_degree == DEGREE_ZERO else self.max_leaf_degree,
            "op_counts": self.ops.as_dict(),
            "leaf_ops": self.leaf_ops.as_dict(),
            "recombine_ops": self.recombine_ops.as_dict(),
            "setup_ops": self.setup_ops.as_dict(),
        }


def decompose(P: Polynomial, p: int, L: int) -> List[Polynomial]:
    """
    L rounds of stride-p splitting. Leaf j holds the coefficients
    a_{i*p^L + j}; shorter leaves are left short.
    """
    nodes = [P]
    for _ in range(L):
        size = len(nodes)
        nxt: List[Optional[Polynomial]] = [None] * (size * p)
        for t, node in enumerate(nodes):
            for i, part in enumerate(stride_split(node, p)):
                nxt[t + i * size] = part
        nodes = nxt
    return nodes


def alpha_powers(alpha: FieldElement, p: int, counter: Optional[OpCount] = None) -> List[FieldElement]:
    """[1, alpha, ..., alpha^(p-1)]; p - 2 multiplications when p > 2."""
    powers = [alpha.field.one, alpha]
    for _ in range(2, p):
        powers.append(mul(powers[-1], alpha))
    if counter is not None and p > 2:
        counter.mul += p - 2
    return powers[:p]


def recombine(leaf_values: Sequence[FieldElement], powers: Sequence[FieldElement], p: int,
              counter: Optional[OpCount] = None) -> FieldElement:
    """
    Bottom-up recombination: each node is sum_i alpha^i * child_i^p, where
    child_i is node t + i * (nodes at this level / p).

    Per node: p p-th powers, p - 1 multiplications, p - 1 additions.
    """
    values = list(leaf_values)
    ops = OpCount()
    while len(values) > 1:
        size = len(values) // p
        nxt = []
        for t in range(size):
            node = frobenius(values[t], 1)
            for i in range(1, p):
                node = add(node, mul(powers[i], frobenius(values[t + i * size], 1)))
            nxt.append(node)
        ops.pth_pow += p * size
        ops.mul += (p - 1) * size
        ops.add += (p - 1) * size
        values = nxt
    if counter is not None:
        counter.merge(ops)
    return values[0]


def _check_point(P: Polynomial, alpha: FieldElement) -> None:
    if alpha.field is not P.field and alpha.field != P.field:
        raise FieldError(get_error_message("mixed_fields", left=alpha.field, right=P.field), "mixed_fields")


def auto_eval(P: Polynomial, alpha: FieldElement, plan: Optional[EvalPlan] = None,
              counter: Optional[OpCount] = None) -> EvalReport:
    """
    P(alpha) by automorphic evaluation; always equal to horner_eval(P, alpha).

    Args:
        P: polynomial to evaluate
        alpha: evaluation point in P's field
        plan: depth, leaf mode and declared coefficient subfield (default L = 0)
        counter: optional accumulator, receives the report's total ops

    Returns:
        EvalReport with the value and the leaf/setup/recombination ledgers

    Raises:
        PlanError: invalid plan, or a coefficient outside the declared subfield
    """
    plan = plan or EvalPlan()
    field = P.field
    _check_point(P, alpha)
    plan.validate(field)

    d = plan.coeff_subfield_d
    if d is not None and d != field.m:
        for index, c in enumerate(P.coeffs):
            if not is_in_subfield(c, d):
                raise PlanError(
                    get_error_message("coeff_not_in_subfield", index=index, value=c.value, p=field.p, d=d),
                    "coeff_not_in_subfield"
                )

    p, L = field.p, plan.L
    leaves = decompose(P, p, L)
    moves = L % field.m != 0

    leaf_ops = OpCount()
    if LeafMode(plan.leaf_mode) is LeafMode.TRANSFORM_OUTPUTS:
        point = frobenius(alpha, L)
        if moves:
            leaf_ops.frob += 1
        values = []
        for leaf in leaves:
            values.append(frobenius(horner_eval(leaf, point, leaf_ops), -L))
            if moves:
                leaf_ops.frob += 1
    else:
        values = [horner_eval(leaf, alpha, leaf_ops) for leaf in leaves]

    setup_ops = OpCount()
    recombine_ops = OpCount()
    if L > 0:
        powers = alpha_powers(alpha, p, setup_ops)
        value = recombine(values, powers, p, recombine_ops)
    else:
        value = values[0]

    ops = leaf_ops + setup_ops + recombine_ops
    if counter is not None:
        counter.merge(ops)

    return EvalReport(
        value=value,
        ops=ops,
        plan=plan,
        leaf_count=p ** L,
        max_leaf_degree=max(leaf.degree() for leaf in leaves),
        leaf_ops=leaf_ops,
        recombine_ops=recombine_ops,
        setup_ops=setup_ops,
    )


def choose_L(n: int, field: FieldSpec, coeff_subfield_d: Optional[int] = None) -> int:
    """
    Depth from the cost model: the better of floor/ceil of the continuous
    optimum for the applicable variant (ties to the smaller L), capped at
    m - 1, the range the cost accounting assumes.

    Raises:
        PlanError: n < 1
    """
    if n < 1:
        raise PlanError(get_error_message("bad_cost_degree", n=n), "bad_cost_degree")
    d = coeff_subfield_d or field.m
    depth = optimal_L(CostParams(n=n, p=field.p, m=field.m, d=d)).L_int
    return min(depth, field.m - 1)


def split_eval(P: Polynomial, alpha: FieldElement, s: SubfieldSplit, L: int,
               counter: Optional[OpCount] = None) -> EvalReport:
    """
    P = P_1 + gamma * P_2 with coefficients in GF(p^(m/2)); both halves go
    through auto_eval (fixed-coeffs when (m/2) | L) and are joined with one
    multiplication and one addition.

    Raises:
        FieldError: odd m, or P not over the split's field
    """
    field = P.field
    if field.m % 2:
        raise FieldError(get_error_message("odd_degree", m=field.m), "odd_degree")
    if s.field is not field and s.field != field:
        raise FieldError(get_error_message("mixed_fields", left=s.field, right=field), "mixed_fields")
    _check_point(P, alpha)

    pairs = [split_element(c, s) for c in P.coeffs]
    P1 = Polynomial(field, tuple(a1 for a1, _ in pairs))
    P2 = Polynomial(field, tuple(a2 for _, a2 in pairs))

    mode = LeafMode.FIXED_COEFFS if L % s.d == 0 else LeafMode.TRANSFORM_OUTPUTS
    plan = EvalPlan(L=L, leaf_mode=mode, coeff_subfield_d=s.d)
    first = auto_eval(P1, alpha, plan)
    second = auto_eval(P2, alpha, plan)

    join_ops = OpCount(mul=1, add=1)
    value = add(first.value, mul(s.gamma, second.value))

    ops = first.ops + second.ops + join_ops
    if counter is not None:
        counter.merge(ops)

    return EvalReport(
        value=value,
        ops=ops,
        plan=plan,
        leaf_count=field.p ** L,
        max_leaf_degree=max(first.max_leaf_degree, second.max_leaf_degree),
        leaf_ops=first.leaf_ops + second.leaf_ops,
        recombine_ops=first.recombine_ops + second.recombine_ops + join_ops,
        setup_ops=first.setup_ops + second.setup_ops,
        parts=(first, second),
    )
