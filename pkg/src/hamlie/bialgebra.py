"""Coboundary Lie bialgebra structures on H.

For r in H (x) H the coboundary cobracket is ``Delta_r(x) = x . r``.  The
classical Yang-Baxter functional

    c(r) = [r12, r13] + [r12, r23] + [r13, r23]

is evaluated without any enveloping algebra: for r = sum_i a_i (x) b_i each
commutator has the identity in one slot and collapses to a single bracket,

    c(r) = sum_{i,j} [a_i,a_j] (x) b_i (x) b_j
                   + a_i (x) [b_i,a_j] (x) b_j
                   + a_i (x) a_j (x) [b_i,b_j].
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence

from gmpy2 import mpq

from .algebra import HElement, _accumulate, bracket, bracket_monomials
from .errors import ArityError, ConstraintError, DimensionError
from .exponent import epsilon, sigma, spread
from .tensor import (
    TensorElement,
    cyclic,
    diag_action,
    is_skew,
    tensor_product,
    twist,
)


@dataclass(frozen=True, eq=True)
class RMatrix:
    """An element r of H (x) H used to build the cobracket Delta_r.

    ``RMatrix(value)`` insists on skewness; :meth:`raw` skips the check for
    the identity and witness computations that accept general tensors.
    """

    value: TensorElement
    skew: bool = True

    def __post_init__(self):
        if self.value.m != 2:
            raise ArityError(f"an r-matrix has arity 2, got {self.value.m}")
        if self.skew and not is_skew(self.value):
            raise ConstraintError("r is not skew: r + twist(r) != 0", self.value + twist(self.value))

    @classmethod
    def raw(cls, value: TensorElement) -> "RMatrix":
        return cls(value, skew=is_skew(value)) if value.m == 2 else cls(value)

    @property
    def n(self) -> int:
        return self.value.n


def _tensor_of(r) -> TensorElement:
    return r.value if isinstance(r, RMatrix) else r


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a check; when a defect is attached, ``passed`` means it is zero."""

    passed: bool
    description: str
    defect: Optional[TensorElement] = None
    witness: Optional[HElement] = None

    def __post_init__(self):
        if self.defect is not None and self.passed != self.defect.is_zero():
            raise ValueError("passed must agree with the vanishing of the defect")

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "defect": None if self.defect is None else self.defect.to_dict(),
            "witness": None if self.witness is None else self.witness.to_dict(),
            "description": self.description,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def cobracket(r, x: HElement) -> TensorElement:
    return diag_action(x, _tensor_of(r))


def cybe(r) -> TensorElement:
    """The Yang-Baxter tensor c(r) in H (x) H (x) H."""
    v = _tensor_of(r)
    if v.m != 2:
        raise ArityError(f"c(r) needs an arity-2 tensor, got {v.m}")
    acc: Dict = {}
    items = list(v.terms.items())
    for (a_i, b_i), c_i in items:
        for (a_j, b_j), c_j in items:
            c = c_i * c_j
            for e, k in bracket_monomials(a_i, a_j):
                if any(e):
                    _accumulate(acc, (e, b_i, b_j), c * k)
            for e, k in bracket_monomials(b_i, a_j):
                if any(e):
                    _accumulate(acc, (a_i, e, b_j), c * k)
            for e, k in bracket_monomials(b_i, b_j):
                if any(e):
                    _accumulate(acc, (a_i, a_j, e), c * k)
    return TensorElement._raw(v.n, 3, acc)


def anti_commutativity_defect(r, x: HElement) -> TensorElement:
    d = cobracket(r, x)
    return d + twist(d)


def _one_tensor_delta(r: TensorElement, v: TensorElement) -> TensorElement:
    # (1 (x) Delta_r): apply Delta_r to slot 2, the result fills slots 2 and 3.
    acc: Dict = {}
    cache: Dict = {}
    for (a, b), c in v.terms.items():
        d = cache.get(b)
        if d is None:
            d = cache[b] = diag_action(HElement._raw(v.n, {b: mpq(1)}), r)
        for (u, w), k in d.terms.items():
            _accumulate(acc, (a, u, w), c * k)
    return TensorElement._raw(v.n, 3, acc)


def _cyclic_sum(v: TensorElement) -> TensorElement:
    once = cyclic(v)
    return v + once + cyclic(once)


def co_jacobi_defect(r, x: HElement) -> TensorElement:
    """(1 + xi + xi^2)(1 (x) Delta_r) Delta_r(x)."""
    rv = _tensor_of(r)
    if x.n != rv.n:
        raise DimensionError(f"ambient n differs: {x.n} vs {rv.n}")
    return _cyclic_sum(_one_tensor_delta(rv, cobracket(rv, x)))


def drinfeld_identity_defect(r, x: HElement) -> TensorElement:
    """co_jacobi_defect(r, x) - x . c(r); zero for every skew r."""
    return co_jacobi_defect(r, x) - diag_action(x, cybe(r))


def compatibility_defect(r, x: HElement, y: HElement) -> TensorElement:
    """Delta_r([x,y]) - x . Delta_r(y) + y . Delta_r(x)."""
    return cobracket(r, bracket(x, y)) - diag_action(x, cobracket(r, y)) + diag_action(y, cobracket(r, x))


def triangular_from_pair(a: HElement, b: HElement) -> RMatrix:
    """r = a (x) b - b (x) a for a pair with [a, b] = b; c(r) = 0 then holds."""
    defect = bracket(a, b) - b
    if defect:
        raise ConstraintError(f"[a, b] != b; defect {defect!r}", defect)
    r = RMatrix(tensor_product(a, b) - tensor_product(b, a))
    c = cybe(r)
    if c:
        raise ConstraintError("constructed r does not satisfy c(r) = 0", c)
    return r


def candidate_monomials(n: int, bound: int) -> Iterator[HElement]:
    """Search family in its fixed order.

    First t^{k eps_p}, t^{k eps_pbar} for k = 1..bound and p = 1..n (k outer),
    then t^{k sigma_p} in the same (k, p) order.
    """
    for k in range(1, bound + 1):
        for p in range(1, n + 1):
            for base in (epsilon(n, p), epsilon(n, n + p)):
                yield HElement._raw(n, {tuple(k * c for c in base): mpq(1)})
    for k in range(1, bound + 1):
        for p in range(1, n + 1):
            yield HElement._raw(n, {tuple(k * c for c in sigma(n, p)): mpq(1)})


def default_bound(c) -> int:
    """Largest coordinate magnitude over the support, plus 2."""
    exps = c.support_exponents() if isinstance(c, TensorElement) else c.support()
    return spread(exps) + 2


def first_nonannihilating(c: TensorElement, bound: int) -> Optional[HElement]:
    for x in candidate_monomials(c.n, bound):
        if diag_action(x, c):
            return x
    return None


def ad_invariance_witness(c: TensorElement, bound: Optional[int] = None) -> Optional[HElement]:
    """First monomial x in the candidate family with x . c != 0, or None.

    None only means no witness up to ``bound``; it does not prove invariance.
    """
    if c.m != 3:
        raise ArityError(f"expected an arity-3 tensor, got {c.m}")
    return first_nonannihilating(c, default_bound(c) if bound is None else bound)


def _sweep(name: str, defects: Iterable, render) -> CheckReport:
    count = 0
    for probe, defect in defects:
        count += 1
        if defect:
            witness = probe if isinstance(probe, HElement) else None
            return CheckReport(False, f"{name}: nonzero defect at {render(probe)}", defect, witness)
    return CheckReport(True, f"{name}: zero on {count} samples")


def check_bialgebra(r: RMatrix, xs: Sequence[HElement], pairs: Sequence) -> List[CheckReport]:
    """Run the four coboundary axiom checks over sampled x and (x, y)."""
    reports = [
        _sweep("anti-commutativity", ((x, anti_commutativity_defect(r, x)) for x in xs), repr),
        _sweep("co-jacobi", ((x, co_jacobi_defect(r, x)) for x in xs), repr),
        _sweep("compatibility", ((p, compatibility_defect(r, *p)) for p in pairs), repr),
        _sweep("drinfeld-identity", ((x, drinfeld_identity_defect(r, x)) for x in xs), repr),
    ]
    return reports
