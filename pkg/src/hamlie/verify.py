"""Bounded verification harnesses for derivations and annihilator lemmas.

The statements being probed quantify over all k in Z or all a in H.  Every
harness here bounds the quantifier by ``K``; a pass is a bounded check, not a
proof.  The default ``K = spread + 2`` (spread being the largest coordinate
magnitude in the support) pushes the acting exponent past the support.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from gmpy2 import mpq

from .algebra import HElement, bracket
from .bialgebra import CheckReport, candidate_monomials, default_bound, first_nonannihilating
from .errors import ArityError, SlotIndexError
from .exponent import epsilon
from .tensor import TensorElement, diag_action, is_skew, twist


@dataclass(frozen=True)
class InnerDerivation:
    """The inner derivation x -> x . a for a fixed a in H (x) H."""

    a: TensorElement

    def __call__(self, x: HElement) -> TensorElement:
        return inner_apply(self, x)


def inner_apply(d: InnerDerivation, x: HElement) -> TensorElement:
    return diag_action(x, d.a)


def derivation_defect(d, x: HElement, y: HElement) -> TensorElement:
    """d([x,y]) - x . d(y) + y . d(x) for any callable d: H -> H (x) H."""
    return d(bracket(x, y)) - diag_action(x, d(y)) + diag_action(y, d(x))


def _check_p(n: int, p: int) -> None:
    if not isinstance(p, int) or not 1 <= p <= n:
        raise SlotIndexError(f"index {p!r} outside 1..{n}")


def _clean(alpha, p: int, n: int) -> bool:
    return alpha[p - 1] == 0 and alpha[n + p - 1] == 0


def vp_membership(v: TensorElement, p: int) -> bool:
    """Is every term of v inside H^p (x) H + H (x) H^p?"""
    if v.m != 2:
        raise ArityError(f"expected arity 2, got {v.m}")
    _check_p(v.n, p)
    return all(_clean(a, p, v.n) or _clean(b, p, v.n) for a, b in v.terms)


def _monomial(n: int, alpha) -> HElement:
    return HElement._raw(n, {alpha: mpq(1)})


def lemma23_harness(v: TensorElement, p: int, bound: Optional[int] = None) -> CheckReport:
    """Probe: t^{k eps_p} . v = t^{k eps_pbar} . v = 0 for k <= bound implies v in V^p.

    A nonzero action means the hypothesis fails; the report then passes
    vacuously and carries the acting monomial as its witness.
    """
    if v.m != 2:
        raise ArityError(f"expected arity 2, got {v.m}")
    _check_p(v.n, p)
    n = v.n
    needed = default_bound(v)
    K = needed if bound is None else bound
    for k in range(1, K + 1):
        for q in (p, n + p):
            x = _monomial(n, tuple(k * c for c in epsilon(n, q)))
            if diag_action(x, v):
                name = "eps_p" if q == p else "eps_pbar"
                return CheckReport(True, f"hypothesis not met: t^({k} {name}) . v != 0 (k={k})", witness=x)
    if K < needed:
        return CheckReport(True, f"inconclusive: actions vanish up to K={K} < spread+2={needed}")
    if vp_membership(v, p):
        return CheckReport(True, f"hypothesis met up to K={K}; v lies in V^{p}")
    return CheckReport(False, f"hypothesis met up to K={K} but v is not in V^{p}")


def annihilator_witness(c, bound: Optional[int] = None) -> Optional[HElement]:
    """First candidate monomial acting nontrivially on c (any arity), or None."""
    if isinstance(c, HElement):
        c = TensorElement.from_element(c)
    if c.m < 1:
        raise ArityError("arity must be at least 1")
    return first_nonannihilating(c, default_bound(c) if bound is None else bound)


def skew_closure_harness(
    r: TensorElement, sample: Sequence[HElement] = (), bound: Optional[int] = None
) -> CheckReport:
    """Probe: a . r skew for all sampled a implies r skew."""
    if r.m != 2:
        raise ArityError(f"expected arity 2, got {r.m}")
    K = default_bound(r) if bound is None else bound
    probes: Iterable[HElement] = list(sample) + list(candidate_monomials(r.n, K))
    count = 0
    for a in probes:
        count += 1
        if not is_skew(diag_action(a, r)):
            return CheckReport(True, "hypothesis not met: a . r is not skew", witness=a)
    if is_skew(r):
        return CheckReport(True, f"hypothesis met on {count} probes; r is skew")
    return CheckReport(
        False, f"hypothesis met on {count} probes but r is not skew", defect=r + twist(r)
    )
