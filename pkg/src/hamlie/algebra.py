"""Elements of the Poisson algebra H-bar and of the Lie algebra H = H-bar / Q*1.

Both flavours are finite sparse maps ``exponent -> Rational`` kept in canonical
form (no zero coefficients).  :class:`HElement` additionally never stores the
zero exponent, since ``t^0`` spans the quotient kernel.

The bracket of monomials is

    [t^a, t^b] = sum_i (a_i b_ibar - b_i a_ibar) t^{a + b - sigma_i}

and the commutative product is ``t^a * t^b = t^{a+b}``.
"""
from __future__ import annotations

import operator

from typing import Dict, Iterable, Iterator, List, Mapping, Tuple

from gmpy2 import mpq

from .errors import DimensionError, HamLieError, ParseError
from .exponent import (
    NUMBER_TYPES,
    Rational,
    Exponent,
    Grade,
    RationalLike,
    exponent,
    exponent_from_json,
    exponent_to_json,
    format_rational,
    grade,
    is_zero_exponent,
    parse_rational,
    sigma,
    to_rational,
    zero_exponent,
)


def bracket_monomials(a: Exponent, b: Exponent) -> List[Tuple[Exponent, Rational]]:
    """Terms of [t^a, t^b] in H-bar, as ``(exponent, coefficient)`` pairs.

    Distinct ``i`` shift by distinct ``sigma_i`` so the exponents never repeat.
    """
    n = len(a) // 2
    out = []
    for i in range(n):
        c = a[i] * b[n + i] - b[i] * a[n + i]
        if c:
            e = list(map(operator.add, a, b))
            e[i] -= 1
            e[n + i] -= 1
            out.append((tuple(e), c))
    return out


def _accumulate(acc: Dict, key, value: Rational) -> None:
    v = acc.get(key, 0) + value
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class _Element:
    """Shared sparse-map machinery; subclasses fix whether t^0 survives."""

    __slots__ = ("n", "terms")
    _keeps_unit = True
    kind = ""

    def __init__(self, n: int, terms: Mapping[Exponent, RationalLike] | Iterable = ()):
        if not isinstance(n, int) or n < 1:
            raise HamLieError(f"n must be a positive integer, got {n!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Exponent, Rational] = {}
        for key, c in items:
            alpha = exponent(key)
            if len(alpha) != 2 * n:
                raise DimensionError(f"exponent {key} does not have length {2 * n}")
            if not self._keeps_unit and is_zero_exponent(alpha):
                continue
            _accumulate(acc, alpha, to_rational(c))
        self.n = n
        self.terms = acc

    @classmethod
    def _raw(cls, n: int, terms: Dict[Exponent, Rational]):
        # terms must already be canonical for this flavour
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, n: int):
        return cls._raw(n, {})

    @classmethod
    def monomial(cls, alpha, coeff: RationalLike = 1):
        alpha = exponent(alpha)
        return cls(len(alpha) // 2, {alpha: coeff})

    # -- inspection ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, Rational]]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> List[Tuple[Exponent, Rational]]:
        return sorted(self.terms.items())

    def coefficient(self, alpha) -> Rational:
        return self.terms.get(exponent(alpha), mpq(0))

    def support(self) -> List[Exponent]:
        return sorted(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.n, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return f"{type(self).__name__}(n={self.n}, 0)"
        body = " + ".join(
            f"{format_rational(c)}*t^({','.join(map(format_rational, e))})"
            for e, c in self.sorted_terms()
        )
        return f"{type(self).__name__}(n={self.n}, {body})"

    # -- linear structure ---------------------------------------------------
    def _check(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.n != self.n:
            raise DimensionError(f"ambient n differs: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, _Element):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            _accumulate(acc, e, c)
        return self._raw(self.n, acc)

    def __neg__(self):
        return self._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, _Element):
            return NotImplemented
        return self + (-other)

    def scale(self, k: RationalLike):
        k = to_rational(k)
        if not k:
            return self.zero(self.n)
        return self._raw(self.n, {e: k * c for e, c in self.terms.items()})

    def __rmul__(self, k):
        if isinstance(k, NUMBER_TYPES):
            return self.scale(k)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, NUMBER_TYPES):
            return self.scale(other)
        return NotImplemented

    # -- serialization --------------------------------------------------------
    def to_dict(self) -> dict:
        out = {"n": self.n}
        if self.kind == "bar":
            out["kind"] = "bar"
        out["terms"] = [
            {"c": format_rational(c), "e": exponent_to_json(e)} for e, c in self.sorted_terms()
        ]
        return out


class BarElement(_Element):
    """Element of the group algebra H-bar; ``t^0`` is the unit."""

    __slots__ = ()
    _keeps_unit = True
    kind = "bar"

    @classmethod
    def one(cls, n: int) -> "BarElement":
        return cls._raw(n, {zero_exponent(n): mpq(1)})

    def __mul__(self, other):
        if isinstance(other, BarElement):
            return product(self, other)
        return super().__mul__(other)


class HElement(_Element):
    """Element of the Hamiltonian Lie algebra H (the zero exponent is dropped)."""

    __slots__ = ()
    _keeps_unit = False
    kind = "h"

    def lift(self) -> BarElement:
        """Representative in H-bar with vanishing t^0 coefficient."""
        return BarElement._raw(self.n, dict(self.terms))


def _check_pair(u: _Element, v: _Element) -> None:
    if u.n != v.n:
        raise DimensionError(f"ambient n differs: {u.n} vs {v.n}")


def product(u: BarElement, v: BarElement) -> BarElement:
    _check_pair(u, v)
    acc: Dict[Exponent, Rational] = {}
    for a, c in u.terms.items():
        for b, d in v.terms.items():
            _accumulate(acc, tuple(map(operator.add, a, b)), c * d)
    return BarElement._raw(u.n, acc)


def _bracket_terms(u: _Element, v: _Element, keep_unit: bool) -> Dict[Exponent, Rational]:
    _check_pair(u, v)
    acc: Dict[Exponent, Rational] = {}
    for a, c in u.terms.items():
        for b, d in v.terms.items():
            for e, k in bracket_monomials(a, b):
                if keep_unit or any(e):
                    _accumulate(acc, e, k * c * d)
    return acc


def bracket_bar(u: BarElement, v: BarElement) -> BarElement:
    """Bracket in H-bar; the t^0 component is retained."""
    return BarElement._raw(u.n, _bracket_terms(u, v, True))


def bracket(u: HElement, v: HElement) -> HElement:
    """Bracket in H: the H-bar bracket with its t^0 component deleted."""
    return HElement._raw(u.n, _bracket_terms(u, v, False))


def project_to_H(u: BarElement) -> HElement:
    return HElement._raw(u.n, {e: c for e, c in u.terms.items() if any(e)})


def grade_decompose(u: _Element) -> Dict[Grade, _Element]:
    """Split ``u`` into its homogeneous components, keyed by grade."""
    parts: Dict[Grade, Dict[Exponent, Rational]] = {}
    for e, c in u.terms.items():
        parts.setdefault(grade(e), {})[e] = c
    return {mu: type(u)._raw(u.n, terms) for mu, terms in sorted(parts.items())}


def is_homogeneous(u: _Element) -> bool:
    return len({grade(e) for e in u.terms}) <= 1


def jacobi_defect(x: HElement, y: HElement, z: HElement) -> HElement:
    """[x,[y,z]] + [y,[z,x]] + [z,[x,y]], which must vanish."""
    return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))


def leibniz_defect(u: BarElement, v: BarElement, w: BarElement) -> BarElement:
    """[u, v*w] - [u,v]*w - v*[u,w], which must vanish in H-bar."""
    return bracket_bar(u, product(v, w)) - product(bracket_bar(u, v), w) - product(v, bracket_bar(u, w))


def t(*coords: RationalLike, coeff: RationalLike = 1) -> HElement:
    """Shorthand for the H-monomial ``coeff * t^alpha``."""
    return HElement.monomial(exponent(*coords), coeff)


def tbar(*coords: RationalLike, coeff: RationalLike = 1) -> BarElement:
    return BarElement.monomial(exponent(*coords), coeff)


def t_sigma(n: int, p: int, coeff: RationalLike = 1) -> HElement:
    return HElement.monomial(sigma(n, p), coeff)


def element_from_dict(data, location: str = "") -> _Element:
    """Parse the element JSON schema; ``"kind": "bar"`` selects H-bar."""
    if not isinstance(data, dict):
        raise ParseError("element must be a JSON object", location)
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"'n' must be a positive integer, got {n!r}", f"{location}/n")
    kind = data.get("kind", "h")
    if kind not in ("h", "bar"):
        raise ParseError(f"unknown kind {kind!r}", f"{location}/kind")
    extra = set(data) - {"n", "kind", "terms"}
    if extra:
        raise ParseError(f"unexpected keys {sorted(extra)}", location)
    raw_terms = data.get("terms")
    if not isinstance(raw_terms, list):
        raise ParseError("'terms' must be a JSON array", f"{location}/terms")
    terms: Dict[Exponent, Rational] = {}
    for i, term in enumerate(raw_terms):
        loc = f"{location}/terms/{i}"
        if not isinstance(term, dict) or set(term) != {"c", "e"}:
            raise ParseError("term must be an object with keys 'c' and 'e'", loc)
        c = parse_rational(term["c"], f"{loc}/c")
        if not c:
            raise ParseError("zero coefficient", f"{loc}/c")
        e = exponent_from_json(term["e"], n, f"{loc}/e")
        if e in terms:
            raise ParseError("duplicate exponent", f"{loc}/e")
        if kind == "h" and is_zero_exponent(e):
            raise ParseError("t^0 is zero in H; use kind 'bar' for H-bar", f"{loc}/e")
        terms[e] = c
    cls = BarElement if kind == "bar" else HElement
    return cls._raw(n, terms)
