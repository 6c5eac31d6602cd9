"""Finite-support elements of the tensor powers H^{(x) m}.

Keys are m-tuples of exponents, so slot permutations and slotwise brackets
touch only the support.  No slot may carry the zero exponent: each factor
lives in H, where t^0 vanishes.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from gmpy2 import mpq

from .algebra import HElement, _accumulate, bracket_monomials
from .errors import ArityError, DimensionError, HamLieError, HomogeneityError, ParseError
from .exponent import (
    NUMBER_TYPES,
    Rational,
    Exponent,
    Grade,
    exponent,
    exponent_from_json,
    exponent_to_json,
    format_rational,
    grade,
    is_zero_exponent,
    parse_rational,
    sigma,
    to_rational,
    zero_grade,
)

Key = Tuple[Exponent, ...]


class TensorElement:
    __slots__ = ("n", "m", "terms")

    def __init__(self, n: int, m: int, terms: Mapping[Key, object] | Iterable = ()):
        if not isinstance(n, int) or n < 1:
            raise HamLieError(f"n must be a positive integer, got {n!r}")
        if not isinstance(m, int) or m < 1:
            raise ArityError(f"arity must be a positive integer, got {m!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Key, Rational] = {}
        for key, c in items:
            if len(key) != m:
                raise ArityError(f"key {key} does not have {m} slots")
            key = tuple(exponent(e) for e in key)
            if any(len(e) != 2 * n for e in key):
                raise DimensionError(f"key {key} has an exponent not of length {2 * n}")
            if any(is_zero_exponent(e) for e in key):
                continue
            _accumulate(acc, key, to_rational(c))
        self.n, self.m, self.terms = n, m, acc

    @classmethod
    def _raw(cls, n: int, m: int, terms: Dict[Key, Rational]) -> "TensorElement":
        obj = cls.__new__(cls)
        obj.n, obj.m, obj.terms = n, m, terms
        return obj

    @classmethod
    def zero(cls, n: int, m: int) -> "TensorElement":
        return cls._raw(n, m, {})

    @classmethod
    def from_element(cls, x: HElement) -> "TensorElement":
        return cls._raw(x.n, 1, {(e,): c for e, c in x.terms.items()})

    # -- inspection ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> List[Tuple[Key, Rational]]:
        return sorted(self.terms.items())

    def coefficient(self, *key) -> Rational:
        return self.terms.get(tuple(exponent(e) for e in key), mpq(0))

    def support_exponents(self) -> List[Exponent]:
        return [e for key in self.terms for e in key]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.n, self.m, self.terms) == (other.n, other.m, other.terms)

    def __hash__(self) -> int:
        return hash((self.n, self.m, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return f"TensorElement(n={self.n}, m={self.m}, 0)"
        parts = []
        for key, c in self.sorted_terms():
            slots = " (x) ".join(f"t^({','.join(map(format_rational, e))})" for e in key)
            parts.append(f"{format_rational(c)}*{slots}")
        return f"TensorElement(n={self.n}, m={self.m}, {' + '.join(parts)})"

    # -- linear structure ---------------------------------------------------
    def _check(self, other: "TensorElement") -> None:
        if not isinstance(other, TensorElement):
            raise TypeError(f"cannot combine TensorElement with {type(other).__name__}")
        if other.n != self.n:
            raise DimensionError(f"ambient n differs: {self.n} vs {other.n}")
        if other.m != self.m:
            raise ArityError(f"arities differ: {self.m} vs {other.m}")

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(acc, k, c)
        return self._raw(self.n, self.m, acc)

    def __neg__(self):
        return self._raw(self.n, self.m, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def scale(self, k) -> "TensorElement":
        k = to_rational(k)
        if not k:
            return self.zero(self.n, self.m)
        return self._raw(self.n, self.m, {key: k * c for key, c in self.terms.items()})

    def __mul__(self, k):
        if isinstance(k, NUMBER_TYPES):
            return self.scale(k)
        return NotImplemented

    __rmul__ = __mul__

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "terms": [
                {"c": format_rational(c), "e": [exponent_to_json(e) for e in key]}
                for key, c in self.sorted_terms()
            ],
        }


def tensor_product(*factors) -> TensorElement:
    """Tensor product of H-elements and/or tensors, in the given order."""
    if not factors:
        raise ArityError("tensor_product needs at least one factor")
    parts = [TensorElement.from_element(f) if isinstance(f, HElement) else f for f in factors]
    n = parts[0].n
    acc: Dict[Key, Rational] = {(): mpq(1)}
    m = 0
    for part in parts:
        if part.n != n:
            raise DimensionError(f"ambient n differs: {n} vs {part.n}")
        m += part.m
        nxt: Dict[Key, Rational] = {}
        for k1, c1 in acc.items():
            for k2, c2 in part.terms.items():
                _accumulate(nxt, k1 + k2, c1 * c2)
        acc = nxt
    return TensorElement._raw(n, m, acc)


def _require_arity(v: TensorElement, m: int) -> None:
    if v.m != m:
        raise ArityError(f"expected arity {m}, got {v.m}")


def permute(v: TensorElement, order: Sequence[int]) -> TensorElement:
    """New slot ``i`` receives old slot ``order[i]`` (0-based)."""
    if sorted(order) != list(range(v.m)):
        raise ArityError(f"{order} is not a permutation of {v.m} slots")
    return TensorElement._raw(
        v.n, v.m, {tuple(key[j] for j in order): c for key, c in v.terms.items()}
    )


def twist(v: TensorElement) -> TensorElement:
    _require_arity(v, 2)
    return permute(v, (1, 0))


def twist_at(v: TensorElement, i: int) -> TensorElement:
    """Swap slots i and i+1 (0-based), identity elsewhere."""
    if not 0 <= i < v.m - 1:
        raise ArityError(f"cannot swap slots {i},{i + 1} of an arity-{v.m} tensor")
    order = list(range(v.m))
    order[i], order[i + 1] = order[i + 1], order[i]
    return permute(v, order)


def cyclic(v: TensorElement) -> TensorElement:
    """x1 (x) x2 (x) x3  ->  x2 (x) x3 (x) x1."""
    _require_arity(v, 3)
    return permute(v, (1, 2, 0))


def diag_action(x: HElement, v: TensorElement) -> TensorElement:
    """Adjoint diagonal action: bracket x into each slot in turn."""
    if x.n != v.n:
        raise DimensionError(f"ambient n differs: {x.n} vs {v.n}")
    acc: Dict[Key, Rational] = {}
    for a, ca in x.terms.items():
        for key, c in v.terms.items():
            for s, b in enumerate(key):
                for e, k in bracket_monomials(a, b):
                    if any(e):
                        _accumulate(acc, key[:s] + (e,) + key[s + 1 :], ca * c * k)
    return TensorElement._raw(v.n, v.m, acc)


def skew_part(v: TensorElement) -> TensorElement:
    return (v - twist(v)).scale(mpq(1, 2))


def is_skew(v: TensorElement) -> bool:
    """Membership in Im(1 - twist), i.e. v + twist(v) == 0 (characteristic zero)."""
    return (v + twist(v)).is_zero()


def tensor_grade(key: Key) -> Grade:
    mu = list(grade(key[0]))
    for e in key[1:]:
        for i, g in enumerate(grade(e)):
            mu[i] += g
    return tuple(mu)


def tensor_grade_decompose(v: TensorElement) -> Dict[Grade, TensorElement]:
    parts: Dict[Grade, Dict[Key, Rational]] = {}
    for key, c in v.terms.items():
        parts.setdefault(tensor_grade(key), {})[key] = c
    return {mu: TensorElement._raw(v.n, v.m, terms) for mu, terms in sorted(parts.items())}


def homogeneous_grade(v: TensorElement) -> Grade:
    """The common grade of all terms; raises if there is more than one."""
    grades = {tensor_grade(key) for key in v.terms}
    if len(grades) > 1:
        raise HomogeneityError(f"tensor has terms in {len(grades)} different grades")
    return grades.pop() if grades else zero_grade(v.n)


def sigma_eigen_defect(p: int, v: TensorElement) -> TensorElement:
    """t^{sigma_p} . v - mu_p v for homogeneous v of grade mu."""
    _require_arity(v, 2)
    s = HElement._raw(v.n, {sigma(v.n, p): mpq(1)})
    mu = homogeneous_grade(v)
    return diag_action(s, v) - v.scale(mu[p - 1])


def tensor_from_dict(data, location: str = "") -> TensorElement:
    if not isinstance(data, dict):
        raise ParseError("tensor must be a JSON object", location)
    extra = set(data) - {"n", "m", "terms"}
    if extra:
        raise ParseError(f"unexpected keys {sorted(extra)}", location)
    n, m = data.get("n"), data.get("m")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"'n' must be a positive integer, got {n!r}", f"{location}/n")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ParseError(f"'m' must be a positive integer, got {m!r}", f"{location}/m")
    raw_terms = data.get("terms")
    if not isinstance(raw_terms, list):
        raise ParseError("'terms' must be a JSON array", f"{location}/terms")
    terms: Dict[Key, Rational] = {}
    for i, term in enumerate(raw_terms):
        loc = f"{location}/terms/{i}"
        if not isinstance(term, dict) or set(term) != {"c", "e"}:
            raise ParseError("term must be an object with keys 'c' and 'e'", loc)
        c = parse_rational(term["c"], f"{loc}/c")
        if not c:
            raise ParseError("zero coefficient", f"{loc}/c")
        slots = term["e"]
        if not isinstance(slots, list) or len(slots) != m:
            raise ParseError(f"expected {m} exponent arrays", f"{loc}/e")
        key = tuple(exponent_from_json(s, n, f"{loc}/e/{j}") for j, s in enumerate(slots))
        if any(is_zero_exponent(e) for e in key):
            raise ParseError("a slot carries the zero exponent (t^0 is zero in H)", f"{loc}/e")
        if key in terms:
            raise ParseError("duplicate exponent tuple", f"{loc}/e")
        terms[key] = c
    return TensorElement._raw(n, m, terms)
