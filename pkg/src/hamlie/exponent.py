"""Exponents of monomials t^alpha and the grading map.

An exponent is a point of Gamma, an additive subgroup of Q^{2n}.  It is stored
as a plain tuple of exact rationals (``gmpy2.mpq``) in *block order*::

    (alpha_1, ..., alpha_n, alpha_{n+1}, ..., alpha_{2n})

so that the conjugate index of ``p`` is ``pbar = n + p``.  Indices ``p`` used
by the public functions are 1-based, matching the usual mathematical notation.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from gmpy2 import mpq

from .errors import DimensionError, HamLieError, ParseError, SlotIndexError

# mpq hashes and adds far faster than fractions.Fraction, and hashes/compares
# equal to it, so Fraction inputs interoperate.
Rational = type(mpq())
NUMBER_TYPES = (int, Rational, Fraction)
Exponent = Tuple[Rational, ...]
Grade = Tuple[Rational, ...]
RationalLike = Union[int, str, Fraction, Rational]

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def to_rational(value: RationalLike) -> Rational:
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str, location: str = "") -> Rational:
    """Parse ``"p"`` or ``"p/q"``; anything else (decimals, floats) is rejected."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise ParseError(f"malformed rational {text!r}", location)
    num, _, den = text.strip().partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}", location)
    return mpq(int(num), int(den) if den else 1)


def format_rational(q: Rational) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def exponent(*coords: RationalLike) -> Exponent:
    """Build an exponent from coordinates, e.g. ``exponent(1, "1/2")``."""
    if len(coords) == 1 and not isinstance(coords[0], (str,) + NUMBER_TYPES):
        coords = tuple(coords[0])
    if len(coords) == 0 or len(coords) % 2:
        raise DimensionError(f"an exponent needs 2n >= 2 coordinates, got {len(coords)}")
    return tuple(to_rational(c) for c in coords)


def zero_exponent(n: int) -> Exponent:
    return (mpq(0),) * (2 * n)


def is_zero_exponent(alpha: Exponent) -> bool:
    return not any(alpha)


def rank_n(alpha: Sequence) -> int:
    """The ambient ``n`` of an exponent (half its length)."""
    return len(alpha) // 2


def _check_same(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise DimensionError(f"exponent lengths differ: {len(a)} vs {len(b)}")


def exp_add(a: Exponent, b: Exponent) -> Exponent:
    _check_same(a, b)
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a: Exponent, b: Exponent) -> Exponent:
    _check_same(a, b)
    return tuple(x - y for x, y in zip(a, b))


def exp_neg(a: Exponent) -> Exponent:
    return tuple(-x for x in a)


def exp_scale(a: Exponent, k: int) -> Exponent:
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError("exponents are scaled by integers only")
    return tuple(k * x for x in a)


def _n_of(spec: Union["GammaSpec", int]) -> int:
    return spec.n if isinstance(spec, GammaSpec) else int(spec)


def _check_index(p: int, upper: int) -> None:
    if not isinstance(p, int) or not 1 <= p <= upper:
        raise SlotIndexError(f"index {p!r} outside 1..{upper}")


def epsilon(spec: Union["GammaSpec", int], p: int) -> Exponent:
    """Unit vector epsilon_p for 1 <= p <= 2n (use ``n + p`` for pbar)."""
    n = _n_of(spec)
    _check_index(p, 2 * n)
    return tuple(mpq(1 if i == p - 1 else 0) for i in range(2 * n))


def epsilon_bar(spec: Union["GammaSpec", int], p: int) -> Exponent:
    n = _n_of(spec)
    _check_index(p, n)
    return epsilon(n, n + p)


def sigma(spec: Union["GammaSpec", int], p: int) -> Exponent:
    """sigma_p = epsilon_p + epsilon_pbar."""
    n = _n_of(spec)
    _check_index(p, n)
    return tuple(mpq(1 if i in (p - 1, n + p - 1) else 0) for i in range(2 * n))


def grade(alpha: Exponent) -> Grade:
    """Grade vector with entries alpha_pbar - alpha_p.

    With this sign, t^{sigma_p} acts on t^alpha through the bracket with
    eigenvalue ``grade(alpha)[p-1]``.
    """
    n = rank_n(alpha)
    return tuple(alpha[n + i] - alpha[i] for i in range(n))


def grade_add(mu: Grade, nu: Grade) -> Grade:
    _check_same(mu, nu)
    return tuple(x + y for x, y in zip(mu, nu))


def zero_grade(n: int) -> Grade:
    return (mpq(0),) * n


def spread(exponents: Iterable[Exponent]) -> int:
    """Ceiling of the largest coordinate magnitude; 0 for an empty support."""
    best = mpq(0)
    for alpha in exponents:
        for x in alpha:
            if abs(x) > best:
                best = abs(x)
    return int(math.ceil(best))


def exponent_to_json(alpha: Exponent) -> list:
    return [format_rational(x) for x in alpha]


def exponent_from_json(data, n: int, location: str = "") -> Exponent:
    if not isinstance(data, list):
        raise ParseError("exponent must be a JSON array", location)
    if len(data) != 2 * n:
        raise ParseError(f"exponent has {len(data)} entries, expected {2 * n}", location)
    return tuple(parse_rational(x, f"{location}/{i}") for i, x in enumerate(data))


def _standard_generators(n: int) -> tuple:
    return tuple(epsilon(n, p) for p in range(1, 2 * n + 1))


@dataclass(frozen=True)
class GammaSpec:
    """Ambient parameters: ``n`` and generators of the exponent group.

    Construction does not force nondegeneracy so that degenerate candidate
    generator sets can still be inspected with :func:`is_nondegenerate`.
    """

    n: int
    generators: tuple = field(default=None)

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise HamLieError(f"n must be a positive integer, got {self.n!r}")
        if self.generators is None:
            gens = _standard_generators(self.n)
        else:
            gens = tuple(exponent(g) for g in self.generators)
        for g in gens:
            if len(g) != 2 * self.n:
                raise DimensionError(f"generator {g} does not have length {2 * self.n}")
        object.__setattr__(self, "generators", gens)

    def is_standard(self) -> bool:
        return self.generators == _standard_generators(self.n)


def is_nondegenerate(spec: GammaSpec) -> bool:
    """True iff the generators span Q^{2n} (exact rank computation)."""
    from sympy import Matrix, Rational

    if len(spec.generators) < 2 * spec.n:
        return False
    rows = [[Rational(int(x.numerator), int(x.denominator)) for x in g] for g in spec.generators]
    return Matrix(rows).rank() == 2 * spec.n
