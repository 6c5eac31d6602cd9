"""Seeded random elements for property checks and the CLI sweeps."""
from __future__ import annotations

import random
from typing import Optional, Sequence

from gmpy2 import mpq

from .algebra import BarElement, HElement
from .errors import HamLieError
from .exponent import Exponent, GammaSpec, Grade, Rational, is_nondegenerate
from .tensor import TensorElement, tensor_product

COORDS = tuple(mpq(k) for k in range(-3, 4)) + (mpq(1, 2), mpq(-1, 2))
COEFFS = tuple(mpq(k) for k in (-3, -2, -1, 1, 2, 3)) + (mpq(1, 2), mpq(-2, 3))


def random_exponent(
    rng: random.Random, n: int, coords: Sequence[Rational] = COORDS, nonzero: bool = True
) -> Exponent:
    while True:
        alpha = tuple(rng.choice(coords) for _ in range(2 * n))
        if any(alpha) or not nonzero:
            return alpha


def random_gamma_exponent(rng: random.Random, spec: GammaSpec, span: int = 2) -> Exponent:
    """Nonzero integer combination of the generators of a nondegenerate spec."""
    if not is_nondegenerate(spec):
        raise HamLieError("generators are degenerate; cannot sample Gamma")
    while True:
        alpha = [mpq(0)] * (2 * spec.n)
        for g in spec.generators:
            k = rng.randint(-span, span)
            for i, x in enumerate(g):
                alpha[i] += k * x
        if any(alpha):
            return tuple(alpha)


def random_h(rng: random.Random, n: int, terms: int = 3, coords=COORDS) -> HElement:
    return HElement(
        n, [(random_exponent(rng, n, coords), rng.choice(COEFFS)) for _ in range(terms)]
    )


def random_bar(rng: random.Random, n: int, terms: int = 3, coords=COORDS) -> BarElement:
    return BarElement(
        n,
        [(random_exponent(rng, n, coords, nonzero=False), rng.choice(COEFFS)) for _ in range(terms)],
    )


def random_monomial(rng: random.Random, n: int, coords=COORDS) -> HElement:
    return HElement._raw(n, {random_exponent(rng, n, coords): rng.choice(COEFFS)})


def random_tensor(rng: random.Random, n: int, m: int, terms: int = 3, coords=COORDS) -> TensorElement:
    return TensorElement(
        n,
        m,
        [
            (tuple(random_exponent(rng, n, coords) for _ in range(m)), rng.choice(COEFFS))
            for _ in range(terms)
        ],
    )


def random_skew(rng: random.Random, n: int, pairs: int = 2, coords=COORDS) -> TensorElement:
    """Sum of ``pairs`` terms c (a (x) b - b (x) a): at most 2*pairs tensor terms."""
    out = TensorElement.zero(n, 2)
    for _ in range(pairs):
        a = random_monomial(rng, n, coords)
        b = HElement._raw(n, {random_exponent(rng, n, coords): mpq(1)})
        out = out + tensor_product(a, b) - tensor_product(b, a)
    return out


def random_grade(rng: random.Random, n: int, coords=COORDS) -> Grade:
    return tuple(rng.choice(coords) for _ in range(n))


def exponent_of_grade(rng: random.Random, mu: Grade, coords=COORDS) -> Exponent:
    """Random nonzero exponent alpha with alpha_pbar - alpha_p = mu_p."""
    n = len(mu)
    while True:
        low = [rng.choice(coords) for _ in range(n)]
        alpha = tuple(low) + tuple(x + m for x, m in zip(low, mu))
        if any(alpha):
            return alpha


def random_homogeneous_h(
    rng: random.Random, n: int, terms: int = 3, mu: Optional[Grade] = None, coords=COORDS
) -> HElement:
    mu = random_grade(rng, n, coords) if mu is None else mu
    return HElement(n, [(exponent_of_grade(rng, mu, coords), rng.choice(COEFFS)) for _ in range(terms)])


def random_homogeneous_tensor(
    rng: random.Random, n: int, terms: int = 3, mu: Optional[Grade] = None, coords=COORDS
) -> TensorElement:
    """Arity-2 tensor all of whose terms have total grade mu."""
    mu = random_grade(rng, n, coords) if mu is None else mu
    out = []
    for _ in range(terms):
        nu = random_grade(rng, n, coords)
        rest = tuple(a - b for a, b in zip(mu, nu))
        out.append(((exponent_of_grade(rng, nu, coords), exponent_of_grade(rng, rest, coords)), rng.choice(COEFFS)))
    return TensorElement(n, 2, out)
