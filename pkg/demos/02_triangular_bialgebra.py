"""
A triangular Lie bialgebra structure from a pair [a, b] = b
============================================================

With a = t^{sigma_1} and b = t^{eps_1bar}, r = a(x)b - b(x)a solves the
classical Yang-Baxter equation and Delta_r(x) = x . r is a cobracket.
"""
import random

from hamlie import (
    anti_commutativity_defect,
    co_jacobi_defect,
    cobracket,
    compatibility_defect,
    cybe,
    t,
    t_sigma,
    triangular_from_pair,
)
from hamlie.sampling import random_h

r = triangular_from_pair(t_sigma(1, 1), t(0, 1))
print("r =", r.value)
print("c(r) =", cybe(r))

print("Delta_r(t^eps_1) =", cobracket(r, t(1, 0)))

rng = random.Random(0)
for _ in range(5):
    x, y = random_h(rng, 1, 2), random_h(rng, 1, 2)
    print(
        anti_commutativity_defect(r, x).is_zero(),
        co_jacobi_defect(r, x).is_zero(),
        compatibility_defect(r, x, y).is_zero(),
    )
