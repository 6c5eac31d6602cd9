"""
A non-triangular r: nonzero c(r) and an ad-invariance witness
=============================================================

For r = t^{2eps_1}(x)t^{2eps_1bar} - t^{2eps_1bar}(x)t^{2eps_1} the
Yang-Baxter tensor is a six-term alternation with coefficients +-4.  The
co-Jacobi defect of Delta_r equals x . c(r), and a small monomial x with
x . c(r) != 0 shows that c(r) is not ad-invariant.
"""
from hamlie import (
    RMatrix,
    ad_invariance_witness,
    co_jacobi_defect,
    cybe,
    diag_action,
    drinfeld_identity_defect,
    t,
    tensor_product,
)

a, b = t(2, 0), t(0, 2)
r = RMatrix(tensor_product(a, b) - tensor_product(b, a))
c = cybe(r)
print("c(r) =", c)

x = t(1, 0)
print("co-Jacobi defect == x . c(r):", co_jacobi_defect(r, x) == diag_action(x, c))
print("Drinfeld identity defect:", drinfeld_identity_defect(r, x))

w = ad_invariance_witness(c, 3)
print("witness:", w)
print("witness . c(r) =", diag_action(w, c))
