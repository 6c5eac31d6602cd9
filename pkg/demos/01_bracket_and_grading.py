"""
The Hamiltonian bracket, the Poisson product and the grading
=============================================================

Monomials t^alpha carry exponents in Q^{2n}, stored as
(alpha_1..alpha_n, alpha_1bar..alpha_nbar).
"""

from hamlie import bracket, grade_decompose, leibniz_defect, t, t_sigma
from hamlie.algebra import bracket_bar, tbar

# [t^{2 eps_1}, t^{2 eps_1bar}] = 4 t^{sigma_1}
print(bracket(t(2, 0), t(0, 2)))

# In H-bar the bracket may land on the unit t^0; in H that term is zero.
print(bracket_bar(tbar(1, 0), tbar(0, 1)))
print(bracket(t(1, 0), t(0, 1)))

# t^{sigma_p} acts diagonally: the eigenvalue is the grade alpha_pbar - alpha_p.
x = t(1, 3, coeff="1/2")
print(bracket(t_sigma(1, 1), x))

# Split an element into homogeneous components.
for mu, part in grade_decompose(t(1, 0) + t(0, 1) + t(2, 2)).items():
    print(mu, part)

# The product and bracket satisfy the Leibniz rule exactly.
u, v, w = tbar(2, 1), tbar(0, 1) + tbar("1/2", 0), tbar(-1, 3)
print("Leibniz defect:", leibniz_defect(u, v, w))
