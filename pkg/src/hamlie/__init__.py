"""Exact computations in generalized Hamiltonian Lie algebras of Cartan type H.

Elements are finite rational combinations of monomials t^alpha with exponents
alpha in Q^{2n}.  The package covers the Poisson algebra H-bar, the Lie
algebra H, tensor powers of H with the adjoint diagonal action, coboundary
Lie bialgebra structures and the classical Yang-Baxter tensor.
"""
from .algebra import (
    BarElement,
    HElement,
    bracket,
    bracket_bar,
    grade_decompose,
    jacobi_defect,
    leibniz_defect,
    product,
    project_to_H,
    t,
    t_sigma,
    tbar,
)
from .bialgebra import (
    CheckReport,
    RMatrix,
    ad_invariance_witness,
    anti_commutativity_defect,
    check_bialgebra,
    co_jacobi_defect,
    cobracket,
    compatibility_defect,
    cybe,
    drinfeld_identity_defect,
    triangular_from_pair,
)
from .errors import (
    ArityError,
    ConstraintError,
    DimensionError,
    HamLieError,
    HomogeneityError,
    ParseError,
    SlotIndexError,
)
from .exponent import (
    GammaSpec,
    epsilon,
    epsilon_bar,
    exp_add,
    exp_neg,
    exp_scale,
    exponent,
    grade,
    is_nondegenerate,
    sigma,
)
from .serialize import dumps, parse_element
from .tensor import (
    TensorElement,
    cyclic,
    diag_action,
    is_skew,
    sigma_eigen_defect,
    skew_part,
    tensor_grade_decompose,
    tensor_product,
    twist,
)
from .verify import (
    InnerDerivation,
    annihilator_witness,
    derivation_defect,
    inner_apply,
    lemma23_harness,
    skew_closure_harness,
    vp_membership,
)

__version__ = "0.1.0"
