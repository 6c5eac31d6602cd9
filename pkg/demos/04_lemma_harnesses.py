"""
Bounded harnesses for the annihilator lemmas
============================================

Each harness bounds an "all k" or "all a" quantifier by K; by default
K = (largest coordinate magnitude) + 2.
"""
from hamlie import (
    InnerDerivation,
    annihilator_witness,
    derivation_defect,
    lemma23_harness,
    skew_closure_harness,
    t,
    tensor_product,
)

# v with both factors clean in coordinates 1, 1bar: every t^{k eps_1}, t^{k eps_1bar} kills it.
v = tensor_product(t(0, 1, 0, 0), t(0, 2, 0, 0))
print(lemma23_harness(v, 1).to_json())

# Both slots touch coordinate 1: some action is nonzero, so the hypothesis fails.
print(lemma23_harness(tensor_product(t(1, 0), t(1, 0)), 1).to_json())

# Nonzero c always meets a monomial that does not annihilate it.
print(annihilator_witness(tensor_product(t(1, 1), t(1, 1))))

# a . r skew for all probes a forces r skew; a symmetric r fails the hypothesis.
print(skew_closure_harness(tensor_product(t(1, 0), t(1, 0))).description)

# Inner derivations x -> x . a satisfy the derivation law.
d = InnerDerivation(tensor_product(t(1, 1), t(0, 1)))
print(derivation_defect(d, t(2, 0), t(0, 2)))
