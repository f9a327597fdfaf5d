"""Comultiplication and the two inner products on a small symmetric algebra."""

from semisym import QQ, SemiSymmetricAlgebra, builtin_sequence
from semisym.coalgebra import coassociativity_check, comul, counit
from semisym.inner import left_inner, right_inner

alg = SemiSymmetricAlgebra(builtin_sequence("symmetric", QQ, 3), 3)
x = alg.basis_vector((1, 2))
print("c2(e12) =", comul(x))
print("counit(1 + e12) =", counit(alg.element({(): 1}) + x))
print("coassociative at e12:", coassociativity_check(x, 3))

forms = alg.dual()
f = forms.basis_vector((3,))
y = alg.basis_vector((1, 3))
print("left inner  e1 ⌞ e13* =", left_inner(alg.basis_vector((1,)), forms.basis_vector((1, 3))))
print("right inner e13 ⌟ e3* =", right_inner(y, f))
