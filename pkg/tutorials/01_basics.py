"""Tensor, symmetric and exterior algebras as one family.

Each builtin character sequence picks a character of S_d at every degree;
the algebra is spanned by canonical index words and multiplies by
concatenation followed by projection.
"""

from semisym import QQ, SemiSymmetricAlgebra, builtin_sequence

for kind in ("tensor", "symmetric", "exterior", "truncated:2"):
    alg = SemiSymmetricAlgebra(builtin_sequence(kind, QQ, 4), 3)
    sizes = [len(alg.basis(d)) for d in range(5)]
    print(f"{kind:12s} basis sizes by degree: {sizes}")

ext = SemiSymmetricAlgebra(builtin_sequence("exterior", QQ, 3), 3)
e1, e2 = ext.basis_vector((1,)), ext.basis_vector((2,))
print("e2 * e1 in the exterior algebra:", e2 * e1)
print("e1 * e1 in the exterior algebra:", e1 * e1)

# A decomposable element v1 v2 has the 2x2 minors of [v1 v2] as coefficients.
print("(e1 + 2e2)(3e1 + e3):", ext.decomposable([[1, 2, 0], [3, 0, 1]]))
