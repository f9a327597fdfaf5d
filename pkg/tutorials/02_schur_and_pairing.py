"""Generalized Schur functions, Lagrange and Laplace identities, and the pairing."""

from semisym import QQ, SemiSymmetricAlgebra, builtin_sequence
from semisym.duality import pair, pair_laplace
from semisym.schur import lagrange_check, schur_direct, schur_laplace

A = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
for kind in ("exterior", "symmetric"):
    seq = builtin_sequence(kind, QQ, 3)
    chi = seq.character(3)
    print(f"{kind}: d_chi(A) = {schur_direct(A, chi)}")
    print(f"  Laplace along (1, 2):", schur_laplace(A, seq, (1, 2), ((1,), (2, 3))))

# Lagrange: <v1...vd, v1*...vd*> equals d_chi of the Gram matrix.
chi = builtin_sequence("exterior", QQ, 2).character(2)
print("Lagrange sides:", lagrange_check([[1, 2], [0, 1], [3, 1]], chi))

alg = SemiSymmetricAlgebra(builtin_sequence("symmetric", QQ, 3), 2)
xs, ys = [[1, 1], [0, 2], [1, 0]], [[2, 1], [1, 1], [0, 3]]
print("pairing:", pair(alg.decomposable(xs), alg.dual().decomposable(ys)))
print("split along (1, 2):", pair_laplace(alg.seq, xs, ys, (1, 2)))
