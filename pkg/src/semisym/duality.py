"""The canonical pairing between chi-vectors and chi-forms.

In the canonical bases the pairing is diagonal: <e_j, e_k*> = |W_j| delta(j, k).
"""

from __future__ import annotations

from .algebra import ChiVector, SemiSymmetricAlgebra, TensorVector
from .character import Character
from .errors import ContextMismatch
from .index import check_hypotheses, composition_reps
from .schur import ExactMatrix, schur_direct


def _check_pair(x, y):
    if not isinstance(x, ChiVector) or x.algebra.is_dual:
        raise ContextMismatch("left argument must be a chi-vector")
    if not isinstance(y, ChiVector) or y.algebra != x.algebra.dual():
        raise ContextMismatch("right argument must be a chi-form on the same module")


def pair(x: ChiVector, y: ChiVector):
    """<x, y> = sum_j |W_j| x_j y_j; homogeneous components of different
    degrees are orthogonal, so graded elements pair degree by degree."""
    _check_pair(x, y)
    alg = x.algebra
    total = alg.ring.zero
    small, big = (x, y) if len(x.coeffs) <= len(y.coeffs) else (y, x)
    for j, c in small.coeffs.items():
        other = big.coeffs.get(j)
        if other is not None:
            total = total + alg.ring(alg.stabilizer_order(j)) * c * other
    return total


pair_graded = pair


def cross_matrix(xs, ys, ring) -> ExactMatrix:
    """Matrix (<x_i, y_j>) of coordinate vectors against coordinate covectors."""
    xs = [[ring(c) for c in x] for x in xs]
    ys = [[ring(c) for c in y] for y in ys]
    rows = []
    for x in xs:
        row = []
        for y in ys:
            s = ring.zero
            for a, b in zip(x, y):
                s = s + a * b
            row.append(s)
        rows.append(tuple(row))
    return ExactMatrix(ring, tuple(rows))


def pair_decomposable(xs, ys, chi: Character):
    """B(x_1 chi ... chi x_d, y_1 chi^-1 ... chi^-1 y_d) = d_chi((<x_i, y_j>))."""
    if len(xs) != len(ys):
        raise ValueError("need as many covectors as vectors")
    if chi.degree != len(xs):
        raise ValueError(f"{len(xs)} vectors for a degree-{chi.degree} character")
    if not xs:
        return chi.ring.one
    check_hypotheses(chi)
    return schur_direct(cross_matrix(xs, ys, chi.ring), chi)


def dual_basis_coefficients(alg: SemiSymmetricAlgebra, d: int) -> dict:
    """1/|W_j| for each j: the forms (1/|W_j|) e_j* are dual to the e_j."""
    return {j: alg.ring(alg.stabilizer_order(j)).inverse() for j in alg.basis(d)}


def dual_basis(alg: SemiSymmetricAlgebra, d: int) -> dict:
    forms = alg.dual()
    return {j: forms.basis_vector(j, c) for j, c in dual_basis_coefficients(alg, d).items()}


def pair_tensor_power(xs, ys):
    """Pairing of x_1 (x) ... (x) x_k with y_1 (x) ... (x) y_k: the product
    of the slotwise pairings (zero unless the slot degrees agree)."""
    if len(xs) != len(ys):
        raise ValueError("tensor powers of different lengths")
    result = None
    for x, y in zip(xs, ys):
        p = pair(x, y)
        result = p if result is None else result * p
    return result


def pair_tensor(t: TensorVector, s: TensorVector):
    """Pairing of tensor vectors of [chi](E) and of its dual."""
    if t.k != s.k or t.algebra.is_dual or s.algebra != t.algebra.dual():
        raise ContextMismatch("incompatible tensor vectors")
    alg = t.algebra
    ring = alg.ring
    total = ring.zero
    for key, c in t.coeffs.items():
        other = s.coeffs.get(key)
        if other is None:
            continue
        weight = 1
        for slot in key:
            weight *= alg.stabilizer_order(slot)
        total = total + ring(weight) * c * other
    return total


def pair_laplace(seq, xs, ys, composition):
    """Both Laplace expansions of <x_1 ... x_n, y_1 ... y_n> along ``composition``.

    Returns ``(vector_side, form_side)``: the first permutes the vectors
    inside each block pairing, the second permutes the covectors.
    """
    n = len(xs)
    composition = tuple(composition)
    if sum(composition) != n or len(ys) != n:
        raise ValueError(f"composition {composition} does not fit {n} vectors")
    seq.require_valid()
    ring = seq.ring
    reps = composition_reps(seq, n, composition)
    chi_n = seq.character(n)
    positions = reps.block_positions()
    chars = [seq.character(p) for p in composition]
    first = second = ring.zero
    for rho in reps.reps:
        sign = chi_n(rho)
        t1 = t2 = sign
        for chi_p, pos in zip(chars, positions):
            xs_rho = [xs[rho(t) - 1] for t in pos]
            ys_rho = [ys[rho(t) - 1] for t in pos]
            xs_blk = [xs[t - 1] for t in pos]
            ys_blk = [ys[t - 1] for t in pos]
            t1 = t1 * pair_decomposable(xs_rho, ys_blk, chi_p)
            t2 = t2 * pair_decomposable(xs_blk, ys_rho, chi_p)
        first = first + t1
        second = second + t2
    return first, second
