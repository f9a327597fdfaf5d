"""Comultiplication c_k and counit of [chi](E), and checks of the coalgebra laws."""

from __future__ import annotations

from .algebra import ChiVector, SemiSymmetricAlgebra, TensorVector, tensor
from .errors import ContextMismatch, DegreeMismatch
from .index import check_hypotheses, composition_reps
from .linear import Accumulator


def compositions(n: int, k: int):
    """All k-tuples of non-negative integers summing to n, in lex order."""
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def _basis_comul(alg: SemiSymmetricAlgebra, j: tuple, k: int) -> dict:
    memo = alg.__dict__.setdefault("_comul_cache", {})
    hit = memo.get((j, k))
    if hit is not None:
        return hit
    seq = alg.seq
    n = len(j)
    ring = alg.ring
    acc = Accumulator(ring)
    if n:
        chi_n = seq.character(n)
        check_hypotheses(chi_n)
    for comp in compositions(n, k):
        if n == 0:
            acc.add(((),) * k, ring.one)
            continue
        reps = composition_reps(seq, n, comp)
        for rho in reps.reps:
            parts = [((), chi_n(rho))]
            for pos in reps.block_positions():
                block = tuple(j[rho(t) - 1] for t in pos)
                image = alg.project(block)
                parts = [
                    (key + (b,), c * cb) for key, c in parts for b, cb in image.coeffs.items()
                ]
                if not parts:
                    break
            for key, c in parts:
                acc.add(key, c)
    memo[(j, k)] = acc.data
    return acc.data


def comul(x: ChiVector, k: int = 2) -> TensorVector:
    """c_k(x) in the k-fold tensor power, extended linearly from the basis."""
    if k < 1:
        raise ValueError("k must be at least 1")
    alg = x.algebra
    alg.seq.require_valid()
    acc = Accumulator(alg.ring)
    for j, c in x.coeffs.items():
        for key, cj in _basis_comul(alg, j, k).items():
            acc.add(key, c * cj)
    return TensorVector(alg, k, acc.data)


def counit(x: ChiVector):
    """The degree-0 coefficient."""
    return x[()]


def apply_comul_at(t: TensorVector, slot: int, m: int) -> TensorVector:
    """Apply c_m to one slot of ``t`` (identity on the others)."""
    if not 0 <= slot < t.k:
        raise ValueError(f"slot {slot} out of range for {t.k} slots")
    alg = t.algebra
    alg.seq.require_valid()
    acc = Accumulator(alg.ring)
    for key, c in t.coeffs.items():
        for inner, ci in _basis_comul(alg, key[slot], m).items():
            acc.add(key[:slot] + inner + key[slot + 1:], c * ci)
    return TensorVector(alg, t.k + m - 1, acc.data)


def apply_counit_at(t: TensorVector, slot: int) -> TensorVector:
    """Apply the counit to one slot, dropping it."""
    if t.k < 2:
        raise ValueError("need at least two slots")
    acc = Accumulator(t.ring)
    for key, c in t.coeffs.items():
        if key[slot] == ():
            acc.add(key[:slot] + key[slot + 1:], c)
    return TensorVector(t.algebra, t.k - 1, acc.data)


def as_vector(t: TensorVector) -> ChiVector:
    """Identify a one-slot tensor with an element of the algebra."""
    if t.k != 1:
        raise DegreeMismatch(f"{t.k} slots, expected 1")
    alg = t.algebra
    return alg.vector_class(alg, {key[0]: c for key, c in t.coeffs.items()})


def coassociativity_check(x: ChiVector, k: int = 3) -> bool:
    """c_k = (c_{k-1} (x) 1) o c_2 = (1 (x) c_{k-1}) o c_2 on x."""
    if k < 3:
        raise ValueError("k must be at least 3")
    direct = comul(x, k)
    c2 = comul(x, 2)
    left = apply_comul_at(c2, 0, k - 1)
    right = apply_comul_at(c2, 1, k - 1)
    return direct == left == right


def counit_law_check(x: ChiVector) -> bool:
    c2 = comul(x, 2)
    return as_vector(apply_counit_at(c2, 0)) == x == as_vector(apply_counit_at(c2, 1))


def duality_check(alg: SemiSymmetricAlgebra, xs, ys, composition) -> dict:
    """Compare the coproduct with the product of forms (and vice versa).

    ``xs`` are n coordinate vectors, ``ys`` n coordinate covectors, cut
    into consecutive blocks by ``composition``.  Returns the four pairings
    and a flag ``ok`` that is true when
    <c_k(x), (x) y-blocks> = <x, prod y-blocks> and
    <(x) x-blocks, c_k(y)> = <prod x-blocks, y>.
    """
    from .duality import pair, pair_tensor

    if alg.is_dual:
        raise ContextMismatch("pass the vector-side algebra")
    composition = tuple(composition)
    n = len(xs)
    if sum(composition) != n or len(ys) != n:
        raise DegreeMismatch(f"composition {composition} does not cut {n} vectors")
    forms = alg.dual()
    cuts, o = [], 0
    for p in composition:
        cuts.append((o, o + p))
        o += p
    x = alg.decomposable(xs)
    y = forms.decomposable(ys)
    x_blocks = [alg.decomposable(xs[a:b]) for a, b in cuts]
    y_blocks = [forms.decomposable(ys[a:b]) for a, b in cuts]
    k = len(composition)
    coprod_x = pair_tensor(comul(x, k), tensor(*y_blocks))
    prod_y = pair(x, forms.product(*y_blocks))
    coprod_y = pair_tensor(tensor(*x_blocks), comul(y, k))
    prod_x = pair(alg.product(*x_blocks), y)
    return {
        "coproduct_of_vector": coprod_x,
        "product_of_forms": prod_y,
        "coproduct_of_form": coprod_y,
        "product_of_vectors": prod_x,
        "ok": coprod_x == prod_y and coprod_y == prod_x,
    }
