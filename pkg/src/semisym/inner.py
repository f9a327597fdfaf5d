"""Left and right inner products between chi-vectors and chi-forms.

a -| f contracts a vector off the end of a form; a |- f contracts a form
off the front of a vector.  Both are computed from coset sums, with basis
formulas and an adjunction oracle as independent routes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ChiVector, SemiSymmetricAlgebra
from .duality import pair
from .errors import ContextMismatch
from .index import CompositionRepSet, composition_reps
from .linear import Accumulator


def _sides(a: ChiVector, f: ChiVector):
    alg = a.algebra
    if alg.is_dual or f.algebra != alg.dual():
        raise ContextMismatch("expected a chi-vector and a chi-form on the same module")
    alg.seq.require_valid()
    return alg, f.algebra


def _split(index, rho, cut):
    n = len(index)
    head = tuple(index[rho(t) - 1] for t in range(1, cut + 1))
    tail = tuple(index[rho(t) - 1] for t in range(cut + 1, n + 1))
    return head, tail


def _left_basis_general(alg, forms, j, ck, k, acc):
    q, n = len(j), len(k)
    if n < q:
        return
    d = n - q
    ej = alg.basis_vector(j)
    chi_n = forms.character(n)
    for rho in composition_reps(forms.seq, n, (d, q)).reps:
        head, tail = _split(k, rho, d)
        w = pair(ej, forms.project(tail))
        if not w:
            continue
        for key, c in forms.project(head).coeffs.items():
            acc.add(key, chi_n(rho) * w * c * ck)


def left_inner(a: ChiVector, f: ChiVector) -> ChiVector:
    """a -| f, characterized by <x a, f> = <x, a -| f>."""
    alg, forms = _sides(a, f)
    acc = Accumulator(alg.ring)
    for j, cj in a.coeffs.items():
        for k, ck in f.coeffs.items():
            _left_basis_general(alg, forms, j, cj * ck, k, acc)
    return forms.vector_class(forms, acc.data)


def right_inner(a: ChiVector, f: ChiVector) -> ChiVector:
    """a |- f, characterized by <a |- f, y> = <a, f y>."""
    alg, forms = _sides(a, f)
    acc = Accumulator(alg.ring)
    for k, ck in a.coeffs.items():
        n = len(k)
        for j, cj in f.coeffs.items():
            p = len(j)
            if n < p:
                continue
            ej = forms.basis_vector(j)
            chi_n = alg.character(n)
            for rho in composition_reps(alg.seq, n, (p, n - p)).reps:
                head, tail = _split(k, rho, p)
                w = pair(alg.project(head), ej)
                if not w:
                    continue
                for key, c in alg.project(tail).coeffs.items():
                    acc.add(key, chi_n(rho) * w * c * ck * cj)
    return alg.vector_class(alg, acc.data)


@dataclass(frozen=True)
class FilteredRepSet:
    """Representatives rho whose block of ``k`` at ``positions`` equals ``target`` exactly."""

    base: CompositionRepSet
    k: tuple
    target: tuple
    positions: tuple
    members: tuple

    @classmethod
    def build(cls, base: CompositionRepSet, k, target, positions) -> FilteredRepSet:
        k, target, positions = tuple(k), tuple(target), tuple(positions)
        members = tuple(
            rho for rho in base.reps if tuple(k[rho(t) - 1] for t in positions) == target
        )
        return cls(base, k, target, positions, members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def left_filter(seq, k, j) -> FilteredRepSet:
    n, q = len(k), len(j)
    base = composition_reps(seq, n, (n - q, q))
    return FilteredRepSet.build(base, k, j, range(n - q + 1, n + 1))


def right_filter(seq, k, j) -> FilteredRepSet:
    n, p = len(k), len(j)
    base = composition_reps(seq, n, (p, n - p))
    return FilteredRepSet.build(base, k, j, range(1, p + 1))


def left_inner_basis(alg: SemiSymmetricAlgebra, j, k) -> ChiVector:
    """e_j -| e_k* from the exact-match filter: |W_j| sum chi(rho) e*_(k_rho(1..d))."""
    forms = alg.dual()
    alg.seq.require_valid()
    j, k = tuple(j), tuple(k)
    if len(k) < len(j):
        return forms.zero()
    d = len(k) - len(j)
    chi_n = forms.character(len(k))
    acc = Accumulator(alg.ring)
    weight = alg.ring(alg.stabilizer_order(j))
    for rho in left_filter(forms.seq, k, j):
        head, _ = _split(k, rho, d)
        for key, c in forms.project(head).coeffs.items():
            acc.add(key, weight * chi_n(rho) * c)
    return forms.vector_class(forms, acc.data)


def right_inner_basis(alg: SemiSymmetricAlgebra, k, j) -> ChiVector:
    """e_k |- e_j* from the exact-match filter: |W_j| sum chi(rho) e_(k_rho(p+1..n))."""
    alg.seq.require_valid()
    j, k = tuple(j), tuple(k)
    if len(k) < len(j):
        return alg.zero()
    p = len(j)
    chi_n = alg.character(len(k))
    acc = Accumulator(alg.ring)
    weight = alg.ring(alg.stabilizer_order(j))
    for rho in right_filter(alg.seq, k, j):
        _, tail = _split(k, rho, p)
        for key, c in alg.project(tail).coeffs.items():
            acc.add(key, weight * chi_n(rho) * c)
    return alg.vector_class(alg, acc.data)


def left_inner_oracle(a: ChiVector, f: ChiVector) -> ChiVector:
    """Solve <x, ?> = <x a, f> over the basis x, using the diagonal Gram matrix."""
    alg, forms = _sides(a, f)
    acc = Accumulator(alg.ring)
    degs = {len(k) - len(j) for j in a.coeffs for k in f.coeffs if len(k) >= len(j)}
    for d in sorted(degs):
        for x in alg.basis(d):
            v = pair(alg.multiply(alg.basis_vector(x), a), f)
            if v:
                acc.add(x, v * alg.ring(alg.stabilizer_order(x)).inverse())
    return forms.vector_class(forms, acc.data)


def right_inner_oracle(a: ChiVector, f: ChiVector) -> ChiVector:
    """Solve <?, y> = <a, f y> over the basis y."""
    alg, forms = _sides(a, f)
    acc = Accumulator(alg.ring)
    degs = {len(k) - len(j) for k in a.coeffs for j in f.coeffs if len(k) >= len(j)}
    for d in sorted(degs):
        for y in alg.basis(d):
            v = pair(a, forms.multiply(f, forms.basis_vector(y)))
            if v:
                acc.add(y, v * alg.ring(alg.stabilizer_order(y)).inverse())
    return alg.vector_class(alg, acc.data)


def module_law_checks(alg: SemiSymmetricAlgebra, samples) -> dict:
    """Module laws on sample triples ``(a, b, f, g)``.

    Checks (a b) -| f = a -| (b -| f), 1 -| f = f, a |- (f g) = (a |- f) |- g
    and a |- 1 = a.  Returns a dict of failure lists keyed by law.
    """
    forms = alg.dual()
    report = {"left_module": [], "left_unit": [], "right_module": [], "right_unit": []}
    for i, (a, b, f, g) in enumerate(samples):
        if left_inner(alg.multiply(a, b), f) != left_inner(a, left_inner(b, f)):
            report["left_module"].append(i)
        if left_inner(alg.unit(), f) != f:
            report["left_unit"].append(i)
        if right_inner(a, forms.multiply(f, g)) != right_inner(right_inner(a, f), g):
            report["right_module"].append(i)
        if right_inner(a, forms.unit()) != a:
            report["right_unit"].append(i)
    return report
