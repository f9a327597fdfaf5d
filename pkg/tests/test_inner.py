import random
from functools import lru_cache

import pytest

from semisym.algebra import SemiSymmetricAlgebra
from semisym.character import builtin_sequence
from semisym.checks import check_inner, random_element
from semisym.duality import pair
from semisym.inner import (
    left_filter,
    left_inner,
    left_inner_basis,
    left_inner_oracle,
    module_law_checks,
    right_filter,
    right_inner,
    right_inner_basis,
    right_inner_oracle,
)
from semisym.ring import QQ


@lru_cache(maxsize=None)
def algebra(kind, n, top=4):
    return SemiSymmetricAlgebra(builtin_sequence(kind, QQ, top), n)


def test_left_examples():
    ext = algebra("exterior", 3)
    forms = ext.dual()
    f = forms.basis_vector((1, 2, 3))
    assert left_inner(ext.basis_vector((1, 2)), f) == forms.basis_vector((3,))
    assert left_inner(ext.basis_vector((1, 2)), forms.basis_vector((1,))) == 0
    assert left_inner(ext.unit(), f) == f
    assert left_inner_oracle(ext.basis_vector((1, 2)), f) == forms.basis_vector((3,))


def test_right_examples():
    ext = algebra("exterior", 3)
    a = ext.basis_vector((1, 2))
    assert right_inner(a, ext.dual().unit()) == a
    assert right_inner(a, ext.dual().basis_vector((1,))) == ext.basis_vector((2,))
    sym = algebra("symmetric", 2)
    assert right_inner(sym.basis_vector((1, 1)), sym.dual().basis_vector((1,))) == sym.element({(1,): 2})
    assert right_inner(sym.basis_vector((1,)), sym.dual().basis_vector((1, 1))) == 0


def test_left_basis_formula_examples():
    ext = algebra("exterior", 3)
    members = list(left_filter(ext.seq, (1, 2, 3), (3,)))
    assert len(members) == 1
    rho = members[0]
    expected = ext.dual().basis_vector((1, 2), ext.character(3)(rho))
    assert left_inner_basis(ext, (3,), (1, 2, 3)) == expected == ext.dual().basis_vector((1, 2))
    assert left_inner_basis(ext, (1,), (2, 3)) == 0
    ten = algebra("tensor", 2)
    assert left_inner_basis(ten, (2, 1), (1, 2, 2, 1)) == ten.dual().basis_vector((1, 2))


def test_right_basis_formula_examples():
    ext = algebra("exterior", 3)
    assert len(right_filter(ext.seq, (1, 2, 3), (1,))) == 1
    assert right_inner_basis(ext, (1, 2, 3), (1,)) == ext.basis_vector((2, 3))
    assert right_inner_basis(ext, (2, 3), (1,)) == 0
    ten = algebra("tensor", 2)
    assert right_inner_basis(ten, (1, 2, 2, 1), (1, 2)) == ten.basis_vector((2, 1))


def test_basis_formula_carries_the_stabilizer_weight():
    # e_(1,1) |- e_(1,1)* in the symmetric algebra: <e11, e11*> = 2
    sym = algebra("symmetric", 2)
    assert right_inner_basis(sym, (1, 1), (1, 1)) == sym.element({(): 2})
    assert right_inner(sym.basis_vector((1, 1)), sym.dual().basis_vector((1, 1))) == sym.element({(): 2})


@pytest.mark.parametrize("kind", ["tensor", "symmetric", "exterior", "truncated:2"])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_three_routes_agree(kind, m):
    top = 4 if (kind, m) != ("tensor", 3) else 3
    report = check_inner(algebra(kind, m), max_degree=top)
    assert report["ok"], report["failures"]


@pytest.mark.parametrize("kind", ["tensor", "symmetric", "exterior", "truncated:2"])
def test_defining_adjunctions(kind):
    alg = algebra(kind, 2)
    forms = alg.dual()
    rng = random.Random(11)
    for _ in range(15):
        q = rng.randint(0, 2)
        n = rng.randint(q, 4)
        a = random_element(alg, q, rng)
        f = random_element(forms, n, rng)
        contracted = left_inner(a, f)
        for x in alg.basis(n - q):
            ex = alg.basis_vector(x)
            assert pair(alg.multiply(ex, a), f) == pair(ex, contracted)
        b = random_element(alg, n, rng)
        g = random_element(forms, q, rng)
        contracted = right_inner(b, g)
        for y in alg.basis(n - q):
            ey = forms.basis_vector(y)
            assert pair(contracted, ey) == pair(b, forms.multiply(g, ey))


@pytest.mark.parametrize("kind", ["tensor", "symmetric", "exterior", "truncated:2"])
def test_module_laws(kind):
    alg = algebra(kind, 2)
    forms = alg.dual()
    rng = random.Random(5)
    samples = []
    for _ in range(12):
        p = rng.randint(0, 2)
        q = rng.randint(0, 4 - p)
        r = rng.randint(0, 4)
        samples.append((random_element(alg, p, rng), random_element(alg, q, rng),
                        random_element(forms, r, rng), random_element(forms, rng.randint(0, 4 - r), rng)))
    report = module_law_checks(alg, samples)
    assert not any(report.values()), report


def test_out_of_range_degrees_vanish():
    alg = algebra("symmetric", 2)
    assert left_inner(alg.basis_vector((1, 1, 2)), alg.dual().basis_vector((1,))) == 0
    assert right_inner(alg.basis_vector((1,)), alg.dual().basis_vector((1, 2))) == 0
    assert left_inner_basis(alg, (1, 1), (1,)) == 0
