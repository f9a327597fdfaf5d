import random
from functools import lru_cache

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semisym.algebra import SemiSymmetricAlgebra, TensorVector
from semisym.character import builtin_sequence
from semisym.coalgebra import (
    apply_comul_at,
    coassociativity_check,
    compositions,
    comul,
    counit,
    counit_law_check,
    duality_check,
)
from semisym.ring import QQ

KINDS = ["tensor", "symmetric", "exterior", "truncated:2"]


@lru_cache(maxsize=None)
def algebra(kind, n, top=5):
    return SemiSymmetricAlgebra(builtin_sequence(kind, QQ, top), n)


def tv(alg, k, terms):
    return TensorVector(alg, k, terms)


def test_comul_examples():
    sym = algebra("symmetric", 2)
    assert comul(sym.basis_vector((1, 1))) == tv(sym, 2, {((1, 1), ()): 1, ((1,), (1,)): 2, ((), (1, 1)): 1})
    ext = algebra("exterior", 2)
    assert comul(ext.basis_vector((1, 2))) == tv(
        ext, 2, {((1, 2), ()): 1, ((1,), (2,)): 1, ((2,), (1,)): -1, ((), (1, 2)): 1})
    ten = algebra("tensor", 2)
    assert comul(ten.basis_vector((1, 2))) == tv(ten, 2, {((1, 2), ()): 1, ((1,), (2,)): 1, ((), (1, 2)): 1})


def test_counit_examples():
    alg = algebra("symmetric", 2)
    assert counit(alg.unit()) == 1
    assert counit(alg.basis_vector((1, 2))) == 0
    assert counit(alg.element({(): 5, (1,): 1})) == 5


def test_coassociativity_examples():
    assert coassociativity_check(algebra("symmetric", 2).basis_vector((1, 1, 2)), 3)
    assert coassociativity_check(algebra("exterior", 3).basis_vector((1, 2, 3)), 3)
    assert coassociativity_check(algebra("tensor", 2).basis_vector((2, 1, 2)), 3)


def test_compositions_include_zero_parts():
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert len(list(compositions(3, 3))) == 10


@pytest.mark.parametrize("kind", KINDS)
def test_grading_of_summands(kind):
    alg = algebra(kind, 2)
    for d in range(5):
        for j in alg.basis(d):
            for k in (2, 3):
                for key, _ in comul(alg.basis_vector(j), k):
                    assert sum(len(s) for s in key) == d


def test_tensor_comul_is_deconcatenation():
    alg = algebra("tensor", 2)
    for j in alg.basis(4):
        expected = {(j[:a], j[a:]): 1 for a in range(5)}
        assert comul(alg.basis_vector(j)) == tv(alg, 2, expected)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("k", [3, 4])
def test_coassociativity_on_basis(kind, k):
    alg = algebra(kind, 2)
    for d in range(5 if k == 3 else 4):
        for j in alg.basis(d):
            x = alg.basis_vector(j)
            assert coassociativity_check(x, k)
            assert counit_law_check(x)


def test_form_side_comultiplication():
    forms = algebra("exterior", 3).dual()
    x = forms.basis_vector((1, 2, 3))
    assert coassociativity_check(x, 3) and counit_law_check(x)


@pytest.mark.parametrize("kind", KINDS)
@given(data=st.data())
def test_counit_law_on_random_elements(kind, data):
    alg = algebra(kind, 2)
    coeffs = {}
    for d in range(4):
        for j in alg.basis(d):
            c = data.draw(st.integers(-3, 3))
            if c:
                coeffs[j] = c
    x = alg.element(coeffs)
    assert counit_law_check(x)
    c2 = comul(x, 2)
    assert apply_comul_at(c2, 0, 2) == apply_comul_at(c2, 1, 2)


@pytest.mark.parametrize("kind", ["tensor", "symmetric", "exterior"])
def test_duality_with_products(kind):
    rng = random.Random(3)
    alg = algebra(kind, 3, top=4)
    for n in range(1, 5):
        for k in (2, 3):
            comp = rng.choice(list(compositions(n, k)))
            xs = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(n)]
            ys = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(n)]
            report = duality_check(alg, xs, ys, comp)
            assert report["ok"], report
