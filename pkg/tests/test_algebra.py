from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import det, tensor_expand
from semisym.algebra import SemiSymmetricAlgebra, apply_power_map, grade_project, power_map
from semisym.character import Character, CharacterSequence, builtin_sequence
from semisym.duality import pair
from semisym.errors import ContextMismatch, DegreeOverflow, HypothesisViolation
from semisym.index import act
from semisym.perm import Permutation, PermutationGroup
from semisym.ring import QQ, modular

KINDS = ["tensor", "symmetric", "exterior", "truncated:2"]


@lru_cache(maxsize=None)
def algebra(kind, n, top=4):
    return SemiSymmetricAlgebra(builtin_sequence(kind, QQ, top), n)


def test_projection_examples():
    ext = algebra("exterior", 2)
    assert ext.project((2, 1)) == ext.element({(1, 2): -1})
    assert ext.project((1, 1)) == 0
    c3 = PermutationGroup.closure([Permutation.parse("(1 2 3)", 3)], 3)
    alg = SemiSymmetricAlgebra(CharacterSequence.single(Character.trivial(c3, QQ)), 2)
    assert alg.project((2, 1, 1)) == alg.element({(1, 1, 2): 1})


def test_decomposable_examples():
    ext = algebra("exterior", 2)
    assert ext.decomposable([(1, 3), (2, 4)]) == ext.element({(1, 2): -2})
    sym = algebra("symmetric", 2)
    assert sym.decomposable([(1, 1), (1, 1)]) == sym.element({(1, 1): 1, (1, 2): 2, (2, 2): 1})
    for kind in KINDS:
        alg = algebra(kind, 3)
        for j in alg.basis(3):
            vecs = [[int(t == x) for t in range(1, 4)] for x in j]
            assert alg.decomposable(vecs) == alg.basis_vector(j)


def test_multiplication_examples():
    ext = algebra("exterior", 2)
    e = ext.basis_vector
    assert e((2,)) * e((1,)) == ext.element({(1, 2): -1})
    assert e((1,)) * e((1,)) == 0
    sym = algebra("symmetric", 2)
    assert sym.basis_vector((1, 2)) * sym.basis_vector((1,)) == sym.element({(1, 1, 2): 1})


def test_graded_plumbing():
    alg = algebra("symmetric", 2)
    z = alg.element({(): 2, (1,): 1, (1, 2): -3})
    assert alg.unit() * z == z == z * alg.unit()
    assert grade_project(alg.unit(), 0) == alg.unit()
    assert z + (-z) == 0
    assert grade_project(z, 2) == alg.element({(1, 2): -3})
    assert z.degrees() == [0, 1, 2] and not z.is_homogeneous()


def test_errors():
    alg = algebra("exterior", 2, top=2)
    with pytest.raises(DegreeOverflow):
        alg.basis_vector((1, 2)) * alg.basis_vector((1,))
    with pytest.raises(ContextMismatch):
        alg.basis_vector((1,)) + algebra("exterior", 3).basis_vector((1,))
    with pytest.raises(ValueError):
        alg.element({(2, 1): 1})
    bad = SemiSymmetricAlgebra(builtin_sequence("symmetric", modular(6), 2), 2)
    with pytest.raises(HypothesisViolation):
        bad.basis(2)


def test_power_map_examples():
    ext = algebra("exterior", 2)
    pm = power_map(ext, [[1, 0], [0, 1]], 1)
    assert pm.matrix.tolist() == [[1, 0], [0, 1]]
    assert power_map(ext, [[2, 0], [0, 3]], 2).matrix.tolist() == [[6]]
    assert power_map(ext, [[1, 2], [3, 4]], 2).matrix.tolist() == [[-2]]
    sym = algebra("symmetric", 3)
    pm = power_map(sym, [[1 if i == j else 0 for j in range(3)] for i in range(3)], 2)
    assert pm.matrix.tolist() == [[int(i == j) for j in range(6)] for i in range(6)]


def test_exterior_top_power_is_determinant():
    ext = algebra("exterior", 3, top=3)
    u = [[2, -1, 4], [0, 3, 5], [1, 1, -2]]
    assert power_map(ext, u, 3).matrix.tolist() == [[det(u)]]


def _oracle_decomposable(alg, vecs):
    acc = {}
    for index, c in tensor_expand([[Fraction(x) for x in v] for v in vecs]):
        for k, v in alg.project(index).coeffs.items():
            acc[k] = acc.get(k, 0) + c * Fraction(str(v))
    return alg.element({k: v for k, v in acc.items() if v})


small = st.integers(-4, 4)


@pytest.mark.parametrize("kind", KINDS)
@given(data=st.data())
def test_decomposable_matches_tensor_expansion(kind, data):
    n = data.draw(st.integers(1, 3))
    d = data.draw(st.integers(1, 4))
    alg = algebra(kind, n)
    vecs = [data.draw(st.lists(small, min_size=n, max_size=n)) for _ in range(d)]
    assert alg.decomposable(vecs) == _oracle_decomposable(alg, vecs)
    assert alg.decomposable(vecs) == alg.decomposable_by_expansion(vecs)


@pytest.mark.parametrize("kind", KINDS)
@given(data=st.data())
def test_semi_symmetry_of_decomposables(kind, data):
    alg = algebra(kind, 3)
    d = data.draw(st.integers(1, 4))
    vecs = [data.draw(st.lists(small, min_size=3, max_size=3)) for _ in range(d)]
    chi = alg.character(d)
    sigma = data.draw(st.sampled_from(sorted(chi.group)))
    permuted = [vecs[sigma(t) - 1] for t in range(1, d + 1)]
    assert alg.decomposable(permuted) == alg.decomposable(vecs).scale(chi(sigma))


@pytest.mark.parametrize("kind", KINDS)
@given(data=st.data())
def test_associativity(kind, data):
    alg = algebra(kind, 2, top=5)
    degs = [data.draw(st.integers(0, 2)) for _ in range(3)]
    a, b, c = (alg.decomposable([data.draw(st.lists(small, min_size=2, max_size=2))
                                 for _ in range(d)]) for d in degs)
    assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("kind", KINDS)
@given(data=st.data())
def test_projection_is_multiplicative(kind, data):
    alg = algebra(kind, 3)
    s = tuple(data.draw(st.lists(st.integers(1, 3), min_size=0, max_size=2)))
    t = tuple(data.draw(st.lists(st.integers(1, 3), min_size=0, max_size=2)))
    assert alg.project(s + t) == alg.project(s) * alg.project(t)


@pytest.mark.parametrize("kind", KINDS)
@given(data=st.data())
def test_power_maps_are_adjoint_under_the_pairing(kind, data):
    m, n = data.draw(st.integers(1, 3)), data.draw(st.integers(1, 3))
    d = data.draw(st.integers(1, 3))
    src, tgt = algebra(kind, n), algebra(kind, m)
    u = [data.draw(st.lists(small, min_size=n, max_size=n)) for _ in range(m)]
    ut = [list(col) for col in zip(*u)]
    x = src.decomposable([data.draw(st.lists(small, min_size=n, max_size=n)) for _ in range(d)])
    y = tgt.dual().decomposable([data.draw(st.lists(small, min_size=m, max_size=m)) for _ in range(d)])
    ux = apply_power_map(power_map(src, u, d, tgt), x, tgt)
    uty = apply_power_map(power_map(tgt.dual(), ut, d, src.dual()), y, src.dual())
    assert pair(ux, y) == pair(x, uty)


def test_specialization_tables():
    for kind, size in (("tensor", 16), ("symmetric", 10), ("exterior", 6)):
        assert len(algebra(kind, 4).basis(2)) == size
