from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_J, group_words, place_act
from semisym.character import Character, CharacterSequence, builtin_sequence
from semisym.errors import HypothesisViolation
from semisym.index import (
    act,
    classify,
    composition_reps,
    dot_action,
    enum_J,
    enum_J_composition,
    factorization_bijection_check,
    factorization_map,
)
from semisym.perm import Permutation, PermutationGroup
from semisym.ring import QQ, modular

P = Permutation.parse


def test_act_examples():
    assert act(P("(1 2)", 2), (1, 2)) == (2, 1)
    assert act(P("(1 2 3)", 3), (1, 1, 2)) == (2, 1, 1)
    assert act(Permutation.identity(3), (3, 1, 2)) == (3, 1, 2)


def test_classify_examples():
    sign = Character.signature(PermutationGroup.symmetric(2), QQ)
    assert classify(sign, (1, 1)) is None
    c = classify(sign, (2, 1))
    assert c.rep == (1, 2) and c.coeff == -1
    c3 = Character.trivial(PermutationGroup.closure([P("(1 2 3)", 3)], 3), QQ)
    c = classify(c3, (1, 2, 1))
    assert c.rep == (1, 1, 2) and c.coeff == 1


def test_hypotheses_enforced():
    chi = Character.trivial(PermutationGroup.symmetric(2), modular(15))
    with pytest.raises(HypothesisViolation):
        classify(chi, (1, 2))
    chi2 = Character.trivial(PermutationGroup.symmetric(2), modular(2))
    with pytest.raises(HypothesisViolation):
        enum_J(chi2, 2)


def test_enum_J_examples():
    triv3 = Character.trivial(PermutationGroup.trivial(3), QQ)
    assert len(enum_J(triv3, 2)) == 8
    s2 = Character.trivial(PermutationGroup.symmetric(2), QQ)
    assert enum_J(s2, 2) == [(1, 1), (1, 2), (2, 2)]
    c3 = Character.trivial(PermutationGroup.closure([P("(1 2 3)", 3)], 3), QQ)
    assert enum_J(c3, 2) == [(1, 1, 1), (1, 1, 2), (1, 2, 2), (2, 2, 2)]


@pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 5) for d in range(1, 5)])
def test_J_counts(n, d):
    sym = builtin_sequence("symmetric", QQ, d).character(d)
    ext = builtin_sequence("exterior", QQ, d).character(d)
    assert len(enum_J(sym, n)) == comb(n + d - 1, d)
    assert len(enum_J(ext, n)) == comb(n, d)


@pytest.mark.parametrize("gens,vals,d", [
    (["(1 2 3)"], [1], 3),
    (["(1 2)(3 4)", "(1 3)(2 4)"], [1, 1], 4),
    (["(1 2)(3 4)", "(1 3)(2 4)"], [-1, 1], 4),
    (["(1 2)", "(1 2 3)"], [-1, 1], 3),
    (["(1 3)"], [-1], 3),
])
def test_enum_J_against_brute_force(gens, vals, d):
    g = PermutationGroup.closure([P(x, d) for x in gens], d)
    chi = Character.from_generators(g, vals, QQ)
    words = group_words(g)
    values = {tuple(s.word): int(str(chi(s))) for s in g}
    for n in (1, 2, 3):
        assert enum_J(chi, n) == brute_J(words, values, n, d)


def test_composition_reps_examples():
    ext = builtin_sequence("exterior", QQ, 3)
    assert [r.word for r in composition_reps(ext, 2, (1, 1)).reps] == [(1, 2), (2, 1)]
    assert [r.word for r in composition_reps(ext, 3, (1, 2)).reps] == [(1, 2, 3), (2, 1, 3), (3, 1, 2)]
    ten = builtin_sequence("tensor", QQ, 3)
    assert len(composition_reps(ten, 3, (1, 1, 1))) == 1


def test_enum_J_composition_examples():
    ext = builtin_sequence("exterior", QQ, 3)
    assert enum_J_composition(ext, 3, (1, 2)) == [((1,), (2, 3)), ((2,), (1, 3)), ((3,), (1, 2))]
    ten = builtin_sequence("tensor", QQ, 3)
    assert enum_J_composition(ten, 3, (2, 1)) == [((1, 2), (3,))]
    assert enum_J_composition(ext, 2, (2, 0)) == [((1, 2), ())]


def test_dot_action_examples():
    ext = builtin_sequence("exterior", QQ, 3)
    M = composition_reps(ext, 3, (1, 2))
    ident = Permutation.identity(3)
    for z in M.reps:
        rep, factors = dot_action(ident, z, M)
        assert rep == z and all(f.is_identity() for f in factors)
    rep, factors = dot_action(P("(2 3)", 3), ident, M)
    assert rep == ident and factors[0].is_identity() and factors[1] == P("(1 2)", 2)
    rep, factors = dot_action(P("(1 2)", 3), ident, M)
    assert rep == P("(1 2)", 3) and all(f.is_identity() for f in factors)


@pytest.mark.parametrize("comp", [(1, 2), (2, 1), (1, 1, 1), (2, 2), (1, 3), (1, 1, 2)])
def test_dot_action_is_an_action(comp):
    n = sum(comp)
    seq = builtin_sequence("symmetric", QQ, n)
    M = composition_reps(seq, n, comp)
    G = list(seq.group(n))
    for z in M.reps:
        for a in G[:: max(1, len(G) // 6)]:
            for b in G[:: max(1, len(G) // 6)]:
                ab, _ = dot_action(a * b, z, M)
                bz, _ = dot_action(b, z, M)
                assert ab == dot_action(a, bz, M)[0]
            rep, factors = dot_action(a, z, M)
            # rep = a z u with u assembled from the block factors
            u = a * z
            offset = 0
            word = list(range(1, n + 1))
            for f, p in zip(factors, comp):
                for t in range(1, p + 1):
                    word[offset + t - 1] = f(t) + offset
                offset += p
            assert rep == u * Permutation(tuple(word))


def test_factorization_examples():
    ext = builtin_sequence("exterior", QQ, 4)
    assert factorization_bijection_check(ext, 3, 2, 1, (1, 1))
    mapping, refined = factorization_map(ext, 3, 2, 1, (1, 1))
    assert len(mapping) == 6 == len(refined)
    sym = builtin_sequence("symmetric", QQ, 4)
    mapping, refined = factorization_map(sym, 4, 2, 2, (1, 1))
    assert len(mapping) == 12 == len(refined) and factorization_bijection_check(sym, 4, 2, 2, (1, 1))
    ten = builtin_sequence("tensor", QQ, 4)
    assert factorization_bijection_check(ten, 4, 1, 3, (2, 1), variant="right")


@given(st.integers(1, 4).flatmap(lambda d: st.tuples(st.permutations(range(1, d + 1)),
                                                      st.permutations(range(1, d + 1)),
                                                      st.lists(st.integers(1, 3), min_size=d, max_size=d))))
def test_act_is_a_left_action(data):
    a, b, i = Permutation(tuple(data[0])), Permutation(tuple(data[1])), tuple(data[2])
    assert act(a * b, i) == act(a, act(b, i))
    assert act(a, i) == place_act(a.word, i)


C3_GF7 = Character.from_generators(
    PermutationGroup.closure([P("(1 2 3)", 3)], 3), [2], modular(7)
)


@given(st.lists(st.integers(1, 3), min_size=3, max_size=3), st.integers(0, 2))
def test_projection_is_semi_symmetric(i, power):
    # chi(1 2 3) = 2 has order 3 in GF(7), so chi and chi^-1 differ
    chi = C3_GF7
    s = sorted(chi.group)[power]
    i = tuple(i)
    a, b = classify(chi, act(s, i)), classify(chi, i)
    if b is None:
        assert a is None
    else:
        # in the quotient e_{s i} = chi(s)^-1 e_i
        assert a.rep == b.rep and a.coeff == chi(s).inverse() * b.coeff
