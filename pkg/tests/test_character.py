import pytest

from semisym.character import (
    Character,
    CharacterSequence,
    builtin_sequence,
    character_from_generators,
    invert_character,
    validate_sequence,
)
from semisym.errors import InconsistentCharacter, NonUnitValue
from semisym.perm import Permutation, PermutationGroup
from semisym.ring import EISENSTEIN, QQ, ZZ, modular

P = Permutation.parse


def klein():
    return PermutationGroup.closure([P("(1 2)(3 4)", 4), P("(1 3)(2 4)", 4)], 4)


def test_klein_character_over_z15():
    chi = character_from_generators(klein(), [4, 4], modular(15))
    assert chi(P("(1 4)(2 3)", 4)) == 1


def test_cyclic_character_over_eisenstein():
    g = PermutationGroup.closure([P("(1 2 3)", 3)], 3)
    w = EISENSTEIN.epsilon
    chi = character_from_generators(g, [w], EISENSTEIN)
    assert chi(P("(1 3 2)", 3)) == w * w
    assert invert_character(chi)(P("(1 2 3)", 3)) == w * w
    assert invert_character(invert_character(chi)) == chi


def test_bad_generator_values():
    s2 = PermutationGroup.symmetric(2)
    with pytest.raises(InconsistentCharacter):
        character_from_generators(s2, [2], QQ)
    with pytest.raises(NonUnitValue):
        character_from_generators(s2, [2], ZZ)


def test_self_inverse_characters():
    s3 = PermutationGroup.symmetric(3)
    sign = Character.signature(s3, QQ)
    assert invert_character(sign) == sign
    triv = Character.trivial(s3, QQ)
    assert invert_character(triv) == triv


def test_restriction_matches_generator_extension():
    s3 = PermutationGroup.symmetric(3)
    sign = Character.signature(s3, QQ)
    sub = PermutationGroup.closure([P("(1 2 3)", 3)], 3)
    assert sign.restrict(sub) == character_from_generators(sub, [1], QQ)
    sub2 = PermutationGroup.closure([P("(1 3)", 3)], 3)
    assert sign.restrict(sub2) == character_from_generators(sub2, [-1], QQ)


@pytest.mark.parametrize("kind", ["tensor", "symmetric", "exterior", "truncated:2"])
def test_builtins_are_valid(kind):
    seq = builtin_sequence(kind, QQ, 5)
    assert validate_sequence(seq).ok
    for d in range(1, 6):
        assert all(v == 1 or v == -1 for v in seq.character(d).values.values())
    assert seq.inverse() is seq


def test_builtin_shapes():
    sym = builtin_sequence("symmetric", QQ, 4)
    assert all(len(sym.group(d)) == [1, 1, 2, 6, 24][d] for d in range(5))
    tr = builtin_sequence("truncated", QQ, 4, k=2)
    assert len(tr.group(2)) == 1 and len(tr.group(3)) == 6
    assert tr.character(3)(P("(1 2)", 3)) == -1


def test_alternating_parity_sequence_fails_restriction():
    stages = {}
    for d in range(1, 5):
        g = PermutationGroup.symmetric(d)
        stages[d] = Character.signature(g, QQ) if d % 2 == 0 else Character.trivial(g, QQ)
    report = validate_sequence(CharacterSequence(QQ, stages))
    assert not report.ok
    assert any(f.startswith("restriction:") for f in report.failures)


def test_gap_in_stages_is_reported():
    s = {1: Character.trivial(PermutationGroup.trivial(1), QQ),
         3: Character.trivial(PermutationGroup.trivial(3), QQ)}
    report = validate_sequence(CharacterSequence(QQ, s))
    assert report.failures[0].startswith("admissibility")


def test_non_involutive_values_fail_over_eisenstein():
    w = EISENSTEIN.epsilon
    stages = {1: Character.trivial(PermutationGroup.trivial(1), EISENSTEIN),
              2: Character.trivial(PermutationGroup.trivial(2), EISENSTEIN)}
    c3 = PermutationGroup.closure([P("(1 2 3)", 3)], 3)
    stages[3] = character_from_generators(c3, [w], EISENSTEIN)
    report = validate_sequence(CharacterSequence(EISENSTEIN, stages))
    assert any(f.startswith("involution:") for f in report.failures)
