"""Linear unit-valued characters of permutation groups and sequences of them."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import DegreeOverflow, InconsistentCharacter, NonUnitValue, SemisymError
from .perm import Permutation, PermutationGroup, omega_shift
from .ring import Ring


class Character:
    """A group homomorphism from a permutation group into the units of a ring."""

    def __init__(self, group: PermutationGroup, values: dict, ring: Ring):
        self.group = group
        self.values = dict(values)
        self.ring = ring
        # per-character memo used by the index module
        self._cache: dict = {}

    def __call__(self, sigma: Permutation):
        return self.values[sigma]

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.group == other.group and self.values == other.values

    def __hash__(self):
        return hash((self.group, frozenset(self.values.items())))

    def __repr__(self):
        gens = ", ".join(f"{g}->{self.values[g]}" for g in self.group.generators)
        return f"Character(degree={self.group.degree}, order={len(self.group)}, {{{gens}}})"

    @property
    def degree(self) -> int:
        return self.group.degree

    @classmethod
    def trivial(cls, group: PermutationGroup, ring: Ring) -> Character:
        one = ring.one
        return cls(group, {g: one for g in group}, ring)

    @classmethod
    def signature(cls, group: PermutationGroup, ring: Ring) -> Character:
        one, minus = ring.one, -ring.one
        return cls(group, {g: one if g.sign() > 0 else minus for g in group}, ring)

    @classmethod
    def from_generators(cls, group: PermutationGroup, gen_values, ring: Ring) -> Character:
        """Extend generator values multiplicatively over ``group``.

        Raises :class:`NonUnitValue` for a non-invertible value and
        :class:`InconsistentCharacter` when the assignment does not extend
        to a homomorphism.
        """
        gens = list(group.generators)
        vals = [ring(v) for v in gen_values]
        if len(vals) != len(gens):
            raise ValueError(f"{len(gens)} generators but {len(vals)} values")
        for g, v in zip(gens, vals):
            if not v.is_unit():
                raise NonUnitValue(f"value {v} for {g} is not a unit of {ring}")
        values = {group.identity: ring.one}
        frontier = [group.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g, v in zip(gens, vals):
                    y = g * x
                    val = v * values[x]
                    if y in values:
                        if values[y] != val:
                            raise InconsistentCharacter(
                                f"two factorizations of {y} give {values[y]} and {val}"
                            )
                    else:
                        values[y] = val
                        nxt.append(y)
            frontier = nxt
        if len(values) != len(group):
            raise ValueError("generators do not generate the group")
        chi = cls(group, values, ring)
        bad = chi.homomorphism_failure()
        if bad is not None:
            raise InconsistentCharacter(bad)
        return chi

    def homomorphism_failure(self) -> str | None:
        """Description of the first pair violating multiplicativity, if any."""
        vals = self.values
        if vals[self.group.identity] != self.ring.one:
            return "value at the identity is not 1"
        for a in self.group:
            va = vals[a]
            for b in self.group:
                if vals[a * b] != va * vals[b]:
                    return f"chi({a}*{b}) != chi({a})*chi({b})"
        return None

    def inverse(self) -> Character:
        inv = self._cache.get("inverse")
        if inv is None:
            if self.is_involutive():
                inv = self
            else:
                inv = Character(self.group, {g: v.inverse() for g, v in self.values.items()}, self.ring)
                inv._cache["inverse"] = self
            self._cache["inverse"] = inv
        return inv

    def restrict(self, sub: PermutationGroup) -> Character:
        return Character(sub, {g: self.values[g] for g in sub}, self.ring)

    def is_trivial_on(self, elements) -> bool:
        one = self.ring.one
        return all(self.values[g] == one for g in elements)

    def is_involutive(self) -> bool:
        one = self.ring.one
        return all(v * v == one for v in self.values.values())


def invert_character(chi: Character) -> Character:
    return chi.inverse()


def character_from_generators(group, gen_values, ring) -> Character:
    return Character.from_generators(group, gen_values, ring)


@dataclass
class ValidationReport:
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "valid" if self.ok else "\n".join(self.failures)


class CharacterSequence:
    """Characters chi_d on groups W_d <= S_d for the degrees d = 1..max_degree.

    Degree 0 is always present with the trivial group.  A sequence built
    with :meth:`single` carries one degree only; it serves the per-degree
    operations (bases, pairings, Schur functions) that need no algebra
    structure.
    """

    def __init__(self, ring: Ring, stages: dict[int, Character], name: str | None = None):
        self.ring = ring
        self.stages = dict(stages)
        self.name = name
        for d, chi in self.stages.items():
            if chi.degree != d:
                raise ValueError(f"stage {d} holds a character of degree {chi.degree}")
            if chi.ring != ring:
                raise ValueError(f"stage {d} is over {chi.ring}, not {ring}")
        if 0 not in self.stages:
            self.stages[0] = Character.trivial(PermutationGroup.trivial(0), ring)

    @classmethod
    def single(cls, chi: Character) -> CharacterSequence:
        return cls(chi.ring, {chi.degree: chi}, name=f"single(d={chi.degree})")

    @property
    def max_degree(self) -> int:
        return max(self.stages)

    def is_complete(self) -> bool:
        return all(d in self.stages for d in range(self.max_degree + 1))

    def character(self, d: int) -> Character:
        try:
            return self.stages[d]
        except KeyError:
            raise DegreeOverflow(f"degree {d} is not covered by this sequence") from None

    def group(self, d: int) -> PermutationGroup:
        return self.character(d).group

    def inverse(self) -> CharacterSequence:
        if self._self_inverse:
            return self
        inv = self.__dict__.get("_inverse")
        if inv is None:
            name = f"inverse({self.name})" if self.name else None
            inv = CharacterSequence(
                self.ring, {d: c.inverse() for d, c in self.stages.items()}, name=name
            )
            inv._inverse = self
            self._inverse = inv
        return inv

    @cached_property
    def _self_inverse(self) -> bool:
        return all(c.is_involutive() for c in self.stages.values())

    @cached_property
    def validation(self) -> ValidationReport:
        return validate_sequence(self)

    def require_valid(self):
        report = self.validation
        if not report.ok:
            raise InvalidSequence(str(report))

    def __repr__(self):
        label = self.name or "custom"
        return f"CharacterSequence({label}, ring={self.ring}, D={self.max_degree})"


class InvalidSequence(SemisymError, ValueError):
    pass


def validate_sequence(seq: CharacterSequence) -> ValidationReport:
    """Check that ``seq`` is an omega-invariant sequence of characters.

    Every violated condition is listed; an empty report means the sequence
    defines an associative graded algebra.
    """
    report = ValidationReport()
    fail = report.failures.append
    top = seq.max_degree
    missing = [d for d in range(1, top + 1) if d not in seq.stages]
    if missing:
        fail(f"admissibility: no stage for degrees {missing}")
        return report
    one = seq.ring.one
    for d in range(1, top + 1):
        chi = seq.stages[d]
        if chi.group.degree != d:
            fail(f"admissibility: W_{d} is not a subgroup of S_{d}")
        problem = chi.homomorphism_failure()
        if problem:
            fail(f"character chi_{d}: {problem}")
        for g, v in chi.values.items():
            if not v.is_unit():
                fail(f"character chi_{d}: value {v} at {g} is not a unit")
                break
    for d in range(1, top):
        w_d, w_next = seq.stages[d].group, seq.stages[d + 1].group
        chi_d, chi_next = seq.stages[d], seq.stages[d + 1]
        for g in w_d:
            up = g.extend(d + 1)
            if up not in w_next:
                fail(f"omega-stability: W_{d} is not contained in W_{d + 1} ({g})")
                break
        else:
            for g in w_d:
                if chi_next(g.extend(d + 1)) != chi_d(g):
                    fail(
                        f"restriction: chi_{d + 1} restricted to W_{d} differs from "
                        f"chi_{d} at {g}"
                    )
                    break
        for g in w_d:
            shifted = omega_shift(g, d + 1)
            if shifted not in w_next:
                fail(f"omega-stability: omega(W_{d}) is not contained in W_{d + 1} ({g})")
                break
        else:
            for g in w_d:
                if chi_next(omega_shift(g, d + 1)) != chi_d(g):
                    fail(
                        f"restriction: chi_{d + 1} composed with omega differs from "
                        f"chi_{d} at {g}"
                    )
                    break
    for d in range(1, top + 1):
        for g, v in seq.stages[d].values.items():
            if v * v != one:
                fail(f"involution: chi_{d}({g}) = {v} does not square to 1")
                break
            if seq.ring.is_integral_domain and v != one and v != -one:
                fail(f"involution: chi_{d}({g}) = {v} is not +1 or -1")
                break
    return report


BUILTIN_KINDS = ("tensor", "symmetric", "exterior", "truncated")


def builtin_sequence(kind: str, ring: Ring, max_degree: int, k: int | None = None):
    """One of the named sequences: tensor, symmetric, exterior or truncated(k).

    ``kind`` may also be spelled ``"truncated:k"``.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    if kind.startswith("truncated:"):
        kind, k = "truncated", int(kind.split(":", 1)[1])
    stages = {}
    for d in range(1, max_degree + 1):
        if kind == "tensor" or (kind == "truncated" and d <= k):
            chi = Character.trivial(PermutationGroup.trivial(d), ring)
        elif kind == "symmetric":
            chi = Character.trivial(PermutationGroup.symmetric(d), ring)
        elif kind in ("exterior", "truncated"):
            chi = Character.signature(PermutationGroup.symmetric(d), ring)
        else:
            raise ValueError(f"unknown builtin sequence {kind!r}")
        stages[d] = chi
    if kind == "truncated":
        if k is None:
            raise ValueError("truncated sequence needs k")
        name = f"truncated:{k}"
    else:
        name = kind
    return CharacterSequence(ring, stages, name=name)
