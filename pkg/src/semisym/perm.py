"""Permutations of [1, d] and fully enumerated permutation groups.

Composition follows function application: ``(a * b)(x) == a(b(x))``.
Permutations compare by their one-line word, which is the order used for
"lexicographically minimal" coset representatives.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations as _all_words

from .errors import DegreeMismatch, GroupTooLarge, NotASubgroup

DEFAULT_MAX_GROUP = 50_000


def max_group_size() -> int:
    return int(os.environ.get("SEMISYM_MAX_GROUP", DEFAULT_MAX_GROUP))


@dataclass(frozen=True, order=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.word) != list(range(1, len(self.word) + 1)):
            raise ValueError(f"{self.word} is not a permutation word")

    @classmethod
    def identity(cls, d: int) -> Permutation:
        return cls(tuple(range(1, d + 1)))

    @classmethod
    def from_cycles(cls, cycles, d: int) -> Permutation:
        word = list(range(1, d + 1))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= d or x in seen:
                    raise ValueError(f"bad cycle {cyc} for degree {d}")
                seen.add(x)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                word[a - 1] = b
        return cls(tuple(word))

    @classmethod
    def parse(cls, text: str, d: int | None = None) -> Permutation:
        """Parse cycle notation ``"(1 2)(3 4)"``/``"()"`` or one-line ``"[2,1,4,3]"``."""
        text = text.strip()
        if text.startswith("["):
            word = tuple(int(t) for t in text.strip("[]").split(",") if t.strip())
            if d is not None and len(word) != d:
                raise DegreeMismatch(f"{text} has degree {len(word)}, expected {d}")
            return cls(word)
        cycles = [
            tuple(int(t) for t in re.split(r"[\s,]+", body.strip()) if t)
            for body in re.findall(r"\(([^)]*)\)", text)
        ]
        if re.sub(r"\([^)]*\)", "", text).strip():
            raise ValueError(f"cannot parse permutation {text!r}")
        cycles = [c for c in cycles if c]
        largest = max((max(c) for c in cycles), default=0)
        if d is None:
            d = largest
        elif largest > d:
            raise DegreeMismatch(f"{text} moves points beyond degree {d}")
        return cls.from_cycles(cycles, d)

    @property
    def degree(self) -> int:
        return len(self.word)

    def __call__(self, x: int) -> int:
        return self.word[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if len(other.word) != len(self.word):
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")
        w = self.word
        return Permutation(tuple(w[x - 1] for x in other.word))

    @cached_property
    def inverse(self) -> Permutation:
        inv = [0] * len(self.word)
        for i, x in enumerate(self.word, 1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.word, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def extend(self, d: int) -> Permutation:
        """The same permutation viewed in S_d, fixing the new points."""
        if d < self.degree:
            raise DegreeMismatch(f"cannot restrict degree {self.degree} to {d}")
        return Permutation(self.word + tuple(range(self.degree + 1, d + 1)))

    def __str__(self):
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"

    def __repr__(self):
        return f"Permutation({list(self.word)})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    return a * b


def omega_shift(sigma: Permutation, target_degree: int, k: int = 1) -> Permutation:
    """Apply the shift w^k: fix 1..k and send k+i to sigma(i)+k.

    The result is padded with fixed points up to ``target_degree``.
    """
    if target_degree < sigma.degree + k:
        raise DegreeMismatch(
            f"shift by {k} of a degree-{sigma.degree} permutation needs degree >= "
            f"{sigma.degree + k}, got {target_degree}"
        )
    word = tuple(range(1, k + 1)) + tuple(x + k for x in sigma.word)
    return Permutation(word + tuple(range(len(word) + 1, target_degree + 1)))


class PermutationGroup:
    """A subgroup of S_d, stored as the sorted list of all its elements."""

    def __init__(self, degree: int, generators, elements):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self._members = frozenset(self.elements)

    @classmethod
    def closure(cls, generators, degree: int | None = None, cap: int | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree is required for an empty generator list")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(f"generator {g} is not of degree {degree}")
        cap = max_group_size() if cap is None else cap
        ident = Permutation.identity(degree)
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = g * x
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
                        if len(seen) > cap:
                            raise GroupTooLarge(f"group exceeds the cap of {cap} elements")
            frontier = nxt
        return cls(degree, gens, sorted(seen))

    @classmethod
    def trivial(cls, degree: int) -> PermutationGroup:
        return cls(degree, (), (Permutation.identity(degree),))

    @classmethod
    def symmetric(cls, degree: int) -> PermutationGroup:
        if degree <= 1:
            return cls.trivial(degree)
        gens = [Permutation.from_cycles([(1, 2)], degree)]
        if degree > 2:
            gens.append(Permutation.from_cycles([tuple(range(1, degree + 1))], degree))
        elements = [Permutation(w) for w in _all_words(range(1, degree + 1))]
        if len(elements) > max_group_size():
            raise GroupTooLarge(f"S_{degree} exceeds the group size cap")
        return cls(degree, gens, elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, sigma):
        return sigma in self._members

    def __eq__(self, other):
        if not isinstance(other, PermutationGroup):
            return NotImplemented
        return self.degree == other.degree and self._members == other._members

    def __hash__(self):
        return hash((self.degree, self._members))

    def __repr__(self):
        return f"PermutationGroup(degree={self.degree}, order={len(self)})"

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_subgroup_of(self, other: PermutationGroup) -> bool:
        return self.degree == other.degree and self._members <= other._members

    def extend(self, d: int) -> PermutationGroup:
        """This group embedded in S_d (points above the degree are fixed)."""
        if d == self.degree:
            return self
        return PermutationGroup(
            d, [g.extend(d) for g in self.generators], [g.extend(d) for g in self.elements]
        )

    def shifted(self, k: int, target_degree: int) -> PermutationGroup:
        """The image w^k(G) inside S_target_degree."""
        return PermutationGroup(
            target_degree,
            [omega_shift(g, target_degree, k) for g in self.generators],
            sorted(omega_shift(g, target_degree, k) for g in self.elements),
        )

    def stabilizer(self, index) -> PermutationGroup:
        from .index import act

        index = tuple(index)
        if len(index) != self.degree:
            raise DegreeMismatch(f"index of length {len(index)} for degree {self.degree}")
        elems = [s for s in self.elements if act(s, index) == index]
        return PermutationGroup(self.degree, elems, elems)

    def left_coset_reps(self, sub: PermutationGroup) -> list[Permutation]:
        """Lexicographically minimal representative of every left coset g*sub."""
        if not sub.is_subgroup_of(self):
            raise NotASubgroup("second argument is not a subgroup")
        seen = set()
        reps = []
        # elements are sorted, so the first unseen member of a coset is its minimum
        for g in self.elements:
            if g in seen:
                continue
            reps.append(g)
            seen.update(g * h for h in sub.elements)
        return reps


def left_coset_reps(group: PermutationGroup, sub: PermutationGroup) -> list[Permutation]:
    return group.left_coset_reps(sub)


def stabilizer(group: PermutationGroup, index) -> PermutationGroup:
    return group.stabilizer(index)


def closure(generators, degree: int | None = None, cap: int | None = None) -> PermutationGroup:
    return PermutationGroup.closure(generators, degree, cap)


def young_product(n: int, parts) -> PermutationGroup:
    """Internal direct product of groups placed on consecutive blocks of [1, n].

    ``parts`` is a sequence of ``(group, offset)``; the group of degree ``d``
    acts on ``offset+1 .. offset+d``.
    """
    covered = []
    for group, offset in parts:
        covered.extend(range(offset + 1, offset + group.degree + 1))
    if len(covered) != len(set(covered)) or any(not 1 <= x <= n for x in covered):
        raise DegreeMismatch(f"blocks {[(g.degree, o) for g, o in parts]} do not fit in [1,{n}]")
    elements = [Permutation.identity(n)]
    gens = []
    for group, offset in parts:
        if group.degree == 0:
            continue
        shifted = [omega_shift(g, n, offset) for g in group.elements]
        gens.extend(omega_shift(g, n, offset) for g in group.generators)
        elements = [a * b for a in elements for b in shifted]
    return PermutationGroup(n, gens, sorted(elements))
