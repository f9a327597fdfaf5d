"""Monomial W-modules: a free module whose basis W permutes up to unit scalars.

``sigma e_i = gamma_i(sigma) e_{sigma i}`` with the cocycle law
``gamma_i(sigma tau) = gamma_{tau i}(sigma) gamma_i(tau)``.
"""

from __future__ import annotations

from itertools import product

from .character import Character
from .errors import HypothesisViolation, NonUnitValue
from .index import act
from .linear import Accumulator, SparseVector
from .perm import PermutationGroup


class ModuleVector(SparseVector):
    __slots__ = ("module",)

    def __init__(self, module: MonomialModule, coeffs=None):
        super().__init__(module.ring, coeffs)
        self.module = module

    def _context(self):
        return id(self.module)

    def _copy_context(self, obj):
        obj.module = self.module


class MonomialModule:
    """Free module with basis indexed by ``index_set`` and a monomial W-action.

    ``action(sigma, i)`` gives the permuted index and ``gamma(i, sigma)`` the
    unit scalar.  Both default to the tensor-power case: place permutation
    and gamma identically 1.
    """

    def __init__(self, group: PermutationGroup, index_set, ring, action=None, gamma=None,
                 validate=True):
        self.group = group
        self.index_set = sorted(index_set)
        self.ring = ring
        self._action = action or act
        self._gamma = gamma
        self._indices = set(self.index_set)
        if validate:
            self.validate()

    @classmethod
    def tensor_power(cls, group: PermutationGroup, n: int, ring) -> MonomialModule:
        indices = list(product(range(1, n + 1), repeat=group.degree))
        return cls(group, indices, ring, validate=False)

    def action(self, sigma, i):
        return self._action(sigma, i)

    def gamma(self, i, sigma):
        if self._gamma is None:
            return self.ring.one
        return self.ring(self._gamma(i, sigma))

    def validate(self):
        for i in self.index_set:
            for s in self.group:
                if self.action(s, i) not in self._indices:
                    raise ValueError(f"{s} maps {i} outside the index set")
                if not self.gamma(i, s).is_unit():
                    raise NonUnitValue(f"gamma_{i}({s}) is not a unit")
        for i in self.index_set:
            for s in self.group:
                for t in self.group:
                    if self.action(s * t, i) != self.action(s, self.action(t, i)):
                        raise ValueError(f"not a left action at {s}, {t}, {i}")
                    lhs = self.gamma(i, s * t)
                    rhs = self.gamma(self.action(t, i), s) * self.gamma(i, t)
                    if lhs != rhs:
                        raise ValueError(f"cocycle law fails at i={i}, sigma={s}, tau={t}")

    def basis_vector(self, i, coeff=1) -> ModuleVector:
        if i not in self._indices:
            raise KeyError(i)
        return ModuleVector(self, {i: coeff})

    def vector(self, coeffs) -> ModuleVector:
        return ModuleVector(self, coeffs)

    def apply(self, sigma, z: ModuleVector) -> ModuleVector:
        acc = Accumulator(self.ring)
        for i, c in z.coeffs.items():
            acc.add(self.action(sigma, i), c * self.gamma(i, sigma))
        return ModuleVector(self, acc.data)

    def stabilizer(self, i):
        return [s for s in self.group if self.action(s, i) == i]

    def orbit(self, i):
        return sorted({self.action(s, i) for s in self.group})


def _weighted_sum(M: MonomialModule, weights, z: ModuleVector) -> ModuleVector:
    acc = Accumulator(M.ring)
    for s in M.group:
        w = weights(s)
        for i, c in z.coeffs.items():
            acc.add(M.action(s, i), w * c * M.gamma(i, s))
    return ModuleVector(M, acc.data)


def a_chi(M: MonomialModule, chi: Character, z: ModuleVector) -> ModuleVector:
    """The averaging operator |W|^-1 sum chi^-1(sigma) sigma applied to ``z``."""
    scale = M.ring(len(M.group)).inverse()
    inv = {s: v.inverse() for s, v in chi.values.items()}
    return _weighted_sum(M, inv.__getitem__, z).scale(scale)


def A_chi_unnormalized(M: MonomialModule, weight: Character, z: ModuleVector) -> ModuleVector:
    """sum weight(sigma) sigma z, with no division by |W|."""
    return _weighted_sum(M, weight.values.__getitem__, z)


def classify_indices(M: MonomialModule, chi: Character):
    """Return ``(I, I0, J, J0)`` for the module and character.

    ``I`` holds the indices where gamma_i agrees with chi on the stabilizer,
    ``I0`` the rest; ``J``/``J0`` are their lex-minimal orbit members.
    """
    I, I0 = [], []
    for i in M.index_set:
        stab = M.stabilizer(i)
        if all(M.gamma(i, s) == chi(s) for s in stab):
            I.append(i)
        else:
            I0.append(i)
    reps = {min(M.orbit(i)) for i in M.index_set}
    I_set = set(I)
    for i in I:
        if any(M.action(s, i) not in I_set for s in M.group):
            raise AssertionError(f"I(chi, M) is not W-stable at {i}")
    J = sorted(r for r in reps if r in I_set)
    J0 = sorted(r for r in reps if r not in I_set)
    return I, I0, J, J0


def theorem_II6_bases(M: MonomialModule, chi: Character):
    """Bases of the kernel and the image of a_chi and of the quotient.

    Returns a dict with ``basis_chiM`` (the difference family together with
    the vanishing representatives), ``basis_Mchi`` (the a_chi images) and
    ``basis_quotient`` (indices whose classes form a basis of M/_chi M).
    """
    ring = M.ring
    if not ring.is_integral_domain:
        raise HypothesisViolation(f"{ring} is not an integral domain")
    if not ring(len(M.group)).is_unit():
        raise HypothesisViolation(f"|W| = {len(M.group)} is not invertible in {ring}")
    _, _, J, J0 = classify_indices(M, chi)
    chi_m = []
    for i in sorted(J + J0):
        stab = PermutationGroup(M.group.degree, (), sorted(M.stabilizer(i)))
        for s in M.group.left_coset_reps(stab):
            if s in stab:
                continue
            coeff = chi(s) * M.gamma(i, s)
            chi_m.append(ModuleVector(M, {i: 1}) - ModuleVector(M, {M.action(s, i): coeff}))
    chi_m.extend(M.basis_vector(i) for i in J0)
    return {
        "basis_chiM": chi_m,
        "basis_Mchi": [a_chi(M, chi, M.basis_vector(j)) for j in J],
        "basis_quotient": list(J),
    }
