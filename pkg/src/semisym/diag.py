"""The two freeness counterexamples, reduced to integer linear algebra.

Neither ring satisfies the standing hypotheses (Z/15 is not a domain, 3 is
not a unit in Z[w]), so the canonical-basis machinery is bypassed here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from sympy import Matrix, ZZ as SYMPY_ZZ
from sympy.matrices.normalforms import invariant_factors

from .character import Character
from .index import act
from .monomial import MonomialModule, a_chi
from .perm import Permutation, PermutationGroup
from .ring import EISENSTEIN, _is_prime, modular


@dataclass(frozen=True)
class RankReport:
    p: int
    rank: int
    shape: tuple


@dataclass(frozen=True)
class SnfReport:
    factors: tuple = field(default_factory=tuple)

    @property
    def rank(self) -> int:
        return sum(1 for f in self.factors if f)

    def has_torsion(self) -> bool:
        return any(f > 1 for f in self.factors)


def rank_mod_p(A, p: int) -> RankReport:
    """Rank of an integer matrix over the field with p elements."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    rows = [[x % p for x in r] for r in A]
    shape = (len(rows), len(rows[0]) if rows else 0)
    rank = 0
    for col in range(shape[1]):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return RankReport(p, rank, shape)


def smith_normal_form(A) -> SnfReport:
    """Invariant factors d_1 | d_2 | ... of an integer matrix (zeros last)."""
    A = [list(map(int, r)) for r in A]
    if not A or not A[0]:
        return SnfReport(())
    factors = invariant_factors(Matrix(A), domain=SYMPY_ZZ)
    out = [abs(int(f)) for f in factors]
    nonzero = [f for f in out if f]
    return SnfReport(tuple(nonzero + [0] * (len(out) - len(nonzero))))


def klein_character():
    ring = modular(15)
    gens = [Permutation.parse("(1 2)(3 4)", 4), Permutation.parse("(1 3)(2 4)", 4)]
    group = PermutationGroup.closure(gens, 4)
    chi = Character.from_generators(group, [4, 4], ring)
    return group, chi


def z15_counterexample() -> dict:
    """T^4(Z15^2) under the Klein four group with chi = 4 on both generators."""
    group, chi = klein_character()
    ring = chi.ring
    M = MonomialModule.tensor_power(group, 2, ring)
    indices = M.index_set
    pos = {i: c for c, i in enumerate(indices)}

    def row(vec):
        r = [0] * len(indices)
        for i, c in vec.coeffs.items():
            r[pos[i]] = c.value
        return r

    image = [row(a_chi(M, chi, M.basis_vector(i))) for i in indices]
    reps = sorted({min(M.orbit(i)) for i in indices})
    generators = []
    for j in reps:
        v = a_chi(M, chi, M.basis_vector(j))
        if v:
            generators.append({"index": list(j), "support": sorted(list(k) for k in v.coeffs)})
    relations = []
    for i in indices:
        for s in group:
            v = [0] * len(indices)
            v[pos[i]] += chi(s).value
            v[pos[act(s, i)]] -= 1
            relations.append([x % 15 for x in v])
    r3 = rank_mod_p(image, 3).rank
    r5 = rank_mod_p(image, 5).rank
    k3 = rank_mod_p(relations, 3).rank
    k5 = rank_mod_p(relations, 5).rank
    dim = len(indices)
    return {
        "ring": "mod:15",
        "group": [str(g) for g in group],
        "character": {str(g): str(chi(g)) for g in group},
        "module_rank": dim,
        "image_rank_mod_3": r3,
        "image_rank_mod_5": r5,
        "image_cardinality": 3**r3 * 5**r5,
        "image_cardinality_factored": f"3^{r3}*5^{r5}",
        "image_generators": generators,
        "relation_rank_mod_3": k3,
        "relation_rank_mod_5": k5,
        "quotient_dims": [dim - k3, dim - k5],
        "image_free": r3 == r5,
        "quotient_free": dim - k3 == dim - k5,
    }


def _lattice_row(coeffs: dict, pos: dict) -> list:
    r = [0] * (2 * len(pos))
    for i, c in coeffs.items():
        a, b = c.value
        r[2 * pos[i]] += a
        r[2 * pos[i] + 1] += b
    return r


def eisenstein_counterexample() -> dict:
    """T^3(Z[w]^2) under the cyclic group <(1 2 3)> with chi(1 2 3) = w.

    Z[w]-modules are handled as Z-lattices on the basis {e_i, w e_i}.
    """
    ring = EISENSTEIN
    w = ring.epsilon
    group = PermutationGroup.closure([Permutation.parse("(1 2 3)", 3)], 3)
    chi = Character.from_generators(group, [w], ring)
    indices = list(product((1, 2), repeat=3))
    pos = {i: c for c, i in enumerate(indices)}
    relations = []
    for i in indices:
        for s in group:
            if s.is_identity():
                continue
            for scalar in (ring.one, w):
                coeffs = {}
                coeffs[i] = coeffs.get(i, ring.zero) + chi(s) * scalar
                j = act(s, i)
                coeffs[j] = coeffs.get(j, ring.zero) - scalar
                relations.append(_lattice_row(coeffs, pos))
    snf = smith_normal_form(relations)
    e111 = _lattice_row({(1, 1, 1): ring.one}, pos)
    augmented = smith_normal_form(relations + [e111])
    # L is contained in L + Z e111, so equality holds iff ranks and indices agree
    same = augmented.rank == snf.rank and _prod(augmented) == _prod(snf)
    return {
        "ring": "eisenstein",
        "group": [str(g) for g in group],
        "character": {str(g): str(chi(g)) for g in group},
        "lattice_rank": 2 * len(indices),
        "relation_count": len(relations),
        "invariant_factors": list(snf.factors),
        "relation_rank": snf.rank,
        "torsion_factors": [f for f in snf.factors if f > 1],
        "torsion": snf.has_torsion(),
        "e111_in_relations": same,
        "quotient_free": not snf.has_torsion(),
    }


def _prod(report: SnfReport) -> int:
    out = 1
    for f in report.factors:
        if f:
            out *= f
    return out
