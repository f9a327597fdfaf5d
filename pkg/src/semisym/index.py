"""Multi-index combinatorics for semi-symmetric powers.

A multi-index is a plain tuple of 1-based integers.  Permutations act by
place permutation, ``(sigma . i)_k = i_{sigma^-1(k)}``, so that
``x_sigma(1) ... x_sigma(d) = chi(sigma) x_1 ... x_d`` in the quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

from .character import Character, CharacterSequence
from .errors import DegreeMismatch, EnumerationTooLarge, HypothesisViolation
from .perm import Permutation, PermutationGroup, omega_shift, young_product

MAX_INDEX_ENUMERATION = 10**6


class Canonical(NamedTuple):
    """Orbit-canonical form of a multi-index: e_i = coeff * e_rep."""

    rep: tuple
    coeff: object


def act(sigma: Permutation, index) -> tuple:
    if len(index) != sigma.degree:
        raise DegreeMismatch(f"permutation of degree {sigma.degree} on index {tuple(index)}")
    out = [0] * len(index)
    for t, s in enumerate(sigma.word):
        out[s - 1] = index[t]
    return tuple(out)


def check_hypotheses(chi: Character):
    """Raise unless the ring is a domain and |W| is a unit in it."""
    ok = chi._cache.get("hyp")
    if ok is None:
        ring = chi.ring
        if not ring.is_integral_domain:
            ok = f"{ring} is not an integral domain"
        elif not ring(len(chi.group)).is_unit():
            ok = f"|W| = {len(chi.group)} is not invertible in {ring}"
        else:
            ok = ""
        chi._cache["hyp"] = ok
    if ok:
        raise HypothesisViolation(ok)


def _scan(chi: Character, index: tuple):
    """(rep or None, coeff, |stabilizer|) for ``index``, memoised on ``chi``."""
    memo = chi._cache.setdefault("scan", {})
    hit = memo.get(index)
    if hit is not None:
        return hit
    if len(index) != chi.degree:
        raise DegreeMismatch(f"index {index} for a character of degree {chi.degree}")
    one = chi.ring.one
    values = chi.values
    best, best_sigma = None, None
    stab = 0
    killed = False
    for sigma in chi.group.elements:
        img = act(sigma, index)
        if img == index:
            stab += 1
            if values[sigma] != one:
                killed = True
        if best is None or img < best:
            best, best_sigma = img, sigma
    if killed:
        hit = (None, None, stab)
    else:
        hit = (best, values[best_sigma], stab)
    memo[index] = hit
    return hit


def classify(chi: Character, index) -> Canonical | None:
    """Canonical form (lm(i), zeta(i)) of ``index``, or ``None`` if e_i vanishes.

    ``None`` means chi is non-trivial on the stabilizer of ``index``.
    """
    check_hypotheses(chi)
    rep, coeff, _ = _scan(chi, tuple(index))
    return None if rep is None else Canonical(rep, coeff)


def stabilizer_order(chi: Character, index) -> int:
    return _scan(chi, tuple(index))[2]


def is_canonical(chi: Character, index) -> bool:
    index = tuple(index)
    rep, _, _ = _scan(chi, index)
    return rep == index


def enum_J(chi: Character, n: int) -> list[tuple]:
    """Sorted canonical basis index set J(chi, n, d) for d = deg(chi)."""
    check_hypotheses(chi)
    memo = chi._cache.setdefault("J", {})
    if n in memo:
        return memo[n]
    d = chi.degree
    if n**d > MAX_INDEX_ENUMERATION:
        raise EnumerationTooLarge(f"{n}^{d} indices exceed the cap {MAX_INDEX_ENUMERATION}")
    one = chi.ring.one
    elements = chi.group.elements
    values = chi.values
    out = []
    for index in product(range(1, n + 1), repeat=d):
        minimal = True
        killed = False
        for sigma in elements:
            img = act(sigma, index)
            if img < index:
                minimal = False
                break
            if img == index and values[sigma] != one:
                killed = True
        if minimal and not killed:
            out.append(index)
    memo[n] = out
    return out


def composition_offsets(composition) -> list[int]:
    offsets, total = [], 0
    for part in composition:
        offsets.append(total)
        total += part
    return offsets


@dataclass(frozen=True)
class CompositionRepSet:
    """Lex-minimal representatives of W_n modulo W_d x w^d(W_e) x ... x w^(..)(W_h)."""

    n: int
    composition: tuple
    reps: tuple
    subgroup: PermutationGroup
    group: PermutationGroup

    @property
    def offsets(self) -> list[int]:
        return composition_offsets(self.composition)

    def block_positions(self) -> list[range]:
        return [range(o + 1, o + p + 1) for o, p in zip(self.offsets, self.composition)]

    def blocks(self, rho: Permutation) -> tuple:
        """Images of the consecutive blocks under ``rho``."""
        return tuple(tuple(rho(t) for t in pos) for pos in self.block_positions())

    def __len__(self):
        return len(self.reps)

    def __iter__(self):
        return iter(self.reps)


def composition_reps(seq: CharacterSequence, n: int, composition) -> CompositionRepSet:
    composition = tuple(composition)
    if any(p < 0 for p in composition):
        raise ValueError(f"composition {composition} has a negative part")
    if sum(composition) != n:
        raise ValueError(f"composition {composition} does not sum to {n}")
    cache = seq.__dict__.setdefault("_rep_cache", {})
    key = (n, composition)
    if key in cache:
        return cache[key]
    group = seq.group(n)
    parts = [(seq.group(p), o) for p, o in zip(composition, composition_offsets(composition))]
    sub = young_product(n, parts)
    reps = tuple(group.left_coset_reps(sub))
    result = CompositionRepSet(n, composition, reps, sub, group)
    cache[key] = result
    return result


def enum_J_composition(seq: CharacterSequence, n: int, composition) -> list[tuple]:
    """J(chi; n; d, e, ..., h) as tuples of blocks, via the representatives."""
    reps = composition_reps(seq, n, composition)
    return [reps.blocks(rho) for rho in reps.reps]


def _min_rep(x: Permutation, sub: PermutationGroup) -> Permutation:
    return min(x * u for u in sub.elements)


def dot_action(zeta_prime: Permutation, zeta: Permutation, reps: CompositionRepSet):
    """Return ``(zeta' . zeta, factors)``.

    ``zeta' . zeta`` is the minimal representative of the coset of
    ``zeta' * zeta`` and equals ``zeta' * zeta * u`` with ``u`` in the block
    product subgroup; ``factors`` lists the components of ``u`` on each
    block, as permutations of the block's own degree.
    """
    if zeta not in set(reps.reps):
        raise ValueError(f"{zeta} is not one of the coset representatives")
    if zeta_prime not in reps.group:
        raise ValueError(f"{zeta_prime} is not in W_{reps.n}")
    prod_ = zeta_prime * zeta
    rep = _min_rep(prod_, reps.subgroup)
    upsilon = prod_.inverse * rep
    factors = []
    for offset, part in zip(reps.offsets, reps.composition):
        factors.append(
            Permutation(tuple(upsilon(offset + t) - offset for t in range(1, part + 1)))
        )
    return rep, factors


def factorization_map(seq: CharacterSequence, n: int, p: int, h: int, inner, variant: str = "left"):
    """The map (rho, varrho) -> 1 . (rho varrho) between representative sets.

    ``variant="left"`` refines the first block: M(n; p, h) x M(p; inner)
    -> M(n; inner, h).  ``variant="right"`` refines the second block:
    M(n; p, h) x w^p M(h; inner) -> M(n; p, inner).
    """
    inner = tuple(inner)
    if p + h != n:
        raise ValueError(f"{p} + {h} != {n}")
    outer = composition_reps(seq, n, (p, h))
    if variant == "left":
        if sum(inner) != p:
            raise ValueError(f"inner composition {inner} does not sum to {p}")
        inner_reps = composition_reps(seq, p, inner)
        lifted = [r.extend(n) for r in inner_reps.reps]
        refined = composition_reps(seq, n, inner + (h,))
    elif variant == "right":
        if sum(inner) != h:
            raise ValueError(f"inner composition {inner} does not sum to {h}")
        inner_reps = composition_reps(seq, h, inner)
        lifted = [omega_shift(r, n, p) for r in inner_reps.reps]
        refined = composition_reps(seq, n, (p,) + inner)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    mapping = {}
    for rho in outer.reps:
        for small, big in zip(inner_reps.reps, lifted):
            mapping[(rho, small)] = _min_rep(rho * big, refined.subgroup)
    return mapping, refined


def factorization_bijection_check(seq, n, p, h, inner, variant: str = "left") -> bool:
    mapping, refined = factorization_map(seq, n, p, h, inner, variant)
    image = set(mapping.values())
    return len(image) == len(mapping) and image == set(refined.reps)
