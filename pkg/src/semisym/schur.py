"""Generalized Schur functions (immanant-like sums over a permutation group)
and the row minors that give coordinates of decomposable chi-vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .character import Character, CharacterSequence
from .errors import DegreeMismatch
from .index import _scan, check_hypotheses, classify, composition_reps, enum_J
from .ring import Ring


@dataclass(frozen=True)
class ExactMatrix:
    """Rectangular matrix of ring elements, stored row-major."""

    ring: Ring
    rows: tuple

    @classmethod
    def from_rows(cls, ring: Ring, rows) -> ExactMatrix:
        rows = tuple(tuple(ring(x) for x in r) for r in rows)
        if len({len(r) for r in rows}) > 1:
            raise ValueError("ragged matrix")
        return cls(ring, rows)

    @classmethod
    def identity(cls, ring: Ring, n: int) -> ExactMatrix:
        return cls.from_rows(ring, [[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, rc):
        r, c = rc
        return self.rows[r][c]

    def column(self, c: int) -> list:
        return [row[c] for row in self.rows]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.ring, tuple(zip(*self.rows)))

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        m, k = self.shape
        k2, n = other.shape
        if k != k2:
            raise DegreeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.ring.zero
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            line = []
            for col in cols:
                s = zero
                for a, b in zip(row, col):
                    s = s + a * b
                line.append(s)
            out.append(tuple(line))
        return ExactMatrix(self.ring, tuple(out))

    def permute_columns(self, sigma) -> ExactMatrix:
        """Column t of the result is column sigma(t) of ``self``."""
        return ExactMatrix(
            self.ring, tuple(tuple(row[sigma(t) - 1] for t in range(1, len(row) + 1)) for row in self.rows)
        )

    def permute_rows(self, sigma) -> ExactMatrix:
        """Row t of the result is row sigma(t) of ``self``."""
        return ExactMatrix(self.ring, tuple(self.rows[sigma(t) - 1] for t in range(1, len(self.rows) + 1)))

    def tolist(self):
        return [list(r) for r in self.rows]


def _as_matrix(A, ring: Ring) -> ExactMatrix:
    if isinstance(A, ExactMatrix):
        return A
    return ExactMatrix.from_rows(ring, A)


def schur_direct(A, chi: Character):
    """sum over sigma in W of chi(sigma) * prod_t a[sigma^-1(t), t]."""
    A = _as_matrix(A, chi.ring)
    d = chi.degree
    if A.shape != (d, d):
        raise DegreeMismatch(f"matrix of shape {A.shape} for a degree-{d} group")
    rows = A.rows
    total = chi.ring.zero
    for sigma, value in chi.values.items():
        inv = sigma.inverse.word
        term = value
        for t in range(d):
            term = term * rows[inv[t] - 1][t]
            if not term:
                break
        total = total + term
    return total


def _minor_terms(chi: Character, j: tuple):
    """Pairs (chi^-1(tau), tau . j) over left coset reps tau of W mod W_j."""
    memo = chi._cache.setdefault("minor_terms", {})
    hit = memo.get(j)
    if hit is None:
        from .index import act

        group = chi.group
        stab = group.stabilizer(j)
        hit = [(chi(tau).inverse(), act(tau, j)) for tau in group.left_coset_reps(stab)]
        memo[j] = hit
    return hit


def row_minor(A, j, k, chi: Character):
    """The (j, k) row minor of weight chi: sum over tau in W^(j) of
    chi^-1(tau) * prod_t a[(tau j)_t, k_t]."""
    A = _as_matrix(A, chi.ring)
    j, k = tuple(j), tuple(k)
    if len(j) != chi.degree or len(k) != chi.degree:
        raise DegreeMismatch(f"indices {j}, {k} for a degree-{chi.degree} character")
    rows = A.rows
    total = chi.ring.zero
    for coeff, tj in _minor_terms(chi, j):
        term = coeff
        for r, c in zip(tj, k):
            term = term * rows[r - 1][c - 1]
            if not term:
                break
        total = total + term
    return total


def schur_laplace(A, seq: CharacterSequence, composition, blocks):
    """Laplace expansion of d_chi(A) along the column blocks ``blocks``.

    ``blocks`` is a tuple of column-index tuples forming an element of
    J(chi; n; composition).
    """
    A = _as_matrix(A, seq.ring)
    n = A.shape[0]
    if A.shape != (n, n):
        raise DegreeMismatch(f"matrix of shape {A.shape} is not square")
    composition = tuple(composition)
    blocks = tuple(tuple(b) for b in blocks)
    chi_n = seq.character(n)
    check_hypotheses(chi_n)
    flat = sum(blocks, ())
    if tuple(len(b) for b in blocks) != composition or sorted(flat) != list(range(1, n + 1)):
        raise ValueError(f"{blocks} is not a block tuple for composition {composition}")
    for b in blocks:
        if b and not _is_canonical(seq.character(len(b)), b):
            raise ValueError(f"block {b} is not canonical")
    lead = classify(chi_n, flat)
    if lead is None or lead.rep != tuple(range(1, n + 1)):
        raise ValueError(f"{blocks} is not in J(chi; {n}; {composition})")
    chars = [seq.character(p) for p in composition]
    total = seq.ring.zero
    for rho in composition_reps(seq, n, composition).reps:
        row_blocks = [tuple(rho(t) for t in pos) for pos in _positions(composition)]
        zeta = classify(chi_n, sum(row_blocks, ())).coeff
        term = zeta
        for chi_p, rb, cb in zip(chars, row_blocks, blocks):
            if rb:
                term = term * row_minor(A, rb, cb, chi_p)
            if not term:
                break
        total = total + term
    return lead.coeff * total


def _positions(composition):
    out, o = [], 0
    for p in composition:
        out.append(range(o + 1, o + p + 1))
        o += p
    return out


def _is_canonical(chi, index):
    rep, _, _ = _scan(chi, index)
    return rep == index


def lagrange_sides(A, chi: Character):
    """Both sides of d_chi(A^t A) = sum_j |W_j| A_(j)(chi) A_(j)(chi^-1)."""
    A = _as_matrix(A, chi.ring)
    n, d = A.shape
    if d != chi.degree:
        raise DegreeMismatch(f"{n}x{d} matrix for a degree-{chi.degree} character")
    lhs = schur_direct(A.transpose() @ A, chi)
    inv = chi.inverse()
    k = tuple(range(1, d + 1))
    rhs = chi.ring.zero
    for j in enum_J(chi, n):
        rhs = rhs + chi.ring(_scan(chi, j)[2]) * row_minor(A, j, k, chi) * row_minor(A, j, k, inv)
    return lhs, rhs


def lagrange_check(A, chi: Character):
    lhs, rhs = lagrange_sides(A, chi)
    return lhs, rhs, lhs == rhs


def transpose_identity_check(A, chi: Character) -> bool:
    """d_chi(A^t) == d_{chi^-1}(A)."""
    A = _as_matrix(A, chi.ring)
    return schur_direct(A.transpose(), chi) == schur_direct(A, chi.inverse())
