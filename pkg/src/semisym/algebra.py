"""Semi-symmetric powers and algebras of a free module K^n in the canonical basis.

Elements are stored over the canonical indices J(chi, n, d); the key of a
basis element is its multi-index, so the degree of a term is the length of
its key and graded elements need no separate container.
"""

from __future__ import annotations

from itertools import product
from typing import NamedTuple

from .character import CharacterSequence
from .errors import ContextMismatch, DegreeMismatch, DegreeOverflow
from .index import _scan, check_hypotheses, classify, enum_J
from .linear import Accumulator, SparseVector
from .schur import ExactMatrix, row_minor


class ChiVector(SparseVector):
    """An element of [chi](E): a sparse combination of canonical basis vectors."""

    __slots__ = ("algebra",)

    def __init__(self, algebra: SemiSymmetricAlgebra, coeffs=None):
        super().__init__(algebra.ring, coeffs)
        self.algebra = algebra

    def _context(self):
        return self.algebra.key

    def _copy_context(self, obj):
        obj.algebra = self.algebra

    def degrees(self) -> list[int]:
        return sorted({len(k) for k in self.coeffs})

    @property
    def degree(self) -> int:
        """Degree of a homogeneous element (0 for the zero vector)."""
        degs = self.degrees()
        if len(degs) > 1:
            raise DegreeMismatch(f"element is not homogeneous (degrees {degs})")
        return degs[0] if degs else 0

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def component(self, d: int) -> ChiVector:
        return self._new({k: c for k, c in self.coeffs.items() if len(k) == d})

    def __mul__(self, other):
        if isinstance(other, ChiVector):
            return self.algebra.multiply(self, other)
        return super().__mul__(other)

    def __rmul__(self, c):
        return super().__mul__(c)


class ChiForm(ChiVector):
    """An element of the dual algebra [chi^-1](E*)."""

    __slots__ = ()


class PowerMatrix(NamedTuple):
    rows: list
    cols: list
    matrix: ExactMatrix


class SemiSymmetricAlgebra:
    """The semi-symmetric algebra [chi](K^n) for a character sequence.

    With ``dual=True`` this is the algebra of chi-forms [chi^-1](E*); use
    :meth:`dual` to move between the two sides.
    """

    def __init__(self, seq: CharacterSequence, n: int, dual: bool = False):
        if n < 1:
            raise ValueError("n must be at least 1")
        self.seq = seq
        self.n = n
        self.is_dual = dual
        self.ring = seq.ring
        self._dual = None

    @property
    def key(self):
        return (id(self.seq), self.n, self.is_dual)

    def __eq__(self, other):
        return isinstance(other, SemiSymmetricAlgebra) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        side = "forms" if self.is_dual else "vectors"
        return f"SemiSymmetricAlgebra({self.seq!r}, n={self.n}, {side})"

    @property
    def vector_class(self):
        return ChiForm if self.is_dual else ChiVector

    def dual(self) -> SemiSymmetricAlgebra:
        if self._dual is None:
            other = SemiSymmetricAlgebra(self.seq.inverse(), self.n, dual=not self.is_dual)
            other._dual = self
            self._dual = other
        return self._dual

    def character(self, d: int):
        return self.seq.character(d)

    def basis(self, d: int) -> list[tuple]:
        if d == 0:
            return [()]
        return enum_J(self.character(d), self.n)

    def full_basis(self, max_degree: int | None = None) -> list[tuple]:
        top = self.seq.max_degree if max_degree is None else max_degree
        return [j for d in range(top + 1) if d in self.seq.stages for j in self.basis(d)]

    def stabilizer_order(self, index) -> int:
        index = tuple(index)
        if not index:
            return 1
        return _scan(self.character(len(index)), index)[2]

    # construction -------------------------------------------------------

    def zero(self):
        return self.vector_class(self)

    def unit(self):
        return self.vector_class(self, {(): self.ring.one})

    def scalar(self, c):
        return self.vector_class(self, {(): c})

    def element(self, coeffs):
        """Element from a mapping of canonical indices to coefficients."""
        for k in coeffs:
            k = tuple(k)
            if k and _scan(self.character(len(k)), k)[0] != k:
                raise ValueError(f"{k} is not a canonical basis index")
            if any(not 1 <= x <= self.n for x in k):
                raise ValueError(f"{k} has entries outside [1, {self.n}]")
        return self.vector_class(self, {tuple(k): c for k, c in coeffs.items()})

    def basis_vector(self, j, coeff=1):
        return self.element({tuple(j): coeff})

    def _project_into(self, acc: Accumulator, index: tuple, coeff):
        if not index:
            acc.add((), coeff)
            return
        if any(not 1 <= x <= self.n for x in index):
            raise ValueError(f"{index} has entries outside [1, {self.n}]")
        canon = classify(self.character(len(index)), index)
        if canon is not None:
            acc.add(canon.rep, coeff * canon.coeff)

    def project(self, index, coeff=1):
        """Image of ``coeff * e_index`` under the quotient map T^d -> [chi]^d."""
        acc = Accumulator(self.ring)
        self._project_into(acc, tuple(index), self.ring(coeff))
        return self.vector_class(self, acc.data)

    def project_tensor(self, terms):
        """Project a tensor given as ``{index: coeff}`` or an iterable of pairs."""
        items = terms.items() if isinstance(terms, dict) else terms
        acc = Accumulator(self.ring)
        for index, c in items:
            self._project_into(acc, tuple(index), self.ring(c))
        return self.vector_class(self, acc.data)

    def decomposable(self, vectors):
        """x_1 chi ... chi x_d for coordinate vectors x_t in K^n, via row minors."""
        vectors = [[self.ring(c) for c in v] for v in vectors]
        d = len(vectors)
        if d == 0:
            return self.unit()
        for v in vectors:
            if len(v) != self.n:
                raise DegreeMismatch(f"vector of length {len(v)} in K^{self.n}")
        chi = self.character(d)
        check_hypotheses(chi)
        A = ExactMatrix(self.ring, tuple(zip(*vectors)))
        k = tuple(range(1, d + 1))
        coeffs = {j: row_minor(A, j, k, chi) for j in self.basis(d)}
        return self.vector_class(self, coeffs)

    def decomposable_by_expansion(self, vectors):
        """Reference route for :meth:`decomposable`: expand x_1 (x) ... (x) x_d
        over all n^d basis tensors and project every term."""
        vectors = [[self.ring(c) for c in v] for v in vectors]
        acc = Accumulator(self.ring)
        for index in product(range(1, self.n + 1), repeat=len(vectors)):
            c = self.ring.one
            for v, i in zip(vectors, index):
                c = c * v[i - 1]
                if not c:
                    break
            if c:
                self._project_into(acc, index, c)
        return self.vector_class(self, acc.data)

    # algebra structure ---------------------------------------------------

    def _check_member(self, x):
        if not isinstance(x, ChiVector) or x.algebra != self:
            raise ContextMismatch(f"{x!r} does not belong to {self!r}")

    def multiply(self, a: ChiVector, b: ChiVector):
        """Product in [chi](E): e_j chi e_k is the projection of e_(j,k)."""
        self._check_member(a)
        self._check_member(b)
        self.seq.require_valid()
        acc = Accumulator(self.ring)
        for j, cj in a.coeffs.items():
            for k, ck in b.coeffs.items():
                d = len(j) + len(k)
                if d > self.seq.max_degree:
                    raise DegreeOverflow(
                        f"product of degree {d} exceeds the sequence's maximum degree "
                        f"{self.seq.max_degree}"
                    )
                self._project_into(acc, j + k, cj * ck)
        return self.vector_class(self, acc.data)

    def product(self, *factors):
        out = self.unit()
        for f in factors:
            out = self.multiply(out, f)
        return out


def grade_project(z: ChiVector, d: int) -> ChiVector:
    return z.component(d)


def power_map(source: SemiSymmetricAlgebra, u, d: int, target: SemiSymmetricAlgebra | None = None):
    """Matrix of [chi]^d(u) for a linear map u: K^n -> K^m given as an m x n matrix.

    Rows are indexed by J(chi, m, d), columns by J(chi, n, d).
    """
    u = u if isinstance(u, ExactMatrix) else ExactMatrix.from_rows(source.ring, u)
    m, n = u.shape
    if n != source.n:
        raise DegreeMismatch(f"{m}x{n} matrix applied to K^{source.n}")
    if target is None:
        target = SemiSymmetricAlgebra(source.seq, m, dual=source.is_dual)
    elif target.n != m:
        raise DegreeMismatch(f"target has dimension {target.n}, matrix has {m} rows")
    rows, cols = target.basis(d), source.basis(d)
    columns = []
    for j in cols:
        image = target.decomposable([u.column(t - 1) for t in j])
        columns.append([image[r] for r in rows])
    entries = tuple(tuple(col[i] for col in columns) for i in range(len(rows)))
    return PowerMatrix(rows, cols, ExactMatrix(source.ring, entries))


def apply_power_map(pm: PowerMatrix, x: ChiVector, target: SemiSymmetricAlgebra) -> ChiVector:
    col_pos = {j: c for c, j in enumerate(pm.cols)}
    acc = Accumulator(target.ring)
    for j, cj in x.coeffs.items():
        c = col_pos[j]
        for r, row in enumerate(pm.rows):
            entry = pm.matrix.rows[r][c]
            if entry:
                acc.add(row, entry * cj)
    return target.vector_class(target, acc.data)


class TensorVector(SparseVector):
    """Element of the k-fold tensor power of [chi](E) (or of its dual).

    Keys are k-tuples of canonical multi-indices, one per slot.
    """

    __slots__ = ("algebra", "k")

    def __init__(self, algebra: SemiSymmetricAlgebra, k: int, coeffs=None):
        super().__init__(algebra.ring, coeffs)
        self.algebra = algebra
        self.k = k
        for key in self.coeffs:
            if len(key) != k:
                raise ValueError(f"key {key} does not have {k} slots")

    def _context(self):
        return (self.algebra.key, self.k)

    def _copy_context(self, obj):
        obj.algebra = self.algebra
        obj.k = self.k

    def slot_degrees(self) -> set:
        return {tuple(len(s) for s in key) for key in self.coeffs}


def tensor(*factors: ChiVector) -> TensorVector:
    """x_1 (x) x_2 (x) ... (x) x_k for elements of one algebra."""
    if not factors:
        raise ValueError("need at least one factor")
    alg = factors[0].algebra
    for f in factors:
        if f.algebra != alg:
            raise ContextMismatch("tensor factors from different algebras")
    acc = {(): alg.ring.one}
    for f in factors:
        nxt = Accumulator(alg.ring)
        for key, c in acc.items():
            for j, cj in f.coeffs.items():
                nxt.add(key + (j,), c * cj)
        acc = nxt.data
    return TensorVector(alg, len(factors), acc)
