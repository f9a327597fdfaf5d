"""Sparse vectors with exact coefficients, keyed by hashable labels."""

from __future__ import annotations

from .errors import ContextMismatch
from .ring import Ring


class SparseVector:
    """A finite formal combination ``sum c_k * k`` with no stored zeros.

    Subclasses attach a context (an algebra, a module, ...) and only
    combine with vectors of an equal context.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs=None):
        self.ring = ring
        out = {}
        if coeffs:
            zero = ring.zero
            for k, c in dict(coeffs).items():
                c = ring(c)
                if c != zero:
                    out[k] = c
        self.coeffs = out

    # hooks for subclasses
    def _context(self):
        return None

    def _new(self, coeffs: dict):
        obj = object.__new__(type(self))
        obj.ring = self.ring
        obj.coeffs = coeffs
        self._copy_context(obj)
        return obj

    def _copy_context(self, obj):
        pass

    def _check(self, other):
        if type(other) is not type(self) or self.ring != other.ring:
            raise ContextMismatch(f"cannot combine {type(self).__name__} and {type(other).__name__}")
        if self._context() != other._context():
            raise ContextMismatch("vectors live in different contexts")

    def __iter__(self):
        return iter(sorted(self.coeffs.items(), key=lambda kv: _sort_key(kv[0])))

    def items(self):
        return list(self)

    def __getitem__(self, key):
        return self.coeffs.get(key, self.ring.zero)

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, SparseVector):
            return NotImplemented
        return (
            type(self) is type(other)
            and self._context() == other._context()
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.coeffs)
        _accumulate(out, other.coeffs.items(), self.ring.zero)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> SparseVector:
        c = self.ring(c)
        if not c:
            return self._new({})
        return self._new({k: v * c for k, v in self.coeffs.items() if v * c})

    def __mul__(self, c):
        from .ring import RingElement

        if isinstance(c, (int, RingElement)):
            return self.scale(c)
        return NotImplemented

    def __rmul__(self, c):
        return self.__mul__(c)

    def __repr__(self):
        if not self.coeffs:
            return f"{type(self).__name__}(0)"
        terms = " + ".join(f"{c}*{_fmt_key(k)}" for k, c in self)
        return f"{type(self).__name__}({terms})"


def _accumulate(target: dict, items, zero):
    for k, c in items:
        if k in target:
            s = target[k] + c
            if s == zero:
                del target[k]
            else:
                target[k] = s
        elif c != zero:
            target[k] = c


def _sort_key(key):
    # multi-indices: shorter (lower degree) first, then lexicographic
    if isinstance(key, tuple) and all(isinstance(x, int) for x in key):
        return (0, len(key), key)
    if isinstance(key, tuple):
        return (1, tuple(_sort_key(x) for x in key))
    return (2, key)


def _fmt_key(key):
    if isinstance(key, tuple) and key and all(isinstance(x, tuple) for x in key):
        return "⊗".join(_fmt_key(k) for k in key)
    if isinstance(key, tuple):
        return "e(" + ",".join(map(str, key)) + ")" if key else "1"
    return str(key)


class Accumulator:
    """Mutable helper collecting ``key -> coefficient`` sums."""

    __slots__ = ("zero", "data")

    def __init__(self, ring: Ring):
        self.zero = ring.zero
        self.data = {}

    def add(self, key, c):
        if not c:
            return
        data = self.data
        if key in data:
            s = data[key] + c
            if s == self.zero:
                del data[key]
            else:
                data[key] = s
        else:
            data[key] = c
