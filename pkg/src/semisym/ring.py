"""Exact coefficient rings: Q, Z, Z/mZ and the Eisenstein integers Z[w].

Elements are immutable and hashable.  Every ring is a frozen value object
and elements only combine with elements of an equal ring.

>>> QQ("1/2") + QQ("1/3")
RingElement(Q, 5/6)
>>> w = EISENSTEIN.epsilon
>>> w * w
RingElement(eisenstein, -1-w)
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import NotAUnit, RingMismatch

__all__ = [
    "Ring",
    "RingElement",
    "QQ",
    "ZZ",
    "EISENSTEIN",
    "modular",
    "parse_ring",
    "try_invert",
    "invert_integer",
]


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Ring:
    """Descriptor of a coefficient ring.

    ``kind`` is one of ``"rational"``, ``"integer"``, ``"modular"`` and
    ``"eisenstein"``; ``modulus`` is only set for the modular kind.
    """

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in ("rational", "integer", "modular", "eisenstein"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "modular":
            if self.modulus is None or self.modulus < 2:
                raise ValueError("modular ring needs a modulus >= 2")
        elif self.modulus is not None:
            raise ValueError(f"{self.kind} ring takes no modulus")

    @property
    def is_integral_domain(self) -> bool:
        if self.kind == "modular":
            return _is_prime(self.modulus)
        return True

    @property
    def is_q_ring(self) -> bool:
        return self.kind == "rational"

    @cached_property
    def zero(self) -> RingElement:
        return self(0)

    @cached_property
    def one(self) -> RingElement:
        return self(1)

    @property
    def epsilon(self) -> RingElement:
        """The primitive cube root of unity w (Eisenstein integers only)."""
        if self.kind != "eisenstein":
            raise AttributeError("only the Eisenstein integers have epsilon")
        return EisensteinElement(self, (0, 1))

    def __call__(self, value) -> RingElement:
        """Coerce ``value`` (int, Fraction, str, pair or element) into the ring."""
        if isinstance(value, RingElement):
            if value.ring != self:
                raise RingMismatch(f"element of {value.ring} used in {self}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        kind = self.kind
        if kind == "rational":
            return RationalElement(self, Fraction(value))
        if kind == "integer":
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError(f"{value} is not an integer")
                value = value.numerator
            return IntegerElement(self, int(value))
        if kind == "modular":
            if isinstance(value, Fraction):
                return ModularElement(self, value.numerator % self.modulus) * self(
                    value.denominator
                ).inverse()
            return ModularElement(self, int(value) % self.modulus)
        if isinstance(value, tuple):
            a, b = value
            return EisensteinElement(self, (int(a), int(b)))
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f"{value} is not an Eisenstein integer")
            value = value.numerator
        return EisensteinElement(self, (int(value), 0))

    def parse(self, text: str) -> RingElement:
        text = text.strip().replace("−", "-").replace(" ", "")
        if self.kind == "eisenstein":
            return self(_parse_eisenstein(text))
        if "w" in text:
            raise ValueError(f"{text!r}: w only exists in the Eisenstein integers")
        return self(Fraction(text))

    def __str__(self) -> str:
        if self.kind == "modular":
            return f"mod:{self.modulus}"
        return {"rational": "Q", "integer": "Z", "eisenstein": "eisenstein"}[self.kind]

    def elements(self):
        """All elements of a finite ring, in residue order."""
        if self.kind != "modular":
            raise ValueError(f"{self} is infinite")
        return [ModularElement(self, r) for r in range(self.modulus)]


QQ = Ring("rational")
ZZ = Ring("integer")
EISENSTEIN = Ring("eisenstein")


def modular(m: int) -> Ring:
    return Ring("modular", m)


def parse_ring(text: str) -> Ring:
    """Parse the command-line ring syntax ``Q``, ``Z``, ``mod:m``, ``eisenstein``."""
    t = text.strip()
    low = t.lower()
    if low in ("q", "qq", "rational"):
        return QQ
    if low in ("z", "zz", "integer"):
        return ZZ
    if low in ("eisenstein", "z[w]", "zw"):
        return EISENSTEIN
    if low.startswith("mod:"):
        return modular(int(low[4:]))
    raise ValueError(f"unknown ring {text!r} (expected Q, Z, mod:m or eisenstein)")


_EIS_TERM = re.compile(r"([+-]?)(\d*)(\*?w)?")


def _parse_eisenstein(text: str) -> tuple[int, int]:
    if not text:
        raise ValueError("empty ring element")
    a = b = 0
    pos = 0
    while pos < len(text):
        m = _EIS_TERM.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse Eisenstein integer {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        digits, wpart = m.group(2), m.group(3)
        if not digits and not wpart:
            raise ValueError(f"cannot parse Eisenstein integer {text!r}")
        if wpart and wpart.startswith("*") and not digits:
            raise ValueError(f"cannot parse Eisenstein integer {text!r}")
        coeff = sign * (int(digits) if digits else 1)
        if wpart:
            b += coeff
        else:
            a += coeff
        pos = m.end()
    return a, b


class RingElement:
    """An exact element of a :class:`Ring`; see the concrete subclasses."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value):
        self.ring = ring
        self.value = value

    def _coerce(self, other) -> RingElement | None:
        if isinstance(other, RingElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatch(f"cannot combine {self.ring} and {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring(other)
        return None

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self == self.ring(other)
            except (ValueError, NotAUnit):
                return False
        return NotImplemented

    def __hash__(self):
        # agree with int/Fraction hashes where equality with them is exact;
        # residues compare equal to every integer of their class, so they cannot
        if self.ring.kind in ("rational", "integer"):
            return hash(self.value)
        if self.ring.kind == "eisenstein" and self.value[1] == 0:
            return hash(self.value[0])
        return hash((self.ring, self.value))

    def __bool__(self):
        return self != self.ring.zero

    def __repr__(self):
        return f"RingElement({self.ring}, {self})"

    def __radd__(self, other):
        return self.__add__(other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def is_unit(self) -> bool:
        try:
            self.inverse()
        except NotAUnit:
            return False
        return True

    def inverse(self) -> RingElement:
        raise NotImplementedError


class RationalElement(RingElement):
    __slots__ = ()

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalElement(self.ring, self.value + other.value)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalElement(self.ring, self.value - other.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalElement(self.ring, self.value * other.value)

    def __neg__(self):
        return RationalElement(self.ring, -self.value)

    def inverse(self):
        if self.value == 0:
            raise NotAUnit("0 is not invertible")
        return RationalElement(self.ring, 1 / self.value)

    def __str__(self):
        return str(self.value)


class IntegerElement(RingElement):
    __slots__ = ()

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return IntegerElement(self.ring, self.value + other.value)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return IntegerElement(self.ring, self.value - other.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return IntegerElement(self.ring, self.value * other.value)

    def __neg__(self):
        return IntegerElement(self.ring, -self.value)

    def inverse(self):
        if self.value not in (1, -1):
            raise NotAUnit(f"{self.value} is not a unit of Z")
        return self

    def __str__(self):
        return str(self.value)


class ModularElement(RingElement):
    __slots__ = ()

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ModularElement(self.ring, (self.value + other.value) % self.ring.modulus)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ModularElement(self.ring, (self.value - other.value) % self.ring.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ModularElement(self.ring, (self.value * other.value) % self.ring.modulus)

    def __neg__(self):
        return ModularElement(self.ring, (-self.value) % self.ring.modulus)

    def inverse(self):
        m = self.ring.modulus
        if math.gcd(self.value, m) != 1:
            raise NotAUnit(f"{self.value} is not a unit mod {m}")
        return ModularElement(self.ring, pow(self.value, -1, m))

    def __str__(self):
        return str(self.value)


class EisensteinElement(RingElement):
    """a + b*w with w*w = -1 - w, stored as the pair (a, b)."""

    __slots__ = ()

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        (a, b), (c, d) = self.value, other.value
        return EisensteinElement(self.ring, (a + c, b + d))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        (a, b), (c, d) = self.value, other.value
        return EisensteinElement(self.ring, (a - c, b - d))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        (a, b), (c, d) = self.value, other.value
        bd = b * d
        return EisensteinElement(self.ring, (a * c - bd, a * d + b * c - bd))

    def __neg__(self):
        a, b = self.value
        return EisensteinElement(self.ring, (-a, -b))

    def norm(self) -> int:
        a, b = self.value
        return a * a - a * b + b * b

    def conjugate(self) -> EisensteinElement:
        a, b = self.value
        return EisensteinElement(self.ring, (a - b, -b))

    def inverse(self):
        # units of Z[w] are exactly the elements of norm 1
        if self.norm() != 1:
            raise NotAUnit(f"{self} is not a unit of Z[w]")
        return self.conjugate()

    def __str__(self):
        a, b = self.value
        if b == 0:
            return str(a)
        wterm = {1: "w", -1: "-w"}.get(b, f"{b}*w")
        if a == 0:
            return wterm
        return f"{a}{wterm}" if wterm.startswith("-") else f"{a}+{wterm}"


def try_invert(a: RingElement) -> RingElement | None:
    """Inverse of ``a`` or ``None`` when ``a`` is not a unit."""
    try:
        return a.inverse()
    except NotAUnit:
        return None


def invert_integer(n: int, ring: Ring) -> RingElement:
    """Inverse of the image of the positive integer ``n`` in ``ring``.

    Raises :class:`NotAUnit` when the image is not invertible.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return ring(n).inverse()
