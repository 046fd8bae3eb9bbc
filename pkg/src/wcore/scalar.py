"""Exact scalars: rationals, Gaussian rationals and residues mod p.

Rationals are plain :class:`fractions.Fraction` values. Gaussian rationals and
residues get small immutable classes that interoperate with ``int`` so that
``x == 0`` and ``sum(...)`` work uniformly across domains.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Union

from .errors import DomainError, NotInvertible, ParseError

RATIONALS = "rationals"
GAUSSIAN = "gaussian_rationals"
MOD_P = "mod_p"

IDENTITY = "identity"
CONJUGATION = "conjugation"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


class GaussianRational:
    """(re + im*i) / den with integers in lowest terms and den > 0."""

    __slots__ = ("_re", "_im", "_den")

    def __init__(self, re=0, im=0):
        re, im = Fraction(re), Fraction(im)
        den = re.denominator * im.denominator // math.gcd(re.denominator, im.denominator)
        self._set(re.numerator * (den // re.denominator), im.numerator * (den // im.denominator), den)

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        obj = cls.__new__(cls)
        obj._set(a, b, d)
        return obj

    def _set(self, a, b, d):
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(a, b, d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        self._re, self._im, self._den = a, b, d

    @property
    def real(self) -> Fraction:
        return Fraction(self._re, self._den)

    @property
    def imag(self) -> Fraction:
        return Fraction(self._im, self._den)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._re, -self._im, self._den)

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, int):
            return GaussianRational._raw(other, 0, 1)
        if isinstance(other, Fraction):
            return GaussianRational._raw(other.numerator, 0, other.denominator)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._den == o._den:
            return GaussianRational._raw(self._re + o._re, self._im + o._im, self._den)
        return GaussianRational._raw(
            self._re * o._den + o._re * self._den,
            self._im * o._den + o._im * self._den,
            self._den * o._den,
        )

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self._re, -self._im, self._den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self._re, self._im, o._re, o._im
        return GaussianRational._raw(a * c - b * d, a * d + b * c, self._den * o._den)

    __rmul__ = __mul__

    def _inverse(self):
        if not self:
            raise NotInvertible("zero has no inverse")
        a, b, d = self._re, self._im, self._den
        # 1/((a+bi)/d) = d(a-bi)/(a^2+b^2)
        return GaussianRational._raw(d * a, -d * b, a * a + b * b)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o._inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self._inverse()

    def __bool__(self):
        return self._re != 0 or self._im != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._re == o._re and self._im == o._im and self._den == o._den

    def __hash__(self):
        if self._im == 0:
            return hash(Fraction(self._re, self._den))
        return hash((self._re, self._im, self._den))

    def __repr__(self):
        return f"GaussianRational({self.real!s}, {self.imag!s})"

    def __str__(self):
        return render_scalar(self, GAUSSIAN_RATIONALS)


class Residue:
    """Element of Z/pZ stored as its representative in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise DomainError(f"cannot mix residues mod {self.p} and mod {other.p}")
            return other.value
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.value + o, self.p)

    __radd__ = __add__

    def __neg__(self):
        return Residue(-self.value, self.p)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.value * o, self.p)

    __rmul__ = __mul__

    def _inverse(self):
        if self.value == 0:
            raise NotInvertible("zero has no inverse")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * Residue(o, self.p)._inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o, self.p) * self._inverse()

    def conjugate(self):
        return self

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, GaussianRational, Residue]


@dataclass(frozen=True)
class ScalarDomain:
    """One of the three supported fields together with its involution."""

    kind: str
    p: int | None = None
    involution: str = IDENTITY

    def __post_init__(self):
        if self.kind not in (RATIONALS, GAUSSIAN, MOD_P):
            raise DomainError(f"unknown scalar domain {self.kind!r}")
        if self.involution not in (IDENTITY, CONJUGATION):
            raise DomainError(f"unknown involution {self.involution!r}")
        if self.kind == MOD_P:
            if self.p is None or not is_prime(self.p):
                raise DomainError(f"mod_p requires a prime modulus, got {self.p}")
        elif self.p is not None:
            raise DomainError("only mod_p domains take a modulus")
        if self.involution == CONJUGATION and self.kind != GAUSSIAN:
            raise DomainError("conjugation is only defined on gaussian_rationals")

    @property
    def name(self) -> str:
        if self.kind == MOD_P:
            return f"mod_p:{self.p}"
        if self.kind == GAUSSIAN and self.involution == IDENTITY:
            return "gaussian_rationals:transpose"
        return self.kind

    @classmethod
    def from_name(cls, name: str) -> "ScalarDomain":
        name = name.strip()
        if name == RATIONALS:
            return RATIONAL_FIELD
        if name == GAUSSIAN:
            return GAUSSIAN_RATIONALS
        if name == "gaussian_rationals:transpose":
            return cls(GAUSSIAN, involution=IDENTITY)
        m = re.fullmatch(r"mod_p:(\d+)", name)
        if m:
            return mod_p(int(m.group(1)))
        raise DomainError(f"unknown domain {name!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == MOD_P

    @cached_property
    def zero(self) -> Scalar:
        return self.coerce(0)

    @cached_property
    def one(self) -> Scalar:
        return self.coerce(1)

    def coerce(self, value) -> Scalar:
        """Convert ints, Fractions, strings or domain elements into this domain."""
        if isinstance(value, str):
            return parse_scalar(value, self)
        if self.kind == RATIONALS:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            if isinstance(value, GaussianRational) and value.imag == 0:
                return value.real
        elif self.kind == GAUSSIAN:
            if isinstance(value, GaussianRational):
                return value
            if isinstance(value, (int, Fraction)):
                return GaussianRational(value)
            if isinstance(value, complex) and value.real.is_integer() and value.imag.is_integer():
                return GaussianRational(int(value.real), int(value.imag))
        else:
            if isinstance(value, Residue) and value.p == self.p:
                return value
            if isinstance(value, int):
                return Residue(value, self.p)
            if isinstance(value, Fraction):
                if value.denominator % self.p == 0:
                    raise DomainError(f"denominator {value.denominator} vanishes mod {self.p}")
                return Residue(value.numerator, self.p) / value.denominator
        raise DomainError(f"{value!r} is not an element of {self.name}")

    def conj(self, s: Scalar) -> Scalar:
        if self.involution == CONJUGATION:
            return s.conjugate()
        return s

    def elements(self) -> Iterator[Scalar]:
        """All field elements in increasing residue order (finite domains only)."""
        if not self.is_finite:
            raise DomainError(f"{self.name} is infinite")
        return (Residue(v, self.p) for v in range(self.p))


RATIONAL_FIELD = ScalarDomain(RATIONALS)
GAUSSIAN_RATIONALS = ScalarDomain(GAUSSIAN, involution=CONJUGATION)


def mod_p(p: int) -> ScalarDomain:
    return ScalarDomain(MOD_P, p=p)


def conjugate(s: Scalar, domain: ScalarDomain | None = None) -> Scalar:
    """Apply the domain involution; without a domain, Gaussian values are conjugated."""
    if domain is None:
        return s.conjugate() if isinstance(s, GaussianRational) else s
    return domain.conj(s)


def invert(s: Scalar) -> Scalar:
    if not s:
        raise NotInvertible("zero has no inverse")
    return 1 / s


_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def _parse_rational(text: str) -> Fraction:
    if not _RATIONAL_RE.fullmatch(text):
        raise ParseError(f"malformed rational {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def parse_scalar(text: str, domain: ScalarDomain) -> Scalar:
    """Parse ``int[/int]`` or, for Gaussian rationals, ``rational(+|-)rational i``."""
    t = text.strip().replace(" ", "")
    if not t:
        raise ParseError("empty scalar")
    if t.endswith("i"):
        if domain.kind != GAUSSIAN:
            raise DomainError(f"imaginary unit in {domain.name}: {text!r}")
        body = t[:-1]
        k = max(body.rfind("+"), body.rfind("-"))
        if k > 0:
            re_part, im_part = body[:k], body[k:]
        else:
            re_part, im_part = "", body
        if im_part in ("", "+", "-"):
            im_part += "1"
        re_val = _parse_rational(re_part) if re_part else Fraction(0)
        return GaussianRational(re_val, _parse_rational(im_part))
    value = _parse_rational(t)
    if domain.kind == MOD_P and value.denominator % domain.p == 0:
        raise DomainError(f"denominator of {text!r} vanishes mod {domain.p}")
    return domain.coerce(value)


def _render_rational(q: Fraction) -> str:
    return str(q)


def render_scalar(s: Scalar, domain: ScalarDomain | None = None) -> str:
    """Canonical text form; ``parse_scalar(render_scalar(s), d) == s``."""
    if isinstance(s, Residue):
        return str(s.value)
    if isinstance(s, GaussianRational):
        re_part, im_part = s.real, s.imag
        if im_part == 0:
            return _render_rational(re_part)
        sign = "+" if im_part > 0 else "-"
        return f"{_render_rational(re_part)}{sign}{_render_rational(abs(im_part))}i"
    return _render_rational(Fraction(s))
