"""Exact coefficient rings with involution: the integers and the Gaussian integers."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import MixedRings, ParseError


@dataclass(frozen=True, slots=True)
class Gaussian:
    """``re + im*i`` with arbitrary precision parts."""

    re: int
    im: int = 0

    @staticmethod
    def _lift(other) -> Gaussian:
        if isinstance(other, Gaussian):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Gaussian(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Gaussian(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Gaussian(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self) -> Gaussian:
        return Gaussian(-self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        return hash(self.re) if not self.im else hash((self.re, self.im))

    def conjugate(self) -> Gaussian:
        return Gaussian(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __str__(self) -> str:
        return format_gaussian(self)

    def __repr__(self) -> str:
        return f"Gaussian({self.re}, {self.im})"


def format_gaussian(z: Gaussian) -> str:
    a, b = z.re, z.im
    if b == 0:
        return str(a)
    imag = {1: "i", -1: "-i"}.get(b, f"{b}i")
    if a == 0:
        return imag
    return f"{a}+{imag}" if b > 0 else f"{a}{imag}"


class Ring:
    """An exact involutive integral domain.

    Scalars are plain Python values (``int`` or :class:`Gaussian`); the ring
    object supplies the arithmetic so that callers never mix the two.
    """

    name = "?"
    zero = 0
    one = 1

    def coerce(self, r):
        raise NotImplementedError

    def add(self, r, s):
        return self.coerce(r) + self.coerce(s)

    def mul(self, r, s):
        return self.coerce(r) * self.coerce(s)

    def neg(self, r):
        return -self.coerce(r)

    def conj(self, r):
        raise NotImplementedError

    def is_zero(self, r) -> bool:
        return not self.coerce(r)

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, r) -> str:
        return str(self.coerce(r))

    def __repr__(self) -> str:
        return f"<ring {self.name}>"


class _Integers(Ring):
    name = "int"

    def coerce(self, r):
        if isinstance(r, bool) or not isinstance(r, int):
            raise MixedRings(f"{r!r} is not an integer")
        return r

    def conj(self, r):
        return self.coerce(r)

    def parse(self, text: str) -> int:
        text = text.strip()
        if not re.fullmatch(r"[+-]?\d+", text):
            raise ParseError(f"bad integer literal {text!r}")
        return int(text)


class _GaussianIntegers(Ring):
    name = "gauss"
    zero = Gaussian(0, 0)
    one = Gaussian(1, 0)

    def coerce(self, r):
        if isinstance(r, Gaussian):
            return r
        if isinstance(r, int) and not isinstance(r, bool):
            return Gaussian(r, 0)
        raise MixedRings(f"{r!r} is not a Gaussian integer")

    def conj(self, r):
        return self.coerce(r).conjugate()

    def parse(self, text: str) -> Gaussian:
        t = text.replace(" ", "")
        if not t.endswith("i"):
            return Gaussian(ZZ.parse(t), 0)
        body = t[:-1]
        k = max(body.rfind("+"), body.rfind("-"))
        real, imag = (body[:k], body[k:]) if k > 0 else ("0", body)
        if not re.fullmatch(r"[+-]?\d+", real) or not re.fullmatch(r"[+-]?\d*", imag):
            raise ParseError(f"bad Gaussian integer literal {text!r}")
        mag = imag.lstrip("+-")
        im = int(mag) if mag else 1
        return Gaussian(int(real), -im if imag.startswith("-") else im)


ZZ = _Integers()
ZI = _GaussianIntegers()

RINGS = {"int": ZZ, "gauss": ZI}


def ring_named(name: str) -> Ring:
    try:
        return RINGS[name]
    except KeyError:
        raise ValueError(f"unknown ring {name!r}; choose from {sorted(RINGS)}") from None


def add(ring: Ring, r, s):
    return ring.add(r, s)


def mul(ring: Ring, r, s):
    return ring.mul(r, s)


def neg(ring: Ring, r):
    return ring.neg(r)


def conj(ring: Ring, r):
    return ring.conj(r)


def is_zero(ring: Ring, r) -> bool:
    return ring.is_zero(r)
