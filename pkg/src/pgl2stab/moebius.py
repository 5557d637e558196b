"""Homographies z -> (a z + b) / (c z + d) as elements of PGL2(K)."""

from __future__ import annotations

from typing import Optional, Sequence

from .fields import Elem, Field, MixedFieldError
from .projline import INF, Point, require_distinct


class SingularMatrixError(ValueError):
    """ad - bc = 0."""


class Moebius:
    """A homography, stored with its first nonzero coefficient equal to 1.

    Calling an instance applies it to a point of P^1(K).  ``g * h`` is the
    composition g o h.
    """

    __slots__ = ("a", "b", "c", "d", "field", "_key")

    def __init__(self, a, b, c, d, field: Optional[Field] = None):
        if field is None:
            field = next((x.field for x in (a, b, c, d) if isinstance(x, Elem)), None)
            if field is None:
                raise TypeError("cannot infer the field from plain integers; pass field=")
        a, b, c, d = (field(x) for x in (a, b, c, d))
        if (a * d - b * c).is_zero():
            raise SingularMatrixError(f"singular coefficients ({a}, {b}, {c}, {d})")
        lead = next(x for x in (a, b, c, d) if not x.is_zero())
        if lead != field.one:
            s = lead.inv()
            a, b, c, d = a * s, b * s, c * s, d * s
        self.a, self.b, self.c, self.d = a, b, c, d
        self.field = field
        self._key = (a.value, b.value, c.value, d.value)

    @classmethod
    def identity(cls, K: Field) -> "Moebius":
        return cls(K.one, K.zero, K.zero, K.one, K)

    @property
    def coeffs(self):
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other):
        if not isinstance(other, Moebius):
            return NotImplemented
        return self._key == other._key and self.field == other.field

    def __hash__(self):
        return hash(self._key)

    def sort_key(self):
        return tuple(x.sort_key() for x in self.coeffs)

    def __reduce__(self):
        return (Moebius, (self.a, self.b, self.c, self.d, self.field))

    def __call__(self, z: Point) -> Point:
        a, b, c, d = self.a, self.b, self.c, self.d
        if z is INF:
            return INF if c.is_zero() else a / c
        if z.field != self.field:
            raise MixedFieldError(f"{z} is not a point over {self.field}")
        den = c * z + d
        if den.is_zero():
            return INF
        return (a * z + b) / den

    def __mul__(self, other: "Moebius") -> "Moebius":
        if not isinstance(other, Moebius):
            return NotImplemented
        if other.field != self.field:
            raise MixedFieldError(f"cannot compose maps over {self.field} and {other.field}")
        a, b, c, d = self.coeffs
        e, f, g, h = other.coeffs
        return Moebius(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h, self.field)

    def inverse(self) -> "Moebius":
        return Moebius(self.d, -self.b, -self.c, self.a, self.field)

    def is_identity(self) -> bool:
        return self.b.is_zero() and self.c.is_zero() and self.d == self.field.one

    def __pow__(self, n: int) -> "Moebius":
        if n < 0:
            return self.inverse() ** (-n)
        result = Moebius.identity(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def formula(self) -> str:
        """Render as ``(a*z+b)/(c*z+d)`` with canonical coefficients."""
        a, b, c, d = (_coef(x) for x in self.coeffs)
        b = b if b.startswith("-") else "+" + b
        d = d if d.startswith("-") else "+" + d
        return f"({a}*z{b})/({c}*z{d})"

    def to_json(self):
        return [str(x) for x in self.coeffs]

    def __repr__(self):
        return f"Moebius{self.formula()}"

    __str__ = formula


def _coef(x: Elem) -> str:
    s = str(x)
    return f"({s})" if ("+" in s or "-" in s[1:]) else s


def moebius_new(a, b, c, d, field: Optional[Field] = None) -> Moebius:
    return Moebius(a, b, c, d, field)


def apply(h: Moebius, x: Point) -> Point:
    return h(x)


def compose(g: Moebius, h: Moebius) -> Moebius:
    """g o h."""
    return g * h


def inverse(h: Moebius) -> Moebius:
    return h.inverse()


def frame_map(K: Field, x1: Point, x2: Point, x3: Point) -> Moebius:
    """The homography sending x1, x2, x3 to inf, 0, 1.

    For finite points this is
    w -> ((w - x2) / (w - x1)) / ((x3 - x2) / (x3 - x1));
    when one of the points is inf the corresponding factors drop out.
    """
    require_distinct((x1, x2, x3), "frame points")
    one, zero = K.one, K.zero
    if x1 is INF:
        return Moebius(one, -x2, zero, x3 - x2, K)
    if x2 is INF:
        return Moebius(zero, x3 - x1, one, -x1, K)
    if x3 is INF:
        return Moebius(one, -x2, one, -x1, K)
    return Moebius(x3 - x1, -x2 * (x3 - x1), x3 - x2, -x1 * (x3 - x2), K)


def _field_of(points: Sequence[Point]) -> Field:
    for x in points:
        if x is not INF:
            return x.field
    raise ValueError("cannot infer the field from points that are all inf")


def interpolate3(src: Sequence[Point], dst: Sequence[Point], K: Optional[Field] = None) -> Moebius:
    """The unique homography h with h(src[i]) = dst[i] for i = 0, 1, 2."""
    src, dst = tuple(src), tuple(dst)
    if len(src) != 3 or len(dst) != 3:
        raise ValueError("interpolate3 needs exactly three source and three target points")
    if K is None:
        K = _field_of(src + dst)
    f_src = frame_map(K, *src)
    f_dst = frame_map(K, *dst)
    return f_dst.inverse() * f_src


def is_involution(h: Moebius) -> bool:
    return not h.is_identity() and (h * h).is_identity()


def order(h: Moebius, bound: int = 24) -> Optional[int]:
    """Least n <= bound with h^n = id, or None if there is none."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    g = h
    for n in range(1, bound + 1):
        if g.is_identity():
            return n
        g = g * h
    return None
