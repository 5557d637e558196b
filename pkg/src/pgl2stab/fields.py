"""Exact arithmetic over Q, the prime fields F_p and F_p[X]/(X^2+X+1).

A field is described by one of the three :class:`Field` subclasses below and
its elements are :class:`Elem` instances.  Elements carry a reference to
their field; arithmetic between elements of different fields raises
:class:`MixedFieldError`.

Use :func:`field_make` to build a field from its text specifier::

    >>> K = field_make("F7")
    >>> K.omega_roots
    (2, 4)
    >>> K("3") * K("5")
    1
"""

from __future__ import annotations

import functools
import re
from fractions import Fraction
from typing import Iterator, Optional, Tuple


class FieldError(ValueError):
    """Invalid field specifier or element literal."""


class MixedFieldError(FieldError):
    """Operands belong to different fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Elem:
    """An exact element of a field.

    ``value`` is the raw representation: a reduced :class:`Fraction` over Q,
    an int in ``[0, p)`` over F_p, or a pair ``(a, b)`` meaning ``a + b*j``
    over the quadratic extension.  Instances are immutable and hashable.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: "Field", value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("field elements are immutable")

    def __reduce__(self):
        return (Elem, (self.field, self.value))

    def _other(self, other) -> "Elem":
        if isinstance(other, Elem):
            if other.field is not self.field and other.field != self.field:
                raise MixedFieldError(f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.embed(other)
        return NotImplemented

    def _wrap(self, value) -> "Elem":
        return Elem(self.field, value)

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field._add(self.value, o.value))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field._sub(self.value, o.value))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field._sub(o.value, self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field._mul(self.value, o.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field._mul(self.value, self.field._inv(o.value)))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field._mul(o.value, self.field._inv(self.value)))

    def __neg__(self):
        return self._wrap(self.field._neg(self.value))

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inv(self) -> "Elem":
        return self._wrap(self.field._inv(self.value))

    def is_zero(self) -> bool:
        return self.value == self.field.zero.value

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Elem):
            return self.value == other.value and (
                self.field is other.field or self.field == other.field)
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field.embed(other).value
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def sort_key(self):
        """Total order used for deterministic output (enumeration order on finite fields)."""
        return self.field._sort_key(self.value)

    def __str__(self):
        return self.field.format(self)

    def __repr__(self):
        return str(self)


class Field:
    """Base class of the supported field descriptors."""

    kind: str = ""
    characteristic: int = 0
    splits_x2_x_1: bool = False

    def __init__(self):
        self.zero = Elem(self, self._raw(0))
        self.one = Elem(self, self._raw(1))

    # raw-representation hooks, overridden per family
    def _raw(self, n):
        raise NotImplementedError

    def _add(self, x, y):
        raise NotImplementedError

    def _sub(self, x, y):
        raise NotImplementedError

    def _mul(self, x, y):
        raise NotImplementedError

    def _neg(self, x):
        raise NotImplementedError

    def _inv(self, x):
        raise NotImplementedError

    def _sort_key(self, x):
        return x

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    @property
    def order(self) -> Optional[int]:
        """Number of elements, or None for Q."""
        return None

    @property
    def omega_roots(self) -> Optional[Tuple[Elem, Elem]]:
        return None

    def embed(self, n) -> Elem:
        """Image of an integer or Fraction in this field."""
        if isinstance(n, Fraction):
            return self.embed(n.numerator) / self.embed(n.denominator)
        return Elem(self, self._raw(n))

    def __call__(self, literal) -> Elem:
        if isinstance(literal, Elem):
            if literal.field != self:
                raise MixedFieldError(f"{literal} is not an element of {self}")
            return literal
        if isinstance(literal, (int, Fraction)):
            return self.embed(literal)
        return self.parse(literal)

    def parse(self, text: str) -> Elem:
        text = text.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
            raise FieldError(f"cannot parse {text!r} as an element of {self}")
        try:
            return self.embed(Fraction(text))
        except ZeroDivisionError:
            raise FieldError(f"zero denominator in {text!r}") from None

    def format(self, x: Elem) -> str:
        return str(x.value)

    def elements(self) -> Iterator[Elem]:
        raise FieldError(f"{self} is infinite and cannot be enumerated")

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec == other.spec

    def __reduce__(self):
        return (field_make, (self.spec,))

    def __hash__(self):
        return hash(self.spec)

    def __str__(self):
        return self.spec

    def __repr__(self):
        return f"{type(self).__name__}({self.spec!r})"


class Rationals(Field):
    kind = "Rationals"
    spec = "Q"

    def _raw(self, n):
        return Fraction(n)

    def _add(self, x, y):
        return x + y

    def _sub(self, x, y):
        return x - y

    def _mul(self, x, y):
        return x * y

    def _neg(self, x):
        return -x

    def _inv(self, x):
        if x == 0:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / x


class PrimeField(Field):
    kind = "PrimeField"

    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.spec = f"F{p}"
        super().__init__()
        roots = [r for r in range(p) if (r * r + r + 1) % p == 0]
        self.splits_x2_x_1 = bool(roots)
        if roots:
            j = roots[0]
            self._omega = (Elem(self, j), Elem(self, j * j % p))
        else:
            self._omega = None

    @property
    def order(self):
        return self.p

    @property
    def omega_roots(self):
        return self._omega

    def _raw(self, n):
        return n % self.p

    def _add(self, x, y):
        return (x + y) % self.p

    def _sub(self, x, y):
        return (x - y) % self.p

    def _mul(self, x, y):
        return x * y % self.p

    def _neg(self, x):
        return -x % self.p

    def _inv(self, x):
        if x == 0:
            raise ZeroDivisionError(f"division by zero in {self.spec}")
        return pow(x, -1, self.p)

    def elements(self):
        for r in range(self.p):
            yield Elem(self, r)


class QuadExt(Field):
    """F_p[X]/(X^2+X+1) for p = 2 mod 3; ``j`` is the class of X."""

    kind = "QuadExt"

    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p % 3 != 2:
            raise FieldError(f"X^2+X+1 is reducible over F{p}; F{p}^2 is not available")
        self.p = p
        self.characteristic = p
        self.spec = f"F{p}^2"
        self.splits_x2_x_1 = True
        super().__init__()
        self.j = Elem(self, (0, 1))
        self._omega = (self.j, Elem(self, (p - 1, p - 1)))

    @property
    def order(self):
        return self.p * self.p

    @property
    def omega_roots(self):
        return self._omega

    def _raw(self, n):
        return (n % self.p, 0)

    def _add(self, x, y):
        p = self.p
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p)

    def _sub(self, x, y):
        p = self.p
        return ((x[0] - y[0]) % p, (x[1] - y[1]) % p)

    def _mul(self, x, y):
        # j^2 = -1 - j
        p = self.p
        a, b = x
        c, d = y
        bd = b * d
        return ((a * c - bd) % p, (a * d + b * c - bd) % p)

    def _neg(self, x):
        p = self.p
        return (-x[0] % p, -x[1] % p)

    def _inv(self, x):
        p = self.p
        a, b = x
        norm = (a * a - a * b + b * b) % p
        if norm == 0:
            raise ZeroDivisionError(f"division by zero in {self.spec}")
        n_inv = pow(norm, -1, p)
        # conjugate of a + b*j is (a - b) - b*j
        return ((a - b) * n_inv % p, -b * n_inv % p)

    def _sort_key(self, x):
        return (x[1], x[0])

    def parse(self, text: str) -> Elem:
        s = text.replace(" ", "")
        if not s:
            raise FieldError("empty element literal")
        terms = re.findall(r"[+-]?[^+-]+", s)
        if "".join(terms) != s:
            raise FieldError(f"cannot parse {text!r} as an element of {self}")
        a = b = 0
        for term in terms:
            m = re.fullmatch(r"([+-]?)(?:(\d+)\*?)?j", term)
            if m:
                coeff = int(m.group(2)) if m.group(2) else 1
                b += -coeff if m.group(1) == "-" else coeff
                continue
            if re.fullmatch(r"[+-]?\d+", term):
                a += int(term)
                continue
            raise FieldError(f"cannot parse {text!r} as an element of {self}")
        return Elem(self, (a % self.p, b % self.p))

    def format(self, x: Elem) -> str:
        a, b = x.value
        if b == 0:
            return str(a)
        jpart = "j" if b == 1 else f"{b}*j"
        return jpart if a == 0 else f"{a}+{jpart}"

    def elements(self):
        for b in range(self.p):
            for a in range(self.p):
                yield Elem(self, (a, b))


@functools.lru_cache(maxsize=None)
def field_make(spec: str) -> Field:
    """Build a field from ``Q``, ``F<p>`` or ``F<p>^2``.

    Results are cached, so equal specifiers give the identical object.
    """
    s = spec.strip()
    if s == "Q":
        return Rationals()
    m = re.fullmatch(r"F(\d+)(\^2)?", s)
    if not m:
        raise FieldError(f"bad field specifier {spec!r}; expected Q, F<p> or F<p>^2")
    p = int(m.group(1))
    return QuadExt(p) if m.group(2) else PrimeField(p)


def field_enumerate(K: Field) -> list:
    """All elements of a finite field in deterministic order."""
    return list(K.elements())
