"""Points of the projective line P^1(K) and cross-ratios.

A point is either a field element (:class:`~pgl2stab.fields.Elem`) or the
singleton :data:`INF`.

The six cross-ratio values of a quadruple are returned in the order

    c1 = l, c2 = 1/l, c3 = 1-l, c4 = l/(l-1), c5 = 1/(1-l), c6 = (l-1)/l

which is the cross-ratio of (x_s(1), ..., x_s(4)) for s running over the
coset representatives Id, (3 4), (2 3), (2 4), (2 3 4), (2 4 3) of the Klein
group in S4, with (x1, x2, x3, x4) = (inf, 0, 1, l).  With that order the
exceptional coincidences read:

    l = -1   : c1 = c2 = -1,  c3 = c6 = 2,   c4 = c5 = 1/2
    l = 1/2  : c1 = c3 = 1/2, c2 = c5 = 2,   c4 = c6 = -1
    l = 2    : c1 = c4 = 2,   c3 = c5 = -1,  c2 = c6 = 1/2
    l = j    : c1 = c5 = c6 = j,  c2 = c3 = c4 = j^2        (char 2)
    l = -j   : c1 = c5 = c6 = -j, c2 = c3 = c4 = -j^2 = 1/l (char not 2, 3)
    l = -1   : all six equal                                  (char 3)

These are checked in ``tests/test_projline.py``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

from .fields import Elem, Field


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())

    def sort_key(self):
        return (0,)


INF = _Infinity()

Point = Union[Elem, _Infinity]


class DegeneratePointsError(ValueError):
    """Repeated points where distinct ones are required."""


def is_inf(x) -> bool:
    return x is INF


def point_key(x: Point):
    """Sort key: infinity first, then field elements in their canonical order."""
    return (0,) if x is INF else (1, x.sort_key())


def parse_point(K: Field, text: str) -> Point:
    if text.strip().lower() in ("inf", "oo", "∞"):
        return INF
    return K.parse(text)


def format_point(x: Point) -> str:
    return "inf" if x is INF else str(x)


def points(K: Field) -> List[Point]:
    """Every point of P^1(K) for finite K, infinity first."""
    return [INF] + list(K.elements())


def require_distinct(pts, what="points"):
    pts = tuple(pts)
    if len(set(pts)) != len(pts):
        raise DegeneratePointsError(
            f"{what} must be pairwise distinct, got ({', '.join(map(format_point, pts))})")
    return pts


class PointSet(tuple):
    """Ordered tuple of 1 to 4 pairwise distinct points of P^1(K)."""

    def __new__(cls, pts, field: Field = None):
        pts = tuple(pts)
        if not 1 <= len(pts) <= 4:
            raise DegeneratePointsError(f"a point set needs 1 to 4 points, got {len(pts)}")
        require_distinct(pts)
        finite = [x for x in pts if x is not INF]
        if field is None:
            if not finite:
                raise ValueError("cannot infer the field of a point set containing only inf")
            field = finite[0].field
        for x in finite:
            if x.field != field:
                raise ValueError(f"point {x} does not belong to {field}")
        obj = super().__new__(cls, pts)
        obj.field = field
        return obj

    def __getnewargs__(self):
        return (tuple(self), self.field)

    @classmethod
    def parse(cls, K: Field, text: str) -> "PointSet":
        items = [t for t in text.split(",") if t.strip()]
        return cls([parse_point(K, t) for t in items], K)

    def __str__(self):
        return "{" + ", ".join(format_point(x) for x in self) + "}"


def _homog(K: Field, x: Point) -> Tuple[Elem, Elem]:
    return (K.one, K.zero) if x is INF else (x, K.one)


def _bracket(p, q):
    # p[0] q[1] - p[1] q[0]; equals (x_p - x_q) for finite points
    return p[0] * q[1] - p[1] * q[0]


def cross_ratio(x1: Point, x2: Point, x3: Point, x4: Point) -> Point:
    """The cross-ratio [x1, x2, x3, x4].

    This is the image of ``x4`` under the homography sending x1, x2, x3 to
    inf, 0, 1; for finite points it equals
    ``((x4 - x2) / (x4 - x1)) / ((x3 - x2) / (x3 - x1))``.  ``x4`` may
    coincide with one of the first three points.
    """
    require_distinct((x1, x2, x3), "the first three points of a cross-ratio")
    K = next(x.field for x in (x1, x2, x3) if x is not INF)
    h1, h2, h3, h4 = (_homog(K, x) for x in (x1, x2, x3, x4))
    num = _bracket(h4, h2) * _bracket(h3, h1)
    den = _bracket(h4, h1) * _bracket(h3, h2)
    if den.is_zero():
        return INF
    return num / den


@dataclass(frozen=True)
class CrossRatioOrbit:
    values: Tuple[Elem, ...]
    distinct_count: int

    @property
    def stabilizer_order(self) -> int:
        return 24 // self.distinct_count


def _check_lambda(lam: Elem):
    if lam is INF or lam.is_zero() or lam == lam.field.one:
        raise ValueError("lambda must avoid 0 and 1")


def cross_ratio_orbit(lam: Elem) -> CrossRatioOrbit:
    """Six cross-ratios obtained by permuting (inf, 0, 1, lam)."""
    _check_lambda(lam)
    one = lam.field.one
    values = (
        lam,
        one / lam,
        one - lam,
        lam / (lam - one),
        one / (one - lam),
        (lam - one) / lam,
    )
    return CrossRatioOrbit(values, len(set(values)))


def exceptional_lambdas(K: Field) -> Dict[str, List[Elem]]:
    """Values of lambda whose stabilizer is larger than V4, keyed by group type."""
    out: Dict[str, List[Elem]] = {"S4": [], "A4": [], "D4": []}
    char = K.characteristic
    one = K.one
    if char == 3:
        out["S4"] = [-one]
    elif char == 2:
        if K.splits_x2_x_1:
            out["A4"] = list(K.omega_roots)
    else:
        two = one + one
        out["D4"] = [-one, two, one / two]
        if K.splits_x2_x_1:
            j, j2 = K.omega_roots
            out["A4"] = [-j, -j2]
    return out
