"""Closed-form classification of four-point stabilizers.

No enumeration happens here: the group type of G_E follows from the
characteristic of K, whether X^2+X+1 splits, and the cross-ratio lambda.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .fields import Elem, Field, FieldError
from .projline import CrossRatioOrbit, PointSet, cross_ratio_orbit, format_point
from .stabgroup import GROUP_ORDERS, GroupType, conjugate_reduce

GENERIC = "Generic-V4"
CASE_I = "Case-i-S4"
CASE_II = "Case-ii-A4"
CASE_III = "Case-iii-D4"
CASE_IV = "Case-iv-A4"


@dataclass(frozen=True)
class Classification:
    field: Field
    lam: Elem
    group_type: GroupType
    theorem_case: str
    orbit: CrossRatioOrbit

    @property
    def order(self) -> int:
        return GROUP_ORDERS[self.group_type]

    def to_json(self) -> dict:
        return {
            "field": self.field.spec,
            "lambda": str(self.lam),
            "group_type": self.group_type.value,
            "order": self.order,
            "theorem_case": self.theorem_case,
            "orbit_values": [format_point(c) for c in self.orbit.values],
            "distinct_count": self.orbit.distinct_count,
        }


def classify_lambda(K: Field, lam: Elem) -> Classification:
    """Type of the stabilizer of {inf, 0, 1, lam}."""
    if K.kind == "PrimeField" and K.characteristic == 2:
        raise FieldError("F2 has no lambda outside {0, 1}; the classification needs a larger field")
    lam = K(lam)
    orbit = cross_ratio_orbit(lam)
    char = K.characteristic
    one = K.one
    # char 3 first: there j = 1 and -j = -1, so the j-based test below would misfire
    if char == 3 and lam == -one:
        gtype, case = GroupType.S4, CASE_I
    elif char == 2 and K.splits_x2_x_1 and lam in K.omega_roots:
        gtype, case = GroupType.A4, CASE_II
    elif char not in (2, 3) and lam in (-one, one + one, one / (one + one)):
        gtype, case = GroupType.D4, CASE_III
    elif char not in (2, 3) and K.splits_x2_x_1 and lam in tuple(-r for r in K.omega_roots):
        gtype, case = GroupType.A4, CASE_IV
    else:
        gtype, case = GroupType.V4, GENERIC
    return Classification(K, lam, gtype, case, orbit)


def classify_set(E, K: Optional[Field] = None) -> Classification:
    """Type of G_E for a set of four distinct points."""
    E = E if isinstance(E, PointSet) else PointSet(E, K)
    if len(E) != 4:
        raise ValueError(f"classify_set needs four points, got {len(E)}")
    _, lam = conjugate_reduce(E)
    return classify_lambda(E.field, lam)


D4_TRIPLES = ((1, 2, 3), (1, 3, 2), (3, 2, 1))


def rational_d4_test(x1, x2, x3, x4) -> Tuple[bool, Optional[Tuple[int, int, int]]]:
    """Decide whether four distinct rationals have a dihedral stabilizer.

    Returns ``(True, (i, j, k))`` for the first triple satisfying
    ``(-2 x_k + x_i + x_j) x4 = 2 x_i x_j - x_k (x_i + x_j)``, else
    ``(False, None)``.
    """
    xs = []
    for x in (x1, x2, x3, x4):
        if isinstance(x, Elem):
            if x.field.kind != "Rationals":
                raise FieldError(f"rational_d4_test works over Q, not {x.field}")
            x = x.value
        elif not isinstance(x, (int, Fraction)):
            raise FieldError(f"{x!r} is not a rational number")
        xs.append(Fraction(x))
    if len(set(xs)) != 4:
        raise ValueError("the four rationals must be distinct")
    for i, j, k in D4_TRIPLES:
        xi, xj, xk = xs[i - 1], xs[j - 1], xs[k - 1]
        if (-2 * xk + xi + xj) * xs[3] == 2 * xi * xj - xk * (xi + xj):
            return True, (i, j, k)
    return False, None

