"""Stabilizers G_E = {h in PGL2(K) : h(E) = E} for point sets of size 1 to 4.

Four-point stabilizers are found by testing, for each of the 24 orderings of
E, whether the permuted quadruple has the same cross-ratio; a match is
realised by the homography through the first three pairs.  Three-point
stabilizers are conjugates of the six maps fixing {inf, 0, 1}.  For one or
two points the stabilizer is infinite over Q and is enumerated over finite
fields by transporting the standard families z -> a z + b and
z -> a z, a / z.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from .fields import Elem, Field
from .moebius import Moebius, frame_map, interpolate3, is_involution, order
from .projline import INF, Point, PointSet, cross_ratio, format_point, points


class ConsistencyError(RuntimeError):
    """An internal invariant failed; indicates a bug, never bad input."""


class GroupType(str, enum.Enum):
    V4 = "V4"
    D4 = "D4"
    A4 = "A4"
    S4 = "S4"
    S3 = "S3"
    C2_X_KSTAR = "C2xK*"
    AFFINE_LIKE = "AffineLike"
    INFINITE = "Infinite"
    FINITE_OTHER = "FiniteOther"

    def __str__(self):
        return self.value


GROUP_ORDERS = {
    GroupType.V4: 4,
    GroupType.D4: 8,
    GroupType.A4: 12,
    GroupType.S4: 24,
    GroupType.S3: 6,
}

Perm = Tuple[int, ...]


def cycle_notation(perm: Perm) -> str:
    """1-based image tuple to cycle notation, e.g. (2, 1, 4, 3) -> '(1 2)(3 4)'."""
    seen = set()
    cycles = []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        nxt = perm[start - 1]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt - 1]
        if len(cyc) > 1:
            cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def perm_parity(perm: Perm) -> int:
    """0 for even, 1 for odd."""
    seen = set()
    cycles = 0
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        cycles += 1
        x = start
        while x not in seen:
            seen.add(x)
            x = perm[x - 1]
    return (len(perm) - cycles) % 2


def action_on(h: Moebius, E: Sequence[Point]) -> Perm:
    """Permutation induced on E: h(E[i]) = E[perm[i] - 1]."""
    index = {x: i for i, x in enumerate(E, 1)}
    try:
        return tuple(index[h(x)] for x in E)
    except KeyError:
        raise ValueError(f"{h} does not stabilize the given set") from None


@dataclass
class StabilizerGroup:
    field: Field
    base_set: PointSet
    group_type: GroupType
    elements: Optional[List[Moebius]] = None
    perms: Dict[Moebius, Perm] = dc_field(default_factory=dict)
    witness: Optional[str] = None

    @property
    def order(self) -> Optional[int]:
        return None if self.elements is None else len(self.elements)

    @property
    def is_finite(self) -> bool:
        return self.elements is not None

    def __contains__(self, h: Moebius) -> bool:
        return self.elements is not None and h in self.perms

    def __iter__(self):
        return iter(self.elements or ())

    def __len__(self):
        if self.elements is None:
            raise TypeError("infinite stabilizer has no length")
        return len(self.elements)

    def to_json(self) -> dict:
        out = {
            "field": self.field.spec,
            "base_set": [format_point(x) for x in self.base_set],
            "group_type": self.group_type.value,
            "order": self.order,
        }
        if self.elements is not None:
            out["elements"] = [h.to_json() for h in self.elements]
            out["formulas"] = [h.formula() for h in self.elements]
            out["perms"] = [cycle_notation(self.perms[h]) for h in self.elements]
        if self.witness:
            out["witness"] = self.witness
        return out


def _finish(K: Field, E: PointSet, maps, group_type=None, witness=None) -> StabilizerGroup:
    elements = sorted(set(maps), key=Moebius.sort_key)
    perms = {h: action_on(h, E) for h in elements}
    g = StabilizerGroup(K, E, group_type or GroupType.FINITE_OTHER, elements, perms, witness)
    verify_group(g)
    if group_type is None:
        g.group_type = recognize_group(g)
    return g


def verify_group(g: StabilizerGroup) -> None:
    """Check identity, inverses and closure; raise ConsistencyError otherwise."""
    elems = set(g.elements)
    if Moebius.identity(g.field) not in elems:
        raise ConsistencyError("identity missing from stabilizer")
    for h in g.elements:
        if h.inverse() not in elems:
            raise ConsistencyError(f"inverse of {h} missing from stabilizer")
        for k in g.elements:
            if h * k not in elems:
                raise ConsistencyError(f"stabilizer not closed: {h} o {k}")


def _as_pointset(E, K: Optional[Field] = None, size=None) -> PointSet:
    if not isinstance(E, PointSet):
        E = PointSet(E, K)
    if size is not None and len(E) not in (size if isinstance(size, tuple) else (size,)):
        raise ValueError(f"expected a point set of size {size}, got {len(E)}")
    return E


KLEIN_PERMS: Tuple[Perm, ...] = ((1, 2, 3, 4), (2, 1, 4, 3), (3, 4, 1, 2), (4, 3, 2, 1))


def klein_subgroup(E, K: Optional[Field] = None) -> StabilizerGroup:
    """The Klein four-group {h0, h1, h2, h3} inside G_E for |E| = 4.

    h1, h2, h3 act on E as (1 2)(3 4), (1 3)(2 4), (1 4)(2 3).
    """
    E = _as_pointset(E, K, 4)
    K = E.field
    maps = []
    for perm in KLEIN_PERMS:
        h = interpolate3(E[:3], [E[i - 1] for i in perm[:3]], K)
        if h(E[3]) != E[perm[3] - 1]:
            raise ConsistencyError(f"Klein map for {cycle_notation(perm)} misses the fourth point")
        maps.append(h)
    h0, h1, h2, h3 = maps
    if not h0.is_identity() or not all(is_involution(h) for h in (h1, h2, h3)):
        raise ConsistencyError("Klein group elements are not involutions")
    if h2 * h1 != h3 or h1 * h2 != h3:
        raise ConsistencyError("h3 != h2 o h1")
    return _finish(K, E, maps, GroupType.V4)


def stabilizer_of_four(E, K: Optional[Field] = None) -> StabilizerGroup:
    E = _as_pointset(E, K, 4)
    K = E.field
    base = cross_ratio(*E)
    maps = []
    for sigma in itertools.permutations(range(4)):
        target = [E[i] for i in sigma]
        if cross_ratio(*target) != base:
            continue
        h = interpolate3(E[:3], target[:3], K)
        if h(E[3]) != target[3]:
            raise ConsistencyError(
                f"equal cross-ratios but no homography realises {cycle_notation(tuple(i + 1 for i in sigma))}")
        maps.append(h)
    g = _finish(K, E, maps)
    if len(set(g.perms.values())) != len(g.elements):
        raise ConsistencyError("action on E is not faithful")
    return g


STANDARD_TRIPLE_MAPS = (
    # z, 1/z, 1-z, 1/(1-z), (z-1)/z, z/(z-1)
    (1, 0, 0, 1),
    (0, 1, 1, 0),
    (-1, 1, 0, 1),
    (0, 1, -1, 1),
    (1, -1, 1, 0),
    (1, 0, 1, -1),
)


def stabilizer_of_three(E, K: Optional[Field] = None) -> StabilizerGroup:
    E = _as_pointset(E, K, 3)
    K = E.field
    f = interpolate3(E, (INF, K.zero, K.one), K)
    f_inv = f.inverse()
    maps = [f_inv * Moebius(*c, field=K) * f for c in STANDARD_TRIPLE_MAPS]
    return _finish(K, E, maps)


def _complete_frame(K: Field, E: PointSet, pick_last=False) -> Moebius:
    """A map sending E[0] to inf (and E[1] to 0 when present), using auxiliary points."""
    if K.is_finite:
        spare = [x for x in points(K) if x not in E]
        if pick_last:
            spare.reverse()
    else:
        spare = [x for x in (K.embed(n) for n in range(6)) if x not in E]
    if len(E) == 1:
        return frame_map(K, E[0], spare[0], spare[1])
    return frame_map(K, E[0], E[1], spare[0])


def _standard_small(K: Field, size: int) -> List[Moebius]:
    nonzero = [a for a in K.elements() if not a.is_zero()]
    if size == 1:
        return [Moebius(a, b, K.zero, K.one, K) for a in nonzero for b in K.elements()]
    return ([Moebius(a, K.zero, K.zero, K.one, K) for a in nonzero]
            + [Moebius(K.zero, a, K.one, K.zero, K) for a in nonzero])


def stabilizer_small(E, K: Optional[Field] = None) -> StabilizerGroup:
    """Stabilizer of one or two points."""
    if isinstance(E, PointSet):
        K = K or E.field
    E = _as_pointset(E, K, (1, 2))
    K = E.field
    f = _complete_frame(K, E)
    f_inv = f.inverse()
    if not K.is_finite:
        if len(E) == 1:
            family = "z -> a*z + b with a != 0"
        else:
            family = "z -> a*z and z -> a/z with a != 0"
        if f.is_identity():
            witness = family
        else:
            witness = f"f^-1 o g o f for g in {{{family}}}, f = {f.formula()}"
        return StabilizerGroup(K, E, GroupType.INFINITE, None, {}, witness)
    maps = [f_inv * g * f for g in _standard_small(K, len(E))]
    q = K.order
    expected = q * q - q if len(E) == 1 else 2 * (q - 1)
    if len(set(maps)) != expected:
        raise ConsistencyError(f"expected {expected} elements, found {len(set(maps))}")
    f2 = _complete_frame(K, E, pick_last=True)
    other = {f2.inverse() * g * f2 for g in _standard_small(K, len(E))}
    if other != set(maps):
        raise ConsistencyError("small stabilizer depends on the auxiliary frame points")
    gtype = GroupType.AFFINE_LIKE if len(E) == 1 else GroupType.C2_X_KSTAR
    return _finish(K, E, maps, gtype)


def stabilizer(E, K: Optional[Field] = None) -> StabilizerGroup:
    """G_E for any point set of size 1 to 4."""
    E = _as_pointset(E, K)
    if len(E) <= 2:
        return stabilizer_small(E)
    if len(E) == 3:
        return stabilizer_of_three(E)
    return stabilizer_of_four(E)


def recognize_group(g: StabilizerGroup) -> GroupType:
    """Name the isomorphism type of a finite stabilizer of 3 or 4 points.

    The order decides the candidate; element orders (and permutation parity
    for S4) are cross-checked against it.
    """
    n = len(g.elements)
    k = len(g.base_set)
    orders = [order(h, 24) for h in g.elements]
    if k == 3:
        if n != 6 or 3 not in orders or 2 not in orders:
            raise ConsistencyError(f"three-point stabilizer of order {n} is not S3")
        return GroupType.S3
    if k != 4:
        raise ValueError("recognize_group expects a stabilizer of 3 or 4 points")
    if n == 4:
        if sorted(orders) != [1, 2, 2, 2]:
            raise ConsistencyError("order-4 stabilizer is not a Klein four-group")
        return GroupType.V4
    if n == 8:
        if 4 not in orders:
            raise ConsistencyError("order-8 stabilizer has no element of order 4")
        return GroupType.D4
    if n == 12:
        if 3 not in orders or 4 in orders:
            raise ConsistencyError("order-12 stabilizer is not A4")
        return GroupType.A4
    if n == 24:
        if 4 not in orders or not any(perm_parity(p) for p in g.perms.values()):
            raise ConsistencyError("order-24 stabilizer is not S4")
        return GroupType.S4
    raise ConsistencyError(f"four-point stabilizer of impossible order {n}")


def conjugate_reduce(E, K: Optional[Field] = None) -> Tuple[Moebius, Elem]:
    """Return (f, lam) with f sending E[:3] to (inf, 0, 1) and lam = f(E[3])."""
    E = _as_pointset(E, K, 4)
    K = E.field
    f = interpolate3(E[:3], (INF, K.zero, K.one), K)
    lam = f(E[3])
    if lam != cross_ratio(*E):
        raise ConsistencyError("reduction map disagrees with the cross-ratio")
    return f, lam


def standard_frame(lam: Elem) -> PointSet:
    K = lam.field
    return PointSet((INF, K.zero, K.one, lam), K)
