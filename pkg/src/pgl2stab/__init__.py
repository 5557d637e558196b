"""Stabilizers of finite subsets of the projective line in PGL2(K).

Exact arithmetic over Q, F_p and F_p[X]/(X^2+X+1); brute-force and
closed-form computation of the group of homographies preserving a set of
at most four points.
"""

from .classify import Classification, classify_lambda, classify_set, rational_d4_test
from .fields import Elem, Field, FieldError, MixedFieldError, field_enumerate, field_make
from .moebius import (
    Moebius,
    SingularMatrixError,
    apply,
    compose,
    frame_map,
    interpolate3,
    inverse,
    is_involution,
    moebius_new,
    order,
)
from .projline import (
    INF,
    CrossRatioOrbit,
    DegeneratePointsError,
    PointSet,
    cross_ratio,
    cross_ratio_orbit,
    exceptional_lambdas,
    parse_point,
)
from .stabgroup import (
    ConsistencyError,
    GroupType,
    StabilizerGroup,
    conjugate_reduce,
    klein_subgroup,
    recognize_group,
    stabilizer,
    stabilizer_of_four,
    stabilizer_of_three,
    stabilizer_small,
    standard_frame,
)

__version__ = "0.1.0"
