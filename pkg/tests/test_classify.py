import itertools
import random
from fractions import Fraction

import pytest

from pgl2stab import (
    FieldError,
    GroupType,
    PointSet,
    classify_lambda,
    classify_set,
    cross_ratio,
    cross_ratio_orbit,
    field_make,
    rational_d4_test,
)
from pgl2stab.classify import CASE_I, CASE_II, CASE_III, CASE_IV, GENERIC

from helpers import ALL_SPECS, random_distinct, random_lambda, root_search

Q = field_make("Q")


def test_case_examples():
    F3 = field_make("F3")
    c = classify_lambda(F3, F3(2))
    assert (c.group_type, c.theorem_case, c.order) == (GroupType.S4, CASE_I, 24)
    c = classify_lambda(Q, Q.parse("1/2"))
    assert (c.group_type, c.theorem_case) == (GroupType.D4, CASE_III)
    c = classify_lambda(Q, Q.parse("3"))
    assert (c.group_type, c.theorem_case) == (GroupType.V4, GENERIC)
    F7 = field_make("F7")
    assert root_search(7)[0] == 2
    c = classify_lambda(F7, F7(5))
    assert (c.group_type, c.theorem_case) == (GroupType.A4, CASE_IV)
    F4 = field_make("F2^2")
    c = classify_lambda(F4, F4.parse("j"))
    assert (c.group_type, c.theorem_case) == (GroupType.A4, CASE_II)


def test_errors():
    with pytest.raises(ValueError):
        classify_lambda(Q, Q.zero)
    with pytest.raises(ValueError):
        classify_lambda(Q, Q.one)
    F2 = field_make("F2")
    with pytest.raises(FieldError):
        classify_lambda(F2, F2(1))


def test_char_three_branch_order():
    # in char 3, -j = -1, which must land in case (i), never case (iv)
    F3 = field_make("F3")
    assert F3.omega_roots == (F3.one, F3.one)
    assert classify_lambda(F3, -F3.one).theorem_case == CASE_I


@pytest.mark.parametrize("spec", ALL_SPECS)
def test_index_identity_and_orbit_invariance(spec):
    K = field_make(spec)
    rng = random.Random(spec)
    for _ in range(30):
        lam = random_lambda(K, rng)
        c = classify_lambda(K, lam)
        assert c.order * c.orbit.distinct_count == 24
        for other in cross_ratio_orbit(lam).values:
            assert classify_lambda(K, other).group_type == c.group_type


def test_classify_set_examples():
    c = classify_set(PointSet.parse(Q, "0,2,3,6"))
    assert c.group_type is GroupType.D4 and c.lam == Q.parse("2")
    assert classify_set(PointSet.parse(Q, "0,1,2,3")).group_type is GroupType.V4
    F3 = field_make("F3")
    assert classify_set(PointSet.parse(F3, "0,1,2,inf")).group_type is GroupType.S4


@pytest.mark.parametrize("spec", ["Q", "F7", "F13", "F2^2", "F5^2"])
def test_classify_set_reordering_invariant(spec):
    K = field_make(spec)
    rng = random.Random(spec)
    for _ in range(5):
        S = random_distinct(K, rng, 4)
        types = {classify_set(PointSet(p, K)).group_type for p in itertools.permutations(S)}
        assert len(types) == 1


def test_rationals_never_a4_or_s4():
    rng = random.Random(9)
    for _ in range(200):
        assert classify_set(random_distinct(Q, rng, 4)).group_type in (GroupType.V4, GroupType.D4)


def test_rational_d4_examples():
    F = Fraction
    assert rational_d4_test(0, 2, 3, 6) == (True, (1, 3, 2))
    xs = [F(0), F(2), F(3), F(6)]
    # (i, j, k) = (1, 3, 2): both sides are -6
    assert (-2 * xs[1] + xs[0] + xs[2]) * xs[3] == -6 == 2 * xs[0] * xs[2] - xs[1] * (xs[0] + xs[2])
    assert rational_d4_test(0, 1, 2, 3) == (False, None)


def test_rational_d4_lhs_rhs_pairs():
    xs = [Fraction(v) for v in (0, 1, 2, 3)]
    pairs = []
    for i, j, k in ((1, 2, 3), (1, 3, 2), (3, 2, 1)):
        xi, xj, xk = xs[i - 1], xs[j - 1], xs[k - 1]
        pairs.append(((-2 * xk + xi + xj) * xs[3], 2 * xi * xj - xk * (xi + xj)))
    assert pairs == [(-9, -2), (0, -2), (9, 4)]


def test_arithmetic_progressions_are_not_dihedral():
    rng = random.Random(4)
    for _ in range(20):
        x = Fraction(rng.randint(-100, 100), rng.randint(1, 20))
        d = Fraction(rng.choice([-1, 1]) * rng.randint(1, 100), rng.randint(1, 20))
        pts = [x + n * d for n in range(4)]
        assert cross_ratio(*(Q(p) for p in pts)) == Q.parse("4/3")
        assert rational_d4_test(*pts) == (False, None)


def test_rational_d4_matches_orbit_membership():
    rng = random.Random(12)
    harmonic = {Q(-1), Q(2), Q.parse("1/2")}
    for _ in range(300):
        S = random_distinct(Q, rng, 4, inf_prob=0)
        ok, _ = rational_d4_test(*S)
        any_order = any(cross_ratio(*p) in harmonic for p in itertools.permutations(S))
        assert ok == any_order


def test_rational_d4_errors():
    with pytest.raises(ValueError):
        rational_d4_test(0, 1, 1, 2)
    F5 = field_make("F5")
    with pytest.raises(FieldError):
        rational_d4_test(F5(0), F5(1), F5(2), F5(3))


def test_classification_json():
    data = classify_lambda(Q, Q(2)).to_json()
    assert data == {
        "field": "Q",
        "lambda": "2",
        "group_type": "D4",
        "order": 8,
        "theorem_case": CASE_III,
        "orbit_values": ["2", "1/2", "-1", "2", "-1", "1/2"],
        "distinct_count": 3,
    }
