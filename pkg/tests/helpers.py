"""Random generators and brute-force oracles shared by the tests.

The oracles here deliberately avoid the library's frame maps and cross-ratio
code so they can check them independently.
"""

import itertools
import random
from fractions import Fraction

from pgl2stab import INF, Moebius, PointSet

FINITE_SPECS = ["F3", "F2^2", "F5", "F7", "F11", "F13", "F5^2", "F17", "F19", "F11^2"]
ALL_SPECS = ["Q"] + FINITE_SPECS


def random_rational(rng: random.Random, bound=50) -> Fraction:
    den = rng.randint(1, bound)
    return Fraction(rng.randint(-bound, bound), den)


def random_elem(K, rng):
    if K.is_finite:
        return rng.choice(list(K.elements()))
    return K(random_rational(rng))


def random_point(K, rng, inf_prob=0.1):
    if rng.random() < inf_prob:
        return INF
    return random_elem(K, rng)


def random_moebius(K, rng) -> Moebius:
    while True:
        a, b, c, d = (random_elem(K, rng) for _ in range(4))
        if not (a * d - b * c).is_zero():
            return Moebius(a, b, c, d, K)


def random_distinct(K, rng, n, inf_prob=0.1):
    pts = []
    while len(pts) < n:
        x = random_point(K, rng, inf_prob)
        if x not in pts:
            pts.append(x)
    return PointSet(pts, K)


def random_lambda(K, rng):
    while True:
        lam = random_elem(K, rng)
        if not lam.is_zero() and lam != K.one:
            return lam


def root_search(p):
    """Residues r mod p with r^2 + r + 1 = 0, by exhaustion."""
    return [r for r in range(p) if (r * r + r + 1) % p == 0]


def all_pgl2(K):
    """Every element of PGL2(F_q), one representative per class."""
    elems = list(K.elements())
    seen = set()
    for a, b, c, d in itertools.product(elems, repeat=4):
        if (a * d - b * c).is_zero():
            continue
        h = Moebius(a, b, c, d, K)
        if h not in seen:
            seen.add(h)
            yield h


def brute_stabilizer(K, E):
    """G_E by testing every element of PGL2(F_q)."""
    target = set(E)
    return {h for h in all_pgl2(K) if {h(x) for x in E} == target}


def cross_ratio_fraction(x1, x2, x3, x4):
    """Direct evaluation of ((x4-x2)/(x4-x1)) / ((x3-x2)/(x3-x1)) for finite rationals."""
    return ((x4 - x2) / (x4 - x1)) / ((x3 - x2) / (x3 - x1))

