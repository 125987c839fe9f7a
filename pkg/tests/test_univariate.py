"""F_p root finding: fixed small-field cases, split products, determinism."""

import random

import pytest

from fiberbound import MvPoly, PrimeField, RationalField, RationalModeUnsupported
from fiberbound.univariate import (irreducible_quadratics, sqrt_mod,
                                   u_roots, univariate_roots)


def test_roots_small_field_examples():
    F7 = PrimeField(7)
    t = MvPoly.variable(F7, 1, 0)
    assert univariate_roots(t ** 2 - 1) == [1, 6]
    assert univariate_roots(t ** 2 + 1) == []   # -1 is a non-residue mod 7


def test_roots_from_known_construction(field):
    rng = random.Random(31)
    t = MvPoly.variable(field, 1, 0)
    for _ in range(15):
        wanted = sorted({field.rand(rng) for _ in range(rng.randrange(1, 7))})
        prod = MvPoly.constant(field, 1, field.rand_nonzero(rng))
        for r in wanted:
            prod = prod * (t - MvPoly.constant(field, 1, r))
        assert univariate_roots(prod, seed=rng.randrange(1000)) == wanted


def test_roots_with_multiplicity_and_zero_root(field):
    t = MvPoly.variable(field, 1, 0)
    p = t ** 3 * (t - 2) ** 2 * (t + 5)
    assert univariate_roots(p) == sorted([0, 2, field.conv(-5)])


def test_roots_deterministic_per_seed(field):
    rng = random.Random(33)
    t = MvPoly.variable(field, 1, 0)
    prod = MvPoly.one(field, 1)
    for r in [field.rand(rng) for _ in range(8)]:
        prod = prod * (t - MvPoly.constant(field, 1, r))
    assert univariate_roots(prod, seed=4) == univariate_roots(prod, seed=4)
    assert univariate_roots(prod, seed=4) == univariate_roots(prod, seed=5)


def test_roots_rational_mode_rejected():
    Q = RationalField()
    t = MvPoly.variable(Q, 1, 0)
    with pytest.raises(RationalModeUnsupported):
        univariate_roots(t ** 2 - 1)


def test_roots_rejects_zero_polynomial(field):
    with pytest.raises(ValueError):
        u_roots(field, [])


def test_roots_of_multivariate_restriction(field):
    # a polynomial using only variable 2 of a 3-variable ring
    x2 = MvPoly.variable(field, 3, 2)
    assert univariate_roots(x2 ** 2 - 4) == [2, field.conv(-2)]


def test_sqrt_mod_small_and_large():
    for p in (7, 13, 2147483647):
        squares = {pow(a, 2, p) for a in range(1, min(p, 200))}
        for s in list(squares)[:20]:
            r = sqrt_mod(s, p)
            assert r is not None and r * r % p == s
    assert sqrt_mod(3, 7) is None   # non-residue


def test_irreducible_quadratics_extraction(field):
    p = field.p
    rng = random.Random(34)
    # (t^2 + 1) is irreducible since p = 3 mod 4; multiply by split factors
    t2_plus_1 = [1, 0, 1]
    quads = irreducible_quadratics(field, t2_plus_1, seed=1)
    assert quads == [[1, 0, 1]]
    # a product of two distinct irreducible quadratics splits into both
    a = field.rand_nonzero(rng)
    q2 = [a * a % p + 1, (2 * a) % p, 1]   # (t + a)^2 + 1, also irreducible
    prod = [0] * 5
    for i, ci in enumerate(t2_plus_1):
        for j, cj in enumerate(q2):
            prod[i + j] = (prod[i + j] + ci * cj) % p
    found = irreducible_quadratics(field, prod, seed=2)
    assert sorted(found) == sorted([t2_plus_1, q2])
