"""Jacobian construction, minors, F, the Euler syzygy, and invariance checks."""

import random

import pytest

from fiberbound import (AllMinorsZero, CharDividesDegree, MvPoly, PrimeField,
                        RationalMapInput, SingularChange, SOutOfRange,
                        build_jacobian, euler_syzygy, fitting_invariance_check,
                        gcd_of_minors, generic_finiteness_check,
                        linear_dependence_check, minors)
from fiberbound.errors import CommonFactor, MixedDegrees, NotHomogeneous
from fiberbound.fixtures import make_cube_dependent, make_example2, make_family

from conftest import random_poly


def _random_map(field, nvars, count, d, rng):
    while True:
        polys = [random_poly(field, nvars, d, rng, homogeneous_deg=d)
                 for _ in range(count)]
        try:
            return RationalMapInput.create(field, polys)
        except CommonFactor:
            continue


def test_build_jacobian_shapes(field):
    x0 = MvPoly.variable(field, 2, 0)
    x1 = MvPoly.variable(field, 2, 1)
    inp = RationalMapInput.create(field, [x0 ** 2, x0 * x1, x1 ** 2])
    jac = build_jacobian(inp)
    assert jac[0][0] == 2 * x0 and jac[0][1].is_zero()
    assert jac[1][0] == x1 and jac[1][1] == x0
    assert jac[2][0].is_zero() and jac[2][1] == 2 * x1
    # rows are homogeneous of degree d-1
    for row in jac:
        for entry in row:
            assert entry.is_zero() or entry.total_degree() == inp.d - 1


def test_jacobian_identity_map(field, xyz):
    x0, x1, x2 = xyz
    inp = RationalMapInput.create(field, [x0, x1, x2])
    jac = build_jacobian(inp)
    for i in range(3):
        for j in range(3):
            if i == j:
                assert jac[i][j] == MvPoly.one(field, 3)
            else:
                assert jac[i][j].is_zero()


def test_minors_diagonal_example(field, xyz):
    # f = (X0^d, X1^d, X2^d, X0 X1 X2^(d-2)): rows {0,1,2} give d^3 (X0X1X2)^(d-1)
    x0, x1, x2 = xyz
    d = 4
    inp = RationalMapInput.create(
        field, [x0 ** d, x1 ** d, x2 ** d, x0 * x1 * x2 ** (d - 2)])
    all3 = minors(build_jacobian(inp), 3)
    diag = next(m for m in all3 if m.rows == (0, 1, 2))
    assert diag.poly == (x0 * x1 * x2) ** (d - 1) * d ** 3
    # counts and homogeneous degree
    assert len(all3) == 4
    for m in all3:
        assert m.poly.is_zero() or m.poly.total_degree() == 3 * (d - 1)
        assert m.rows == tuple(sorted(set(m.rows)))
        assert m.cols == tuple(sorted(set(m.cols)))


def test_minors_s_out_of_range(field, xyz):
    inp = make_family(4)
    jac = build_jacobian(inp)
    with pytest.raises(SOutOfRange):
        minors(jac, 4)
    with pytest.raises(SOutOfRange):
        minors(jac, 0)


def test_gcd_of_minors_example2(field, xyz):
    x0, x1, x2 = xyz
    F = gcd_of_minors(minors(build_jacobian(make_example2()), 3))
    expected = (x0 * x1 ** 3 * x2 * (x0 ** 4 - x2 ** 4)
                * (x1 ** 2 - x2 ** 2)).monic()
    assert F == expected
    assert F.total_degree() == 11


def test_gcd_of_minors_family_d4(field, xyz):
    x0, x1, x2 = xyz
    F = gcd_of_minors(minors(build_jacobian(make_family(4)), 3))
    expected = (x0 * x2 * (x0 ** 2 - x1 ** 2) * (x1 ** 2 - x2 ** 2)).monic()
    assert F == expected
    assert F.total_degree() == 6


def test_gcd_of_minors_family_general_d(field, xyz):
    x0, x1, x2 = xyz
    for d in (5, 6, 7):
        F = gcd_of_minors(minors(build_jacobian(make_family(d)), 3))
        expected = (x0 ** (2 * d - 7) * x2 * (x0 ** 2 - x1 ** 2)
                    * (x1 ** 2 - x2 ** 2)).monic()
        assert F == expected


def test_gcd_of_minors_cube_hand_value(field, xyz):
    # cofactor expansion by hand: every nonzero minor is +-27 X0^2 X1^2 X2^2
    x0, x1, x2 = xyz
    F = gcd_of_minors(minors(build_jacobian(make_cube_dependent()), 3))
    assert F == (x0 ** 2 * x1 ** 2 * x2 ** 2).monic()
    assert F.total_degree() == 6 == 3 * (make_cube_dependent().d - 1)


def test_gcd_of_minors_seed_does_not_change_result(field):
    m3 = minors(build_jacobian(make_example2()), 3)
    assert gcd_of_minors(m3) == gcd_of_minors(m3, seed=123)


def test_all_minors_zero(field):
    # forms in 3 variables that only use X0, X1: a zero Jacobian column
    x0 = MvPoly.variable(field, 3, 0)
    x1 = MvPoly.variable(field, 3, 1)
    inp = RationalMapInput.create(field, [x0 ** 2, x0 * x1, x1 ** 2])
    m3 = minors(build_jacobian(inp), 3)
    assert all(m.poly.is_zero() for m in m3)
    with pytest.raises(AllMinorsZero):
        gcd_of_minors(m3)
    itop, i3 = generic_finiteness_check(inp)
    assert not i3


def test_laplace_identity_random_quartics(field):
    # sum_i D_i df_i/dX_j = 0 for the signed maximal minors, every column j
    rng = random.Random(41)
    for _ in range(5):
        inp = _random_map(field, 3, 4, 4, rng)
        jac = build_jacobian(inp)
        D = []
        for i in range(4):
            rows = [jac[k] for k in range(4) if k != i]
            det = rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1]) \
                - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0]) \
                + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
            D.append(det if i % 2 == 0 else -det)
        for j in range(3):
            acc = MvPoly.zero(field, 3)
            for i in range(4):
                acc = acc + D[i] * jac[i][j]
            assert acc.is_zero()


def test_euler_syzygy_example2(field):
    inp = make_example2()
    F = gcd_of_minors(minors(build_jacobian(inp), 3))
    es = euler_syzygy(inp, F)
    assert es.delta == 15 - 11 == 4
    combo = MvPoly.zero(field, 3)
    for a, f in zip(es.a, inp.f):
        combo = combo + a * f
    assert combo.is_zero()
    assert all(a.is_zero() or a.total_degree() == 4 for a in es.a)


def test_euler_syzygy_dependent_cube(field):
    inp = make_cube_dependent()
    F = gcd_of_minors(minors(build_jacobian(inp), 3))
    es = euler_syzygy(inp, F)
    assert es.delta == 0
    # constant syzygy proportional to (1, 1, 0, -1)
    vals = [a.leading_coefficient() if not a.is_zero() else field.zero
            for a in es.a]
    scale = field.inv(vals[0])
    assert [field.lift_balanced(field.mul(v, scale)) for v in vals] == \
        [1, 1, 0, -1]


def test_euler_syzygy_char_guard():
    # p = 5, d = 5: validation itself refuses p | d
    F5 = PrimeField(5)
    x0 = MvPoly.variable(F5, 3, 0)
    x1 = MvPoly.variable(F5, 3, 1)
    x2 = MvPoly.variable(F5, 3, 2)
    with pytest.raises(CharDividesDegree):
        RationalMapInput.create(F5, [x0 ** 5, x1 ** 5, x2 ** 5,
                                     x0 ** 3 * x1 * x2])


def test_linear_dependence_both_ways(field, xyz):
    x0, x1, x2 = xyz
    dep, rel = linear_dependence_check(make_cube_dependent())
    assert dep
    # relation is a kernel vector: sum rel_i f_i = 0
    inp = make_cube_dependent()
    acc = MvPoly.zero(field, 3)
    for c, f in zip(rel, inp.f):
        acc = acc + f.scale(c)
    assert acc.is_zero()
    assert not linear_dependence_check(make_example2())[0]
    # a repeated generator is dependent
    inp2 = RationalMapInput.create(field, [x0 ** 2, x0 * x1, x0 ** 2 + x1 ** 2,
                                           x0 ** 2])
    assert linear_dependence_check(inp2)[0]


def test_fitting_invariance_identity_and_permutation(field):
    inp = make_example2()
    F = gcd_of_minors(minors(build_jacobian(inp), 3))
    eye = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    assert fitting_invariance_check(inp, eye, F=F)
    perm = [[1 if j == (i + 1) % 4 else 0 for j in range(4)] for i in range(4)]
    assert fitting_invariance_check(inp, perm, F=F)


def test_fitting_invariance_random_change(field):
    inp = make_example2()
    F = gcd_of_minors(minors(build_jacobian(inp), 3))
    rng = random.Random(43)
    C = [[field.rand(rng) for _ in range(4)] for _ in range(4)]
    assert fitting_invariance_check(inp, C, F=F)


def test_fitting_invariance_singular_rejected(field):
    inp = make_example2()
    sing = [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 0, 1]]
    with pytest.raises(SingularChange):
        fitting_invariance_check(inp, sing)


def test_generic_finiteness_identity_and_fixtures(field, xyz):
    x0, x1, x2 = xyz
    ident = RationalMapInput.create(field, [x0, x1, x2])
    assert generic_finiteness_check(ident) == (True, True)
    itop, i3 = generic_finiteness_check(make_example2())
    assert itop and i3


def test_validation_errors(field, xyz):
    x0, x1, x2 = xyz
    with pytest.raises(NotHomogeneous):
        RationalMapInput.create(field, [x0 ** 2 + x1, x1 ** 2, x2 ** 2])
    with pytest.raises(MixedDegrees):
        RationalMapInput.create(field, [x0 ** 2, x1 ** 3, x2 ** 2])
    with pytest.raises(CommonFactor) as exc:
        RationalMapInput.create(field, [x0 ** 2, x0 * x1])
    assert exc.value.gcd == x0
