"""GCD and square-free decomposition against independent oracles.

The gcd oracle builds inputs as explicit products of certified pairwise
coprime atoms, so the gcd is known by construction; candidate divisors are
enumerated over the exponent lattice and the maximal one that divides both
inputs must match the kernel's answer.  Coprimality of atoms is certified
with a test-local univariate Euclid along random lines, independent of the
kernel's gcd.
"""

import random

import pytest

from fiberbound import (MvPoly, PrimeField, PthPowerHazard, RationalField,
                        gcd_multivariate, squarefree_decompose, squarefree_part)

from conftest import random_nonzero_poly


# -- test-local univariate Euclid (independent of the kernel gcd) ------------

def _local_u_gcd_deg(p, a, b):
    """Degree of gcd of two dense int-coefficient polys mod p."""
    a = [x % p for x in a]
    b = [x % p for x in b]

    def trim(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    a, b = trim(a), trim(b)
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            k = len(a) - len(b)
            for i in range(len(b)):
                a[k + i] = (a[k + i] - b[i] * c) % p
            trim(a)
        a, b = b, a
    return len(a) - 1


def _certified_coprime(field, u, v, rng):
    """True when u, v provably share no factor (checked on 3 random lines)."""
    p = field.p
    hits = 0
    for _ in range(6):
        a = [field.rand(rng) for _ in range(u.nvars)]
        b = [field.rand(rng) for _ in range(u.nvars)]
        ru, rv = u.on_line(a, b), v.on_line(a, b)
        if len(ru) - 1 != u.total_degree() or len(rv) - 1 != v.total_degree():
            continue
        if _local_u_gcd_deg(p, ru, rv) != 0:
            return False
        hits += 1
        if hits == 3:
            return True
    return False


def _random_atoms(field, rng, count):
    atoms = []
    guard = 0
    while len(atoms) < count:
        guard += 1
        assert guard < 200
        deg = rng.choice([1, 1, 2])
        cand = random_nonzero_poly(field, 3, deg, rng, homogeneous_deg=None)
        if cand.is_constant():
            continue
        if all(_certified_coprime(field, cand, a, rng) for a in atoms):
            atoms.append(cand)
    return atoms


def test_gcd_trivial_examples(field, xyz):
    x0, x1, _ = xyz
    g = gcd_multivariate(x0 ** 2 - x1 ** 2, (x0 + x1) ** 2)
    assert g == (x0 + x1).monic()
    f = (x0 * x1 + x1 ** 2).scale(field.conv(7))
    assert gcd_multivariate(f, MvPoly.zero(field, 3)) == f.monic()
    with pytest.raises(ValueError):
        gcd_multivariate(MvPoly.zero(field, 3), MvPoly.zero(field, 3))


def test_gcd_divides_both_and_quotients_check(field):
    rng = random.Random(21)
    for _ in range(30):
        a = random_nonzero_poly(field, 3, 4, rng)
        b = random_nonzero_poly(field, 3, 4, rng)
        g = gcd_multivariate(a, b)
        assert g.divides(a) and g.divides(b)
        assert a.exact_div(g) * g == a


def test_gcd_common_factor_pulls_out(field):
    # gcd(a*c, b*c) == gcd(a, b) * c up to normalisation
    rng = random.Random(22)
    for _ in range(15):
        a = random_nonzero_poly(field, 3, 3, rng)
        b = random_nonzero_poly(field, 3, 3, rng)
        c = random_nonzero_poly(field, 3, 2, rng)
        lhs = gcd_multivariate(a * c, b * c)
        rhs = (gcd_multivariate(a, b) * c).monic()
        assert lhs == rhs


def test_gcd_oracle_small_loop(field):
    # Smaller twin of the acceptance loop; see tests/test_acceptance.py.
    rng = random.Random(23)
    for _ in range(20):
        atoms = _random_atoms(field, rng, rng.choice([1, 2, 3]))
        ea = [rng.randrange(0, 3) for _ in atoms]
        eb = [rng.randrange(0, 3) for _ in atoms]
        a = MvPoly.constant(field, 3, field.rand_nonzero(rng))
        b = MvPoly.constant(field, 3, field.rand_nonzero(rng))
        for q, x, y in zip(atoms, ea, eb):
            a = a * q ** x
            b = b * q ** y
        expected = MvPoly.one(field, 3)
        for q, x, y in zip(atoms, ea, eb):
            expected = expected * q ** min(x, y)
        assert gcd_multivariate(a, b) == expected.monic()


def test_squarefree_decompose_example(field, xyz):
    x0, x1, _ = xyz
    parts = squarefree_decompose(x0 ** 3 * x1 ** 2 * (x0 + x1))
    assert [(str(p), e) for p, e in parts] == \
        [("X0 + X1", 1), ("X1", 2), ("X0", 3)]


def test_squarefree_identity_case(field):
    rng = random.Random(24)
    f = random_nonzero_poly(field, 3, 3, rng)
    g = squarefree_part(f)
    if g == f.monic():        # f square-free: single part, multiplicity 1
        parts = squarefree_decompose(f)
        assert parts == [(f.monic(), 1)]


def test_squarefree_reconstruction_and_coprimality(field):
    rng = random.Random(25)
    for _ in range(20):
        atoms = _random_atoms(field, rng, rng.choice([1, 2]))
        f = MvPoly.constant(field, 3, field.rand_nonzero(rng))
        for i, q in enumerate(atoms):
            f = f * q ** (i + 1 + rng.randrange(0, 2))
        parts = squarefree_decompose(f)
        rebuilt = MvPoly.one(field, 3)
        for p, e in parts:
            rebuilt = rebuilt * p ** e
        assert rebuilt == f.monic()
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                g = gcd_multivariate(parts[i][0], parts[j][0])
                assert g.is_constant()


def test_squarefree_small_characteristic_hazard(xyz):
    F7 = PrimeField(7)
    x = MvPoly.variable(F7, 2, 0)
    y = MvPoly.variable(F7, 2, 1)
    with pytest.raises(PthPowerHazard):
        squarefree_decompose(x ** 5 * y ** 3)


def test_gcd_over_rationals():
    Q = RationalField()
    x = MvPoly.variable(Q, 2, 0)
    y = MvPoly.variable(Q, 2, 1)
    a = (x + y) ** 2 * (x - y)
    b = (x + y) * (x ** 2 + y ** 2)
    assert gcd_multivariate(a, b) == (x + y).monic()
    parts = squarefree_decompose(a)
    assert sorted((str(p), e) for p, e in parts) == \
        [("X0 + X1", 2), ("X0 - X1", 1)]
