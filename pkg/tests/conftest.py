import pytest

from fiberbound import MvPoly, PrimeField
from fiberbound.syzygy import monomials_of_degree


@pytest.fixture(scope="session")
def field():
    return PrimeField()


@pytest.fixture(scope="session")
def xyz(field):
    return tuple(MvPoly.variable(field, 3, j) for j in range(3))


def random_poly(field, nvars, max_deg, rng, homogeneous_deg=None,
                density=0.7):
    """Random polynomial; dense in one degree when homogeneous_deg is set."""
    terms = {}
    if homogeneous_deg is not None:
        for e in monomials_of_degree(nvars, homogeneous_deg):
            if rng.random() < density:
                terms[e] = field.rand(rng)
    else:
        for d in range(max_deg + 1):
            for e in monomials_of_degree(nvars, d):
                if rng.random() < density * 0.5:
                    terms[e] = field.rand(rng)
    p = MvPoly(field, nvars, terms)
    if p.is_zero():
        e = (max_deg if homogeneous_deg is None else homogeneous_deg,) \
            + (0,) * (nvars - 1)
        p = MvPoly(field, nvars, {e: field.rand_nonzero(rng)})
    return p


def random_nonzero_poly(field, nvars, max_deg, rng, **kw):
    while True:
        p = random_poly(field, nvars, max_deg, rng, **kw)
        if not p.is_zero():
            return p
