"""Graded pieces of the syzygy module of (f_0, ..., f_n) by exact linear algebra.

The degree-nu piece is the kernel of the linear map sending coefficient
vectors of (a_0, ..., a_n), each a_i of degree nu, to the coefficients of
sum a_i f_i in degree nu + d.  The initial degree of the syzygy module is
found by scanning nu upwards; a Koszul relation guarantees a hit by nu = d.
"""

from __future__ import annotations

from dataclasses import dataclass

from .jacobian import RationalMapInput
from .linalg import kernel_basis
from .poly import MvPoly, grlex_key


def monomials_of_degree(nvars: int, deg: int) -> list:
    """All exponent tuples of the given total degree, graded-lex descending."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for k in range(remaining, -1, -1):
            rec(prefix + (k,), remaining - k, slots - 1)

    rec((), deg, nvars)
    out.sort(key=grlex_key, reverse=True)
    return out


@dataclass
class GradedKernelBasis:
    degree: int
    basis: list          # list of (n+1)-tuples of MvPoly
    dimension: int


@dataclass
class IndegResult:
    indeg: int | None    # None marks +infinity within the searched range
    searched_up_to: int


def graded_syzygy_kernel(inp: RationalMapInput, nu: int) -> GradedKernelBasis:
    """Kernel basis in degree nu, RREF-normalised and re-verified symbolically."""
    if nu < 0:
        raise ValueError("degree must be nonnegative")
    F = inp.field
    nvars = inp.nvars
    source = monomials_of_degree(nvars, nu)
    target = monomials_of_degree(nvars, nu + inp.d)
    index = {e: i for i, e in enumerate(target)}
    ncols = len(inp.f) * len(source)
    rows = [[F.zero] * ncols for _ in range(len(target))]
    col = 0
    for fi in inp.f:
        for mu in source:
            for e, c in fi.terms.items():
                e2 = tuple(a + b for a, b in zip(e, mu))
                rows[index[e2]][col] = F.add(rows[index[e2]][col], c)
            col += 1
    vectors = kernel_basis(F, rows, ncols)
    basis = []
    for v in vectors:
        tup = []
        for i in range(len(inp.f)):
            terms = {}
            for k, mu in enumerate(source):
                c = v[i * len(source) + k]
                if not F.is_zero(c):
                    terms[mu] = c
            tup.append(MvPoly(F, nvars, terms))
        tup = tuple(tup)
        combo = MvPoly.zero(F, nvars)
        for ai, fi in zip(tup, inp.f):
            combo = combo + ai * fi
        if not combo.is_zero():
            raise AssertionError("kernel vector failed symbolic re-verification")
        basis.append(tup)
    return GradedKernelBasis(degree=nu, basis=basis, dimension=len(basis))


def indeg_syzygy(inp: RationalMapInput, cap: int | None = None) -> IndegResult:
    """Smallest nu <= cap with a nonzero syzygy. Default cap is d, where a
    Koszul relation f_j e_i - f_i e_j makes the search always succeed."""
    if cap is None:
        cap = inp.d
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    for nu in range(cap + 1):
        k = graded_syzygy_kernel(inp, nu)
        if k.dimension > 0:
            return IndegResult(indeg=nu, searched_up_to=nu)
    if cap >= inp.d and inp.n >= 1:
        raise AssertionError("no syzygy found up to d despite the Koszul guarantee")
    return IndegResult(indeg=None, searched_up_to=cap)
