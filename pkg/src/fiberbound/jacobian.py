"""Jacobian matrices, minor ideals, their GCD F, and the Euler syzygy.

The matrix J(f) has one row per form f_i and one column per variable; the
3-minors generate the ideal whose generator GCD, F, contains every divisor
contracted by the map.  For surface maps (m = 2, n = 3) the four signed
maximal minors assemble into a syzygy of the f_i of degree 3(d-1) - deg F.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import (AllMinorsZero, ArityMismatch, CharDividesDegree,
                     CommonFactor, FDoesNotDivideMinor, MixedDegrees,
                     NotDivisible, NotHomogeneous, SingularChange, SOutOfRange)
from .fields import PrimeField
from .gcd import gcd_multivariate
from .linalg import is_invertible, kernel_basis, rank
from .poly import MvPoly


@dataclass(frozen=True)
class RationalMapInput:
    """A rational map P^m --> P^n given by n+1 forms of common degree d."""

    field: object
    varnames: tuple
    f: tuple

    @property
    def m(self) -> int:
        return len(self.varnames) - 1

    @property
    def n(self) -> int:
        return len(self.f) - 1

    @property
    def nvars(self) -> int:
        return len(self.varnames)

    @property
    def d(self) -> int:
        for fi in self.f:
            if not fi.is_zero():
                return fi.total_degree()
        raise ValueError("all forms are zero")

    @classmethod
    def create(cls, field, polys, varnames=None) -> "RationalMapInput":
        """Validate and build: homogeneous forms, one common degree,
        gcd(f_0,...,f_n) = 1, and characteristic not dividing d."""
        polys = tuple(polys)
        if not polys:
            raise ValueError("need at least one form")
        nvars = polys[0].nvars
        for fp in polys:
            if fp.nvars != nvars:
                raise ArityMismatch("forms live in different polynomial rings")
        if varnames is None:
            varnames = tuple(f"X{i}" for i in range(nvars))
        varnames = tuple(varnames)
        if len(varnames) != nvars:
            raise ArityMismatch("variable name list does not match the ring")
        nonzero = [fp for fp in polys if not fp.is_zero()]
        if not nonzero:
            raise ValueError("all forms are zero")
        for fp in nonzero:
            if not fp.is_homogeneous():
                raise NotHomogeneous(f"form is not homogeneous: {fp}")
        degs = {fp.total_degree() for fp in nonzero}
        if len(degs) > 1:
            raise MixedDegrees(f"forms have degrees {sorted(degs)}")
        d = degs.pop()
        if d < 1:
            raise NotHomogeneous("forms must have positive degree")
        g = nonzero[0]
        for fp in nonzero[1:]:
            g = gcd_multivariate(g, fp)
            if g.is_constant():
                break
        if not g.is_constant():
            raise CommonFactor(g)
        if isinstance(field, PrimeField) and d % field.p == 0:
            raise CharDividesDegree(f"characteristic {field.p} divides degree {d}")
        return cls(field=field, varnames=varnames, f=polys)


def build_jacobian(inp: RationalMapInput) -> list:
    """(n+1) x (m+1) matrix of partial derivatives d f_i / d X_j."""
    return [[fi.derivative(j) for j in range(inp.nvars)] for fi in inp.f]


def _det(matrix: list) -> MvPoly:
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    acc = None
    for j in range(n):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        sub = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * _det(sub)
        if j % 2 == 1:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        return MvPoly.zero(matrix[0][0].field, matrix[0][0].nvars)
    return acc


@dataclass(frozen=True)
class Minor:
    rows: tuple
    cols: tuple
    poly: MvPoly


def minors(jac: list, s: int) -> list:
    """All s-minors by cofactor expansion, zero minors included.

    Index sets are strictly increasing, so no minor appears twice.
    """
    nrows, ncols = len(jac), len(jac[0])
    if not 1 <= s <= min(nrows, ncols):
        raise SOutOfRange(f"minor size {s} outside 1..{min(nrows, ncols)}")
    out = []
    for rset in itertools.combinations(range(nrows), s):
        for cset in itertools.combinations(range(ncols), s):
            sub = [[jac[i][j] for j in cset] for i in rset]
            out.append(Minor(rset, cset, _det(sub)))
    return out


def gcd_of_minors(minor_polys, seed=None) -> MvPoly:
    """GCD of the given minors, monic; AllMinorsZero when every minor vanishes.

    Accumulates gcds with an early exit at 1.  A seed shuffles the
    accumulation order; by default the natural order is used (the result is
    order-independent either way).
    """
    polys = [m.poly if isinstance(m, Minor) else m for m in minor_polys]
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        raise AllMinorsZero("I_3(J(f)) = 0: every 3-minor vanishes")
    if seed is not None:
        rng = random.Random(seed)
        polys = list(polys)
        rng.shuffle(polys)
    g = polys[0].monic()
    for p in polys[1:]:
        if g.is_constant():
            break
        g = gcd_multivariate(g, p)
    return g


@dataclass
class JacobianReport:
    jac: list
    minors3: list
    F: MvPoly | None
    degF: int | None
    i3_nonzero: bool
    i_top_nonzero: bool


def jacobian_report(inp: RationalMapInput, seed=None) -> JacobianReport:
    jac = build_jacobian(inp)
    m3 = minors(jac, 3) if min(inp.n + 1, inp.m + 1) >= 3 else []
    i3 = any(not mn.poly.is_zero() for mn in m3)
    F = gcd_of_minors(m3, seed=seed) if i3 else None
    itop, _ = generic_finiteness_check(inp, jac=jac)
    return JacobianReport(jac=jac, minors3=m3, F=F,
                          degF=F.total_degree() if F is not None else None,
                          i3_nonzero=i3, i_top_nonzero=itop)


@dataclass
class EulerSyzygy:
    """Signed maximal minors D_i with a_i = D_i / F and sum a_i f_i = 0."""

    D: tuple
    a: tuple
    delta: int


def euler_syzygy(inp: RationalMapInput, F: MvPoly) -> EulerSyzygy:
    """Syzygy of degree delta = 3(d-1) - deg F for a surface map (m=2, n=3)."""
    if inp.m != 2 or inp.n != 3:
        raise ValueError("the Euler syzygy construction needs m = 2, n = 3")
    if isinstance(inp.field, PrimeField) and inp.d % inp.field.p == 0:
        raise CharDividesDegree("construction invalid when p divides d")
    jac = build_jacobian(inp)
    D = []
    for i in range(4):
        rows = [jac[k] for k in range(4) if k != i]
        det = _det(rows)
        D.append(det if i % 2 == 0 else -det)
    a = []
    for di in D:
        if di.is_zero():
            a.append(MvPoly.zero(inp.field, inp.nvars))
            continue
        try:
            a.append(di.exact_div(F))
        except NotDivisible as exc:
            raise FDoesNotDivideMinor(
                f"F does not divide a signed minor: {exc}") from exc
    combo = MvPoly.zero(inp.field, inp.nvars)
    for ai, fi in zip(a, inp.f):
        combo = combo + ai * fi
    if not combo.is_zero():
        raise FDoesNotDivideMinor("constructed tuple is not a syzygy")
    delta = 3 * (inp.d - 1) - F.total_degree()
    for ai in a:
        if not ai.is_zero() and ai.total_degree() != delta:
            raise FDoesNotDivideMinor("syzygy entry has unexpected degree")
    return EulerSyzygy(D=tuple(D), a=tuple(a), delta=delta)


def linear_dependence_check(inp: RationalMapInput):
    """(dependent?, relation) with relation a kernel vector over k when dependent."""
    F = inp.field
    monos = sorted({e for fp in inp.f for e in fp.terms})
    rows = [[fp.terms.get(e, F.zero) for fp in inp.f] for e in monos]
    basis = kernel_basis(F, rows, len(inp.f))
    if not basis:
        return False, None
    return True, tuple(basis[0])


def fitting_invariance_check(inp: RationalMapInput, change, F=None, seed=None) -> bool:
    """Recompute F after an invertible scalar change of basis g = C f.

    Returns True when the two GCDs agree up to a scalar (compared monic).
    """
    Fld = inp.field
    C = [[Fld.conv(x) if isinstance(x, int) else x for x in row] for row in change]
    size = inp.n + 1
    if len(C) != size or any(len(r) != size for r in C):
        raise SingularChange(f"change of basis must be {size}x{size}")
    if not is_invertible(Fld, C):
        raise SingularChange("change of basis is singular")
    if F is None:
        F = gcd_of_minors(minors(build_jacobian(inp), 3))
    g = []
    for row in C:
        acc = MvPoly.zero(Fld, inp.nvars)
        for cij, fj in zip(row, inp.f):
            acc = acc + fj.scale(cij)
        g.append(acc)
    ginp = RationalMapInput(field=Fld, varnames=inp.varnames, f=tuple(g))
    F2 = gcd_of_minors(minors(build_jacobian(ginp), 3))
    return F.monic() == F2.monic()


def generic_finiteness_check(inp: RationalMapInput, trials: int = 12, seed: int = 0,
                             jac=None):
    """(I_{m+1}(J) != 0, I_3(J) != 0) flags.

    Random evaluations give nonvanishing certificates; if every trial fails,
    the answer falls back to exact symbolic minor expansion.
    """
    if jac is None:
        jac = build_jacobian(inp)
    F = inp.field
    nrows, ncols = inp.n + 1, inp.m + 1
    rng = random.Random(seed)
    best = 0
    for _ in range(trials):
        q = [F.rand(rng) for _ in range(ncols)]
        if all(F.is_zero(x) for x in q):
            continue
        numeric = [[entry.evaluate(q) for entry in row] for row in jac]
        best = max(best, rank(F, numeric))
        if best >= min(nrows, ncols):
            break

    def nonzero_exact(s: int) -> bool:
        if s > min(nrows, ncols):
            return False
        if best >= s:
            return True
        return any(not mn.poly.is_zero() for mn in minors(jac, s))

    return nonzero_exact(ncols), nonzero_exact(3)
