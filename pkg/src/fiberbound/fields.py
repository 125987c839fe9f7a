"""Coefficient fields: F_p for an odd machine-word prime, or exact rationals.

Field elements are plain Python values (int residues in [0, p), or Fraction),
so polynomial dictionaries stay cheap.  The field object carries the
arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
import random

DEFAULT_PRIME = 2147483647
SECOND_PRIME = 2147483629

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n below 3.3 * 10^24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """Arithmetic modulo an odd prime p; elements are ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int = DEFAULT_PRIME):
        if p < 3 or not is_prime(p):
            raise ValueError(f"field modulus must be an odd prime, got {p}")
        self.p = p

    @property
    def char(self) -> int:
        return self.p

    def conv(self, n: int) -> int:
        return n % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in prime field")
        return pow(a, -1, self.p)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.p

    def is_zero(self, a: int) -> bool:
        return a % self.p == 0

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def rand(self, rng: random.Random) -> int:
        return rng.randrange(self.p)

    def rand_nonzero(self, rng: random.Random) -> int:
        return rng.randrange(1, self.p)

    def lift_balanced(self, a: int) -> int:
        """Integer representative in (-p/2, p/2]."""
        a %= self.p
        return a if a <= self.p // 2 else a - self.p

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class RationalField:
    """Exact rational arithmetic via fractions.Fraction."""

    __slots__ = ()

    @property
    def char(self) -> int:
        return 0

    def conv(self, n) -> Fraction:
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def is_zero(self, a) -> bool:
        return a == 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def rand(self, rng: random.Random) -> Fraction:
        return Fraction(rng.randrange(-50, 51))

    def rand_nonzero(self, rng: random.Random) -> Fraction:
        while True:
            v = self.rand(rng)
            if v != 0:
                return v

    def lift_balanced(self, a):
        return a

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("RationalField")

    def __repr__(self) -> str:
        return "RationalField()"
