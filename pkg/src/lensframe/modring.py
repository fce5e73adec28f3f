"""Exact arithmetic in Z/m: residues, inverses, odd lifts, unit squares, primality.

Everything here is a pure function of its inputs; the values are immutable
and safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class Modulus:
    """A modulus m >= 2 for residue arithmetic."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"modulus must be >= 2, got {self.m}")


@dataclass(frozen=True)
class Residue:
    """An element of Z/m stored as its canonical representative in [0, m)."""

    value: int
    modulus: Modulus

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus.m:
            raise ValueError(
                f"residue value {self.value} out of range [0, {self.modulus.m})"
            )

    @property
    def m(self) -> int:
        return self.modulus.m

    def __str__(self) -> str:
        return f"{self.value} (mod {self.m})"


def normalize(v: int, m: Modulus | int) -> Residue:
    """Reduce an arbitrary integer (negatives included) to its residue in [0, m)."""
    mod = m if isinstance(m, Modulus) else Modulus(m)
    return Residue(v % mod.m, mod)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """Iterative extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def mod_inverse(r: Residue) -> Residue:
    """Multiplicative inverse of a unit, via the extended Euclidean algorithm."""
    g, x, _ = _egcd(r.value, r.m)
    if g != 1:
        raise ValueError(f"{r.value} is not a unit mod {r.m}")
    return Residue(x % r.m, r.modulus)


def odd_representative(r: Residue) -> int:
    """The odd member of {v, v + m}; requires odd m, so the result lies in [0, 2m)."""
    if r.m % 2 == 0:
        raise ValueError(f"odd modulus required, got {r.m}")
    return r.value if r.value % 2 == 1 else r.value + r.m


@lru_cache(maxsize=None)
def units(m: int) -> tuple[int, ...]:
    """All unit residues of Z/m in increasing order."""
    return tuple(v for v in range(1, m) if math.gcd(v, m) == 1)


@lru_cache(maxsize=None)
def square_units(m: int) -> frozenset[int]:
    """The squares inside the unit group of Z/m, by exhaustive enumeration."""
    return frozenset(u * u % m for u in units(m))


def is_square_unit(r: Residue) -> bool:
    """Whether some unit n satisfies n^2 = r in Z/m."""
    if math.gcd(r.value, r.m) != 1:
        raise ValueError(f"{r.value} is not a unit mod {r.m}")
    return r.value in square_units(r.m)


def is_prime(n: int) -> bool:
    """Deterministic trial division up to sqrt(n); plenty for desk-scale n."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True
