"""Equivalence relations on odd-order lens spaces and fibers of the invariant.

For odd prime p the framing values cut the unit group exactly into the
inverse pairs {q, q^-1}, i.e. the invariant decides oriented homeomorphism.
For odd composite p that is an empirical question: collision_scan reports
what actually happens, and no general claim is made.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, unique
from typing import Mapping

from . import sweeps
from .modring import Modulus, is_prime, mod_inverse, normalize, square_units, units


@unique
class RelationKind(Enum):
    """Which identification of L(p, .) spaces is being queried."""

    ORIENTED_HOMEO = "oriented-homeo"
    HOMEO = "homeo"
    ORIENTED_HOMOTOPY = "oriented-homotopy"
    HOMOTOPY = "homotopy"
    FRAMING_EQUAL = "framing-equal"


@dataclass(frozen=True)
class FiberPartition:
    """Units of Z/p grouped by their framing value."""

    p: Modulus
    fibers: Mapping[int, frozenset[int]]


def _require_odd(p: int) -> None:
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be odd and >= 3, got {p}")


def _unit(p: int, v: int) -> int:
    u = v % p
    if math.gcd(u, p) != 1:
        raise ValueError(f"{v} is not a unit mod {p}")
    return u


def related(kind: RelationKind, p: int, q: int, q2: int) -> bool:
    """Whether L(p, q) and L(p, q2) are identified under the given relation.

    Oriented homeomorphism means q2 in {q, q^-1}; allowing mirror images adds
    {-q, -q^-1}.  Oriented homotopy equivalence means q2/q is a square unit,
    and the unoriented version allows a sign.  FRAMING_EQUAL simply compares
    framing values (p odd throughout).
    """
    _require_odd(p)
    q = _unit(p, q)
    q2 = _unit(p, q2)
    inv_q = mod_inverse(normalize(q, p)).value
    if kind is RelationKind.ORIENTED_HOMEO:
        return q2 == q or q2 == inv_q
    if kind is RelationKind.HOMEO:
        return q2 in (q, inv_q, p - q, p - inv_q)
    if kind is RelationKind.FRAMING_EQUAL:
        table = sweeps.invariant_table(p)
        return table[q] == table[q2]
    ratio = q2 * inv_q % p
    if kind is RelationKind.ORIENTED_HOMOTOPY:
        return ratio in square_units(p)
    if kind is RelationKind.HOMOTOPY:
        return ratio in square_units(p) or p - ratio in square_units(p)
    raise ValueError(f"unknown relation kind {kind!r}")


def quadratic_roots(p: int, c: int) -> set[int]:
    """All units q2 of a prime field Z/p whose framing value equals c.

    Found by exhaustive scan of the in-ring route (2 - q2 - q2^-1) * 4^-1, so
    the result doubles as an independent oracle for the odd-lift computation.
    The same condition reads q2^2 - (2 - 4c) q2 + 1 = 0 over Z/p, a quadratic,
    hence the result has size 0, 1 or 2.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if not 0 <= c < p:
        raise ValueError(f"class value {c} out of range [0, {p})")
    table = sweeps.residue_table(p)
    return {q2 for q2 in range(1, p) if table[q2] == c}


def invariant_fibers(p: int) -> FiberPartition:
    """Partition the units of Z/p (p odd) by framing value."""
    _require_odd(p)
    table = sweeps.invariant_table(p)
    grouped: dict[int, set[int]] = {}
    for q in units(p):
        grouped.setdefault(table[q], set()).add(q)
    return FiberPartition(Modulus(p), {v: frozenset(s) for v, s in grouped.items()})


def verify_prime_classification(p: int) -> bool:
    """Check that framing values separate units exactly into inverse pairs.

    Equivalent to: framing values agree exactly when the spaces are oriented
    homeomorphic.  Exhaustive over all units of the odd prime p.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    fibers = invariant_fibers(p).fibers
    table = sweeps.invariant_table(p)
    for q in range(1, p):
        if fibers[table[q]] != {q, pow(q, -1, p)}:
            return False
    return True


def collision_scan(p: int) -> list[tuple[int, int]]:
    """All unordered unit pairs with equal framing value that are not inverse pairs.

    Only for odd composite p, where the question is purely empirical: an
    empty result means the invariant still separates L(p, .) up to oriented
    homeomorphism at this order, and nothing more.
    """
    _require_odd(p)
    if is_prime(p):
        raise ValueError(
            f"p must be composite, got prime {p} (use verify_prime_classification)"
        )
    pairs: list[tuple[int, int]] = []
    for fiber in invariant_fibers(p).fibers.values():
        for q in sorted(fiber):
            inv_q = pow(q, -1, p)
            for q2 in sorted(fiber):
                if q2 > q and q2 != inv_q:
                    pairs.append((q, q2))
    return sorted(pairs)
