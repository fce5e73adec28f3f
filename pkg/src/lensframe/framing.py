"""The framing invariant of odd-order lens spaces and the tightness obstruction.

A lens space L(p, q) with p odd carries a residue class mod p built from odd
integer lifts of q and q^-1; the class does not depend on the choice of odd
lifts and changes sign (after recentring by -1/2) under orientation reversal.
For a general free quotient of the 3-sphere, pulled-back framings live in
Z/m where m is the group order, halved when H_1(.; Z/2) is nonzero; a
nonzero pullback class rules out a universally tight positive contact
structure on the quotient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .modring import Modulus, mod_inverse, normalize, odd_representative


@dataclass(frozen=True)
class LensSpace:
    """Oriented lens space L(p, q): gcd(p, q) = 1 and q stored in [1, p-1].

    The same space with the opposite orientation is L(p, p - q).
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValueError(f"group order must be >= 2, got {self.p}")
        if not 1 <= self.q <= self.p - 1:
            raise ValueError(f"q must lie in [1, {self.p - 1}], got {self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"not a lens space: gcd({self.p}, {self.q}) != 1")

    def reversed(self) -> LensSpace:
        """Orientation reversal."""
        return LensSpace(self.p, self.p - self.q)

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


@dataclass(frozen=True)
class FramingClass:
    """A residue class of pulled-back framings, carrying its modulus."""

    value: int
    modulus: Modulus

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus.m:
            raise ValueError(
                f"class value {self.value} out of range [0, {self.modulus.m})"
            )

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus.m})"


def framing_modulus(group_order: int, h1_z2_trivial: bool) -> Modulus:
    """Modulus of the framing class for a free quotient by a group of this order.

    Pullbacks of framings differ by multiples of the group order when
    H_1(M; Z/2) = 0 and by multiples of half the order otherwise; an odd-order
    quotient always has H_1(M; Z/2) = 0.
    """
    if group_order < 2:
        raise ValueError(f"group order must be >= 2, got {group_order}")
    if h1_z2_trivial:
        return Modulus(group_order)
    if group_order % 2 == 1:
        raise ValueError(
            f"inconsistent input: odd group order {group_order} forces H1(M; Z/2) = 0"
        )
    if group_order // 2 < 2:
        raise ValueError("group order 2 with nontrivial H1 mod 2 leaves a degenerate modulus")
    return Modulus(group_order // 2)


@dataclass(frozen=True)
class QuotientData:
    """A free spherical quotient: group order, H_1(.; Z/2) flag, pullback class."""

    group_order: int
    h1_z2_trivial: bool
    pullback_class: FramingClass

    def __post_init__(self) -> None:
        expected = framing_modulus(self.group_order, self.h1_z2_trivial)
        if self.pullback_class.modulus != expected:
            raise ValueError(
                f"pullback class modulus {self.pullback_class.modulus.m} does not "
                f"match the required modulus {expected.m}"
            )


def _odd_lifts(space: LensSpace) -> tuple[int, int]:
    # Odd representatives in [0, 2p) of q and q^-1; defined only for odd p.
    if space.p % 2 == 0:
        raise ValueError(f"invariant is defined only for odd p, got p = {space.p}")
    r = normalize(space.q, space.p)
    return odd_representative(r), odd_representative(mod_inverse(r))


def framing_invariant(space: LensSpace) -> FramingClass:
    """Framing class of L(p, q) for odd p: (a-1)(b-1)/4 reduced mod p.

    a and b are the odd representatives of q and q^-1, so (a-1)(b-1) is
    divisible by 4 over the integers before any reduction; the resulting
    residue is independent of which odd lifts are taken.
    """
    a, b = _odd_lifts(space)
    return FramingClass((a - 1) * (b - 1) // 4 % space.p, Modulus(space.p))


def framing_invariant_residue(space: LensSpace) -> FramingClass:
    """Redundant evaluation route that never leaves Z/p: (2 - q - q^-1) * 4^-1.

    Expanding (a-1)(b-1)/4 with ab = 1 mod p gives this form; both routes
    must agree, which the test suite checks exhaustively.
    """
    if space.p % 2 == 0:
        raise ValueError(f"invariant is defined only for odd p, got p = {space.p}")
    r = normalize(space.q, space.p)
    inv_q = mod_inverse(r).value
    inv4 = mod_inverse(normalize(4, space.p)).value
    return FramingClass((2 - r.value - inv_q) * inv4 % space.p, Modulus(space.p))


def normalized_framing_invariant(space: LensSpace) -> FramingClass:
    """Framing class recentred so that orientation reversal negates it.

    Declares the left-invariant framing to be -1/2 instead of 0, realised
    inside Z/p as subtraction of 2^-1 (p odd makes 2 a unit).
    """
    base = framing_invariant(space)
    half = mod_inverse(normalize(2, space.p)).value
    return FramingClass((base.value - half) % space.p, base.modulus)


def equivariant_map_degree(space: LensSpace, k: int) -> int:
    """Degree of a comparison map built from the odd lifts plus a local degree-k insertion.

    Equals (a-1)(b-1)/4 + k*p as a plain integer; reduction mod p recovers
    the framing invariant for every k.
    """
    a, b = _odd_lifts(space)
    return (a - 1) * (b - 1) // 4 + k * space.p


def universally_tight_obstructed(data: QuotientData) -> bool:
    """True when the pullback class forbids a universally tight positive contact structure.

    Class 0 is the left-invariant framing of the 3-sphere, the framing
    associated to its unique positive tight contact structure; a quotient
    whose framings pull back to any other class cannot carry a universally
    tight positive contact structure.
    """
    return data.pullback_class.value != 0
