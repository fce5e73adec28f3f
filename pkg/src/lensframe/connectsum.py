"""Connected sums of odd lens spaces as multisets of summands.

Uniqueness of prime decompositions reduces homeomorphism questions about
sums to summand-by-summand matching; for the homotopy relations the same
matching is used as a sufficient certificate only.  The search routine
recovers pairs of sums that match under oriented homotopy equivalence but
not under oriented homeomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product

from .classify import RelationKind
from .framing import LensSpace
from .modring import is_prime, mod_inverse, normalize, square_units, units

_GEOMETRIC_KINDS = (
    RelationKind.ORIENTED_HOMEO,
    RelationKind.HOMEO,
    RelationKind.ORIENTED_HOMOTOPY,
    RelationKind.HOMOTOPY,
)


@dataclass(frozen=True)
class SumOfLens:
    """Connected sum of odd-order lens spaces; the empty sum is the 3-sphere."""

    summands: tuple[LensSpace, ...] = ()

    def __post_init__(self) -> None:
        spaces = tuple(sorted(self.summands, key=lambda s: (s.p, s.q)))
        for space in spaces:
            if space.p % 2 == 0:
                raise ValueError(f"summand {space} has even order")
        object.__setattr__(self, "summands", spaces)

    def __str__(self) -> str:
        if not self.summands:
            return "S3"
        return "#".join(str(space) for space in self.summands)


def _orbit(p: int, q: int, kind: RelationKind) -> set[int]:
    # All unit residues identified with q under the relation.
    inv_q = mod_inverse(normalize(q, p)).value
    if kind is RelationKind.ORIENTED_HOMEO:
        return {q, inv_q}
    if kind is RelationKind.HOMEO:
        return {q, inv_q, p - q, p - inv_q}
    squares = square_units(p)
    oriented = {s * q % p for s in squares}
    if kind is RelationKind.ORIENTED_HOMOTOPY:
        return oriented
    return oriented | {p - v for v in oriented}


def canonical_key(space: LensSpace, kind: RelationKind) -> tuple[int, int]:
    """(p, least residue in the kind-orbit of q); at equal p, equal keys decide the relation."""
    if kind not in _GEOMETRIC_KINDS:
        raise ValueError(f"{kind.value} does not induce summand matching on sums")
    if space.p % 2 == 0:
        raise ValueError(f"summand {space} has even order")
    return space.p, min(_orbit(space.p, space.q, kind))


def sums_equivalent(a: SumOfLens, b: SumOfLens, kind: RelationKind) -> bool:
    """Whether the two sums match summand-for-summand under the relation.

    For the homeomorphism kinds this decides equivalence of the sums outright
    (prime decompositions are unique); for the homotopy kinds a match is a
    sufficient certificate, and a failed match only means no certificate.
    """
    keys_a = sorted(canonical_key(s, kind) for s in a.summands)
    keys_b = sorted(canonical_key(s, kind) for s in b.summands)
    return keys_a == keys_b


def _distinct_sums(p_values: tuple[int, ...], reps: dict[int, list[int]]) -> list[SumOfLens]:
    # One sum per multiset of oriented-homeo classes over the given p-multiset.
    if len(p_values) == 1:
        return [SumOfLens((LensSpace(p_values[0], r),)) for r in reps[p_values[0]]]
    p1, p2 = p_values
    if p1 == p2:
        choices = combinations_with_replacement(reps[p1], 2)
        return [SumOfLens((LensSpace(p1, r1), LensSpace(p2, r2))) for r1, r2 in choices]
    return [
        SumOfLens((LensSpace(p1, r1), LensSpace(p2, r2)))
        for r1, r2 in product(reps[p1], reps[p2])
    ]


def find_exotic_pairs(max_p: int, num_summands: int) -> list[tuple[SumOfLens, SumOfLens]]:
    """Pairs of sums of odd-prime lens spaces that are homotopy-matched but not homeomorphic.

    Enumerates sums with num_summands summands of odd prime order <= max_p,
    one representative per oriented-homeomorphism class, and returns every
    unordered pair matching under ORIENTED_HOMOTOPY while differing under
    ORIENTED_HOMEO.  Results are deduplicated and deterministically ordered.
    """
    if max_p < 3:
        raise ValueError(f"max_p must be >= 3, got {max_p}")
    if num_summands not in (1, 2):
        raise ValueError(f"num_summands must be 1 or 2, got {num_summands}")
    primes = [p for p in range(3, max_p + 1, 2) if is_prime(p)]
    reps = {
        p: sorted({min(_orbit(p, q, RelationKind.ORIENTED_HOMEO)) for q in units(p)})
        for p in primes
    }

    pairs: list[tuple[SumOfLens, SumOfLens]] = []
    for p_values in combinations_with_replacement(primes, num_summands):
        by_homotopy: dict[tuple[tuple[int, int], ...], list[SumOfLens]] = {}
        for total in _distinct_sums(p_values, reps):
            key = tuple(sorted(canonical_key(s, RelationKind.ORIENTED_HOMOTOPY) for s in total.summands))
            by_homotopy.setdefault(key, []).append(total)
        for group in by_homotopy.values():
            ordered = sorted(group, key=lambda t: tuple((s.p, s.q) for s in t.summands))
            pairs.extend(combinations(ordered, 2))

    def _pair_order(pair: tuple[SumOfLens, SumOfLens]):
        a, b = pair
        return (
            tuple((s.p, s.q) for s in a.summands),
            tuple((s.p, s.q) for s in b.summands),
        )

    return sorted(pairs, key=_pair_order)
