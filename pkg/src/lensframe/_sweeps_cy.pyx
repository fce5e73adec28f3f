# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled sweeps over the unit group of Z/p.

Signature-compatible with the pure twin ``_sweeps_py``; ``sweeps`` selects
between them at import time.  All intermediates fit in 64 bits for any
desk-scale p (the largest product is about (12p)^2).
"""


cdef long long _inverse_or_minus_one(long long a, long long m) noexcept:
    # Extended Euclid; returns the inverse in [0, m) or -1 when gcd(a, m) != 1.
    cdef long long old_r = a, r = m
    cdef long long old_s = 1, s = 0
    cdef long long q, t
    while r != 0:
        q = old_r // r
        t = old_r - q * r
        old_r = r
        r = t
        t = old_s - q * s
        old_s = s
        s = t
    if old_r != 1:
        return -1
    old_s = old_s % m
    if old_s < 0:
        old_s += m
    return old_s


def invariant_table(long long p):
    """Framing values (a-1)(b-1)/4 mod p for every q in [0, p); -1 at non-units."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be odd and >= 3, got {p}")
    cdef list table = [-1] * p
    cdef long long q, inv, a, b
    for q in range(1, p):
        inv = _inverse_or_minus_one(q, p)
        if inv < 0:
            continue
        a = q if q % 2 == 1 else q + p
        b = inv if inv % 2 == 1 else inv + p
        table[q] = ((a - 1) * (b - 1) // 4) % p
    return tuple(table)


def residue_table(long long p):
    """Same values via (2 - q - q^-1) * 4^-1 computed entirely inside Z/p."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be odd and >= 3, got {p}")
    cdef list table = [-1] * p
    cdef long long q, inv, v
    cdef long long inv4 = _inverse_or_minus_one(4, p)
    for q in range(1, p):
        inv = _inverse_or_minus_one(q, p)
        if inv < 0:
            continue
        v = (2 - q - inv) % p
        if v < 0:
            v += p
        table[q] = (v * inv4) % p
    return tuple(table)


def lift_mismatch(long long p, long long max_shift):
    """First unit whose invariant depends on the choice of odd lifts, or -1."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be odd and >= 3, got {p}")
    cdef long long q, inv, a, b, base, j, k, aj, bk
    for q in range(1, p):
        inv = _inverse_or_minus_one(q, p)
        if inv < 0:
            continue
        a = q if q % 2 == 1 else q + p
        b = inv if inv % 2 == 1 else inv + p
        base = ((a - 1) * (b - 1) // 4) % p
        for j in range(max_shift + 1):
            aj = a + 2 * j * p
            for k in range(max_shift + 1):
                bk = b + 2 * k * p
                if ((aj - 1) * (bk - 1) // 4) % p != base:
                    return q
    return -1
