"""Packed-bit arithmetic for binary polynomials.

A polynomial over F_2 is a Python int whose bit k is the coefficient of
x^k (0 is the zero polynomial).  Addition is XOR, multiplication by x^k
is a left shift, and products/remainders reduce to word-parallel shifts
and XORs, which is what makes the p = 2 fast path of the profile engine
cheap.  These helpers stay semantically identical to the generic dense
path; the test suite cross-checks the two.
"""

from __future__ import annotations


def degree(a: int) -> int:
    """Degree of a packed polynomial; -1 for zero (internal convention)."""
    return a.bit_length() - 1


def mul(a: int, b: int) -> int:
    """Carry-less product."""
    if a == 0 or b == 0:
        return 0
    if a.bit_count() > b.bit_count():
        a, b = b, a
    out = 0
    while a:
        low = a & -a
        out ^= b << (low.bit_length() - 1)
        a ^= low
    return out


def divmod_(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of packed polynomials (b != 0)."""
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = b.bit_length() - 1
    quot = 0
    while a.bit_length() - 1 >= db and a:
        shift = a.bit_length() - 1 - db
        quot |= 1 << shift
        a ^= b << shift
    return quot, a


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, divmod_(a, b)[1]
    return a


def from_coeffs(coeffs) -> int:
    out = 0
    for k, c in enumerate(coeffs):
        if c & 1:
            out |= 1 << k
    return out


def to_coeffs(a: int) -> list[int]:
    return [(a >> k) & 1 for k in range(a.bit_length())]
