"""The power-of-two indicator sequence and its closed-form profile.

The binary sequence with ones exactly at power-of-two positions is the
canonical perfect-profile example.  Its engine matrices are powers of
the constant jump matrix U = [[x, 1], [1, 0]] times the step-2 matrix
M = [[x+1, 1], [1, 0]], and the rows are expressed by the polynomial
family g(0) = 0, g(1) = 1, g(k) = x*g(k-1) + g(k-2) (written gamma
here).  All checks in this module are executable verifications of
those closed forms against the engine, at exact arithmetic.

Internally the family is cached bit-packed (see gf2); the public
functions hand out Poly values over F_2.
"""

from __future__ import annotations

from . import gf2
from .engine import Mat2, MPConfig, mp_run
from .errors import ResourceLimitError
from .fields import GF2
from .poly import Poly, Seq

COLUMN_CHECK_BOUND = 2**16


def rueppel_terms(n: int) -> Seq:
    """First n terms: 1 at indices 1, 2, 4, 8, ..., 0 elsewhere."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Seq(GF2, [1 if j & (j - 1) == 0 else 0 for j in range(1, n + 1)])


class GammaTable:
    """Grow-only cache of the gamma family, packed one bit per coefficient."""

    def __init__(self):
        self._g = [0, 1]

    def packed(self, k: int) -> int:
        if k < 0:
            raise ValueError("gamma index must be nonnegative")
        g = self._g
        while len(g) <= k:
            g.append((g[-1] << 1) ^ g[-2])
        return g[k]

    def poly(self, k: int) -> Poly:
        return Poly(GF2, gf2.to_coeffs(self.packed(k)))


_TABLE = GammaTable()


def gamma(k: int) -> Poly:
    """The k-th member of the recurrence family (degree k-1 for k >= 1)."""
    return _TABLE.poly(k)


def gamma_packed(k: int) -> int:
    return _TABLE.packed(k)


def u_power(k: int) -> Mat2:
    """U^k = [[gamma(k+1), gamma(k)], [gamma(k), gamma(k-1)]]; U^0 = I."""
    if k == 0:
        return Mat2.identity(GF2)
    if k < 0:
        raise ValueError("negative power; invert via adjugate instead")
    return Mat2(
        _TABLE.poly(k + 1),
        _TABLE.poly(k),
        _TABLE.poly(k),
        _TABLE.poly(k - 1),
    )


def jump_matrix() -> Mat2:
    """U itself."""
    return u_power(1)


def step2_matrix() -> Mat2:
    """M, the engine matrix after the first two terms."""
    x1 = Poly(GF2, (1, 1))
    one = Poly(GF2, (1,))
    zero = Poly(GF2, ())
    return Mat2(x1, one, one, zero)


def gamma_identities(m: int, n: int) -> bool:
    """Check the family identities at the given pair of indices.

    Covers the product rule gamma(m+n) = x*gamma(m)*gamma(n) +
    gamma(m-n) (indices swapped if needed), the doubling special case,
    the degree law, the unit constant term of gamma(i) + gamma(i-1),
    and coprimality of consecutive members.
    """
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    if m < n:
        m, n = n, m
    gm, gn = _TABLE.packed(m), _TABLE.packed(n)
    if _TABLE.packed(m + n) != (gf2.mul(gm, gn) << 1) ^ _TABLE.packed(m - n):
        return False
    if _TABLE.packed(2 * n) != gf2.mul(gn, gn) << 1:
        return False
    for i in (m, n):
        gi = _TABLE.packed(i)
        if i >= 1:
            if gi.bit_length() - 1 != i - 1:
                return False
            if (gi ^ _TABLE.packed(i - 1)) & 1 != 1:
                return False
            if gf2.gcd(gi, _TABLE.packed(i - 1)) != 1:
                return False
    return True


def rueppel_mp(n: int) -> tuple[Poly, Poly]:
    """Closed-form engine row (mu, [mu]) for an odd-length prefix.

    For odd n >= 3 the row is (gamma(p) + gamma(p-1), gamma(p-1)) with
    p = (n+3)/2; even lengths keep the previous row, so ask the engine
    for those.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("closed form applies to odd n >= 3")
    p = (n + 3) // 2
    gp, gp1 = _TABLE.packed(p), _TABLE.packed(p - 1)
    return (
        Poly(GF2, gf2.to_coeffs(gp ^ gp1)),
        Poly(GF2, gf2.to_coeffs(gp1)),
    )


def rueppel_matrix_check(n: int) -> bool:
    """Engine matrix pattern: M at 2, repeat at even n, U-power at odd n."""
    if n < 2:
        raise ValueError("pattern starts at n = 2")
    terms = rueppel_terms(n)
    matrix, _ = mp_run(terms, MPConfig())
    if n == 2:
        return matrix == step2_matrix()
    if n % 2 == 0:
        prev, _ = mp_run(terms.prefix(n - 1), MPConfig())
        return matrix == prev
    return matrix == u_power((n - 1) // 2) @ step2_matrix()


def _adjugate_packed(m):
    # char-2 adjugate of ((a, b), (c, d)); determinant must be 1
    (a, b), (c, d) = m
    det = gf2.mul(a, d) ^ gf2.mul(b, c)
    if det != 1:
        raise ValueError("matrix is not unimodular")
    return ((d, b), (c, a))


def _mat_col_packed(m, v):
    (a, b), (c, d) = m
    top, bot = v
    return (gf2.mul(a, top) ^ gf2.mul(b, bot), gf2.mul(c, top) ^ gf2.mul(d, bot))


def power_column_identity(k: int, bound: int = COLUMN_CHECK_BOUND) -> bool:
    """Exact closed form of the power-of-two prefix column.

    Verifies that the inverse step-2 matrix times the inverse jump
    power applied to the column (1, x+1) reproduces, after clearing the
    x^{-2^k} scale, the pair (sum of x^{2^k - 2^i} for i = 0..k,
    x^{2^k}).  Both sides are polynomials, so the comparison is exact.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if 2**k > bound:
        raise ResourceLimitError(f"2^{k} exceeds the size bound")
    p = 2**k
    q = p - 2
    # U^{2-2^k} = (U^q)^{-1}; powers via the gamma closed form
    upow = (
        (_TABLE.packed(q + 1), _TABLE.packed(q)),
        (_TABLE.packed(q), _TABLE.packed(q - 1)),
    ) if q >= 1 else ((1, 0), (0, 1))
    u_inv = _adjugate_packed(upow)
    m_inv = _adjugate_packed(((0b11, 0b1), (0b1, 0b0)))
    col = _mat_col_packed(m_inv, _mat_col_packed(u_inv, (0b1, 0b11)))
    want_top = 0
    for i in range(k + 1):
        want_top |= 1 << (p - 2**i)
    return col == (want_top, 1 << p)
