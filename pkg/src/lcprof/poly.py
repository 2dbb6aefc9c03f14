"""Dense univariate polynomials and finite sequences over a coefficient domain.

Representation conventions
--------------------------
A polynomial stores its coefficients ascending: ``coeffs[k]`` is the
coefficient of x^k.  The stored tuple is canonical, i.e. the last entry
is nonzero; the zero polynomial stores an empty tuple and has degree
``NEG_INF`` so that deg(a*b) = deg(a) + deg(b) holds without special
cases over an integral domain.

A sequence s = (s_1, ..., s_n) is 1-indexed in all formulas; ``Seq``
stores the terms in a plain tuple and ``s.term(j)`` does the 1-indexed
lookup.  The generating Laurent series s_1 x^{-1} + ... + s_n x^{-n} is
never materialized: its products with polynomials reduce to the indexed
convolutions implemented by ``polynomial_part`` and ``discrepancy``.

Text format (bit-exact, used by the CLI and JSON reports): terms in
descending degree, "x^k" for k >= 2, "x" for degree 1, constants as
integers, terms joined by "+" (a negative integer coefficient absorbs
the separator, e.g. "x^2-3x"); the zero polynomial is "0".  JSON uses
the ascending coefficient list instead.
"""

from __future__ import annotations

import re
from typing import Iterable

from .errors import DomainMismatchError, UnsupportedDomainError
from .fields import CoeffDomain

NEG_INF = float("-inf")  # degree of the zero polynomial

_TERM_RE = re.compile(r"^(-?\d+)?(x(\^(\d+))?)?$")


def _trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def coeffs_to_text(coeffs) -> str:
    """Render ascending canonical coefficients in the text format."""
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            xs = "x" if k == 1 else f"x^{k}"
            parts.append(xs if c == 1 else f"{c}{xs}")
    return "+".join(parts).replace("+-", "-")


def text_to_coeffs(text: str) -> list[int]:
    """Parse the text format back to an ascending coefficient list."""
    text = text.strip().replace(" ", "")
    if text in ("", "0"):
        return []
    coeffs: dict[int, int] = {}
    for term in text.replace("-", "+-").lstrip("+").split("+"):
        m = _TERM_RE.match(term)
        if not m or not m.group(0):
            raise ValueError(f"bad polynomial term {term!r}")
        cs, xpart, _, ks = m.group(1), m.group(2), m.group(3), m.group(4)
        if not cs and not xpart:
            raise ValueError(f"bad polynomial term {term!r}")
        c = int(cs) if cs is not None else 1
        k = 0 if xpart is None else (1 if ks is None else int(ks))
        coeffs[k] = coeffs.get(k, 0) + c
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return _trim(out)


class Poly:
    """Immutable dense polynomial over a :class:`CoeffDomain`."""

    __slots__ = ("domain", "coeffs")

    def __init__(self, domain: CoeffDomain, coeffs: Iterable[int] = ()):
        self.domain = domain
        self.coeffs = tuple(_trim([domain.normalize(c) for c in coeffs]))

    @classmethod
    def from_text(cls, domain: CoeffDomain, text: str) -> "Poly":
        return cls(domain, text_to_coeffs(text))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _check(self, other: "Poly") -> None:
        if self.domain != other.domain:
            raise DomainMismatchError(
                f"mixed domains {self.domain!r} and {other.domain!r}"
            )

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        d = self.domain
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = d.add(out[k], c)
        return Poly(d, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        d = self.domain
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            d,
            [d.sub(self.coefficient(k), other.coefficient(k)) for k in range(n)],
        )

    def __neg__(self) -> "Poly":
        d = self.domain
        return Poly(d, [d.neg(c) for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        d = self.domain
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(d, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(d, out)

    def scale(self, c: int) -> "Poly":
        """Multiply by the domain element c."""
        d = self.domain
        return Poly(d, [d.mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k (k >= 0)."""
        if k < 0:
            raise ValueError("shift exponent must be nonnegative")
        if not self.coeffs:
            return self
        return Poly(self.domain, (0,) * k + self.coeffs)

    def monic(self) -> "Poly":
        """Divide by the leading coefficient (field domains only)."""
        if not self.domain.is_field:
            raise UnsupportedDomainError("monic normalization needs a field")
        if self.is_zero or self.leading == 1:
            return self
        return self.scale(self.domain.inv(self.leading))

    def __call__(self, x: int) -> int:
        d = self.domain
        acc = 0
        for c in reversed(self.coeffs):
            acc = d.add(d.mul(acc, x), c)
        return acc

    def json_coeffs(self) -> list[int]:
        """JSON form: the ascending coefficient array."""
        return list(self.coeffs)

    @classmethod
    def from_json_coeffs(cls, domain: CoeffDomain, coeffs) -> "Poly":
        return cls(domain, coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.domain == other.domain
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.domain, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        return coeffs_to_text(self.coeffs)

    def __repr__(self):
        return f"Poly({self.domain!r}, {str(self)!r})"


class Seq:
    """Immutable finite sequence s_1..s_n over a coefficient domain."""

    __slots__ = ("domain", "terms")

    def __init__(self, domain: CoeffDomain, terms: Iterable[int] = ()):
        self.domain = domain
        self.terms = tuple(domain.normalize(t) for t in terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def term(self, j: int) -> int:
        """1-indexed access: term(1) is s_1."""
        if not 1 <= j <= len(self.terms):
            raise IndexError(f"term index {j} outside 1..{len(self.terms)}")
        return self.terms[j - 1]

    def prefix(self, i: int) -> "Seq":
        if not 0 <= i <= len(self.terms):
            raise IndexError(f"prefix length {i} outside 0..{len(self.terms)}")
        s = Seq.__new__(Seq)
        s.domain = self.domain
        s.terms = self.terms[:i]
        return s

    def __eq__(self, other):
        return (
            isinstance(other, Seq)
            and self.domain == other.domain
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.domain, self.terms))

    def __repr__(self):
        return f"Seq({self.domain!r}, {list(self.terms)})"


def polynomial_part(f: Poly, s: Seq) -> Poly:
    """Nonnegative-power part of f times the generating series of s.

    Coefficient j of the result is sum_k f_k * s_{k-j}; only s_1..s_d
    contribute (d = deg f), so the value is stable under extending s.
    """
    if f.is_zero:
        return Poly(f.domain, ())
    dom = f.domain
    fc = f.coeffs
    d = len(fc) - 1
    terms = s.terms
    out = []
    for j in range(d):
        acc = 0
        for k in range(j + 1, d + 1):
            i = k - j  # index into s, 1-based
            if i <= len(terms):
                acc += fc[k] * terms[i - 1]
        out.append(dom.normalize(acc))
    return Poly(dom, out)


def discrepancy(f: Poly, s: Seq, n: int) -> int:
    """The functional sum_k f_k s_{n+1-d+k} with d = deg f.

    This is coefficient d-n-1 of f times the generating series of
    s^(n+1); it equals s_{n+1} for f = 1.  Terms whose sequence index
    would fall below 1 (possible only when d > n) are treated as absent
    so the function is total.
    """
    if f.is_zero:
        raise ValueError("discrepancy of the zero polynomial is undefined")
    if n + 1 > len(s):
        raise IndexError(f"discrepancy at {n + 1} needs a sequence of that length")
    fc = f.coeffs
    d = len(fc) - 1
    terms = s.terms
    acc = 0
    for k in range(max(0, d - n), d + 1):
        acc += fc[k] * terms[n - d + k]  # s_{n+1-d+k}
    return f.domain.normalize(acc)


def reciprocal(f: Poly) -> Poly:
    """x^{deg f} * f(1/x): the coefficient list reversed, then trimmed."""
    if f.is_zero:
        raise ValueError("zero polynomial has no reciprocal")
    return Poly(f.domain, tuple(reversed(f.coeffs)))


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder over a field domain."""
    if not a.domain.is_field:
        raise UnsupportedDomainError("polynomial division needs a field")
    a._check(b)
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    dom = a.domain
    p = dom.p
    rem = list(a.coeffs)
    bc = b.coeffs
    db = len(bc) - 1
    if len(rem) - 1 < db:
        return Poly(dom, ()), a
    inv = dom.inv(bc[-1])
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - db - 1, -1, -1):
        c = (rem[i + db] * inv) % p
        if c:
            quot[i] = c
            for k in range(db + 1):
                rem[i + k] = (rem[i + k] - c * bc[k]) % p
    return Poly(dom, quot), Poly(dom, rem)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over a field domain; gcd(f, 0) = monic(f)."""
    if not a.domain.is_field:
        raise UnsupportedDomainError("polynomial gcd needs a field")
    a._check(b)
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()
