"""Incremental minimal-polynomial engine.

The engine consumes a sequence term by term and maintains the pair rows
of a 2x2 polynomial matrix

    M = [ mu   [mu]  ]        mu  : current minimal polynomial
        [ mu'  [mu'] ]        mu' : the one displaced at the last jump

together with the exponent e = j + 1 - 2*deg(mu), the discrepancy
delta' recorded at the last jump, the running product nabla of jump
discrepancies, and a shift counter p_shift.  One step computes the new
discrepancy delta and, when it is nonzero, replaces the top row by a
cross-combination of the two rows; the recursion is division-free, so
it runs unchanged over the integers.

Seeding follows the fixed initial matrix [[1, 0], [eps, -1]] with
delta_0 = 1 and e_0 = 1; the -1 entry is what makes the second column
track the polynomial part of the first through every update.

Determinant convention: det M = -nabla at every step (the identity
mu*[mu'] - [mu]*mu' = -nabla is a Bezout certificate, forcing
gcd(mu, [mu]) = gcd(mu, mu') = 1 over a field).

For p = 2 the engine switches to a packed representation (polynomials
and the consumed prefix as Python ints, one bit per coefficient) with
identical observable behavior.
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from typing import NamedTuple

from . import gf2
from .errors import ResourceLimitError, UnsupportedDomainError
from .fields import CoeffDomain, IntegerRing, PrimeField
from .poly import Poly, Seq, poly_gcd, reciprocal

BRUTE_FORCE_GUARD = 10**7


@dataclass(frozen=True)
class MPConfig:
    """Engine options.

    epsilon seeds the displaced row (it changes the mu' lineage but not
    the degree of the returned minimal polynomial).  monic_output
    normalizes the reported minimal polynomial once at the end, never
    inside the loop.  normalize_each_step divides the fresh row by the
    update determinant at every jump (field domains only); the result
    agrees with the plain run up to a scalar.  keep_log retains the
    per-step profile; switching it off keeps only the live state.
    """

    epsilon: int = 0
    monic_output: bool = False
    normalize_each_step: bool = False
    keep_log: bool = True


class StepRecord(NamedTuple):
    j: int
    delta: int
    e_prev: int
    lc: int
    jumped: bool


class ProfileRow(NamedTuple):
    """Snapshot of the state after step j (row j=0 is the seed)."""

    j: int
    delta: int
    e: int
    lc: int
    mu: Poly
    mu_part: Poly
    mu_prev: Poly
    mu_prev_part: Poly


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix over D[x]."""

    a: Poly
    b: Poly
    c: Poly
    d: Poly

    @classmethod
    def identity(cls, domain: CoeffDomain) -> "Mat2":
        one = Poly(domain, (1,))
        zero = Poly(domain, ())
        return cls(one, zero, zero, one)

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def det(self) -> Poly:
        return self.a * self.d - self.b * self.c

    def adjugate(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def mul_column(self, top: Poly, bottom: Poly) -> tuple[Poly, Poly]:
        return self.a * top + self.b * bottom, self.c * top + self.d * bottom

    def text_rows(self) -> list[list[str]]:
        return [[str(self.a), str(self.b)], [str(self.c), str(self.d)]]

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def updating_matrix(domain: CoeffDomain, delta: int, delta_prime: int, e: int) -> Mat2:
    """The jump matrix U; det U = delta if e > 0 else delta_prime."""
    if domain.is_zero(delta):
        raise ValueError("no update matrix for delta = 0 (identity step)")
    theta = 1 if e > 0 else 0
    return Mat2(
        Poly(domain, (delta_prime,)).shift(max(e, 0)),
        Poly(domain, (domain.neg(delta),)).shift(-min(e, 0)),
        Poly(domain, (theta,)),
        Poly(domain, (1 - theta,)),
    )


@dataclass(frozen=True)
class MPState:
    """Value-typed engine state after j consumed terms."""

    domain: CoeffDomain
    config: MPConfig
    j: int
    consumed: tuple[int, ...]
    mu_bar: tuple[Poly, Poly]
    mu_bar_prev: tuple[Poly, Poly]
    e: int
    delta_prime: int
    nabla: int
    p_shift: int
    log: tuple[StepRecord, ...]

    @property
    def lc(self) -> int:
        d = self.mu_bar[0].degree
        return int(d) if d >= 0 else 0

    def matrix(self) -> Mat2:
        return Mat2(*self.mu_bar, *self.mu_bar_prev)

    def sequence(self) -> Seq:
        return Seq(self.domain, self.consumed)


class _GenericCore:
    """Dense coefficient-list engine over any coefficient domain."""

    __slots__ = (
        "dom",
        "p",
        "normalize",
        "keep_log",
        "j",
        "s",
        "mu",
        "mu_part",
        "mup",
        "mup_part",
        "e",
        "dprime",
        "nabla",
        "pshift",
        "lc",
        "deltas",
        "exps",
    )

    def __init__(self, domain: CoeffDomain, epsilon: int = 0, *,
                 normalize_each_step: bool = False, keep_log: bool = True):
        if normalize_each_step and not domain.is_field:
            raise UnsupportedDomainError("per-step normalization needs a field")
        self.dom = domain
        self.p = domain.p
        self.normalize = normalize_each_step
        self.keep_log = keep_log
        self.j = 0
        self.s: list[int] = []
        eps = domain.normalize(epsilon)
        self.mu = [1]
        self.mu_part: list[int] = []
        self.mup = [eps] if eps else []
        self.mup_part = [domain.neg(1)]
        self.e = 1
        self.dprime = 1
        self.nabla = 1
        self.pshift = 0
        self.lc: list[int] = []
        self.deltas: list[int] = []
        self.exps: list[int] = [1]

    def _lin(self, c1, a, ashift, c2, b, bshift):
        # c1 * x^ashift * a  -  c2 * x^bshift * b, canonical
        out = [0] * ashift + [c1 * x for x in a]
        need = bshift + len(b)
        if len(out) < need:
            out.extend([0] * (need - len(out)))
        for i, x in enumerate(b):
            out[bshift + i] -= c2 * x
        p = self.p
        if p:
            out = [v % p for v in out]
        while out and out[-1] == 0:
            out.pop()
        return out

    def step(self, sj: int) -> int:
        s = self.s
        s.append(sj)
        self.j = j = self.j + 1
        mu = self.mu
        d = len(mu) - 1
        base = j - 1 - d
        acc = sum(map(operator.mul, mu, s[base:] if base else s))
        delta = acc % self.p if self.p else acc
        e = self.e
        if not self.dom.is_zero(delta):
            if e <= 0:
                nmu = self._lin(self.dprime, mu, 0, delta, self.mup, -e)
                npart = self._lin(self.dprime, self.mu_part, 0, delta, self.mup_part, -e)
                factor = self.dprime
                self.nabla = self.nabla * self.dprime
            else:
                nmu = self._lin(self.dprime, mu, e, delta, self.mup, 0)
                npart = self._lin(self.dprime, self.mu_part, e, delta, self.mup_part, 0)
                self.mup, self.mup_part = mu, self.mu_part
                self.dprime = delta
                factor = delta
                self.nabla = self.nabla * delta
                self.e = e = -e
                self.pshift = 0
            if self.normalize:
                # scaling only the fresh row keeps the recursion consistent:
                # the stored delta' belongs to the unscaled displaced row
                inv = self.dom.inv(factor)
                p = self.p
                nmu = [(v * inv) % p for v in nmu]
                npart = [(v * inv) % p for v in npart]
            self.mu, self.mu_part = nmu, npart
        if self.p:
            self.nabla %= self.p
        self.e = e + 1
        self.pshift += 1
        if self.keep_log:
            self.deltas.append(delta)
            self.lc.append(len(self.mu) - 1)
            self.exps.append(j + 1 - 2 * (len(self.mu) - 1))
        return delta

    def cur_lc(self) -> int:
        return len(self.mu) - 1

    def pairs(self):
        return (
            tuple(self.mu),
            tuple(self.mu_part),
            tuple(self.mup),
            tuple(self.mup_part),
        )


class _PackedCore:
    """Bit-packed engine for F_2; semantics identical to _GenericCore."""

    __slots__ = (
        "keep_log",
        "j",
        "S",
        "mu",
        "mu_part",
        "mup",
        "mup_part",
        "e",
        "pshift",
        "lc",
        "deltas",
        "exps",
    )

    dom = PrimeField(2)
    p = 2
    dprime = 1
    nabla = 1
    normalize = False

    def __init__(self, epsilon: int = 0, *, keep_log: bool = True):
        self.keep_log = keep_log
        self.j = 0
        self.S = 0
        self.mu = 1
        self.mu_part = 0
        self.mup = epsilon & 1
        self.mup_part = 1
        self.e = 1
        self.pshift = 0
        self.lc: list[int] = []
        self.deltas: list[int] = []
        self.exps: list[int] = [1]

    def step(self, sj: int) -> int:
        self.j = j = self.j + 1
        if sj:
            self.S |= 1 << (j - 1)
        mu = self.mu
        d = mu.bit_length() - 1
        delta = (mu & (self.S >> (j - 1 - d))).bit_count() & 1
        e = self.e
        if delta:
            if e <= 0:
                sh = -e
                self.mu ^= self.mup << sh
                self.mu_part ^= self.mup_part << sh
            else:
                nmu = (mu << e) ^ self.mup
                npart = (self.mu_part << e) ^ self.mup_part
                self.mup, self.mup_part = mu, self.mu_part
                self.mu, self.mu_part = nmu, npart
                self.e = e = -e
                self.pshift = 0
        self.e = e + 1
        self.pshift += 1
        if self.keep_log:
            self.deltas.append(delta)
            self.lc.append(self.mu.bit_length() - 1)
            self.exps.append(j + 1 - 2 * (self.mu.bit_length() - 1))
        return delta

    def cur_lc(self) -> int:
        return self.mu.bit_length() - 1

    def pairs(self):
        return (
            tuple(gf2.to_coeffs(self.mu)),
            tuple(gf2.to_coeffs(self.mu_part)),
            tuple(gf2.to_coeffs(self.mup)),
            tuple(gf2.to_coeffs(self.mup_part)),
        )


def _make_core(domain: CoeffDomain, config: MPConfig, *, force_generic: bool = False):
    if domain.p == 2 and not force_generic and not config.normalize_each_step:
        return _PackedCore(domain.normalize(config.epsilon), keep_log=config.keep_log)
    return _GenericCore(
        domain,
        config.epsilon,
        normalize_each_step=config.normalize_each_step,
        keep_log=config.keep_log,
    )


def _state_from_core(domain, config, core, consumed, log) -> MPState:
    mu, mu_part, mup, mup_part = core.pairs()
    return MPState(
        domain=domain,
        config=config,
        j=core.j,
        consumed=tuple(consumed),
        mu_bar=(Poly(domain, mu), Poly(domain, mu_part)),
        mu_bar_prev=(Poly(domain, mup), Poly(domain, mup_part)),
        e=core.e,
        delta_prime=domain.normalize(core.dprime),
        nabla=domain.normalize(core.nabla),
        p_shift=core.pshift,
        log=tuple(log),
    )


def mp_init(domain: CoeffDomain, config: MPConfig = MPConfig()) -> MPState:
    """State at step 0: mu_bar = (1, 0), mu_bar' = (eps, -1), e = 1."""
    core = _GenericCore(domain, config.epsilon,
                        normalize_each_step=config.normalize_each_step)
    return _state_from_core(domain, config, core, (), ())


def _core_from_state(state: MPState) -> _GenericCore:
    core = _GenericCore(
        state.domain,
        state.config.epsilon,
        normalize_each_step=state.config.normalize_each_step,
        keep_log=False,
    )
    core.j = state.j
    core.s = list(state.consumed)
    core.mu = list(state.mu_bar[0].coeffs)
    core.mu_part = list(state.mu_bar[1].coeffs)
    core.mup = list(state.mu_bar_prev[0].coeffs)
    core.mup_part = list(state.mu_bar_prev[1].coeffs)
    core.e = state.e
    core.dprime = state.delta_prime
    core.nabla = state.nabla
    core.pshift = state.p_shift
    return core


def mp_step(state: MPState, term: int) -> MPState:
    """Consume one term and return the successor state."""
    core = _core_from_state(state)
    e_prev = core.e
    delta = core.step(state.domain.normalize(term))
    lc = len(core.mu) - 1
    jumped = bool(delta) and e_prev > 0
    record = StepRecord(core.j, state.domain.normalize(delta), e_prev, lc, jumped)
    return _state_from_core(
        state.domain, state.config, core, core.s, state.log + (record,)
    )


@dataclass
class ProfileReport:
    """Per-step linear-complexity profile plus the terminal artifacts.

    lc, deltas cover steps 1..n; exponents covers 0..n (the seed
    exponent 1 first).  With keep_log off the three lists are empty.
    """

    domain: CoeffDomain
    epsilon: int
    lc: list[int]
    deltas: list[int]
    exponents: list[int]
    minpoly: Poly
    final_matrix: Mat2
    nabla: int

    @property
    def jumps(self) -> list[int]:
        return [
            j
            for j in range(1, len(self.deltas) + 1)
            if self.deltas[j - 1] != 0 and self.exponents[j - 1] > 0
        ]

    @property
    def jump_exponents(self) -> list[int]:
        return [self.exponents[j - 1] for j in self.jumps]

    def to_json_dict(self) -> dict:
        m = self.final_matrix
        return {
            "field": self.domain.p,
            "epsilon": self.epsilon,
            "lc": list(self.lc),
            "deltas": list(self.deltas),
            "exponents": list(self.exponents),
            "mu": str(self.minpoly),
            "mu_prime": str(m.c),
            "nabla": self.nabla,
            "matrix": m.text_rows(),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ProfileReport":
        p = data["field"]
        domain = PrimeField(p) if p else IntegerRing()
        rows = data["matrix"]
        matrix = Mat2(
            Poly.from_text(domain, rows[0][0]),
            Poly.from_text(domain, rows[0][1]),
            Poly.from_text(domain, rows[1][0]),
            Poly.from_text(domain, rows[1][1]),
        )
        return cls(
            domain=domain,
            epsilon=data["epsilon"],
            lc=list(data["lc"]),
            deltas=list(data["deltas"]),
            exponents=list(data["exponents"]),
            minpoly=Poly.from_text(domain, data["mu"]),
            final_matrix=matrix,
            nabla=data["nabla"],
        )


def _report_from_core(domain, config, core) -> ProfileReport:
    mu, mu_part, mup, mup_part = core.pairs()
    matrix = Mat2(
        Poly(domain, mu),
        Poly(domain, mu_part),
        Poly(domain, mup),
        Poly(domain, mup_part),
    )
    minpoly = matrix.a
    if config.monic_output:
        minpoly = minpoly.monic()
    return ProfileReport(
        domain=domain,
        epsilon=domain.normalize(config.epsilon),
        lc=list(core.lc),
        deltas=[domain.normalize(d) for d in core.deltas],
        exponents=list(core.exps),
        minpoly=minpoly,
        final_matrix=matrix,
        nabla=domain.normalize(core.nabla),
    )


def mp_run(s: Seq, config: MPConfig = MPConfig(), *,
           force_generic: bool = False) -> tuple[Mat2, ProfileReport]:
    """Run the engine over the whole sequence.

    Returns the final matrix and the profile report; an empty sequence
    yields the seed state (minpoly 1, LC 0).  The packed fast path is
    selected automatically for p = 2.
    """
    domain = s.domain
    if config.monic_output and not domain.is_field:
        raise UnsupportedDomainError("monic output needs a field")
    core = _make_core(domain, config, force_generic=force_generic)
    step = core.step
    for t in s.terms:
        step(t)
    report = _report_from_core(domain, config, core)
    return report.final_matrix, report


def profile_steps(s: Seq, config: MPConfig = MPConfig()) -> list[ProfileRow]:
    """Per-step snapshots j = 0..n (row 0 is the seed matrix)."""
    domain = s.domain
    core = _make_core(domain, config)
    rows = []

    def snap(j, delta):
        mu, mu_part, mup, mup_part = core.pairs()
        lc = len(mu) - 1 if mu else 0
        rows.append(
            ProfileRow(
                j,
                delta,
                j + 1 - 2 * lc,
                lc,
                Poly(domain, mu),
                Poly(domain, mu_part),
                Poly(domain, mup),
                Poly(domain, mup_part),
            )
        )

    snap(0, 1)
    for t in s.terms:
        delta = core.step(t)
        snap(core.j, domain.normalize(delta))
    return rows


def annihilates(f: Poly, s: Seq) -> bool:
    """Whether every length-(deg f + 1) window of s is killed by f.

    The zero polynomial annihilates everything; so does any polynomial
    of degree >= len(s), vacuously.
    """
    if f.is_zero:
        return True
    fc = f.coeffs
    d = len(fc) - 1
    terms = s.terms
    dom = f.domain
    for j in range(d + 1, len(terms) + 1):
        base = j - 1 - d
        acc = sum(map(operator.mul, fc, terms[base:base + d + 1]))
        if dom.normalize(acc) != 0:
            return False
    return True


def feedback_polynomial(state) -> tuple[Poly, int]:
    """Reciprocal of the current minimal polynomial plus the register length.

    Accepts an MPState or a ProfileReport.  The register taps follow the
    recurrence of the source polynomial; a zero constant term in the
    source just means a singular register (fewer effective taps), which
    lfsr_generate accepts.
    """
    mu = state.minpoly if isinstance(state, ProfileReport) else state.mu_bar[0]
    d = mu.degree
    lc = int(d) if d >= 0 else 0
    return reciprocal(mu), lc


def lfsr_generate(feedback: Poly, fill: Seq, length: int) -> Seq:
    """Run the shift register with the given feedback polynomial.

    The register length is len(fill); tap i is the x^i coefficient of
    feedback (taps beyond its degree are zero), and the new term is
    -(sum of tap_i * s_{j-i}) / feedback(0).
    """
    dom = feedback.domain
    if fill.domain != dom:
        raise ValueError("fill and feedback must share a domain")
    L = len(fill)
    if length < L:
        raise ValueError("length must be at least the fill size")
    if feedback.is_zero or feedback.coefficient(0) == 0:
        raise ValueError("feedback needs a nonzero constant term")
    if feedback.degree > L:
        raise ValueError("feedback degree exceeds the register length")
    g0 = feedback.coefficient(0)
    if g0 == 1:
        scale = None
    elif dom.is_field:
        scale = dom.inv(g0)
    elif g0 == dom.neg(1):
        scale = g0
    else:
        raise UnsupportedDomainError("cannot divide by the constant term")
    taps = [feedback.coefficient(i) for i in range(1, L + 1)]
    out = list(fill.terms)
    for j in range(L, length):
        acc = sum(taps[i] * out[j - 1 - i] for i in range(L))
        v = dom.neg(dom.normalize(acc))
        if scale is not None:
            v = dom.mul(v, scale)
        out.append(v)
    return Seq(dom, out)


def bezout_check(state: MPState) -> bool:
    """Certify mu*[mu'] - [mu]*mu' = -nabla (and coprimality over a field)."""
    dom = state.domain
    mu, mu_part = state.mu_bar
    mup, mup_part = state.mu_bar_prev
    det = mu * mup_part - mu_part * mup
    if det != Poly(dom, (dom.neg(state.nabla),)):
        return False
    if dom.is_field:
        if poly_gcd(mu, mu_part).degree != 0:
            return False
        if poly_gcd(mu, mup).degree != 0:
            return False
    return True


def minpoly_coset(state: MPState) -> list[Poly]:
    """All mu + c*mu' for c in the field; candidates for Min(s) at odd steps."""
    dom = state.domain
    if not isinstance(dom, PrimeField):
        raise UnsupportedDomainError("coset enumeration needs a finite field")
    mu = state.mu_bar[0]
    mup = state.mu_bar_prev[0]
    return [mu + mup.scale(c) for c in dom.elements()]


def brute_force_minpoly(s: Seq, guard: int = BRUTE_FORCE_GUARD) -> tuple[int, Poly]:
    """Least annihilator degree by monic enumeration, with one witness.

    Independent of the engine: tries every monic polynomial degree by
    degree and returns the first annihilator found.  Raises
    ResourceLimitError once q^(d+1) would exceed the guard.
    """
    dom = s.domain
    if not isinstance(dom, PrimeField):
        raise UnsupportedDomainError("brute-force search needs a finite field")
    if all(t == 0 for t in s.terms):
        return 0, Poly(dom, (1,))
    q = dom.p
    n = len(s)
    if q == 2:
        S = sum(1 << i for i, t in enumerate(s.terms) if t)
        for d in range(1, n + 1):
            if q ** (d + 1) > guard:
                raise ResourceLimitError(f"brute force bound exceeded at degree {d}")
            mask = ((1 << (n - d)) - 1) << d
            for low in range(1 << d):
                f = low | (1 << d)
                frev = int(bin(f)[2:][::-1], 2)
                if gf2.mul(frev, S) & mask == 0:
                    return d, Poly(dom, gf2.to_coeffs(f))
    else:
        for d in range(1, n + 1):
            if q ** (d + 1) > guard:
                raise ResourceLimitError(f"brute force bound exceeded at degree {d}")
            for low in itertools.product(range(q), repeat=d):
                f = Poly(dom, low + (1,))
                if annihilates(f, s):
                    return d, f
    raise AssertionError("unreachable: degree n always annihilates")
