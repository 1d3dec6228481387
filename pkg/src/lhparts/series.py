"""Exact truncated polynomial arithmetic in q and z_1..z_k.

A :class:`TruncatedSeries` stores sparse terms keyed by (q-degree,
z-exponent tuple) with Python-int coefficients; any product term whose
q-degree exceeds the bound is dropped.  The z exponents need no
separate bound: every generator carrying a z also carries at least q^1,
so the q bound caps them implicitly.
"""

from __future__ import annotations

import math
from functools import lru_cache

from . import classes, core
from .errors import BadSpec, BoundMismatch, NonPositiveDegree


class TruncatedSeries:
    __slots__ = ("qbound", "nvars", "terms")

    def __init__(self, qbound: int, nvars: int, terms: dict | None = None):
        self.qbound = qbound
        self.nvars = nvars
        self.terms = {}
        if terms:
            for (d, z), coeff in terms.items():
                if coeff and d <= qbound:
                    self.terms[(d, tuple(z))] = coeff

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, qbound, nvars):
        return cls(qbound, nvars)

    @classmethod
    def const(cls, qbound, nvars, coeff=1):
        return cls(qbound, nvars, {(0, (0,) * nvars): coeff})

    @classmethod
    def monomial(cls, qbound, nvars, d, zexps=(), coeff=1):
        zexps = tuple(zexps) if zexps else (0,) * nvars
        if len(zexps) != nvars:
            raise BoundMismatch(f"expected {nvars} z-exponents, got {len(zexps)}")
        return cls(qbound, nvars, {(d, zexps): coeff})

    # -- ring operations ----------------------------------------------------

    def _check(self, other):
        if self.qbound != other.qbound or self.nvars != other.nvars:
            raise BoundMismatch(
                f"series bounds differ: (N={self.qbound}, k={self.nvars}) vs "
                f"(N={other.qbound}, k={other.nvars})")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            new = terms.get(key, 0) + coeff
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
        return TruncatedSeries(self.qbound, self.nvars, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        self._check(other)
        terms: dict = {}
        for (d1, z1), c1 in self.terms.items():
            for (d2, z2), c2 in other.terms.items():
                d = d1 + d2
                if d > self.qbound:
                    continue
                key = (d, tuple(a + b for a, b in zip(z1, z2)))
                new = terms.get(key, 0) + c1 * c2
                if new:
                    terms[key] = new
                else:
                    terms.pop(key, None)
        return TruncatedSeries(self.qbound, self.nvars, terms)

    def scale(self, factor: int):
        return TruncatedSeries(self.qbound, self.nvars,
                               {k: factor * c for k, c in self.terms.items()})

    def add_term(self, d, zexps, coeff=1):
        """In-place accumulation; used by the enumeration summers."""
        if d > self.qbound or not coeff:
            return
        key = (d, tuple(zexps))
        new = self.terms.get(key, 0) + coeff
        if new:
            self.terms[key] = new
        else:
            del self.terms[key]

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries)
                and self.qbound == other.qbound
                and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.qbound, self.nvars, frozenset(self.terms.items())))

    # -- views --------------------------------------------------------------

    def coefficient(self, d, zexps=()):
        zexps = tuple(zexps) if zexps else (0,) * self.nvars
        return self.terms.get((d, zexps), 0)

    def slice_terms(self, d):
        """Terms of q-degree d as a {zexps: coeff} dict."""
        return {z: c for (deg, z), c in self.terms.items() if deg == d}

    def term_count_by_degree(self):
        counts = [0] * (self.qbound + 1)
        for (d, _z) in self.terms:
            counts[d] += 1
        return counts

    def to_text(self) -> str:
        """Canonical one-term-per-line form, graded-lex order."""
        lines = []
        for (d, z) in sorted(self.terms):
            bits = [f"q^{d}"] if d else []
            bits += [f"z{i}^{e}" for i, e in enumerate(z, 1) if e]
            head = " ".join(bits) if bits else "1"
            lines.append(f"{head} : {self.terms[(d, z)]}")
        return "\n".join(lines)

    def __repr__(self):
        return (f"TruncatedSeries(N={self.qbound}, k={self.nvars}, "
                f"{len(self.terms)} terms)")


def geometric_factor(qbound: int, nvars: int, d: int, zexps=()) -> TruncatedSeries:
    """Expansion of 1/(1 - q^d z^zexps) up to the q bound."""
    if d < 1:
        raise NonPositiveDegree(f"geometric factor needs q-degree >= 1, got {d}")
    zexps = tuple(zexps) if zexps else (0,) * nvars
    terms = {}
    t = 0
    while t * d <= qbound:
        terms[(t * d, tuple(t * e for e in zexps))] = 1
        t += 1
    return TruncatedSeries(qbound, nvars, terms)


# ---------------------------------------------------------------------------
# Gaussian polynomials

@lru_cache(maxsize=None)
def gauss_coeffs(a: int, b: int) -> tuple:
    """q-coefficients of the Gaussian polynomial [a+b, b]_q, by the
    q-Pascal recurrence [a+b,b] = [a+b-1,b-1] + q^b [a+b-1,b]."""
    if a < 0 or b < 0:
        raise BadSpec("Gaussian polynomial needs nonnegative box sides")
    if a == 0 or b == 0:
        return (1,)
    left = gauss_coeffs(a, b - 1)
    right = gauss_coeffs(a - 1, b)
    out = [0] * (a * b + 1)
    for i, c in enumerate(left):
        out[i] += c
    for i, c in enumerate(right):
        out[i + b] += c
    return tuple(out)


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_divmod_exact(num, den):
    """Exact long division of integer polynomials (remainder must vanish)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        coeff = num[i + len(den) - 1]
        if coeff % den[-1]:
            raise ArithmeticError("non-exact polynomial division")
        c = coeff // den[-1]
        out[i] = c
        if c:
            for j, b in enumerate(den):
                num[i + j] -= c * b
    if any(num):
        raise ArithmeticError("nonzero remainder in polynomial division")
    return out


def q_rising_factorial_coeffs(a: int) -> list:
    """(q;q)_a = (1-q)(1-q^2)...(1-q^a) as a dense coefficient list."""
    out = [1]
    for i in range(1, a + 1):
        factor = [1] + [0] * (i - 1) + [-1]
        out = _poly_mul(out, factor)
    return out


def gauss_coeffs_by_quotient(a: int, b: int) -> tuple:
    """Independent oracle: (q;q)_{a+b} / ((q;q)_a (q;q)_b)."""
    num = q_rising_factorial_coeffs(a + b)
    den = _poly_mul(q_rising_factorial_coeffs(a), q_rising_factorial_coeffs(b))
    return tuple(_poly_divmod_exact(num, den))


def gauss_binomial(a: int, b: int, qstep: int, qbound: int,
                   nvars: int = 0) -> TruncatedSeries:
    """[a+b, b] with q replaced by q^qstep, as a truncated series."""
    if qstep < 1:
        raise BadSpec(f"q-step must be >= 1, got {qstep}")
    zero = (0,) * nvars
    terms = {}
    for i, coeff in enumerate(gauss_coeffs(a, b)):
        if coeff and i * qstep <= qbound:
            terms[(i * qstep, zero)] = coeff
    return TruncatedSeries(qbound, nvars, terms)


def homog_sym(i: int, gens, qbound: int, nvars: int) -> TruncatedSeries:
    """Complete homogeneous symmetric polynomial h_i over the generator
    monomials ``gens`` (each a (q-degree, z-exponents) pair, coefficient 1)."""
    if i < 0:
        raise BadSpec(f"degree must be >= 0, got {i}")
    table = [TruncatedSeries.const(qbound, nvars)] + \
            [TruncatedSeries.zero(qbound, nvars) for _ in range(i)]
    for (d, z) in gens:
        gen = TruncatedSeries.monomial(qbound, nvars, d, z)
        for deg in range(1, i + 1):
            table[deg] = table[deg] + gen * table[deg - 1]
    return table[i]


# ---------------------------------------------------------------------------
# class generating functions

SELECTORS = ("trivial", "s-type", "l-type", "s-type-sm", "l-type-asc", "s", "ell")


def selector_nvars(selector: str, m: int | None) -> int:
    if selector == "trivial":
        return 0
    if selector in ("s", "ell"):
        return 1
    if selector in ("s-type", "l-type"):
        return m - 1
    if selector in ("s-type-sm", "l-type-asc"):
        return m
    raise BadSpec(f"unknown statistic selector {selector!r}")


def _selector_exps(lam, selector, m):
    if selector == "trivial":
        return ()
    if selector == "s":
        return (core.alt_sum(lam, m),)
    if selector == "ell":
        return (core.m_length(lam, m),)
    if selector == "s-type":
        return core.alt_sum_type(lam, m)
    if selector == "l-type":
        return core.length_type(lam, m)
    if selector == "s-type-sm":
        return core.alt_sum_type(lam, m) + (core.s_m(lam, m),)
    if selector == "l-type-asc":
        zm = core.part(lam, 1) // m - core.asc(lam, m)
        return core.length_type(lam, m) + (zm,)
    raise BadSpec(f"unknown statistic selector {selector!r}")


def _slice_terms(spec, selector, w):
    # one weight shard of class_generating_function; module-level so it
    # can cross a process boundary for parallel runs
    terms: dict = {}
    for lam in classes.partitions_of(w):
        if classes.is_member(lam, spec):
            key = (w, tuple(_selector_exps(lam, selector, spec.m)))
            terms[key] = terms.get(key, 0) + 1
    return terms


def class_generating_function(spec, selector: str, qbound: int,
                              jobs: int = 1) -> TruncatedSeries:
    """Sum of the selected monomial over the class members of weight <= N."""
    spec.validate()
    m = spec.m
    if selector != "trivial" and m is None:
        raise BadSpec(f"selector {selector!r} needs a modulus")
    nvars = selector_nvars(selector, m)
    out = TruncatedSeries.zero(qbound, nvars)
    weights = range(qbound + 1)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            shards = list(pool.map(_slice_terms, [spec] * len(weights),
                                   [selector] * len(weights), weights))
    else:
        shards = [_slice_terms(spec, selector, w) for w in weights]
    for shard in shards:
        for (d, z), coeff in shard.items():
            out.add_term(d, z, coeff)
    return out


def gf_falling_rhs(m: int, n: int, z_mode: str, qbound: int) -> TruncatedSeries:
    """Closed-form side of the order-n falling-regular generating function.

    multi:  sum_i h_i(z_1 q, ..., z_{m-1} q^{m-1}) [n-1+i, i]_{q^m}
    single: sum_i [m-2+i, i]_q [n-1+i, i]_{q^m} z^i q^i
    """
    core.check_modulus(m)
    if n < 1:
        raise BadSpec(f"order must be >= 1, got {n}")
    if z_mode == "multi":
        nvars = m - 1
        gens = [(j, tuple(1 if t == j else 0 for t in range(1, m)))
                for j in range(1, m)]
        out = TruncatedSeries.zero(qbound, nvars)
        for i in range(qbound + 1):  # h_i has minimum q-degree i
            out = out + homog_sym(i, gens, qbound, nvars) * \
                gauss_binomial(n - 1, i, m, qbound, nvars)
        return out
    if z_mode == "single":
        out = TruncatedSeries.zero(qbound, 1)
        for i in range(qbound + 1):
            zi = TruncatedSeries.monomial(qbound, 1, i, (i,))
            out = out + zi * gauss_binomial(m - 2, i, 1, qbound, 1) * \
                gauss_binomial(n - 1, i, m, qbound, 1)
        return out
    raise BadSpec(f"z_mode must be 'multi' or 'single', got {z_mode!r}")


def single_residue_product(m: int, c: int, n: int, qbound: int) -> TruncatedSeries:
    """1 / ((1-zq^c)(1-zq^{m+c})...(1-zq^{(n-1)m+c})) truncated."""
    out = TruncatedSeries.const(qbound, 1)
    for j in range(n):
        d = j * m + c
        if d > qbound:
            break
        out = out * geometric_factor(qbound, 1, d, (1,))
    return out


def lecture_hall_product(n: int, qbound: int) -> TruncatedSeries:
    """prod_{i=1..n} 1/(1 - q^{2i-1}) truncated."""
    out = TruncatedSeries.const(qbound, 0)
    for i in range(1, n + 1):
        d = 2 * i - 1
        if d > qbound:
            break
        out = out * geometric_factor(qbound, 0, d)
    return out


def glaisher_lhs(m: int, qbound: int) -> TruncatedSeries:
    """prod_n (1 + q^n + ... + q^{(m-1)n}) truncated."""
    out = TruncatedSeries.const(qbound, 0)
    for n in range(1, qbound + 1):
        factor = TruncatedSeries(qbound, 0,
                                 {(t * n, ()): 1 for t in range(m)
                                  if t * n <= qbound})
        out = out * factor
    return out


def glaisher_rhs(m: int, qbound: int) -> TruncatedSeries:
    """prod_{i not divisible by m} 1/(1 - q^i) truncated."""
    out = TruncatedSeries.const(qbound, 0)
    for i in range(1, qbound + 1):
        if i % m:
            out = out * geometric_factor(qbound, 0, i)
    return out
