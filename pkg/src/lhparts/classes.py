"""Partition class predicates and bounded-weight enumerators.

Every class is available both as a membership predicate (via
:func:`is_member`) and as a deterministic enumerator (weight-major,
descending lexicographic within each weight).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from . import core
from .errors import BadSpec

KINDS = (
    "ALL",
    "D_m",
    "O_m",
    "F_m",
    "O_m_falling",
    "O_m_falling_n",
    "O_cm",
    "O_cm_n",
    "D_cm",
    "L_cm_n",
    "L_m_falling_n",
    "lecture_hall_n",
)

_NEEDS = {
    "ALL": (),
    "D_m": ("m",),
    "O_m": ("m",),
    "F_m": ("m",),
    "O_m_falling": ("m",),
    "O_m_falling_n": ("m", "n"),
    "O_cm": ("m", "c"),
    "O_cm_n": ("m", "c", "n"),
    "D_cm": ("m", "c"),
    "L_cm_n": ("m", "c", "n"),
    "L_m_falling_n": ("m", "n"),
    "lecture_hall_n": ("n",),
}


@dataclass(frozen=True)
class ClassSpec:
    kind: str
    m: int | None = None
    c: int | None = None
    n: int | None = None

    def validate(self) -> "ClassSpec":
        if self.kind not in _NEEDS:
            raise BadSpec(f"unknown class kind {self.kind!r}")
        needs = _NEEDS[self.kind]
        for name in ("m", "c", "n"):
            val = getattr(self, name)
            if name in needs and val is None:
                raise BadSpec(f"{self.kind} requires parameter {name}")
        if "m" in needs and self.m < 2:
            raise BadSpec(f"modulus must be >= 2, got {self.m}")
        if "c" in needs and not 1 <= self.c <= self.m - 1:
            raise BadSpec(f"residue c must be in [1, {self.m - 1}], got {self.c}")
        if "n" in needs and self.n < 1:
            raise BadSpec(f"order n must be >= 1, got {self.n}")
        return self

    def describe(self) -> str:
        bits = [self.kind]
        for name in _NEEDS[self.kind]:
            bits.append(f"{name}={getattr(self, name)}")
        return " ".join(bits)


# ---------------------------------------------------------------------------
# predicates

def in_distinct(lam, m) -> bool:
    """D_m: no nonzero value occurs m or more times."""
    return all(cnt < m for cnt in Counter(lam).values())


def in_regular(lam, m) -> bool:
    """O_m: no part divisible by m."""
    return all(p % m for p in lam)


def in_flat(lam, m) -> bool:
    """F_m: consecutive differences at most m-1, including the drop to zero
    after the last part (the reading under which conjugation carries F_m
    onto D_m)."""
    if not lam:
        return True
    if lam[-1] > m - 1:
        return False
    return all(a - b <= m - 1 for a, b in zip(lam, lam[1:]))


def in_falling_regular(lam, m) -> bool:
    """O_m-falling: m-regular with nonincreasing residue sequence."""
    return in_regular(lam, m) and core.asc(lam, m) == 0


def _ratio_ok(p: int, q: int) -> bool:
    # p/q with q <= 0 is admissible only when p = 0 (and then has value 0)
    return q > 0 or p == 0


def _ratio_ge(p1: int, q1: int, p2: int, q2: int) -> bool:
    # assumes both terms admissible; zero-denominator terms compare as 0
    if q2 <= 0:
        return True
    if q1 <= 0:
        return p2 == 0
    return p1 * q2 >= p2 * q1


def _chain_holds(terms) -> bool:
    """Exact nonincreasing check over a list of (numerator, denominator)."""
    for p, q in terms:
        if not _ratio_ok(p, q):
            return False
    return all(_ratio_ge(p1, q1, p2, q2)
               for (p1, q1), (p2, q2) in zip(terms, terms[1:]))


def in_lecture_hall(lam, n) -> bool:
    """Lecture hall partitions of length n: lam_1/n >= ... >= lam_n/1 >= 0."""
    if len(lam) > n:
        return False
    terms = [(core.part(lam, i), n + 1 - i) for i in range(1, n + 1)]
    return _chain_holds(terms)


def in_single_residue(lam, m, c) -> bool:
    """O_{c,m}: all parts congruent to c mod m."""
    return all(p % m == c for p in lam)


def in_d_cm(lam, m, c) -> bool:
    """D_{c,m}: D_m with alternating sum type supported only at c."""
    if not in_distinct(lam, m):
        return False
    if not lam:
        return True
    stype = core.alt_sum_type(lam, m)
    return stype[c - 1] > 0 and all(s == 0 for i, s in enumerate(stype, 1) if i != c)


def _length_bound(m, n) -> int:
    return ((n + 1) // 2) * (m - 2) + n


def in_l_cmn(lam, m, c, n) -> bool:
    """L_{c,m}^n: D_{c,m} with the length bound and ratio chains."""
    if not in_d_cm(lam, m, c):
        return False
    if len(lam) > _length_bound(m, n):
        return False
    for k in range(math.ceil(n / 2)):
        terms = [
            (core.part(lam, k * m + c), n - 2 * k),
            (core.part(lam, k * m + m), n - 2 * k - 1),
            (core.part(lam, (k + 1) * m + c), n - 2 * k - 2),
        ]
        if not _chain_holds(terms):
            return False
    return True


def in_l_falling_n(lam, m, n) -> bool:
    """L_{m-falling}^n: the m-falling lecture hall partitions of order n."""
    if not in_distinct(lam, m):
        return False
    if len(lam) > _length_bound(m, n):
        return False
    if lam:
        nblocks = (len(lam) - 1) // m
        for i in range(nblocks):
            _, lb = core.fb_lb(lam, m, i)
            fb, _ = core.fb_lb(lam, m, i + 1)
            if lb > fb:
                return False
    terms = []
    for t in range(math.ceil(n / 2)):
        terms.append((core.part(lam, t * m + 1), n - 2 * t))
        terms.append((core.part(lam, t * m + m), n - 2 * t - 1))
    return _chain_holds(terms)


def is_member(lam, spec: ClassSpec) -> bool:
    spec.validate()
    m, c, n = spec.m, spec.c, spec.n
    kind = spec.kind
    if kind == "ALL":
        return True
    if kind == "D_m":
        return in_distinct(lam, m)
    if kind == "O_m":
        return in_regular(lam, m)
    if kind == "F_m":
        return in_flat(lam, m)
    if kind == "O_m_falling":
        return in_falling_regular(lam, m)
    if kind == "O_m_falling_n":
        return in_falling_regular(lam, m) and core.part(lam, 1) < n * m
    if kind == "O_cm":
        return in_single_residue(lam, m, c)
    if kind == "O_cm_n":
        return in_single_residue(lam, m, c) and core.part(lam, 1) < n * m
    if kind == "D_cm":
        return in_d_cm(lam, m, c)
    if kind == "L_cm_n":
        return in_l_cmn(lam, m, c, n)
    if kind == "L_m_falling_n":
        return in_l_falling_n(lam, m, n)
    if kind == "lecture_hall_n":
        return in_lecture_hall(lam, n)
    raise BadSpec(f"unknown class kind {kind!r}")


# ---------------------------------------------------------------------------
# enumeration

def partitions_of(w: int, max_part: int | None = None):
    """Partitions of weight w in descending lexicographic order."""
    if w == 0:
        yield ()
        return
    top = w if max_part is None else min(max_part, w)
    for first in range(top, 0, -1):
        for rest in partitions_of(w - first, first):
            yield (first,) + rest


def enumerate_partitions(max_weight: int):
    """Every partition of weight 0..max_weight, weight-major then desc-lex."""
    for w in range(max_weight + 1):
        yield from partitions_of(w)


def _single_residue_of(w: int, values_desc, hi: int):
    """Partitions of w with parts drawn from values_desc (descending),
    capped at values_desc[hi:], in descending lexicographic order."""
    if w == 0:
        yield ()
        return
    for idx in range(hi, len(values_desc)):
        v = values_desc[idx]
        if v <= w:
            for rest in _single_residue_of(w - v, values_desc, idx):
                yield (v,) + rest


def enumerate_class(spec: ClassSpec, max_weight: int, method: str = "auto"):
    """Members of the class with weight <= max_weight, deterministic order.

    ``method`` is "filter" (membership test over all partitions),
    "direct" (product-form generator, available for O_cm / O_cm_n), or
    "auto" which picks the direct path when it exists.
    """
    spec.validate()
    if method not in ("auto", "filter", "direct"):
        raise BadSpec(f"unknown enumeration method {method!r}")
    direct = spec.kind in ("O_cm", "O_cm_n")
    if method == "direct" and not direct:
        raise BadSpec(f"no direct generator for {spec.kind}")
    if direct and method != "filter":
        m, c, n = spec.m, spec.c, spec.n
        if spec.kind == "O_cm":
            n_eff = max_weight // m + 1  # parts beyond (n_eff-1)m+c exceed the bound
        else:
            n_eff = n
        values = [j * m + c for j in range(n_eff - 1, -1, -1)]
        for w in range(max_weight + 1):
            yield from _single_residue_of(w, values, 0)
        return
    for lam in enumerate_partitions(max_weight):
        if is_member(lam, spec):
            yield lam


def count_by_weight(spec: ClassSpec, max_weight: int) -> list:
    """Member counts per weight 0..max_weight."""
    counts = [0] * (max_weight + 1)
    for lam in enumerate_class(spec, max_weight):
        counts[sum(lam)] += 1
    return counts
