"""Partition values and the statistics defined on them.

A partition is a plain tuple of positive integers in nonincreasing order;
the empty tuple is the empty partition.  All indexed formulas below are
1-based with implicit zeros past the stored parts, so ``part(lam, i)``
is the right accessor whenever an index may run off the end.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence

from .errors import BadBlock, BadIndex, BadModulus, IncreasingInput, NotInDm

Partition = tuple


def make_partition(values: Iterable[int]) -> Partition:
    """Canonicalize ``values`` into a partition, stripping zeros.

    The nonzero entries must already be nonincreasing; anything else
    raises :class:`IncreasingInput`.
    """
    vals = []
    for v in values:
        v = int(v)
        if v < 0:
            raise IncreasingInput(f"negative part {v}")
        if v:
            vals.append(v)
    for a, b in zip(vals, vals[1:]):
        if a < b:
            raise IncreasingInput(f"parts must be nonincreasing, got {a} before {b}")
    return tuple(vals)


def sorted_partition(values: Iterable[int]) -> Partition:
    """Like :func:`make_partition` but sorts the input first."""
    return tuple(sorted((int(v) for v in values if v), reverse=True))


def part(lam: Partition, i: int) -> int:
    """1-based part access with implicit zeros."""
    if i < 1:
        raise BadIndex(f"part index must be >= 1, got {i}")
    return lam[i - 1] if i <= len(lam) else 0


def weight(lam: Partition) -> int:
    return sum(lam)


def num_parts(lam: Partition) -> int:
    return len(lam)


def check_modulus(m: int) -> None:
    if m < 2:
        raise BadModulus(f"modulus must be >= 2, got {m}")


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Ferrers diagram: part i counts parts >= i."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def linear_combine(k: int, lam: Partition, l: int, mu: Partition) -> Partition:
    """Entrywise k*lam + l*mu with implicit zeros."""
    n = max(len(lam), len(mu))
    return make_partition(k * part(lam, i) + l * part(mu, i) for i in range(1, n + 1))


def modular_cells(lam: Partition, m: int) -> tuple:
    """Per-part (quotient, residue) pairs mod m, in part order."""
    check_modulus(m)
    return tuple((p // m, p % m) for p in lam)


def residue_sequence(lam: Partition, m: int) -> tuple:
    check_modulus(m)
    return tuple(p % m for p in lam)


def alt_sum_component(lam: Partition, m: int, i: int) -> int:
    """s_i: alternating sum of parts at stride m starting from index i."""
    check_modulus(m)
    if not 1 <= i <= m:
        raise BadIndex(f"component index must be in [1, {m}], got {i}")
    total = 0
    t = 0
    while t * m + i <= len(lam) + 1:
        total += part(lam, t * m + i) - part(lam, t * m + i + 1)
        t += 1
    return total


def alt_sum_type(lam: Partition, m: int) -> tuple:
    """(s_1, ..., s_{m-1}); s_m is deliberately excluded."""
    return tuple(alt_sum_component(lam, m, i) for i in range(1, m))


def alt_sum(lam: Partition, m: int) -> int:
    """s(lam) = s_1 + ... + s_{m-1}."""
    return sum(alt_sum_type(lam, m))


def s_m(lam: Partition, m: int) -> int:
    return alt_sum_component(lam, m, m)


def length_component(lam: Partition, m: int, i: int) -> int:
    """ell_i: number of parts with residue i mod m (i = m counts multiples)."""
    check_modulus(m)
    if not 1 <= i <= m:
        raise BadIndex(f"component index must be in [1, {m}], got {i}")
    r = i % m
    return sum(1 for p in lam if p % m == r)


def length_type(lam: Partition, m: int) -> tuple:
    """(ell_1, ..., ell_{m-1}); multiples of m are not counted."""
    return tuple(length_component(lam, m, i) for i in range(1, m))


def m_length(lam: Partition, m: int) -> int:
    """ell(lam) = ell_1 + ... + ell_{m-1}."""
    return sum(length_type(lam, m))


def ell_multiples(lam: Partition, m: int) -> int:
    """ell_m: number of parts divisible by m."""
    return length_component(lam, m, m)


def asc(lam: Partition, m: int) -> int:
    """Strict ascents in the residue sequence of the stored parts."""
    v = residue_sequence(lam, m)
    return sum(1 for a, b in zip(v, v[1:]) if a < b)


def fb_lb(lam: Partition, m: int, i: int) -> tuple:
    """(fb_i, lb_i) for block i of m consecutive parts (implicit zeros).

    Within block (lam_{im+1}, ..., lam_{im+m}) the pattern is a constant
    head, a strictly smaller middle, and a constant tail; fb is the head
    length and lb marks the last entry before the tail.
    """
    check_modulus(m)
    if not lam:
        raise BadBlock("empty partition has no blocks")
    counts = Counter(lam)
    if any(cnt >= m for cnt in counts.values()):
        raise NotInDm(f"a part repeats {m} or more times; fb/lb undefined")
    if not 0 <= i <= (len(lam) - 1) // m:
        raise BadBlock(f"block index {i} out of range for {len(lam)} parts")
    block = [part(lam, i * m + t) for t in range(1, m + 1)]
    fb = 1
    while fb < m and block[fb] == block[0]:
        fb += 1
    tail = 1
    while tail < m and block[m - 1 - tail] == block[m - 1]:
        tail += 1
    return fb, m - tail


def render_modular_ferrers(lam: Partition, m: int) -> str:
    """m-modular Ferrers diagram: one row per part, space-separated labels."""
    check_modulus(m)
    rows = []
    for p in lam:
        cells = [str(m)] * (p // m)
        if p % m:
            cells.append(str(p % m))
        rows.append(" ".join(cells))
    return "\n".join(rows)
