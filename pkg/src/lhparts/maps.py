"""The four map families between partition classes.

* base m-flat decomposition and the Stockhofe-Keith map (regular ->
  distinct, via column insertion and conjugation), plus a desk-scale
  search oracle for its inverse;
* the order-n insertion/deletion bijections between single-residue
  partitions and their lecture-hall counterparts;
* the residue-relabeling embeddings and their inverses;
* the composite m-falling lecture hall bijection assembled from the
  three pieces above.

All maps are pure functions; passing a list as ``trace`` collects
(label, partition) snapshots of the intermediate states.
"""

from __future__ import annotations

import math

from . import classes, core
from .core import Partition, make_partition, part, sorted_partition
from .errors import (
    CountMismatch,
    EmptyInput,
    HasMultipleOfM,
    NotFlat,
    NotFound,
    NotInClass,
    NotInDm,
    NotMRegular,
    NotMultiple,
    NotUnique,
    NoValidIndex,
    OutOfRange,
)


def _note(trace, label, value):
    if trace is not None:
        trace.append((label, value))


# ---------------------------------------------------------------------------
# Stockhofe-Keith

def base_flat(lam: Partition, m: int):
    """Decompose lam = m*sigma + base with base m-flat.

    Reduction subtracts m from the prefix ending at the smallest index
    whose gap to the next part (or to zero, after the last part) is at
    least m; the result is order-independent (property-tested).
    """
    core.check_modulus(m)
    cur = list(lam)
    while True:
        for i in range(len(cur)):
            nxt = cur[i + 1] if i + 1 < len(cur) else 0
            if cur[i] - nxt >= m:
                for j in range(i + 1):
                    cur[j] -= m
                break
        else:
            break
    sigma = make_partition((a - b) // m for a, b in zip(lam, cur))
    return make_partition(cur), sigma


def base_flat_largest_first(lam: Partition, m: int):
    """Same reduction but picking the largest violating index (oracle for
    the confluence property)."""
    core.check_modulus(m)
    cur = list(lam)
    while True:
        hit = -1
        for i in range(len(cur)):
            nxt = cur[i + 1] if i + 1 < len(cur) else 0
            if cur[i] - nxt >= m:
                hit = i
        if hit < 0:
            break
        for j in range(hit + 1):
            cur[j] -= m
    sigma = make_partition((a - b) // m for a, b in zip(lam, cur))
    return make_partition(cur), sigma


def sk_insert(tau: Partition, km: int, m: int) -> Partition:
    """Insert a multiple of m into an m-flat partition, keeping it m-flat.

    When km is large enough, the first i parts are raised by m and a new
    part (k-i)m is placed after them, for the unique i that keeps the
    result flat; otherwise km simply becomes a new part.
    """
    core.check_modulus(m)
    if km <= 0 or km % m:
        raise NotMultiple(f"inserted part must be a positive multiple of {m}, got {km}")
    if tau and not classes.in_flat(tau, m):
        raise NotFlat(f"{tau} is not {m}-flat")
    if not tau:
        # degenerate: no first part to compare against, insert directly
        return (km,)
    k = km // m
    if km - tau[0] >= m:
        found = None
        for i in range(1, min(k, len(tau)) + 1):
            cand = sorted_partition(
                [tau[t] + m for t in range(i)] + [(k - i) * m] + list(tau[i:])
            )
            raw = tuple(x for x in
                        [tau[t] + m for t in range(i)] + [(k - i) * m] + list(tau[i:])
                        if x)
            if raw == cand and classes.in_flat(cand, m):
                if found is not None:
                    raise NoValidIndex(f"raise index not unique inserting {km} into {tau}")
                found = cand
        if found is None:
            raise NoValidIndex(f"no raise index works inserting {km} into {tau}")
        return found
    return sorted_partition(tau + (km,))


def stockhofe_keith(lam: Partition, m: int, trace: list | None = None) -> Partition:
    """The three-step map from m-regular to m-distinct partitions."""
    core.check_modulus(m)
    if not classes.in_regular(lam, m):
        raise NotMRegular(f"{lam} has a part divisible by {m}")
    base, sigma = base_flat(lam, m)
    _note(trace, "base", base)
    _note(trace, "sigma", sigma)
    tau = base
    for col in core.conjugate(sigma):
        tau = sk_insert(tau, m * col, m)
        _note(trace, f"insert {m * col}", tau)
    mu = core.conjugate(tau)
    _note(trace, "conjugate", mu)
    return mu


def flat_image(lam: Partition, m: int) -> Partition:
    """Steps 1-2 only: the m-flat partition tau before the final conjugation."""
    return core.conjugate(stockhofe_keith(lam, m))


_SK_CACHE: dict = {}


def sk_inverse(mu: Partition, m: int, max_weight: int = 22) -> Partition:
    """Search oracle for the Stockhofe-Keith inverse.

    Exhausts the m-regular partitions of the same weight; existence and
    uniqueness of the preimage are asserted, since either failure would
    falsify the bijection at this size.
    """
    core.check_modulus(m)
    if not classes.in_distinct(mu, m):
        raise NotInDm(f"{mu} has a part repeated {m} or more times")
    w = sum(mu)
    if w > max_weight:
        raise OutOfRange(f"weight {w} exceeds the search guard {max_weight}")
    key = (m, w)
    if key not in _SK_CACHE:
        table: dict = {}
        for lam in classes.partitions_of(w):
            if classes.in_regular(lam, m):
                table.setdefault(stockhofe_keith(lam, m), []).append(lam)
        _SK_CACHE[key] = table
    hits = _SK_CACHE[key].get(mu, [])
    if not hits:
        raise NotFound(f"no {m}-regular preimage of {mu}")
    if len(hits) > 1:
        raise NotUnique(f"multiple preimages of {mu}: {hits}")
    return hits[0]


# ---------------------------------------------------------------------------
# single-residue insertion / deletion

def _insertion_vector(m: int, c: int, k: int, j: int) -> list:
    return [1] * (j * m) + [k - j + 1] * c + [k - j] * (m - c)


def insert_part(mu: Partition, k: int, m: int, c: int, n: int,
                check: bool = True) -> Partition:
    """Insert the part km+c into mu, a member of L_{c,m}^n."""
    core.check_modulus(m)
    if not 0 <= k <= n - 1:
        raise OutOfRange(f"part {k}m+{c} must satisfy 0 <= k <= n-1 = {n - 1}")
    j = 0
    while j < k:
        num1, den1 = part(mu, m * j + c) + 1, n - 2 * j
        num2, den2 = part(mu, m * j + m) + 1, n - 2 * j - 1
        if den1 > 0 and den2 > 0 and num1 * den2 >= num2 * den1:
            j += 1
        else:
            break
    vec = _insertion_vector(m, c, k, j)
    width = max(len(mu), len(vec))
    out = make_partition(part(mu, i + 1) + (vec[i] if i < len(vec) else 0)
                         for i in range(width))
    if check and not classes.in_l_cmn(out, m, c, n):
        raise NotInClass(f"insertion left the lecture-hall class: {out}")
    return out


def delete_part(mu: Partition, m: int, c: int, n: int):
    """Peel one part km+c off mu, returning (km+c, remainder).

    Scans (k, j) with k ascending and j from 0 to k, taking the first
    subtraction that lands back in L_{c,m}^n.
    """
    core.check_modulus(m)
    if not mu:
        raise EmptyInput("cannot delete from the empty partition")
    limit = mu[0] + m  # termination is guaranteed; this is a safety net
    for k in range(limit):
        for j in range(k + 1):
            vec = _insertion_vector(m, c, k, j)
            width = max(len(mu), len(vec))
            vals = [part(mu, i + 1) - (vec[i] if i < len(vec) else 0)
                    for i in range(width)]
            if any(v < 0 for v in vals):
                continue
            if any(a < b for a, b in zip(vals, vals[1:])):
                continue
            stripped = tuple(v for v in vals if v)
            if classes.in_l_cmn(stripped, m, c, n):
                return k * m + c, stripped
    raise NotInClass(f"deletion failed on {mu} (not in L_{{{c},{m}}}^{n}?)")


def phi_n(lam: Partition, m: int, c: int, n: int,
          trace: list | None = None) -> Partition:
    """Insert the parts of lam (largest first): O_{c,m}^n -> L_{c,m}^n."""
    if not classes.is_member(lam, classes.ClassSpec("O_cm_n", m=m, c=c, n=n)):
        raise NotInClass(f"{lam} is not in O_{{{c},{m}}}^{n}")
    mu: Partition = ()
    for p in lam:
        mu = insert_part(mu, (p - c) // m, m, c, n)
        _note(trace, f"insert {p}", mu)
    return mu


def psi_n(mu: Partition, m: int, c: int, n: int,
          trace: list | None = None) -> Partition:
    """Repeated deletion: the inverse of phi_n."""
    if not classes.in_l_cmn(mu, m, c, n):
        raise NotInClass(f"{mu} is not in L_{{{c},{m}}}^{n}")
    parts = []
    cur = mu
    while cur:
        p, cur = delete_part(cur, m, c, n)
        _note(trace, f"delete {p}", cur)
        parts.append(p)
    # parts come out nondecreasing; return as a partition
    return sorted_partition(parts)


# ---------------------------------------------------------------------------
# residue relabeling

def relabel_to_c(lam: Partition, m: int, c: int) -> Partition:
    """Forward embedding: set every residue to c, keeping quotients."""
    core.check_modulus(m)
    if any(p % m == 0 for p in lam):
        raise HasMultipleOfM(f"{lam} has a part divisible by {m}")
    return make_partition((p // m) * m + c for p in lam)


def _assign_residues(quotients, m, v):
    # largest residues go to the largest parts; this is the unique
    # nonincreasing-residue assignment
    residues = []
    for r in range(m - 1, 0, -1):
        residues.extend([r] * v[r - 1])
    return [a * m + r for a, r in zip(quotients, residues)]


def restore_residues(pi: Partition, m: int, v) -> Partition:
    """Inverse embedding: reassign residues per the length-type vector v."""
    core.check_modulus(m)
    v = tuple(v)
    if len(v) != m - 1:
        raise CountMismatch(f"residue vector must have {m - 1} entries")
    if sum(v) != len(pi):
        raise CountMismatch(f"vector total {sum(v)} != {len(pi)} parts")
    return make_partition(_assign_residues([p // m for p in pi], m, v))


def g_forward(mu: Partition, m: int, c: int) -> Partition:
    """Column-side relabeling: conjugate, send every nonzero residue to c,
    conjugate back."""
    core.check_modulus(m)
    col = core.conjugate(mu)
    relabeled = [(p // m) * m + c if p % m else p for p in col]
    return core.conjugate(sorted_partition(relabeled))


def g_inverse(rho: Partition, m: int, v) -> Partition:
    """Inverse of g_forward for the prescribed alternating-sum type v."""
    core.check_modulus(m)
    v = tuple(v)
    if len(v) != m - 1:
        raise CountMismatch(f"residue vector must have {m - 1} entries")
    col = core.conjugate(rho)
    movable = [p for p in col if p % m]
    fixed = [p for p in col if p % m == 0]
    if sum(v) != len(movable):
        raise CountMismatch(f"vector total {sum(v)} != {len(movable)} movable parts")
    relabeled = _assign_residues([p // m for p in movable], m, v)
    out = core.conjugate(sorted_partition(relabeled + fixed))
    if out:
        # the assignment must respect the block condition lb_i <= fb_{i+1}
        for i in range((len(out) - 1) // m):
            _, lb = core.fb_lb(out, m, i)
            fb, _ = core.fb_lb(out, m, i + 1)
            assert lb <= fb, f"g_inverse broke the block condition on {out}"
    return out


# ---------------------------------------------------------------------------
# composite bijection

def composite_phi_n(lam: Partition, m: int, n: int, c: int | None = None,
                    trace: list | None = None) -> Partition:
    """O_{m-falling}^n -> L_{m-falling}^n, threading through residue c."""
    core.check_modulus(m)
    if c is None:
        c = m - 1
    if not classes.is_member(lam, classes.ClassSpec("O_m_falling_n", m=m, n=n)):
        raise NotInClass(f"{lam} is not an order-{n} m-falling regular partition")
    v = core.length_type(lam, m)
    uniform = relabel_to_c(lam, m, c)
    _note(trace, f"relabel to {c}", uniform)
    lifted = phi_n(uniform, m, c, n, trace=trace)
    _note(trace, "lecture-hall image", lifted)
    out = g_inverse(lifted, m, v)
    _note(trace, "restore residues", out)
    return out


def composite_inverse(mu: Partition, m: int, n: int, c: int | None = None,
                      trace: list | None = None) -> Partition:
    """Inverse of composite_phi_n."""
    core.check_modulus(m)
    if c is None:
        c = m - 1
    if not classes.in_l_falling_n(mu, m, n):
        raise NotInClass(f"{mu} is not an order-{n} m-falling lecture hall partition")
    v = core.alt_sum_type(mu, m)
    uniform = g_forward(mu, m, c)
    _note(trace, f"relabel columns to {c}", uniform)
    peeled = psi_n(uniform, m, c, n, trace=trace)
    _note(trace, "peeled", peeled)
    out = restore_residues(peeled, m, v)
    _note(trace, "restore residues", out)
    return out
