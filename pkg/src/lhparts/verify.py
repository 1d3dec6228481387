"""Theorem-by-theorem verification harness.

Each check compares exact objects (truncated series coefficient-by-
coefficient, or bijection images element-by-element) and returns a
:class:`VerificationReport`; failures are data with a counterexample,
never exceptions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import classes, core, maps, series
from .classes import ClassSpec
from .errors import BadSpec, LhpartsError

THEOREMS = ("T1.1", "T1.2", "T1.3", "T1.4", "T2.3", "T3.1", "T3.2-limit",
            "GF4", "Glaisher")


@dataclass
class VerificationReport:
    theorem: str
    params: dict
    status: str = "pass"
    rows: list = field(default_factory=list)
    counterexample: str | None = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def add_row(self, weight, lhs, rhs, ok):
        self.rows.append({"weight": weight, "lhsTermCount": lhs,
                          "rhsTermCount": rhs,
                          "status": "ok" if ok else "mismatch"})

    def fail(self, counterexample):
        self.status = "fail"
        if self.counterexample is None:
            self.counterexample = counterexample

    def to_records(self):
        """Line-delimited record dicts with a fixed field order."""
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        for row in self.rows:
            yield {"theorem": self.theorem, "params": params,
                   "weight": row["weight"],
                   "lhsTermCount": row["lhsTermCount"],
                   "rhsTermCount": row["rhsTermCount"],
                   "status": row["status"]}
        yield {"theorem": self.theorem, "params": params, "weight": "total",
               "lhsTermCount": sum(r["lhsTermCount"] for r in self.rows),
               "rhsTermCount": sum(r["rhsTermCount"] for r in self.rows),
               "status": self.status}

    def to_text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        lines = [f"{self.theorem} [{params}]: {self.status.upper()} "
                 f"({len(self.rows)} weight slices, {self.elapsed:.2f}s)"]
        for row in self.rows:
            if row["status"] != "ok":
                lines.append(f"  weight {row['weight']}: "
                             f"{row['lhsTermCount']} vs {row['rhsTermCount']} terms")
        if self.counterexample:
            lines.append(f"  counterexample: {self.counterexample}")
        return "\n".join(lines)


def _compare_series(report, lhs, rhs, label=""):
    """Per-q-degree comparison of two truncated series."""
    tag = f"{label}: " if label else ""
    for d in range(lhs.qbound + 1):
        a = lhs.slice_terms(d)
        b = rhs.slice_terms(d)
        ok = a == b
        report.add_row(d, len(a), len(b), ok)
        if not ok:
            diff = sorted(set(a) ^ set(b) | {z for z in set(a) & set(b)
                                             if a[z] != b[z]})
            z = diff[0]
            report.fail(f"{tag}q^{d} z^{z}: {a.get(z, 0)} != {b.get(z, 0)}")


def _series_equal(report, lhs, rhs, label):
    """Equality check that only reports on failure (no per-weight rows)."""
    if lhs != rhs:
        keys = set(lhs.terms) | set(rhs.terms)
        bad = min(k for k in keys if lhs.terms.get(k, 0) != rhs.terms.get(k, 0))
        report.fail(f"{label}: term {bad}: "
                    f"{lhs.terms.get(bad, 0)} != {rhs.terms.get(bad, 0)}")


# ---------------------------------------------------------------------------
# bijection contracts

_MAPS = {
    "flat_image": lambda lam, p: maps.flat_image(lam, p["m"]),
    "stockhofe_keith": lambda lam, p: maps.stockhofe_keith(lam, p["m"]),
    "phi_n": lambda lam, p: maps.phi_n(lam, p["m"], p["c"], p["n"]),
    "psi_n": lambda lam, p: maps.psi_n(lam, p["m"], p["c"], p["n"]),
    "composite_phi_n": lambda lam, p: maps.composite_phi_n(lam, p["m"], p["n"]),
    "composite_inverse": lambda lam, p: maps.composite_inverse(lam, p["m"], p["n"]),
}

_STATS = {
    "s-type": lambda lam, p: core.alt_sum_type(lam, p["m"]),
    "l-type": lambda lam, p: core.length_type(lam, p["m"]),
    "s": lambda lam, p: core.alt_sum(lam, p["m"]),
    "ell": lambda lam, p: core.m_length(lam, p["m"]),
    "weight": lambda lam, p: sum(lam),
}


def _contract_shard(map_id, params, domain, codomain, stat_in, stat_out,
                    inverse_id, w):
    """One weight slice of a bijection-contract check (picklable)."""
    fwd = _MAPS[map_id]
    inv = _MAPS[inverse_id] if inverse_id else None
    dom = [lam for lam in classes.partitions_of(w)
           if classes.is_member(lam, domain)]
    cod = {lam for lam in classes.partitions_of(w)
           if classes.is_member(lam, codomain)}
    images = set()
    bad = None
    for lam in dom:
        try:
            mu = fwd(lam, params)
        except LhpartsError as exc:
            bad = bad or f"map failed on {lam}: {exc}"
            continue
        if sum(mu) != w:
            bad = bad or f"weight not preserved: {lam} -> {mu}"
        if mu not in cod:
            bad = bad or f"image {mu} of {lam} not in codomain"
        if mu in images:
            bad = bad or f"image {mu} has two preimages"
        images.add(mu)
        if stat_in and _STATS[stat_in](lam, params) != _STATS[stat_out](mu, params):
            bad = bad or (f"statistic not transported: {lam} -> {mu}")
        if inv is not None and inv(mu, params) != lam:
            bad = bad or f"round trip failed on {lam}"
    if bad is None and images != cod:
        missing = sorted(cod - images)
        bad = f"codomain member {missing[0]} has no preimage"
    return w, len(dom), len(cod), bad


@dataclass(frozen=True)
class BijectionContract:
    map_id: str
    domain: ClassSpec
    codomain: ClassSpec
    stat_in: str | None = None
    stat_out: str | None = None
    inverse_id: str | None = None


def check_contract(report, contract: BijectionContract, params, max_weight,
                   jobs=1):
    """Totality, image membership, injectivity, cardinality, statistic
    transport and (if registered) round trips, weight by weight."""
    args = [(contract.map_id, params, contract.domain, contract.codomain,
             contract.stat_in, contract.stat_out, contract.inverse_id, w)
            for w in range(max_weight + 1)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_contract_shard_star, args))
    else:
        results = [_contract_shard(*a) for a in args]
    for w, ndom, ncod, bad in results:
        report.add_row(w, ndom, ncod, bad is None)
        if bad is not None:
            report.fail(bad)


def _contract_shard_star(args):
    return _contract_shard(*args)


# ---------------------------------------------------------------------------
# theorem checks

_DEFAULTS = {
    "T1.1": {"n": 2, "max_weight": 30},
    "T1.2": {"m": 3, "max_weight": 22},
    "T1.3": {"m": 3, "n": 3, "max_weight": 22},
    "T1.4": {"m": 3, "max_weight": 22},
    "T2.3": {"m": 3, "max_weight": 20},
    "T3.1": {"m": 3, "c": 2, "n": 3, "max_weight": 25},
    "T3.2-limit": {"m": 3, "c": 2, "max_weight": 20},
    "GF4": {"m": 3, "n": 3, "max_weight": 20},
    "Glaisher": {"m": 3, "max_weight": 25},
}


def check_theorem(theorem: str, m=None, c=None, n=None, max_weight=None,
                  jobs: int = 1) -> VerificationReport:
    if theorem not in THEOREMS:
        raise BadSpec(f"unknown theorem id {theorem!r}; choose from {THEOREMS}")
    defaults = _DEFAULTS[theorem]
    params = {}
    for name, val in (("m", m), ("c", c), ("n", n), ("max_weight", max_weight)):
        if val is not None:
            params[name] = val
        elif name in defaults:
            params[name] = defaults[name]
    report = VerificationReport(theorem, dict(params))
    start = time.perf_counter()
    _CHECKS[theorem](report, params, jobs)
    report.elapsed = time.perf_counter() - start
    return report


def _check_t11(report, p, jobs):
    n, N = p["n"], p["max_weight"]
    lhs = series.class_generating_function(
        ClassSpec("lecture_hall_n", n=n), "trivial", N, jobs=jobs)
    rhs = series.lecture_hall_product(n, N)
    _compare_series(report, lhs, rhs)


def _check_t12(report, p, jobs):
    m, N = p["m"], p["max_weight"]
    lhs = series.class_generating_function(ClassSpec("D_m", m=m), "s-type", N,
                                           jobs=jobs)
    rhs = series.class_generating_function(ClassSpec("O_m", m=m), "l-type", N,
                                           jobs=jobs)
    _compare_series(report, lhs, rhs)


def _check_t14(report, p, jobs):
    m, N = p["m"], p["max_weight"]
    lhs = series.class_generating_function(ClassSpec("D_m", m=m), "s-type-sm",
                                           N, jobs=jobs)
    rhs = series.class_generating_function(ClassSpec("O_m", m=m), "l-type-asc",
                                           N, jobs=jobs)
    _compare_series(report, lhs, rhs)


def _check_t23(report, p, jobs):
    m, N = p["m"], p["max_weight"]
    contract = BijectionContract(
        "flat_image", ClassSpec("O_m", m=m), ClassSpec("F_m", m=m),
        stat_in="l-type", stat_out="l-type")
    check_contract(report, contract, {"m": m}, N, jobs=jobs)


def _check_t31(report, p, jobs):
    m, c, n, N = p["m"], p["c"], p["n"], p["max_weight"]
    o_spec = ClassSpec("O_cm_n", m=m, c=c, n=n)
    l_spec = ClassSpec("L_cm_n", m=m, c=c, n=n)
    gf_o = series.class_generating_function(o_spec, "ell", N, jobs=jobs)
    gf_l = series.class_generating_function(l_spec, "s", N, jobs=jobs)
    prod = series.single_residue_product(m, c, n, N)
    _compare_series(report, gf_o, gf_l)
    _series_equal(report, gf_o, prod, "product side")
    contract = BijectionContract("phi_n", o_spec, l_spec,
                                 stat_in="ell", stat_out="s",
                                 inverse_id="psi_n")
    sub = VerificationReport(report.theorem, report.params)
    check_contract(sub, contract, {"m": m, "c": c, "n": n}, N, jobs=jobs)
    if not sub.passed:
        report.fail(sub.counterexample)


def _check_t32_limit(report, p, jobs):
    # the n -> infinity statement at finite truncation: classes stabilize
    # once n > N/m
    m, c, N = p["m"], p["c"], p["max_weight"]
    n = N // m + 1
    report.params["n"] = n
    gf_o = series.class_generating_function(ClassSpec("O_cm", m=m, c=c),
                                            "ell", N, jobs=jobs)
    gf_d = series.class_generating_function(ClassSpec("D_cm", m=m, c=c),
                                            "s", N, jobs=jobs)
    _compare_series(report, gf_o, gf_d)
    _series_equal(report, gf_o, series.single_residue_product(m, c, n, N),
                  "product side")
    gf_on = series.class_generating_function(ClassSpec("O_cm_n", m=m, c=c, n=n),
                                             "ell", N, jobs=jobs)
    gf_ln = series.class_generating_function(ClassSpec("L_cm_n", m=m, c=c, n=n),
                                             "s", N, jobs=jobs)
    _series_equal(report, gf_on, gf_o, "O-side stabilization")
    _series_equal(report, gf_ln, gf_d, "L-side stabilization")


def _check_t13(report, p, jobs):
    m, n, N = p["m"], p["n"], p["max_weight"]
    o_spec = ClassSpec("O_m_falling_n", m=m, n=n)
    l_spec = ClassSpec("L_m_falling_n", m=m, n=n)
    gf_l = series.class_generating_function(l_spec, "s-type", N, jobs=jobs)
    gf_o = series.class_generating_function(o_spec, "l-type", N, jobs=jobs)
    _compare_series(report, gf_l, gf_o)
    contract = BijectionContract("composite_phi_n", o_spec, l_spec,
                                 stat_in="l-type", stat_out="s-type",
                                 inverse_id="composite_inverse")
    sub = VerificationReport(report.theorem, report.params)
    check_contract(sub, contract, {"m": m, "n": n}, N, jobs=jobs)
    if not sub.passed:
        report.fail(sub.counterexample)


def _check_gf4(report, p, jobs):
    m, n, N = p["m"], p["n"], p["max_weight"]
    spec = ClassSpec("O_m_falling_n", m=m, n=n)
    lhs_multi = series.class_generating_function(spec, "l-type", N, jobs=jobs)
    _compare_series(report, lhs_multi, series.gf_falling_rhs(m, n, "multi", N))
    lhs_single = series.class_generating_function(spec, "ell", N, jobs=jobs)
    _series_equal(report, lhs_single, series.gf_falling_rhs(m, n, "single", N),
                  "single-z form")
    for a in range(6):
        for b in range(6):
            if series.gauss_coeffs(a, b) != series.gauss_coeffs_by_quotient(a, b):
                report.fail(f"Gaussian [{a}+{b},{b}]: recurrence != quotient")


def _check_glaisher(report, p, jobs):
    m, N = p["m"], p["max_weight"]
    _compare_series(report, series.glaisher_lhs(m, N), series.glaisher_rhs(m, N))


_CHECKS = {
    "T1.1": _check_t11,
    "T1.2": _check_t12,
    "T1.3": _check_t13,
    "T1.4": _check_t14,
    "T2.3": _check_t23,
    "T3.1": _check_t31,
    "T3.2-limit": _check_t32_limit,
    "GF4": _check_gf4,
    "Glaisher": _check_glaisher,
}


# ---------------------------------------------------------------------------
# worked-example reproduction

TABLE1 = (
    ((8, 8, 7, 7, 7), (15, 12, 10)),
    ((8, 8, 7, 7, 4), (14, 11, 9)),
    ((8, 8, 7, 7, 1), (13, 10, 8)),
    ((8, 8, 7, 4, 4), (12, 9, 8, 1, 1)),
    ((8, 8, 7, 4, 1), (12, 9, 7)),
    ((8, 8, 7, 1, 1), (11, 8, 6)),
    ((8, 8, 4, 4, 4), (11, 8, 7, 1, 1)),
    ((8, 8, 4, 4, 1), (10, 7, 6, 1, 1)),
    ((8, 8, 4, 1, 1), (10, 7, 5)),
    ((8, 8, 1, 1, 1), (9, 6, 4)),
    ((8, 5, 4, 4, 4), (9, 6, 6, 2, 2)),
    ((8, 5, 4, 4, 1), (9, 6, 5, 1, 1)),
    ((8, 5, 4, 1, 1), (8, 5, 4, 1, 1)),
    ((8, 5, 1, 1, 1), (8, 5, 3)),
    ((8, 2, 1, 1, 1), (7, 4, 2)),
    ((5, 5, 4, 4, 4), (8, 5, 5, 2, 2)),
    ((5, 5, 4, 4, 1), (7, 4, 4, 2, 2)),
    ((5, 5, 4, 1, 1), (7, 4, 3, 1, 1)),
    ((5, 5, 1, 1, 1), (6, 3, 2, 1, 1)),
    ((5, 2, 1, 1, 1), (6, 3, 1)),
    ((2, 2, 1, 1, 1), (5, 2)),
)

SK_EXAMPLE_INPUT = (19, 17, 14, 13, 13, 8, 1)
SK_EXAMPLE_BASE = (7, 5, 5, 4, 4, 2, 1)
SK_EXAMPLE_OUTPUT = (11, 10, 9, 9, 8, 8, 6, 5, 5, 4, 4, 2, 2, 1, 1)
PHI5_EXAMPLE_INPUT = (11, 11, 8, 8, 8, 5, 5)
PHI5_EXAMPLE_OUTPUT = (13, 13, 10, 7, 7, 4, 1, 1)
COMPOSITE_EXAMPLE_INPUT = (5, 5, 4, 4, 4)
COMPOSITE_EXAMPLE_OUTPUT = (8, 5, 5, 2, 2)


def reproduce_table1(table=TABLE1) -> VerificationReport:
    """Recompute the 21 golden pairs and cross-check both columns
    against the enumerated type-(3,2) classes of order 3, modulus 3."""
    report = VerificationReport("Table1", {"m": 3, "n": 3, "v": (3, 2)})
    start = time.perf_counter()
    m, n, v = 3, 3, (3, 2)
    for lam, expected in table:
        got = maps.composite_phi_n(lam, m, n)
        report.add_row(sum(lam), 1, 1, got == expected)
        if got != expected:
            report.fail(f"row {lam}: computed {got}, table says {expected}")
    max_w = max(sum(lam) for lam, _ in table)
    left = {lam for lam in classes.enumerate_class(
        ClassSpec("O_m_falling_n", m=m, n=n), max_w)
        if core.length_type(lam, m) == v}
    right = {mu for mu in classes.enumerate_class(
        ClassSpec("L_m_falling_n", m=m, n=n), max_w)
        if core.alt_sum_type(mu, m) == v}
    if left != {lam for lam, _ in table}:
        report.fail(f"left column differs from enumerated class "
                    f"({len(left)} members)")
    if right != {mu for _, mu in table}:
        report.fail(f"right column differs from enumerated class "
                    f"({len(right)} members)")
    report.elapsed = time.perf_counter() - start
    return report


def reproduce_figures() -> VerificationReport:
    """Replay the three worked examples plus the single-step insertion."""
    report = VerificationReport("Figures", {})
    start = time.perf_counter()
    base, _sigma = maps.base_flat(SK_EXAMPLE_INPUT, 3)
    report.add_row(sum(SK_EXAMPLE_INPUT), 1, 1, base == SK_EXAMPLE_BASE)
    if base != SK_EXAMPLE_BASE:
        report.fail(f"base decomposition: {base} != {SK_EXAMPLE_BASE}")
    checks = (
        ("regular-to-distinct example",
         maps.stockhofe_keith(SK_EXAMPLE_INPUT, 3), SK_EXAMPLE_OUTPUT),
        ("order-5 insertion example",
         maps.phi_n(PHI5_EXAMPLE_INPUT, 3, 2, 5), PHI5_EXAMPLE_OUTPUT),
        ("composite example",
         maps.composite_phi_n(COMPOSITE_EXAMPLE_INPUT, 3, 3),
         COMPOSITE_EXAMPLE_OUTPUT),
        ("insertion example", maps.insert_part((3, 3, 2), 2, 3, 2, 5),
         (4, 4, 3, 2, 2, 1)),
    )
    for label, got, expected in checks:
        report.add_row(sum(expected), 1, 1, got == expected)
        if got != expected:
            report.fail(f"{label}: computed {got}, expected {expected}")
    report.elapsed = time.perf_counter() - start
    return report
