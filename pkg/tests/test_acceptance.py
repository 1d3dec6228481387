"""End-to-end acceptance suite.

Each test runs one headline check at full scale and prints a single
pass/fail line (visible with ``pytest -s`` or in failure output).
"""

from lhparts import maps, series, verify
from lhparts.classes import (ClassSpec, enumerate_class, enumerate_partitions,
                             in_flat, is_member)
from lhparts.core import (alt_sum, alt_sum_type, conjugate, length_type,
                          m_length, part, s_m, weight)


def _verdict(label, ok):
    print(f"[acceptance] {label}: {'PASS' if ok else 'FAIL'}")
    assert ok, label


def test_01_table_reproduction():
    report = verify.reproduce_table1()
    _verdict("1 golden 21-row table, both columns",
             report.passed and len(report.rows) == 21)


def test_02_figure_goldens():
    report = verify.reproduce_figures()
    _verdict("2 worked figure examples incl. base decomposition",
             report.passed)


def test_03_lecture_hall_products():
    ok = True
    for n in (1, 2, 3, 4):
        report = verify.check_theorem("T1.1", n=n, max_weight=30)
        ok = ok and report.passed
    _verdict("3 lecture-hall gf = odd-denominator product to q^30", ok)


def test_04_regular_distinct_gf_with_extra_statistic():
    ok = True
    for m in (2, 3, 4):
        ok = ok and verify.check_theorem("T1.2", m=m, max_weight=22).passed
        ok = ok and verify.check_theorem("T1.4", m=m, max_weight=22).passed
    _verdict("4 s-type/l-type gf equality incl. the extra z_m statistic, "
             "weight <= 22", ok)


def test_05_single_residue_bijections():
    ok = True
    for m in (2, 3, 4):
        for c in range(1, m):
            for n in (1, 2, 3, 4):
                report = verify.check_theorem("T3.1", m=m, c=c, n=n,
                                              max_weight=25)
                ok = ok and report.passed
    _verdict("5 single-residue gf equalities + insertion round trips "
             "to q^25", ok)


def test_06_falling_lecture_hall_bijection():
    ok = True
    for m in (2, 3):
        for n in (1, 2, 3):
            report = verify.check_theorem("T1.3", m=m, n=n, max_weight=22)
            ok = ok and report.passed
    _verdict("6 falling lecture-hall gf + composite bijection contract "
             "to q^22", ok)


def test_07_closed_form_generating_functions():
    ok = True
    for m in (3, 4):
        for n in (1, 2, 3):
            report = verify.check_theorem("GF4", m=m, n=n, max_weight=20)
            ok = ok and report.passed
    _verdict("7 closed-form gf (multi- and single-z) + Gaussian oracle "
             "to q^20", ok)


def _conjugation_properties():
    for lam in enumerate_partitions(25):
        mu = conjugate(lam)
        if conjugate(mu) != lam:
            return False
        for m in (2, 3, 4, 5):
            if alt_sum_type(lam, m) != length_type(mu, m):
                return False
            if part(lam, 1) - alt_sum(lam, m) != \
                    len(mu) - m_length(mu, m):
                return False
            if part(lam, 1) != alt_sum(lam, m) + s_m(lam, m):
                return False
        for m in (2, 3, 4):
            in_d = ClassSpec("D_m", m=m)
            in_f = ClassSpec("F_m", m=m)
            if is_member(lam, in_d) != is_member(mu, in_f):
                return False
    return True


def _map_properties():
    for m in (2, 3, 4):
        for lam in enumerate_partitions(22):
            if maps.base_flat(lam, m) != maps.base_flat_largest_first(lam, m):
                return False
        for lam in enumerate_class(ClassSpec("O_m", m=m), 22):
            trace = []
            maps.stockhofe_keith(lam, m, trace=trace)
            # sk_insert itself raises if the raise index is not unique
            for label, state in trace:
                if label.startswith("insert") and not in_flat(state, m):
                    return False
    return True


def _insert_delete_properties():
    for m in (2, 3, 4):
        for c in range(1, m):
            for n in (1, 2, 3, 4):
                spec = ClassSpec("L_cm_n", m=m, c=c, n=n)
                for mu in enumerate_class(spec, 25):
                    source = maps.psi_n(mu, m, c, n)
                    floor = source[-1] if source else None
                    for k in range(n):
                        p = k * m + c
                        if weight(mu) + p > 25:
                            continue
                        if floor is not None and p > floor:
                            continue
                        lam = maps.insert_part(mu, k, m, c, n)
                        if maps.delete_part(lam, m, c, n) != (p, mu):
                            return False
    return True


def _channel_independence():
    for m in (3, 4):
        for n in (1, 2, 3):
            spec = ClassSpec("O_m_falling_n", m=m, n=n)
            for lam in enumerate_class(spec, 22):
                images = {maps.composite_phi_n(lam, m, n, c=c)
                          for c in range(1, m)}
                if len(images) != 1:
                    return False
    return True


def test_08_property_suites():
    ok = (_conjugation_properties() and _map_properties()
          and _insert_delete_properties() and _channel_independence())
    _verdict("8 conjugation/statistic/map property suites, "
             "weight <= 25 (statistics) and <= 22 (maps)", ok)


def test_09_product_identity_and_stabilization():
    ok = True
    for m in (2, 3, 4):
        ok = ok and verify.check_theorem("Glaisher", m=m,
                                         max_weight=25).passed
        n_limit = 20 // m + 1
        gf_n = series.class_generating_function(
            ClassSpec("O_m_falling_n", m=m, n=n_limit), "l-type", 20)
        gf_inf = series.class_generating_function(
            ClassSpec("O_m_falling", m=m), "l-type", 20)
        ok = ok and gf_n == gf_inf
    _verdict("9 product identity to q^25 and gf stabilization at n > N/m",
             ok)
