import pytest

from lhparts import classes
from lhparts.classes import (ClassSpec, count_by_weight, enumerate_class,
                             enumerate_partitions, in_flat, is_member,
                             partitions_of)
from lhparts.errors import BadSpec


def partition_counts_oracle(limit):
    """p(0..limit) via the pentagonal-number recurrence."""
    p = [1] + [0] * limit
    for n in range(1, limit + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = -1 if k % 2 == 0 else 1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


class TestEnumeration:
    def test_counts_match_pentagonal_recurrence(self):
        oracle = partition_counts_oracle(30)
        for w in range(31):
            assert sum(1 for _ in partitions_of(w)) == oracle[w]

    def test_partitions_of_ten(self):
        assert sum(1 for _ in partitions_of(10)) == 42

    def test_max_part_bound(self):
        got = sorted(partitions_of(5, max_part=2))
        assert got == [(1, 1, 1, 1, 1), (2, 1, 1, 1), (2, 2, 1)]

    def test_no_duplicates_and_valid(self):
        seen = set(enumerate_partitions(14))
        assert len(seen) == sum(partition_counts_oracle(14))
        for lam in seen:
            assert all(a >= b for a, b in zip(lam, lam[1:]))


class TestSpecValidation:
    def test_bad_kind(self):
        with pytest.raises(BadSpec):
            ClassSpec("X_m", m=3).validate()

    def test_missing_c(self):
        with pytest.raises(BadSpec):
            ClassSpec("O_cm", m=3).validate()

    def test_c_out_of_range(self):
        with pytest.raises(BadSpec):
            ClassSpec("O_cm", m=3, c=3).validate()

    def test_missing_n(self):
        with pytest.raises(BadSpec):
            ClassSpec("L_cm_n", m=3, c=1).validate()

    def test_describe_mentions_parameters(self):
        text = ClassSpec("O_cm_n", m=3, c=2, n=4).describe()
        assert "3" in text and "2" in text and "4" in text


class TestMembership:
    def test_distinct_vs_regular_counts_agree(self):
        # classic equinumerosity: parts repeated < m times vs no multiples of m
        for m in (2, 3, 4):
            d = count_by_weight(ClassSpec("D_m", m=m), 20)
            o = count_by_weight(ClassSpec("O_m", m=m), 20)
            assert d == o

    def test_flat_last_part_bounded(self):
        assert in_flat((4, 2, 2), 3)
        assert not in_flat((4, 2, 2), 2)
        assert not in_flat((5, 2, 2), 3)  # last gap fine, first gap is 3
        assert not in_flat((2, 2, 2, 2), 2)  # last part must stay below m

    def test_flat_conjugate_of_distinct(self):
        from lhparts.core import conjugate
        for m in (2, 3, 4):
            for lam in enumerate_partitions(18):
                assert is_member(conjugate(lam), ClassSpec("F_m", m=m)) == \
                    is_member(lam, ClassSpec("D_m", m=m))

    def test_falling_regular(self):
        spec = ClassSpec("O_m_falling", m=3)
        assert is_member((8, 5, 5, 2, 2), spec)
        assert is_member((), spec)
        assert not is_member((7, 5), spec)  # residues 1 then 2 rise
        assert not is_member((6, 5), spec)  # contains a multiple of 3

    def test_single_residue(self):
        spec = ClassSpec("O_cm", m=3, c=2)
        assert is_member((8, 5, 5, 2, 2), spec)
        assert not is_member((8, 5, 5, 2, 1), spec)
        tall = ClassSpec("O_cm_n", m=3, c=2, n=2)
        assert is_member((5, 2), tall)
        assert not is_member((8, 5), tall)  # largest part must stay under nm

    def test_d_cm_is_sliced_dm(self):
        from lhparts.core import alt_sum_type
        spec = ClassSpec("D_cm", m=3, c=2)
        want = [lam for lam in enumerate_class(ClassSpec("D_m", m=3), 15)
                if not lam or alt_sum_type(lam, 3) in
                {(0, s) for s in range(1, 16)}]
        got = list(enumerate_class(spec, 15))
        assert sorted(got) == sorted(want)

    def test_lecture_hall(self):
        spec = ClassSpec("lecture_hall_n", m=2, n=3)
        assert is_member((6, 4, 2), spec)
        assert is_member((3, 2), spec)  # 3/3 >= 2/2 >= 0/1
        assert not is_member((2, 2), spec)  # 2/3 < 2/2

    def test_lecture_hall_counts_small(self):
        # brute force: order 2 admits exactly the pairs a >= 2b >= 0
        spec = ClassSpec("lecture_hall_n", m=2, n=2)
        for w in range(1, 13):
            brute = sum(1 for b in range(w + 1)
                        if w - b >= 2 * b >= 0)
            got = sum(1 for lam in partitions_of(w)
                      if is_member(lam, spec))
            assert got == brute

    def test_l_cmn_examples(self):
        spec = ClassSpec("L_cm_n", m=3, c=2, n=3)
        assert is_member((5, 5, 2), spec)
        assert is_member((), spec)
        long_spec = ClassSpec("L_cm_n", m=3, c=2, n=1)
        assert not is_member((5, 5, 2), long_spec)  # length cap is 2

    def test_l_falling_examples(self):
        spec = ClassSpec("L_m_falling_n", m=3, n=3)
        assert is_member((8, 5, 5, 2, 2), spec)
        assert is_member((7, 5, 4, 2, 2), spec)


class TestDirectEnumeration:
    def test_direct_matches_filter(self):
        for m in (2, 3, 4):
            for c in range(1, m):
                for n in (None, 1, 2, 3):
                    kind = "O_cm" if n is None else "O_cm_n"
                    spec = ClassSpec(kind, m=m, c=c, n=n)
                    direct = sorted(enumerate_class(spec, 20, method="direct"))
                    filt = sorted(enumerate_class(spec, 20, method="filter"))
                    assert direct == filt

    def test_count_by_weight_shape(self):
        counts = count_by_weight(ClassSpec("ALL", m=1), 6)
        assert counts == [1, 1, 2, 3, 5, 7, 11]
