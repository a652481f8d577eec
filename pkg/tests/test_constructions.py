"""Constructions: explicit families, extension, and member classification."""

from itertools import combinations

import pytest

from signedfam import (
    ForbiddenSpec,
    Profile,
    SignedVector,
    VectorFamily,
    enumerate_all,
    is_shifted,
    scalar_product,
    verify_family,
)
from signedfam import constructions, formulas
from signedfam.constructions import classify_vector


def v(text):
    return SignedVector.parse(text)


class TestEkrFamily:
    def test_size_and_shape(self):
        fam = constructions.ekr_family(Profile(4, 2, 1))
        assert len(fam) == 6
        assert len(fam) == formulas.g_ekr_value(4, 2, 1).value
        for member in fam:
            assert member.pos & 1  # +1 at coordinate 1

    def test_shifted_and_avoiding(self):
        fam = constructions.ekr_family(Profile(5, 2, 1))
        assert is_shifted(fam)
        report = verify_family(fam, ForbiddenSpec.exact({-2}))
        assert report.ok

    def test_avoids_floor_at_larger_profile(self):
        fam = constructions.ekr_family(Profile(6, 3, 2))
        assert len(fam) == 30
        assert verify_family(fam, ForbiddenSpec.exact({-4})).ok

    def test_requires_a_plus(self):
        with pytest.raises(ValueError):
            constructions.ekr_family(Profile(4, 0, 2))


class TestInductiveExtend:
    def test_grows_by_increment_count(self):
        base = constructions.ekr_family(Profile(4, 2, 1))
        grown = constructions.inductive_extend(base)
        assert grown.profile == Profile(5, 2, 1)
        assert len(grown) == 12
        assert len(grown) - len(base) == formulas.increment_value(4, 2, 1).value

    def test_result_still_avoids_floor(self):
        base = constructions.ekr_family(Profile(5, 3, 2))
        grown = constructions.inductive_extend(base)
        assert verify_family(grown, ForbiddenSpec.exact({-4})).ok

    def test_double_extension_hits_known_extremum(self):
        fam = constructions.ekr_family(Profile(4, 2, 1))
        for _ in range(2):
            fam = constructions.inductive_extend(fam)
        assert fam.profile.n == 6
        assert len(fam) == 22  # matches the closed form at (6, 2, 1)
        assert len(fam) == formulas.g_closed_l1(6, 2)

    def test_rejects_violating_input(self):
        p = Profile(4, 2, 1)
        bad = VectorFamily(p, [v("++-0"), v("-0++")])
        with pytest.raises(ValueError, match="minimum product"):
            constructions.inductive_extend(bad)
        # the check can be waived
        constructions.inductive_extend(bad, check=False)

    def test_requires_a_minus(self):
        fam = VectorFamily(Profile(3, 2, 0), [v("++0")])
        with pytest.raises(ValueError):
            constructions.inductive_extend(fam)


class TestSplitFamily:
    def test_explicit_small_case(self):
        fam = constructions.split_family(Profile(4, 2, 1), [1, 2, 3])
        assert {str(m) for m in fam} == {"++0-", "+0+-", "0++-"}

    def test_products_never_negative(self):
        fam = constructions.split_family(Profile(6, 2, 2), [1, 2, 4])
        assert verify_family(fam, ForbiddenSpec.all_below(0)).ok

    def test_best_cut_size_matches_split_count(self):
        n, k, l = 7, 2, 1
        value, x = formulas.p_split(n, k, l)
        fam = constructions.split_family(Profile(n, k, l), range(1, x + 1))
        assert len(fam) == value

    def test_side_too_small(self):
        with pytest.raises(ValueError, match="at least k"):
            constructions.split_family(Profile(5, 3, 1), [1, 2])
        with pytest.raises(ValueError, match="at least l"):
            constructions.split_family(Profile(5, 3, 2), [1, 2, 3, 4])

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            constructions.split_family(Profile(4, 2, 1), [0, 1, 2])


class TestPartitionByLast:
    def test_full_class_split(self):
        p = Profile(3, 1, 1)
        minus, zero, plus = constructions.partition_by_last(
            VectorFamily(p, list(enumerate_all(p)))
        )
        assert (len(minus), len(zero), len(plus)) == (2, 2, 2)
        for m in minus:
            assert m.last == -1
        for z in zero:
            assert z.last == 0
        for q in plus:
            assert q.last == 1

    def test_parts_cover_input(self):
        fam = constructions.ekr_family(Profile(5, 2, 1))
        parts = constructions.partition_by_last(fam)
        assert sum(len(part) for part in parts) == len(fam)


class TestFamilyXYtm:
    def test_frozen_sizes(self):
        p = Profile(8, 2, 1)
        assert len(constructions.family_xy_tm(p, 1, 0, "x")) == 15
        assert len(constructions.family_xy_tm(p, 1, 0, "y")) == 6

    def test_balanced_case(self):
        p = Profile(9, 3, 2)
        assert len(constructions.family_xy_tm(p, 2, 0, "x")) == 30
        assert len(constructions.family_xy_tm(p, 2, 0, "y")) == 30

    def test_sizes_match_closed_form(self):
        # ambient dimension is n + 1 in the closed form
        for n, k, l, t, m in [(7, 2, 1, 1, 0), (8, 3, 2, 2, 0), (9, 3, 1, 2, 1)]:
            p = Profile(n + 1, k, l)
            x_size, y_size = formulas.xy_family_sizes(n, k, l, t, m)
            assert len(constructions.family_xy_tm(p, t, m, "x")) == x_size
            assert len(constructions.family_xy_tm(p, t, m, "y")) == y_size

    def test_members_match_string_filter(self):
        # independent re-derivation straight off the sign strings
        p = Profile(6, 2, 1)
        t, m = 2, 0
        want = set()
        for u in enumerate_all(p):
            s = str(u)
            window = s[: 2 * t - 1]
            if s[-1] == "+" and window.count("-") == m and window.count("+") == t:
                want.add(u)
        got = set(constructions.family_xy_tm(p, t, m, "y"))
        assert got == want

    def test_window_cannot_reach_last_coordinate(self):
        with pytest.raises(ValueError, match="final coordinate"):
            constructions.family_xy_tm(Profile(5, 3, 1), 3, 0, "x")

    def test_bad_side(self):
        with pytest.raises(ValueError, match="side"):
            constructions.family_xy_tm(Profile(6, 2, 1), 1, 0, "z")


class TestClassifyVector:
    def test_b1_immediate_window(self):
        label = classify_vector(v("++--+"))
        assert label.kind == "B1"
        assert (label.t, label.m) == (1, 0)
        assert label.in_b1_prime
        assert label.markers == (3, 2)

    def test_b1_zero_gap(self):
        label = classify_vector(v("+-0-+"))
        assert (label.kind, label.t, label.m) == ("B1", 1, 0)

    def test_b1_wider_window_inside_prime(self):
        # t = 2 <= k - l keeps it in the restricted class despite m = 1
        label = classify_vector(v("-++000+"))
        assert (label.kind, label.t, label.m) == ("B1", 2, 1)
        assert label.in_b1_prime
        assert label.markers is None

    def test_b1_outside_prime(self):
        label = classify_vector(v("-++-00+"))
        assert (label.kind, label.t, label.m) == ("B1", 2, 1)
        assert not label.in_b1_prime

    def test_b2_cases(self):
        label = classify_vector(v("0+0+--+"))
        assert label.kind == "B2"
        assert (label.j, label.jprime) == (2, 5)
        assert label.cond12
        label = classify_vector(v("00--+"))
        assert (label.kind, label.j, label.jprime) == ("B2", 2, 3)

    def test_unclassified(self):
        assert classify_vector(v("-+")).kind == "unclassified"

    def test_requires_plus_last(self):
        with pytest.raises(ValueError):
            classify_vector(v("+-0"))
        with pytest.raises(ValueError):
            classify_vector(v("+-"))

    def test_b1_and_b2_are_exclusive(self):
        # every plus-final vector gets exactly one kind
        for u in enumerate_all(Profile(6, 2, 2)):
            if u.last != 1:
                continue
            label = classify_vector(u)
            if label.kind == "B1":
                assert label.j is None
            elif label.kind == "B2":
                assert label.t is None

    def test_b1_window_is_minimal(self):
        # no smaller window already holds its index count of pluses
        for u in enumerate_all(Profile(7, 3, 1)):
            if u.last != 1:
                continue
            label = classify_vector(u)
            if label.kind != "B1":
                continue
            s = str(u)
            for smaller in range(1, label.t):
                assert s[: 2 * smaller - 1].count("+") != smaller


class TestClassAgainstWindowFamilies:
    def test_b1_members_populate_y_classes(self):
        # B1 vectors with window stats (t, m) are exactly the plus-final
        # window class members of the same stats
        p = Profile(7, 2, 1)
        for t, m in [(1, 0), (2, 0), (2, 1)]:
            y_fam = set(constructions.family_xy_tm(p, t, m, "y"))
            b1 = {
                u
                for u in enumerate_all(p)
                if u.last == 1
                and (lambda lab: lab.kind == "B1" and (lab.t, lab.m) == (t, m))(
                    classify_vector(u)
                )
            }
            # classification pins m inside [1, t]; the window class counts
            # minuses over all of [1, 2t-1], so B1 refines the class
            assert b1 <= y_fam or t == 1
            if t == 1:
                assert b1 == y_fam
