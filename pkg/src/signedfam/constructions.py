"""Explicit extremal-family constructions and the member classification.

Constructions: the fixed-first-coordinate family, the one-dimension
inductive extension, and one-cut split families.  Classification sorts
the plus-final members of a family into the two structure classes that
exhaust any shifted family avoiding the minimum product.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal, Optional

from .vectors import (
    Profile,
    SignedVector,
    SuffixMarkers,
    VectorFamily,
    enumerate_all,
    min_suffix_sum,
    scalar_product,
    suffix_markers,
)


def ekr_family(profile: Profile) -> VectorFamily:
    """All vectors with +1 at coordinate 1: size C(n-1, k+l-1) * C(k+l-1, l).

    No two members reach the minimum product -2l since their plus
    supports share coordinate 1.
    """
    n, k, l = profile.n, profile.k, profile.l
    if k < 1:
        raise ValueError("construction requires k >= 1")
    members = []
    for support in combinations(range(1, n), k + l - 1):
        support_mask = 1  # coordinate 1
        for i in support:
            support_mask |= 1 << i
        for minus in combinations(support, l):
            neg = 0
            for i in minus:
                neg |= 1 << i
            members.append(SignedVector(n, support_mask & ~neg, neg))
    return VectorFamily(profile, members)


def _min_product_ok(fam: VectorFamily) -> tuple[bool, Optional[tuple]]:
    """Check that no pair of members reaches the minimum product -2l."""
    floor = -2 * fam.profile.l
    members = fam.members
    for a in range(len(members)):
        va = members[a]
        for b in range(a + 1, len(members)):
            if scalar_product(va, members[b]) == floor:
                return False, (va, members[b])
    return True, None


def inductive_extend(fam: VectorFamily, check: bool = True) -> VectorFamily:
    """Extend an avoiding family over n to one over n + 1.

    Appends a zero coordinate to each member and adds every (n+1)-vector
    whose final coordinate is -1.  The added group is pairwise safe (two
    final -1s contribute +1 to the product) and safe against the lifted
    members (the final coordinate contributes 0), so the result again
    avoids -2l.  The growth count is C(n, k+l-1) * C(k+l-1, l-1).
    """
    p = fam.profile
    if p.l < 1:
        raise ValueError("extension requires l >= 1")
    if check:
        ok, pair = _min_product_ok(fam)
        if not ok:
            raise ValueError(
                f"input family reaches the minimum product on pair {pair[0]}, {pair[1]}"
            )
    new_profile = Profile(p.n + 1, p.k, p.l)
    members = [SignedVector(p.n + 1, v.pos, v.neg) for v in fam]
    last_bit = 1 << p.n
    for support in combinations(range(p.n), p.k + p.l - 1):
        support_mask = 0
        for i in support:
            support_mask |= 1 << i
        for minus in combinations(support, p.l - 1):
            minus_mask = 0
            for i in minus:
                minus_mask |= 1 << i
            members.append(
                SignedVector(p.n + 1, support_mask & ~minus_mask, minus_mask | last_bit)
            )
    return VectorFamily(new_profile, members)


def split_family(profile: Profile, plus_side: Iterable[int]) -> VectorFamily:
    """All vectors with plus support inside plus_side and minus support outside.

    Any two members have nonnegative product.  Size C(|X|, k) * C(n-|X|, l);
    maximized over |X| by the split count p(n, k, l).
    """
    n, k, l = profile.n, profile.k, profile.l
    x = sorted(set(plus_side))
    for i in x:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range [1, {n}]")
    if len(x) < k:
        raise ValueError(f"plus side has {len(x)} coordinates; needs at least k={k}")
    y = [i for i in range(1, n + 1) if i not in set(x)]
    if len(y) < l:
        raise ValueError(f"minus side has {len(y)} coordinates; needs at least l={l}")
    members = []
    for plus in combinations(x, k):
        pos = 0
        for i in plus:
            pos |= 1 << (i - 1)
        for minus in combinations(y, l):
            neg = 0
            for i in minus:
                neg |= 1 << (i - 1)
            members.append(SignedVector(n, pos, neg))
    return VectorFamily(profile, members)


def partition_by_last(fam: VectorFamily) -> tuple[VectorFamily, VectorFamily, VectorFamily]:
    """Split a family by the final coordinate: (minus, zero, plus) classes."""
    minus, zero, plus = [], [], []
    for v in fam:
        (minus if v.last == -1 else zero if v.last == 0 else plus).append(v)
    p = fam.profile
    return (
        VectorFamily(p, minus),
        VectorFamily(p, zero),
        VectorFamily(p, plus),
    )


def family_xy_tm(profile: Profile, t: int, m: int, side: Literal["x", "y"]) -> VectorFamily:
    """Window-comparison class over the profile's own dimension.

    The window is [1, 2t-1].  Side "y": final coordinate +1, m minus and
    t plus coordinates in the window.  Side "x": final coordinate -1,
    m plus and max(t - (k - l), 0) minus coordinates in the window.
    """
    n, k, l = profile.n, profile.k, profile.l
    if not 1 <= t <= k:
        raise ValueError(f"requires 1 <= t <= k, got t={t}")
    if m < 0:
        raise ValueError(f"requires m >= 0, got m={m}")
    # the window must avoid the fixed final coordinate
    if 2 * t - 1 > n - 1:
        raise ValueError(f"window [1, {2 * t - 1}] reaches the final coordinate {n}")
    window = (1 << (2 * t - 1)) - 1
    mu = max(t - (k - l), 0)
    members = []
    for v in enumerate_all(profile):
        if side == "y":
            if (
                v.last == 1
                and (v.neg & window).bit_count() == m
                and (v.pos & window).bit_count() == t
            ):
                members.append(v)
        elif side == "x":
            if (
                v.last == -1
                and (v.pos & window).bit_count() == m
                and (v.neg & window).bit_count() == mu
            ):
                members.append(v)
        else:
            raise ValueError(f"side must be 'x' or 'y', got {side!r}")
    return VectorFamily(profile, members)


@dataclass(frozen=True)
class ClassificationLabel:
    """Structure class of one plus-final vector.

    kind "B1" carries (t, m): the smallest window count t with exactly t
    plus coordinates in [1, 2t-1], and the number m of minus coordinates
    in [1, t].  kind "B2" carries (j, jprime) = (count of -1s from the
    marker on, marker index) from the suffix markers.  kind
    "unclassified" is legal only for vectors outside shifted avoiding
    families.  markers are reported whenever they exist, for either kind.
    in_b1_prime flags B1 labels with t <= k - l or m = 0; cond12 flags B2
    labels satisfying jprime - 1 >= 2(k - j + 1).
    """

    kind: Literal["B1", "B2", "unclassified"]
    last_class: Literal["+", "0", "-"]
    t: Optional[int] = None
    m: Optional[int] = None
    j: Optional[int] = None
    jprime: Optional[int] = None
    markers: Optional[SuffixMarkers] = None
    in_b1_prime: bool = False
    cond12: Optional[bool] = None


def classify_vector(v: SignedVector) -> ClassificationLabel:
    """Assign the structure class of a vector whose final coordinate is +1."""
    if v.last != 1:
        raise ValueError(f"classification requires final coordinate +1, got {v}")
    k, l = v.k, v.l
    markers = suffix_markers(v)

    t_found = None
    count = 0
    t = 1
    while 2 * t - 1 <= v.dim:
        lo = 2 * t - 3 if t > 1 else 0
        for idx in range(lo, 2 * t - 1):
            if v.pos & (1 << idx):
                count += 1
        if count == t:
            t_found = t
            break
        t += 1

    if t_found is not None:
        prefix = (1 << t_found) - 1
        m = (v.neg & prefix).bit_count()
        return ClassificationLabel(
            kind="B1",
            last_class="+",
            t=t_found,
            m=m,
            markers=markers,
            in_b1_prime=t_found <= k - l or m == 0,
        )

    if min_suffix_sum(v) <= -1:
        assert markers is not None
        jprime = markers.index
        j = markers.neg_count
        return ClassificationLabel(
            kind="B2",
            last_class="+",
            j=j,
            jprime=jprime,
            markers=markers,
            cond12=jprime - 1 >= 2 * (k - j + 1),
        )

    return ClassificationLabel(kind="unclassified", last_class="+", markers=markers)
