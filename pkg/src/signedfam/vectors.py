"""Signed vectors with entries in {0, +1, -1} and fixed support sizes.

A vector of profile ``(n, k, l)`` has dimension ``n``, exactly ``k``
coordinates equal to +1 and exactly ``l`` coordinates equal to -1.
Coordinates are 1-indexed.  Vectors are stored as a pair of bit masks
(bit ``i-1`` of ``pos``/``neg`` holds coordinate ``i``), are immutable
and hashable, and families keep their members deduplicated in a
deterministic canonical order: ascending on the ``(pos, neg)`` mask pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Optional

_DIM_CAP = 128


def dimension_cap() -> int:
    """Current maximum allowed vector dimension."""
    return _DIM_CAP


def set_dimension_cap(cap: int) -> None:
    """Raise or lower the maximum allowed vector dimension (default 128)."""
    global _DIM_CAP
    if not isinstance(cap, int) or cap < 1:
        raise ValueError(f"dimension cap must be a positive integer, got {cap!r}")
    _DIM_CAP = cap


def _mask_of(indices: Iterable[int], dim: int) -> int:
    mask = 0
    for i in indices:
        if not 1 <= i <= dim:
            raise ValueError(f"index {i} out of range [1, {dim}]")
        mask |= 1 << (i - 1)
    return mask


def _indices_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Profile:
    """Vector class parameters: dimension n, k plus-coordinates, l minus-coordinates."""

    n: int
    k: int
    l: int

    def __post_init__(self) -> None:
        for name, val in (("n", self.n), ("k", self.k), ("l", self.l)):
            if not isinstance(val, int):
                raise ValueError(f"profile field {name} must be an integer, got {val!r}")
        if self.k < 1:
            raise ValueError(f"profile requires k >= 1, got k={self.k}")
        if self.l < 0:
            raise ValueError(f"profile requires l >= 0, got l={self.l}")
        if self.n < self.k + self.l:
            raise ValueError(
                f"profile requires n >= k + l, got n={self.n}, k+l={self.k + self.l}"
            )
        if self.n > _DIM_CAP:
            raise ValueError(f"dimension {self.n} exceeds cap {_DIM_CAP}")

    @property
    def weight(self) -> int:
        """Support size k + l."""
        return self.k + self.l

    @property
    def is_g_profile(self) -> bool:
        """True when the minimum-product avoidance problem applies: k > l >= 1."""
        return self.k > self.l >= 1

    def family_size(self) -> int:
        """Number of vectors in the class: C(n, k+l) * C(k+l, k)."""
        from math import comb

        return comb(self.n, self.k + self.l) * comb(self.k + self.l, self.k)


@dataclass(frozen=True)
class SignedVector:
    """One {0,+1,-1} vector: dimension plus disjoint plus/minus index masks."""

    dim: int
    pos: int
    neg: int

    def __post_init__(self) -> None:
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.dim!r}")
        if self.dim > _DIM_CAP:
            raise ValueError(f"dimension {self.dim} exceeds cap {_DIM_CAP}")
        full = (1 << self.dim) - 1
        if not 0 <= self.pos <= full or not 0 <= self.neg <= full:
            raise ValueError("support mask out of range for dimension")
        if self.pos & self.neg:
            raise ValueError("plus and minus supports overlap")

    @classmethod
    def from_supports(
        cls, dim: int, pos: Iterable[int], neg: Iterable[int]
    ) -> "SignedVector":
        """Build a vector from 1-indexed plus and minus index collections."""
        return cls(dim, _mask_of(pos, dim), _mask_of(neg, dim))

    @classmethod
    def parse(cls, text: str) -> "SignedVector":
        """Parse a string over {+, -, 0}; position in the string is the coordinate."""
        text = text.strip()
        if not text:
            raise ValueError("empty vector string")
        pos = neg = 0
        for i, ch in enumerate(text):
            if ch == "+":
                pos |= 1 << i
            elif ch == "-":
                neg |= 1 << i
            elif ch != "0":
                raise ValueError(f"invalid character {ch!r} at position {i + 1}")
        return cls(len(text), pos, neg)

    @property
    def k(self) -> int:
        return self.pos.bit_count()

    @property
    def l(self) -> int:
        return self.neg.bit_count()

    def value_at(self, i: int) -> int:
        """Coordinate value at 1-indexed position i."""
        if not 1 <= i <= self.dim:
            raise ValueError(f"index {i} out of range [1, {self.dim}]")
        bit = 1 << (i - 1)
        if self.pos & bit:
            return 1
        if self.neg & bit:
            return -1
        return 0

    def values(self) -> tuple[int, ...]:
        return tuple(self.value_at(i) for i in range(1, self.dim + 1))

    def pos_support(self) -> tuple[int, ...]:
        """Ascending 1-indexed positions of +1 coordinates."""
        return _indices_of(self.pos)

    def neg_support(self) -> tuple[int, ...]:
        """Ascending 1-indexed positions of -1 coordinates."""
        return _indices_of(self.neg)

    def support(self) -> tuple[int, ...]:
        """Ascending 1-indexed positions of nonzero coordinates."""
        return _indices_of(self.pos | self.neg)

    def format(self) -> str:
        chars = []
        for i in range(self.dim):
            bit = 1 << i
            chars.append("+" if self.pos & bit else "-" if self.neg & bit else "0")
        return "".join(chars)

    def __str__(self) -> str:
        return self.format()

    def restrict(self, a: int, b: int) -> "SignedVector":
        """Restriction to the window [a, b], reindexed to [1, b-a+1]."""
        if not (1 <= a <= b <= self.dim):
            raise ValueError(f"invalid window [{a}, {b}] for dimension {self.dim}")
        width = b - a + 1
        window = ((1 << width) - 1) << (a - 1)
        return SignedVector(width, (self.pos & window) >> (a - 1), (self.neg & window) >> (a - 1))

    def negate(self) -> "SignedVector":
        """Swap the roles of +1 and -1."""
        return SignedVector(self.dim, self.neg, self.pos)

    @property
    def last(self) -> int:
        """Value of the final coordinate."""
        return self.value_at(self.dim)

    @property
    def canonical_key(self) -> tuple[int, int]:
        return (self.pos, self.neg)


class SuffixMarkers(NamedTuple):
    """Largest start index whose suffix sums to -1, and the count of -1s from there on."""

    index: int
    neg_count: int


def scalar_product(v: SignedVector, w: SignedVector) -> int:
    """Standard scalar product; computed from the four support intersections."""
    if v.dim != w.dim:
        raise ValueError(f"dimension mismatch: {v.dim} vs {w.dim}")
    return (
        (v.pos & w.pos).bit_count()
        + (v.neg & w.neg).bit_count()
        - (v.pos & w.neg).bit_count()
        - (v.neg & w.pos).bit_count()
    )


def min_suffix_sum(v: SignedVector) -> int:
    """Minimum over i in [1, dim] of the coordinate sum over [i, dim].

    The empty suffix is excluded, so the result is at most the full
    coordinate sum k - l and can be negative.
    """
    running = 0
    best = None
    for i in range(v.dim, 0, -1):
        running += v.value_at(i)
        if best is None or running < best:
            best = running
    assert best is not None
    return best


def suffix_markers(v: SignedVector) -> Optional[SuffixMarkers]:
    """Locate the largest i whose suffix [i, dim] sums to exactly -1.

    Returns None when no suffix sums to -1.  A marker is guaranteed to
    exist whenever min_suffix_sum(v) <= -1, because consecutive suffix
    sums differ by at most 1.
    """
    running = 0
    for i in range(v.dim, 0, -1):
        running += v.value_at(i)
        if running == -1:
            shifted = v.neg >> (i - 1)
            return SuffixMarkers(i, shifted.bit_count())
    return None


class VectorFamily:
    """Immutable, deduplicated, canonically ordered set of same-profile vectors."""

    __slots__ = ("profile", "members", "_member_set")

    def __init__(self, profile: Profile, members: Iterable[SignedVector] = ()):
        dedup = set(members)
        for v in dedup:
            if v.dim != profile.n or v.k != profile.k or v.l != profile.l:
                raise ValueError(
                    f"vector {v} does not match profile "
                    f"(n={profile.n}, k={profile.k}, l={profile.l})"
                )
        object.__setattr__(self, "profile", profile)
        object.__setattr__(
            self, "members", tuple(sorted(dedup, key=lambda v: v.canonical_key))
        )
        object.__setattr__(self, "_member_set", frozenset(dedup))

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("VectorFamily is immutable")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[SignedVector]:
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self._member_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VectorFamily):
            return NotImplemented
        return self.profile == other.profile and self._member_set == other._member_set

    def __hash__(self) -> int:
        return hash((self.profile, self._member_set))

    def __repr__(self) -> str:
        p = self.profile
        return f"VectorFamily(n={p.n}, k={p.k}, l={p.l}, size={len(self)})"

    def member_set(self) -> frozenset:
        return self._member_set

    def to_text(self) -> str:
        """Family file format: header line 'n k l', then one vector per line."""
        p = self.profile
        lines = [f"{p.n} {p.k} {p.l}"]
        lines.extend(v.format() for v in self.members)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "VectorFamily":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty family file")
        header = lines[0].split()
        if len(header) != 3:
            raise ValueError(f"malformed header line {lines[0]!r}; expected 'n k l'")
        try:
            n, k, l = (int(tok) for tok in header)
        except ValueError:
            raise ValueError(f"malformed header line {lines[0]!r}; expected integers") from None
        profile = Profile(n, k, l)
        members = []
        for ln in lines[1:]:
            v = SignedVector.parse(ln)
            if v.dim != n:
                raise ValueError(f"vector {ln!r} has dimension {v.dim}, expected {n}")
            members.append(v)
        return cls(profile, members)

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.to_text())

    @classmethod
    def load(cls, path: str) -> "VectorFamily":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_text(fh.read())


def enumerate_all(profile: Profile) -> VectorFamily:
    """Every vector of the profile, in canonical order.

    The count always equals C(n, k+l) * C(k+l, k).
    """
    n, k, l = profile.n, profile.k, profile.l
    members = []
    for support in combinations(range(n), k + l):
        support_mask = 0
        for i in support:
            support_mask |= 1 << i
        for plus in combinations(support, k):
            pos = 0
            for i in plus:
                pos |= 1 << i
            members.append(SignedVector(n, pos, support_mask & ~pos))
    return VectorFamily(profile, members)
