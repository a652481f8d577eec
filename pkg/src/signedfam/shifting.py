"""Coordinate shifts, the induced partial order, and family compression.

An (i <- j)-shift with i < j replaces coordinates (v_i, v_j) by
(max(v_i, v_j), min(v_i, v_j)): the larger value moves to the smaller
index.  Vector v precedes vector w when v is reachable from w by a
sequence of shifts.  A family is shifted when it is closed under every
single shift of every member, which is equivalent to closure under the
full reachability order.
"""

from __future__ import annotations

from typing import NamedTuple

from .vectors import Profile, SignedVector, VectorFamily

_ORACLE_DIM_CAP = 8


class ShiftMove(NamedTuple):
    """An ordered coordinate pair i < j naming one shift."""

    i: int
    j: int


def all_moves(dim: int) -> tuple[ShiftMove, ...]:
    """All moves for a dimension, in lexicographic order."""
    return tuple(
        ShiftMove(i, j) for i in range(1, dim + 1) for j in range(i + 1, dim + 1)
    )


def shift_ij(v: SignedVector, move: ShiftMove) -> SignedVector:
    """Apply one (i <- j)-shift; returns v itself when already sorted."""
    i, j = move
    if not (1 <= i < j <= v.dim):
        raise ValueError(f"invalid move ({i}, {j}) for dimension {v.dim}")
    a = v.value_at(i)
    b = v.value_at(j)
    if a >= b:
        return v
    bit_i = 1 << (i - 1)
    bit_j = 1 << (j - 1)
    pos = v.pos & ~(bit_i | bit_j)
    neg = v.neg & ~(bit_i | bit_j)
    # after the shift, coordinate i holds b and coordinate j holds a
    if b == 1:
        pos |= bit_i
    elif b == -1:
        neg |= bit_i
    if a == 1:
        pos |= bit_j
    elif a == -1:
        neg |= bit_j
    return SignedVector(v.dim, pos, neg)


def precedes(v: SignedVector, w: SignedVector) -> bool:
    """Fast reachability test: is v obtainable from w by shifts?

    Characterization used: the coordinate multisets agree, and for every
    prefix [1, p] and both thresholds c in {0, 1} the count of
    coordinates >= c in v dominates the count in w.  Validated against
    the breadth-first oracle.
    """
    if v.dim != w.dim:
        raise ValueError(f"dimension mismatch: {v.dim} vs {w.dim}")
    if v.k != w.k or v.l != w.l:
        return False
    plus_v = plus_w = nonneg_v = nonneg_w = 0
    for p in range(1, v.dim + 1):
        bit = 1 << (p - 1)
        if v.pos & bit:
            plus_v += 1
        if w.pos & bit:
            plus_w += 1
        if not v.neg & bit:
            nonneg_v += 1
        if not w.neg & bit:
            nonneg_w += 1
        if plus_v < plus_w or nonneg_v < nonneg_w:
            return False
    return True


def precedes_oracle(v: SignedVector, w: SignedVector) -> bool:
    """Ground-truth reachability by breadth-first search over shift images.

    Exhaustive and slow; guarded to dimension <= 8.
    """
    if v.dim != w.dim:
        raise ValueError(f"dimension mismatch: {v.dim} vs {w.dim}")
    if v.dim > _ORACLE_DIM_CAP:
        raise ValueError(f"oracle limited to dimension {_ORACLE_DIM_CAP}, got {v.dim}")
    if v == w:
        return True
    moves = all_moves(w.dim)
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            for move in moves:
                img = shift_ij(u, move)
                if img not in seen:
                    if img == v:
                        return True
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return False


def is_shifted(fam: VectorFamily) -> bool:
    """True when every single-shift image of every member is itself a member."""
    members = fam.member_set()
    moves = all_moves(fam.profile.n)
    for v in fam:
        for move in moves:
            if shift_ij(v, move) not in members:
                return False
    return True


def compress(fam: VectorFamily) -> VectorFamily:
    """Shift the whole family to a fixpoint; preserves cardinality.

    One pass for a move (i, j) replaces each member by its shift image
    unless the image is already present.  Moves are scanned in
    lexicographic order and the scan restarts after any change.
    Termination: each applied replacement moves a strictly larger value
    to a strictly smaller index, so the potential
    sum_v sum_i i * (v_i + 1) strictly decreases and is bounded below.
    """
    members = set(fam.member_set())
    moves = all_moves(fam.profile.n)
    changed = True
    while changed:
        changed = False
        for move in moves:
            replacements = []
            for v in members:
                img = shift_ij(v, move)
                if img != v and img not in members:
                    replacements.append((v, img))
            if replacements:
                for v, img in replacements:
                    members.remove(v)
                    members.add(img)
                changed = True
                break
    return VectorFamily(fam.profile, members)
