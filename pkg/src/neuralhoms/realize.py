"""Finite realizations of codes.

A :class:`Cover` is a finite universe of points plus ``n`` subsets; its code
records which membership patterns actually occur at some point.
:class:`IntervalCover` is a concrete 1-D backend made of half-open rational
intervals, discretized into elementary cells for code extraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from .codes import (
    Code,
    Flip,
    Permutation,
    Permute,
    Restrict,
    Transform,
    check_restriction,
    word_from_str,
)
from .errors import BadParameters, IndexOutOfRange, LengthMismatch, SizeMismatch


@dataclass(frozen=True)
class Cover:
    universe: tuple
    members: tuple

    def __post_init__(self):
        object.__setattr__(self, "universe", tuple(self.universe))
        object.__setattr__(self, "members", tuple(frozenset(u) for u in self.members))
        if not self.members:
            raise LengthMismatch("a cover needs at least one set")
        if len(set(self.universe)) != len(self.universe):
            raise BadParameters("universe points must be distinct")
        points = set(self.universe)
        for i, u in enumerate(self.members, start=1):
            if not u <= points:
                raise BadParameters(f"set U{i} has points outside the universe")

    @property
    def n(self) -> int:
        return len(self.members)

    def pattern(self, p: Hashable) -> int:
        """Codeword (as a mask) of the sets containing point ``p``."""
        v = 0
        for i, u in enumerate(self.members):
            if p in u:
                v |= 1 << i
        return v


def cover_code(U: Cover) -> Code:
    return Code(U.n, frozenset(U.pattern(p) for p in U.universe))


def _ordered(U: Cover, points: set) -> tuple:
    return tuple(p for p in U.universe if p in points)


def codeword_region(U: Cover, v) -> tuple:
    """Points lying in exactly the sets named by ``v`` (mask or 0/1 string)."""
    if isinstance(v, str):
        if len(v) != U.n:
            raise LengthMismatch(f"codeword {v!r} has length {len(v)}, cover has {U.n} sets")
        v = word_from_str(v)
    elif v < 0 or v >> U.n:
        raise LengthMismatch(f"codeword does not fit in {U.n} bits")
    inside = set(U.universe)
    outside: set = set()
    for i, u in enumerate(U.members):
        if v >> i & 1:
            inside &= u
        else:
            outside |= u
    return _ordered(U, inside - outside)


def compatible_region(U: Cover, m: int, mp: int) -> tuple:
    """``(meet of U_i, i > mp) minus (union of U_j, m < j <= mp)``."""
    check_restriction(U.n, m, mp)
    inside = set(U.universe)
    for u in U.members[mp:]:
        inside &= u
    for u in U.members[m:mp]:
        inside -= u
    return _ordered(U, inside)


def _permuted_members(members: Sequence, perm: Permutation) -> tuple:
    # new slot lam(i) receives old set i, so supports move by lam
    out = [None] * len(members)
    for i, u in enumerate(members, start=1):
        out[perm(i) - 1] = u
    return tuple(out)


def realize_transform(U, t: Transform):
    """Cover realizing the transformed code; IntervalCovers stay IntervalCovers."""
    if isinstance(U, IntervalCover):
        return interval_transform(U, t)
    if isinstance(t, Permute):
        if t.perm.n != U.n:
            raise SizeMismatch(f"permutation of size {t.perm.n} applied to {U.n} sets")
        return Cover(U.universe, _permuted_members(U.members, t.perm))
    if isinstance(t, Flip):
        if not 1 <= t.i <= U.n:
            raise IndexOutOfRange(f"set {t.i} outside 1..{U.n}")
        members = list(U.members)
        members[t.i - 1] = frozenset(U.universe) - members[t.i - 1]
        return Cover(U.universe, members)
    if isinstance(t, Restrict):
        region = compatible_region(U, t.m, t.mp)
        keep = frozenset(region)
        return Cover(region, [u & keep for u in U.members[: t.m]])
    raise TypeError(f"unknown transformation {t!r}")


# ---------------------------------------------------------------------------
# 1-D interval backend
# ---------------------------------------------------------------------------


def normalize(intervals: Iterable) -> tuple:
    """Sorted, disjoint, non-adjacent union; empty pieces dropped."""
    pieces = sorted((Fraction(a), Fraction(b)) for a, b in intervals if Fraction(a) < Fraction(b))
    out: list = []
    for a, b in pieces:
        if out and a <= out[-1][1]:
            if b > out[-1][1]:
                out[-1] = (out[-1][0], b)
        else:
            out.append((a, b))
    return tuple(out)


def intersect(xs: Sequence, ys: Sequence) -> tuple:
    out = []
    for a, b in xs:
        for c, d in ys:
            lo, hi = max(a, c), min(b, d)
            if lo < hi:
                out.append((lo, hi))
    return normalize(out)


def subtract(xs: Sequence, ys: Sequence) -> tuple:
    out = list(xs)
    for c, d in ys:
        nxt = []
        for a, b in out:
            if d <= a or b <= c:
                nxt.append((a, b))
                continue
            if a < c:
                nxt.append((a, c))
            if d < b:
                nxt.append((d, b))
        out = nxt
    return normalize(out)


@dataclass(frozen=True)
class IntervalCover:
    """Sets ``U_1..U_n`` as unions of ``[a, b)`` inside the universe ``[lo, hi)``."""

    universe: tuple
    sets: tuple

    def __post_init__(self):
        lo, hi = (Fraction(x) for x in self.universe)
        if hi < lo:
            raise BadParameters(f"universe [{lo},{hi}) is reversed")
        object.__setattr__(self, "universe", (lo, hi))
        if not self.sets:
            raise LengthMismatch("an interval cover needs at least one set")
        normed = []
        for i, raw in enumerate(self.sets, start=1):
            for a, b in raw:
                if Fraction(a) > Fraction(b):
                    raise BadParameters(f"set {i}: interval [{a},{b}) is reversed")
            pieces = normalize(raw)
            if pieces and (pieces[0][0] < lo or pieces[-1][1] > hi):
                raise BadParameters(f"set {i} leaves the universe [{lo},{hi})")
            normed.append(pieces)
        object.__setattr__(self, "sets", tuple(normed))

    @property
    def n(self) -> int:
        return len(self.sets)

    def universe_pieces(self) -> tuple:
        return normalize([self.universe])

    def endpoints(self) -> list:
        pts = set(self.universe)
        for pieces in self.sets:
            for a, b in pieces:
                pts.update((a, b))
        return sorted(pts)


def intervals_to_cover(I: IntervalCover, extra_endpoints: Iterable = ()) -> Cover:
    """One abstract point per elementary cell; each point is labeled by its cell ``(a, b)``."""
    lo, hi = I.universe
    pts = set(I.endpoints())
    pts.update(Fraction(x) for x in extra_endpoints if lo <= Fraction(x) <= hi)
    pts = sorted(pts)
    cells = [(a, b) for a, b in zip(pts, pts[1:]) if a < b]
    members = []
    for pieces in I.sets:
        members.append(frozenset(c for c in cells if any(a <= c[0] and c[1] <= b for a, b in pieces)))
    return Cover(tuple(cells), members)


def interval_code(I: IntervalCover) -> Code:
    return cover_code(intervals_to_cover(I))


def is_convex_1d(I: IntervalCover) -> bool:
    return all(len(pieces) <= 1 for pieces in I.sets)


def interval_transform(I: IntervalCover, t: Transform) -> IntervalCover:
    if isinstance(t, Permute):
        if t.perm.n != I.n:
            raise SizeMismatch(f"permutation of size {t.perm.n} applied to {I.n} sets")
        return IntervalCover(I.universe, _permuted_members(I.sets, t.perm))
    if isinstance(t, Flip):
        if not 1 <= t.i <= I.n:
            raise IndexOutOfRange(f"set {t.i} outside 1..{I.n}")
        sets = list(I.sets)
        sets[t.i - 1] = subtract(I.universe_pieces(), sets[t.i - 1])
        return IntervalCover(I.universe, sets)
    if isinstance(t, Restrict):
        check_restriction(I.n, t.m, t.mp)
        region = I.universe_pieces()
        for pieces in I.sets[t.mp :]:
            region = intersect(region, pieces)
        for pieces in I.sets[t.m : t.mp]:
            region = subtract(region, pieces)
        if len(region) > 1:
            raise BadParameters("compatible region is not a single interval; use the point form")
        universe = region[0] if region else (I.universe[0], I.universe[0])
        return IntervalCover(universe, [intersect(p, region) for p in I.sets[: t.m]])
    raise TypeError(f"unknown transformation {t!r}")
