"""Points and point sets of the binary projective space PG(d,2).

A point of PG(d,2) is a nonzero vector in GF(2)^(d+1); we encode it as the
integer whose bits are the coordinates, with x1 in the least significant
position.  The points of the space are then exactly the integers
1 .. 2^(d+1)-1, and a set of points is a single bit mask with bit p set for
each member p (bit 0 always clear).

The line through two distinct points p and q consists of p, q and p XOR q,
so secant and cap checks reduce to integer bit work, and every point set of
a space with d <= 6 fits in one 128-bit mask.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, List, Sequence

MIN_DIMENSION = 2
MAX_DIMENSION = 6


class ZeroVector(ValueError):
    """The all-zero vector does not define a projective point."""


class DimensionMismatch(ValueError):
    """Coordinate length or dimension outside the supported range."""


class DegenerateLine(ValueError):
    """Two equal points do not span a line."""


class NotACap(ValueError):
    """The point set contains three collinear points."""


class Space:
    """Parameters and lookup tables for one PG(d,2).

    Attributes:
        d: projective dimension.
        n_coords: d+1, the length of coordinate vectors.
        n_points: 2^(d+1)-1, the number of points.
        full_mask: bit mask with every point set.
        coord_masks: coord_masks[b] is the mask of all points whose
            coordinate b is 1; these drive the mask-level linear maps.
        low_masks: low_masks[j] covers the points inside the span of the
            first j unit points, i.e. all positions below 2^j.
    """

    def __init__(self, d: int):
        if not MIN_DIMENSION <= d <= MAX_DIMENSION:
            raise DimensionMismatch(
                f"dimension {d} outside supported range "
                f"[{MIN_DIMENSION}, {MAX_DIMENSION}]")
        self.d = d
        self.n_coords = d + 1
        self.n_points = (1 << (d + 1)) - 1
        self.full_mask = ((1 << (self.n_points + 1)) - 1) & ~1
        self.coord_masks = [
            sum(1 << v for v in range(1, self.n_points + 1) if (v >> b) & 1)
            for b in range(self.n_coords)
        ]
        self.low_masks = [(1 << (1 << j)) - 1 for j in range(self.n_coords + 1)]

    def __repr__(self) -> str:
        return f"Space(d={self.d})"


@lru_cache(maxsize=None)
def space(d: int) -> Space:
    """Shared Space instance for dimension d."""
    return Space(d)


def point_from_coords(sp: Space, coords: Sequence[int]) -> int:
    """Encode a coordinate tuple (x1,...,x_{d+1}) as a point index.

    x1 is the least significant bit, so the unit points are 1, 2, 4, ...
    """
    if len(coords) != sp.n_coords:
        raise DimensionMismatch(
            f"expected {sp.n_coords} coordinates, got {len(coords)}")
    p = 0
    for i, x in enumerate(coords):
        if x not in (0, 1):
            raise ValueError(f"coordinate {x!r} is not a GF(2) value")
        p |= x << i
    if p == 0:
        raise ZeroVector("the zero vector is not a projective point")
    return p


def coords_of(sp: Space, p: int) -> tuple:
    """Coordinate tuple of a point, inverse of point_from_coords."""
    _check_point(sp, p)
    return tuple((p >> i) & 1 for i in range(sp.n_coords))


def third_point(p: int, q: int) -> int:
    """The third point of the line through p and q (their GF(2) sum)."""
    if p == q:
        raise DegenerateLine(f"points {p} and {q} coincide")
    return p ^ q


def _check_point(sp: Space, p: int) -> None:
    if not 1 <= p <= sp.n_points:
        raise ValueError(f"point {p} outside PG({sp.d},2)")


def _check_mask(sp: Space, s: int) -> None:
    if s & ~sp.full_mask:
        raise ValueError(f"mask {s:#x} has bits outside PG({sp.d},2)")


def iter_points(s: int) -> Iterator[int]:
    """Yield the member points of a mask in increasing order."""
    while s:
        b = s & (-s)
        s ^= b
        yield b.bit_length() - 1


def points_of(s: int) -> List[int]:
    """Member points of a mask as a sorted list."""
    return list(iter_points(s))


def mask_from_points(points: Iterable[int]) -> int:
    """Bit mask with the given points set; rejects index 0."""
    m = 0
    for p in points:
        if p < 1:
            raise ZeroVector("point indices start at 1")
        m |= 1 << p
    return m


def secant_mask(sp: Space, s: int) -> int:
    """Mask of all points lying on a 2-secant of s (sums of distinct pairs)."""
    pts = points_of(s)
    out = 0
    for i in range(len(pts)):
        pi = pts[i]
        for j in range(i + 1, len(pts)):
            out |= 1 << (pi ^ pts[j])
    return out


def is_cap(sp: Space, s: int) -> bool:
    """True iff no three points of s are collinear."""
    _check_mask(sp, s)
    pts = points_of(s)
    for i in range(len(pts)):
        pi = pts[i]
        for j in range(i + 1, len(pts)):
            if (s >> (pi ^ pts[j])) & 1:
                return False
    return True


def candidate_set(sp: Space, s: int) -> int:
    """Points extending the cap s to a larger cap.

    These are exactly the points outside s that lie on no 2-secant of s.
    Raises NotACap if s itself is not a cap.
    """
    if not is_cap(sp, s):
        raise NotACap(f"{points_of(s)} is not a cap")
    return sp.full_mask & ~s & ~secant_mask(sp, s)


def is_complete(sp: Space, s: int) -> bool:
    """True iff the cap s admits no one-point extension."""
    return candidate_set(sp, s) == 0


def rank_of(s: int) -> int:
    """GF(2) rank of the members of s viewed as vectors."""
    basis: dict = {}
    for p in iter_points(s):
        cur = p
        while cur:
            lead = cur.bit_length() - 1
            if lead in basis:
                cur ^= basis[lead]
            else:
                basis[lead] = cur
                break
    return len(basis)


def spans(sp: Space, s: int) -> bool:
    """True iff the members of s have full rank d+1."""
    _check_mask(sp, s)
    return rank_of(s) == sp.n_coords


def xor_translate(sp: Space, m: int, t: int) -> int:
    """Image of a position mask under v -> v XOR t (positions 0..n_points)."""
    while t:
        c = t & (-t)
        t ^= c
        hc = sp.coord_masks[c.bit_length() - 1]
        m = ((m & hc) >> c) | ((m & ~hc) << c)
    return m


def has_frame(sp: Space, s: int) -> bool:
    """True iff s contains d+2 points, every d+1 of which are independent.

    Such a configuration always consists of d+1 independent points together
    with their full sum, so the search runs over independent (d+1)-subsets
    and checks membership of the sum.
    """
    if not is_cap(sp, s):
        raise NotACap(f"{points_of(s)} is not a cap")
    pts = points_of(s)
    n1 = sp.n_coords
    if len(pts) < n1 + 1:
        return False

    def extend(start: int, span_mask: int, acc: int, depth: int) -> bool:
        # span_mask covers the subspace spanned so far, position 0 included.
        if depth == n1:
            return (s >> acc) & 1 == 1
        for idx in range(start, len(pts)):
            p = pts[idx]
            if (span_mask >> p) & 1:
                continue
            new_span = span_mask | xor_translate(sp, span_mask, p)
            if extend(idx + 1, new_span, acc ^ p, depth + 1):
                return True
        return False

    return extend(0, 1, 0, 0)


def format_points(s: int) -> str:
    """Point-list text: comma-separated indices in increasing order."""
    return ",".join(str(p) for p in iter_points(s))


def parse_points(sp: Space, text: str) -> int:
    """Parse the point-list syntax back into a mask.

    Indices must be strictly increasing and within the space.
    """
    text = text.strip()
    if not text:
        return 0
    mask = 0
    prev = 0
    for part in text.split(","):
        try:
            p = int(part)
        except ValueError:
            raise ValueError(f"bad point index {part!r}") from None
        if p <= prev:
            raise ValueError(f"point list not strictly increasing at {p}")
        _check_point(sp, p)
        mask |= 1 << p
        prev = p
    return mask
