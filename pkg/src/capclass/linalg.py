"""Invertible GF(2) matrices acting on the points of PG(d,2).

Over GF(2) there are no nonzero scalars, so projective and linear
equivalence coincide and all group work happens in GL(d+1,2).  A matrix is
stored as a tuple of row bit vectors; applying it to a point is one AND and
one parity per output coordinate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence, Tuple

from .geometry import Space, iter_points, rank_of


class SingularTuple(ValueError):
    """The given points are linearly dependent."""


@dataclass(frozen=True)
class LinearMap:
    """Invertible (d+1)x(d+1) matrix over GF(2), row-encoded.

    rows[i] holds the coefficients producing output coordinate i.
    Invertibility is checked at construction.
    """

    rows: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.rows)
        if rank_rows(self.rows, n) != n:
            raise ValueError(f"rows {self.rows} are singular over GF(2)")

    @property
    def dimension(self) -> int:
        return len(self.rows)


def rank_rows(rows: Sequence[int], n_cols: int) -> int:
    """Rank of a GF(2) matrix given as row bit vectors."""
    work = list(rows)
    rank = 0
    row_idx = 0
    for col in range(n_cols):
        pivot = None
        for r in range(row_idx, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for r in range(len(work)):
            if r != row_idx and ((work[r] >> col) & 1):
                work[r] ^= work[row_idx]
        rank += 1
        row_idx += 1
        if row_idx == len(work):
            break
    return rank


def identity(n: int) -> LinearMap:
    return LinearMap(tuple(1 << i for i in range(n)))


def apply(m: LinearMap, p: int) -> int:
    """Image of a point: coordinate i is the parity of rows[i] AND p."""
    out = 0
    for i, row in enumerate(m.rows):
        out |= ((row & p).bit_count() & 1) << i
    return out


def apply_set(m: LinearMap, s: int) -> int:
    """Image of a point-set mask; a bijection, so sizes are preserved."""
    out = 0
    for p in iter_points(s):
        q = 0
        for i, row in enumerate(m.rows):
            q |= ((row & p).bit_count() & 1) << i
        out |= 1 << q
    return out


def columns_of(m: LinearMap) -> Tuple[int, ...]:
    """Images of the unit vectors, i.e. the matrix columns."""
    n = m.dimension
    cols = []
    for c in range(n):
        v = 0
        for r in range(n):
            v |= ((m.rows[r] >> c) & 1) << r
        cols.append(v)
    return tuple(cols)


def from_columns(cols: Sequence[int]) -> LinearMap:
    """Build the map sending unit vector e_i to cols[i]."""
    n = len(cols)
    rows = []
    for r in range(n):
        row = 0
        for c in range(n):
            row |= ((cols[c] >> r) & 1) << c
        rows.append(row)
    return LinearMap(tuple(rows))


def inverse(m: LinearMap) -> LinearMap:
    """Inverse via Gauss-Jordan on (M | I) in row bit-vector form."""
    n = m.dimension
    work = list(m.rows)
    inv = [1 << i for i in range(n)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            raise ValueError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        for r in range(n):
            if r != col and ((work[r] >> col) & 1):
                work[r] ^= work[col]
                inv[r] ^= inv[col]
    return LinearMap(tuple(inv))


def compose(outer: LinearMap, inner: LinearMap) -> LinearMap:
    """The map x -> outer(inner(x))."""
    cols = columns_of(inner)
    return from_columns(tuple(apply(outer, c) if c else 0 for c in cols))


def map_from_preimages(sp: Space, points: Sequence[int]) -> LinearMap:
    """The unique map sending points[i] to the unit point e_i.

    This realises the normalisation that places d+1 independent points of a
    cap onto the standard basis.  Raises SingularTuple on dependent input.
    """
    if len(points) != sp.n_coords:
        raise SingularTuple(
            f"need {sp.n_coords} points, got {len(points)}")
    mask = 0
    for p in points:
        mask |= 1 << p
    if rank_of(mask) != sp.n_coords or mask.bit_count() != sp.n_coords:
        raise SingularTuple(f"points {list(points)} are dependent")
    return inverse(from_columns(points))


def gl_order(d: int) -> int:
    """Order of GL(d+1,2): product of (2^(d+1) - 2^i) for i = 0..d."""
    if d < 2:
        raise ValueError("dimension must be at least 2")
    n1 = d + 1
    order = 1
    for i in range(n1):
        order *= (1 << n1) - (1 << i)
    return order


def random_map(sp: Space, rng: random.Random) -> LinearMap:
    """Uniformly random invertible map, by rejection on the rank."""
    n = sp.n_coords
    while True:
        rows = tuple(rng.randrange(1, 1 << n) for _ in range(n))
        if rank_rows(rows, n) == n:
            return LinearMap(rows)
