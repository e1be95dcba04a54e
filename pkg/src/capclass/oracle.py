"""Brute-force classification of caps in small dimensions.

For d <= 3 the full group GL(d+1,2) has at most 20160 elements and the
space at most 15 points, so every cap can be enumerated and every orbit
materialised outright.  This provides a ground truth completely
independent of the canonical-form machinery: subsets are filtered by the
cap predicate, orbits are built by applying all group elements as point
permutations, and stabilizer orders follow from orbit sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .classifier import LevelSet
from .geometry import Space, candidate_set, secant_mask, space, spans
from .linalg import gl_order

MAX_ORACLE_DIMENSION = 3


@dataclass(frozen=True)
class OracleClass:
    """One equivalence class found by exhaustive search."""

    size: int
    representative: int  # smallest member mask
    spanning: bool
    complete: bool
    orbit_size: int
    stabilizer_order: int


def _check_dim(d: int) -> None:
    if not 2 <= d <= MAX_ORACLE_DIMENSION:
        raise ValueError(
            f"brute force supports 2 <= d <= {MAX_ORACLE_DIMENSION}")


def gl_point_permutations(sp: Space) -> List[Tuple[int, ...]]:
    """Every element of GL(d+1,2) as a permutation of point indices.

    perm[0] = 0; perm[x] for x >= 1 is the image point.  Generated by
    choosing independent images of the unit vectors (the matrix columns).
    """
    n1 = sp.n_coords
    npts = sp.n_points
    perms: List[Tuple[int, ...]] = []
    cols = [0] * n1

    def build() -> Tuple[int, ...]:
        perm = [0] * (npts + 1)
        for x in range(1, npts + 1):
            low = x & (-x)
            perm[x] = perm[x ^ low] ^ cols[low.bit_length() - 1]
        return tuple(perm)

    def choose(i: int, span_mask: int) -> None:
        # span_mask holds the span of the columns chosen so far (incl. 0)
        for v in range(1, npts + 1):
            if (span_mask >> v) & 1:
                continue
            cols[i] = v
            if i + 1 == n1:
                perms.append(build())
            else:
                new_span = span_mask
                rest = span_mask
                while rest:
                    b = rest & (-rest)
                    rest ^= b
                    new_span |= 1 << ((b.bit_length() - 1) ^ v)
                choose(i + 1, new_span)

    choose(0, 1)
    return perms


def all_caps(sp: Space) -> List[int]:
    """Every nonempty cap of the space, as masks."""
    out: List[int] = []

    def extend(s: int, blocked: int, last: int) -> None:
        for p in range(last + 1, sp.n_points + 1):
            if (blocked >> p) & 1:
                continue
            t = s | (1 << p)
            out.append(t)
            extend(t, blocked | (1 << p) | secant_mask(sp, t), p)

    extend(0, 0, 0)
    return out


def apply_perm(perm: Sequence[int], s: int) -> int:
    out = 0
    while s:
        b = s & (-s)
        s ^= b
        out |= 1 << perm[b.bit_length() - 1]
    return out


def classify_bruteforce(d: int) -> List[OracleClass]:
    """All cap classes of PG(d,2) by exhaustive orbit enumeration."""
    _check_dim(d)
    sp = space(d)
    perms = gl_point_permutations(sp)
    group_order = gl_order(d)
    assert len(perms) == group_order
    caps = sorted(all_caps(sp))
    seen: Dict[int, bool] = {}
    classes: List[OracleClass] = []
    for s in caps:
        if s in seen:
            continue
        orbit = {apply_perm(perm, s) for perm in perms}
        for member in orbit:
            seen[member] = True
        classes.append(OracleClass(
            size=s.bit_count(),
            representative=min(orbit),
            spanning=spans(sp, s),
            complete=candidate_set(sp, s) == 0,
            orbit_size=len(orbit),
            stabilizer_order=group_order // len(orbit),
        ))
    classes.sort(key=lambda c: (c.size, c.representative))
    return classes


def compare_with_engine(d: int, levels: Sequence[LevelSet],
                        oracle: Sequence[OracleClass]
                        ) -> Tuple[bool, List[str]]:
    """Diff the engine classification against the brute-force one.

    Spanning classes only: the engine's scope excludes non-spanning caps,
    which are never complete.  Compares (size, complete) class counts and
    stabilizer multisets per size.
    """
    lines: List[str] = []
    ok = True
    eng_counts: Dict[Tuple[int, bool], int] = {}
    eng_stabs: Dict[int, List[int]] = {}
    for level in levels:
        for node in level.nodes:
            key = (node.size, node.complete)
            eng_counts[key] = eng_counts.get(key, 0) + 1
            eng_stabs.setdefault(node.size, []).append(node.stabilizer_order)
    orc_counts: Dict[Tuple[int, bool], int] = {}
    orc_stabs: Dict[int, List[int]] = {}
    for cls in oracle:
        if not cls.spanning:
            continue
        key = (cls.size, cls.complete)
        orc_counts[key] = orc_counts.get(key, 0) + 1
        orc_stabs.setdefault(cls.size, []).append(cls.stabilizer_order)

    for key in sorted(set(eng_counts) | set(orc_counts)):
        a = eng_counts.get(key, 0)
        b = orc_counts.get(key, 0)
        size, complete = key
        tag = "complete" if complete else "incomplete"
        if a == b:
            lines.append(f"size {size:2d} {tag:10s}: {a} classes (agree)")
        else:
            ok = False
            lines.append(
                f"size {size:2d} {tag:10s}: engine {a} != oracle {b}")
    for size in sorted(set(eng_stabs) | set(orc_stabs)):
        a = sorted(eng_stabs.get(size, []))
        b = sorted(orc_stabs.get(size, []))
        if a != b:
            ok = False
            lines.append(f"size {size:2d} stabilizers: engine {a} != oracle {b}")
    return ok, lines
