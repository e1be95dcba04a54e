"""Isomorph-free exhaustive generation of cap classes in PG(d,2).

Every spanning cap of size k >= d+2 contains a spanning cap of size k-1
(a rank-6 set on more than d+1 points always has a removable point), and
every spanning (d+1)-cap is equivalent to the standard basis.  So a
breadth-first extension from the basis cap, deduplicated by canonical key
at every level, enumerates exactly one representative per equivalence
class of spanning caps.  Non-spanning caps are excluded throughout: every
point outside their span extends them, so they are never complete.

Candidates of a node are grouped into classes by the canonical key of the
extended cap.  Optionally ("ordering prune") candidates known to be
equivalent because a stabilizer element of the node maps one to the other
are grouped first, so only one canonical form per orbit is computed; the
resulting classes are provably identical either way.

Level expansion may fan out over worker processes; results are merged in
node order, so the output is independent of the worker count.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .canonical import canonical, engine
from .geometry import (Space, candidate_set, iter_points, mask_from_points,
                       points_of, space)
from .linalg import LinearMap, apply, apply_set, from_columns, inverse


@dataclass(frozen=True)
class CandidateClass:
    """One equivalence class of candidate points of a base cap."""

    representative: int  # smallest member point
    members: int         # mask of all members
    child_key: int       # canonical key of base + any member


@dataclass(frozen=True)
class CandidateClasses:
    base: int
    classes: Tuple[CandidateClass, ...]


@dataclass(frozen=True)
class ClassNode:
    """One equivalence class of caps: size, canonical key and metadata."""

    size: int
    key: int
    stabilizer_order: int
    complete: bool
    parent_key: Optional[int]
    extension_point: Optional[int]


@dataclass(frozen=True)
class LevelSet:
    """All classes of one size, sorted by ascending key."""

    size: int
    nodes: Tuple[ClassNode, ...]


def root(sp: Space) -> int:
    """The basis cap {e_1,...,e_{d+1}}, the unique spanning class of its size."""
    return mask_from_points(1 << i for i in range(sp.n_coords))


def _gen_maps(sp: Space, gen_tuples: Sequence[Tuple[int, ...]]) -> List[LinearMap]:
    return [inverse(from_columns(t)) for t in gen_tuples]


def _orbit_groups(sp: Space, cand: int,
                  maps: Sequence[LinearMap]) -> List[List[int]]:
    """Orbits of the candidate points under the group the maps generate."""
    pts = points_of(cand)
    parent: Dict[int, int] = {p: p for p in pts}

    def find(p: int) -> int:
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    changed = True
    while changed:
        changed = False
        for m in maps:
            for p in pts:
                q = apply(m, p)
                rp, rq = find(p), find(q)
                if rp != rq:
                    parent[max(rp, rq)] = min(rp, rq)
                    changed = True
    groups: Dict[int, List[int]] = {}
    for p in pts:
        groups.setdefault(find(p), []).append(p)
    return [groups[r] for r in sorted(groups)]


def _partition_on_key(sp: Space, key: int,
                      by_orbits: bool) -> List[Tuple[int, int, int]]:
    """Candidate classes of a cap that is its own canonical key.

    Returns (child_key, representative, members) sorted by child_key.
    """
    eng = engine(sp)
    cand = candidate_set(sp, key)
    if not cand:
        return []
    if by_orbits:
        _, gen_tuples = eng.stab(key)
        groups = _orbit_groups(sp, cand, _gen_maps(sp, gen_tuples))
    else:
        groups = [[p] for p in iter_points(cand)]
    merged: Dict[int, int] = {}
    for group in groups:
        child_key = eng.key(key | (1 << group[0]))
        members = 0
        for p in group:
            members |= 1 << p
        merged[child_key] = merged.get(child_key, 0) | members
    out = []
    for child_key in sorted(merged):
        members = merged[child_key]
        rep = (members & -members).bit_length() - 1
        out.append((child_key, rep, members))
    return out


def partition_candidates(sp: Space, base: int,
                         by_orbits: bool = True) -> CandidateClasses:
    """Group the candidates of a spanning cap by child equivalence class.

    Two candidates land in the same class exactly when the extended caps
    are projectively equivalent; the class representative is the smallest
    member point, and classes are ordered by ascending child key.
    """
    rec = canonical(sp, base)
    if base == rec.key:
        raw = _partition_on_key(sp, base, by_orbits)
    else:
        back = inverse(rec.witness)
        raw = []
        for child_key, _, members in _partition_on_key(sp, rec.key, by_orbits):
            members_base = apply_set(back, members)
            rep = (members_base & -members_base).bit_length() - 1
            raw.append((child_key, rep, members_base))
    classes = tuple(CandidateClass(rep, members, child_key)
                    for child_key, rep, members in raw)
    return CandidateClasses(base, classes)


# -- level expansion (worker-friendly module functions) ----------------------


def _expand_task(args: Tuple[int, int, bool]) -> List[Tuple[int, int, int]]:
    d, key, by_orbits = args
    return _partition_on_key(space(d), key, by_orbits)


def _finalize_task(args: Tuple[int, int]) -> Tuple[int, bool]:
    d, key = args
    sp = space(d)
    order, _ = engine(sp).stab(key)
    return order, candidate_set(sp, key) == 0


def _run_tasks(fn, args_list, pool):
    if pool is None:
        return [fn(a) for a in args_list]
    return pool.map(fn, args_list, chunksize=1)


def classify(d: int, threads: Optional[int] = None,
             ordering_prune: bool = False,
             progress: Optional[Callable[[int, int], None]] = None
             ) -> List[LevelSet]:
    """Classify all spanning caps of PG(d,2) by size.

    Returns one LevelSet per size from d+1 up to the largest cap, each
    holding one ClassNode per equivalence class.  The output is a pure
    function of d: worker count and the ordering_prune flag only affect
    the amount of work done.
    """
    sp = space(d)
    eng = engine(sp)
    if threads is None:
        threads = multiprocessing.cpu_count()
    if threads < 1:
        raise ValueError("threads must be positive")

    base = root(sp)
    order, _ = eng.stab(base)
    levels = [LevelSet(sp.n_coords, (ClassNode(
        sp.n_coords, base, order, candidate_set(sp, base) == 0, None, None),))]

    pool = None
    try:
        if threads > 1:
            pool = multiprocessing.Pool(processes=threads)
        while True:
            nodes = levels[-1].nodes
            expansions = _run_tasks(
                _expand_task, [(d, n.key, ordering_prune) for n in nodes], pool)
            first_seen: Dict[int, Tuple[int, int]] = {}
            for node, classes in zip(nodes, expansions):
                for child_key, rep, _members in classes:
                    if child_key not in first_seen:
                        first_seen[child_key] = (node.key, rep)
            if not first_seen:
                break
            child_keys = sorted(first_seen)
            finals = _run_tasks(
                _finalize_task, [(d, ck) for ck in child_keys], pool)
            size = levels[-1].size + 1
            nodes_next = tuple(
                ClassNode(size, ck, order, complete,
                          first_seen[ck][0], first_seen[ck][1])
                for ck, (order, complete) in zip(child_keys, finals))
            levels.append(LevelSet(size, nodes_next))
            if progress is not None:
                progress(size, len(nodes_next))
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return levels


def largest_complete(levels: Sequence[LevelSet]) -> ClassNode:
    """The unique class of maximal size in a finished classification."""
    last = levels[-1]
    if len(last.nodes) != 1:
        raise ValueError(f"size {last.size} has {len(last.nodes)} classes")
    node = last.nodes[0]
    if not node.complete:
        raise ValueError("maximal class is not complete")
    return node
