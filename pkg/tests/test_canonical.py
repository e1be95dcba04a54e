"""Canonical-form engine against an independent tuple-enumeration oracle."""

import random
from itertools import combinations, permutations

import pytest

from capclass.canonical import (NotSpanning, canonical, canonical_key,
                                equivalent, stabilizer_order)
from capclass.geometry import (NotACap, candidate_set, mask_from_points,
                               points_of, rank_of, space, spans)
from capclass.linalg import (apply_set, gl_order, map_from_preimages,
                             random_map)

SP5 = space(5)
SP3 = space(3)
BASIS5 = mask_from_points([1, 2, 4, 8, 16, 32])
CAPS7 = {
    5040: BASIS5 | (1 << 63),
    144: BASIS5 | (1 << 49),
    240: BASIS5 | (1 << 27),
    720: BASIS5 | (1 << 55),
}


def brute_canonical(sp, s):
    """Oracle: enumerate every independent tuple normalisation outright."""
    pts = points_of(s)
    best = None
    count = 0
    for sub in combinations(pts, sp.n_coords):
        if rank_of(mask_from_points(sub)) != sp.n_coords:
            continue
        for tup in permutations(sub):
            image = apply_set(map_from_preimages(sp, tup), s)
            if best is None or image < best:
                best = image
                count = 1
            elif image == best:
                count += 1
    return best, count


def random_spanning_cap(sp, rng, size):
    while True:
        s = 0
        while s.bit_count() < size:
            cand = candidate_set(sp, s) if s else sp.full_mask
            if not cand:
                break
            s |= 1 << rng.choice(points_of(cand))
        if s.bit_count() == size and spans(sp, s):
            return s


def test_basis_key_and_stabilizer():
    rec = canonical(SP5, BASIS5)
    assert rec.key == BASIS5
    assert rec.stabilizer_order == 720
    key, count = brute_canonical(SP5, BASIS5)
    assert (key, count) == (BASIS5, 720)


def test_seven_point_stabilizers():
    for want, cap in CAPS7.items():
        assert canonical(SP5, cap).stabilizer_order == want


def test_engine_matches_bruteforce_d5_small():
    for cap in CAPS7.values():
        rec = canonical(SP5, cap)
        key, count = brute_canonical(SP5, cap)
        assert rec.key == key
        assert rec.stabilizer_order == count


def test_engine_matches_bruteforce_d3():
    from capclass.oracle import classify_bruteforce
    for cls in classify_bruteforce(3):
        if not cls.spanning:
            continue
        rec = canonical(SP3, cls.representative)
        key, count = brute_canonical(SP3, cls.representative)
        assert rec.key == key
        assert rec.stabilizer_order == count == cls.stabilizer_order


def test_witness_maps_input_onto_key():
    rng = random.Random(23)
    for _ in range(10):
        s = random_spanning_cap(SP5, rng, rng.randrange(7, 12))
        rec = canonical(SP5, s)
        assert apply_set(rec.witness, s) == rec.key
        assert rec.key & BASIS5 == BASIS5  # keys contain the unit points


def test_idempotence():
    rng = random.Random(29)
    for _ in range(10):
        s = random_spanning_cap(SP5, rng, rng.randrange(7, 14))
        key = canonical_key(SP5, s)
        assert canonical_key(SP5, key) == key


def test_invariance_under_random_maps():
    rng = random.Random(31)
    for _ in range(40):
        s = random_spanning_cap(SP5, rng, rng.randrange(7, 13))
        g = random_map(SP5, rng)
        assert canonical_key(SP5, apply_set(g, s)) == canonical_key(SP5, s)


def test_equivalent():
    cap1, cap2 = CAPS7[5040], CAPS7[144]
    assert equivalent(SP5, cap1, cap1)
    assert not equivalent(SP5, cap1, cap2)
    rng = random.Random(37)
    g = random_map(SP5, rng)
    assert equivalent(SP5, cap2, apply_set(g, cap2))


def test_orbit_stabilizer_product_d3():
    from capclass.oracle import classify_bruteforce
    for cls in classify_bruteforce(3):
        if not cls.spanning:
            continue
        order = stabilizer_order(SP3, cls.representative)
        assert order * cls.orbit_size == gl_order(3)


def test_divisibility():
    rng = random.Random(41)
    for _ in range(15):
        s = random_spanning_cap(SP5, rng, rng.randrange(7, 14))
        assert gl_order(5) % stabilizer_order(SP5, s) == 0


def test_errors():
    with pytest.raises(NotACap):
        canonical(SP5, mask_from_points([1, 2, 3]))
    with pytest.raises(NotSpanning):
        canonical(SP5, mask_from_points([3, 5]))
    with pytest.raises(NotSpanning):
        canonical_key(SP5, BASIS5 & ~(1 << 32))


def test_dimension_six():
    # masks beyond 64 bits: PG(6,2) has 127 points
    sp6 = space(6)
    basis = mask_from_points(1 << i for i in range(7))
    assert candidate_set(sp6, basis).bit_count() == 127 - 7 - 21
    assert canonical(sp6, basis).stabilizer_order == 5040
    frame = basis | (1 << 127)
    rec = canonical(sp6, frame)
    assert rec.stabilizer_order == 40320
    assert rec.key == frame
