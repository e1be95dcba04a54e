import random

import pytest

from capclass.geometry import (DegenerateLine, DimensionMismatch, NotACap,
                               ZeroVector, candidate_set, coords_of,
                               format_points, has_frame, is_cap, is_complete,
                               iter_points, mask_from_points, parse_points,
                               point_from_coords, points_of, rank_of,
                               secant_mask, space, spans, third_point,
                               xor_translate)

SP5 = space(5)
SP3 = space(3)
SP2 = space(2)
BASIS5 = mask_from_points([1, 2, 4, 8, 16, 32])


def brute_candidates(sp, s):
    """Independent oracle: points whose addition keeps the cap predicate."""
    out = 0
    for p in range(1, sp.n_points + 1):
        if (s >> p) & 1:
            continue
        if is_cap(sp, s | (1 << p)):
            out |= 1 << p
    return out


def random_cap(sp, rng, max_size=None):
    s = 0
    while True:
        cand = candidate_set(sp, s) if s else sp.full_mask
        if not cand or (max_size and s.bit_count() >= max_size):
            return s
        pts = points_of(cand)
        s |= 1 << rng.choice(pts)


def test_space_bounds():
    assert space(2).n_points == 7
    assert space(5).n_points == 63
    assert space(6).n_points == 127
    with pytest.raises(DimensionMismatch):
        space(1)
    with pytest.raises(DimensionMismatch):
        space(7)


def test_point_from_coords():
    assert point_from_coords(SP5, (1, 0, 0, 0, 0, 0)) == 1
    assert point_from_coords(SP5, (1, 1, 0, 1, 1, 0)) == 27
    with pytest.raises(ZeroVector):
        point_from_coords(SP5, (0, 0, 0, 0, 0, 0))
    with pytest.raises(DimensionMismatch):
        point_from_coords(SP5, (1, 0, 0))
    assert coords_of(SP5, 27) == (1, 1, 0, 1, 1, 0)


def test_third_point():
    assert third_point(1, 2) == 3
    assert third_point(63, 1) == 62
    assert third_point(27, 54) == 45
    with pytest.raises(DegenerateLine):
        third_point(5, 5)


def test_third_point_involution():
    rng = random.Random(1)
    for _ in range(200):
        p = rng.randrange(1, 64)
        q = rng.randrange(1, 64)
        if p == q:
            continue
        assert third_point(p, third_point(p, q)) == q


def test_is_cap():
    assert is_cap(SP5, BASIS5)
    assert not is_cap(SP5, mask_from_points([1, 2, 3]))
    assert is_cap(SP5, BASIS5 | (1 << 49))


def test_candidate_set_basis():
    cand = candidate_set(SP5, BASIS5)
    assert cand.bit_count() == 42
    assert cand == brute_candidates(SP5, BASIS5)
    # candidates of the basis split by coordinate weight
    by_weight = {}
    for p in iter_points(cand):
        by_weight.setdefault(p.bit_count(), 0)
        by_weight[p.bit_count()] += 1
    assert by_weight == {3: 20, 4: 15, 5: 6, 6: 1}


def test_candidate_set_errors_and_fixed_point():
    with pytest.raises(NotACap):
        candidate_set(SP5, mask_from_points([1, 2, 3]))
    # a complete cap is a fixed point: empty candidates stay empty
    hyperoval = mask_from_points([1, 2, 4, 7])
    assert candidate_set(SP2, hyperoval) == 0


def test_candidate_set_matches_bruteforce_random():
    rng = random.Random(7)
    for _ in range(25):
        s = random_cap(SP3, rng, max_size=rng.randrange(2, 8))
        assert candidate_set(SP3, s) == brute_candidates(SP3, s)


def test_extension_property():
    rng = random.Random(3)
    for _ in range(10):
        s = random_cap(SP5, rng, max_size=10)
        cand = candidate_set(SP5, s)
        for p in points_of(cand)[:5]:
            assert is_cap(SP5, s | (1 << p))
        for p in points_of(SP5.full_mask & ~s & ~cand)[:5]:
            assert not is_cap(SP5, s | (1 << p))


def test_is_complete():
    assert not is_complete(SP5, BASIS5)
    fano_triangle = mask_from_points([1, 2, 4])
    assert candidate_set(SP2, fano_triangle) == 1 << 7
    assert not is_complete(SP2, fano_triangle)
    assert is_complete(SP2, mask_from_points([1, 2, 4, 7]))


def test_spans():
    assert spans(SP5, BASIS5)
    assert not spans(SP5, mask_from_points([1, 2, 3]))
    assert not spans(SP5, 0)
    assert rank_of(mask_from_points([1, 2, 3])) == 2


def test_nonspanning_never_complete_d3():
    # every cap of PG(3,2) that does not span has a nonempty candidate set
    from capclass.oracle import all_caps
    for s in all_caps(SP3):
        if not spans(SP3, s):
            assert candidate_set(SP3, s) != 0


def test_has_frame():
    assert has_frame(SP5, BASIS5 | (1 << 63))
    assert not has_frame(SP5, BASIS5)
    with pytest.raises(NotACap):
        has_frame(SP5, mask_from_points([1, 2, 3]))


def test_has_frame_bruteforce_d3():
    from itertools import combinations
    from capclass.oracle import all_caps

    def brute(sp, s):
        pts = points_of(s)
        for five in combinations(pts, sp.n_coords + 1):
            if all(rank_of(mask_from_points(four)) == sp.n_coords
                   for four in combinations(five, sp.n_coords)):
                return True
        return False

    rng = random.Random(11)
    caps = [s for s in all_caps(SP3) if s.bit_count() >= 5]
    for s in rng.sample(caps, 60):
        assert has_frame(SP3, s) == brute(SP3, s)


def test_xor_translate():
    m = mask_from_points([1, 2, 4])
    t = 5
    expected = mask_from_points([1 ^ 5, 2 ^ 5, 4 ^ 5])
    assert xor_translate(SP3, m, t) == expected


def test_point_list_round_trip():
    text = format_points(BASIS5 | (1 << 63))
    assert text == "1,2,4,8,16,32,63"
    assert parse_points(SP5, text) == BASIS5 | (1 << 63)
    assert parse_points(SP5, "") == 0
    with pytest.raises(ValueError):
        parse_points(SP5, "4,2")
    with pytest.raises(ValueError):
        parse_points(SP5, "1,2,64")
    with pytest.raises(ValueError):
        parse_points(SP5, "1,a")


def test_secant_mask():
    s = mask_from_points([1, 2, 4])
    assert secant_mask(SP5, s) == mask_from_points([3, 5, 6])
