from itertools import combinations

from capclass.classifier import classify
from capclass.geometry import is_cap, mask_from_points, space
from capclass.linalg import gl_order
from capclass.oracle import (all_caps, apply_perm, classify_bruteforce,
                             compare_with_engine, gl_point_permutations)

SP2 = space(2)
SP3 = space(3)


def test_gl_enumeration_counts():
    assert len(gl_point_permutations(SP2)) == gl_order(2) == 168
    assert len(gl_point_permutations(SP3)) == gl_order(3) == 20160


def test_gl_permutations_are_bijections():
    perms = gl_point_permutations(SP2)
    assert len(set(perms)) == len(perms)
    for perm in perms[:50]:
        assert perm[0] == 0
        assert sorted(perm[1:]) == list(range(1, 8))


def test_all_caps_fano():
    got = set(all_caps(SP2))
    expected = set()
    for size in range(1, 8):
        for sub in combinations(range(1, 8), size):
            m = mask_from_points(sub)
            if is_cap(SP2, m):
                expected.add(m)
    assert got == expected
    # 7 points, 21 pairs, 28 triangles, 7 hyperovals
    by_size = {}
    for s in got:
        by_size[s.bit_count()] = by_size.get(s.bit_count(), 0) + 1
    assert by_size == {1: 7, 2: 21, 3: 28, 4: 7}


def test_bruteforce_mass_d3():
    classes = classify_bruteforce(3)
    # orbits partition the caps
    total = sum(c.orbit_size for c in classes)
    assert total == len(all_caps(SP3))
    for c in classes:
        assert c.stabilizer_order * c.orbit_size == gl_order(3)


def test_apply_perm():
    perm = gl_point_permutations(SP2)[1]
    s = mask_from_points([1, 2, 4])
    t = apply_perm(perm, s)
    assert t.bit_count() == 3


def test_engine_agrees_with_bruteforce():
    for d in (2, 3):
        levels = classify(d, threads=1)
        ok, lines = compare_with_engine(d, levels, classify_bruteforce(d))
        assert ok, "\n".join(lines)
