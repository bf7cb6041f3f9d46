import random

import pytest

from strongcenter import (
    DimensionMismatchError,
    Orientation,
    OrientationFamily,
    Point,
    SizeGuardError,
    axis_box_family,
    brute_force_max_avoiding,
    compute_strong_centerpoint,
    core_region,
    downward_triangle_family,
    heavy_threshold_exceeded,
    max_avoiding_count,
    random_instance,
    selection_rank,
    tightness_instance,
    verify_strong_centerpoint,
)

PM_X = OrientationFamily([Orientation(1, 0), Orientation(-1, 0)])
COLLINEAR4 = [Point(0, 0), Point(1, 0), Point(2, 0), Point(3, 0)]


def test_selection_rank_formula():
    # n - ceil(n/k) + 1, reducing to n - n/k + 1 when k divides n
    assert selection_rank(4, 2) == 3
    assert selection_rank(8, 4) == 7
    assert selection_rank(5, 2) == 3
    assert selection_rank(10, 3) == 7
    assert selection_rank(1, 1) == 1
    assert selection_rank(7, 1) == 1
    assert selection_rank(7, 7) == 7
    assert selection_rank(7, 100) == 7
    for n in range(1, 60):
        for k in range(1, 12):
            m = selection_rank(n, k)
            assert 1 <= m <= n
            # rank m never exceeds the heavy threshold itself
            assert not heavy_threshold_exceeded(m - 1, n, k)


def test_compute_single_point():
    cert = compute_strong_centerpoint([Point(0, 0)], axis_box_family(2))
    assert cert.chosen_index == 0
    assert cert.point == Point(0, 0)
    assert cert.region_members == (0,)
    assert cert.rank == 1


def test_compute_four_collinear_hand_trace():
    cert = compute_strong_centerpoint(COLLINEAR4, PM_X)
    assert cert.rank == 3
    assert [h.offset for h in cert.halfspaces] == [2, -1]
    assert cert.region_members == (1, 2)
    assert cert.chosen_index == 1
    assert cert.point == Point(1, 0)
    assert verify_strong_centerpoint(COLLINEAR4, PM_X, cert.point).ok


def test_certificate_membership_invariants():
    rng = random.Random(3)
    for _ in range(40):
        inst = random_instance(rng.getrandbits(32), rng.randint(1, 40), 2, 4)
        points = list(inst.points)
        cert = compute_strong_centerpoint(points, inst.family)
        assert cert.chosen_index == cert.region_members[0]
        for index in cert.region_members:
            for halfspace in cert.halfspaces:
                assert halfspace.contains(points[index])


def test_verify_examples():
    assert verify_strong_centerpoint(
        [Point(0, 0)], axis_box_family(2), Point(0, 0)
    ).ok

    eight = [Point(i, 0) for i in range(8)]
    verdict = verify_strong_centerpoint(
        eight, axis_box_family(2), Point(7, 0)
    )
    assert not verdict.ok
    assert verdict.witness_orientation == Orientation(1, 0)
    assert verdict.witness_count == 7

    verdict = verify_strong_centerpoint(COLLINEAR4, PM_X, Point(1, 0))
    assert verdict.ok
    assert verdict.witness_orientation is None


def test_verify_accepts_candidates_outside_the_set():
    verdict = verify_strong_centerpoint(COLLINEAR4, PM_X, Point(1, 99))
    assert verdict.ok
    verdict = verify_strong_centerpoint(COLLINEAR4, PM_X, Point(99, 0))
    assert not verdict.ok


def test_max_avoiding_examples():
    count, _ = max_avoiding_count(
        [Point(0, 0)], axis_box_family(2), Point(0, 0)
    )
    assert count == 0

    inst = tightness_instance(axis_box_family(2), 8)
    count, orientation = max_avoiding_count(
        list(inst.points), inst.family, Point(1, 0)
    )
    assert count == 6
    assert orientation in list(inst.family)


def test_max_avoiding_octagon_radial_direction():
    import math

    n = 8
    points = [
        Point(math.cos(2 * math.pi * j / n), math.sin(2 * math.pi * j / n))
        for j in range(n)
    ]
    for p in points:
        radial = Orientation(p.coords)
        family = OrientationFamily([radial, Orientation(0.0, 1.0)]) \
            if radial != Orientation(0.0, 1.0) else OrientationFamily([radial])
        count, orientation = max_avoiding_count(points, family, p)
        assert count == n - 1
        assert orientation == radial


def test_brute_force_examples():
    assert brute_force_max_avoiding(
        [Point(0, 0)], axis_box_family(2), Point(0, 0)
    ) == 0
    assert brute_force_max_avoiding(COLLINEAR4, PM_X, Point(3, 0)) == 3

    triangle = [Point(0.0, 1.0), Point(-0.9, -0.5), Point(0.9, -0.5)]
    family = downward_triangle_family()
    for p in triangle:
        expected, _ = max_avoiding_count(triangle, family, p)
        assert brute_force_max_avoiding(triangle, family, p) == expected


def test_brute_force_size_guard():
    inst = random_instance(5, 40, 2, 4)
    with pytest.raises(SizeGuardError):
        brute_force_max_avoiding(
            list(inst.points), inst.family, inst.points[0]
        )


def test_oracle_equivalence_small_instances():
    rng = random.Random(99)
    for _ in range(30):
        d = rng.randint(1, 3)
        k = rng.randint(1, 2 if d == 1 else 3)
        n = rng.randint(1, 8)
        inst = random_instance(rng.getrandbits(32), n, d, k)
        points = list(inst.points)
        for p in points:
            fast, _ = max_avoiding_count(points, inst.family, p)
            assert fast == brute_force_max_avoiding(points, inst.family, p)


def test_core_region_examples():
    assert core_region([Point(0, 0)], axis_box_family(2)) == [0]
    assert core_region(COLLINEAR4, PM_X) == [1, 2]


def test_core_region_circle_divisible_case():
    import math

    points = [
        Point(math.cos(2 * math.pi * j / 8), math.sin(2 * math.pi * j / 8))
        for j in range(8)
    ]
    members = core_region(points, axis_box_family(2))
    assert len(members) >= 4


def test_compute_verify_round_trip_random():
    rng = random.Random(123)
    for _ in range(60):
        d = rng.randint(1, 3)
        k = rng.randint(1, 2 if d == 1 else 8)
        n = rng.randint(1, 80)
        inst = random_instance(rng.getrandbits(32), n, d, k)
        points = list(inst.points)
        cert = compute_strong_centerpoint(points, inst.family)
        assert verify_strong_centerpoint(points, inst.family, cert.point).ok


def test_verdict_invariant_under_scaling_and_translation():
    rng = random.Random(17)
    for _ in range(40):
        inst = random_instance(rng.getrandbits(32), rng.randint(1, 30), 2, 4)
        points = list(inst.points)
        p = points[rng.randrange(len(points))]
        scale = rng.randint(1, 9)
        shift = tuple(rng.randint(-50, 50) for _ in range(2))
        mapped = [
            Point(tuple(scale * c + s for c, s in zip(q.coords, shift)))
            for q in points
        ]
        mapped_p = Point(
            tuple(scale * c + s for c, s in zip(p.coords, shift))
        )
        original = verify_strong_centerpoint(points, inst.family, p)
        transformed = verify_strong_centerpoint(mapped, inst.family, mapped_p)
        assert original == transformed


def test_verdict_invariant_under_permutation():
    rng = random.Random(29)
    inst = random_instance(4242, 25, 3, 5)
    points = list(inst.points)
    p = points[0]
    base = verify_strong_centerpoint(points, inst.family, p)
    for _ in range(10):
        shuffled = list(points)
        rng.shuffle(shuffled)
        assert verify_strong_centerpoint(shuffled, inst.family, p) == base


def test_verdict_depends_only_on_projection_counts():
    # family constrains x only; shuffling the orthogonal y coordinates
    # cannot change any verdict
    rng = random.Random(31)
    xs = [rng.randint(-100, 100) for _ in range(30)]
    points = [Point(x, rng.randint(-100, 100)) for x in xs]
    p = points[5]
    base = verify_strong_centerpoint(points, PM_X, p)
    for _ in range(10):
        scrambled = [Point(x, rng.randint(-100, 100)) for x in xs]
        q = Point(p[0], rng.randint(-100, 100))
        assert verify_strong_centerpoint(scrambled, PM_X, q) == base


def test_duplicates_counted_with_multiplicity():
    points = [Point(0, 0)] * 3 + [Point(5, 0)]
    verdict = verify_strong_centerpoint(points, PM_X, Point(5, 0))
    assert not verdict.ok
    assert verdict.witness_count == 3


def test_k1_family_minimal_halfspace():
    family = OrientationFamily([Orientation(1, 0)])
    points = [Point(3, 1), Point(0, 2), Point(7, 5)]
    cert = compute_strong_centerpoint(points, family)
    assert cert.rank == 1
    assert cert.point == Point(0, 2)
    assert verify_strong_centerpoint(points, family, cert.point).ok


def test_errors_empty_and_dimension_mismatch():
    with pytest.raises(ValueError):
        compute_strong_centerpoint([], PM_X)
    with pytest.raises(DimensionMismatchError):
        compute_strong_centerpoint([Point(1, 2, 3)], PM_X)
    with pytest.raises(DimensionMismatchError):
        verify_strong_centerpoint(COLLINEAR4, PM_X, Point(1, 2, 3))


def test_exact_mode_with_oversized_integers():
    # coordinates far beyond int64 must stay exact via the object path
    big = 10**30
    points = [Point(big, 0), Point(big + 1, 0), Point(big + 2, 0), Point(big + 3, 0)]
    cert = compute_strong_centerpoint(points, PM_X)
    assert cert.point == Point(big + 1, 0)
    verdict = verify_strong_centerpoint(points, PM_X, Point(big + 3, 0))
    assert not verdict.ok
    assert verdict.witness_count == 3


def test_exact_mode_candidate_outside_int64():
    points = [Point(i, 0) for i in range(4)]
    verdict = verify_strong_centerpoint(points, PM_X, Point(10**30, 0))
    assert not verdict.ok
    assert verdict.witness_count == 4


def test_float_and_int_projection_paths_agree_on_ties():
    # a float instance with exact ties: equal coordinates stay equal in
    # both the bulk and scalar paths, so verdicts match the int twin
    float_points = [Point(float(c), 0.0) for c in (0, 1, 1, 2)]
    int_points = [Point(c, 0) for c in (0, 1, 1, 2)]
    for candidate in (Point(1, 0), Point(2, 0), Point(0, 0)):
        float_candidate = Point(float(candidate[0]), 0.0)
        a = verify_strong_centerpoint(float_points, PM_X, float_candidate)
        b = verify_strong_centerpoint(int_points, PM_X, candidate)
        assert a.ok == b.ok
        assert a.witness_count == b.witness_count
