"""Jacobson radical: Omega counts, theta, the principal generator, exact rank."""

from greenring.radical import (
    ideal_rank,
    omega_counts,
    radical_generator,
    radical_report,
    root_counts,
    simple_module_count,
    theta,
)

from conftest import ACCEPTANCE, get_ring


def test_taft_counts():
    for n in (2, 3, 4):
        ring = get_ring(f"taft{n}")
        counts = omega_counts(ring)
        assert (counts.d1, counts.d2, counts.d3) == (1, 0, n - 1)


def test_dihedral_counts():
    counts = omega_counts(get_ring("dihedral3"))
    # chi = F(1,0) takes value -1 on the classes of c, c^3 and cb
    assert (counts.d1, counts.d2, counts.d3) == (3, 0, 3)


def test_faithful_variant_has_nonempty_omega2():
    ring = get_ring("gtaft_faithful2")
    counts = omega_counts(ring)
    assert ring.datum.l == 2 * ring.datum.n
    assert (counts.d1, counts.d2, counts.d3) == (1, 2, 1)


def test_partition_is_total():
    for name in ACCEPTANCE + ["gtaft_faithful2", "gtaft_faithful3"]:
        ring = get_ring(name)
        counts = omega_counts(ring)
        assert counts.d1 + counts.d2 + counts.d3 == len(ring.datum.table.classes)


def test_omega3_membership_via_values():
    # j in Omega3 iff the a-value is a nontrivial n-th root of unity
    for name in ("taft3", "dihedral3", "gtaft_faithful2"):
        ring = get_ring(name)
        counts = omega_counts(ring)
        for j, value in enumerate(counts.values):
            in_omega3 = value ** ring.n == 1 and value != 1
            assert (j in counts.omega3) == in_omega3
            assert value == ring.class_value(ring.a, j)


def test_theta_taft_is_one_minus_a():
    for n in (2, 3, 4):
        ring = get_ring(f"taft{n}")
        assert theta(ring) == ring.one - ring.a


def test_theta_faithful_has_two_factors():
    ring = get_ring("gtaft_faithful2")
    expected = (ring.one - ring.a) * (ring.one + ring.a_power(2))
    assert theta(ring) == expected


def test_geometric_sum_kills_theta():
    for name in ACCEPTANCE + ["gtaft_faithful3"]:
        ring = get_ring(name)
        geo = ring.zero
        for t in range(ring.n):
            geo = geo + ring.a_power(t)
        assert geo * theta(ring) == ring.zero


def test_theta_vanishing_pattern():
    for name in ("taft3", "dihedral3", "gtaft_faithful2"):
        ring = get_ring(name)
        counts = omega_counts(ring)
        th = theta(ring)
        for c in range(len(ring.datum.table.classes)):
            vanishes = ring.class_value(th, c).is_zero()
            assert vanishes == (c in counts.omega1 or c in counts.omega2)


def test_generator_squares_to_zero():
    for name in ACCEPTANCE + ["gtaft_faithful2", "gtaft_faithful3"]:
        ring = get_ring(name)
        gen = radical_generator(ring)
        assert gen * gen == ring.zero


def test_taft_generator_form():
    ring = get_ring("taft3")
    gen = radical_generator(ring)
    assert gen == ring.M(1, 3) - ring.M(ring.datum.tau[1], 3)


def test_rank_equals_d3():
    for name in ACCEPTANCE + ["gtaft_faithful2", "gtaft_faithful3"]:
        ring = get_ring(name)
        assert ideal_rank(ring) == omega_counts(ring).d3


def test_rank_of_zero():
    ring = get_ring("taft3")
    assert ideal_rank(ring, ring.zero) == 0


def test_root_count_lemma():
    for name in ACCEPTANCE + ["gtaft_faithful2"]:
        ring = get_ring(name)
        counts = omega_counts(ring)
        for c, nj in enumerate(root_counts(ring)):
            expected = ring.n - 1 if c in counts.omega3 else ring.n
            assert nj == expected


def test_simple_count_is_mn_minus_d3():
    for name in ("taft3", "taft4", "dihedral3", "gtaft_faithful2"):
        ring = get_ring(name)
        counts = omega_counts(ring)
        assert simple_module_count(ring) == ring.m * ring.n - counts.d3


def test_generator_dies_in_grothendieck():
    for name in ACCEPTANCE:
        ring = get_ring(name)
        assert not any(ring.grothendieck_image(radical_generator(ring)))


def test_report_shape():
    report = radical_report(get_ring("taft3"))
    assert report["d3"] == 2
    assert report["rank"] == 2
    assert report["nilpotency_checked"] is True
    assert report["theta"]["coeffs"]
