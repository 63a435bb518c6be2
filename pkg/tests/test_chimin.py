import itertools
import random

import pytest

from plumblat import (
    BoxTooLarge,
    Cycle,
    anticanonical_cycle,
    chi,
    fundamental_cycle,
    in_lipman_cone,
    is_rational,
    laufer_reduce,
    min_chi_box,
    min_chi_lower_bounded,
    pairing,
)

from conftest import (
    brute_fundamental_cycle,
    brute_min_chi_box,
    graph_a1,
    graph_a2,
    graph_e8,
    graph_t237,
    random_rat_cycle,
    random_tree,
)


def test_anticanonical_examples():
    a1, a2 = graph_a1(), graph_a2()
    assert anticanonical_cycle(a1).is_zero
    assert anticanonical_cycle(a2).is_zero
    m1 = random_tree(random.Random(0), max_n=1, euler_range=(-1, -1))
    assert anticanonical_cycle(m1) == -Cycle.ones(m1)


def test_adjunction_identity_random():
    rng = random.Random(21)
    for _ in range(60):
        g = random_tree(rng, max_n=7)
        zk = anticanonical_cycle(g)
        for v in g.names:
            e = Cycle.basis(g, v)
            assert pairing(-zk + e, e) + 2 == 0


def test_chi_examples():
    a1 = graph_a1()
    E = Cycle.basis(a1, "v")
    assert chi(Cycle.zero(a1)) == 0
    assert chi(anticanonical_cycle(a1)) == 0
    assert chi(E) == 1
    for n in range(5):
        assert chi(n * E) == n * n


def test_chi_vertex_value_is_one():
    rng = random.Random(23)
    for _ in range(30):
        g = random_tree(rng, max_n=6)
        for v in g.names:
            assert chi(Cycle.basis(g, v)) == 1


def test_chi_bilinear_expansion():
    rng = random.Random(29)
    for _ in range(60):
        g = random_tree(rng, max_n=6)
        a = random_rat_cycle(rng, g)
        b = random_rat_cycle(rng, g)
        assert chi(a + b) == chi(a) + chi(b) - pairing(a, b)


def test_chi_shift_identity():
    """chi(-l') - chi(-l'+l) = -(l', l) - chi(l)."""
    rng = random.Random(31)
    for _ in range(60):
        g = random_tree(rng, max_n=6)
        lp = random_rat_cycle(rng, g)
        l = Cycle(g, [rng.randint(0, 4) for _ in range(g.n)])
        assert chi(-lp) - chi(-lp + l) == -pairing(lp, l) - chi(l)


def test_fundamental_cycle_examples():
    a1, a2, e8 = graph_a1(), graph_a2(), graph_e8()
    assert fundamental_cycle(a1) == Cycle.basis(a1, "v")
    assert fundamental_cycle(a2) == Cycle.ones(a2)
    assert fundamental_cycle(e8) == Cycle(e8, [2, 3, 4, 6, 5, 4, 3, 2])


def test_fundamental_cycle_is_antinef_and_minimal():
    rng = random.Random(37)
    for _ in range(40):
        g = random_tree(rng, max_n=5, euler_range=(-5, -1))
        z = fundamental_cycle(g)
        assert in_lipman_cone(z)
        assert z == brute_fundamental_cycle(g)


def test_fundamental_cycle_order_independent():
    rng = random.Random(41)
    for _ in range(100):
        g = random_tree(rng, max_n=6)
        rev = type(g)(
            list(zip(g.names, g.euler))[::-1],
            [(g.names[i], g.names[j]) for i, j in g.edges],
        )
        z = fundamental_cycle(g)
        zr = fundamental_cycle(rev)
        assert all(z[v] == zr[v] for v in g.names)


def test_laufer_reduce_traces():
    a1 = graph_a1()
    E = Cycle.basis(a1, "v")
    assert laufer_reduce(2 * E, E) == E
    assert laufer_reduce(E, 2 * E) == E
    # no violation: already in -S' on the support
    assert laufer_reduce(3 * E, -E).is_zero


def test_laufer_reduce_postcondition():
    rng = random.Random(43)
    for _ in range(40):
        g = random_tree(rng, max_n=5)
        z = Cycle(g, [rng.randint(0, 3) for _ in range(g.n)])
        lp = random_rat_cycle(rng, g)
        l = laufer_reduce(z, lp)
        assert Cycle.zero(g) <= l and l <= z
        rest = z - l
        for v in rest.support():
            assert pairing(lp - l, Cycle.basis(g, v)) >= 0


def test_min_chi_box_examples():
    a1, a2 = graph_a1(), graph_a2()
    E = Cycle.basis(a1, "v")
    cert = min_chi_box(3 * E, -E)
    assert cert.min_value == 1 and cert.minimizer.is_zero
    cert = min_chi_box(Cycle.ones(a2), Cycle.zero(a2))
    assert cert.min_value == 0
    # any Z with l' = 0: zero is feasible
    assert min_chi_box(2 * Cycle.ones(a2), Cycle.zero(a2)).min_value <= 0


def test_min_chi_box_degenerate_zero():
    a1 = graph_a1()
    lp = Cycle.basis(a1, "v")
    cert = min_chi_box(Cycle.zero(a1), lp)
    assert cert.min_value == chi(-lp)
    assert cert.minimizer.is_zero


def test_min_chi_box_matches_brute_force():
    rng = random.Random(47)
    for _ in range(40):
        g = random_tree(rng, max_n=4, euler_range=(-6, -1))
        z = Cycle(g, [rng.randint(0, 4) for _ in range(g.n)])
        lp = random_rat_cycle(rng, g)
        cert = min_chi_box(z, lp)
        brute = min(
            chi(-lp + Cycle(g, p))
            for p in itertools.product(
                *[range(c + 1) for c in z.int_coeffs()]
            )
        )
        assert cert.min_value == brute
        assert chi(-lp + cert.minimizer) == cert.min_value


def test_min_chi_box_monotone_in_z():
    rng = random.Random(53)
    for _ in range(30):
        g = random_tree(rng, max_n=4)
        z = Cycle(g, [rng.randint(0, 3) for _ in range(g.n)])
        bigger = z + Cycle.basis(g, rng.choice(g.names))
        lp = random_rat_cycle(rng, g)
        assert (
            min_chi_box(bigger, lp).min_value <= min_chi_box(z, lp).min_value
        )


def test_min_chi_box_budget():
    a2 = graph_a2()
    with pytest.raises(BoxTooLarge):
        min_chi_box(Cycle(a2, [100, 100]), Cycle.zero(a2), budget=100)


def test_min_chi_lower_bounded_examples():
    a1 = graph_a1()
    assert min_chi_lower_bounded(Cycle.ones(a1)).min_value == 1
    m1 = random_tree(random.Random(0), max_n=1, euler_range=(-1, -1))
    assert min_chi_lower_bounded(Cycle.ones(m1)).min_value == 1
    cert = min_chi_lower_bounded(Cycle.ones(graph_t237()))
    assert cert.min_value == 0


def test_min_chi_lower_bounded_soundness():
    """Inflating the certified box must never improve the minimum."""
    rng = random.Random(59)
    for _ in range(30):
        g = random_tree(rng, max_n=4, euler_range=(-6, -2))
        cert = min_chi_lower_bounded(Cycle.ones(g))
        lo = cert.certificate["box_lo"]
        hi = tuple(h + 1 for h in cert.certificate["box_hi"])
        val, _ = brute_min_chi_box(g, lo, hi)
        assert val == cert.min_value


def test_is_rational_examples():
    assert is_rational(graph_a1())
    assert is_rational(graph_a2())
    assert is_rational(graph_e8())
    assert not is_rational(graph_t237())
