import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import closure_set
from vtcert.aut import automorphism_group
from vtcert.graph import lexicographic, named
from vtcert.perm import (CapExceeded, OrbitPartition, PermGroup, Permutation, compose, contains,
                         elements, inverse, is_regular, is_semiregular, is_transitive, orbits,
                         stabilizer_chain)


def cyc(n, *cycles):
    return Permutation.from_cycles(n, *cycles)


def perms(n):
    return st.permutations(list(range(n))).map(Permutation)


# permutations


def test_compose_three_cycle_squared():
    p = cyc(3, (0, 1, 2))
    assert compose(p, p) == cyc(3, (0, 2, 1))


def test_compose_identity():
    p = cyc(5, (0, 3), (1, 4, 2))
    assert compose(p, Permutation.identity(5)) == p
    assert compose(Permutation.identity(5), p) == p


def test_compose_is_left_to_right():
    p, q = cyc(3, (0, 1)), cyc(3, (1, 2))
    # apply p then q: 0 -> 1 -> 2
    assert (p * q)(0) == 2


def test_compose_matches_s6_table():
    rng = random.Random(6)
    s6 = [tuple(x) for x in itertools.permutations(range(6))]
    index = {p: i for i, p in enumerate(s6)}
    table = {}
    for _ in range(200):
        a, b = rng.choice(s6), rng.choice(s6)
        table[(index[a], index[b])] = index[tuple(b[a[x]] for x in range(6))]
    for (i, j), k in table.items():
        assert compose(Permutation(s6[i]), Permutation(s6[j])) == Permutation(s6[k])


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_invalid_images_rejected():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    with pytest.raises(ValueError):
        Permutation((0, 3, 1))


def test_cycles_and_order():
    p = cyc(7, (0, 1, 2), (3, 4))
    assert p.order() == 6
    assert p.cycles() == [(0, 1, 2), (3, 4), (5,), (6,)]
    assert p.fixed_points() == [5, 6]
    assert not p.is_fixed_point_free()


@given(perms(7), perms(7), perms(7))
def test_compose_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms(8))
def test_inverse_roundtrip(p):
    assert compose(p, inverse(p)).is_identity()
    assert compose(inverse(p), p).is_identity()
    assert p ** p.order() == Permutation.identity(8)


@given(perms(6), st.integers(-8, 8))
def test_power_matches_repeated_product(p, k):
    q = Permutation.identity(6)
    base = p if k >= 0 else p.inverse()
    for _ in range(abs(k)):
        q = q * base
    assert p ** k == q


# orbits


def test_orbits_visible_cycles():
    G = PermGroup(6, [cyc(6, (0, 1, 2), (3, 4, 5))])
    assert orbits(G).cells == ((0, 1, 2), (3, 4, 5))


def test_orbits_trivial_group():
    assert orbits(PermGroup(5, [])).cells == tuple((i,) for i in range(5))


def test_orbits_petersen():
    assert len(orbits(automorphism_group(named("petersen"))).cells) == 1


def test_orbit_partition_validation():
    with pytest.raises(ValueError):
        OrbitPartition(3, ((0, 1), (1, 2)))
    with pytest.raises(ValueError):
        OrbitPartition(3, ((0, 1),))
    P = OrbitPartition.from_cells(4, [[3, 1], [0, 2]])
    assert P.cell_index[2] == P.cell_index[0]


@settings(max_examples=60)
@given(st.lists(perms(7), max_size=3))
def test_orbits_are_invariant_and_minimal(gens):
    G = PermGroup(7, gens)
    P = orbits(G)
    for g in gens:
        for v in range(7):
            assert P.cell_index[v] == P.cell_index[g[v]]
    for cell in P.cells:
        # minimal: the cell is a single orbit
        assert set(G.orbit(cell[0])) == set(cell)


# stabilizer chain


def test_order_dihedral_20():
    r = cyc(10, tuple(range(10)))
    s = Permutation([(-i) % 10 for i in range(10)])
    order, _ = stabilizer_chain(PermGroup(10, [r, s]))
    assert order == 20


def test_order_petersen():
    assert automorphism_group(named("petersen")).order() == 120


def test_order_single_15_cycle():
    assert PermGroup(15, [cyc(15, tuple(range(15)))]).order() == 15


def test_identity_and_duplicates_dropped():
    r = cyc(4, (0, 1, 2, 3))
    G = PermGroup(4, [Permutation.identity(4), r, r])
    assert G.generators == (r,)
    assert PermGroup(4, [Permutation.identity(4)]).order() == 1


def test_base_is_smallest_moved_point():
    G = PermGroup(6, [cyc(6, (2, 3, 4))])
    assert G.base() == [2]


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 8).flatmap(lambda n: st.tuples(st.just(n), st.lists(perms(n), max_size=3))))
def test_chain_order_equals_brute_force(data):
    n, gens = data
    G = PermGroup(n, gens)
    brute = closure_set([tuple(g) for g in gens], n)
    assert G.order() == len(brute)
    assert {tuple(e) for e in G.iter_elements()} == brute


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7).flatmap(lambda n: st.tuples(st.just(n), st.lists(perms(n), min_size=1, max_size=2))))
def test_membership_matches_brute_force(data):
    n, gens = data
    G = PermGroup(n, gens)
    brute = closure_set([tuple(g) for g in gens], n)
    for p in itertools.permutations(range(n)):
        assert contains(G, Permutation(p)) == (p in brute)


def test_random_words_sift():
    rng = random.Random(1000)
    A = automorphism_group(named("coxeter"))
    gens = list(A.generators)
    for _ in range(1000):
        w = Permutation.identity(A.degree)
        for _ in range(rng.randint(1, 12)):
            w = w * rng.choice(gens)
        assert contains(A, w)


def test_contains_examples():
    G = PermGroup(5, [cyc(5, (0, 1, 2, 3, 4))])
    assert contains(G, cyc(5, (0, 2, 4, 1, 3)))
    assert not contains(G, cyc(5, (0, 1)))
    with pytest.raises(ValueError):
        contains(G, Permutation.identity(4))


# elements


def test_elements_small():
    assert len(elements(PermGroup(3, [cyc(3, (0, 1, 2))]), 10)) == 3


def test_elements_petersen_sorted():
    els = elements(automorphism_group(named("petersen")), 1000)
    assert len(els) == 120
    assert els == sorted(els)


def test_elements_cap_exceeded():
    X = lexicographic(named("cycle(33)"), named("empty(2)"))
    A = automorphism_group(X)
    assert A.order() == 2 ** 33 * 66
    with pytest.raises(CapExceeded):
        elements(A, 10 ** 6)


# semiregular / transitive / regular


def test_semiregular_examples():
    assert is_semiregular(PermGroup(6, [cyc(6, (0, 1, 2), (3, 4, 5))]))
    assert not is_semiregular(PermGroup(3, [cyc(3, (0, 1))]))


def test_regular_examples():
    G = PermGroup(6, [cyc(6, (0, 1, 2, 3, 4, 5))])
    assert is_regular(G)
    A = automorphism_group(named("petersen"))
    assert is_transitive(A) and not is_regular(A)
    H = PermGroup(6, [cyc(6, (0, 1, 2), (3, 4, 5))])
    assert is_semiregular(H) and not is_transitive(H) and not is_regular(H)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.tuples(st.just(n), st.lists(perms(n), max_size=3))))
def test_regular_routes_agree(data):
    n, gens = data
    G = PermGroup(n, gens)
    brute = closure_set([tuple(g) for g in gens], n)
    semi = all(g == tuple(range(n)) or all(g[x] != x for x in range(n)) for g in brute)
    assert G.is_semiregular() == semi
    assert is_regular(G) == (G.is_transitive() and G.order() == n)


def test_stabilizer_orders():
    A = automorphism_group(named("petersen"))
    for v in range(10):
        S = A.stabilizer(v)
        assert S.order() == 12
        assert all(g[v] == v for g in S.generators)


def test_cap_exceeded_carries_numbers():
    exc = CapExceeded(500, 100)
    assert exc.order == 500 and exc.cap == 100
