import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conjsizes import core
from conjsizes.construction import build_AB, build_Q, coset_ranks
from conjsizes.smallgroups import affine, cyclic, dihedral, from_table, symmetric


def test_element_order_examples(G5):
    C6 = cyclic(6)
    assert core.element_order(C6, C6.identity) == 1
    assert core.element_order(C6, 1) == 6
    alpha = int(coset_ranks(G5, 1, 0)[0])
    assert core.element_order(G5, alpha) == 5
    assert oracles.naive_order(build_AB(G5._cache["params"]), 5) == 2


def test_element_orders_matches_scalar(zoo):
    for G in zoo:
        orders = core.element_orders(G)
        assert orders.tolist() == [core.element_order(G, x) for x in range(G.order)]


def test_centralizer_examples(G5):
    C6 = cyclic(6)
    assert core.centralizer(C6, 3) == list(range(6))
    assert core.centralizer(G5, G5.identity) == list(range(G5.order))
    alpha = int(coset_ranks(G5, 1, 0)[0])
    assert len(core.centralizer(G5, alpha)) == 25


def test_index_examples(G5):
    alpha = int(coset_ranks(G5, 1, 0)[0])
    beta = int(coset_ranks(G5, 0, 1)[0])
    assert core.index_of(G5, G5.identity) == 1
    assert core.index_of(G5, alpha) == 250
    assert core.index_of(G5, beta) == 125


def test_partition_small_examples():
    assert core.conjugacy_partition(cyclic(6)).sizes == [1] * 6
    D8 = dihedral(4)
    assert sorted(core.conjugacy_partition(D8).sizes) == [1, 1, 2, 2, 2]
    naive = sorted(len(c) for c in oracles.naive_classes(D8))
    assert naive == [1, 1, 2, 2, 2]


def test_partition_of_G5_class_equation(G5):
    data = core.conjugacy_partition(G5)
    assert sum(data.sizes) == 6250
    assert all(6250 % s == 0 for s in data.sizes)


def test_partition_reps_are_minimal_and_sorted(zoo):
    for G in zoo:
        data = core.conjugacy_partition(G)
        assert data.reps == sorted(data.reps)
        for cid, rep in enumerate(data.reps):
            members = np.flatnonzero(data.class_of == cid)
            assert members[0] == rep
            assert members.size == data.sizes[cid]


def test_partition_matches_naive_oracle(zoo):
    for G in zoo:
        data = core.conjugacy_partition(G)
        ours = {frozenset(np.flatnonzero(data.class_of == c).tolist()) for c in range(len(data))}
        assert ours == set(oracles.naive_classes(G)), G.label


def test_partition_independent_of_generator_order():
    S4 = symmetric(4)
    twin = core.GroupHandle(S4.order, S4.mul, S4.inv, S4.identity, "S4'", tuple(reversed(S4.generators)))
    a, b = core.conjugacy_partition(S4), core.conjugacy_partition(twin)
    assert a.reps == b.reps and a.sizes == b.sizes
    assert np.array_equal(a.class_of, b.class_of)


def test_class_size_set_examples(params5, G5):
    assert core.class_size_set(cyclic(9)).distinct_sizes == [1]
    assert core.class_size_set(G5).distinct_sizes == [1, 2, 5, 10, 125, 250]
    Q2 = build_Q(2)
    cs = core.class_size_set(Q2)
    assert cs.distinct_sizes == [1, 2] == sorted({len(c) for c in oracles.naive_classes(Q2)})
    assert sum(s * m for s, m in cs.multiplicity.items()) == 8


def test_center_examples(G5, P5):
    assert core.center(cyclic(5)) == list(range(5))
    assert core.center(G5) == [G5.identity]
    assert len(core.center(P5)) >= 5


def test_center_is_index_one(zoo):
    for G in zoo:
        assert core.center(G) == [x for x in range(G.order) if core.index_of(G, x) == 1]


def test_centralizer_and_index_match_oracle(zoo):
    rng = np.random.default_rng(5)
    for G in zoo:
        data = core.conjugacy_partition(G)
        picks = rng.choice(G.order, size=min(G.order, 100), replace=False)
        for x in picks.tolist():
            c = core.centralizer(G, x)
            assert c == oracles.naive_centralizer(G, x)
            assert G.order % len(c) == 0
            assert core.index_of(G, x) == data.size_of(x)


def test_direct_product_examples(P5):
    V4 = core.direct_product(cyclic(2), cyclic(2))
    assert V4.order == 4
    assert core.class_size_set(V4).distinct_sizes == [1]
    L = core.direct_product(P5, build_Q(2))
    assert L.order == 25000


def test_direct_product_rank_encoding():
    G1, G2 = symmetric(3), cyclic(4)
    D = core.direct_product(G1, G2)
    for x, y in itertools.product(range(D.order), repeat=2):
        x1, x2 = divmod(x, 4)
        y1, y2 = divmod(y, 4)
        assert core.product_of(D, x, y) == core.product_of(G1, x1, y1) * 4 + core.product_of(G2, x2, y2)


def test_direct_product_multiplicativity(params5):
    small = [cyclic(4), dihedral(3), dihedral(4), build_Q(2), build_AB(params5), symmetric(3)]
    for G1, G2 in itertools.combinations(small, 2):
        D = core.direct_product(G1, G2)
        n1 = core.class_size_set(G1).distinct_sizes
        n2 = core.class_size_set(G2).distinct_sizes
        assert core.class_size_set(D).distinct_sizes == sorted({a * b for a in n1 for b in n2})


def test_is_nilpotent_examples(G5, P5):
    assert core.is_nilpotent(P5)
    assert core.is_nilpotent(build_Q(3))
    assert not core.is_nilpotent(symmetric(3))
    assert not core.is_nilpotent(G5)


def test_is_nilpotent_matches_oracle(zoo):
    for G in zoo:
        assert core.is_nilpotent(G) == oracles.naive_nilpotent(G), G.label


def test_subgroup_closure_examples(params5):
    AB = build_AB(params5)
    assert core.subgroup_closure(AB, []) == [AB.identity]
    assert core.subgroup_closure(AB, AB.generators) == list(range(10))
    beta = 1
    assert len(core.subgroup_closure(AB, [beta])) == 2


def test_subgroup_closure_matches_oracle(zoo):
    rng = np.random.default_rng(11)
    for G in zoo:
        seed = rng.integers(0, G.order, size=2).tolist()
        assert core.subgroup_closure(G, seed) == oracles.naive_closure(G, seed)


def test_count_sylow_examples(params5, params7):
    assert core.count_sylow_subgroups(cyclic(6), 2) == 1
    assert core.count_sylow_subgroups(build_AB(params5), 2) == 5
    assert core.count_sylow_subgroups(build_AB(params7), 3) == 7


def test_count_sylow_larger_prime_part():
    S4 = symmetric(4)
    assert core.count_sylow_subgroups(S4, 2) == 3
    assert core.count_sylow_subgroups(S4, 3) == 4
    assert core.count_sylow_subgroups(dihedral(6), 2) == 3
    with pytest.raises(ValueError):
        core.count_sylow_subgroups(S4, 5)


def test_count_sylow_refuses_large_non_prime_part(P5):
    with pytest.raises(core.BudgetExceeded):
        core.count_sylow_subgroups(core.direct_product(P5, cyclic(4)), 2)


def test_budget_refusal(monkeypatch):
    monkeypatch.setenv(core.BUDGET_ENV, "1000")
    G = cyclic(100)
    with pytest.raises(core.BudgetExceeded, match="bytes"):
        core.conjugacy_partition(G)
    assert core.conjugacy_partition(G, force=True).sizes == [1] * 100


def test_axioms_hold_for_zoo(zoo):
    for G in zoo:
        assert core.check_axioms(G) == [], G.label


def test_axioms_detect_broken_table():
    T = oracles.table(symmetric(3)).copy()
    T[1, 2], T[1, 3] = T[1, 3], T[1, 2]
    assert "associativity" in core.check_axioms(from_table(T, "broken"))


def test_generators_checked():
    G = cyclic(6)
    bad = core.GroupHandle(6, G.mul, G.inv, 0, "C6 with <2>", (2,))
    assert core.check_axioms(bad) == ["generators"]


@settings(max_examples=60, deadline=None)
@given(n=st.integers(1, 30), x=st.integers(0, 1000), e=st.integers(-40, 40))
def test_power_matches_repeated_multiplication(n, x, e):
    G = dihedral(n)
    x %= G.order
    cur = G.identity
    step = x if e >= 0 else int(G.inv(np.int64(x)))
    for _ in range(abs(e)):
        cur = core.product_of(G, cur, step)
    assert int(core.power(G, x, e)) == cur


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 19))
def test_frobenius_class_sizes_divide_order(x):
    F20 = affine(5)
    assert F20.order % core.index_of(F20, x) == 0
