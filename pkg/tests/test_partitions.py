import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagram_gram.partitions import SetPartition, set_partitions


def all_partitions(n):
    return [SetPartition(n, blocks) for blocks in set_partitions(range(n))]


def test_from_pairs_examples():
    assert str(SetPartition.from_pairs(3, [])) == "{0|1|2}"
    assert str(SetPartition.from_pairs(4, [(0, 1), (1, 2)])) == "{0,1,2|3}"
    assert str(SetPartition.from_pairs(6, [(0, 3), (3, 5), (1, 2)])) == "{0,3,5|1,2|4}"


def test_from_pairs_out_of_range():
    with pytest.raises(ValueError):
        SetPartition.from_pairs(3, [(0, 3)])


def test_constructor_validates():
    with pytest.raises(ValueError):
        SetPartition(3, [[0, 1]])  # not covering
    with pytest.raises(ValueError):
        SetPartition(3, [[0, 1], [1, 2]])  # overlapping
    with pytest.raises(ValueError):
        SetPartition(2, [[0], [1], []])  # empty block


def test_join_examples():
    p = SetPartition(4, [[0, 1], [2], [3]])
    assert p.join(p) == p
    a = SetPartition(3, [[0, 1], [2]])
    b = SetPartition(3, [[0], [1, 2]])
    assert a.join(b) == SetPartition(3, [[0, 1, 2]])


def test_join_size_mismatch():
    with pytest.raises(ValueError):
        SetPartition.singletons(3).join(SetPartition.singletons(4))


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12),
    st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12),
)))
@settings(max_examples=200, deadline=None)
def test_join_equals_pair_closure(data):
    # joining two partitions equals union-find closure over both pair lists
    n, pairs_a, pairs_b = data
    a = SetPartition.from_pairs(n, pairs_a)
    b = SetPartition.from_pairs(n, pairs_b)
    assert a.join(b) == SetPartition.from_pairs(n, list(pairs_a) + list(pairs_b))


def test_lattice_axioms_exhaustive_small():
    for n in (1, 2, 3, 4):
        parts = all_partitions(n)
        for a, b, c in itertools.product(parts, repeat=3):
            assert a.join(b.join(c)) == a.join(b).join(c)
        for a, b in itertools.product(parts, repeat=2):
            assert a.join(b) == b.join(a)
        for a in parts:
            assert a.join(a) == a


def test_partial_order_via_join_exhaustive_n6():
    # is_coarser_than is the order induced by join, on all pairs at n == 6
    parts = all_partitions(6)
    assert len(parts) == 203  # Bell(6)
    for a, b in itertools.product(parts, repeat=2):
        assert a.is_coarser_than(b) == (a.join(b) == a)


def test_associativity_sampled_n6():
    parts = all_partitions(6)
    rng = random.Random(7)
    for _ in range(2000):
        a, b, c = rng.choice(parts), rng.choice(parts), rng.choice(parts)
        assert a.join(b.join(c)) == a.join(b).join(c)


def test_canonical_form_is_fixpoint():
    p = SetPartition(6, [[4], [1, 2], [0, 5, 3]])
    again = SetPartition(p.n, p.blocks)
    assert again == p
    assert again.blocks == p.blocks


def test_restrict_relabels_by_position():
    p = SetPartition(6, [[0, 3, 5], [1, 2], [4]])
    top = p.restrict([0, 1, 2])
    assert top == SetPartition(3, [[0], [1, 2]] + [])
    bottom = p.restrict([3, 4, 5])
    assert bottom == SetPartition(3, [[0, 2], [1]])


def test_set_partitions_counts_are_bell_numbers():
    bell = {0: 1, 1: 1, 2: 2, 3: 5, 4: 15, 5: 52, 6: 203}
    for n, value in bell.items():
        assert sum(1 for _ in set_partitions(range(n))) == value
