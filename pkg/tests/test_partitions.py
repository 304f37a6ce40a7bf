import itertools

import pytest

from monosemi.moments import moment
from monosemi.partitions import (
    DEFAULT_ENUM_BOUND,
    EnumerationBoundError,
    LabeledPairPartition,
    PairPartition,
    catalan,
    count_labelings_exhaustive,
    count_nc2wmo,
    count_weakly_monotone_labelings,
    enumerate_nc2,
    nesting_forest,
    partition_to_sign_string,
    sign_string_to_partition,
    validate_sign_string,
)


def test_catalan_values():
    assert catalan(0) == 1
    assert catalan(5) == 42
    assert catalan(8) == 1430
    # direct binomial oracle
    import math

    for n in range(12):
        assert catalan(n) == math.comb(2 * n, n) - math.comb(2 * n, n + 1)


@pytest.mark.parametrize("n", range(0, 8))
def test_enumeration_count_is_catalan(n):
    assert len(enumerate_nc2(n)) == catalan(n)


def test_enumeration_bound_error():
    with pytest.raises(EnumerationBoundError):
        enumerate_nc2(DEFAULT_ENUM_BOUND + 1)
    # explicit override allows going past the default
    assert len(enumerate_nc2(3, bound=3)) == 5


def test_enumerated_partitions_are_distinct_and_valid():
    for n in range(1, 6):
        parts = enumerate_nc2(n)
        assert len(set(parts)) == catalan(n)
        for p in parts:
            assert p.n_blocks == n  # constructor already validates non-crossing


def test_single_pair():
    assert enumerate_nc2(1) == [PairPartition(((1, 2),))]


def test_crossing_rejected():
    with pytest.raises(ValueError, match="crossing"):
        PairPartition(((1, 3), (2, 4)))


def test_cover_and_order_validation():
    with pytest.raises(ValueError):
        PairPartition(((1, 2), (3, 3)))
    with pytest.raises(ValueError):
        PairPartition(((1, 2), (2, 3)))
    with pytest.raises(ValueError):
        PairPartition(((3, 4), (1, 2)))


def test_sign_string_conditions():
    validate_sign_string((-1, 1))
    with pytest.raises(ValueError, match="sum to zero"):
        validate_sign_string((-1, -1))
    with pytest.raises(ValueError, match="suffix"):
        validate_sign_string((1, -1))
    with pytest.raises(ValueError, match="even length"):
        validate_sign_string((-1,))
    with pytest.raises(ValueError, match="-1 or"):
        validate_sign_string((-1, 0))


def test_sign_string_to_partition_basic():
    assert sign_string_to_partition((-1, 1)) == PairPartition(((1, 2),))
    assert sign_string_to_partition((-1, -1, 1, 1)) == PairPartition(((1, 4), (2, 3)))


@pytest.mark.parametrize("n", range(1, 6))
def test_sign_string_bijection_exhaustive(n):
    # every admissible string maps to a distinct partition, and back
    admissible = []
    for signs in itertools.product((-1, 1), repeat=2 * n):
        try:
            validate_sign_string(signs)
        except ValueError:
            continue
        admissible.append(signs)
    assert len(admissible) == catalan(n)
    images = set()
    for signs in admissible:
        p = sign_string_to_partition(signs)
        assert partition_to_sign_string(p) == signs
        images.add(p)
    assert len(images) == catalan(n)


def test_nesting_forest_shapes():
    flat = nesting_forest(PairPartition(((1, 2), (3, 4))))
    assert flat.parent == (None, None)
    assert flat.roots == (0, 1)

    nested = nesting_forest(PairPartition(((1, 4), (2, 3))))
    assert nested.parent == (None, 0)
    assert nested.children == ((1,), ())

    two_inner = nesting_forest(PairPartition(((1, 6), (2, 3), (4, 5))))
    assert two_inner.parent == (None, 0, 0)
    assert two_inner.children[0] == (1, 2)


def test_forest_ancestry_matches_interval_containment():
    for p in enumerate_nc2(4):
        forest = nesting_forest(p)
        for i, (li, ri) in enumerate(p.pairs):
            for j, (lj, rj) in enumerate(p.pairs):
                nested = li < lj and rj < ri
                # j should have i as an ancestor exactly when i's block encloses j's
                k, is_ancestor = forest.parent[j], False
                while k is not None:
                    if k == i:
                        is_ancestor = True
                        break
                    k = forest.parent[k]
                assert is_ancestor == nested


def test_labeling_count_basic():
    assert count_weakly_monotone_labelings(PairPartition(((1, 2),)), 3) == 3
    assert count_weakly_monotone_labelings(PairPartition(((1, 4), (2, 3))), 2) == 3


def test_labeled_partition_validity():
    p = PairPartition(((1, 4), (2, 3)))
    assert LabeledPairPartition(p, (1, 2)).is_weakly_monotone()
    assert not LabeledPairPartition(p, (2, 1)).is_weakly_monotone()


@pytest.mark.parametrize("m", [1, 2, 3])
def test_interval_partition_has_m_power_n_labelings(m):
    for n in range(1, 5):
        interval = PairPartition(tuple((2 * i + 1, 2 * i + 2) for i in range(n)))
        assert interval.is_interval()
        assert count_weakly_monotone_labelings(interval, m) == m**n
        assert count_labelings_exhaustive(interval, m) == m**n


def test_dp_matches_exhaustive_enumeration():
    for n in range(1, 5):
        for p in enumerate_nc2(n):
            for m in range(1, 4):
                assert count_weakly_monotone_labelings(p, m) == count_labelings_exhaustive(p, m)


def test_count_nc2wmo_one_label_gives_catalan():
    for n in range(0, 8):
        assert count_nc2wmo(1, n) == catalan(n)


def test_count_nc2wmo_reference_values():
    assert [count_nc2wmo(2, n) for n in range(1, 5)] == [2, 7, 29, 131]
    assert count_nc2wmo(4, 3) == 194


def test_count_matches_recurrence_both_ways():
    for m in range(1, 5):
        for n in range(0, 7):
            assert count_nc2wmo(m, n) == moment(m, n)
