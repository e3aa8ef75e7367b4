import pytest
from hypothesis import given
import hypothesis.strategies as st

from theta_harmonics.errors import PreconditionViolated
from theta_harmonics.weights import (
    HighestWeight,
    PositiveRoot,
    positive_roots,
    residue_partition,
    root_pairing,
    weyl_vector,
)


def dominant_sl9(max_entry):
    """All dominant SL(9) weights with entries bounded by max_entry."""
    out = []

    def build(prefix, bound):
        if len(prefix) == 8:
            out.append(HighestWeight(9, prefix + (0,)))
            return
        for v in range(bound, -1, -1):
            build(prefix + (v,), v)

    build((), max_entry)
    return out


def test_weyl_vector():
    assert weyl_vector(9) == (8, 7, 6, 5, 4, 3, 2, 1, 0)
    assert weyl_vector(3) == (2, 1, 0)


def test_pairing_examples():
    assert root_pairing(PositiveRoot(1, 9), weyl_vector(9)) == 8
    L = HighestWeight(9, (1, 1, 1, 0, 0, 0, 0, 0, 0))
    assert root_pairing(PositiveRoot(1, 9), L.plus_rho()) == 9
    zero = HighestWeight(9, (0,) * 9)
    assert root_pairing(PositiveRoot(1, 2), zero.plus_rho()) == 1


def test_pairing_sum_over_positive_roots():
    rho = weyl_vector(9)
    assert sum(root_pairing(a, rho) for a in positive_roots(9)) == 120


def test_residue_sizes_at_zero():
    rs = residue_partition(HighestWeight(9, (0,) * 9))
    assert rs.sizes() == (9, 15, 12)


def test_residue_sizes_examples():
    rs = residue_partition(HighestWeight(9, (1, 1, 1, 0, 0, 0, 0, 0, 0)))
    assert len(rs.s0) == 9
    rs = residue_partition(HighestWeight(9, (4, 2, 0, 0, 0, 0, 0, 0, 0)))
    assert len(rs.s0) == 12


def test_residue_sets_partition_all_roots():
    for L in dominant_sl9(2):
        rs = residue_partition(L)
        union = set(rs.s0) | set(rs.s1) | set(rs.s2)
        assert len(rs.s0) + len(rs.s1) + len(rs.s2) == 36
        assert union == set(positive_roots(9))


def test_s0_at_least_nine_when_size_divisible_by_three():
    checked = 0
    for L in dominant_sl9(4):
        if L.total % 3 == 0:
            assert len(residue_partition(L).s0) >= 9, L
            checked += 1
    assert checked > 100


def test_dominant_weights_have_positive_pairings():
    for L in dominant_sl9(3):
        v = L.plus_rho()
        assert all(a > b for a, b in zip(v, v[1:]))
        assert all(root_pairing(a, v) > 0 for a in positive_roots(9))


def test_residue_partition_needs_sl9():
    with pytest.raises(PreconditionViolated):
        residue_partition(HighestWeight(3, (1, 0, 0)))


def test_highest_weight_validation():
    with pytest.raises(ValueError):
        HighestWeight(9, (1, 2, 0, 0, 0, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        HighestWeight(9, (1, 1, 1, 0, 0, 0, 0, 0, 1))
    with pytest.raises(ValueError):
        PositiveRoot(3, 3)


@given(st.lists(st.integers(0, 6), min_size=2, max_size=9))
def test_normalization_subtracts_last_entry(raw):
    entries = tuple(sorted(raw, reverse=True))
    hw = HighestWeight.of(len(entries), entries)
    assert hw.entries[-1] == 0
    assert all(
        a - b == c - d
        for (a, b), (c, d) in zip(
            zip(entries, entries[1:]), zip(hw.entries, hw.entries[1:])
        )
    )
