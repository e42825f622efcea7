import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from innergalois.genus_tools import (
    GenusError,
    MalformedFiltration,
    NonIntegerGenus,
    NotAPartition,
    NotPPower,
    PartitionData,
    aggregate_different,
    deuring_shafarevich,
    different,
    hurwitz_genus,
    hurwitz_identity,
    hurwitz_quotient_genus,
    hurwitz_solve,
    partition_identity_holds,
    partition_quotient_genus,
    tame_different,
    validate_filtration,
)


def test_gk_genus():
    assert hurwitz_solve(3, 1, 18) == 10


def test_hermitian_examples():
    assert different([2, 2, 2, 2]) == 4
    assert hurwitz_solve(2, 0, 4) == 1
    assert hurwitz_solve(3, 0, different([3] * 5)) == 3


def test_quartic_vb_tame():
    assert tame_different(3, [1] * 5) == 10
    assert hurwitz_solve(3, 0, 10) == 3


def test_filtration_validation():
    assert validate_filtration([8, 4, 4, 2]) == [8, 4, 4, 2]
    for bad in ([], [2, 4], [6, 4], [0]):
        with pytest.raises(MalformedFiltration):
            validate_filtration(bad)
    assert aggregate_different([[3], [3], [2, 2]]) == 6


def test_odd_different_is_non_integral():
    with pytest.raises(NonIntegerGenus):
        hurwitz_solve(2, 0, 3)
    assert hurwitz_genus(2, 0, 3).denominator == 2


def test_bad_inputs():
    with pytest.raises(GenusError):
        hurwitz_solve(0, 0, 0)
    with pytest.raises(GenusError):
        tame_different(6, [4])
    with pytest.raises(NonIntegerGenus):
        hurwitz_quotient_genus(3, 1, 1)


def test_deuring_shafarevich():
    # a 2-group fixing one point of a rational curve
    assert deuring_shafarevich(4, 0, [1]) == 4 * (0 - 1) + 3 + 1
    assert deuring_shafarevich(2, 0, [1], p=2) == 0
    assert deuring_shafarevich(1, 3, [], p=3) == 3
    with pytest.raises(NotPPower):
        deuring_shafarevich(6, 0, [])
    with pytest.raises(NotPPower):
        deuring_shafarevich(4, 0, [], p=3)


def test_partition_identity():
    # Klein four group partitioned by its three subgroups of order 2
    data = PartitionData(4, [(2, 1), (2, 1), (2, 1)])
    gq = partition_quotient_genus(3, data)
    assert 2 * 3 + 4 * gq == 6
    assert partition_identity_holds(3, gq, data)
    with pytest.raises(NotAPartition):
        partition_quotient_genus(3, PartitionData(4, [(2, 1), (2, 1)]))


consistent = st.tuples(st.integers(1, 60), st.integers(0, 10), st.integers(0, 400)).filter(
    lambda t: 2 * t[2] - 2 - t[0] * (2 * t[1] - 2) >= 0
)


@settings(max_examples=1000)
@given(consistent)
def test_hurwitz_identity_and_parity(data):
    n, gq, g = data
    D = 2 * g - 2 - n * (2 * gq - 2)
    assert D % 2 == 0
    assert hurwitz_solve(n, gq, D) == g
    assert hurwitz_identity(n, g, gq, D)
    assert hurwitz_quotient_genus(n, g, D) == gq
    with pytest.raises(NonIntegerGenus):
        hurwitz_solve(n, gq, D + 1)
