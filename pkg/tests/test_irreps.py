from fractions import Fraction
from itertools import accumulate

import pytest
from hypothesis import given, strategies as st

from su3reps.irreps import (
    DimensionCensus,
    RealThreshold,
    YoungDiagram,
    build_census,
    count_irreps_upto,
    weyl_dim,
    xi,
    xi_bruteforce,
)


def sweep(limit):
    """Independent tally of diagram dimensions; n1 bound from the n2 = 0 row."""
    counts = [0] * (limit + 1)
    n1 = 0
    while (n1 + 1) * (n1 + 2) // 2 <= limit:
        for n2 in range(n1 + 1):
            d = (n1 + 2) * (n2 + 1) * (n1 - n2 + 1)
            assert d % 2 == 0
            if d // 2 <= limit:
                counts[d // 2] += 1
        n1 += 1
    return counts


@pytest.mark.parametrize("diagram,dim", [((1, 0), 3), ((0, 0), 1), ((2, 1), 8), ((1, 1), 3), ((2, 0), 6)])
def test_weyl_dim_examples(diagram, dim):
    assert weyl_dim(diagram) == dim
    assert YoungDiagram(*diagram).dim == dim


def test_invalid_diagram_rejected():
    with pytest.raises(ValueError):
        YoungDiagram(1, 2)
    with pytest.raises(ValueError):
        YoungDiagram(0, -1)


@given(st.integers(0, 400).flatmap(lambda n1: st.tuples(st.just(n1), st.integers(0, n1))))
def test_conjugation_preserves_dimension(pair):
    d = YoungDiagram(*pair)
    assert d.conjugate().conjugate() == d
    assert weyl_dim(d) == weyl_dim(d.conjugate())


@given(st.integers(0, 500))
def test_self_conjugate_family(n):
    d = YoungDiagram(2 * n, n)
    assert d.is_self_conjugate and d.conjugate() == d
    assert weyl_dim(d) == (n + 1) ** 3


def test_threshold_encoding():
    assert RealThreshold.of(Fraction(7, 2)).twice_value == 7
    assert RealThreshold.of(2000.5).twice_value == 4001
    with pytest.raises(ValueError):
        RealThreshold.of(Fraction(1, 3))
    with pytest.raises(ValueError):
        RealThreshold(0)


def test_count_upto_small():
    assert count_irreps_upto(Fraction(1, 2)) == 0
    assert count_irreps_upto(Fraction(7, 2)) == 3  # (0,0), (1,0), (1,1)
    # integer thresholds count strictly smaller dimensions
    assert count_irreps_upto(1) == 0
    assert count_irreps_upto(3) == 1


def test_count_upto_matches_sweep_at_2000_5():
    cumulative = list(accumulate(sweep(2000)))
    assert count_irreps_upto(2000.5) == cumulative[2000]


def test_count_upto_every_half_integer_to_3000():
    cumulative = list(accumulate(sweep(3000)))
    for t in range(1, 6001):
        # dims strictly below t/2
        assert count_irreps_upto(RealThreshold(t)) == cumulative[(t - 1) // 2], t


def test_count_upto_monotone():
    prev = 0
    for t in range(1, 4000):
        cur = count_irreps_upto(RealThreshold(t))
        assert cur >= prev
        prev = cur


@pytest.mark.parametrize("d,expected", [(1, 1), (2, 0), (3, 2), (4, 0), (5, 0), (6, 2), (8, 1), (15, 4)])
def test_xi_examples(d, expected):
    assert xi(d) == expected
    assert xi_bruteforce(d) == expected


def test_xi_15_diagrams():
    dims = [(n1, n2) for n1 in range(20) for n2 in range(n1 + 1) if weyl_dim((n1, n2)) == 15]
    assert sorted(dims) == [(3, 1), (3, 2), (4, 0), (4, 4)]


def test_census_support_prefix():
    c = build_census(10)
    assert c.support == (1, 3, 6, 8, 10)
    assert build_census(1).counts == {1: 1}
    assert build_census(30).support[:7] == (1, 3, 6, 8, 10, 15, 21)


def test_census_total_matches_closed_form():
    c = build_census(110)
    assert c.total() == count_irreps_upto(110.5)


def test_census_matches_bruteforce_pointwise():
    c = build_census(600)
    assert not c.discrepancies
    assert all(c[d] == xi_bruteforce(d) for d in range(1, 601))


def test_census_is_read_only():
    c = build_census(10)
    assert isinstance(c, DimensionCensus)
    with pytest.raises(TypeError):
        c.counts[2] = 5
    with pytest.raises(KeyError):
        c[11]
