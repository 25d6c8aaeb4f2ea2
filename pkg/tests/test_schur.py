import pytest
from hypothesis import given, settings, strategies as st

from bbwlab.partitions import partitions_of
from bbwlab.schur import (
    WeightMultiset, lr_tensor, pieri_col, pieri_row, tensor, wedge_dimension_check,
    wedge_of_wedge_square, weyl_dimension,
)
from oracles import lr_oracle, schur_dim_by_tableaux, wedge_wedge2_oracle


def diagram(n, max_size=6):
    return st.integers(0, max_size).flatmap(
        lambda s: st.sampled_from(list(partitions_of(s, n)) or [(0,) * n]))


def test_s21_squared():
    assert lr_tensor((2, 1, 0), (2, 1, 0)) == {(4, 2, 0): 1, (4, 1, 1): 1, (3, 3, 0): 1, (3, 2, 1): 2, (2, 2, 2): 1}


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(diagram(n), diagram(n))))
def test_lr_matches_oracle(pair):
    lam, mu = pair
    assert lr_tensor(lam, mu).as_dict() == lr_oracle(lam, mu)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.integers(-4, 4), min_size=n, max_size=n),
    st.lists(st.integers(-4, 4), min_size=n, max_size=n))))
def test_dimension_conservation(pair):
    lam, mu = (tuple(sorted(x, reverse=True)) for x in pair)
    prod = tensor(lam, mu)
    assert sum(m * weyl_dimension(nu) for nu, m in prod.items()) == weyl_dimension(lam) * weyl_dimension(mu)


def test_tensor_is_commutative_with_negative_weights():
    assert tensor((1, 0, -2), (0, 0, -1)) == tensor((0, 0, -1), (1, 0, -2))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(diagram(n, 5), st.integers(1, n))))
def test_pieri_is_a_special_case_of_lr(arg):
    lam, k = arg
    n = len(lam)
    assert pieri_row(lam, k) == lr_tensor(lam, (k,) + (0,) * (n - 1))
    assert pieri_col(lam, k) == lr_tensor(lam, (1,) * k + (0,) * (n - k))


def test_pieri_examples():
    assert pieri_row((1, 1, 0), 2) == {(3, 1, 0): 1, (2, 1, 1): 1}
    assert pieri_col((2, 1, 1), 2) == {(3, 2, 1): 1, (2, 2, 2): 1}
    assert pieri_col((1, 0), 3).total() == 0


def test_wedge_wedge_square_rank3():
    assert [wedge_of_wedge_square(s, 3).items() for s in range(4)] == [
        [((0, 0, 0), 1)], [((1, 1, 0), 1)], [((2, 1, 1), 1)], [((2, 2, 2), 1)]]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_wedge_wedge_square_matches_character(n):
    for k in range(n * (n - 1) // 2 + 1):
        assert wedge_of_wedge_square(k, n).as_dict() == wedge_wedge2_oracle(k, n)


@pytest.mark.parametrize("n", range(1, 7))
def test_plethysm_dimensions(n):
    for k in range(n * (n - 1) // 2 + 1):
        got, want = wedge_dimension_check(n, k)
        assert got == want


@given(st.integers(1, 4).flatmap(lambda n: diagram(n, 5)))
def test_weyl_matches_tableaux(lam):
    assert weyl_dimension(lam) == schur_dim_by_tableaux(lam, len(lam))


def test_weyl_examples():
    assert weyl_dimension((2, 1, 1)) == 3
    assert weyl_dimension((1, 1, 1, 0, 0, 0, 0)) == 35
    assert weyl_dimension((0, 0, -1)) == 3


def test_multiset_records_roundtrip():
    m = lr_tensor((2, 1, 0), (1, 1, 0))
    assert WeightMultiset.from_records(3, m.to_records()) == m
    assert m.shifted(1).shifted(-1) == m
    assert list(m) == sorted(m, reverse=True)
