import pytest
from hypothesis import given
from hypothesis import strategies as st

from hookpath.core import (
    Block,
    HookPartition,
    IncomparableError,
    IndexSplit,
    add_block,
    dominates,
    is_odd_prime,
    j_number,
    j_window,
    remove_block,
    repunit,
    split_base_p,
)


def hooks(max_size=30):
    return st.integers(1, max_size).flatmap(lambda n: st.integers(0, n - 1).map(lambda i: HookPartition.from_size_index(n, i)))


def test_dominance_examples():
    assert dominates((3,), (2, 1))
    assert dominates((2, 1), (2, 1))
    assert not dominates((2, 1, 1), (3, 1))


def test_dominance_size_mismatch():
    with pytest.raises(IncomparableError):
        dominates(HookPartition(3, 0), HookPartition(2, 0))


def test_add_block_examples():
    assert add_block(HookPartition(2, 1), Block(1, 0)) == HookPartition(3, 1)
    assert add_block(HookPartition(2, 0), Block(0, 1)) == HookPartition(2, 1)
    assert add_block(HookPartition(2, 1), Block(0, 0)) == HookPartition(2, 1)


def test_hook_rendering_and_parts():
    h = HookPartition.from_size_index(5, 2)
    assert h.parts == (3, 1, 1)
    assert str(h) == "(3,1^2)"
    assert str(HookPartition(0, 0)) == "()"


def test_hook_rejects_leg_without_arm():
    with pytest.raises(ValueError):
        HookPartition(0, 2)


@given(hooks(), st.integers(0, 20), st.integers(0, 20))
def test_add_remove_roundtrip(h, m, n):
    b = Block(m, n)
    assert remove_block(add_block(h, b), b) == h


def test_dominance_on_hooks_matches_arm_order():
    for n in range(1, 31):
        hs = [HookPartition.from_size_index(n, i) for i in range(n)]
        for a in hs:
            for b in hs:
                assert dominates(a, b) == (a.arm >= b.arm)


def test_dominance_is_a_partial_order_on_small_hooks():
    for n in range(1, 13):
        hs = [HookPartition.from_size_index(n, i) for i in range(n)]
        for a in hs:
            assert dominates(a, a)
            for b in hs:
                if dominates(a, b) and dominates(b, a):
                    assert a == b
                for c in hs:
                    if dominates(a, b) and dominates(b, c):
                        assert dominates(a, c)


@pytest.mark.parametrize("p,k,t,want", [(5, 2, 1, 6), (5, 2, 2, 12), (3, 1, 0, 0), (5, 0, 3, 0)])
def test_j_number(p, k, t, want):
    assert j_number(p, k, t) == want


def test_j_number_rejects_bad_t():
    with pytest.raises(ValueError):
        j_number(5, 2, 5)


@given(st.sampled_from([3, 5, 7, 11]), st.integers(1, 6), st.data())
def test_j_number_matches_repeated_sum(p, k, data):
    t = data.draw(st.integers(0, p - 1))
    assert j_number(p, k, t) == t * sum(p**i for i in range(k)) == t * repunit(p, 0, k - 1)


@pytest.mark.parametrize("l,p,want", [(7, 5, (1, 2)), (0, 3, (0, 0)), (12, 5, (2, 2))])
def test_split_base_p(l, p, want):
    s = split_base_p(l, p)
    assert (s.alpha, s.beta) == want
    assert s.value(p) == l


@given(st.integers(0, 10**6), st.sampled_from([3, 5, 7]))
def test_split_roundtrip(l, p):
    s = split_base_p(l, p)
    assert s == IndexSplit(l // p, l % p) and 0 <= s.beta < p


def test_j_window():
    assert j_window(5, 2, 7) == (2, False)
    assert j_window(5, 2, 12) == (2, True)
    assert j_window(5, 2, 0) == (0, True)
    assert j_window(5, 2, 24) == (4, True)
    assert j_window(3, 0, 0) == (0, True)


@given(st.sampled_from([3, 5, 7]), st.integers(1, 4), st.data())
def test_j_window_brackets_l(p, k, data):
    l = data.draw(st.integers(0, p**k - 1))
    t, exact = j_window(p, k, l)
    if exact:
        assert l == j_number(p, k, t)
    else:
        assert j_number(p, k, t - 1) < l < j_number(p, k, t)


def test_repunit_empty():
    assert repunit(5, 3, 2) == 0
    assert repunit(5, 1, 2) == 30


def test_is_odd_prime():
    assert [n for n in range(20) if is_odd_prime(n)] == [3, 5, 7, 11, 13, 17, 19]
