import pytest

from hookpath.core import Block
from hookpath.diagram import class_vertex, v_vertex
from hookpath.paths import BlockAt, blocks_of, enumerate_paths
from hookpath.stats import (
    block_greater,
    des,
    descent_set,
    first_stage_descent_total,
    inversion_set,
    path_rule_parameters,
    predicted_descents_general,
    predicted_descents_special,
    profile,
    raw_descents_around,
    sign_balance,
)


def test_block_greater_examples():
    assert block_greater(BlockAt(3, Block(20, 0)), BlockAt(4, Block(15, 5)))
    assert not block_greater(BlockAt(3, Block(0, 20)), BlockAt(4, Block(5, 15)))
    assert not block_greater(BlockAt(3, Block(5, 5)), BlockAt(4, Block(5, 5)))


def test_block_greater_rejects_first_positions():
    with pytest.raises(ValueError):
        block_greater(BlockAt(2, Block(1, 0)), BlockAt(3, Block(0, 1)))
    with pytest.raises(ValueError):
        block_greater(BlockAt(4, Block(1, 0)), BlockAt(3, Block(0, 1)))


def test_first_position_convention_p3():
    a, b = enumerate_paths(v_vertex(3, 0, 1, 0))
    assert a.start_index == 0 and descent_set(a) == {1} and len(inversion_set(a)) == 1
    assert b.start_index == 1 and descent_set(b) == frozenset() and inversion_set(b) == frozenset()
    assert sign_balance(v_vertex(3, 0, 1, 0)) == 0


def test_worked_example_path_has_descent_at_five():
    v = v_vertex(5, 2, 3, 7)
    path = next(
        x for x in enumerate_paths(v) if {b.position: b.block.horiz for b in blocks_of(x)}.get(5) == 74 and x.m_seq[-1] == 25
    )
    assert 5 in descent_set(path)


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("k", [0, 1, 2])
def test_first_stage_totals(p, k):
    for l in range(p**k):
        total, values = first_stage_descent_total(v_vertex(p, k, 1, l))
        assert total == (p - 1) // 2 and values <= {0, 1}


@pytest.mark.parametrize("p,k,top", [(3, 0, 10), (3, 1, 10), (5, 1, 8), (3, 2, 10)])
def test_profiles_are_consistent(p, k, top):
    for f in range(2 * k + 2, top + 1):
        for l in range(min(p ** (k + f % 2), 12)):
            v = class_vertex(p, f, k, l)
            assert sign_balance(v) == 0
            for path in enumerate_paths(v):
                pr = profile(path)
                assert 2 not in pr.descent_set
                assert pr.des == des(path) <= pr.inv
                adjacent = {i for i, j in inversion_set(path) if j == i + 1 or (i, j) == (1, 2)}
                assert adjacent == set(pr.descent_set)


def test_special_rule():
    assert predicted_descents_special(5, 2, 0, 3) == (True, False)
    assert predicted_descents_special(5, 2, 2, 3) == (False, False)
    assert predicted_descents_special(5, 2, 4, 3) == (False, True)
    with pytest.raises(ValueError):
        predicted_descents_special(5, 2, 5, 3)


def test_worked_example_general_rule():
    for beta in range(5):
        for tp in range(5):
            odd, even = predicted_descents_general(5, 2, 7, beta, tp, t_class=2)
            assert odd == (tp <= 2)
            assert even == (tp in (3, 4))


def test_k0_beta_zero_never_descends_at_even():
    for p in (3, 5, 7):
        assert not any(predicted_descents_general(p, 0, 0, 0, tp)[1] for tp in range(p))


def test_general_rule_rejects_bad_input():
    with pytest.raises(ValueError):
        predicted_descents_general(5, 2, 25, 0, 0)
    with pytest.raises(ValueError):
        predicted_descents_general(5, 2, 7, 5, 0)
    with pytest.raises(ValueError):
        predicted_descents_general(5, 2, 7, 0, 0, t_class=1)


@pytest.mark.parametrize("p,k", [(3, 0), (3, 1), (5, 1), (3, 2), (5, 2)])
def test_rules_match_raw_comparisons_at_stage_two(p, k):
    for lp in range(p ** (k + 1)):
        w = class_vertex(p, 2 * (k + 2) + 1, k, lp)
        for path in enumerate_paths(w):
            l, beta, tp = path_rule_parameters(path, 2)
            assert raw_descents_around(path, 2) == predicted_descents_general(p, k, l, beta, tp)
