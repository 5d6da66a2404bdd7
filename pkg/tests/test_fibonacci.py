import pytest

from hookpath.diagram import DiagramParams, v_vertex
from hookpath.fibonacci import (
    EXAMPLE_P5_K2_S3,
    classify,
    closed_form_discrepancies,
    derivative_identity_check,
    example_discrepancies,
    fib_bruteforce,
    fib_closed_form,
    fib_dp,
    fib_recursive,
    interval_classes,
    is_partition,
)


def test_small_values():
    assert fib_bruteforce(v_vertex(3, 0, 1, 0)) == 1
    assert fib_bruteforce(v_vertex(3, 0, 2, 0)) == 5
    assert derivative_identity_check(v_vertex(3, 0, 1, 0))
    assert derivative_identity_check(v_vertex(3, 0, 2, 0))


def test_worked_example_stage_three():
    m = fib_dp(5, 2, 3)
    assert m[0] == 202 and fib_bruteforce(v_vertex(5, 2, 3, 0)) == 202
    assert all(m[l] == 206 for l in range(1, 7))
    assert m[12] == 186
    assert fib_dp(5, 2, 4)[10] == 1526


def test_worked_example_listing_disagrees_only_at_its_edges():
    found = {(d.l, d.oracle) for d in example_discrepancies()}
    assert found == {(19, 194), (25, -1)}
    m = fib_dp(5, 2, 3)
    for lo, hi, val in EXAMPLE_P5_K2_S3:
        for l in range(lo, min(hi, 24) + 1):
            if l != 19:
                assert m[l] == val


def test_recursive_matches_dp():
    for p, k, top in [(3, 0, 14), (5, 0, 12), (3, 1, 14), (5, 1, 12), (3, 2, 14), (5, 2, 14), (3, 3, 14)]:
        for table in fib_recursive(DiagramParams(p, top), k):
            assert table.by_l == fib_dp(p, k, table.stage)


def test_printed_variant_fails_for_k1():
    tables = fib_recursive(DiagramParams(5, 12), 1, variant="printed")
    assert any(t.by_l != fib_dp(5, 1, t.stage) for t in tables)


def test_k0_sequence():
    assert [fib_closed_form(3, 0, s, 0) for s in range(1, 8)] == [1, 5, 27, 117, 459, 1701, 6075]
    for p in (3, 5):
        for s in range(2, 7):
            assert fib_closed_form(p, 0, s, 0) == fib_dp(p, 0, s)[0]


def test_interval_classes():
    cls = interval_classes(5, 2, 3)
    assert len(cls) == 7 and is_partition(cls, 25)
    assert classify(5, 2, 3, 0).kind == "a" and classify(5, 2, 3, 12).kind == "f"
    grown = interval_classes(3, 2, 4, "growing")
    assert len(grown) == 2 * 3 + 2 and not is_partition(grown, 9)
    for p, k in [(3, 2), (5, 2), (3, 3), (5, 3)]:
        for s in range(3, k + 5):
            assert is_partition(interval_classes(p, k, s), p**k)
    with pytest.raises(ValueError):
        interval_classes(5, 1, 3)
    with pytest.raises(ValueError):
        classify(5, 2, 3, 25)


def test_closed_form_examples():
    assert fib_closed_form(3, 0, 2, 0) == 5
    assert fib_closed_form(5, 2, 3, 0) == 202
    assert fib_closed_form(5, 2, 3, 12) == 186


@pytest.mark.parametrize("p,k,s_max", [(3, 1, 7), (5, 1, 6), (3, 2, 7), (5, 2, 6), (3, 3, 7), (5, 3, 6)])
def test_closed_forms_match_oracle(p, k, s_max):
    for s in range(1, s_max + 1):
        assert closed_form_discrepancies(p, k, s) == []


def test_values_constant_on_classes():
    for p, k in [(5, 2), (3, 3)]:
        for s in range(3, k + 4):
            m = fib_dp(p, k, s)
            for c in interval_classes(p, k, s):
                assert len({m[l] for l in range(c.lo, c.hi + 1)}) == 1
