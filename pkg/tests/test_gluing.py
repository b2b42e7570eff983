import random

import pytest

from nakayama import ar
from nakayama.abutments import left_abutment_heights, max_left_height, \
    right_abutment_heights
from nakayama.gluing import check_glue_invariants, dispatch_check, glue
from nakayama.kupisch import KupischSeries, lambda_mh, linear_quiver_algebra, \
    parse_series

from oracles import pushout_matches, random_series


def test_glue_motivating():
    g = glue(lambda_mh(9, 4), lambda_mh(6, 5), 3)
    assert g.result == parse_series("5,5,4^7,3,2,1")
    assert len(g.result.all_modules()) == 20 + 30 - 6
    assert g.phi((1, 1)) == (7, 1)
    assert g.psi((1, 1)) == (1, 1)
    assert set(g.overlap()) == {(7, 1), (7, 2), (7, 3), (8, 1), (8, 2), (9, 1)}


def test_glue_trivial():
    A = lambda_mh(6, 5)
    h = max_left_height(A)
    g = glue(linear_quiver_algebra(h), A, h)
    assert g.result == A
    assert check_glue_invariants(g).ok and dispatch_check(g).ok


def test_glue_chains():
    for n in range(1, 6):
        g = glue(lambda_mh(n + 1, 2), lambda_mh(n + 1, 2), 1)
        assert g.result == lambda_mh(2 * n + 1, 2)


def test_glue_height_errors():
    with pytest.raises(ValueError):
        glue(lambda_mh(9, 4), lambda_mh(6, 5), 5)  # B has no height-5 right
    with pytest.raises(ValueError):
        glue(lambda_mh(9, 4), KupischSeries([2, 2, 1]), 3)


def test_glue_worked_chain_counts():
    g = glue(lambda_mh(12, 5), lambda_mh(8, 3), 3)
    assert g.result == parse_series("3^5,5^8,4,3,2,1")
    assert len(g.result.all_modules()) == 21 + 50 - 6
    assert check_glue_invariants(g).ok
    assert dispatch_check(g).ok


def test_glue_associative():
    C = lambda_mh(5, 2)
    B = lambda_mh(8, 3)
    A = lambda_mh(12, 5)
    lhs = glue(C, glue(B, A, 3).result, 2).result
    rhs = glue(glue(C, B, 2).result, A, 3).result
    assert lhs == rhs == parse_series("5^8,4,3^6,2^4,1")


def test_remaining_abutment_heights():
    # left heights of the gluing contain those of the suffix algebra
    rng = random.Random(14)
    for _ in range(40):
        A = random_series(rng, 9)
        B = random_series(rng, 9)
        h = rng.choice(sorted(left_abutment_heights(A) &
                              right_abutment_heights(B)))
        g = glue(B, A, h)
        if B.m > h:
            assert left_abutment_heights(g.result) == left_abutment_heights(B)
        else:
            assert g.result == A
        if A.m > h:
            assert max(right_abutment_heights(g.result)) == A.entries[0]
        else:
            assert g.result == B


def test_glue_property_sweep():
    rng = random.Random(15)
    for _ in range(60):
        A = random_series(rng, 9)
        B = random_series(rng, 9)
        h = rng.choice(sorted(left_abutment_heights(A) &
                              right_abutment_heights(B)))
        g = glue(B, A, h)
        assert g.result.entries == A.entries[:A.m - h] + B.entries
        report = check_glue_invariants(g)
        assert report.ok, report.failure
        dispatch = dispatch_check(g)
        assert dispatch.ok, dispatch.failure
        assert pushout_matches(g)
        da, db = ar.gldim(A), ar.gldim(B)
        assert max(da, db) <= ar.gldim(g.result) <= da + db


def test_glued_json():
    g = glue(lambda_mh(3, 2), lambda_mh(3, 2), 1)
    data = g.to_json()
    assert data["result"]["kupisch"] == [2, 2, 2, 2, 1]
    assert len(data["phi"]) == len(g.a.all_modules())
    assert [[1, 1], [3, 1]] in data["phi"]
