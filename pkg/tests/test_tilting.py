import math

import pytest

from nakayama.kupisch import lambda_mh
from nakayama.tilting import (
    dual_slice_indices,
    enumerate_slices,
    enumerate_tilting,
    ext1_dim_ka,
    hom_dim_ka,
    iR_category,
    injective_fracture,
    is_fracture,
    is_slice,
    is_tilting,
    ka_modules,
    make_fracturing,
    pL_category,
    projective_fracture,
    projective_injective_fracturing,
    slice_from_indices,
    slice_indices,
)

from oracles import ext1_dim_oracle, hom_dim_oracle


def catalan(h):
    return math.comb(2 * h, h) // (h + 1)


def test_hom_examples():
    for h in range(1, 6):
        for x in ka_modules(h):
            assert hom_dim_ka(h, x, x) == 1
    assert hom_dim_ka(3, (1, 3), (3, 1)) == 1
    assert hom_dim_ka(3, (3, 1), (1, 3)) == 0
    assert hom_dim_ka(2, (1, 2), (2, 1)) == 1
    with pytest.raises(ValueError):
        hom_dim_ka(3, (4, 1), (1, 1))


def test_ext_examples():
    for h in range(2, 6):
        for y in ka_modules(h):
            assert ext1_dim_ka(h, (1, h), y) == 0  # projective source
    assert ext1_dim_ka(2, (2, 1), (1, 1)) == 1
    assert ext1_dim_ka(2, (2, 1), (1, 2)) == 0


def test_hom_ext_against_matrix_oracle():
    for h in range(1, 7):
        for x in ka_modules(h):
            for y in ka_modules(h):
                assert hom_dim_ka(h, x, y) == hom_dim_oracle(h, x, y)
                assert ext1_dim_ka(h, x, y) == ext1_dim_oracle(h, x, y)


def test_tilting_counts():
    for h in range(1, 6):
        tiltings = enumerate_tilting(h)
        assert len(tiltings) == catalan(h)
        # the projective-injective is a summand of every tilting module
        assert all((1, h) in t for t in tiltings)
    assert is_tilting(3, [(1, 1), (1, 2), (1, 3)])
    assert not is_tilting(2, [(1, 1), (2, 1)])
    assert not is_tilting(3, [(1, 1), (1, 2)])  # wrong cardinality


def test_slices():
    assert is_slice(5, [(2, 1), (2, 2), (1, 3), (1, 4), (1, 5)])
    for h in range(1, 7):
        assert is_slice(h, [(1, j) for j in range(1, h + 1)])
        slices = enumerate_slices(h)
        assert len(slices) == 2 ** (h - 1)
        for s in slices:
            assert is_slice(h, s)
            assert is_tilting(h, s)
    assert not is_slice(3, [(1, 1), (1, 2), (2, 3)])
    assert not is_slice(3, [(3, 1), (1, 2), (1, 3)])


def test_slice_indices_round_trip():
    for h in range(1, 7):
        for s in enumerate_slices(h):
            idx = slice_indices(h, s)
            assert tuple(sorted(slice_from_indices(idx))) == tuple(sorted(s))
            dual = dual_slice_indices(h, idx)
            assert is_slice(h, slice_from_indices(dual))
            assert dual_slice_indices(h, dual) == idx


def test_fracture_examples():
    K = lambda_mh(12, 5)
    fr = is_fracture(K, "left", 5, [(2, 1), (2, 2), (1, 3), (1, 4), (1, 5)])
    assert fr.level == 3 and fr.maximal
    assert projective_fracture(K).level == 1
    assert injective_fracture(K).level == 1
    tr = is_fracture(K, "right", 5,
                     [(11, 1), (10, 2), (10, 3), (9, 4), (8, 5)])
    assert tr.level == 3
    with pytest.raises(ValueError):
        is_fracture(K, "left", 5, [(2, 1), (2, 2), (1, 3), (1, 4), (9, 1)])
    with pytest.raises(ValueError):
        is_fracture(K, "left", 2, [(1, 1), (2, 1)])  # not tilting


def test_fracture_level_monotone():
    # removing an abutment apex (replacing it by another summand) never
    # lowers the level
    h = 4
    K = lambda_mh(9, 4)
    base = [(1, 1), (1, 2), (1, 3), (1, 4)]
    lvl0 = is_fracture(K, "left", h, base).level
    for t in enumerate_tilting(h):
        lvl = is_fracture(K, "left", h, list(t)).level
        missing = [j for j in range(1, h + 1) if (1, j) not in set(t)]
        assert lvl >= lvl0
        assert lvl == (max(missing) + 1 if missing else 1)


def test_pl_ir_categories():
    K = lambda_mh(12, 5)
    F = make_fracturing(
        K,
        [(2, 1), (2, 2), (1, 3), (1, 4), (1, 5)],
        [(11, 1), (10, 2), (10, 3), (9, 4), (8, 5)])
    pl = pL_category(K, F)
    assert set(pl) == {(i, 5) for i in range(2, 9)} | set(F.TL.coords)
    assert len(pl) == len(K.projectives())
    ir = iR_category(K, F)
    assert len(ir) == len(K.injectives())
    # projective fracturing reproduces the projectives
    F0 = projective_injective_fracturing(K)
    assert pL_category(K, F0) == K.projectives()
    assert iR_category(K, F0) == K.injectives()


def test_hereditary_fracturing():
    # over the hereditary algebra every tilting module is both a left
    # and a right fracture
    h = 4
    K = lambda_mh(h, h)
    for t in enumerate_tilting(h):
        F = make_fracturing(K, list(t), list(t))
        assert pL_category(K, F) == sorted(t)
        assert iR_category(K, F) == sorted(t)


def test_fracture_json():
    K = lambda_mh(12, 5)
    fr = is_fracture(K, "left", 5, [(2, 1), (2, 2), (1, 3), (1, 4), (1, 5)])
    data = fr.to_json()
    assert data["side"] == "left" and data["height"] == 5
    assert data["level"] == 3 and [2, 1] in data["coords"]
