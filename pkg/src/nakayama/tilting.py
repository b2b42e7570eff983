"""Tilting combinatorics over the hereditary linear-quiver algebra, and
fractures of abutments.

Over the path algebra of 1 -> 2 -> ... -> h all hom and ext spaces
between indecomposables are at most one-dimensional.  Hom is decided by
an interval condition on AR coordinates; Ext^1 by the Auslander-Reiten
formula Ext^1(X, Y) = D Hom(Y, tau X).  A basic tilting module is a
pairwise Ext-orthogonal set of h indecomposables; there are Catalan(h)
of them.  Slices are the 2^(h-1) tilting modules with one summand of
each length and unit steps.

A fracture replaces the projectives (resp. injectives) along an
abutment by a tilting module of the identified linear-quiver algebra;
its level measures how far it is from the projective (resp. injective)
fracture.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Tuple

from . import abutments
from .kupisch import Coord, KupischSeries, coord_to_json


def _check_ka_coord(h: int, x: Coord):
    i, j = x
    if not (i >= 1 and j >= 1 and i + j <= h + 1):
        raise ValueError(f"{x} is not a module coordinate for height {h}")


def ka_modules(h: int) -> List[Coord]:
    """All h(h+1)/2 indecomposables of the linear-quiver algebra."""
    return [(i, j) for j in range(1, h + 1) for i in range(1, h - j + 2)]


def hom_dim_ka(h: int, x: Coord, y: Coord) -> int:
    """dim Hom(M(x), M(y)): 1 iff i_x <= i_y <= i_x + j_x - 1 <= i_y + j_y - 1.

    A nonzero map sends the top of the source onto a composition factor
    of the target and is determined up to scalar.
    """
    _check_ka_coord(h, x)
    _check_ka_coord(h, y)
    (ix, jx), (iy, jy) = x, y
    return 1 if ix <= iy <= ix + jx - 1 <= iy + jy - 1 else 0


def ext1_dim_ka(h: int, x: Coord, y: Coord) -> int:
    """dim Ext^1(M(x), M(y)) by the Auslander-Reiten formula; the algebra
    is hereditary so this is the only obstruction to orthogonality."""
    _check_ka_coord(h, x)
    _check_ka_coord(h, y)
    ix, jx = x
    if ix == 1:  # projective
        return 0
    return hom_dim_ka(h, y, (ix - 1, jx))


def is_tilting(h: int, coords) -> bool:
    """Basic tilting module: h distinct summands, Ext^1-orthogonal both ways."""
    coords = list(coords)
    for x in coords:
        _check_ka_coord(h, x)
    if len(set(coords)) != len(coords) or len(coords) != h:
        return False
    return all(ext1_dim_ka(h, x, y) == 0 and ext1_dim_ka(h, y, x) == 0
               for x, y in combinations(coords, 2))


def enumerate_tilting(h: int) -> List[Tuple[Coord, ...]]:
    """All basic tilting modules; there are Catalan(h) many."""
    return [cand for cand in combinations(ka_modules(h), h)
            if is_tilting(h, cand)]


def is_slice(h: int, coords) -> bool:
    """A slice picks one summand (i_k, k) of each length k with
    i_k in {i_{k-1}, i_{k-1} - 1} and i_h = 1."""
    coords = set(coords)
    if len(coords) != h:
        return False
    by_len = {}
    for (i, j) in coords:
        if j in by_len:
            return False
        by_len[j] = i
    if set(by_len) != set(range(1, h + 1)) or by_len[h] != 1:
        return False
    return all(by_len[k] - by_len[k + 1] in (0, 1) for k in range(1, h))


def enumerate_slices(h: int) -> List[Tuple[Coord, ...]]:
    """All 2^(h-1) slices, each sorted by length."""
    out = []

    def extend(prefix):
        k = len(prefix)
        if k == h:
            out.append(tuple((i, j) for j, i in enumerate(reversed(prefix), 1)))
            return
        # prefix holds i_h, i_{h-1}, ...; going down a length the index
        # stays or grows by one
        for step in (0, 1):
            extend(prefix + [prefix[-1] + step])

    extend([1])
    return sorted(out)


def slice_from_indices(indices) -> List[Coord]:
    """Slice coordinates from the index sequence (i_1, ..., i_h)."""
    return [(i, k) for k, i in enumerate(indices, 1)]


def slice_indices(h: int, coords) -> Tuple[int, ...]:
    if not is_slice(h, coords):
        raise ValueError(f"{sorted(coords)} is not a slice of height {h}")
    return tuple(i for (i, j) in sorted(coords, key=lambda c: c[1]))


def dual_slice_indices(h: int, indices) -> Tuple[int, ...]:
    """Index sequence of the dual slice, (i_k) -> (h + 2 - i_k - k)."""
    return tuple(h + 2 - i - k for k, i in enumerate(indices, 1))


@dataclass(frozen=True)
class Fracture:
    """A tilting replacement for the (co)composition series of an abutment."""

    side: str  # "left" or "right"
    height: int
    coords: Tuple[Coord, ...]  # sorted, inside the foundation
    level: int
    maximal: bool  # whether the abutment is maximal on its side

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "height": self.height,
            "coords": [coord_to_json(c) for c in self.coords],
            "level": self.level,
        }


def fracture_level(K: KupischSeries, side: str, h: int, coords) -> int:
    """Level: 1 + the largest height whose abutment apex is missing
    (left: M(1,i); right: M(m-i+1,i)), or 1 if none is missing."""
    cset = set(coords)
    if side == "left":
        missing = [i for i in range(1, h + 1) if (1, i) not in cset]
    else:
        missing = [i for i in range(1, h + 1)
                   if (K.m - i + 1, i) not in cset]
    return (max(missing) if missing else 0) + 1


def is_fracture(K: KupischSeries, side: str, h: int, coords) -> Fracture:
    """Validate a fracture: the coordinates must lie in the foundation of
    the height-h abutment and become a basic tilting module under the
    footing.  Raises ValueError otherwise."""
    coords = sorted(set(coords))
    fnd = set(abutments.foundation(K, side, h))
    outside = [c for c in coords if c not in fnd]
    if outside:
        raise ValueError(f"{outside} outside the {side} foundation of height {h}")
    footed = [abutments.footing_to_ka(K, side, h, c) for c in coords]
    if not is_tilting(h, footed):
        raise ValueError(f"{coords} is not tilting under the {side} footing")
    maximal = (h == (abutments.max_left_height(K) if side == "left"
                     else abutments.max_right_height(K)))
    return Fracture(side, h, tuple(coords),
                    fracture_level(K, side, h, coords), maximal)


def projective_fracture(K: KupischSeries) -> Fracture:
    """The unique projective fracture of the maximal left abutment."""
    h = abutments.max_left_height(K)
    return is_fracture(K, "left", h, [(1, j) for j in range(1, h + 1)])


def injective_fracture(K: KupischSeries) -> Fracture:
    """The unique injective fracture of the maximal right abutment."""
    h = abutments.max_right_height(K)
    return is_fracture(K, "right", h,
                       [(K.m - j + 1, j) for j in range(1, h + 1)])


@dataclass(frozen=True)
class Fracturing:
    """One fracture per maximal abutment; over a Kupisch series there is
    exactly one on each side, so a pair."""

    TL: Fracture
    TR: Fracture

    def to_json(self) -> dict:
        return {"TL": self.TL.to_json(), "TR": self.TR.to_json()}


def projective_injective_fracturing(K: KupischSeries) -> Fracturing:
    return Fracturing(projective_fracture(K), injective_fracture(K))


def make_fracturing(K: KupischSeries, tl_coords, tr_coords) -> Fracturing:
    return Fracturing(
        is_fracture(K, "left", abutments.max_left_height(K), tl_coords),
        is_fracture(K, "right", abutments.max_right_height(K), tr_coords))


def pL_category(K: KupischSeries, F: Fracturing) -> List[Coord]:
    """Projectives that are not abutments, together with the left
    fracture.  Same cardinality as the projectives."""
    if not (F.TL.side == "left" and F.TL.maximal):
        raise ValueError("left fracture must sit at the maximal left abutment")
    rest = [x for x in K.projectives() if x[0] >= 2]
    return sorted(set(rest) | set(F.TL.coords))


def iR_category(K: KupischSeries, F: Fracturing) -> List[Coord]:
    """Injectives that are not abutments, together with the right fracture."""
    if not (F.TR.side == "right" and F.TR.maximal):
        raise ValueError("right fracture must sit at the maximal right abutment")
    rest = [x for x in K.injectives() if x[0] + x[1] <= K.m]
    return sorted(set(rest) | set(F.TR.coords))
