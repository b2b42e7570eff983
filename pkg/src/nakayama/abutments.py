"""Abutments of acyclic Nakayama algebras.

A left abutment is a uniserial projective all of whose submodules are
projective; its foundation is a triangular region of the AR quiver
isomorphic to the AR quiver of the hereditary linear-quiver algebra of
the same height.  Right abutments are the duals.  Over a Kupisch series
the left abutments of height h are exactly those whose tail reads
(h, h-1, ..., 1), and every height up to the first entry d_1 gives a
right abutment.  The footing identifies a foundation with the module
coordinates of the linear-quiver algebra.
"""

from __future__ import annotations

from typing import List, Set

from .ar import ARQuiver
from .kupisch import Coord, KupischSeries


def left_abutment_heights(K: KupischSeries) -> Set[int]:
    """Heights {1..H} where H is the longest staircase tail
    (d_{m-h+1}, ..., d_m) = (h, ..., 1) of the series."""
    m = K.m
    h = 1
    while h < m and K.entries[m - h - 1] == h + 1:
        h += 1
    return set(range(1, h + 1))


def right_abutment_heights(K: KupischSeries) -> Set[int]:
    """Heights {1..d_1}: the initial segment of the quiver carries no
    relation of length below d_1."""
    return set(range(1, K.entries[0] + 1))


def max_left_height(K: KupischSeries) -> int:
    return max(left_abutment_heights(K))


def max_right_height(K: KupischSeries) -> int:
    return K.entries[0]


def left_apex(K: KupischSeries, h: int) -> Coord:
    return (1, h)


def right_apex(K: KupischSeries, h: int) -> Coord:
    return (K.m - h + 1, h)


def foundation(K: KupischSeries, side: str, h: int) -> List[Coord]:
    """The triangle of the height-h abutment: left foundations are
    {(i,j) : i+j <= h+1}, right foundations {(i,j) : i >= m-h+1}."""
    if side == "left":
        if h not in left_abutment_heights(K):
            raise ValueError(f"no left abutment of height {h} on {K!r}")
        return sorted((i, j) for j in range(1, h + 1)
                      for i in range(1, h - j + 2))
    if side == "right":
        if h not in right_abutment_heights(K):
            raise ValueError(f"no right abutment of height {h} on {K!r}")
        m = K.m
        return sorted((i, j) for j in range(1, h + 1)
                      for i in range(m - h + 1, m - j + 2))
    raise ValueError(f"side must be left/right, got {side!r}")


def footing_to_ka(K: KupischSeries, side: str, h: int, x: Coord) -> Coord:
    """Identify a foundation coordinate with a module of the hereditary
    linear-quiver algebra on h vertices (left: identity; right: shift)."""
    if x not in set(foundation(K, side, h)):
        raise ValueError(f"{x} not in the {side} foundation of height {h}")
    if side == "left":
        return x
    return (x[0] - (K.m - h), x[1])


def footing_from_ka(K: KupischSeries, side: str, h: int, x: Coord) -> Coord:
    """Inverse of footing_to_ka."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be left/right, got {side!r}")
    i, j = x
    if not (i >= 1 and j >= 1 and i + j <= h + 1):
        raise ValueError(f"{x} is not a module coordinate of height {h}")
    return x if side == "left" else (i + (K.m - h), j)


def verify_foundation_shape(gamma: ARQuiver, side: str, apex: Coord) -> bool:
    """Check on the AR quiver itself that the triangle below ``apex`` is
    complete and sealed: no external in-arrows on the left side, no
    external out-arrows on the right side.

    This is the oracle for the closed-form height rules; production
    code uses left/right_abutment_heights.
    """
    vset = set(gamma.vertices)
    if apex not in vset:
        raise ValueError(f"apex {apex} not in the quiver")
    ia, ja = apex
    triangle = {(i, j) for j in range(1, ja + 1)
                for i in range(ia, ia + ja - j + 1)}
    if not triangle <= vset:
        return False
    if side == "left":
        return all(a in triangle for (a, b) in gamma.arrows if b in triangle)
    if side == "right":
        return all(b in triangle for (a, b) in gamma.arrows if a in triangle)
    raise ValueError(f"side must be left/right, got {side!r}")


def abutment_to_json(side: str, h: int, K: KupischSeries) -> dict:
    apex = left_apex(K, h) if side == "left" else right_apex(K, h)
    return {"side": side, "height": h, "apex": [apex[0], apex[1]]}
