"""Auslander-Reiten combinatorics over a Kupisch series.

Everything reduces to coordinate arithmetic:

* tau(i, j) = (i-1, j) for nonprojective modules, tau_inv dually,
* the syzygy of a nonprojective (i, j) on co-diagonal s = i + j is
  (s - u(s), u(s) - j), where u(s) is the length of the projective on
  that co-diagonal,
* the cosyzygy of a noninjective (i, j) is (i + j, v(i) - j), where
  v(i) is the length of the injective on diagonal i,
* the higher translations compose n-1 (co)syzygies with tau.

The zero module absorbs every operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .kupisch import ZERO, Coord, KupischSeries, coord_to_json


def tau(K: KupischSeries, x):
    """Auslander-Reiten translate; ZERO on projectives."""
    if x is ZERO:
        return ZERO
    i, j = K.check_exists(x)
    if j == K.u(i + j):
        return ZERO
    return (i - 1, j)


def tau_inv(K: KupischSeries, x):
    """Inverse translate; ZERO on injectives."""
    if x is ZERO:
        return ZERO
    i, j = K.check_exists(x)
    if j == K.v(i):
        return ZERO
    return (i + 1, j)


def syzygy(K: KupischSeries, x):
    """Kernel of the projective cover; ZERO on projectives."""
    if x is ZERO:
        return ZERO
    i, j = K.check_exists(x)
    s = i + j
    u = K.u(s)
    if j == u:
        return ZERO
    return (s - u, u - j)


def cosyzygy(K: KupischSeries, x):
    """Cokernel of the injective envelope; ZERO on injectives."""
    if x is ZERO:
        return ZERO
    i, j = K.check_exists(x)
    v = K.v(i)
    if j == v:
        return ZERO
    return (i + j, v - j)


def syzygy_power(K: KupischSeries, k: int, x):
    for _ in range(k):
        if x is ZERO:
            return ZERO
        x = syzygy(K, x)
    return x


def cosyzygy_power(K: KupischSeries, k: int, x):
    for _ in range(k):
        if x is ZERO:
            return ZERO
        x = cosyzygy(K, x)
    return x


def tau_n(K: KupischSeries, n: int, x):
    """Higher translate: tau after n-1 syzygies."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return tau(K, syzygy_power(K, n - 1, x))


def tau_n_inv(K: KupischSeries, n: int, x):
    """Higher inverse translate: tau_inv after n-1 cosyzygies."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return tau_inv(K, cosyzygy_power(K, n - 1, x))


def tau_n_closed_lambda_mh(m: int, h: int, n: int, x: Coord,
                           direction: str) -> Optional[Coord]:
    """Closed form of the higher translate over the algebra (h^(m-h+1),
    h-1, ..., 1), bypassing the stepwise (co)syzygy chain.

    direction 'forward' needs x nonprojective, 'backward' noninjective;
    ZERO is returned when the target coordinate leaves the quiver.
    """
    from .kupisch import lambda_mh
    K = lambda_mh(m, h)
    i, j = K.check_exists(x)
    if direction == "forward":
        if K.is_projective(x):
            raise ValueError(f"{x} is projective over Lambda_({m},{h})")
        if n % 2 == 0:
            target = (i + j - (n // 2) * h - 1, h - j)
        else:
            target = (i - ((n - 1) // 2) * h - 1, j)
    elif direction == "backward":
        if K.is_injective(x):
            raise ValueError(f"{x} is injective over Lambda_({m},{h})")
        if n % 2 == 0:
            target = (i + j + ((n - 2) // 2) * h + 1, h - j)
        else:
            target = (i + ((n - 1) // 2) * h + 1, j)
    else:
        raise ValueError(f"direction must be forward/backward, got {direction!r}")
    return target if K.exists(target) else ZERO


def pd(K: KupischSeries, x) -> int:
    """Projective dimension: the largest k with a nonzero k-th syzygy."""
    K.check_exists(x)
    k = 0
    while True:
        nxt = syzygy(K, x)
        if nxt is ZERO:
            return k
        x = nxt
        k += 1


def idim(K: KupischSeries, x) -> int:
    """Injective dimension, via cosyzygies."""
    K.check_exists(x)
    k = 0
    while True:
        nxt = cosyzygy(K, x)
        if nxt is ZERO:
            return k
        x = nxt
        k += 1


def gldim(K: KupischSeries) -> int:
    """Global dimension: maximal projective dimension (always finite)."""
    memo: Dict[Coord, int] = {}

    def pd_memo(x):
        if x not in memo:
            nxt = syzygy(K, x)
            memo[x] = 0 if nxt is ZERO else 1 + pd_memo(nxt)
        return memo[x]

    return max(pd_memo(x) for x in K.all_modules())


@dataclass(frozen=True)
class ARQuiver:
    """The Auslander-Reiten quiver: vertices, irreducible-map arrows and
    the translation as a partial map on coordinates."""

    vertices: Tuple[Coord, ...]
    arrows: Tuple[Tuple[Coord, Coord], ...]
    translation: Dict[Coord, Coord]

    def predecessors(self, x: Coord) -> List[Coord]:
        return [a for (a, b) in self.arrows if b == x]

    def successors(self, x: Coord) -> List[Coord]:
        return [b for (a, b) in self.arrows if a == x]

    def to_json(self) -> dict:
        return {
            "vertices": [coord_to_json(x) for x in self.vertices],
            "arrows": [[coord_to_json(a), coord_to_json(b)]
                       for a, b in self.arrows],
            "tau": sorted([coord_to_json(x), coord_to_json(tx)]
                          for x, tx in self.translation.items()),
        }


def ar_quiver(K: KupischSeries) -> ARQuiver:
    """Arrows are (i,j) -> (i,j+1) and (i,j) -> (i+1,j-1) whenever both
    endpoints exist; the translation sends nonprojectives one step left."""
    verts = K.all_modules()
    vset = set(verts)
    arrows = []
    for (i, j) in verts:
        if (i, j + 1) in vset:
            arrows.append(((i, j), (i, j + 1)))
        if (i + 1, j - 1) in vset:
            arrows.append(((i, j), (i + 1, j - 1)))
    translation = {x: tau(K, x) for x in verts if not K.is_projective(x)}
    return ARQuiver(tuple(verts), tuple(sorted(arrows)), translation)
