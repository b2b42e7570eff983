"""Gluing of two Kupisch series along an abutment.

Gluing identifies a height-h left abutment of A with a height-h right
abutment of B.  At the Kupisch level this is concatenation with overlap:
the result keeps the first (len(A) - h) entries of A and all of B.  The
module category of the result decomposes accordingly: the coordinate
embedding of B-modules is the identity, that of A-modules shifts the
diagonal index by len(B) - h, and the two images overlap exactly in the
identified foundations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import abutments, ar
from .kupisch import ZERO, KupischSeries, coord_to_json


@dataclass(frozen=True)
class Glued:
    """A glued algebra with its coordinate embeddings."""

    result: KupischSeries
    h: int
    a: KupischSeries  # supplies the left abutment, forms the prefix
    b: KupischSeries  # supplies the right abutment, forms the suffix

    def phi(self, x):
        """Embed an A-module coordinate into the result."""
        if x is ZERO:
            return ZERO
        self.a.check_exists(x)
        return (x[0] + self.b.m - self.h, x[1])

    def psi(self, x):
        """Embed a B-module coordinate into the result (identity)."""
        if x is ZERO:
            return ZERO
        self.b.check_exists(x)
        return x

    def overlap(self):
        """Common image: the identified foundation inside the result."""
        return [self.psi(x)
                for x in abutments.foundation(self.b, "right", self.h)]

    def to_json(self) -> dict:
        return {
            "result": self.result.to_json(),
            "height": self.h,
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "phi": [[coord_to_json(x), coord_to_json(self.phi(x))]
                    for x in self.a.all_modules()],
            "psi": [[coord_to_json(x), coord_to_json(self.psi(x))]
                    for x in self.b.all_modules()],
        }


def glue(B: KupischSeries, A: KupischSeries, h: int) -> Glued:
    """Glue B (right abutment of height h) below A (left abutment of
    height h).  The argument order matches the quiver: A's vertices come
    first, B's last, and A's staircase tail of height h merges into B's
    initial segment."""
    if h not in abutments.left_abutment_heights(A):
        raise ValueError(f"A = {A!r} has no left abutment of height {h}")
    if h not in abutments.right_abutment_heights(B):
        raise ValueError(f"B = {B!r} has no right abutment of height {h}")
    entries = A.entries[:A.m - h] + B.entries
    return Glued(KupischSeries(entries), h, A, B)


@dataclass(frozen=True)
class GlueReport:
    ok: bool
    failure: Optional[str] = None

    def __bool__(self):
        return self.ok


def check_glue_invariants(g: Glued) -> GlueReport:
    """Structural invariants of a gluing:

    1. indecomposable count |Ind L| = |Ind A| + |Ind B| - h(h+1)/2,
    2. phi/psi are injective, jointly surjective, overlap exactly on the
       identified foundations, and carry arrows and tau to arrows and tau,
    3. max(gldim A, gldim B) <= gldim L <= gldim A + gldim B,
    4. simple projective/injective counts add up (all equal 1 here).

    Returns the first failed assertion.
    """
    A, B, L, h = g.a, g.b, g.result, g.h

    mods_a = A.all_modules()
    mods_b = B.all_modules()
    mods_l = L.all_modules()
    if len(mods_l) != len(mods_a) + len(mods_b) - h * (h + 1) // 2:
        return GlueReport(False, "indecomposable count formula")

    img_a = {g.phi(x) for x in mods_a}
    img_b = {g.psi(x) for x in mods_b}
    if len(img_a) != len(mods_a) or len(img_b) != len(mods_b):
        return GlueReport(False, "phi or psi not injective")
    if img_a | img_b != set(mods_l):
        return GlueReport(False, "phi and psi not jointly surjective")
    expected_overlap = {g.phi(x)
                        for x in abutments.foundation(A, "left", h)}
    if img_a & img_b != expected_overlap:
        return GlueReport(False, "overlap differs from identified foundations")
    if expected_overlap != set(g.overlap()):
        return GlueReport(False, "left and right foundations not identified")

    ga, gb, gl = ar.ar_quiver(A), ar.ar_quiver(B), ar.ar_quiver(L)
    arrows_l = set(gl.arrows)
    for quiv, emb in ((ga, g.phi), (gb, g.psi)):
        for (x, y) in quiv.arrows:
            if (emb(x), emb(y)) not in arrows_l:
                return GlueReport(False, f"arrow {(x, y)} not preserved")
    # arrows of L all come from a component
    lifted = {(g.phi(x), g.phi(y)) for (x, y) in ga.arrows}
    lifted |= {(g.psi(x), g.psi(y)) for (x, y) in gb.arrows}
    if lifted != arrows_l:
        return GlueReport(False, "extra arrows in the glued quiver")
    for quiv, emb in ((ga, g.phi), (gb, g.psi)):
        for x, tx in quiv.translation.items():
            if gl.translation.get(emb(x)) != emb(tx):
                return GlueReport(False, f"tau not preserved at {x}")

    da, db, dl = ar.gldim(A), ar.gldim(B), ar.gldim(L)
    if not max(da, db) <= dl <= da + db:
        return GlueReport(
            False, f"gldim bound violated: {da}, {db} vs {dl}")

    def simples(K):
        proj = sum(1 for x in K.all_modules()
                   if x[1] == 1 and K.is_projective(x))
        inj = sum(1 for x in K.all_modules()
                  if x[1] == 1 and K.is_injective(x))
        return proj, inj

    sa, ta = simples(A)
    sb, tb = simples(B)
    sl, tl = simples(L)
    if (sl, tl) != (sa + sb - 1, ta + tb - 1):
        return GlueReport(False, "simple projective/injective count formula")
    return GlueReport(True)


def dispatch_check(g: Glued) -> GlueReport:
    """Translations and (co)syzygies computed componentwise agree with
    the glued algebra:

    * tau and syzygy of an A-module outside the overlap, and of any
      B-module, are computed in the component;
    * tau_inv and cosyzygy of a B-module outside the overlap, and of any
      A-module, likewise.
    """
    A, B, L = g.a, g.b, g.result
    overlap_a = set(abutments.foundation(A, "left", g.h))
    overlap_b = set(abutments.foundation(B, "right", g.h))

    for x in A.all_modules():
        if x not in overlap_a:
            if ar.tau(L, g.phi(x)) != g.phi(ar.tau(A, x)):
                return GlueReport(False, f"tau dispatch fails at phi{x}")
            if ar.syzygy(L, g.phi(x)) != g.phi(ar.syzygy(A, x)):
                return GlueReport(False, f"syzygy dispatch fails at phi{x}")
        if ar.tau_inv(L, g.phi(x)) != g.phi(ar.tau_inv(A, x)):
            return GlueReport(False, f"tau_inv dispatch fails at phi{x}")
        if ar.cosyzygy(L, g.phi(x)) != g.phi(ar.cosyzygy(A, x)):
            return GlueReport(False, f"cosyzygy dispatch fails at phi{x}")

    for x in B.all_modules():
        if ar.tau(L, g.psi(x)) != g.psi(ar.tau(B, x)):
            return GlueReport(False, f"tau dispatch fails at psi{x}")
        if ar.syzygy(L, g.psi(x)) != g.psi(ar.syzygy(B, x)):
            return GlueReport(False, f"syzygy dispatch fails at psi{x}")
        if x not in overlap_b:
            if ar.tau_inv(L, g.psi(x)) != g.psi(ar.tau_inv(B, x)):
                return GlueReport(False, f"tau_inv dispatch fails at psi{x}")
            if ar.cosyzygy(L, g.psi(x)) != g.psi(ar.cosyzygy(B, x)):
                return GlueReport(False, f"cosyzygy dispatch fails at psi{x}")
    return GlueReport(True)
