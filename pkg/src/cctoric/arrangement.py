"""Hyperplane arrangements clipped to a box, with exact cell decompositions.

A cell is the relative interior of its closure polytope; the cells of an
arrangement partition the closed box.  Used for stalk sampling, constructible
function canonicalization, and as the base complex of the cellular oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .qlinalg import dot, primitive, vadd, vsub, vscale
from .geometry import Polytope, polytope_from_points, clip_polytope, GeometryError


def hyperplane(normal, offset):
    """Canonical (normal, offset) with primitive normal, first nonzero > 0."""
    key = primitive(tuple(normal) + (Fraction(offset),))
    for x in key:
        if x != 0:
            if x < 0:
                key = tuple(-v for v in key)
            break
    return tuple(key[:-1]), Fraction(key[-1])


@dataclass
class Cell:
    """A relatively open cell: closure polytope plus an interior sample."""
    closure: Polytope
    sample: tuple
    dim: int

    def key(self):
        return self.closure.key()


def box_polytope(lo, hi, n: int) -> Polytope:
    corners = []
    for mask in range(2 ** n):
        corners.append(tuple(Fraction(hi if (mask >> i) & 1 else lo)
                             for i in range(n)))
    return polytope_from_points(corners, n)


def bounding_box_for(points, n: int, margin=2) -> Polytope:
    lo = min((min(p) for p in points), default=Fraction(0)) - margin
    hi = max((max(p) for p in points), default=Fraction(0)) + margin
    return box_polytope(lo, hi, n)


def cells_of_arrangement(hyperplanes, box: Polytope) -> list[Cell]:
    """All cells (every dimension) of the arrangement restricted to the box."""
    n = box.n
    cells = [Cell(closure=f, sample=f.relint_point(), dim=f.dim)
             for f in box.faces()]
    for nr, off in hyperplanes:
        nxt = []
        for c in cells:
            vals = [dot(nr, v) - off for v in c.closure.vertices]
            if all(v == 0 for v in vals):
                nxt.append(c)
            elif all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
                # relint may still touch the hyperplane only when the whole
                # cell lies inside it, which the first branch caught
                nxt.append(c)
            else:
                for side in (1, -1, 0):
                    piece = clip_polytope(c.closure, nr, off, side)
                    if piece is None:
                        continue
                    if side != 0 and piece.dim != c.dim:
                        continue
                    if side == 0 and piece.dim != c.dim - 1:
                        continue
                    nxt.append(Cell(closure=piece, sample=piece.relint_point(),
                                    dim=piece.dim))
        cells = nxt
    return cells


def face_relation(cells: list[Cell]):
    """Pairs (i, j) with cell i contained in the closure of cell j, i != j."""
    rel = []
    for i, a in enumerate(cells):
        for j, b in enumerate(cells):
            if i == j or a.dim >= b.dim:
                continue
            if all(b.closure.contains(v) for v in a.closure.vertices):
                rel.append((i, j))
    return rel


def generic_point(base_point, directions, lin_directions, avoid, n,
                  require_positive=True):
    """Deterministic generic point base + sum t^i * dir_i avoiding walls.

    avoid is a list of (normal, offset) hyperplanes; walls containing the
    whole affine patch are ignored.  Powers of a shrinking rational t bound
    the denominators by the wall data.
    """
    dirs = list(directions) + list(lin_directions)
    t = Fraction(1, 2)
    for _ in range(128):
        pt = tuple(base_point)
        for i, d in enumerate(dirs):
            pt = vadd(pt, vscale(t ** (i + 1), d))
        ok = True
        for nr, off in avoid:
            val = dot(nr, pt) - off
            if val == 0:
                # wall contains the patch entirely?
                if dot(nr, base_point) == off and \
                        all(dot(nr, d) == 0 for d in dirs):
                    continue
                ok = False
                break
        if ok:
            return pt
        t = t * Fraction(2, 3)
    raise GeometryError("generic point search failed")
