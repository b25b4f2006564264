"""Polyhedral kernel: dual cones, faces, tangent cones, Minkowski sums, fans."""

import random
from fractions import Fraction

import pytest

from cctoric.geometry import (
    Cone, cone_from_rays, cone_from_ineqs, dual_cone, zero_cone, full_cone,
    cone_product, cone_intersection, polytope_from_points, minkowski_sum,
    tangent_cone, tangent_cone_of_translated_cone, fan_from_cones, fan_validate,
    fm_feasible,
)


def C(*rays, n=2):
    return cone_from_rays(list(rays), n)


def P(*pts, n=None):
    n = n if n is not None else len(pts[0])
    return polytope_from_points(list(pts), n)


# -- dual_cone ----------------------------------------------------------------

def test_dual_of_zero_cone_is_everything():
    d = dual_cone(zero_cone(2))
    assert d.dim == 2 and not d.normals and not d.eq_normals
    assert d.contains((5, -7))


def test_dual_of_orthant_is_orthant():
    c = C((1, 0), (0, 1))
    assert dual_cone(c).key() == c.key()


def test_dual_of_skew_cone():
    c = C((2, 1), (1, 2))
    d = dual_cone(c)
    assert set(d.rays) == {(2, -1), (-1, 2)}
    # brute force: every generator pairing >= 0, each facet normal kills one ray
    for r in d.rays:
        assert all(sum(a * b for a, b in zip(r, g)) >= 0 for g in c.rays)
        assert any(sum(a * b for a, b in zip(r, g)) == 0 for g in c.rays)


def test_biduality_random_cones():
    rng = random.Random(7)
    for n in (1, 2, 3, 4):
        for _ in range(12):
            k = rng.randint(0, n + 1)
            rays = [tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(k)]
            rays = [r for r in rays if any(r)]
            c = cone_from_rays(rays, n)
            assert dual_cone(dual_cone(c)).key() == c.key()


def test_perp_is_lineality_of_dual_and_dims_add():
    rng = random.Random(11)
    for n in (2, 3, 4):
        for _ in range(10):
            k = rng.randint(1, n)
            rays = [tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(k)]
            rays = [r for r in rays if any(r)]
            c = cone_from_rays(rays, n)
            d = dual_cone(c)
            perp_dim = len(d.lin)
            span_dim = c.dim
            assert span_dim + perp_dim == n


# -- face lattice ---------------------------------------------------------------

def test_face_lattice_of_orthant():
    c = C((1, 0), (0, 1))
    faces = c.faces()
    assert len(faces) == 4
    dims = sorted(f.dim for f in faces)
    assert dims == [0, 1, 1, 2]


def test_face_lattice_of_ray():
    c = C((1, 0))
    faces = c.faces()
    assert len(faces) == 2
    assert sorted(f.dim for f in faces) == [0, 1]


def test_relint_of_skew_cone():
    c = C((2, 1), (1, 2))
    assert len(c.faces()) == 4
    assert c.relint_contains((1, 1))
    assert not c.relint_contains((2, 1))
    assert not c.relint_contains((3, 0))


# -- tangent cones --------------------------------------------------------------

def test_tangent_cone_halfline():
    p = tangent_cone_of_translated_cone((0,), cone_from_rays([(1,)], 1), (0,))
    assert p.contains((1,)) and not p.contains((-1,))


def test_tangent_cone_square_corner():
    sq = P((0, 0), (1, 0), (0, 1), (1, 1))
    t = tangent_cone(sq, (1, 1))
    assert set(t.rays) == {(-1, 0), (0, -1)}


def test_tangent_cone_interior_and_outside():
    sq = P((0, 0), (1, 0), (0, 1), (1, 1))
    t = tangent_cone(sq, (Fraction(1, 2), Fraction(1, 2)))
    assert t.dim == 2 and not t.normals
    assert tangent_cone(sq, (5, 5)) is None


def test_tangent_cone_on_facet_of_dual_cone():
    sigma = C((2, 1), (1, 2))
    sv = dual_cone(sigma)  # cone((2,-1),(-1,2))
    x = (4, -2)  # on the facet ray (2,-1)
    t = tangent_cone_of_translated_cone((0, 0), sv, x)
    # single active facet: halfplane {m : <m,(1,2)> >= 0}
    assert t.dim == 2
    assert t.normals == ((1, 2),)


def test_tangent_cone_at_vertex_is_edge_directions():
    tri = P((0, 0), (2, 0), (0, 2))
    t = tangent_cone(tri, (2, 0))
    assert set(t.rays) == {(-1, 0), (-1, 1)}


# -- minkowski sums --------------------------------------------------------------

def test_minkowski_intervals():
    a = P((0,), (1,))
    s = minkowski_sum(a, a)
    assert s.vertices == ((Fraction(0),), (Fraction(2),))


def test_minkowski_point_translates():
    tri = P((0, 0), (1, 0), (0, 1))
    pt = P((3, 4))
    s = minkowski_sum(tri, pt)
    assert s.key() == tri.translate((3, 4)).key()


def test_minkowski_simplex_dilation():
    tri = P((0, 0), (1, 0), (0, 1))
    s = minkowski_sum(tri, tri)
    assert set(s.vertices) == {(0, 0), (2, 0), (0, 2)}


def test_minkowski_commutative_associative_random():
    rng = random.Random(3)
    for n in (1, 2, 3):
        for _ in range(6):
            polys = []
            for _ in range(3):
                pts = [tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 2))
                             for _ in range(n)) for _ in range(n + 2)]
                polys.append(polytope_from_points(pts, n))
            a, b, c = polys
            assert minkowski_sum(a, b).key() == minkowski_sum(b, a).key()
            assert minkowski_sum(minkowski_sum(a, b), c).key() == \
                minkowski_sum(a, minkowski_sum(b, c)).key()
            sab = minkowski_sum(a, b)
            sums = {tuple(x + y for x, y in zip(v, w))
                    for v in a.vertices for w in b.vertices}
            assert set(sab.vertices) <= sums


# -- fans -------------------------------------------------------------------------

def test_p1_fan_valid_complete_smooth():
    fan = fan_from_cones([[(1,)], [(-1,)]], 1)
    rep = fan_validate(fan)
    assert rep["valid"] and rep["complete"] and rep["smooth"]


def test_p2_fan_valid_complete_smooth():
    fan = fan_from_cones([[(1, 0), (0, 1)], [(0, 1), (-1, -1)], [(-1, -1), (1, 0)]], 2)
    rep = fan_validate(fan)
    assert rep["valid"] and rep["complete"] and rep["smooth"]
    assert len(fan.cones) == 7  # {0} + 3 rays + 3 chambers


def test_overlapping_cones_rejected():
    c1 = cone_from_rays([(1, 0), (0, 1)], 2)
    c2 = cone_from_rays([(1, 0), (1, 2)], 2)
    from cctoric.geometry import Fan
    fan = Fan(n=2, cones=[c1, c2], maximal_cone_ids=[0, 1])
    rep = fan_validate(fan)
    assert not rep["valid"]
    assert rep["violations"]


def test_incomplete_fan_flagged():
    fan = fan_from_cones([[(1, 0), (0, 1)]], 2)
    rep = fan_validate(fan)
    assert rep["valid"] and not rep["complete"] and rep["smooth"]


# -- cone-blocking lemma (random instances) -----------------------------------------

def test_cone_blocking_lemma_random():
    rng = random.Random(19)
    checked = 0
    for _ in range(300):
        n = rng.choice((2, 3))
        rays = [tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(n)]
        rays = [r for r in rays if any(r)]
        sigma = cone_from_rays(rays, n)
        if not sigma.strongly_convex or sigma.dim < 2:
            continue
        faces = [f for f in sigma.faces() if f.dim < sigma.dim]
        tau = faces[rng.randrange(len(faces))]
        ups_rays = [tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(2)]
        upsilon = cone_from_rays([r for r in ups_rays if any(r)], n)
        if not upsilon.strongly_convex:
            continue
        meet = cone_intersection(upsilon, sigma)
        if not any(meet.key() == f.key() for f in faces):
            continue
        checked += 1
        # C = (tau^v)^int cap (-upsilon^v)^int, via strict feasibility
        constraints = [(g, 0, True) for g in tau.rays] + \
                      [(tuple(-x for x in g), 0, True) for g in upsilon.rays]
        c_nonempty = fm_feasible(constraints, n)
        if not c_nonempty:
            continue
        # closure of C, its dual, then check (-C^v) cap relint(sigma) is empty
        cl_c = cone_from_ineqs(
            [g for g in tau.rays] + [tuple(-x for x in g) for g in upsilon.rays], n)
        minus_dual = cone_from_rays([tuple(-x for x in r) for r in dual_cone(cl_c).rays],
                                    n, lin=dual_cone(cl_c).lin)
        sys_ = [(nr, 0, False) for nr in minus_dual.normals] + \
               [(e, 0, False) for e in minus_dual.eq_normals] + \
               [(tuple(-x for x in e), 0, False) for e in minus_dual.eq_normals] + \
               [(nr, 0, True) for nr in sigma.normals] + \
               [(e, 0, False) for e in sigma.eq_normals] + \
               [(tuple(-x for x in e), 0, False) for e in sigma.eq_normals]
        assert not fm_feasible(sys_, n)
    assert checked >= 20
