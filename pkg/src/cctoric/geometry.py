"""Exact rational polyhedral geometry: cones, polytopes, fans.

Every object carries a double description (generators and inequalities) kept
consistent by construction, so membership, relative-interior and face tests
reduce to pairing-sign checks.  Target scale is ambient rank <= 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .qlinalg import (
    dot, vsub, vadd, vscale, primitive, sign_normalized, rank, kernel_basis,
    rref, solve, orthogonal_project, hnf_rows, is_zero_vec, hyperplane_normal,
)


class GeometryError(ValueError):
    pass


# -- Fourier-Motzkin feasibility ----------------------------------------------

def fm_feasible(constraints, nvars: int) -> bool:
    """Feasibility of a system of linear constraints.

    Each constraint is (coeffs, const, strict) meaning
    <coeffs, x> + const >= 0 (or > 0 when strict).  Exact elimination;
    intended for small systems (nvars <= ~6).
    """
    sys_ = []
    for coeffs, const, strict in constraints:
        row = tuple(Fraction(c) for c in coeffs) + (Fraction(const),)
        sys_.append((row, bool(strict)))
    for var in range(nvars):
        pos, neg, rest = [], [], []
        for row, strict in sys_:
            if row[var] > 0:
                pos.append((row, strict))
            elif row[var] < 0:
                neg.append((row, strict))
            else:
                rest.append((row, strict))
        new = rest
        for (rp, sp) in pos:
            for (rn, sn) in neg:
                comb = tuple(rp[i] * (-rn[var]) + rn[i] * rp[var]
                             for i in range(len(rp)))
                new.append((comb, sp or sn))
        seen = {}
        sys_ = []
        for row, strict in new:
            key = primitive(row) if not is_zero_vec(row) else row
            if key in seen:
                idx = seen[key]
                if strict and not sys_[idx][1]:
                    sys_[idx] = (sys_[idx][0], True)
                continue
            seen[key] = len(sys_)
            sys_.append((row, strict))
    for row, strict in sys_:
        c = row[-1]
        if strict and c <= 0:
            return False
        if not strict and c < 0:
            return False
    return True


# -- double description for cones ----------------------------------------------

def _dd_rays(ineqs, eqs, n):
    """Rays and lineality of {x : <a,x> >= 0 for a in ineqs, <e,x> = 0 for e in eqs}.

    Returns (lineality basis, extreme rays), rays canonicalized modulo the
    lineality by orthogonal projection and made primitive.
    """
    lin = [tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)]
    rays: list[tuple] = []
    tight: list[set] = []
    rows = [(tuple(Fraction(c) for c in e), True) for e in eqs] + \
           [(tuple(Fraction(c) for c in a), False) for a in ineqs]
    processed: list[tuple] = []

    def canon_ray(r, lin_basis):
        proj = orthogonal_project(r, lin_basis) if lin_basis else tuple(Fraction(0) for _ in r)
        return primitive(vsub(r, proj))

    for idx, (a, is_eq) in enumerate(rows):
        vals_lin = [dot(a, l) for l in lin]
        pivot = next((i for i, v in enumerate(vals_lin) if v != 0), None)
        if pivot is not None:
            l0 = lin[pivot]
            s = vals_lin[pivot]
            if s < 0 and not is_eq:
                l0 = vscale(-1, l0)
                s = -s
            elif is_eq and s < 0:
                pass
            new_lin = []
            for i, l in enumerate(lin):
                if i == pivot:
                    continue
                new_lin.append(vsub(l, vscale(dot(a, l) / s, l0)))
            new_rays, new_tight = [], []
            for r, t in zip(rays, tight):
                new_rays.append(vsub(r, vscale(dot(a, r) / s, l0)))
                # the adjustment makes every old ray tight on the current row
                new_tight.append(set(t) | {idx})
            lin = new_lin
            rays, tight = new_rays, new_tight
            if not is_eq:
                rays.append(l0 if dot(a, l0) > 0 else vscale(-1, l0))
                tight.append({j for j, (b, _) in enumerate(processed) if dot(b, rays[-1]) == 0})
        else:
            vals = [dot(a, r) for r in rays]
            if is_eq:
                keep_r, keep_t = [], []
                pos = [(r, t, v) for r, t, v in zip(rays, tight, vals) if v > 0]
                negs = [(r, t, v) for r, t, v in zip(rays, tight, vals) if v < 0]
                for r, t, v in zip(rays, tight, vals):
                    if v == 0:
                        keep_r.append(r)
                        keep_t.append(t | {idx})
                for rp, tp, vp in pos:
                    for rn, tn, vn in negs:
                        comb = vadd(vscale(-vn, rp), vscale(vp, rn))
                        ct = (tp & tn) | {idx}
                        keep_r.append(comb)
                        keep_t.append(ct)
                rays, tight = keep_r, keep_t
            else:
                keep_r, keep_t = [], []
                pos = [(i, v) for i, v in enumerate(vals) if v > 0]
                zer = [(i, v) for i, v in enumerate(vals) if v == 0]
                negs = [(i, v) for i, v in enumerate(vals) if v < 0]
                for i, _ in pos:
                    keep_r.append(rays[i])
                    keep_t.append(set(tight[i]))
                for i, _ in zer:
                    keep_r.append(rays[i])
                    keep_t.append(tight[i] | {idx})
                for ip, vp in pos:
                    for ineg, vn in negs:
                        common = tight[ip] & tight[ineg]
                        adjacent = True
                        for k, t in enumerate(tight):
                            if k in (ip, ineg):
                                continue
                            if common <= t:
                                adjacent = False
                                break
                        if not adjacent:
                            continue
                        comb = vadd(vscale(-vn, rays[ip]), vscale(vp, rays[ineg]))
                        keep_r.append(comb)
                        keep_t.append(common | {idx})
                rays, tight = keep_r, keep_t
        processed.append((a, is_eq))
        # canonicalize and dedupe
        canon, seen = [], {}
        for r, t in zip(rays, tight):
            c = canon_ray(r, lin)
            if is_zero_vec(c):
                continue
            if c in seen:
                tight[seen[c]] |= t
                continue
            seen[c] = len(canon)
            canon.append((c, t))
        rays = [c for c, _ in canon]
        tight = [t for _, t in canon]

    lin_basis = [primitive(l) for l in lin if not is_zero_vec(primitive(l))]
    lin_basis = [tuple(r) for r in hnf_rows([list(l) for l in lin_basis])]
    rays = sorted({canon_ray(r, [tuple(Fraction(x) for x in l) for l in lin_basis])
                   for r in rays})
    return [tuple(l) for l in lin_basis], [tuple(r) for r in rays]


@dataclass(frozen=True)
class Cone:
    """A rational polyhedral cone with both descriptions.

    rays/lin generate the cone; normals/eq_normals cut it out:
    cone = {x : <n,x> >= 0 for n in normals, <e,x> = 0 for e in eq_normals}.
    All four lists hold primitive integer vectors; rays are canonicalized
    modulo the lineality, eq_normals and lin are HNF bases.
    """
    n: int
    rays: tuple
    lin: tuple
    normals: tuple
    eq_normals: tuple

    @property
    def dim(self) -> int:
        vecs = list(self.rays) + list(self.lin)
        return rank(vecs) if vecs else 0

    @property
    def strongly_convex(self) -> bool:
        return not self.lin

    def key(self):
        return (self.n, self.rays, self.lin)

    def contains(self, x) -> bool:
        return all(dot(nr, x) >= 0 for nr in self.normals) and \
            all(dot(e, x) == 0 for e in self.eq_normals)

    def relint_contains(self, x) -> bool:
        """x in the relative interior (ambient interior when full-dim)."""
        return all(dot(nr, x) > 0 for nr in self.normals) and \
            all(dot(e, x) == 0 for e in self.eq_normals)

    def interior_contains(self, x) -> bool:
        """Ambient-topological interior; empty unless the cone is full-dim."""
        return not self.eq_normals and all(dot(nr, x) > 0 for nr in self.normals)

    def is_subset_of(self, other: "Cone") -> bool:
        return all(other.contains(r) for r in self.rays) and \
            all(other.contains(l) and other.contains(vscale(-1, l)) for l in self.lin)

    def relint_point(self):
        """A rational point in the relative interior."""
        p = tuple(Fraction(0) for _ in range(self.n))
        for r in self.rays:
            p = vadd(p, r)
        return p

    def faces(self) -> list["Cone"]:
        """All faces, including {0}+lin and the cone itself."""
        subsets = {frozenset(range(len(self.rays)))}
        frontier = [frozenset(range(len(self.rays)))]
        while frontier:
            cur = frontier.pop()
            for nr in self.normals:
                sub = frozenset(i for i in cur if dot(nr, self.rays[i]) == 0)
                if sub not in subsets:
                    subsets.add(sub)
                    frontier.append(sub)
        out = []
        for sub in sorted(subsets, key=lambda s: (len(s), sorted(s))):
            out.append(cone_from_rays([self.rays[i] for i in sub],
                                      self.n, lin=self.lin))
        return out

    def facet_cones(self) -> list["Cone"]:
        d = self.dim
        return [f for f in self.faces() if f.dim == d - 1]

    def __repr__(self):
        return f"Cone(rays={list(self.rays)}, lin={list(self.lin)})"


def cone_from_rays(rays, n: int, lin=()) -> Cone:
    """Cone generated by the given rays (+ optional lineality directions)."""
    gens = [tuple(Fraction(x) for x in r) for r in rays]
    lins = [tuple(Fraction(x) for x in l) for l in lin]
    ineq_rows = gens + lins + [vscale(-1, l) for l in lins]
    # dual description: normals of the cone = rays of the dual
    dlin, drays = _dd_rays([list(g) for g in ineq_rows], [], n) if ineq_rows \
        else ([tuple(1 if i == j else 0 for j in range(n)) for i in range(n)], [])
    # dual's rays are our facet normals; dual's lineality cuts our span
    normals = tuple(sorted(drays))
    eqn = tuple(sorted(dlin))
    # re-derive canonical generators from the inequality description
    glin, grays = _dd_rays([list(v) for v in normals], [list(e) for e in eqn], n)
    return Cone(n=n, rays=tuple(grays), lin=tuple(glin),
                normals=normals, eq_normals=eqn)


def cone_from_ineqs(normals, n: int, eqs=()) -> Cone:
    """Cone {x : <a,x> >= 0, <e,x> = 0}."""
    glin, grays = _dd_rays([list(a) for a in normals], [list(e) for e in eqs], n)
    c = cone_from_rays(grays, n, lin=glin)
    return c


def dual_cone(c: Cone) -> Cone:
    """{x : <x,v> >= 0 for all v in c}; lives on the dual side."""
    return cone_from_rays(c.normals, c.n, lin=c.eq_normals)


def zero_cone(n: int) -> Cone:
    return cone_from_rays([], n)


def full_cone(n: int) -> Cone:
    return cone_from_rays([], n,
                          lin=[tuple(1 if i == j else 0 for j in range(n))
                               for i in range(n)])


def cone_product(a: Cone, b: Cone) -> Cone:
    def pad_left(v, m):
        return tuple(v) + tuple(0 for _ in range(m))

    def pad_right(v, m):
        return tuple(0 for _ in range(m)) + tuple(v)

    rays = [pad_left(r, b.n) for r in a.rays] + [pad_right(r, a.n) for r in b.rays]
    lins = [pad_left(l, b.n) for l in a.lin] + [pad_right(l, a.n) for l in b.lin]
    return cone_from_rays(rays, a.n + b.n, lin=lins)


def cone_intersection(a: Cone, b: Cone) -> Cone:
    return cone_from_ineqs(list(a.normals) + list(b.normals), a.n,
                           eqs=list(a.eq_normals) + list(b.eq_normals))


def cone_preimage(matrix, target: Cone, n_source: int) -> Cone:
    """{v : f(v) in target} for the integer matrix f (rows = target coords)."""
    def pullback(w):
        return tuple(sum(Fraction(matrix[i][j]) * Fraction(w[i])
                         for i in range(len(matrix))) for j in range(n_source))
    return cone_from_ineqs([pullback(nr) for nr in target.normals], n_source,
                           eqs=[pullback(e) for e in target.eq_normals])


def cone_image(matrix, source: Cone) -> Cone:
    def push(v):
        return tuple(sum(Fraction(matrix[i][j]) * Fraction(v[j])
                         for j in range(len(v))) for i in range(len(matrix)))
    return cone_from_rays([push(r) for r in source.rays], len(matrix),
                          lin=[push(l) for l in source.lin])


# -- polytopes -----------------------------------------------------------------

@dataclass(frozen=True)
class Polytope:
    """A closed bounded convex rational polytope with V- and H-descriptions.

    halfspaces are (normal, offset) meaning <normal, x> >= offset (inward
    normals); equalities cut out the affine hull.
    """
    n: int
    vertices: tuple
    halfspaces: tuple
    equalities: tuple

    @property
    def dim(self) -> int:
        if not self.vertices:
            return -1
        v0 = self.vertices[0]
        return rank([vsub(v, v0) for v in self.vertices[1:]]) if len(self.vertices) > 1 else 0

    def key(self):
        return (self.n, self.vertices)

    def contains(self, x) -> bool:
        return all(dot(nr, x) >= b for nr, b in self.halfspaces) and \
            all(dot(e, x) == b for e, b in self.equalities)

    def relint_contains(self, x) -> bool:
        return all(dot(nr, x) > b for nr, b in self.halfspaces) and \
            all(dot(e, x) == b for e, b in self.equalities)

    def relint_point(self):
        k = len(self.vertices)
        acc = tuple(Fraction(0) for _ in range(self.n))
        for v in self.vertices:
            acc = vadd(acc, v)
        return vscale(Fraction(1, k), acc)

    def faces(self) -> list["Polytope"]:
        """All nonempty faces including the polytope itself (vertices=dim 0)."""
        verts = self.vertices
        tights = []
        for v in verts:
            tights.append(frozenset(i for i, (nr, b) in enumerate(self.halfspaces)
                                    if dot(nr, v) == b))
        subsets = {frozenset()}
        frontier = [frozenset()]
        while frontier:
            cur = frontier.pop()
            for i in range(len(self.halfspaces)):
                sub = cur | {i}
                vs = [v for v, t in zip(verts, tights) if sub <= t]
                if not vs:
                    continue
                closed = frozenset.intersection(*[t for v, t in zip(verts, tights) if sub <= t])
                if closed not in subsets:
                    subsets.add(closed)
                    frontier.append(closed)
        out = []
        for sub in sorted(subsets, key=lambda s: (len(s), sorted(s))):
            vs = [v for v, t in zip(verts, tights) if sub <= t]
            out.append(polytope_from_points(vs, self.n))
        # dedupe by vertex key
        seen, uniq = set(), []
        for f in out:
            if f.key() not in seen:
                seen.add(f.key())
                uniq.append(f)
        return uniq

    def edges(self) -> list["Polytope"]:
        return [f for f in self.faces() if f.dim == 1]

    def translate(self, t) -> "Polytope":
        return polytope_from_points([vadd(v, t) for v in self.vertices], self.n)

    def negate(self) -> "Polytope":
        return polytope_from_points([vscale(-1, v) for v in self.vertices], self.n)

    def linear_image(self, matrix) -> "Polytope":
        def push(v):
            return tuple(sum(Fraction(matrix[i][j]) * v[j] for j in range(self.n))
                         for i in range(len(matrix)))
        return polytope_from_points([push(v) for v in self.vertices], len(matrix))

    def __repr__(self):
        return f"Polytope(vertices={[tuple(map(str, v)) for v in self.vertices]})"


def polytope_from_points(points, n: int) -> Polytope:
    """Convex hull with exact V/H descriptions (dim <= ~4, small point sets)."""
    pts = sorted({tuple(Fraction(x) for x in p) for p in points})
    if not pts:
        raise GeometryError("empty point set")
    for p in pts:
        if len(p) != n:
            raise GeometryError("ambient rank mismatch")
    p0 = pts[0]
    dirs = [vsub(p, p0) for p in pts[1:]]
    basis_rows, _ = rref([list(d) for d in dirs]) if dirs else ([], [])
    basis = [tuple(b) for b in basis_rows]
    d = len(basis)
    # affine-hull equalities
    eq_basis = kernel_basis([list(b) for b in basis], n) if basis else \
        [tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)]
    equalities = tuple(sorted((sign_normalized(e),) +
                              (dot(sign_normalized(e), p0),) for e in eq_basis))
    if d == 0:
        return Polytope(n=n, vertices=(p0,), halfspaces=(), equalities=equalities)
    # chart coordinates on the affine hull
    gram = [[dot(a, b) for b in basis] for a in basis]

    def chart(p):
        rhs = [dot(a, vsub(p, p0)) for a in basis]
        return solve(gram, rhs)

    upts = [chart(p) for p in pts]
    inv_rows = []
    for i in range(d):
        ei = [Fraction(1 if j == i else 0) for j in range(d)]
        lam = solve(gram, ei)
        inv_rows.append(tuple(sum(lam[t] * basis[t][j] for t in range(d))
                              for j in range(n)))
    # clear denominators: all candidate enumeration in integer arithmetic
    denom = 1
    for u in upts:
        for x in u:
            denom = denom * x.denominator // _gcd_int(denom, x.denominator)
    iupts = [tuple(int(x * denom) for x in u) for u in upts]
    seen_planes = set()
    facets = {}
    for comb in combinations(range(len(iupts)), d):
        base = iupts[comb[0]]
        rows = [tuple(x - y for x, y in zip(iupts[i], base)) for i in comb[1:]]
        a = hyperplane_normal(rows, d)
        if all(x == 0 for x in a):
            continue
        b = sum(x * y for x, y in zip(a, base))
        plane = primitive(tuple(a) + (b,))
        if plane in seen_planes:
            continue
        seen_planes.add(plane)
        seen_planes.add(tuple(-x for x in plane))
        lo = hi = False
        for u in iupts:
            v = sum(x * y for x, y in zip(a, u)) - b
            if v > 0:
                hi = True
            elif v < 0:
                lo = True
            if lo and hi:
                break
        if lo and hi:
            continue
        if lo:
            a, b = tuple(-x for x in a), -b
        # back to ambient: <a, chart(x)*denom> >= b with chart affine in x
        amb = tuple(sum(Fraction(a[i]) * inv_rows[i][j] for i in range(d))
                    for j in range(n))
        off = Fraction(b, denom) + dot(amb, p0)
        key = primitive(tuple(amb) + (off,))
        facets[key] = (tuple(key[:-1]), Fraction(key[-1]))
    halves = tuple(sorted(facets.values()))
    # true vertices: tight halfspace normals span the chart
    verts = []
    for p, u in zip(pts, upts):
        tight = [nr for nr, b in halves if dot(nr, p) == b]
        tight_chart = [[dot(nr, bb) for bb in basis] for nr in tight]
        if d == 0 or (tight_chart and rank(tight_chart) == d):
            verts.append(p)
    return Polytope(n=n, vertices=tuple(sorted(verts)),
                    halfspaces=halves, equalities=equalities)


def minkowski_sum(p: Polytope, q: Polytope) -> Polytope:
    """Exact Minkowski sum of bounded polytopes."""
    if p.n != q.n:
        raise GeometryError("ambient rank mismatch")
    return polytope_from_points([vadd(a, b) for a in p.vertices for b in q.vertices],
                                p.n)


def clip_polytope(p: Polytope, normal, offset, side: int) -> Polytope | None:
    """p intersected with {<normal,x> >= offset} (side=+1), {<= } (side=-1)
    or {=} (side=0); None when empty."""
    def val(v):
        return dot(normal, v) - Fraction(offset)

    if side == 0:
        keep = [v for v in p.vertices if val(v) == 0]
        cross = []
        for e in p.edges():
            a, b = e.vertices
            va, vb = val(a), val(b)
            if va * vb < 0:
                t = va / (va - vb)
                cross.append(vadd(a, vscale(t, vsub(b, a))))
        pts = keep + cross
        return polytope_from_points(pts, p.n) if pts else None
    sgn = 1 if side > 0 else -1
    keep = [v for v in p.vertices if sgn * val(v) >= 0]
    if not keep:
        return None
    cross = []
    for e in p.edges():
        a, b = e.vertices
        va, vb = val(a), val(b)
        if va * vb < 0:
            t = va / (va - vb)
            cross.append(vadd(a, vscale(t, vsub(b, a))))
    return polytope_from_points(keep + cross, p.n)


def tangent_cone(p: Polytope, x) -> Cone | None:
    """Cone of directions {q - x : q in p} at x; None marks x outside p."""
    x = tuple(Fraction(c) for c in x)
    if not p.contains(x):
        return None
    active = [nr for nr, b in p.halfspaces if dot(nr, x) == b]
    eqs = [e for e, b in p.equalities]
    return cone_from_ineqs(active, p.n, eqs=eqs)


def tangent_cone_of_translated_cone(apex, c: Cone, x) -> Cone | None:
    """Tangent cone of the set apex + c at x (None when x is outside)."""
    y = vsub(x, apex)
    if not c.contains(y):
        return None
    active = [nr for nr in c.normals if dot(nr, y) == 0]
    return cone_from_ineqs(active, c.n, eqs=list(c.eq_normals))


# -- fans ----------------------------------------------------------------------

@dataclass
class Fan:
    """A fan in N: cones closed under faces, with a total order on the
    maximal cones fixed once and for all."""
    n: int
    cones: list
    maximal_cone_ids: list

    def __post_init__(self):
        self._index = {c.key(): i for i, c in enumerate(self.cones)}

    def cone_id(self, c: Cone) -> int | None:
        return self._index.get(c.key())

    def max_cones(self) -> list[Cone]:
        return [self.cones[i] for i in self.maximal_cone_ids]

    def contains_cone(self, c: Cone) -> bool:
        return c.key() in self._index


def fan_from_cones(generator_lists, n: int) -> Fan:
    """Build a fan from generating cones, closing under faces.

    The total order C_1..C_v on maximal cones is the input order of the
    inclusion-maximal generating cones.
    """
    given = [cone_from_rays(g, n) for g in generator_lists]
    allcones: dict = {}
    for c in given:
        for f in c.faces():
            allcones.setdefault(f.key(), f)
    cones = list(allcones.values())
    cones.sort(key=lambda c: (c.dim, c.rays))
    index = {c.key(): i for i, c in enumerate(cones)}
    maximal = []
    for c in given:
        is_max = not any(c.key() != d.key() and c.is_subset_of(d) for d in given)
        if is_max and index[c.key()] not in maximal:
            maximal.append(index[c.key()])
    return Fan(n=n, cones=cones, maximal_cone_ids=maximal)


def fan_validate(fan: Fan) -> dict:
    """Fan axioms with witnesses, plus completeness and smoothness flags."""
    report = {"valid": True, "violations": [], "complete": False, "smooth": False}

    def fail(msg):
        report["valid"] = False
        report["violations"].append(msg)

    for c in fan.cones:
        if not c.strongly_convex:
            fail(f"cone {c.rays} is not strongly convex")
    for c in fan.cones:
        for f in c.faces():
            if not fan.contains_cone(f):
                fail(f"face {f.rays} of cone {c.rays} missing from fan")
    for a, b in combinations(fan.cones, 2):
        meet = cone_intersection(a, b)
        if not (fan.contains_cone(meet)
                and any(meet.key() == f.key() for f in a.faces())
                and any(meet.key() == f.key() for f in b.faces())):
            fail(f"intersection of {a.rays} and {b.rays} is not a common face")
    # completeness: a valid fan covers N_R iff it has an n-dim cone and every
    # (n-1)-dim cone is a facet of exactly two n-dim cones
    if report["valid"] and fan.cones:
        chambers = [c for c in fan.cones if c.dim == fan.n]
        ridges = [c for c in fan.cones if c.dim == fan.n - 1]
        complete = bool(chambers)
        for r in ridges:
            count = sum(1 for c in chambers
                        if any(f.key() == r.key() for f in c.faces()))
            if count != 2:
                complete = False
                break
        report["complete"] = complete
    smooth = bool(fan.max_cones())
    for c in fan.max_cones():
        if not _extends_to_lattice_basis(c.rays, fan.n):
            smooth = False
            break
    report["smooth"] = smooth
    return report


def _extends_to_lattice_basis(rays, n: int) -> bool:
    """True when the (primitive) rays extend to a Z-basis of Z^n: full row
    rank and gcd of maximal minors equal to 1."""
    d = len(rays)
    if d == 0:
        return True
    if rank([list(r) for r in rays]) != d or d > n:
        return False
    g = 0
    for cols in combinations(range(n), d):
        sub = [[Fraction(r[c]) for c in cols] for r in rays]
        g = _gcd_int(g, abs(int(_det(sub))))
        if g == 1:
            return True
    return g == 1


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _det(m):
    m = [list(map(Fraction, row)) for row in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


