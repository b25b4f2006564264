"""Exact linear algebra over the rationals and over the integers.

Everything in this package computes with ``fractions.Fraction``; there is no
floating point anywhere.  Vectors are tuples, matrices are tuples of row
tuples, and large sparse differentials are dicts ``{(row, col): Fraction}``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vec = tuple[Fraction, ...]


def vec(xs) -> Vec:
    return tuple(Fraction(x) for x in xs)


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a):
    c = Fraction(c)
    return tuple(c * x for x in a)


def dot(a, b):
    # entries must be Fraction or int already; avoids Fraction() rewrapping
    s = 0
    for x, y in zip(a, b):
        s += x * y
    return s


def is_zero_vec(a) -> bool:
    return all(x == 0 for x in a)


def primitive(a) -> tuple[int, ...]:
    """Scale a rational vector by a positive rational to a primitive integer
    vector (gcd of entries 1).  Direction is preserved; the zero vector maps
    to itself."""
    fr = [Fraction(x) for x in a]
    if all(x == 0 for x in fr):
        return tuple(0 for _ in fr)
    denom = 1
    for x in fr:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints)


def sign_normalized(a) -> tuple[int, ...]:
    """Primitive vector with the first nonzero entry positive (for data with
    no preferred direction, e.g. hyperplane normals)."""
    p = primitive(a)
    for x in p:
        if x != 0:
            return p if x > 0 else tuple(-y for y in p)
    return p


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices).
    Entries must already be Fraction or int."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [inv * x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref([list(r) for r in rows])[0])


def kernel_basis(rows, ncols: int | None = None) -> list[Vec]:
    """Basis of the right kernel {x : A x = 0}."""
    rows = [list(map(Fraction, r)) for r in rows]
    if ncols is None:
        if not rows:
            raise ValueError("need ncols for an empty matrix")
        ncols = len(rows[0])
    if not rows:
        return [tuple(Fraction(1 if i == j else 0) for j in range(ncols))
                for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][fc]
        basis.append(tuple(v))
    return basis


def hyperplane_normal(rows, d):
    """Normal of the hyperplane spanned by d-1 direction rows in R^d, via
    signed maximal minors; the zero vector signals dependent rows."""
    if d == 1:
        return (Fraction(1),)
    out = []
    idx = list(range(d))
    for j in range(d):
        cols = idx[:j] + idx[j + 1:]
        sub = [[r[c] for c in cols] for r in rows]
        out.append((-1) ** j * _minor_det(sub))
    return tuple(out)


def _minor_det(m):
    k = len(m)
    if k == 0:
        return Fraction(1)
    if k == 1:
        return m[0][0]
    if k == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    det = 0
    for j in range(k):
        sub = [row[:j] + row[j + 1:] for row in m[1:]]
        det += (-1) ** j * m[0][j] * _minor_det(sub)
    return det


def solve(rows, rhs) -> Vec | None:
    """One solution of A x = b, or None if inconsistent."""
    rows = [list(map(Fraction, r)) for r in rows]
    if not rows:
        return () if all(Fraction(b) == 0 for b in rhs) else None
    ncols = len(rows[0])
    aug = [r + [Fraction(b)] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    for r in red:
        if all(x == 0 for x in r[:-1]) and r[-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        if pc == ncols:
            return None
        x[pc] = red[i][-1]
    return tuple(x)


def row_space_basis(rows) -> list[Vec]:
    red, _ = rref([list(r) for r in rows])
    return [tuple(r) for r in red]


def in_span(vectors, target) -> bool:
    if not vectors:
        return is_zero_vec(target)
    cols = list(zip(*vectors))
    return solve([list(c) for c in cols], list(target)) is not None


def orthogonal_project(v, basis) -> Vec:
    """Orthogonal projection of v onto span(basis), w.r.t. the standard
    rational inner product."""
    if not basis:
        return tuple(Fraction(0) for _ in v)
    b = row_space_basis(basis)
    gram = [[dot(x, y) for y in b] for x in b]
    rhs = [dot(x, v) for x in b]
    coeffs = solve(gram, rhs)
    out = tuple(Fraction(0) for _ in v)
    for c, x in zip(coeffs, b):
        out = vadd(out, vscale(c, x))
    return out


# -- integer lattice routines ------------------------------------------------

def hnf_rows(rows: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of an integer matrix (nonzero rows only;
    pivots positive, entries above a pivot reduced to [0, pivot))."""
    m = [list(map(int, r)) for r in rows if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            while m[i][c] != 0:
                q = m[r][c] // m[i][c]
                m[r] = [a - q * b for a, b in zip(m[r], m[i])]
                m[r], m[i] = m[i], m[r]
        if m[r][c] < 0:
            m[r] = [-a for a in m[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return [row for row in m if any(row)]


def lattice_kernel(rows: list[list[int]]) -> list[tuple[int, ...]]:
    """Basis of the integer kernel {x in Z^n : A x = 0} (a saturated
    sublattice, via the rational kernel scaled primitive + HNF)."""
    if not rows:
        raise ValueError("need at least an empty-row shape")
    ncols = len(rows[0])
    qker = kernel_basis(rows, ncols)
    prim = [primitive(v) for v in qker]
    return [tuple(r) for r in hnf_rows([list(p) for p in prim])]


def reduce_mod_lattice(v: tuple[int, ...], hnf_basis: list) -> tuple[int, ...]:
    """Canonical representative of v + L where L has the given HNF row basis."""
    out = list(map(int, v))
    for row in hnf_basis:
        c = next(i for i, x in enumerate(row) if x != 0)
        q = out[c] // row[c]
        if q:
            out = [a - q * b for a, b in zip(out, row)]
    return tuple(out)


# -- cochain complexes of rational vector spaces -----------------------------

class RatComplex:
    """A finite cochain complex of finite-dimensional Q-vector spaces.

    dims[k] is the dimension in degree k; diff[k] holds d_k : C^k -> C^{k+1}
    as a sparse dict {(row, col): Fraction}.
    """

    def __init__(self, dims: dict[int, int], diff: dict[int, dict] | None = None):
        self.dims = {k: d for k, d in dims.items() if d > 0}
        self.diff = {}
        for k, entries in (diff or {}).items():
            clean = {ij: Fraction(v) for ij, v in entries.items() if v != 0}
            if clean:
                self.diff[k] = clean

    def degrees(self):
        return sorted(set(self.dims) | set(self.diff) | {k + 1 for k in self.diff})

    def dim(self, k: int) -> int:
        return self.dims.get(k, 0)

    def check_d_squared(self):
        """Raise ValueError with a witness entry if d o d != 0."""
        for k, dk in self.diff.items():
            dk1 = self.diff.get(k + 1, {})
            if not dk1:
                continue
            acc: dict[tuple[int, int], Fraction] = {}
            for (i, j), v in dk1.items():
                for (i2, j2), w in dk.items():
                    if j == i2:
                        acc[(i, j2)] = acc.get((i, j2), Fraction(0)) + v * w
            bad = next((ij for ij, v in acc.items() if v != 0), None)
            if bad is not None:
                raise ValueError(f"d^2 != 0 at degree {k}, entry {bad}")

    def _rank(self, k: int) -> int:
        entries = self.diff.get(k)
        if not entries:
            return 0
        rows: dict[int, dict[int, Fraction]] = {}
        for (i, j), v in entries.items():
            rows.setdefault(i, {})[j] = v
        rk = 0
        rowlist = list(rows.values())
        used_cols: set[int] = set()
        while rowlist:
            rowlist.sort(key=len)
            row = rowlist.pop(0)
            piv = next((c for c in row if c not in used_cols and row[c] != 0), None)
            if piv is None:
                continue
            rk += 1
            used_cols.add(piv)
            pv = row[piv]
            for other in rowlist:
                if piv in other and other[piv] != 0:
                    f = other[piv] / pv
                    for c, v in row.items():
                        nv = other.get(c, Fraction(0)) - f * v
                        if nv == 0:
                            other.pop(c, None)
                        else:
                            other[c] = nv
            rowlist = [r for r in rowlist if r]
        return rk

    def cohomology_ranks(self) -> dict[int, int]:
        """h^k ranks by rank-nullity over Q; zero ranks omitted."""
        out = {}
        for k in self.degrees():
            n = self.dim(k)
            if n == 0:
                continue
            h = n - self._rank(k) - self._rank(k - 1)
            if h:
                out[k] = h
        return out

    def total_rank(self) -> int:
        return sum(self.cohomology_ranks().values())

    def euler(self) -> int:
        return sum((-1) ** k * d for k, d in self.dims.items())

    def is_acyclic(self) -> bool:
        return not self.cohomology_ranks()

    def dense_d(self, k: int) -> list[list[Fraction]]:
        rows = self.dim(k + 1)
        cols = self.dim(k)
        m = [[Fraction(0)] * cols for _ in range(rows)]
        for (i, j), v in self.diff.get(k, {}).items():
            m[i][j] = v
        return m

    def cohomology_basis(self, k: int) -> list[Vec]:
        """Cocycle representatives of a basis of h^k (dense; small complexes)."""
        n = self.dim(k)
        if n == 0:
            return []
        dk = self.dense_d(k)
        cycles = kernel_basis(dk, n) if self.dim(k + 1) else \
            [tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)]
        boundary = []
        if self.dim(k - 1):
            prev = self.dense_d(k - 1)
            columns = [list(c) for c in zip(*prev)] if prev and prev[0] else []
            if columns:
                boundary = [tuple(b) for b in row_space_basis(columns)]
        reps = []
        span = [list(b) for b in boundary]
        for z in cycles:
            if not in_span(span, z):
                reps.append(z)
                span.append(list(z))
        return reps
