"""Exact rational convex polytopes.

V-representation is primary; the H-representation (facet halfspaces plus
affine-hull equalities) is derived lazily and cached.  Volumes are measured
in the Euclidean metric induced from the ambient space, so lower-dimensional
bodies get the honest surface measure (a diagonal segment has length sqrt(2)).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg, lp
from .linalg import Vec, dot, vadd, vsub
from .numbers import RadVal, format_rat, parse_rat

Halfspace = tuple[Vec, Fraction]  # <normal, x> <= offset
Equality = tuple[Vec, Fraction]   # <normal, x> == offset


@dataclass(frozen=True)
class SliceSpec:
    """The n-dimensional weighted-diagonal subspace of R^{nr}.

    Basis vectors b_j (j = 1..n) place weight m_i at coordinate (i-1)n + j,
    i.e. b_j is the weighted sum of the j-th unit direction of every block.
    """

    n: int
    r: int
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        ws = tuple(Fraction(w) for w in self.weights)
        if len(ws) != self.r or any(w <= 0 for w in ws):
            raise ValueError("slice weights must be r positive rationals")
        object.__setattr__(self, "weights", ws)

    def basis(self) -> list[Vec]:
        out = []
        for j in range(self.n):
            b = [Fraction(0)] * (self.n * self.r)
            for i in range(self.r):
                b[i * self.n + j] = self.weights[i]
            out.append(tuple(b))
        return out

    def gram_scale(self) -> RadVal:
        """sqrt(det Gram(basis)) = (sum m_i^2)^{n/2}."""
        s = sum((w * w for w in self.weights), Fraction(0))
        return RadVal.sqrt(s ** self.n)


@dataclass
class Polytope:
    ambient_dim: int
    vertices: tuple[Vec, ...]
    meta: dict = field(default_factory=dict)
    _hrep: tuple[list[Halfspace], list[Equality]] | None = field(
        default=None, repr=False, compare=False
    )

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def __eq__(self, other):
        if not isinstance(other, Polytope):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim
                and self.vertices == other.vertices)

    # -- H-representation --------------------------------------------
    def halfspaces(self) -> tuple[list[Halfspace], list[Equality]]:
        """(facet halfspaces, affine-hull equalities); cached."""
        if self._hrep is None:
            self._hrep = _hrep_from_vertices(self.vertices, self.ambient_dim)
        return self._hrep

    def dim(self) -> int:
        """Dimension of the affine span (-1 for empty)."""
        if self.is_empty:
            return -1
        v0 = self.vertices[0]
        diffs = [list(vsub(v, v0)) for v in self.vertices[1:]]
        return linalg.rank(diffs)

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "vertices": [[format_rat(x) for x in v] for v in self.vertices],
        }

    @staticmethod
    def from_json(obj: dict) -> "Polytope":
        n = int(obj["ambient_dim"])
        verts = [tuple(parse_rat(x) for x in v) for v in obj["vertices"]]
        return hull(verts, n)


def hull(points, ambient_dim: int) -> Polytope:
    """Convex hull with irredundant, lexicographically sorted vertex list."""
    pts = []
    for p in points:
        v = tuple(Fraction(x) for x in p)
        if len(v) != ambient_dim:
            raise ValueError(
                f"point of length {len(v)} in ambient dimension {ambient_dim}"
            )
        pts.append(v)
    pts = sorted(set(pts))
    extreme = []
    for i, p in enumerate(pts):
        others = [list(q) for j, q in enumerate(pts) if j != i]
        if not others or not lp.in_convex_hull(others, list(p)):
            extreme.append(p)
    return Polytope(ambient_dim, tuple(extreme))


def cone_base(graded_points) -> Polytope:
    """Level-1 slice of the cone over graded points: hull of {p / level}."""
    pts = []
    dim = None
    for p, level in graded_points:
        level = int(level)
        if level <= 0:
            raise ValueError("levels must be positive")
        v = tuple(Fraction(x, 1) / level for x in p)
        dim = len(v) if dim is None else dim
        pts.append(v)
    if dim is None:
        raise ValueError("cone_base needs at least one graded point")
    return hull(pts, dim)


def affine_image(P: Polytope, M, t=None) -> Polytope:
    """Hull of {M v + t} over the vertices of P."""
    rows = [tuple(Fraction(x) for x in row) for row in M]
    out_dim = len(rows)
    if t is None:
        t = (Fraction(0),) * out_dim
    t = tuple(Fraction(x) for x in t)
    if P.is_empty:
        return Polytope(out_dim, ())
    if any(len(row) != P.ambient_dim for row in rows) or len(t) != out_dim:
        raise ValueError("matrix/translation shape mismatch")
    images = [vadd(tuple(dot(row, v) for row in rows), t) for v in P.vertices]
    return hull(images, out_dim)


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    if P.ambient_dim != Q.ambient_dim:
        raise ValueError("Minkowski sum of bodies in different dimensions")
    if P.is_empty or Q.is_empty:
        return Polytope(P.ambient_dim, ())
    return hull([vadd(p, q) for p in P.vertices for q in Q.vertices],
                P.ambient_dim)


def contains(outer: Polytope, inner) -> bool:
    """Exact containment of a point (sequence) or another polytope."""
    if isinstance(inner, Polytope):
        if outer.ambient_dim != inner.ambient_dim:
            raise ValueError("containment across different ambient dimensions")
        return all(contains(outer, v) for v in inner.vertices)
    pt = tuple(Fraction(x) for x in inner)
    if len(pt) != outer.ambient_dim:
        raise ValueError("containment across different ambient dimensions")
    if outer.is_empty:
        return False
    halfs, eqs = outer.halfspaces()
    return (all(dot(n, pt) == c for n, c in eqs)
            and all(dot(n, pt) <= c for n, c in halfs))


def intersect_subspace(P: Polytope, S: SliceSpec) -> tuple[Polytope, RadVal]:
    """P cut with the weighted-diagonal subspace, in slice coordinates.

    Returns the intersection expressed in coordinates w.r.t. the slice
    basis b_j, together with gram_scale = sqrt(det Gram(b)) so that
    induced-metric volume = coordinate volume * gram_scale.
    """
    if P.ambient_dim != S.n * S.r:
        raise ValueError("slice spec does not match ambient dimension")
    scale = S.gram_scale()
    if P.is_empty:
        return Polytope(S.n, ()), scale
    basis = S.basis()
    halfs, eqs = P.halfspaces()
    # Substitute x = sum_j y_j b_j into every constraint.
    sub_halfs = [(tuple(dot(n, b) for b in basis), c) for n, c in halfs]
    sub_eqs = [(tuple(dot(n, b) for b in basis), c) for n, c in eqs]
    verts = _vertices_from_constraints(sub_halfs, sub_eqs, S.n)
    return hull(verts, S.n), scale


def volume(P: Polytope) -> RadVal:
    """Volume of P inside its affine span, induced Euclidean metric."""
    if P.is_empty or len(P.vertices) == 1:
        return RadVal.rational(0)
    v0 = P.vertices[0]
    diffs = [vsub(v, v0) for v in P.vertices[1:]]
    basis = _independent_subset(diffs)
    d = len(basis)
    if d == 0:
        return RadVal.rational(0)
    coords = [_affine_coords(vsub(v, v0), basis) for v in P.vertices]
    simplices = _triangulate(coords)
    cvol = Fraction(0)
    fact = 1
    for k in range(2, d + 1):
        fact *= k
    for simplex in simplices:
        mat = [list(vsub(coords[i], coords[simplex[0]])) for i in simplex[1:]]
        cvol += abs(linalg.det(mat))
    cvol /= fact
    gram = [[dot(a, b) for b in basis] for a in basis]
    return RadVal.sqrt(linalg.det(gram)) * cvol


def inverted_slice_simplex(xi, n: int) -> Polytope:
    """Hull of 0 and the partial sums of the weighted block directions.

    The k-th nonzero generator puts weight xi_i on coordinates
    (i-1)n + 1 .. (i-1)n + k of every block i.
    """
    xs = [Fraction(x) for x in xi]
    if any(x < 0 for x in xs):
        raise ValueError("negative slice-simplex size")
    if n < 1 or not xs:
        raise ValueError("need n >= 1 and r >= 1")
    r = len(xs)
    pts = [(Fraction(0),) * (n * r)]
    for k in range(1, n + 1):
        p = [Fraction(0)] * (n * r)
        for i in range(r):
            for j in range(k):
                p[i * n + j] = xs[i]
        pts.append(tuple(p))
    return hull(pts, n * r)


# -- internal helpers ------------------------------------------------

def _independent_subset(vectors: list[Vec]) -> list[Vec]:
    """Greedy maximal linearly independent subset (first-come order)."""
    chosen: list[Vec] = []
    for v in vectors:
        if linalg.rank([list(u) for u in chosen] + [list(v)]) > len(chosen):
            chosen.append(v)
    return chosen


def _affine_coords(x: Vec, basis: list[Vec]) -> Vec:
    """Coordinates of x in span(basis) via the normal equations."""
    gram = [[dot(a, b) for b in basis] for a in basis]
    rhs = [dot(a, x) for a in basis]
    y = linalg.solve(gram, rhs)
    if y is None:
        raise ValueError("point outside the affine span")
    # The normal equations always solve; verify x really lies in the span.
    recon = tuple(
        sum((y[k] * basis[k][t] for k in range(len(basis))), Fraction(0))
        for t in range(len(x))
    )
    if recon != tuple(x):
        raise ValueError("point outside the affine span")
    return y


def _hrep_from_vertices(vertices, ambient_dim):
    """Facet halfspaces + affine-hull equalities of a vertex set."""
    if not vertices:
        # Canonical infeasible system.
        zero = (Fraction(0),) * ambient_dim
        return [(zero, Fraction(-1))], []
    v0 = vertices[0]
    diffs = [vsub(v, v0) for v in vertices[1:]]
    basis = _independent_subset(diffs)
    d = len(basis)
    # Equalities: normals orthogonal to the span.
    normals = linalg.nullspace([list(b) for b in basis], ambient_dim)
    eqs = [(linalg.primitive(nrm), dot(linalg.primitive(nrm), v0))
           for nrm in normals]
    if d == 0:
        return [], eqs
    coords = [_affine_coords(vsub(v, v0), basis) for v in vertices]
    facets_local = _facets(coords)
    # Pull each local halfspace h.y <= c back through y = L(x - v0),
    # where L solves Gram(basis) L = basis-matrix (normal equations).
    gram = [[dot(a, b) for b in basis] for a in basis]
    halfs = []
    for h, c in facets_local:
        # Row functional: y_h(x) = h . y = (G^{-1} B (x - v0)) . h = w.(x-v0)
        lam = linalg.solve(gram, list(h))
        w = tuple(
            sum((lam[k] * basis[k][t] for k in range(d)), Fraction(0))
            for t in range(ambient_dim)
        )
        offset = c + dot(w, v0)
        n_prim = linalg.primitive(w)
        scale = next(
            (w[t] / n_prim[t] for t in range(ambient_dim) if n_prim[t] != 0),
            None,
        )
        if scale is None:
            continue
        if scale < 0:
            n_prim = tuple(-x for x in n_prim)
            scale = -scale
        halfs.append((n_prim, offset / scale))
    halfs = sorted(set(halfs))
    return halfs, eqs


def _facets(coords: list[Vec]) -> list[Halfspace]:
    """Facet halfspaces of a full-dimensional vertex set in R^d."""
    d = len(coords[0])
    if d == 1:
        lo = min(c[0] for c in coords)
        hi = max(c[0] for c in coords)
        return [((Fraction(-1),), -lo), ((Fraction(1),), hi)]
    seen = set()
    out = []
    for subset in itertools.combinations(range(len(coords)), d):
        p0 = coords[subset[0]]
        rows = [list(vsub(coords[i], p0)) for i in subset[1:]]
        if linalg.rank(rows) != d - 1:
            continue
        nrm = linalg.nullspace(rows, d)
        if len(nrm) != 1:
            continue
        h = linalg.primitive(nrm[0])
        c = dot(h, p0)
        below = all(dot(h, q) <= c for q in coords)
        above = all(dot(h, q) >= c for q in coords)
        if below and not above:
            cand = (h, c)
        elif above and not below:
            cand = (tuple(-x for x in h), -c)
        else:
            continue
        if cand not in seen:
            seen.add(cand)
            out.append(cand)
    return out


def _triangulate(coords: list[Vec]) -> list[tuple[int, ...]]:
    """Index-tuple triangulation of a full-dimensional point set in R^d.

    Stars from the lexicographically smallest vertex over recursively
    triangulated facets.
    """
    d = len(coords[0])
    idx = list(range(len(coords)))
    return _triangulate_rec(coords, idx, d)


def _triangulate_rec(coords, idx, d) -> list[tuple[int, ...]]:
    pts = [coords[i] for i in idx]
    if d == 0 or len(idx) == d + 1:
        return [tuple(idx)]
    facets = _facets_with_members(pts)
    apex_pos = min(range(len(pts)), key=lambda i: pts[i])
    apex = idx[apex_pos]
    simplices = []
    for members, (h, c) in facets:
        if dot(h, pts[apex_pos]) == c:
            continue  # apex lies on this facet
        sub_idx = [idx[i] for i in members]
        sub_pts = [pts[i] for i in members]
        # Express the facet in its own (d-1)-dim coordinates.
        f0 = sub_pts[0]
        fbasis = _independent_subset([vsub(p, f0) for p in sub_pts[1:]])
        fcoords = [_affine_coords(vsub(p, f0), fbasis) for p in sub_pts]
        for tri in _triangulate_rec(fcoords, list(range(len(sub_idx))), d - 1):
            simplices.append(tuple(sorted((apex, *[sub_idx[t] for t in tri]))))
    return simplices


def _facets_with_members(pts: list[Vec]):
    """Facets of a full-dimensional point set, with incident point indices."""
    out = []
    for h, c in _facets(pts):
        members = [i for i, p in enumerate(pts) if dot(h, p) == c]
        out.append((members, (h, c)))
    return out


def _vertices_from_constraints(halfs, eqs, dim) -> list[Vec]:
    """Enumerate vertices of {x : eqs hold, halfs satisfied} (bounded case)."""
    eq_rows = [list(n) for n, _ in eqs]
    eq_rank = linalg.rank(eq_rows) if eq_rows else 0
    need = dim - eq_rank
    verts = []
    seen = set()
    if need < 0:
        return []
    for subset in itertools.combinations(range(len(halfs)), need):
        rows = [list(n) for n, _ in eqs] + [list(halfs[i][0]) for i in subset]
        rhs = [c for _, c in eqs] + [halfs[i][1] for i in subset]
        if linalg.rank(rows) != dim:
            continue
        x = linalg.solve(rows, rhs)
        if x is None or x in seen:
            continue
        seen.add(x)
        if (all(dot(n, x) <= c for n, c in halfs)
                and all(dot(n, x) == c for n, c in eqs)):
            verts.append(x)
    if need == 0 and not halfs:
        x = linalg.solve(eq_rows, [c for _, c in eqs])
        if x is not None:
            verts.append(x)
    return verts
