"""Extended Okounkov bodies on smooth complete toric varieties.

The exact body of a torus-invariant divisor vanishing on all flag rays is
the linear image of its lattice polytope under the flag pairing map; a
brute-force graded-semigroup sampler provides independent inner
approximations for cross-checking.
"""
from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import linalg, lp, polytope
from .linalg import Vec, dot
from .numbers import format_rat, parse_rat
from .polytope import Polytope


@dataclass(frozen=True)
class Fan:
    """Smooth complete fan: primitive rays plus maximal cones (ray index sets).

    Smoothness (each max cone a unimodular basis) and completeness (each
    codimension-1 cone shared by exactly two max cones, every ray used)
    are validated eagerly; invalid fans are rejected outright.
    """

    dim: int
    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rays = tuple(tuple(int(x) for x in r) for r in self.rays)
        cones = tuple(tuple(int(i) for i in c) for c in self.max_cones)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "max_cones", cones)
        n = self.dim
        if any(len(r) != n for r in rays):
            raise ValueError("ray dimension mismatch")
        for c in cones:
            if len(c) != n or len(set(c)) != n:
                raise ValueError(f"max cone {c} must list {n} distinct rays")
            d = linalg.det([[Fraction(x) for x in rays[i]] for i in c])
            if abs(d) != 1:
                raise ValueError(
                    f"non-smooth cone {c}: ray determinant {d} (need +-1)"
                )
        used = {i for c in cones for i in c}
        if used != set(range(len(rays))):
            raise ValueError("every ray must appear in some max cone")
        # Completeness: each facet of a max cone lies in exactly two of them.
        facet_count: dict[frozenset, int] = {}
        for c in cones:
            for facet in itertools.combinations(c, n - 1):
                key = frozenset(facet)
                facet_count[key] = facet_count.get(key, 0) + 1
        bad = {k: v for k, v in facet_count.items() if v != 2}
        if bad:
            raise ValueError(f"fan is not complete: unpaired cone facets {bad}")

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "rays": [list(r) for r in self.rays],
            "max_cones": [list(c) for c in self.max_cones],
        }

    @staticmethod
    def from_json(obj: dict) -> "Fan":
        return Fan(int(obj["dim"]),
                   tuple(tuple(r) for r in obj["rays"]),
                   tuple(tuple(c) for c in obj["max_cones"]))


@dataclass(frozen=True)
class ToricDivisor:
    """Torus-invariant divisor: one rational coefficient per ray."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", tuple(Fraction(c) for c in self.coeffs)
        )

    def scale(self, k) -> "ToricDivisor":
        k = Fraction(k)
        return ToricDivisor(tuple(k * c for c in self.coeffs))

    def to_json(self) -> dict:
        return {"coeffs": [format_rat(c) for c in self.coeffs]}

    @staticmethod
    def from_json(obj: dict) -> "ToricDivisor":
        return ToricDivisor(tuple(parse_rat(c) for c in obj["coeffs"]))


@dataclass(frozen=True)
class ToricFlagSpec:
    """Ordered flag cones: r max cones given as ordered ray-index lists.

    The cones must be pairwise disjoint as cones (checked: no shared ray,
    and no nonzero vector in two cone hulls, via exact LP).
    """

    flags: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "flags", tuple(tuple(int(i) for i in f) for f in self.flags)
        )

    @property
    def r(self) -> int:
        return len(self.flags)

    def validate(self, fan: Fan) -> None:
        cone_sets = {frozenset(c) for c in fan.max_cones}
        for f in self.flags:
            if frozenset(f) not in cone_sets:
                raise ValueError(f"flag {f} is not a maximal cone of the fan")
        for a, b in itertools.combinations(range(self.r), 2):
            fa, fb = self.flags[a], self.flags[b]
            if set(fa) & set(fb):
                raise ValueError(f"flag cones {fa} and {fb} share a ray")
            if not _cones_meet_trivially(fan, fa, fb):
                raise ValueError(
                    f"flag cones {fa} and {fb} have nontrivial intersection"
                )

    def ray_vectors(self, fan: Fan) -> list[list[Vec]]:
        return [
            [tuple(Fraction(x) for x in fan.rays[i]) for i in f]
            for f in self.flags
        ]

    def to_json(self) -> dict:
        return {"flags": [list(f) for f in self.flags]}

    @staticmethod
    def from_json(obj: dict) -> "ToricFlagSpec":
        return ToricFlagSpec(tuple(tuple(f) for f in obj["flags"]))


@dataclass(frozen=True)
class ValuationVector:
    """Flag valuation of a section monomial: block-major entries, level m."""

    entries: tuple[Fraction, ...]
    level: int

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("valuation level must be positive")
        object.__setattr__(
            self, "entries", tuple(Fraction(e) for e in self.entries)
        )


def _cones_meet_trivially(fan: Fan, ca, cb) -> bool:
    """Do cone(ca) and cone(cb) intersect only in the origin?

    Both cones are simplicial (rays linearly independent), so a nonzero
    common point exists iff sum(lam * va) = sum(mu * vb) has a solution
    with lam, mu >= 0 summing to 1.
    """
    dim = fan.dim
    cols = ([[Fraction(x) for x in fan.rays[i]] for i in ca]
            + [[-Fraction(x) for x in fan.rays[i]] for i in cb])
    A = [[cols[k][t] for k in range(len(cols))] for t in range(dim)]
    A.append([Fraction(1)] * len(cols))
    b = [Fraction(0)] * dim + [Fraction(1)]
    return lp.feasible_nonneg(A, b) is None


def divisor_polytope(fan: Fan, D: ToricDivisor) -> Polytope:
    """Lattice polytope {u : <u, ray> >= -a_ray for all rays}."""
    if len(D.coeffs) != len(fan.rays):
        raise ValueError("divisor coefficient count does not match ray count")
    halfs = [
        (tuple(-Fraction(x) for x in ray), Fraction(a))
        for ray, a in zip(fan.rays, D.coeffs)
    ]
    verts = polytope._vertices_from_constraints(halfs, [], fan.dim)
    return polytope.hull(verts, fan.dim)


def flag_matrix(fan: Fan, flags: ToricFlagSpec) -> list[list[Fraction]]:
    """(n*r) x n pairing matrix: row (i,j) is u -> <u, v_j^{(i)}>."""
    flags.validate(fan)
    rows = []
    for block in flags.ray_vectors(fan):
        for v in block:
            rows.append(list(v))
    return rows


def extended_body_toric(fan: Fan, D: ToricDivisor,
                        flags: ToricFlagSpec) -> Polytope:
    """Exact extended body: flag-pairing image of the divisor polytope.

    Requires the divisor coefficient to vanish on every flag-cone ray
    (the divisor restricts to zero on each flag chart); otherwise the
    divisor is rejected and the caller must supply a linearly equivalent
    representative with that property.
    """
    flags.validate(fan)
    for f in flags.flags:
        for i in f:
            if D.coeffs[i] != 0:
                raise ValueError(
                    f"unrepresented divisor: nonzero coefficient on flag ray "
                    f"{fan.rays[i]}; choose a linearly equivalent "
                    f"representative vanishing on all flag rays"
                )
    P = divisor_polytope(fan, D)
    return polytope.affine_image(P, flag_matrix(fan, flags))


def lattice_points(P: Polytope) -> list[tuple[int, ...]]:
    """All lattice points of a bounded polytope (bounding-box scan)."""
    if P.is_empty:
        return []
    n = P.ambient_dim
    los = []
    his = []
    for t in range(n):
        coords = [v[t] for v in P.vertices]
        lo = min(coords)
        hi = max(coords)
        los.append(lo.numerator // lo.denominator)
        his.append(-((-hi.numerator) // hi.denominator))
    halfs, eqs = P.halfspaces()
    out = []
    for pt in itertools.product(*[range(lo, hi + 1)
                                  for lo, hi in zip(los, his)]):
        v = tuple(Fraction(x) for x in pt)
        if all(dot(nrm, v) == c for nrm, c in eqs) and \
           all(dot(nrm, v) <= c for nrm, c in halfs):
            out.append(pt)
    return sorted(out)


def monomial_valuation(fan: Fan, D: ToricDivisor, flags: ToricFlagSpec,
                       u, level: int = 1) -> ValuationVector:
    """Valuation vector of the section monomial at lattice point u.

    Block (i, j) entry is a_{v_j^{(i)}} + <u, v_j^{(i)}>.
    """
    flags.validate(fan)
    uu = tuple(Fraction(x) for x in u)
    P = divisor_polytope(fan, D)
    if not polytope.contains(P, uu):
        raise ValueError(f"lattice point {u} outside the divisor polytope")
    entries = []
    for f in flags.flags:
        for i in f:
            v = tuple(Fraction(x) for x in fan.rays[i])
            entries.append(D.coeffs[i] + dot(uu, v))
    return ValuationVector(tuple(entries), level)


def semigroup_body_approx(fan: Fan, D: ToricDivisor, flags: ToricFlagSpec,
                          m_max: int) -> Polytope:
    """Inner approximation from graded-semigroup sampling up to level m_max."""
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    graded = []
    for m in range(1, m_max + 1):
        Dm = D.scale(m)
        for u in lattice_points(divisor_polytope(fan, Dm)):
            val = monomial_valuation(fan, Dm, flags, u, level=m)
            graded.append((val.entries, m))
    if not graded:
        nr = fan.dim * flags.r
        return Polytope(nr, ())
    return polytope.cone_base(graded)


# -- shipped fixtures ------------------------------------------------

_FIXTURE_DIR = Path(__file__).parent / "fixtures"


def fixture_dir() -> Path:
    override = os.environ.get("OKOUNKOV_FIXTURES")
    return Path(override) if override else _FIXTURE_DIR


def load_fixture(name: str) -> dict:
    """Load a shipped fixture: fan + named divisors + named flag specs."""
    path = fixture_dir() / f"{name}.json"
    with open(path) as fh:
        raw = json.load(fh)
    return {
        "name": raw.get("name", name),
        "fan": Fan.from_json(raw["fan"]),
        "divisors": {k: ToricDivisor.from_json(v)
                     for k, v in raw.get("divisors", {}).items()},
        "flags": {k: ToricFlagSpec.from_json(v)
                  for k, v in raw.get("flags", {}).items()},
    }


def fixture_names() -> list[str]:
    return sorted(p.stem for p in fixture_dir().glob("*.json"))
