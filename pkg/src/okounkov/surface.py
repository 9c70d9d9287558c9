"""Picard-lattice arithmetic on blow-ups of the projective plane.

Classes are written d*H - sum(m_i * E_i) with the intersection form
H^2 = 1, E_i^2 = -1, H.E_i = 0.  For s <= 8 general points the negative
curves are exactly the classical exceptional classes, enumerated from
C^2 = -1, C.K = -1; for s >= 9 the built-in mode refuses rather than
using a wrong cone.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg, lp, polytope
from .numbers import format_rat, parse_rat
from .polytope import Polytope

# Classical counts of exceptional classes on Bl_s(P^2), s = 1..8.
_NEG_CURVE_COUNTS = {1: 1, 2: 3, 3: 6, 4: 10, 5: 16, 6: 27, 7: 56, 8: 240}


@dataclass(frozen=True)
class PicClass:
    """The class d*H - sum(m_i * E_i)."""

    d: Fraction
    m: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "d", Fraction(self.d))
        object.__setattr__(self, "m", tuple(Fraction(x) for x in self.m))

    @property
    def s(self) -> int:
        return len(self.m)

    def __add__(self, other: "PicClass") -> "PicClass":
        return PicClass(self.d + other.d,
                        tuple(a + b for a, b in zip(self.m, other.m, strict=True)))

    def __sub__(self, other: "PicClass") -> "PicClass":
        return PicClass(self.d - other.d,
                        tuple(a - b for a, b in zip(self.m, other.m, strict=True)))

    def scale(self, k) -> "PicClass":
        k = Fraction(k)
        return PicClass(k * self.d, tuple(k * x for x in self.m))

    def is_zero(self) -> bool:
        return self.d == 0 and all(x == 0 for x in self.m)

    def to_json(self) -> dict:
        return {"d": format_rat(self.d), "m": [format_rat(x) for x in self.m]}

    @staticmethod
    def from_json(obj: dict) -> "PicClass":
        return PicClass(parse_rat(obj["d"]),
                        tuple(parse_rat(x) for x in obj["m"]))


def H(s: int) -> PicClass:
    return PicClass(1, (0,) * s)


def E(s: int, i: int) -> PicClass:
    # The exceptional class itself: 0*H - (-1)*E_i, so m_i = -1.
    m = [Fraction(0)] * s
    m[i] = Fraction(-1)
    return PicClass(0, tuple(m))


def intersect(a: PicClass, b: PicClass) -> Fraction:
    if a.s != b.s:
        raise ValueError("intersection of classes with different s")
    return a.d * b.d - sum(
        (x * y for x, y in zip(a.m, b.m)), Fraction(0)
    )


def neg_curve_classes(s: int) -> list[PicClass]:
    """Exceptional classes on Bl_s(P^2) at general points, s <= 8.

    Integral solutions of C^2 = -1, C.K = -1 (K = -3H + sum E_i) with
    d >= 0; counts are asserted against the classical table.
    """
    if not 1 <= s <= 8:
        raise ValueError(
            "unsupported generality: built-in negative-curve lists cover "
            "1 <= s <= 8 only; supply a user curve list beyond that"
        )
    out = [E(s, i) for i in range(s)]
    for d in range(1, 7):
        for m in itertools.product(range(0, 4), repeat=s):
            if sum(m) == 3 * d - 1 and sum(x * x for x in m) == d * d + 1:
                out.append(PicClass(d, tuple(Fraction(x) for x in m)))
    assert len(out) == _NEG_CURVE_COUNTS[s], (s, len(out))
    return out


@dataclass(frozen=True)
class SurfaceModel:
    s: int
    mode: str = "delpezzo-general"
    neg_curves: tuple[PicClass, ...] = field(default=())

    def __post_init__(self):
        if self.mode == "delpezzo-general":
            curves = tuple(neg_curve_classes(self.s))
        elif self.mode == "user":
            curves = tuple(self.neg_curves)
            if not all(c.s == self.s for c in curves):
                raise ValueError("user curve list has wrong s")
        else:
            raise ValueError(f"unknown surface mode {self.mode!r}")
        object.__setattr__(self, "neg_curves", curves)

    def psef_generators(self) -> list[PicClass]:
        gens = list(self.neg_curves) + [H(self.s)]
        gens += [H(self.s) - E(self.s, i) for i in range(self.s)]
        return gens

    def to_json(self) -> dict:
        out = {"s": self.s, "mode": self.mode}
        if self.mode == "user":
            out["neg_curves"] = [c.to_json() for c in self.neg_curves]
        return out

    @staticmethod
    def from_json(obj: dict) -> "SurfaceModel":
        mode = obj.get("mode", "delpezzo-general")
        curves = tuple(PicClass.from_json(c)
                       for c in obj.get("neg_curves", []))
        return SurfaceModel(int(obj["s"]), mode, curves)


@dataclass(frozen=True)
class ZariskiDecomp:
    positive: PicClass
    negative_support: tuple[tuple[PicClass, Fraction], ...]

    def negative_part(self) -> PicClass:
        n = PicClass(0, (0,) * self.positive.s)
        for c, a in self.negative_support:
            n = n + c.scale(a)
        return n

    def to_json(self) -> dict:
        return {
            "positive": self.positive.to_json(),
            "negative_support": [
                {"curve": c.to_json(), "mult": format_rat(a)}
                for c, a in self.negative_support
            ],
        }


def is_psef(model: SurfaceModel, D: PicClass) -> bool:
    """Pseudoeffectivity: membership in the cone of the effective generators."""
    gens = model.psef_generators()
    target = [D.d] + [-x for x in D.m]
    cols = [[g.d] + [-x for x in g.m] for g in gens]
    return lp.in_cone(cols, target)


def is_nef(model: SurfaceModel, D: PicClass) -> bool:
    return all(intersect(D, C) >= 0 for C in model.psef_generators())


def zariski(model: SurfaceModel, D: PicClass) -> ZariskiDecomp:
    """Zariski decomposition D = P + N by iterative support growth."""
    if not is_psef(model, D):
        raise ValueError("Zariski decomposition needs a pseudoeffective class")
    support: list[PicClass] = []
    while True:
        if support:
            gram = [[intersect(a, b) for b in support] for a in support]
            rhs = [intersect(D, c) for c in support]
            coeffs = linalg.solve(gram, rhs)
            if coeffs is None:
                raise ValueError(
                    "singular support system: the curve list is inconsistent"
                )
        else:
            coeffs = ()
        P = D
        for c, a in zip(support, coeffs):
            P = P - c.scale(a)
        new = [C for C in model.neg_curves
               if intersect(P, C) < 0 and all(C != S for S in support)]
        if not new:
            pairs = tuple(
                (c, a) for c, a in zip(support, coeffs) if a != 0
            )
            return ZariskiDecomp(P, pairs)
        support.extend(new)


def check_zariski(model: SurfaceModel, D: PicClass, Z: ZariskiDecomp) -> list[str]:
    """Return a list of violated Zariski-decomposition invariants (empty = ok)."""
    bad = []
    if not is_nef(model, Z.positive):
        bad.append("positive part not nef")
    for c, a in Z.negative_support:
        if a <= 0:
            bad.append("nonpositive multiplicity in negative part")
        if intersect(Z.positive, c) != 0:
            bad.append("positive part meets a support curve")
    recon = Z.positive + Z.negative_part()
    if not (recon - D).is_zero():
        bad.append("P + N does not reconstruct the input")
    curves = [c for c, _ in Z.negative_support]
    if curves:
        gram = [[intersect(a, b) for b in curves] for a in curves]
        for k in range(1, len(curves) + 1):
            minor = linalg.det([row[:k] for row in gram[:k]])
            if (minor > 0) != (k % 2 == 0) or minor == 0:
                bad.append("support intersection matrix not negative definite")
                break
    return bad


def is_big(model: SurfaceModel, D: PicClass) -> bool:
    if not is_psef(model, D):
        return False
    P = zariski(model, D).positive
    return intersect(P, P) > 0


def vol(model: SurfaceModel, D: PicClass) -> Fraction:
    if not is_psef(model, D):
        return Fraction(0)
    P = zariski(model, D).positive
    return intersect(P, P)


def base_loci(model: SurfaceModel, D: PicClass) -> dict:
    """Restricted and augmented base loci of a big class.

    bminus = support of the Zariski negative part; bplus additionally
    collects the model curves orthogonal to the positive part.
    """
    if not is_big(model, D):
        raise ValueError("base loci computed for big classes only")
    Z = zariski(model, D)
    bminus = [c for c, _ in Z.negative_support]
    extra = [C for C in model.neg_curves
             if intersect(Z.positive, C) == 0 and all(C != b for b in bminus)]
    return {"bminus": bminus, "bplus": bminus + extra}


def surface_body_outer(model: SurfaceModel, D: PicClass, points: list[int],
                       grid_step: Fraction, t_max: Fraction) -> Polytope:
    """Outer grid hull of the extended body for infinitesimal flags C_i = E_i.

    Flag points on each E_i are general, so the first fiber coordinate of
    block i runs over [0, P.E_i] (no negative-part correction at the flag
    point).  The body is shifted by the multiplicity of E_i in the
    negative part of D itself.  Grid points where the shifted class stops
    being pseudoeffective are skipped; when the grid hits every chamber
    vertex the hull is exact, otherwise it is an outer bound at the
    recorded resolution.
    """
    if not is_big(model, D):
        raise ValueError("surface body computed for big classes only")
    grid_step = Fraction(grid_step)
    t_max = Fraction(t_max)
    if grid_step <= 0:
        raise ValueError("grid_step must be positive")
    r = len(points)
    Z0 = zariski(model, D)
    shift = []
    for i in points:
        s_i = Fraction(0)
        for c, a in Z0.negative_support:
            # multiplicity of E_i in N = coefficient of E_i, i.e. -m_i
            s_i += a * (-c.m[i])
        shift.append(s_i)
    steps = int(t_max / grid_step)
    pts = []
    for tvec in itertools.product(range(steps + 1), repeat=r):
        t = [grid_step * k for k in tvec]
        Dt = D
        for i, ti in zip(points, t):
            Dt = Dt - E(model.s, i).scale(shift[points.index(i)] + ti)
        if not is_psef(model, Dt):
            continue
        P = zariski(model, Dt).positive
        beta = [intersect(P, E(model.s, i)) for i in points]
        # Fiber over t: nu_1 = shift + t, nu_2 in [0, beta] per block.
        for ends in itertools.product(*[(Fraction(0), b) for b in beta]):
            p = []
            for k in range(r):
                p.extend([shift[k] + t[k], ends[k]])
            pts.append(tuple(p))
    body = polytope.hull(pts, 2 * r)
    body.meta.update({
        "outer_approx": True,
        "grid_step": format_rat(grid_step),
        "t_max": format_rat(t_max),
        "flag_points": "general on each exceptional curve",
    })
    return body
