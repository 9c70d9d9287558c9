"""Local-positivity invariants and arithmetic certificates.

Multi-weight Seshadri constants (nef thresholds on the blown-up model),
Nakayama constants (bigness thresholds via an exact chamber walk),
largest inverted-slice-simplex constants, slice-volume identities, the
bound sandwich, and the exact-arithmetic certificates for non-effectivity,
irrational Seshadri values, quasi-homogeneous classes, and nef boundary
classes.  All conditional outputs carry an explicit assumption tag.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import polytope, surface
from .numbers import RadVal, format_rat
from .polytope import Polytope, SliceSpec
from .surface import PicClass, SurfaceModel, E, intersect

TAG_UNCONDITIONAL = "unconditional"
TAG_NONEFF = "conditional: standard-form non-effectivity hypothesis"
TAG_NONEFF_QH = (
    "conditional: standard-form non-effectivity hypothesis (quasi-homogeneous)"
)


@dataclass
class InvariantReport:
    epsilon: RadVal | None = None
    mu: RadVal | None = None
    xi: Fraction | None = None
    lower_bound: RadVal | None = None
    upper_bound: RadVal | None = None
    assumption: str = TAG_UNCONDITIONAL
    checks: list = field(default_factory=list)

    def all_pass(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def to_json(self) -> dict:
        out = {"assumption": self.assumption, "checks": self.checks}
        if self.epsilon is not None:
            out["epsilon"] = self.epsilon.to_json()
        if self.mu is not None:
            out["mu"] = self.mu.to_json()
        if self.xi is not None:
            out["xi"] = format_rat(self.xi)
        if self.lower_bound is not None and self.upper_bound is not None:
            out["bounds"] = [self.lower_bound.to_json(),
                             self.upper_bound.to_json()]
        return out


def seshadri_eps(model: SurfaceModel, L: PicClass, w) -> RadVal:
    """Weighted Seshadri constant of a nef class: the nef threshold of
    L - a * sum(w_i E_i) over the model curve list.

    Model-exact, not variety-general: the value is the threshold over the
    built-in curve list of the blown-up model.
    """
    w = [Fraction(x) for x in w]
    if len(w) != model.s or any(x < 1 for x in w):
        raise ValueError("weights must be s positive integers (or >= 1)")
    if not surface.is_nef(model, L):
        raise ValueError("Seshadri constant defined here for nef classes")
    best = None
    for C in model.psef_generators():
        # den = sum w_i (E_i . C); only curves actually meeting the points
        # constrain the threshold.
        den = sum(
            (wi * intersect(E(model.s, i), C) for i, wi in enumerate(w)),
            Fraction(0),
        )
        if den <= 0:
            continue
        cand = intersect(L, C) / den
        if best is None or cand < best:
            best = cand
    if best is None:
        raise ValueError("no curve constrains the threshold")
    return RadVal.rational(max(best, Fraction(0)))


def _sum_E(s: int, points=None, weights=None) -> PicClass:
    pts = list(range(s)) if points is None else list(points)
    ws = [Fraction(1)] * len(pts) if weights is None else list(weights)
    total = PicClass(0, (0,) * s)
    for i, wi in zip(pts, ws):
        total = total + E(s, i).scale(wi)
    return total


def nakayama_mu(model: SurfaceModel, L: PicClass, points=None) -> RadVal:
    """Bigness threshold of L - t * sum(E_i) by an exact chamber walk.

    Within a chamber the Zariski support is constant, the positive part is
    affine in t, and the volume is a quadratic; the walk advances through
    support-change walls until the volume root falls inside the current
    chamber, and returns that root exactly (rational or quadratic surd).
    """
    if not surface.is_big(model, L):
        raise ValueError("Nakayama constant defined for big classes")
    T = _sum_E(model.s, points)
    t = Fraction(0)
    supp = [c for c, _ in surface.zariski(model, L).negative_support]
    for _ in range(10000):
        P0, P1, a0, a1 = _symbolic_zariski(model, L, T, supp)
        # Events where the chamber description stops being valid.
        t_next = None
        add_now, drop_now = [], []
        for k, C in enumerate(supp):
            if a1[k] < 0:
                cross = -a0[k] / a1[k]
                if cross <= t:
                    drop_now.append(C)
                elif t_next is None or cross < t_next:
                    t_next = cross
        outside = [C for C in model.neg_curves if all(C != S for S in supp)]
        for C in outside:
            slope = intersect(P1, C)
            if slope < 0:
                cross = -intersect(P0, C) / slope
                if cross <= t:
                    add_now.append(C)
                elif t_next is None or cross < t_next:
                    t_next = cross
        if add_now or drop_now:
            supp = [C for C in supp if all(C != D_ for D_ in drop_now)]
            supp += add_now
            continue
        # Volume quadratic q(t) = A + B t + C2 t^2 on [t, t_next].
        A = intersect(P0, P0)
        B = 2 * intersect(P0, P1)
        C2 = intersect(P1, P1)
        root = _first_root_after(A, B, C2, t)
        if root is not None and (t_next is None or root <= t_next):
            return root
        if t_next is None:
            raise ValueError(
                "chamber walk found no volume root; class may stay big"
            )
        t = t_next
    raise RuntimeError("chamber walk did not terminate")


def _symbolic_zariski(model, L, T, supp):
    """Affine-in-t Zariski data on a fixed support: P(t) = P0 + t*P1."""
    from . import linalg

    if supp:
        gram = [[intersect(a, b) for b in supp] for a in supp]
        a0 = linalg.solve(gram, [intersect(L, c) for c in supp])
        a1 = linalg.solve(gram, [-intersect(T, c) for c in supp])
        if a0 is None or a1 is None:
            raise ValueError("singular support system in chamber walk")
    else:
        a0, a1 = (), ()
    P0, P1 = L, T.scale(-1)
    for c, x, y in zip(supp, a0, a1):
        P0 = P0 - c.scale(x)
        P1 = P1 - c.scale(y)
    return P0, P1, list(a0), list(a1)


def _first_root_after(A, B, C2, t) -> RadVal | None:
    """Smallest root > t of A + B x + C2 x^2, exactly, or None."""
    if C2 == 0:
        if B == 0:
            return None
        root = Fraction(-A, 1) / B
        return RadVal.rational(root) if root > t else None
    disc = B * B - 4 * A * C2
    if disc < 0:
        return None
    sq = RadVal.sqrt(disc)
    cands = [
        (RadVal.rational(-B) - sq) / (2 * C2),
        (RadVal.rational(-B) + sq) / (2 * C2),
    ]
    good = [c for c in cands if c > t]
    if not good:
        return None
    return min(good)


def xi_constant(body: Polytope, w, n: int, r: int) -> Fraction:
    """Largest a with the inverted slice simplex of size (w_1 a, ..., w_r a)
    inside the body; 0 when the body misses the origin."""
    w = [Fraction(x) for x in w]
    if len(w) != r:
        raise ValueError("weight count must equal r")
    if body.ambient_dim != n * r:
        raise ValueError("body must live in R^(n*r)")
    origin = (Fraction(0),) * (n * r)
    if body.is_empty or not polytope.contains(body, origin):
        return Fraction(0)
    gens = polytope.inverted_slice_simplex(w, n).vertices
    gens = [g for g in gens if any(x != 0 for x in g)]
    halfs, eqs = body.halfspaces()
    for hn, _ in eqs:
        for g in gens:
            if polytope.dot(hn, g) != 0:
                return Fraction(0)
    best = None
    for hn, c in halfs:
        for g in gens:
            p = polytope.dot(hn, g)
            if p > 0:
                cand = c / p
                if best is None or cand < best:
                    best = cand
    if best is None:
        raise ValueError("unbounded body in simplex directions")
    return max(best, Fraction(0))


def check_eps_eq_xi(model: SurfaceModel, L: PicClass, w, body: Polytope,
                    n: int = 2) -> InvariantReport:
    """Cross-check that the curve-list Seshadri constant equals the
    body-side inverted-simplex constant, exactly."""
    eps = seshadri_eps(model, L, w)
    xi = xi_constant(body, w, n, len(w))
    ok = eps == RadVal.rational(xi)
    rep = InvariantReport(epsilon=eps, xi=xi)
    rep.checks.append({
        "name": "eps-equals-xi",
        "pass": bool(ok),
        "detail": f"eps={eps!r}, xi={format_rat(xi)}",
    })
    return rep


def slice_volume_check(body: Polytope, w, n: int, r: int,
                       vol_x: Fraction) -> InvariantReport:
    """Induced volume of the weighted diagonal slice against the
    sqrt(r)^(n-2)/n! * vol identity (equal weights) or the 1/2 * vol
    upper bound (general weights, surfaces)."""
    w = [Fraction(x) for x in w]
    spec = SliceSpec(n, r, tuple(w))
    sl, scale = polytope.intersect_subspace(body, spec)
    v = polytope.volume(sl) * scale
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    rep = InvariantReport()
    if all(x == w[0] for x in w) and w[0] == 1:
        target = RadVal.sqrt(Fraction(r) ** (n - 2)) * (Fraction(vol_x) / fact)
        ok = v == target
        rep.checks.append({
            "name": "slice-volume-identity",
            "pass": bool(ok),
            "detail": f"slice volume {v!r}, target {target!r}",
        })
    else:
        bound = RadVal.rational(Fraction(vol_x) / 2)
        ok = v <= bound
        rep.checks.append({
            "name": "slice-volume-upper-bound",
            "pass": bool(ok),
            "detail": f"slice volume {v!r} vs bound {bound!r}",
        })
    rep.checks[0]["slice_volume"] = v.to_json()
    return rep


def bounds_sandwich(model: SurfaceModel, L: PicClass,
                    r: int | None = None) -> InvariantReport:
    """mu - sqrt(mu^2 - L^2/r) <= eps <= L^2 / (r mu), with the equality
    clause eps = sqrt(L^2/r) iff mu = sqrt(L^2/r)."""
    r = model.s if r is None else r
    if r != model.s:
        raise ValueError("sandwich uses equal weights at all s points")
    eps = seshadri_eps(model, L, [1] * r)
    mu = nakayama_mu(model, L)
    L2 = intersect(L, L)
    upper = RadVal.rational(L2) / (mu * r)
    mu_sq = mu * mu
    arg = mu_sq - RadVal.rational(Fraction(L2, r))
    if not arg.is_rational:
        raise ValueError(
            "lower bound needs a nested radical; not representable exactly"
        )
    lower = mu - RadVal.sqrt(arg.as_rational())
    rep = InvariantReport(epsilon=eps, mu=mu,
                          lower_bound=lower, upper_bound=upper)
    rep.checks.append({
        "name": "sandwich-lower",
        "pass": bool(lower <= eps),
        "detail": f"{lower!r} <= {eps!r}",
    })
    rep.checks.append({
        "name": "sandwich-upper",
        "pass": bool(eps <= upper),
        "detail": f"{eps!r} <= {upper!r}",
    })
    target = RadVal.sqrt(Fraction(L2, r))
    rep.checks.append({
        "name": "equality-clause",
        "pass": bool((eps == target) == (mu == target)),
        "detail": f"eps tight: {eps == target}, mu tight: {mu == target}",
    })
    return rep


def containment_bound(mu_values, n: int, r: int) -> Polytope:
    """Upper-bound body r * conv(union of per-block inverted simplices of
    size max_i mu_i); every extended body is contained in it."""
    mu_max = max(Fraction(x) for x in mu_values)
    pts = [(Fraction(0),) * (n * r)]
    for i in range(r):
        for k in range(1, n + 1):
            p = [Fraction(0)] * (n * r)
            for j in range(k):
                p[i * n + j] = mu_max * r
            pts.append(tuple(p))
    return polytope.hull(pts, n * r)


def origin_criterion(model: SurfaceModel, D: PicClass, points) -> bool:
    """Predict origin membership in the extended body from the base loci:
    the origin lies in the body iff no flagged exceptional curve sits in
    the restricted base locus (the negative-part support)."""
    bl = surface.base_loci(model, D)
    flagged = [E(model.s, i) for i in points]
    return not any(any(C == Ei for Ei in flagged) for C in bl["bminus"])


def positive_xi_criterion(model: SurfaceModel, D: PicClass, points) -> bool:
    """Predict positivity of the inverted-simplex constant from the base
    loci: xi > 0 iff no flagged exceptional curve is in the negative-part
    support and no augmented-base-locus curve passes through a flag point
    (the flag points are general on their exceptional curves, so only a
    curve actually meeting E_i positively can cover them)."""
    if not origin_criterion(model, D, points):
        return False
    bl = surface.base_loci(model, D)
    flagged = [E(model.s, i) for i in points]
    exceptional = [E(model.s, j) for j in range(model.s)]
    for C in bl["bplus"]:
        if any(C == Ej for Ej in exceptional):
            # An exceptional curve meets the other flag curves (if at all)
            # only in special points, never a general flag point.
            continue
        if any(intersect(C, Ei) > 0 for Ei in flagged):
            return False
    return True


# -- exact arithmetic certificates -----------------------------------

def nagata_check(r: int, d, m) -> bool:
    """d >= (1/sqrt(r)) * sum(m), tested as r d^2 >= (sum m)^2."""
    d = Fraction(d)
    ms = [Fraction(x) for x in m]
    if any(x < 0 for x in ms):
        raise ValueError("multiplicities must be nonnegative")
    if d < 0:
        return False
    return r * d * d >= sum(ms) ** 2


def is_standard_form(d, m) -> bool:
    """m sorted descending, nonnegative, and d >= m1 + m2 + m3."""
    d = Fraction(d)
    ms = [Fraction(x) for x in m]
    while len(ms) < 3:
        ms.append(Fraction(0))
    if any(ms[i] < ms[i + 1] for i in range(len(ms) - 1)):
        return False
    if ms[-1] < 0:
        return False
    return d >= ms[0] + ms[1] + ms[2]


def conditional_non_effectivity(d, m) -> dict:
    """Conditional verdict: standard form plus negative self-intersection
    rules out effectivity under the non-effectivity hypothesis."""
    d = Fraction(d)
    ms = sorted((Fraction(x) for x in m), reverse=True)
    self_int = d * d - sum(x * x for x in ms)
    if is_standard_form(d, ms) and self_int < 0:
        return {"verdict": "not-effective", "assumption": TAG_NONEFF,
                "self_intersection": self_int}
    return {"verdict": "unknown", "assumption": TAG_UNCONDITIONAL,
            "self_intersection": self_int}


def irrationality_certificate(s: int, d, m) -> dict:
    """Certified Seshadri value sqrt(d^2 - sum m_i^2) at a general point,
    conditional on the non-effectivity hypothesis for s+1 points."""
    if s < 9:
        raise ValueError("certificate applies to s >= 9 points")
    d = Fraction(d)
    ms = [Fraction(x) for x in m]
    if len(ms) != s:
        raise ValueError("need exactly s multiplicities")
    if any(ms[i] < ms[i + 1] for i in range(s - 1)) or ms[-1] < 0:
        return {"ok": False, "failed": "multiplicities not sorted descending"}
    m1, m2, m3 = ms[0], ms[1], ms[2]
    if m1 + m2 + m3 > d:
        return {"ok": False,
                "failed": f"m1+m2+m3 = {m1+m2+m3} exceeds d = {d}"}
    if m1 + m2 == 0:
        return {"ok": False, "failed": "degenerate: m1 + m2 = 0"}
    upper = ((m1 + m2) ** 2 + sum(x * x for x in ms)) / (2 * (m1 + m2))
    if not d < upper:
        return {"ok": False,
                "failed": f"d = {d} not below the bound {upper}"}
    L2 = d * d - sum(x * x for x in ms)
    eps = RadVal.sqrt(L2)
    return {
        "ok": True,
        "eps": eps,
        "irrational": not eps.is_rational,
        "assumption": TAG_NONEFF,
    }


def homogeneous_eps(s: int, d, c) -> dict:
    """Equal-multiplicity classes d*H - c*sum(E_i), s >= 9 points.

    When c/d is at least 4/(s+4) the Seshadri constant is sqrt(d^2 - s c^2)
    (conditional); below that threshold only the lower bound d - 2c is
    certified.  Ampleness of the class is caller-asserted.
    """
    if s < 9:
        raise ValueError("quasi-homogeneous branch applies to s >= 9 points")
    d = Fraction(d)
    c = Fraction(c)
    if d <= 0:
        raise ValueError("degree must be positive")
    if c * (s + 4) >= 4 * d:
        L2 = d * d - s * c * c
        if L2 < 0:
            return {"branch": 1, "ok": False,
                    "failed": "negative self-intersection; class not ample"}
        eps = RadVal.sqrt(L2)
        return {"branch": 1, "ok": True, "eps": eps,
                "irrational": not eps.is_rational,
                "assumption": TAG_NONEFF_QH,
                "note": "ampleness caller-asserted"}
    return {"branch": 2, "ok": True, "eps_lower": d - 2 * c,
            "assumption": TAG_NONEFF_QH,
            "note": "ampleness caller-asserted"}


def nef_boundary_check(d, m) -> dict:
    """Four-condition nef criterion for classes on the zero-self-
    intersection boundary, with the radical condition tested by squaring.

    Requires multiplicities sorted descending; pads to at least 8 entries.
    """
    d = Fraction(d)
    ms = [Fraction(x) for x in m]
    if any(ms[i] < ms[i + 1] for i in range(len(ms) - 1)):
        raise ValueError("multiplicities must be sorted descending")
    while len(ms) < 8:
        ms.append(Fraction(0))
    s = len(ms)
    c1 = d >= ms[1] + ms[2]
    c2 = 2 * d >= sum(ms[1:6])
    sum_sq = sum(x * x for x in ms)
    rhs = 2 * ms[1] + sum(ms[2:8])
    c3 = rhs < 0 or 9 * sum_sq > rhs * rhs
    c4 = all(
        d * d - Fraction(t + 3, t + 2) * sum(x * x for x in ms[1:t + 1]) > 0
        for t in range(2, s)
    )
    L2 = d * d - sum_sq
    verdict = c1 and c2 and c3 and c4
    out = {
        "conditions": [bool(c1), bool(c2), bool(c3), bool(c4)],
        "nef": bool(verdict),
        "self_intersection": L2,
        "on_boundary": L2 == 0,
    }
    if verdict and L2 != 0:
        out["note"] = "criterion passes but not on the L^2 = 0 boundary"
    return out
