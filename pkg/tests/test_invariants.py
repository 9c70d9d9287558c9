from fractions import Fraction

import pytest

from okounkov import invariants, polytope, registry, toric
from okounkov.invariants import (
    bounds_sandwich,
    check_eps_eq_xi,
    conditional_non_effectivity,
    containment_bound,
    homogeneous_eps,
    irrationality_certificate,
    is_standard_form,
    nagata_check,
    nakayama_mu,
    nef_boundary_check,
    origin_criterion,
    positive_xi_criterion,
    seshadri_eps,
    slice_volume_check,
    xi_constant,
)
from okounkov.numbers import RadVal
from okounkov.polytope import contains, hull, inverted_slice_simplex
from okounkov.surface import E, H, PicClass, SurfaceModel

F = Fraction


@pytest.fixture(scope="module")
def setups():
    return {name: registry.invariant_setup(name)
            for name in registry.INVARIANT_FIXTURES}


# -- Seshadri thresholds ---------------------------------------------

def test_seshadri_values():
    assert seshadri_eps(SurfaceModel(1), H(1), [1]) == RadVal.rational(1)
    assert seshadri_eps(SurfaceModel(2), H(2), [1, 1]) == \
        RadVal.rational(F(1, 2))
    assert seshadri_eps(SurfaceModel(2), H(2), [2, 1]) == \
        RadVal.rational(F(1, 3))
    assert seshadri_eps(SurfaceModel(4), H(4), [1] * 4) == \
        RadVal.rational(F(1, 2))


def test_seshadri_rejects_non_nef():
    with pytest.raises(ValueError, match="nef"):
        seshadri_eps(SurfaceModel(1), PicClass(1, (-2,)), [1])


# -- Nakayama thresholds ---------------------------------------------

def test_nakayama_values():
    assert nakayama_mu(SurfaceModel(1), H(1)) == RadVal.rational(1)
    assert nakayama_mu(SurfaceModel(2), H(2)) == RadVal.rational(1)
    assert nakayama_mu(SurfaceModel(4), H(4)) == RadVal.rational(F(1, 2))
    # Shifted class: the walk starts inside the negative cone region.
    assert nakayama_mu(SurfaceModel(1), PicClass(1, (-2,))) == \
        RadVal.rational(3)


def test_nakayama_wall_crossing():
    # 3H on three points crosses the wall at t = 3/2 where the three lines
    # through point pairs enter the support; the walk continues to t = 2.
    model = SurfaceModel(3)
    mu = nakayama_mu(model, PicClass(3, (0, 0, 0)))
    assert mu == RadVal.rational(2)
    # independent bisection bracket on the same threshold
    from okounkov import surface

    lo, hi = F(0), F(3)
    T = PicClass(0, (-1, -1, -1))  # E1 + E2 + E3
    for _ in range(40):
        mid = (lo + hi) / 2
        if surface.vol(model, PicClass(3, (0, 0, 0)) - T.scale(mid)) > 0:
            lo = mid
        else:
            hi = mid
    assert RadVal.rational(lo) <= mu <= RadVal.rational(hi)


def test_nakayama_rejects_non_big():
    with pytest.raises(ValueError, match="big"):
        nakayama_mu(SurfaceModel(2), PicClass(1, (1, 1)))


# -- xi ---------------------------------------------------------------

def test_xi_values(setups):
    assert xi_constant(setups["bl1p2"].body, [1], 2, 1) == 1
    assert xi_constant(setups["bl2p2"].body, [1, 1], 2, 2) == F(1, 2)
    assert xi_constant(setups["bl2p2"].body, [2, 1], 2, 2) == F(1, 3)
    assert xi_constant(setups["bl2p2"].body, [1, 2], 2, 2) == F(1, 3)


def test_xi_without_origin_is_zero(setups):
    assert xi_constant(setups["bl1p2-shifted"].body, [1], 2, 1) == 0
    shifted = hull([(1, 0), (2, 0), (2, 1)], 2)
    assert xi_constant(shifted, [1], 2, 1) == 0


def test_xi_monotone_under_body_inclusion(setups):
    body = setups["bl1p2"].body
    bigger = polytope.minkowski_sum(body, body)
    assert contains(bigger, body)
    assert xi_constant(bigger, [1], 2, 1) >= xi_constant(body, [1], 2, 1)


def test_eps_eq_xi(setups):
    m1, m2 = SurfaceModel(1), SurfaceModel(2)
    combos = [
        (m1, H(1), [1], setups["bl1p2"].body),
        (m2, H(2), [1, 1], setups["bl2p2"].body),
        (m2, H(2), [2, 1], setups["bl2p2"].body),
        (m2, H(2), [1, 2], setups["bl2p2"].body),
    ]
    for model, L, w, body in combos:
        rep = check_eps_eq_xi(model, L, w, body)
        assert rep.all_pass(), rep.checks


# -- slice volumes ----------------------------------------------------

def test_slice_volume_identity(setups):
    for name in ("bl1p2", "bl2p2"):
        s = setups[name]
        rep = slice_volume_check(s.body, [1] * s.r, s.n, s.r, s.vol_x)
        assert rep.all_pass(), rep.checks
        assert rep.checks[0]["name"] == "slice-volume-identity"


def test_slice_volume_bound_nonuniform(setups):
    s = setups["bl2p2"]
    for w in ([2, 1], [1, 2], [3, 2]):
        rep = slice_volume_check(s.body, w, s.n, s.r, s.vol_x)
        assert rep.all_pass(), (w, rep.checks)
        assert rep.checks[0]["name"] == "slice-volume-upper-bound"


# -- sandwich ---------------------------------------------------------

def test_sandwich_one_point():
    rep = bounds_sandwich(SurfaceModel(1), H(1))
    assert rep.epsilon == RadVal.rational(1)
    assert rep.mu == RadVal.rational(1)
    assert rep.all_pass(), rep.checks
    # both bounds tight: L^2 = r = 1
    assert rep.lower_bound == rep.epsilon == rep.upper_bound


def test_sandwich_two_points():
    rep = bounds_sandwich(SurfaceModel(2), H(2))
    assert rep.epsilon == RadVal.rational(F(1, 2))
    assert rep.mu == RadVal.rational(1)
    assert rep.upper_bound == RadVal.rational(F(1, 2))  # tight
    assert rep.all_pass(), rep.checks


def test_sandwich_four_points():
    rep = bounds_sandwich(SurfaceModel(4), H(4))
    assert rep.epsilon == RadVal.rational(F(1, 2))
    assert rep.mu == RadVal.rational(F(1, 2))
    assert rep.all_pass(), rep.checks


def test_sandwich_conic_class_two_points():
    rep = bounds_sandwich(SurfaceModel(2), PicClass(2, (0, 0)))
    assert rep.epsilon == RadVal.rational(1)
    assert rep.mu == RadVal.rational(2)
    assert rep.upper_bound == RadVal.rational(1)  # tight
    assert rep.lower_bound == RadVal(F(-1), 2, F(2))  # 2 - sqrt(2)
    assert rep.all_pass(), rep.checks


def test_sandwich_anticanonical_degree_three_points():
    rep = bounds_sandwich(SurfaceModel(3), PicClass(3, (0, 0, 0)))
    assert rep.epsilon == RadVal.rational(F(3, 2))
    assert rep.mu == RadVal.rational(2)
    assert rep.upper_bound == RadVal.rational(F(3, 2))  # tight
    assert rep.all_pass(), rep.checks


# -- containment upper bound -----------------------------------------

def test_containment_bound(setups):
    for name in registry.INVARIANT_FIXTURES:
        s = setups[name]
        model = SurfaceModel(s.s)
        mus = [nakayama_mu(model, s.L, points=[i]).as_rational()
               for i in range(s.r)]
        bound = containment_bound(mus, s.n, s.r)
        assert contains(bound, s.body), name


# -- base-locus criteria ---------------------------------------------

def test_origin_and_xi_criteria_agree(setups):
    weight_sets = {1: ([1], [2]), 2: ([1, 1], [2, 1], [1, 2], [3, 2])}
    for name in registry.INVARIANT_FIXTURES:
        s = setups[name]
        model = SurfaceModel(s.s)
        points = list(range(s.r))
        origin = (F(0),) * (s.n * s.r)
        has_origin = contains(s.body, origin)
        assert origin_criterion(model, s.L, points) == has_origin, name
        for w in weight_sets[s.r]:
            xi = xi_constant(s.body, w, s.n, s.r)
            assert positive_xi_criterion(model, s.L, points) == (xi > 0), \
                (name, w)


# -- vertex valuativity ----------------------------------------------

def test_simplex_vertices_realized_by_monomial_valuations():
    # For rational a below the threshold, every vertex of the size-a
    # inverted simplex appears as valuation/level for a sampled monomial.
    f = toric.load_fixture("bl1p2")
    fan, D, flags = f["fan"], f["divisors"]["O1"], f["flags"]["inf"]
    for a, m_max in [(F(1, 2), 2), (F(1, 3), 3), (1, 1)]:
        simplex = inverted_slice_simplex([a], 2)
        realized = set()
        for m in range(1, m_max + 1):
            Dm = D.scale(m)
            for u in toric.lattice_points(toric.divisor_polytope(fan, Dm)):
                val = toric.monomial_valuation(fan, Dm, flags, u, level=m)
                realized.add(tuple(x / m for x in val.entries))
        for v in simplex.vertices:
            assert v in realized, (a, v)


# -- arithmetic certificates -----------------------------------------

def test_nagata():
    assert nagata_check(9, 3, [1] * 9)
    assert not nagata_check(10, 3, [1] * 10)
    assert nagata_check(5, 1, [0] * 5)


def test_nagata_homogeneous():
    for k in (1, 2, 5):
        assert nagata_check(9, 3 * k, [k] * 9)
        assert not nagata_check(10, 3 * k, [k] * 10)


def test_standard_form():
    assert is_standard_form(3, [1, 1, 1])
    assert not is_standard_form(2, [1, 1, 1])
    assert is_standard_form(5, [2, 2, 1, 1])
    assert not is_standard_form(5, [1, 2, 2])  # not sorted descending


def test_conditional_non_effectivity():
    out = conditional_non_effectivity(3, [1] * 10)
    assert out["verdict"] == "not-effective"
    assert out["assumption"].startswith("conditional")
    assert conditional_non_effectivity(2, [1, 1, 1])["verdict"] == "unknown"
    assert conditional_non_effectivity(5, [1, 1, 1])["verdict"] == "unknown"


def test_irrationality_certificate():
    out = irrationality_certificate(10, 13, [4] * 10)
    assert out["ok"] and out["eps"] == RadVal.rational(3)
    assert out["irrational"] is False
    out = irrationality_certificate(10, 10, [3] * 10)
    assert out["ok"] and out["eps"] == RadVal.sqrt(10)
    assert out["irrational"] is True
    out = irrationality_certificate(9, 13, [4] * 9)
    assert not out["ok"]
    with pytest.raises(ValueError):
        irrationality_certificate(5, 4, [1] * 5)


def test_certificates_carry_assumption_tags():
    for out in [irrationality_certificate(10, 13, [4] * 10),
                homogeneous_eps(12, 4, 1), homogeneous_eps(12, 5, 1)]:
        assert "assumption" in out and out["assumption"].startswith(
            "conditional"
        )


def test_homogeneous_eps():
    out = homogeneous_eps(12, 4, 1)
    assert out["branch"] == 1 and out["eps"] == RadVal.rational(2)
    out = homogeneous_eps(12, 5, 1)
    assert out["branch"] == 2 and out["eps_lower"] == 3
    # boundary c/d = 4/(s+4): sqrt(d^2 - s c^2) must equal d - 2c
    s, d, c = 12, 4, 1
    assert F(c, d) == F(4, s + 4)
    assert RadVal.sqrt(d * d - s * c * c) == RadVal.rational(d - 2 * c)
    with pytest.raises(ValueError):
        homogeneous_eps(5, 4, 1)


def test_nef_boundary():
    out = nef_boundary_check(3, [1] * 9)
    assert out["nef"] and out["on_boundary"]
    assert out["conditions"] == [True, True, True, True]
    out = nef_boundary_check(4, [2, 2, 2])
    assert out["nef"] and not out["on_boundary"]
    assert "note" in out
    with pytest.raises(ValueError, match="sorted"):
        nef_boundary_check(5, [1, 2])


def test_report_json():
    rep = bounds_sandwich(SurfaceModel(2), H(2))
    doc = rep.to_json()
    assert doc["assumption"] == "unconditional"
    assert doc["epsilon"] == {"coeff": "1/2", "radicand": "1"}
    assert len(doc["bounds"]) == 2
