from fractions import Fraction

import pytest

from okounkov import polytope, toric
from okounkov.polytope import contains, minkowski_sum
from okounkov.toric import (
    Fan,
    ToricDivisor,
    ToricFlagSpec,
    divisor_polytope,
    extended_body_toric,
    flag_matrix,
    lattice_points,
    monomial_valuation,
    semigroup_body_approx,
)

F = Fraction

FIXTURE_NAMES = ("p2", "bl1p2", "bl2p2", "bl3p2", "p1xp1")


def fx(name):
    return toric.load_fixture(name)


def verts(P):
    return set(P.vertices)


# -- fan validation ---------------------------------------------------

def test_all_fixture_fans_load():
    for name in FIXTURE_NAMES:
        fan = fx(name)["fan"]
        assert fan.dim == 2


def test_non_smooth_fan_rejected():
    with pytest.raises(ValueError, match="non-smooth"):
        Fan(2, ((1, 0), (1, 2), (-1, -1)),
            ((0, 1), (1, 2), (2, 0)))


def test_incomplete_fan_rejected():
    with pytest.raises(ValueError, match="not complete"):
        Fan(2, ((1, 0), (0, 1)), ((0, 1),))


def test_unused_ray_rejected():
    with pytest.raises(ValueError, match="appear in some max cone"):
        Fan(2, ((1, 0), (0, 1), (-1, -1), (1, 1)),
            ((0, 1), (1, 2), (2, 0)))


def test_flag_sharing_ray_rejected():
    fan = fx("bl2p2")["fan"]
    flags = ToricFlagSpec(((2, 0), (2, 1)))
    with pytest.raises(ValueError, match="share a ray"):
        flags.validate(fan)


def test_flag_not_a_cone_rejected():
    fan = fx("bl1p2")["fan"]
    flags = ToricFlagSpec(((0, 1),))  # cone(e1, e2) was subdivided away
    with pytest.raises(ValueError, match="not a maximal cone"):
        flags.validate(fan)


# -- divisor polytopes ------------------------------------------------

def test_divisor_polytope_p2():
    f = fx("p2")
    P = divisor_polytope(f["fan"], f["divisors"]["O1"])
    assert verts(P) == {(0, 0), (1, 0), (0, 1)}


def test_divisor_polytope_trivial():
    f = fx("p2")
    P = divisor_polytope(f["fan"], f["divisors"]["trivial"])
    assert verts(P) == {(0, 0)}


def test_divisor_polytope_bl1_slack_inequality():
    f = fx("bl1p2")
    P = divisor_polytope(f["fan"], f["divisors"]["O1"])
    assert verts(P) == {(0, 0), (1, 0), (0, 1)}


# -- flag matrices ----------------------------------------------------

def test_flag_matrix_p2_identity():
    f = fx("p2")
    M = flag_matrix(f["fan"], f["flags"]["pt"])
    assert M == [[1, 0], [0, 1]]


def test_flag_matrix_bl1():
    f = fx("bl1p2")
    M = flag_matrix(f["fan"], f["flags"]["inf"])
    assert M == [[1, 1], [1, 0]]


def test_flag_matrix_bl2():
    f = fx("bl2p2")
    M = flag_matrix(f["fan"], f["flags"]["inf2"])
    assert M == [[1, 1], [1, 0], [-1, 0], [0, 1]]


# -- extended bodies --------------------------------------------------

def test_body_p2_o1():
    f = fx("p2")
    body = extended_body_toric(f["fan"], f["divisors"]["O1"], f["flags"]["pt"])
    assert verts(body) == {(0, 0), (1, 0), (0, 1)}


def test_body_bl1_o1():
    f = fx("bl1p2")
    body = extended_body_toric(f["fan"], f["divisors"]["O1"], f["flags"]["inf"])
    assert verts(body) == {(0, 0), (1, 1), (1, 0)}


def test_body_bl3_o1():
    f = fx("bl3p2")
    body = extended_body_toric(f["fan"], f["divisors"]["O1"], f["flags"]["inf"])
    assert verts(body) == {(0, 0), (1, 1), (1, 0)}


def test_body_p1xp1():
    f = fx("p1xp1")
    body = extended_body_toric(f["fan"], f["divisors"]["O11"], f["flags"]["pt"])
    assert verts(body) == {(0, 0), (1, 0), (0, 1), (1, 1)}


def test_body_rejects_nonzero_flag_ray_coefficient():
    f = fx("bl1p2")
    bad = ToricDivisor((1, 0, 0, 1))
    with pytest.raises(ValueError, match="unrepresented divisor"):
        extended_body_toric(f["fan"], bad, f["flags"]["inf"])


def test_homogeneity():
    for name, div in [("p2", "O1"), ("bl1p2", "O1"), ("bl3p2", "O1"),
                      ("p1xp1", "O11"), ("bl2p2", "H-E2")]:
        f = fx(name)
        flags = next(iter(f["flags"].values()))
        base = extended_body_toric(f["fan"], f["divisors"][div], flags)
        for m in (2, 3):
            scaled = extended_body_toric(
                f["fan"], f["divisors"][div].scale(m), flags
            )
            expect = polytope.affine_image(
                base, [[m if i == j else 0 for j in range(base.ambient_dim)]
                       for i in range(base.ambient_dim)]
            )
            assert verts(scaled) == verts(expect)


def test_superadditivity():
    f = fx("p2")
    b1 = extended_body_toric(f["fan"], f["divisors"]["O1"], f["flags"]["pt"])
    b2 = extended_body_toric(f["fan"], f["divisors"]["O2"], f["flags"]["pt"])
    b3 = extended_body_toric(f["fan"], f["divisors"]["O3"], f["flags"]["pt"])
    assert contains(b2, minkowski_sum(b1, b1))
    assert contains(b3, minkowski_sum(b1, b2))
    assert verts(minkowski_sum(b1, b1)) == verts(b2)


def test_projection_identity():
    # Coordinate projection of the two-flag body onto each block equals
    # the single-flag body.
    f = fx("bl2p2")
    D = f["divisors"]["H-E2"]
    both = extended_body_toric(f["fan"], D, f["flags"]["inf2"])
    pr1 = polytope.affine_image(both, [[1, 0, 0, 0], [0, 1, 0, 0]])
    pr2 = polytope.affine_image(both, [[0, 0, 1, 0], [0, 0, 0, 1]])
    one = extended_body_toric(f["fan"], D, f["flags"]["inf1"])
    two = extended_body_toric(f["fan"], D, f["flags"]["inf1b"])
    assert verts(pr1) == verts(one)
    assert verts(pr2) == verts(two)


# -- monomial valuations and sampling ---------------------------------

def test_monomial_valuation_zero():
    f = fx("bl1p2")
    v = monomial_valuation(f["fan"], f["divisors"]["O1"], f["flags"]["inf"],
                           (0, 0))
    assert v.entries == (0, 0)


def test_monomial_valuation_examples():
    f = fx("bl1p2")
    D, flags = f["divisors"]["O1"], f["flags"]["inf"]
    assert monomial_valuation(f["fan"], D, flags, (1, 0)).entries == (1, 1)
    assert monomial_valuation(f["fan"], D, flags, (0, 1)).entries == (1, 0)
    with pytest.raises(ValueError, match="outside"):
        monomial_valuation(f["fan"], D, flags, (5, 5))


def test_block_depends_only_on_own_flag():
    # Block i of the valuation vector is a function of (u, sigma_i) alone.
    f = fx("bl2p2")
    D = f["divisors"]["H-E2"]
    for u in lattice_points(divisor_polytope(f["fan"], D)):
        both = monomial_valuation(f["fan"], D, f["flags"]["inf2"], u)
        one = monomial_valuation(f["fan"], D, f["flags"]["inf1"], u)
        two = monomial_valuation(f["fan"], D, f["flags"]["inf1b"], u)
        assert both.entries[:2] == one.entries
        assert both.entries[2:] == two.entries


def test_sampler_p2_saturates_at_level_one():
    f = fx("p2")
    body = extended_body_toric(f["fan"], f["divisors"]["O1"], f["flags"]["pt"])
    approx = semigroup_body_approx(f["fan"], f["divisors"]["O1"],
                                   f["flags"]["pt"], 1)
    assert verts(approx) == verts(body)


def test_sampler_monotone_and_sandwiched():
    f = fx("bl1p2")
    D, flags = f["divisors"]["O1"], f["flags"]["inf"]
    body = extended_body_toric(f["fan"], D, flags)
    prev = None
    for m in (1, 2, 3):
        approx = semigroup_body_approx(f["fan"], D, flags, m)
        assert contains(body, approx)
        if prev is not None:
            assert contains(approx, prev)
        prev = approx
    assert verts(prev) == verts(body)


def test_sampler_trivial_divisor():
    f = fx("p2")
    approx = semigroup_body_approx(f["fan"], f["divisors"]["trivial"],
                                   f["flags"]["pt"], 3)
    assert verts(approx) == {(0, 0)}


def test_slice_lemma_bl1():
    # Cutting the infinitesimal body at nu_1 >= a equals the body of the
    # a-twisted class, translated by (a, 0), for a in the big range.
    f = fx("bl1p2")
    body = extended_body_toric(f["fan"], f["divisors"]["O1"], f["flags"]["inf"])
    cases = {
        F(0): ("O1", 1),
        F(1, 4): ("4H-E", 4),
        F(1, 2): ("2H-E", 2),
    }
    for a, (divname, k) in cases.items():
        halfs, eqs = body.halfspaces()
        cut_pts = polytope._vertices_from_constraints(
            halfs + [((F(-1), F(0)), -a)], eqs, 2
        )
        lhs = polytope.hull(cut_pts, 2)
        big = extended_body_toric(f["fan"], f["divisors"][divname],
                                  f["flags"]["inf"])
        scaled = polytope.affine_image(
            big, [[F(1, k), 0], [0, F(1, k)]], (a, 0)
        )
        assert verts(lhs) == verts(scaled)


def test_slice_lemma_bl3():
    from okounkov import linalg

    f = fx("bl3p2")
    fan = f["fan"]
    body = extended_body_toric(fan, f["divisors"]["O1"], f["flags"]["inf"])
    flag = f["flags"]["inf"].flags[0]
    for a, k in [(F(1, 4), 4), (F(1, 2), 2)]:
        # k(H - aE1) with zero coefficients on the flag rays, found by
        # twisting with a character.
        base = [k * c for c in f["divisors"]["O1"].coeffs]
        base[2] += -k * a  # subtract (k a) E1 = (k a) D_{e1+e2}
        rows = [list(map(F, fan.rays[i])) for i in flag]
        rhs = [-base[i] for i in flag]
        u = linalg.solve(rows, rhs)
        twisted = [c + linalg.dot(u, tuple(map(F, ray)))
                   for c, ray in zip(base, fan.rays)]
        D2 = toric.ToricDivisor(tuple(twisted))
        big = extended_body_toric(fan, D2, f["flags"]["inf"])
        halfs, eqs = body.halfspaces()
        cut_pts = polytope._vertices_from_constraints(
            halfs + [((F(-1), F(0)), -a)], eqs, 2
        )
        lhs = polytope.hull(cut_pts, 2)
        rhs_body = polytope.affine_image(
            big, [[F(1, k), 0], [0, F(1, k)]], (a, 0)
        )
        assert verts(lhs) == verts(rhs_body)


def test_fixture_dir_override(tmp_path, monkeypatch):
    import json
    src = toric.load_fixture("p2")
    custom = {
        "schema": 1,
        "name": "tiny",
        "fan": src["fan"].to_json(),
        "divisors": {"D": src["divisors"]["O1"].to_json()},
        "flags": {"f": src["flags"]["pt"].to_json()},
    }
    (tmp_path / "tiny.json").write_text(json.dumps(custom))
    monkeypatch.setenv("OKOUNKOV_FIXTURES", str(tmp_path))
    loaded = toric.load_fixture("tiny")
    assert loaded["fan"] == src["fan"]
    assert toric.fixture_names() == ["tiny"]
