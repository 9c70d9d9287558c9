#!/usr/bin/env python3
"""Print the canonical fixture bodies and their local-positivity invariants.

Usage: python3 scripts/fixture_report.py
"""
from fractions import Fraction

from okounkov import invariants, registry, surface
from okounkov.numbers import format_rat
from okounkov.polytope import SliceSpec, intersect_subspace, volume
from okounkov.surface import SurfaceModel


def fmt_point(p):
    return "(" + ", ".join(format_rat(x) for x in p) + ")"


def main():
    weight_sets = {1: ([1], [2]), 2: ([1, 1], [2, 1], [1, 2])}
    for name in registry.INVARIANT_FIXTURES:
        fx = registry.invariant_setup(name)
        model = SurfaceModel(fx.s)
        print(f"== {name} (s={fx.s}, r={fx.r}, n={fx.n}) ==")
        print(f"  class: {fx.L!r}  vol = {format_rat(fx.vol_x)}  "
              f"nef = {fx.nef}")
        print("  body vertices:",
              ", ".join(fmt_point(v) for v in fx.body.vertices))

        if fx.nef:
            for w in weight_sets[fx.r]:
                eps = invariants.seshadri_eps(model, fx.L, w)
                xi = invariants.xi_constant(fx.body, w, fx.n, fx.r)
                print(f"  weights {tuple(w)}: eps = {eps!r}, "
                      f"xi = {format_rat(xi)}")
        mu = invariants.nakayama_mu(model, fx.L)
        print(f"  mu = {mu!r}")

        spec = SliceSpec(fx.n, fx.r, (Fraction(1),) * fx.r)
        sl, scale = intersect_subspace(fx.body, spec)
        print(f"  diagonal slice volume (induced) = "
              f"{(volume(sl) * scale)!r}")

        Z = surface.zariski(model, fx.L)
        neg = ", ".join(f"{format_rat(a)} * {c!r}"
                        for c, a in Z.negative_support) or "0"
        print(f"  zariski: P = {Z.positive!r}, N = {neg}")
        print()


if __name__ == "__main__":
    main()
