#!/usr/bin/env python3
"""Render every 2-D fixture body to SVG.

Usage: python3 scripts/render_bodies.py [out_dir]   (default: renders/)
"""
import sys
from pathlib import Path

from okounkov import registry, render, toric


def main():
    out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "renders")
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    for name in toric.fixture_names():
        fx = toric.load_fixture(name)
        for divname, D in sorted(fx["divisors"].items()):
            for flagname, flags in sorted(fx["flags"].items()):
                try:
                    body = toric.extended_body_toric(fx["fan"], D, flags)
                except ValueError:
                    continue
                if body.ambient_dim > 2:
                    continue
                path = out_dir / f"{name}-{divname}-{flagname}.svg"
                render.render_svg(body, path)
                written.append(path)

    for name in registry.INVARIANT_FIXTURES:
        setup = registry.invariant_setup(name)
        if setup.body.ambient_dim <= 2:
            path = out_dir / f"{name}-invariant-body.svg"
            render.render_svg(setup.body, path)
            written.append(path)

    for path in written:
        print(path)


if __name__ == "__main__":
    main()
