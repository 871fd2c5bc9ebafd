#!/usr/bin/env python3
"""Walk the two-points construction step by step.

Blows up two generic points of the plane, tracks the line joining them and
the pencils through each point, contracts the joining line, and classifies
the result.  Prints a lattice report after each operation so the class
bookkeeping is visible; the end state is the quadric, minimal type
Hirzebruch(0).

Usage:
    python scripts/two_points_demo.py
"""

import sys

from surfclass.lattice import (
    BaseSurface,
    DivisorClass,
    RationalSurface,
    blow_down,
    blow_up,
    intersect,
    make_base,
)
from surfclass.minimal import classify_minimal
from surfclass.script import render_report


def track(surf, name, coords):
    return RationalSurface(
        surf.base, surf.basis, surf.gram, surf.canonical,
        surf.tracked + ((name, DivisorClass(coords)),),
    )


def show(title, surf):
    print(f"== {title}")
    print(render_report(surf))
    print()


def main() -> int:
    surf = make_base(BaseSurface.cp2())
    show("the plane", surf)

    surf = blow_up(surf)
    surf = blow_up(surf)
    surf = track(surf, "A", (1, -1, 0))   # pencil through the first point
    surf = track(surf, "B", (1, 0, -1))   # pencil through the second point
    surf = track(surf, "L", (1, -1, -1))  # line joining the two points
    show("two points blown up", surf)

    for nm in ("A", "B", "L"):
        cls = surf.tracked_class(nm)
        print(f"{nm}^2 = {intersect(surf, cls, cls)}, "
              f"{nm}.K = {intersect(surf, cls, surf.canonical)}")
    print()

    surf = blow_down(surf, "L")
    show("joining line contracted", surf)

    a = surf.tracked_class("A")
    b = surf.tracked_class("B")
    print(f"rulings: A^2 = {intersect(surf, a, a)}, "
          f"B^2 = {intersect(surf, b, b)}, A.B = {intersect(surf, a, b)}")
    print(f"minimal type: {classify_minimal(surf)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
