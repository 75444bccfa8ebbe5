import math

import pytest

import circlesweep as cs
from circlesweep.geom import INSIDE, OUTSIDE


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    from circlesweep import kernels

    kernels.warmup()


@pytest.fixture(scope="session")
def disk():
    return cs.Arrangement((cs.Circle("c0", 0, 0, 1, INSIDE),), cs.Point(0, 0))


@pytest.fixture(scope="session")
def annulus():
    return cs.Arrangement(
        (cs.Circle("c0", 0, 0, 1, INSIDE), cs.Circle("c1", 0, 0, 0.5, OUTSIDE)),
        cs.Point(0.75, 0),
    )


@pytest.fixture(scope="session")
def lens():
    return cs.Arrangement(
        (cs.Circle("c0", 0, 0, 1, INSIDE), cs.Circle("c1", 1, 0, 1, INSIDE)),
        cs.Point(0.45, 0),
    )


@pytest.fixture(scope="session")
def bite():
    """Unit circle plus a circle through two of its points, centered outside.

    The second circle's arc bites a shallow lens out of the disk; both level
    graphs are 4-vertex paths.
    """
    a1, a2 = math.radians(30), math.radians(75)
    p1 = cs.Point(math.cos(a1), math.sin(a1))
    p2 = cs.Point(math.cos(a2), math.sin(a2))
    mid = cs.Point((p1.x + p2.x) / 2, (p1.y + p2.y) / 2)
    n = math.hypot(mid.x, mid.y)
    center = cs.Point(mid.x + mid.x / n, mid.y + mid.y / n)
    radius = math.hypot(center.x - p1.x, center.y - p1.y)
    return cs.Arrangement(
        (cs.Circle("c0", 0, 0, 1, INSIDE), cs.Circle("c1", center.x, center.y, radius, OUTSIDE)),
        cs.Point(0, 0),
    )


@pytest.fixture(scope="session")
def disk_pole_moved(disk):
    """Disk plus the small circle added at its sweep-critical pole (1, 0)."""
    mp = cs.resolve_move_point(disk, "c0", 0.0)
    arr2, _ = cs.add_small_circle(disk, mp)
    return arr2


@pytest.fixture(scope="session")
def hole_base_233():
    """Disk with a floating hole whose fold sits at x=0, under the top pole."""
    return cs.Arrangement(
        (cs.Circle("c0", 0, 0, 1, INSIDE), cs.Circle("h0", -0.4, 0.3, 0.4, OUTSIDE)),
        cs.Point(0.5, -0.3),
    )


@pytest.fixture(scope="session")
def hole_base_234():
    """Two floating holes; h1's fold at x=-0.4 shares h0's top-pole fiber."""
    return cs.Arrangement(
        (
            cs.Circle("c0", 0, 0, 1, INSIDE),
            cs.Circle("h0", -0.4, 0.3, 0.4, OUTSIDE),
            cs.Circle("h1", -0.52, 0.84, 0.12, OUTSIDE),
        ),
        cs.Point(0.5, -0.3),
    )


@pytest.fixture(scope="session")
def stacked_pole_fixture():
    """Two small-circle additions on the unit circle whose folds share x=-0.65.

    The fold of the pole-centered hole and the fold of the second hole lie on
    one fiber segment, realizing the (3, 1, 1, 1) pole profile there.
    """
    disk = cs.Arrangement((cs.Circle("c0", 0, 0, 1, INSIDE),), cs.Point(0.5, 0))
    mp1 = cs.resolve_move_point(disk, "c0", math.pi)
    a1, h1 = cs.add_small_circle(disk, mp1, 0.35)
    mp2 = cs.resolve_move_point(a1, "c0", 3 * math.pi / 4)
    r2 = -0.65 - math.cos(3 * math.pi / 4)
    a2, h2 = cs.add_small_circle(a1, mp2, r2)
    return a2, h1, h2
