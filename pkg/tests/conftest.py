"""Shared builders and oracles for the test suite."""

from collections import deque

import pytest

from gridjct.grid import CLOSED, EdgeSequence, EdgeSet, GridPoint


def flood_components(blocked, n):
    """Independent flood-fill oracle: component id per free point of the n-grid."""
    comp = {}
    next_id = 0
    for x in range(n + 1):
        for y in range(n + 1):
            p = GridPoint(x, y)
            if p in blocked or p in comp:
                continue
            comp[p] = next_id
            queue = deque([p])
            while queue:
                cx, cy = queue.popleft()
                for nx, ny in ((cx + 1, cy), (cx - 1, cy), (cx, cy + 1), (cx, cy - 1)):
                    q = GridPoint(nx, ny)
                    if 0 <= nx <= n and 0 <= ny <= n and q not in blocked and q not in comp:
                        comp[q] = next_id
                        queue.append(q)
            next_id += 1
    return comp, next_id


def rect_points(x0, y0, x1, y1):
    """Counterclockwise boundary points of the rectangle [x0,x1] x [y0,y1]."""
    pts = []
    for x in range(x0, x1):
        pts.append((x, y0))
    for y in range(y0, y1):
        pts.append((x1, y))
    for x in range(x1, x0, -1):
        pts.append((x, y1))
    for y in range(y1, y0, -1):
        pts.append((x0, y))
    return pts


def rect_curve(x0, y0, x1, y1, n):
    return EdgeSequence.from_points(rect_points(x0, y0, x1, y1), n, CLOSED)


def rect_set(x0, y0, x1, y1, n):
    return rect_curve(x0, y0, x1, y1, n).to_edge_set()


def edge_set(pairs, n):
    return EdgeSet.of(pairs, n)


@pytest.fixture
def unit_square():
    return edge_set([((0, 0), (1, 0)), ((1, 0), (1, 1)), ((1, 1), (0, 1)), ((0, 1), (0, 0))], 4)
