"""Seeded random test-instance sources.

Curves come from the boundary of a randomly grown simply connected polyomino
(grown under a contiguous-neighborhood rule so the boundary is one simple
cycle); crossing instances add a side pair on the curve and a breadth-first
red path between the two side points.  All randomness flows from the explicit
seed; identical seeds give identical outputs.
"""

from __future__ import annotations

import random
from collections import deque
from typing import List, Optional, Set, Tuple

from .errors import PreconditionViolation
from .grid import CLOSED, OPEN, EdgeSequence, GridPoint, SidePair
from .reduce import JctInstance

_RING8 = ((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1))


def _can_add(cells: Set[Tuple[int, int]], c: Tuple[int, int]) -> bool:
    """Occupied cells among the 8 neighbors must form one contiguous arc."""
    occ = [(c[0] + dx, c[1] + dy) in cells for dx, dy in _RING8]
    if not (occ[0] or occ[2] or occ[4] or occ[6]):  # needs an edge-neighbor
        return False
    transitions = sum(occ[i] != occ[(i + 1) % 8] for i in range(8))
    return transitions == 2


def _grow_polyomino(n: int, rng: random.Random, margin: int,
                    min_cells: int = 1) -> Set[Tuple[int, int]]:
    lo, hi = margin, n - 1 - margin
    span = hi - lo + 1
    min_cells = min(min_cells, span * span)
    target = rng.randint(min_cells, max(min_cells, (span * span) // 3))
    start = (rng.randint(lo, hi), rng.randint(lo, hi))
    cells = {start}
    while len(cells) < target:
        frontier = set()
        for (i, j) in cells:
            for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                c = (i + di, j + dj)
                if lo <= c[0] <= hi and lo <= c[1] <= hi and c not in cells:
                    frontier.add(c)
        candidates = sorted(c for c in frontier if _can_add(cells, c))
        if not candidates:
            break
        cells.add(rng.choice(candidates))
    return cells


def _trace_boundary(cells: Set[Tuple[int, int]], n: int) -> Optional[EdgeSequence]:
    """Directed boundary with the interior on the left (counterclockwise)."""
    hops = {}
    for (i, j) in cells:
        if (i, j - 1) not in cells:
            hops[GridPoint(i, j)] = GridPoint(i + 1, j)
        if (i + 1, j) not in cells:
            hops[GridPoint(i + 1, j)] = GridPoint(i + 1, j + 1)
        if (i, j + 1) not in cells:
            hops[GridPoint(i + 1, j + 1)] = GridPoint(i, j + 1)
        if (i - 1, j) not in cells:
            hops[GridPoint(i, j + 1)] = GridPoint(i, j)
    total = sum(((i, j - 1) not in cells) + ((i + 1, j) not in cells)
                + ((i, j + 1) not in cells) + ((i - 1, j) not in cells)
                for (i, j) in cells)
    if len(hops) != total:  # a pinch point carries two outgoing edges
        return None
    start = min(hops)
    pts = [start]
    cur = hops[start]
    while cur != start:
        pts.append(cur)
        cur = hops[cur]
    if len(pts) != total:  # boundary split into several loops
        return None
    return EdgeSequence.from_points(pts, n, CLOSED)


def gen_random_curve(n: int, seed: int, *, margin: int = 0,
                     min_cells: int = 1) -> EdgeSequence:
    """Boundary of a random simply connected polyomino, as a directed closed
    sequence; deterministic per seed.  ``margin`` keeps the curve that many
    units away from the grid border."""
    if n < 2:
        raise PreconditionViolation("n >= 2")
    if n - 2 * margin < 1:
        raise PreconditionViolation("margin leaves room for at least one cell")
    rng = random.Random(seed)
    while True:
        cells = _grow_polyomino(n, rng, margin, min_cells)
        seq = _trace_boundary(cells, n)
        if seq is not None:
            return seq


def _side_candidates(curve: EdgeSequence) -> List[GridPoint]:
    cset = curve.to_edge_set()
    n = curve.n
    out = []
    for w in sorted(curve.point_set):
        if w.y - 1 < 0 or w.y + 1 > n:
            continue
        if cset.degree((w.x, w.y - 1)) == 0 and cset.degree((w.x, w.y + 1)) == 0:
            out.append(w)
    return out


def _bfs_path(n: int, src: GridPoint, dst: GridPoint, rng: random.Random,
              forbidden: Set[GridPoint]) -> Optional[List[GridPoint]]:
    order = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    rng.shuffle(order)
    parent = {src: None}
    queue = deque([src])
    while queue:
        cur = queue.popleft()
        if cur == dst:
            path = [cur]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        for dx, dy in order:
            np = GridPoint(cur.x + dx, cur.y + dy)
            if 0 <= np.x <= n and 0 <= np.y <= n and np not in parent and np not in forbidden:
                parent[np] = cur
                queue.append(np)
    return None


def gen_crossing_instance(n: int, seed: int, *, avoid_midpoint: bool = False) -> JctInstance:
    """Random curve plus a red path between a valid different-sides pair.

    The path is found by breadth-first search and may touch the curve (the
    crossing guarantee is the point).  ``avoid_midpoint`` keeps the path off
    the side-pair midpoint whenever some path around it exists.
    Deterministic per seed.
    """
    if n < 4:
        raise PreconditionViolation("n >= 4")
    rng = random.Random(seed)
    while True:
        # a side pair needs an interior lattice point, hence at least a 2x2 block
        curve = gen_random_curve(n, rng.getrandbits(32), margin=1, min_cells=4)
        mids = _side_candidates(curve)
        if not mids:
            continue
        mid = rng.choice(mids)
        p1 = GridPoint(mid.x, mid.y - 1)
        p2 = GridPoint(mid.x, mid.y + 1)
        skip_mid = avoid_midpoint or rng.random() < 0.5
        pts = _bfs_path(n, p1, p2, rng, {mid} if skip_mid else set())
        if pts is None:
            pts = _bfs_path(n, p1, p2, rng, set())
        if pts is None or (avoid_midpoint and mid in pts):
            continue
        red = EdgeSequence.from_points(pts, n, OPEN)
        inst = JctInstance(n=n, blue=curve, red=red, sides=SidePair(p1, p2, mid))
        inst.validate()
        return inst
