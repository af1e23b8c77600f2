"""CNF families for the st-connectivity principle, plus a small validity checker.

``gen_stconn(n)`` encodes edge-set colorings: each corner has exactly one
edge of its color, every other node has per-color degree 0 or 2 and may not
touch both colors.  ``gen_stseq(n)`` encodes indexed edge sequences: one
variable per (edge, color, position), positions chain into a simple path
from corner to corner, and the two colors share no grid point.  Both are
negations of tautologies, hence unsatisfiable; dropping the cross-color
clauses makes them satisfiable with models that decode to genuine crossing
configurations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .errors import GridJctError, InvalidInstance, PreconditionViolation
from .grid import (
    DirectedEdge,
    Edge,
    EdgeSequence,
    EdgeSet,
    GridPoint,
)

BLUE, RED = "blue", "red"
EXHAUSTIVE, DPLL = "exhaustive", "dpll"
_EXHAUSTIVE_CAP = 26


class VarRole(NamedTuple):
    family: str  # "stconn" | "stseq"
    color: str
    edge: Edge
    position: Optional[int]  # 1-based sequence slot; None for stconn

    def describe(self) -> str:
        e = f"({self.edge.a.x},{self.edge.a.y})-({self.edge.b.x},{self.edge.b.y})"
        if self.position is None:
            return f"{self.color} edge {e}"
        return f"{self.color} edge {e} at position {self.position}"


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple
    var_map: dict
    meta: dict = field(default_factory=dict)

    def validate(self) -> "CnfFormula":
        for i, clause in enumerate(self.clauses):
            if not clause:
                raise InvalidInstance(f"empty clause at index {i}")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise InvalidInstance(f"bad literal {lit} in clause {i}")
        return self


def edge_slots(n: int) -> List[Edge]:
    """All edge slots of the n-grid, row-major: horizontals then verticals."""
    horiz = [Edge(GridPoint(x, y), GridPoint(x + 1, y))
             for y in range(n + 1) for x in range(n)]
    vert = [Edge(GridPoint(x, y), GridPoint(x, y + 1))
            for y in range(n) for x in range(n + 1)]
    return horiz + vert


def _corners(n: int) -> Dict[GridPoint, str]:
    return {GridPoint(0, n): BLUE, GridPoint(n, 0): BLUE,
            GridPoint(0, 0): RED, GridPoint(n, n): RED}


def _slots_at(slots: Sequence[Edge]) -> Dict[GridPoint, List[int]]:
    at: Dict[GridPoint, List[int]] = {}
    for idx, e in enumerate(slots):
        at.setdefault(e.a, []).append(idx)
        at.setdefault(e.b, []).append(idx)
    return at


def _degree_zero_or_two(vs: List[int]) -> List[Tuple[int, ...]]:
    """CNF for "the number of true vars among vs is 0 or 2" (|vs| <= 4)."""
    clauses = [tuple([-v] + [w for w in vs if w != v]) for v in vs]  # no degree 1
    k = len(vs)
    for i in range(k):  # no degree 3 or more
        for j in range(i + 1, k):
            for l in range(j + 1, k):
                clauses.append((-vs[i], -vs[j], -vs[l]))
    return clauses


def gen_stconn(n: int, *, intersection_clauses: bool = True) -> CnfFormula:
    """Edge-set form of the corner-connectivity contradiction."""
    if n < 1:
        raise PreconditionViolation("n >= 1")
    slots = edge_slots(n)
    at = _slots_at(slots)
    corners = _corners(n)

    def var(idx: int, color: str) -> int:
        return 2 * idx + (1 if color == BLUE else 2)

    clauses: List[Tuple[int, ...]] = []
    for corner in (GridPoint(0, n), GridPoint(n, 0), GridPoint(0, 0), GridPoint(n, n)):
        own = corners[corner]
        other = RED if own == BLUE else BLUE
        mine = [var(i, own) for i in at[corner]]
        clauses.append(tuple(mine))  # at least one edge of the corner's color
        for i in range(len(mine)):
            for j in range(i + 1, len(mine)):
                clauses.append((-mine[i], -mine[j]))  # at most one
        for i in at[corner]:
            clauses.append((-var(i, other),))  # none of the other color
    for p in sorted(at):
        if p in corners:
            continue
        for color in (BLUE, RED):
            clauses.extend(_degree_zero_or_two([var(i, color) for i in at[p]]))
    if intersection_clauses:
        seen = set()
        for p in sorted(at):
            if p in corners:
                continue
            for i in at[p]:
                for j in at[p]:
                    c = (-var(i, BLUE), -var(j, RED))
                    if c not in seen:
                        seen.add(c)
                        clauses.append(c)

    var_map = {}
    for idx, e in enumerate(slots):
        var_map[var(idx, BLUE)] = VarRole("stconn", BLUE, e, None)
        var_map[var(idx, RED)] = VarRole("stconn", RED, e, None)
    meta = {"family": "stconn", "n": n, "weakened": not intersection_clauses}
    return CnfFormula(2 * len(slots), tuple(clauses), var_map, meta).validate()


def gen_stseq(n: int, *, intersection_clauses: bool = True) -> CnfFormula:
    """Indexed-sequence form: variables assert "edge e is the i-th edge"."""
    if n < 1:
        raise PreconditionViolation("n >= 1")
    slots = edge_slots(n)
    s = len(slots)
    at = _slots_at(slots)
    length = n * n
    ends = {BLUE: (GridPoint(0, n), GridPoint(n, 0)),
            RED: (GridPoint(0, 0), GridPoint(n, n))}

    def var(idx: int, color: str, pos: int) -> int:
        return (pos - 1) * 2 * s + 2 * idx + (1 if color == BLUE else 2)

    shares_point = [[bool({slots[i].a, slots[i].b} & {slots[j].a, slots[j].b})
                     for j in range(s)] for i in range(s)]

    clauses: List[Tuple[int, ...]] = []
    for color in (BLUE, RED):
        start, goal = ends[color]
        for pos in range(1, length + 1):  # at most one edge per position
            for i in range(s):
                for j in range(i + 1, s):
                    clauses.append((-var(i, color, pos), -var(j, color, pos)))
        clauses.append(tuple(var(i, color, 1) for i in at[start]))  # start corner
        for pos in range(2, length + 1):  # empties form a terminal suffix
            prev = tuple(var(i, color, pos - 1) for i in range(s))
            for i in range(s):
                clauses.append((-var(i, color, pos),) + prev)
        for pos in range(1, length):  # consecutive edges share exactly one point
            for i in range(s):
                for j in range(s):
                    if i == j or not shares_point[i][j]:
                        clauses.append((-var(i, color, pos), -var(j, color, pos + 1)))
        for pos in range(1, length):  # stopping early requires the goal corner
            nxt = tuple(var(k, color, pos + 1) for k in range(s))
            for i in range(s):
                if goal not in (slots[i].a, slots[i].b):
                    clauses.append((-var(i, color, pos),) + nxt)
        for i in range(s):  # the last position, if used, must reach the goal
            if goal not in (slots[i].a, slots[i].b):
                clauses.append((-var(i, color, length),))
        for pos in range(1, length + 1):  # simple path: no revisited points
            for pos2 in range(pos + 2, length + 1):
                for i in range(s):
                    for j in range(s):
                        if shares_point[i][j]:
                            clauses.append((-var(i, color, pos), -var(j, color, pos2)))
    if intersection_clauses:
        for p in sorted(at):
            for i in at[p]:
                for j in at[p]:
                    for pos in range(1, length + 1):
                        for pos2 in range(1, length + 1):
                            clauses.append((-var(i, BLUE, pos), -var(j, RED, pos2)))

    var_map = {}
    for pos in range(1, length + 1):
        for idx, e in enumerate(slots):
            var_map[var(idx, BLUE, pos)] = VarRole("stseq", BLUE, e, pos)
            var_map[var(idx, RED, pos)] = VarRole("stseq", RED, e, pos)
    meta = {"family": "stseq", "n": n, "weakened": not intersection_clauses}
    return CnfFormula(2 * s * length, tuple(clauses), var_map, meta).validate()


# ---------------------------------------------------------------------------
# Satisfiability checking
# ---------------------------------------------------------------------------

class _ClauseState:
    """Counter-based assignment engine shared by both search modes."""

    def __init__(self, f: CnfFormula):
        self.clauses = [tuple(c) for c in f.clauses]
        self.num_vars = f.num_vars
        self.pos_occ = [[] for _ in range(f.num_vars + 1)]
        self.neg_occ = [[] for _ in range(f.num_vars + 1)]
        for ci, clause in enumerate(self.clauses):
            for lit in clause:
                (self.pos_occ if lit > 0 else self.neg_occ)[abs(lit)].append(ci)
        self.n_sat = [0] * len(self.clauses)
        self.n_unassigned = [len(c) for c in self.clauses]
        self.assign: Dict[int, bool] = {}

    def set_var(self, v: int, value: bool) -> bool:
        """Assign and update counters; False on an emptied clause."""
        self.assign[v] = value
        ok = True
        sat_occ, unsat_occ = (self.pos_occ, self.neg_occ) if value else (self.neg_occ, self.pos_occ)
        for ci in sat_occ[v]:
            self.n_sat[ci] += 1
        for ci in unsat_occ[v]:
            self.n_unassigned[ci] -= 1
            if self.n_sat[ci] == 0 and self.n_unassigned[ci] == 0:
                ok = False
        return ok

    def unset_var(self, v: int):
        value = self.assign.pop(v)
        sat_occ, unsat_occ = (self.pos_occ, self.neg_occ) if value else (self.neg_occ, self.pos_occ)
        for ci in sat_occ[v]:
            self.n_sat[ci] -= 1
        for ci in unsat_occ[v]:
            self.n_unassigned[ci] += 1

    def unit_literal_in(self, ci: int) -> int:
        for lit in self.clauses[ci]:
            if abs(lit) not in self.assign:
                return lit
        raise GridJctError("no unassigned literal in a unit clause (bug)")


def _model(state: _ClauseState) -> Dict[int, bool]:
    out = {v: False for v in range(1, state.num_vars + 1)}
    out.update(state.assign)
    return out


def _solve_exhaustive(f: CnfFormula) -> Optional[Dict[int, bool]]:
    """Chronological backtracking over all assignments in index order, pruned
    only when a clause is already falsified."""
    state = _ClauseState(f)

    def recurse(v: int) -> Optional[Dict[int, bool]]:
        if v > state.num_vars:
            return _model(state)
        for value in (True, False):
            if state.set_var(v, value):
                found = recurse(v + 1)
                if found is not None:
                    return found
            state.unset_var(v)
        return None

    return recurse(1)


def _solve_dpll(f: CnfFormula) -> Optional[Dict[int, bool]]:
    """Unit propagation plus branching, lowest index first, true branch first."""
    state = _ClauseState(f)

    def propagate(trail: List[int]) -> bool:
        queue = [ci for ci in range(len(state.clauses))
                 if state.n_sat[ci] == 0 and state.n_unassigned[ci] == 1]
        qi = 0
        while qi < len(queue):
            ci = queue[qi]
            qi += 1
            if state.n_sat[ci] > 0 or state.n_unassigned[ci] != 1:
                continue
            lit = state.unit_literal_in(ci)
            v, value = abs(lit), lit > 0
            trail.append(v)
            if not state.set_var(v, value):
                return False
            watch = state.neg_occ[v] if value else state.pos_occ[v]
            for cj in watch:
                if state.n_sat[cj] == 0 and state.n_unassigned[cj] == 1:
                    queue.append(cj)
        return True

    def undo(trail: List[int]):
        while trail:
            state.unset_var(trail.pop())

    def recurse() -> Optional[Dict[int, bool]]:
        trail: List[int] = []
        if not propagate(trail):
            undo(trail)
            return None
        v = next((w for w in range(1, state.num_vars + 1) if w not in state.assign), None)
        if v is None:
            found = _model(state)
            undo(trail)
            return found
        for value in (True, False):
            sub: List[int] = [v]
            if state.set_var(v, value):
                found = recurse()
                if found is not None:
                    undo(sub)
                    undo(trail)
                    return found
            undo(sub)
        undo(trail)
        return None

    return recurse()


def solve(f: CnfFormula, mode: str = DPLL) -> Optional[Dict[int, bool]]:
    """Satisfying assignment (complete, free vars false) or None."""
    f.validate()
    if mode == EXHAUSTIVE:
        if f.num_vars > _EXHAUSTIVE_CAP:
            raise PreconditionViolation(
                f"num_vars <= {_EXHAUSTIVE_CAP} for exhaustive mode")
        return _solve_exhaustive(f)
    if mode == DPLL:
        return _solve_dpll(f)
    raise PreconditionViolation('mode in ("exhaustive", "dpll")')


def check_unsat(f: CnfFormula, mode: str = DPLL) -> bool:
    """True iff no satisfying assignment exists."""
    return solve(f, mode) is None


# ---------------------------------------------------------------------------
# Model decoding and DIMACS emission
# ---------------------------------------------------------------------------

def decode_model(f: CnfFormula, assignment: Dict[int, bool]):
    """Rebuild the blue/red grid objects a satisfying assignment describes.

    Returns ``(blue, red)`` as EdgeSets for the stconn family and as oriented
    EdgeSequences for stseq.  The assignment must satisfy ``f``; the first
    violated clause is reported otherwise.
    """
    for ci, clause in enumerate(f.clauses):
        if not any(assignment.get(abs(lit), False) == (lit > 0) for lit in clause):
            raise InvalidInstance(
                f"assignment violates clause {ci}: {list(clause)}")
    family, n = f.meta.get("family"), f.meta.get("n")
    if family == "stconn":
        picked = {BLUE: [], RED: []}
        for v, role in f.var_map.items():
            if assignment.get(v, False):
                picked[role.color].append(role.edge)
        return (EdgeSet.of(picked[BLUE], n), EdgeSet.of(picked[RED], n))
    if family == "stseq":
        ends = {BLUE: GridPoint(0, n), RED: GridPoint(0, 0)}
        out = {}
        for color in (BLUE, RED):
            by_pos: Dict[int, Edge] = {}
            for v, role in f.var_map.items():
                if role.color == color and assignment.get(v, False):
                    if role.position in by_pos:
                        raise InvalidInstance(f"two edges at position {role.position}")
                    by_pos[role.position] = role.edge
            if not by_pos or sorted(by_pos) != list(range(1, len(by_pos) + 1)):
                raise InvalidInstance(f"{color} positions are not a prefix")
            cur = ends[color]
            directed = []
            for pos in range(1, len(by_pos) + 1):
                e = by_pos[pos]
                if cur not in (e.a, e.b):
                    raise InvalidInstance(f"{color} edge at position {pos} does not chain")
                nxt = e.b if e.a == cur else e.a
                directed.append(DirectedEdge(cur, nxt))
                cur = nxt
            out[color] = EdgeSequence.open_path(directed, n)
        return out[BLUE], out[RED]
    raise InvalidInstance(f"cannot decode family {family!r}")


def to_dimacs(f: CnfFormula) -> str:
    """DIMACS CNF text with a commented variable map."""
    lines = []
    meta = f.meta
    head = " ".join(f"{k}={meta[k]}" for k in sorted(meta))
    lines.append(f"c gridjct {head}".rstrip())
    for v in sorted(f.var_map):
        lines.append(f"c var {v} {f.var_map[v].describe()}")
    lines.append(f"p cnf {f.num_vars} {len(f.clauses)}")
    for clause in f.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


def write_dimacs(f: CnfFormula, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_dimacs(f))
