"""Course timetabling as graph coloring: Welsh-Powell and DSatur greedy
solvers, schedule validation, the coloring<->schedule certificate
translation, and an exact chromatic-number oracle for small graphs.

Colors (time slots) are 0-based throughout; presentation layers may
renumber from 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GuardError
from .graphs import ConflictGraph
from .validation import ValidationReport


@dataclass(frozen=True)
class Coloring:
    """Vertex -> color mapping plus the number of colors it uses.

    Properness is not enforced here: validators decide it, solvers
    guarantee it as a postcondition.
    """

    color_of: dict[int, int]
    num_colors: int

    @classmethod
    def from_colors(cls, color_of: dict[int, int]) -> "Coloring":
        num = 1 + max(color_of.values()) if color_of else 0
        return cls(color_of=dict(color_of), num_colors=num)


def _min_absent_color(used: set[int]) -> int:
    color = 0
    while color in used:
        color += 1
    return color


def welsh_powell(g: ConflictGraph) -> Coloring:
    """Greedy coloring in descending-degree order (ties: ascending id)."""
    order = sorted(range(g.num_courses), key=lambda v: (-g.degree(v), v))
    color_of: dict[int, int] = {}
    for v in order:
        used = {color_of[u] for u in g.neighbors(v) if u in color_of}
        color_of[v] = _min_absent_color(used)
    return Coloring.from_colors(color_of)


def dsatur(g: ConflictGraph) -> Coloring:
    """Greedy coloring selecting, at each step, the uncolored vertex with
    the most distinct neighbor colors; ties by static degree, then id."""
    n = g.num_courses
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    degree = [g.degree(v) for v in range(n)]
    color_of: dict[int, int] = {}
    uncolored = set(range(n))
    while uncolored:
        best = min(uncolored, key=lambda v: (-len(neighbor_colors[v]), -degree[v], v))
        color = _min_absent_color(neighbor_colors[best])
        color_of[best] = color
        uncolored.discard(best)
        for u in g.neighbors(best):
            if u in uncolored:
                neighbor_colors[u].add(color)
    return Coloring.from_colors(color_of)


def validate_coloring(g: ConflictGraph, c: Coloring) -> ValidationReport:
    """The polynomial-time schedule verifier: every course gets a slot and
    no conflicting pair shares one. Reports every violation."""
    violations = []
    for v in range(g.num_courses):
        if v not in c.color_of:
            violations.append(f"course {v} is uncolored")
    for v, color in c.color_of.items():
        if not 0 <= v < g.num_courses:
            violations.append(f"unknown course id {v}")
        elif not 0 <= color < max(c.num_colors, 1):
            violations.append(f"course {v} has out-of-range color {color}")
    for u, v in g.conflicts():
        cu, cv = c.color_of.get(u), c.color_of.get(v)
        if cu is not None and cu == cv:
            violations.append(f"conflict ({u}, {v}) is monochromatic (color {cu})")
    return ValidationReport(tuple(violations))


EXACT_LIMIT = 12


def _k_colorable_witness(g: ConflictGraph, k: int) -> dict[int, int] | None:
    """Backtracking search for a proper k-coloring; None if infeasible.

    Vertices are tried in descending-degree order; the first uncolored
    vertex may only open one new color index, which prunes color-permutation
    symmetry.
    """
    order = sorted(range(g.num_courses), key=lambda v: (-g.degree(v), v))
    assigned: dict[int, int] = {}

    def extend(i: int, max_used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        blocked = {assigned[u] for u in g.neighbors(v) if u in assigned}
        for color in range(min(k, max_used + 2)):
            if color not in blocked:
                assigned[v] = color
                if extend(i + 1, max(max_used, color)):
                    return True
                del assigned[v]
        return False

    return dict(assigned) if extend(0, -1) else None


def _check_exact_guard(g: ConflictGraph) -> None:
    if g.num_courses > EXACT_LIMIT:
        raise GuardError(
            f"exact chromatic search is limited to {EXACT_LIMIT} courses "
            f"(got {g.num_courses})"
        )


def exact_coloring(g: ConflictGraph) -> Coloring:
    """Optimal coloring by trying k = 1..max_degree+1 in increasing order.

    Guarded to at most 12 courses.
    """
    _check_exact_guard(g)
    if g.num_courses == 0:
        return Coloring.from_colors({})
    for k in range(1, g.max_degree() + 2):
        witness = _k_colorable_witness(g, k)
        if witness is not None:
            return Coloring.from_colors(witness)
    raise AssertionError("unreachable: every graph is max_degree+1 colorable")


def exact_chromatic_number(g: ConflictGraph) -> int:
    return exact_coloring(g).num_colors


@dataclass(frozen=True)
class ScheduleInstance:
    """Decision question: can the courses be scheduled in <= max_slots slots?"""

    courses: ConflictGraph
    max_slots: int


def coloring_instance_to_csp(g: ConflictGraph, k: int) -> ScheduleInstance:
    """Identity-shaped translation: one course per vertex, one conflict per
    edge, asking for a schedule in at most k slots."""
    if k < 1:
        raise ValueError("slot budget must be positive")
    courses = ConflictGraph(g.num_courses, g.conflicts())
    return ScheduleInstance(courses=courses, max_slots=k)


def is_schedulable(inst: ScheduleInstance) -> bool:
    """Decide the schedule question exactly (small instances only)."""
    _check_exact_guard(inst.courses)
    if inst.courses.num_courses == 0:
        return True
    if inst.max_slots >= inst.courses.max_degree() + 1:
        return True
    return _k_colorable_witness(inst.courses, inst.max_slots) is not None


COLORING_TO_SCHEDULE = "coloring_to_schedule"
SCHEDULE_TO_COLORING = "schedule_to_coloring"


def translate_certificate(direction: str, witness: Coloring) -> Coloring:
    """Relabel a certificate between the coloring and schedule views.

    The reduction maps vertex i to course i, so the translation is the
    identity on the underlying mapping; validity is preserved both ways.
    Requires a total witness (contiguous keys 0..n-1).
    """
    if direction not in (COLORING_TO_SCHEDULE, SCHEDULE_TO_COLORING):
        raise ValueError(f"unknown translation direction {direction!r}")
    keys = set(witness.color_of)
    if keys != set(range(len(keys))):
        raise ValueError("partial witness: mapping must cover ids 0..n-1")
    return Coloring(color_of=dict(witness.color_of), num_colors=witness.num_colors)
