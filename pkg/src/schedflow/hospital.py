"""Hospital patient-to-bed assignment: model, flow reduction, optimal solve,
validation, and an exhaustive small-instance oracle.

Patients and beds carry string ids; the flow reduction assigns dense vertex
ids (source 0, patients 1..|P|, beds |P|+1..|P|+|B|, sink last) and returns
a legend to translate back.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GuardError
from .graphs import FlowNetwork
from .maxflow import max_flow, saturated_edges
from .validation import ValidationReport


@dataclass(frozen=True)
class HospitalInstance:
    departments: tuple[str, ...]
    patients: tuple[tuple[str, frozenset[str]], ...]  # (patient id, compatible depts)
    beds: tuple[tuple[str, str], ...]  # (bed id, department)

    def __post_init__(self):
        known = set(self.departments)
        if len(known) != len(self.departments):
            raise ValueError("duplicate department names")
        pids = [pid for pid, _ in self.patients]
        if len(set(pids)) != len(pids):
            raise ValueError("duplicate patient ids")
        bids = [bid for bid, _ in self.beds]
        if len(set(bids)) != len(bids):
            raise ValueError("duplicate bed ids")
        for pid, compat in self.patients:
            if not compat:
                raise ValueError(f"patient {pid!r} has an empty compatible set")
            unknown = set(compat) - known
            if unknown:
                raise ValueError(f"patient {pid!r} references unknown departments {sorted(unknown)}")
        for bid, dept in self.beds:
            if dept not in known:
                raise ValueError(f"bed {bid!r} references unknown department {dept!r}")


def make_instance(departments, patients, beds) -> HospitalInstance:
    """Build an instance from plain sequences/dicts.

    patients: iterable of (id, iterable of department names)
    beds: iterable of (id, department name)
    """
    return HospitalInstance(
        departments=tuple(departments),
        patients=tuple((pid, frozenset(compat)) for pid, compat in patients),
        beds=tuple((bid, dept) for bid, dept in beds),
    )


@dataclass(frozen=True)
class Assignment:
    """Partial patient->bed mapping; admitted_count is its size."""

    assigned: dict[str, str] = field(default_factory=dict)

    @property
    def admitted_count(self) -> int:
        return len(self.assigned)


@dataclass(frozen=True)
class FlowLegend:
    """Vertex-id bookkeeping for a built hospital flow network."""

    patient_vertex: dict[str, int]
    bed_vertex: dict[str, int]
    source: int
    sink: int

    def patient_of(self, vertex: int) -> str:
        return self._rev(self.patient_vertex)[vertex]

    def bed_of(self, vertex: int) -> str:
        return self._rev(self.bed_vertex)[vertex]

    @staticmethod
    def _rev(mapping: dict[str, int]) -> dict[int, str]:
        return {v: k for k, v in mapping.items()}


def build_flow_network(inst: HospitalInstance) -> tuple[FlowNetwork, FlowLegend]:
    """Unit-capacity network whose max flow equals the max admitted count.

    Edges: source->patient for every patient, patient->bed for every
    compatible (patient, bed) pair, bed->sink for every bed.
    """
    np_, nb = len(inst.patients), len(inst.beds)
    source = 0
    sink = np_ + nb + 1
    net = FlowNetwork(vertex_count=np_ + nb + 2, source=source, sink=sink)
    patient_vertex = {pid: 1 + i for i, (pid, _) in enumerate(inst.patients)}
    bed_vertex = {bid: 1 + np_ + j for j, (bid, _) in enumerate(inst.beds)}
    for pid, _ in inst.patients:
        net.add_edge(source, patient_vertex[pid], 1)
    for bid, _ in inst.beds:
        net.add_edge(bed_vertex[bid], sink, 1)
    for pid, compat in inst.patients:
        for bid, dept in inst.beds:
            if dept in compat:
                net.add_edge(patient_vertex[pid], bed_vertex[bid], 1)
    return net, FlowLegend(patient_vertex, bed_vertex, source, sink)


def solve(inst: HospitalInstance) -> Assignment:
    """Optimal assignment, read off the saturated patient->bed flow edges."""
    net, legend = build_flow_network(inst)
    result = max_flow(net)
    vertex_to_patient = {v: p for p, v in legend.patient_vertex.items()}
    vertex_to_bed = {v: b for b, v in legend.bed_vertex.items()}
    pairs = saturated_edges(net, result, vertex_to_patient, vertex_to_bed)
    assigned = {vertex_to_patient[u]: vertex_to_bed[v] for u, v in pairs}
    assert len(assigned) == result.value
    return Assignment(assigned=assigned)


def validate(inst: HospitalInstance, a: Assignment) -> ValidationReport:
    """Check every assignment condition; reports all violations, not the first."""
    violations = []
    patient_compat = dict(inst.patients)
    bed_dept = dict(inst.beds)
    seen_beds: dict[str, str] = {}
    for pid, bid in a.assigned.items():
        if pid not in patient_compat:
            violations.append(f"unknown patient id {pid!r}")
            continue
        if bid not in bed_dept:
            violations.append(f"unknown bed id {bid!r} (patient {pid!r})")
            continue
        if bid in seen_beds:
            violations.append(
                f"bed multiply assigned: {bid!r} given to {seen_beds[bid]!r} and {pid!r}"
            )
        else:
            seen_beds[bid] = pid
        if bed_dept[bid] not in patient_compat[pid]:
            violations.append(
                f"compatibility: patient {pid!r} assigned bed {bid!r} in "
                f"department {bed_dept[bid]!r} outside their compatible set"
            )
    return ValidationReport(tuple(violations))


BRUTE_FORCE_LIMIT = 10


def brute_force_max_matching(inst: HospitalInstance) -> int:
    """Exact maximum admitted count by exhaustive recursion over patients.

    Guarded to at most 10 patients and 10 beds.
    """
    if len(inst.patients) > BRUTE_FORCE_LIMIT or len(inst.beds) > BRUTE_FORCE_LIMIT:
        raise GuardError(
            f"brute_force_max_matching is limited to {BRUTE_FORCE_LIMIT} patients "
            f"and {BRUTE_FORCE_LIMIT} beds"
        )
    compat_beds = [
        [j for j, (_, dept) in enumerate(inst.beds) if dept in compat]
        for _, compat in inst.patients
    ]
    used = [False] * len(inst.beds)

    def best_from(i: int) -> int:
        if i == len(compat_beds):
            return 0
        best = best_from(i + 1)  # skip patient i
        for j in compat_beds[i]:
            if not used[j]:
                used[j] = True
                best = max(best, 1 + best_from(i + 1))
                used[j] = False
        return best

    return best_from(0)
