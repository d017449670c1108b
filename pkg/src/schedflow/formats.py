"""JSON instance and solution formats used by the command-line tools.

Key names are a fixed contract:
  hospital instance: {"kind": "hospital", "departments": [...], "patients":
      [{"id": ..., "compatible": [...]}], "beds": [{"id": ..., "department": ...}]}
  courses instance:  {"kind": "courses", "num_courses": n, "conflicts": [[i, j], ...]}
  hospital solution: {"kind": "hospital_solution", "admitted": k, "assignment": {...}}
  schedule solution: {"kind": "schedule", "num_colors": k, "slots": {"0": c, ...}}
"""

from __future__ import annotations

import json
from typing import Union

from .coloring import Coloring
from .graphs import ConflictGraph, GraphError
from .hospital import Assignment, HospitalInstance, make_instance

Instance = Union[HospitalInstance, ConflictGraph]


class FormatError(ValueError):
    """Malformed or schema-invalid instance/solution document."""


def hospital_instance_to_dict(inst: HospitalInstance) -> dict:
    return {
        "kind": "hospital",
        "departments": list(inst.departments),
        "patients": [
            {"id": pid, "compatible": sorted(compat)} for pid, compat in inst.patients
        ],
        "beds": [{"id": bid, "department": dept} for bid, dept in inst.beds],
    }


def courses_instance_to_dict(g: ConflictGraph) -> dict:
    return {
        "kind": "courses",
        "num_courses": g.num_courses,
        "conflicts": [[u, v] for u, v in g.conflicts()],
    }


def assignment_to_dict(a: Assignment) -> dict:
    return {
        "kind": "hospital_solution",
        "admitted": a.admitted_count,
        "assignment": dict(sorted(a.assigned.items())),
    }


def schedule_to_dict(c: Coloring) -> dict:
    return {
        "kind": "schedule",
        "num_colors": c.num_colors,
        "slots": {str(v): color for v, color in sorted(c.color_of.items())},
    }


def _require(doc: dict, key: str, types) -> object:
    if key not in doc:
        raise FormatError(f"missing key {key!r}")
    value = doc[key]
    if not isinstance(value, types):
        raise FormatError(f"key {key!r} has unexpected type {type(value).__name__}")
    return value


def hospital_instance_from_dict(doc: dict) -> HospitalInstance:
    departments = _require(doc, "departments", list)
    patients = []
    for entry in _require(doc, "patients", list):
        if not isinstance(entry, dict):
            raise FormatError("patient entries must be objects")
        patients.append((_require(entry, "id", str), _require(entry, "compatible", list)))
    beds = []
    for entry in _require(doc, "beds", list):
        if not isinstance(entry, dict):
            raise FormatError("bed entries must be objects")
        beds.append((_require(entry, "id", str), _require(entry, "department", str)))
    try:
        return make_instance(departments, patients, beds)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def courses_instance_from_dict(doc: dict) -> ConflictGraph:
    num_courses = _require(doc, "num_courses", int)
    conflicts = _require(doc, "conflicts", list)
    try:
        g = ConflictGraph(num_courses)
        for pair in conflicts:
            if not (isinstance(pair, list) and len(pair) == 2):
                raise FormatError(f"conflict entries must be [i, j] pairs, got {pair!r}")
            i, j = pair
            if not (isinstance(i, int) and isinstance(j, int) and i < j):
                raise FormatError(f"conflict pair must satisfy i < j, got {pair!r}")
            g.add_conflict(i, j)
        return g
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def instance_to_dict(instance: Instance) -> dict:
    if isinstance(instance, HospitalInstance):
        return hospital_instance_to_dict(instance)
    return courses_instance_to_dict(instance)


def parse_instance(text: str) -> tuple[str, Instance]:
    """Parse either instance kind; returns (kind, instance)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("top-level document must be an object")
    kind = _require(doc, "kind", str)
    if kind == "hospital":
        return kind, hospital_instance_from_dict(doc)
    if kind == "courses":
        return kind, courses_instance_from_dict(doc)
    raise FormatError(f"unknown instance kind {kind!r}")


def parse_solution(text: str) -> tuple[str, Union[Assignment, Coloring]]:
    """Parse either solution kind; returns (kind, solution)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("top-level document must be an object")
    kind = _require(doc, "kind", str)
    if kind == "hospital_solution":
        assignment = _require(doc, "assignment", dict)
        admitted = _require(doc, "admitted", int)
        if admitted != len(assignment):
            raise FormatError("admitted count disagrees with assignment size")
        for pid, bid in assignment.items():
            if not isinstance(bid, str):
                raise FormatError(f"assignment values must be bed ids, got {bid!r}")
        return kind, Assignment(assigned=dict(assignment))
    if kind == "schedule":
        slots = _require(doc, "slots", dict)
        num_colors = _require(doc, "num_colors", int)
        color_of = {}
        for key, color in slots.items():
            if not key.isdigit() or not isinstance(color, int):
                raise FormatError(f"slot entries must map course index to int, got {key!r}")
            color_of[int(key)] = color
        return kind, Coloring(color_of=color_of, num_colors=num_colors)
    raise FormatError(f"unknown solution kind {kind!r}")


def dumps(doc: dict) -> str:
    """Canonical serialization: 2-space indent, trailing newline."""
    return json.dumps(doc, indent=2) + "\n"
