"""Mock plant execution of mission XML.

The plant is six numbers of pose, [X, Y, Z, Roll, Pitch, Yaw], plus a
transcript of what ran.  Executing a mission walks the sequence left to
right and stops at the first FAILURE, exactly like a reactive Sequence
node would tick its children.  There is no physics: move writes axes,
flatten levels the vehicle and sets depth, and the remaining built-ins
record themselves and succeed.

Unknown actions are no-ops that SUCCEED with a warning flag on their
trace entry, so missions from extended registries still run end to end.
For tests, ``MockPlant.fail_injections`` forces FAILURE at chosen action
indices (the handler is skipped entirely).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from seqlang.btxml import parse_bt_xml
from seqlang.logical_form import ActionNode

SUCCESS = "SUCCESS"
FAILURE = "FAILURE"

# parameter name -> pose slot; yaw is the spoken alias for raw
_AXES = {"x": 0, "y": 1, "z": 2, "roll": 3, "pitch": 4, "raw": 5, "yaw": 5}

_RECORD_ONLY = ("say", "clean", "bring", "find", "goal", "gate")


@dataclass
class MockPlant:
    """Mutable execution state: a pose, a transcript, and fail switches."""

    pose: list[float] = field(default_factory=lambda: [0.0] * 6)
    transcript: list[tuple[str, tuple[tuple[str, str], ...]]] = field(default_factory=list)
    fail_injections: set[int] = field(default_factory=set)


@dataclass(frozen=True)
class TraceEntry:
    """One executed leaf: step index, action, its params, and status."""

    step: int
    action: str
    params: tuple[tuple[str, str], ...]
    status: str
    warning: bool = False


def _apply(plant: MockPlant, action: ActionNode, params: tuple[tuple[str, str], ...]) -> tuple[str, bool]:
    """Run one action against the plant; returns (status, warning)."""
    name = action.name
    if name == "move":
        updates = {}
        for param_name, value in params:
            slot = _AXES.get(param_name)
            if slot is None:
                continue
            try:
                updates[slot] = float(value)
            except ValueError:
                return FAILURE, False
        for slot, number in updates.items():
            plant.pose[slot] = number
        plant.transcript.append((name, params))
        return SUCCESS, False
    if name == "flatten":
        depth = None
        for param_name, value in params:
            if param_name == "num":
                try:
                    depth = float(value)
                except ValueError:
                    return FAILURE, False
        plant.pose[3] = 0.0
        plant.pose[4] = 0.0
        if depth is not None:
            plant.pose[2] = depth
        plant.transcript.append((name, params))
        return SUCCESS, False
    if name in _RECORD_ONLY:
        plant.transcript.append((name, params))
        return SUCCESS, False
    return SUCCESS, True


def run(xml_text: str, plant: MockPlant | None = None) -> tuple[list[TraceEntry], str]:
    """Execute mission XML; returns (trace, overall status).

    The trace holds one entry per action that ticked, in order; on a
    FAILURE the remaining actions never appear.  Overall status is
    SUCCESS only if every leaf succeeded.
    """
    tree = parse_bt_xml(xml_text)
    plant = MockPlant() if plant is None else plant
    trace: list[TraceEntry] = []
    for step, action in enumerate(tree.actions):
        params = tuple((p.name, p.value) for p in action.params)
        if step in plant.fail_injections:
            trace.append(TraceEntry(step, action.name, params, FAILURE))
            return trace, FAILURE
        status, warning = _apply(plant, action, params)
        trace.append(TraceEntry(step, action.name, params, status, warning))
        if status == FAILURE:
            return trace, FAILURE
    return trace, SUCCESS


def format_trace(trace: list[TraceEntry]) -> list[str]:
    """Render entries as step<TAB>action<TAB>k=v,...<TAB>status lines."""
    lines = []
    for entry in trace:
        pairs = ",".join(f"{name}={value}" for name, value in entry.params)
        lines.append(f"{entry.step}\t{entry.action}\t{pairs}\t{entry.status}")
    return lines
