"""Mock-plant execution of emitted missions."""

from seqlang.btxml import emit
from seqlang.frontend import translate
from seqlang.interpreter import (
    FAILURE,
    SUCCESS,
    MockPlant,
    TraceEntry,
    format_trace,
    run,
)
from seqlang.logical_form import ActionNode, ParamNode, SequenceNode


def mission(*actions):
    return emit(SequenceNode(actions))


def act(name, *pairs):
    params = tuple(
        ParamNode(pname, index, value) for index, (pname, value) in enumerate(pairs)
    )
    return ActionNode(name, params)


# -------------------------------------------------------------------- moves


def test_plant_starts_at_the_origin():
    assert MockPlant().pose == [0.0, 0.0, 0.0, 0.0, 0.0, 0.0]


def test_move_writes_axes_absolutely():
    plant = MockPlant()
    trace, status = run(mission(act("move", ("x", "1.5"), ("z", "-2"))), plant)
    assert status == SUCCESS
    assert plant.pose == [1.5, 0.0, -2.0, 0.0, 0.0, 0.0]
    assert trace[0].status == SUCCESS


def test_move_overwrites_rather_than_accumulates():
    plant = MockPlant()
    run(mission(act("move", ("x", "5"))), plant)
    run(mission(act("move", ("x", "2"))), plant)
    assert plant.pose[0] == 2.0


def test_move_raw_and_yaw_share_the_heading_slot():
    plant = MockPlant()
    run(mission(act("move", ("raw", "90"))), plant)
    assert plant.pose[5] == 90.0

    plant = MockPlant()
    run(mission(act("move", ("yaw", "45"))), plant)
    assert plant.pose[5] == 45.0


def test_move_with_no_params_changes_nothing():
    plant = MockPlant()
    trace, status = run(mission(act("move")), plant)
    assert status == SUCCESS
    assert plant.pose == [0.0] * 6
    assert plant.transcript == [("move", ())]


def test_move_rejects_non_numeric_values_atomically():
    plant = MockPlant()
    trace, status = run(
        mission(act("move", ("x", "1"), ("y", "sideways"))), plant
    )
    assert status == FAILURE
    assert plant.pose == [0.0] * 6  # the good axis was not applied either
    assert plant.transcript == []
    assert trace[-1].status == FAILURE


def test_move_ignores_unknown_attribute_names():
    plant = MockPlant()
    _, status = run(mission(act("move", ("x", "1"), ("extra", "jets"))), plant)
    assert status == SUCCESS
    assert plant.pose[0] == 1.0


# ------------------------------------------------------------------ flatten


def test_flatten_zeroes_attitude_and_sets_depth():
    plant = MockPlant()
    plant.pose = [4.0, 5.0, 6.0, 0.3, -0.2, 1.0]
    _, status = run(mission(act("flatten", ("num", "3.5"))), plant)
    assert status == SUCCESS
    assert plant.pose == [4.0, 5.0, 3.5, 0.0, 0.0, 1.0]


def test_flatten_without_number_keeps_depth():
    plant = MockPlant()
    plant.pose = [0.0, 0.0, 9.0, 0.3, -0.2, 0.0]
    run(mission(act("flatten")), plant)
    assert plant.pose == [0.0, 0.0, 9.0, 0.0, 0.0, 0.0]


def test_flatten_rejects_bad_number_atomically():
    plant = MockPlant()
    plant.pose = [0.0, 0.0, 9.0, 0.3, -0.2, 0.0]
    _, status = run(mission(act("flatten", ("num", "deep"))), plant)
    assert status == FAILURE
    assert plant.pose == [0.0, 0.0, 9.0, 0.3, -0.2, 0.0]


# -------------------------------------------------------- record-only leaves


def test_record_only_actions_append_to_the_transcript():
    plant = MockPlant()
    xml = mission(
        act("say", ("words", "hello there")),
        act("clean", ("obj", "table")),
        act("bring", ("val", "wrench")),
        act("find", ("val", "buoy")),
        act("goal"),
        act("gate"),
    )
    trace, status = run(xml, plant)
    assert status == SUCCESS
    assert plant.pose == [0.0] * 6
    assert plant.transcript == [
        ("say", (("words", "hello there"),)),
        ("clean", (("obj", "table"),)),
        ("bring", (("val", "wrench"),)),
        ("find", (("val", "buoy"),)),
        ("goal", ()),
        ("gate", ()),
    ]
    assert all(entry.status == SUCCESS for entry in trace)


def test_unknown_action_is_a_warned_no_op():
    plant = MockPlant()
    trace, status = run(mission(act("warp", ("speed", "9"))), plant)
    assert status == SUCCESS
    assert trace[0].warning is True
    assert plant.pose == [0.0] * 6
    assert plant.transcript == []  # warned actions leave no transcript record


def test_known_actions_do_not_carry_the_warning_flag():
    trace, _ = run(mission(act("goal"), act("move", ("x", "1"))))
    assert [entry.warning for entry in trace] == [False, False]


# ------------------------------------------------------------ sequence flow


def test_empty_mission_succeeds_with_empty_trace():
    trace, status = run(emit(SequenceNode(())))
    assert (trace, status) == ([], SUCCESS)


def test_trace_preserves_action_order():
    xml = mission(act("goal"), act("say", ("words", "hi")), act("gate"))
    trace, _ = run(xml)
    assert [entry.action for entry in trace] == ["goal", "say", "gate"]
    assert [entry.step for entry in trace] == [0, 1, 2]


def test_sequence_stops_at_the_first_failure():
    plant = MockPlant()
    xml = mission(
        act("goal"),
        act("move", ("x", "bad")),
        act("say", ("words", "unreached")),
    )
    trace, status = run(xml, plant)
    assert status == FAILURE
    assert [entry.action for entry in trace] == ["goal", "move"]
    assert plant.transcript == [("goal", ())]


def test_fail_injection_replaces_the_handler():
    plant = MockPlant()
    plant.fail_injections.add(1)
    xml = mission(act("goal"), act("move", ("x", "7")), act("gate"))
    trace, status = run(xml, plant)
    assert status == FAILURE
    assert len(trace) == 2
    assert trace[1] == TraceEntry(1, "move", (("x", "7"),), FAILURE)
    assert plant.pose == [0.0] * 6  # the real move handler never ran
    assert plant.transcript == [("goal", ())]


def test_fail_injection_at_step_zero():
    plant = MockPlant()
    plant.fail_injections.add(0)
    trace, status = run(mission(act("goal")), plant)
    assert status == FAILURE
    assert len(trace) == 1
    assert plant.transcript == []


def test_plant_state_persists_across_runs():
    plant = MockPlant()
    run(mission(act("move", ("x", "3"))), plant)
    run(mission(act("say", ("words", "hi"))), plant)
    assert plant.pose[0] == 3.0
    assert [name for name, _ in plant.transcript] == ["move", "say"]


def test_run_executes_what_the_frontend_compiles():
    xml = emit(translate("move to x 1 yaw 90 then flatten out at 2, say all clear"))
    plant = MockPlant()
    trace, status = run(xml, plant)
    assert status == SUCCESS
    assert [entry.action for entry in trace] == ["move", "flatten", "say"]
    assert plant.pose == [1.0, 0.0, 2.0, 0.0, 0.0, 90.0]
    assert plant.transcript[-1] == ("say", (("words", "all clear"),))


# ------------------------------------------------------------------- traces


def test_format_trace_lines():
    xml = mission(act("move", ("x", "1"), ("y", "2")), act("goal"))
    trace, _ = run(xml)
    assert format_trace(trace) == [
        "0\tmove\tx=1,y=2\tSUCCESS",
        "1\tgoal\t\tSUCCESS",
    ]


def test_format_trace_keeps_multiword_values():
    trace, _ = run(mission(act("say", ("words", "hello there"))))
    assert format_trace(trace) == ["0\tsay\twords=hello there\tSUCCESS"]


def test_format_trace_marks_failures():
    plant = MockPlant()
    plant.fail_injections.add(0)
    trace, _ = run(mission(act("gate")), plant)
    assert format_trace(trace) == ["0\tgate\t\tFAILURE"]
