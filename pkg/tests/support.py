"""Shared builders for the test suite.

random_tree() produces structurally valid sequences whose parameter
order matches what the XML emitter would choose (schema order for known
actions, alphabetical for unknown ones), so emit round trips are exact.
random_messy_tree() relaxes ordering and mixes custom parameters into
known actions; only the parse/render laws hold for those.
"""

from __future__ import annotations

import random

from seqlang.logical_form import ActionNode, ParamNode, SequenceNode

KNOWN_SPECS = {
    "move": ("x", "y", "z", "roll", "pitch", "raw"),
    "flatten": ("num",),
    "say": ("words",),
    "clean": ("obj",),
    "bring": ("val",),
    "find": ("val",),
    "goal": (),
    "gate": (),
}

# listed alphabetically so sorted picks equal emit's attribute order
CUSTOM_SPECS = {
    "warp": ("speed", "target"),
    "scan": ("mode",),
    "dock": (),
    "sample": ("depth", "jar", "rate"),
}

VALUES = ("1", "-2.5", "0.7", "buoy", "left_marker", "hello there", "x9", "$5", "a_b.c")


def _pick_params(rng: random.Random, pool: tuple[str, ...], counter: int) -> list[ParamNode]:
    count = rng.randint(0, min(len(pool), 3))
    picked = sorted(rng.sample(range(len(pool)), count))
    return [ParamNode(pool[i], counter + offset, rng.choice(VALUES)) for offset, i in enumerate(picked)]


def random_tree(
    rng: random.Random,
    min_actions: int = 0,
    max_actions: int = 7,
    allow_custom: bool = True,
) -> SequenceNode:
    specs = dict(KNOWN_SPECS)
    if allow_custom:
        specs.update(CUSTOM_SPECS)
    names = sorted(specs)
    actions = []
    counter = 0
    for _ in range(rng.randint(min_actions, max_actions)):
        name = rng.choice(names)
        params = _pick_params(rng, specs[name], counter)
        counter += len(params)
        actions.append(ActionNode(name, tuple(params)))
    return SequenceNode(tuple(actions))


def random_messy_tree(rng: random.Random, min_actions: int = 0, max_actions: int = 7) -> SequenceNode:
    """Canonically numbered but otherwise unruly: shuffled parameter

    order and the odd made-up parameter on a known action.
    """
    names = sorted(KNOWN_SPECS) + sorted(CUSTOM_SPECS)
    actions = []
    counter = 0
    for _ in range(rng.randint(min_actions, max_actions)):
        name = rng.choice(names)
        pool = list(KNOWN_SPECS.get(name) or CUSTOM_SPECS.get(name) or ())
        if rng.random() < 0.3:
            pool.append(rng.choice(("extra", "q", "misc_knob")))
        rng.shuffle(pool)
        chosen = pool[: rng.randint(0, min(len(pool), 3))]
        params = []
        for pname in chosen:
            params.append(ParamNode(pname, counter, rng.choice(VALUES)))
            counter += 1
        actions.append(ActionNode(name, tuple(params)))
    return SequenceNode(tuple(actions))
