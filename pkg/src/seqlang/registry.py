"""Action schemas: which actions exist and which parameters they take.

The eight built-in actions cover a small underwater robot: six-axis motion,
depth levelling, and a handful of record-and-succeed tasks.  A registry is
immutable once built; user config can add actions or shadow built-ins.

Config format, one action per line::

    # name followed by its parameter names
    sample depth rate
    ping

Validation walks a parsed sequence and returns diagnostics instead of
raising, so callers can render warnings and count errors as they see fit.
"""

from __future__ import annotations

from dataclasses import dataclass

from seqlang.logical_form import IDENT_RE, SequenceNode

ERROR = "error"
WARNING = "warning"


@dataclass(eq=False)
class ConfigParseError(Exception):
    """A malformed registry config line (1-based line number)."""

    line: int
    message: str

    def __str__(self) -> str:
        return f"registry config line {self.line}: {self.message}"


@dataclass(frozen=True)
class Diagnostic:
    """One validation or load finding.

    ``action_index``/``param_index`` locate the finding inside the tree;
    both are None for load-time findings.
    """

    severity: str
    code: str
    message: str
    action_index: int | None = None
    param_index: int | None = None

    def __str__(self) -> str:
        where = ""
        if self.action_index is not None:
            where = f" [action {self.action_index}"
            where += f", param {self.param_index}]" if self.param_index is not None else "]"
        return f"{self.severity}: {self.message}{where}"


@dataclass(frozen=True)
class ActionSchema:
    """One action's name, parameter names (in canonical order), and any

    alias spellings that address an existing parameter.
    """

    name: str
    params: tuple[str, ...] = ()
    aliases: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        if not IDENT_RE.match(self.name):
            raise ValueError(f"action name {self.name!r} is not a lowercase identifier")
        if len(set(self.params)) != len(self.params):
            raise ValueError(f"duplicate parameter names in schema for '{self.name}'")
        for param in self.params:
            if not IDENT_RE.match(param):
                raise ValueError(f"parameter name {param!r} is not a lowercase identifier")
        for alias, target in self.aliases:
            if target not in self.params:
                raise ValueError(f"alias {alias!r} targets unknown parameter {target!r}")

    def canonical_param(self, name: str) -> str | None:
        """Resolve a written parameter name to its schema name, or None."""
        if name in self.params:
            return name
        for alias, target in self.aliases:
            if alias == name:
                return target
        return None

    def param_slot(self, name: str) -> int | None:
        """Position of the (resolved) parameter in canonical order."""
        canonical = self.canonical_param(name)
        if canonical is None:
            return None
        return self.params.index(canonical)


@dataclass(frozen=True)
class ActionRegistry:
    """Immutable set of action schemas plus any load-time warnings."""

    schemas: tuple[ActionSchema, ...]
    warnings: tuple[Diagnostic, ...] = ()

    def __post_init__(self) -> None:
        names = [schema.name for schema in self.schemas]
        if len(set(names)) != len(names):
            raise ValueError("duplicate action names in registry")

    def get(self, name: str) -> ActionSchema | None:
        for schema in self.schemas:
            if schema.name == name:
                return schema
        return None

    def __contains__(self, name: str) -> bool:
        return self.get(name) is not None

    def names(self) -> tuple[str, ...]:
        return tuple(schema.name for schema in self.schemas)


# raw is the sixth motion axis; yaw addresses the same slot.
BUILTIN_SCHEMAS = (
    ActionSchema("move", ("x", "y", "z", "roll", "pitch", "raw"), (("yaw", "raw"),)),
    ActionSchema("flatten", ("num",)),
    ActionSchema("say", ("words",)),
    ActionSchema("clean", ("obj",)),
    ActionSchema("bring", ("val",)),
    ActionSchema("find", ("val",)),
    ActionSchema("goal", ()),
    ActionSchema("gate", ()),
)


def builtin_registry() -> ActionRegistry:
    """The stock registry with the eight built-in actions."""
    return ActionRegistry(BUILTIN_SCHEMAS)


def load_registry(config: str) -> ActionRegistry:
    """Extend the built-ins from config text (see module docstring).

    Redefining any existing action (builtin or an earlier config line)
    replaces its schema and leaves a warning on the returned registry.
    Malformed lines raise :class:`ConfigParseError`.
    """
    schemas = list(BUILTIN_SCHEMAS)
    warnings: list[Diagnostic] = []
    for lineno, raw_line in enumerate(config.splitlines(), 1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        name, params = fields[0], fields[1:]
        if not IDENT_RE.match(name):
            raise ConfigParseError(lineno, f"action name {name!r} is not a lowercase identifier")
        for param in params:
            if not IDENT_RE.match(param):
                raise ConfigParseError(lineno, f"parameter name {param!r} is not a lowercase identifier")
        if len(set(params)) != len(params):
            raise ConfigParseError(lineno, f"duplicate parameter names for '{name}'")
        replacing = next((i for i, s in enumerate(schemas) if s.name == name), None)
        schema = ActionSchema(name, tuple(params))
        if replacing is not None:
            warnings.append(
                Diagnostic(WARNING, "shadowed-action", f"line {lineno} redefines action '{name}'")
            )
            schemas[replacing] = schema
        else:
            schemas.append(schema)
    return ActionRegistry(tuple(schemas), tuple(warnings))


def validate(tree: SequenceNode, registry: ActionRegistry, mode: str = "strict") -> list[Diagnostic]:
    """Check a sequence against a registry; returns findings in tree order.

    Strict mode reports errors for unknown action names, parameter names
    outside the action's schema, duplicate parameter names within one
    action, and variable indices that stray from sequence-global
    0, 1, 2, ... numbering.  Lenient mode downgrades the two unknown-name
    checks to warnings; the structural two stay errors.  Parameters a
    schema lists but the tree omits are never flagged.
    """
    if mode not in ("strict", "lenient"):
        raise ValueError(f"mode must be 'strict' or 'lenient', not {mode!r}")
    name_severity = ERROR if mode == "strict" else WARNING
    diagnostics: list[Diagnostic] = []
    expected_index = 0
    for ai, action in enumerate(tree.actions):
        schema = registry.get(action.name)
        if schema is None:
            diagnostics.append(
                Diagnostic(name_severity, "unknown-action", f"unknown action '{action.name}'", ai)
            )
        seen: set[str] = set()
        for pi, param in enumerate(action.params):
            if param.name in seen:
                diagnostics.append(
                    Diagnostic(
                        ERROR,
                        "duplicate-param",
                        f"duplicate parameter '{param.name}' in action '{action.name}'",
                        ai,
                        pi,
                    )
                )
            seen.add(param.name)
            if schema is not None and schema.canonical_param(param.name) is None:
                diagnostics.append(
                    Diagnostic(
                        name_severity,
                        "unknown-param",
                        f"action '{action.name}' has no parameter '{param.name}'",
                        ai,
                        pi,
                    )
                )
            if param.var_index != expected_index:
                diagnostics.append(
                    Diagnostic(
                        ERROR,
                        "bad-numbering",
                        f"variable index {param.var_index}, expected {expected_index}",
                        ai,
                        pi,
                    )
                )
            expected_index += 1
    return diagnostics
