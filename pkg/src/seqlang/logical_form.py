"""Parsing and rendering of mission logical forms.

A logical form is a fully parenthesized, space-separated expression
describing one mission: a flat sequence of actions, each carrying named
parameters bound to numbered variables.

    SEQ    := "(" "seq" ACTION* ")"
    ACTION := "(" name PARAM* ")"
    PARAM  := "(" name "(" "$" INT "(" VALUE ")" ")" ")"

``name`` is a lowercase identifier (``[a-z][a-z0-9_]*``), the variable is a
dollar sign glued to a decimal index (``$0``, ``$1``, ...), and VALUE is one
or more arbitrary tokens other than parens.  Parens are tokens of their own
and must be surrounded by whitespace; there is no escaping, no comments, and
sequences do not nest.

Example::

    ( seq ( flatten ( num ( $0 ( 2 ) ) ) ) ( goal ) )

Parsing is recursive descent over a token cursor with one token of
lookahead and no backtracking; the first problem raises a subclass of
:class:`LogicalFormError` carrying the zero-based token position.
:func:`render` goes the other way and always re-numbers variables
0, 1, 2, ... in order of appearance, so ``render(parse_logical_form(s))``
is the canonical spelling of ``s``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

IDENT_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
VAR_RE = re.compile(r"\$(0|[1-9][0-9]*)\Z")

RESERVED_HEAD = "seq"


class LogicalFormError(Exception):
    """Base class for every tokenize/parse failure in this module."""


@dataclass(eq=False)
class FormSyntaxError(LogicalFormError):
    """Structural mismatch: the token at ``position`` is not what the

    grammar requires there.  ``found`` is None past the end of input.
    """

    position: int
    expected: str
    found: str | None

    def __str__(self) -> str:
        found = "end of input" if self.found is None else f"'{self.found}'"
        return f"syntax error at token {self.position}: expected {self.expected}, found {found}"


@dataclass(eq=False)
class TrailingTokensError(LogicalFormError):
    """A complete sequence parsed but unconsumed tokens remain."""

    position: int
    found: str

    def __str__(self) -> str:
        return f"trailing tokens at token {self.position}: '{self.found}'"


@dataclass(eq=False)
class InvalidNameError(LogicalFormError):
    """An action or parameter name that is not a lowercase identifier."""

    position: int
    found: str

    def __str__(self) -> str:
        return f"invalid name at token {self.position}: '{self.found}' (want [a-z][a-z0-9_]*)"


@dataclass(eq=False)
class BadVariableError(LogicalFormError):
    """The variable slot does not hold ``$`` plus a plain decimal index."""

    position: int
    found: str

    def __str__(self) -> str:
        return f"bad variable at token {self.position}: '{self.found}' (want $ followed by a decimal index)"


@dataclass(eq=False)
class EmptyValueError(LogicalFormError):
    """A parameter whose value group closed without a single token."""

    position: int

    def __str__(self) -> str:
        return f"empty parameter value at token {self.position}"


@dataclass(frozen=True)
class Token:
    """One lexeme plus its zero-based index in the token stream."""

    lexeme: str
    position: int


def tokenize(text: str) -> list[Token]:
    """Split ``text`` on runs of space, tab, and newline.

    Tokenization never fails: any non-separator byte sequence is a token,
    including lone parens and ``$`` fragments.  Positions count tokens,
    not characters.
    """
    lexemes = [piece for piece in re.split(r"[ \t\n]+", text) if piece]
    return [Token(lexeme, i) for i, lexeme in enumerate(lexemes)]


@dataclass
class TokenCursor:
    """Read head over a token list: inspect one token, advance by one."""

    tokens: list[Token]
    index: int = 0

    def current(self) -> Token | None:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def peek(self, offset: int = 1) -> Token | None:
        pos = self.index + offset
        if pos < len(self.tokens):
            return self.tokens[pos]
        return None

    def skip(self) -> None:
        if self.index >= len(self.tokens):
            raise IndexError("cursor already exhausted")
        self.index += 1

    def at_end(self) -> bool:
        return self.index >= len(self.tokens)


@dataclass(frozen=True)
class ParamNode:
    """One named parameter: ``( name ( $i ( value tokens ) ) )``.

    ``value`` stores the value tokens joined by single spaces; it is
    non-empty and contains no parens, tabs, or newlines, so rendering it
    back into token form is unambiguous.
    """

    name: str
    var_index: int
    value: str

    def __post_init__(self) -> None:
        if not IDENT_RE.match(self.name):
            raise ValueError(f"parameter name {self.name!r} is not a lowercase identifier")
        if not isinstance(self.var_index, int) or self.var_index < 0:
            raise ValueError(f"variable index {self.var_index!r} must be a non-negative int")
        pieces = self.value.split(" ") if isinstance(self.value, str) else []
        if not pieces or any(not p or p in ("(", ")") or "\t" in p or "\n" in p for p in pieces):
            raise ValueError(f"parameter value {self.value!r} is not single-spaced paren-free tokens")

    def value_tokens(self) -> list[str]:
        return self.value.split(" ")


@dataclass(frozen=True)
class ActionNode:
    """One action invocation with its parameters in written order."""

    name: str
    params: tuple[ParamNode, ...] = ()

    def __post_init__(self) -> None:
        if not IDENT_RE.match(self.name):
            raise ValueError(f"action name {self.name!r} is not a lowercase identifier")
        object.__setattr__(self, "params", tuple(self.params))


@dataclass(frozen=True)
class SequenceNode:
    """A whole mission: actions run left to right, no nesting.

    ``seq`` is the grammar's reserved head word, so no action may use it
    as a name; everything else is representable.
    """

    actions: tuple[ActionNode, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "actions", tuple(self.actions))
        for action in self.actions:
            if action.name == RESERVED_HEAD:
                raise ValueError("actions may not be named 'seq'")

    def param_count(self) -> int:
        return sum(len(action.params) for action in self.actions)


def _demand(cursor: TokenCursor, expected: str) -> Token:
    tok = cursor.current()
    if tok is None:
        raise FormSyntaxError(len(cursor.tokens), expected, None)
    return tok


def _expect(cursor: TokenCursor, lexeme: str) -> Token:
    tok = _demand(cursor, f"'{lexeme}'")
    if tok.lexeme != lexeme:
        raise FormSyntaxError(tok.position, f"'{lexeme}'", tok.lexeme)
    cursor.skip()
    return tok


def parse_sequence(cursor: TokenCursor) -> SequenceNode:
    """Parse ``( seq ACTION* )`` at the cursor and leave it just past the

    closing paren.  A nested ``seq`` head is rejected here, before
    descending into the action.
    """
    _expect(cursor, "(")
    _expect(cursor, RESERVED_HEAD)
    actions: list[ActionNode] = []
    while True:
        tok = _demand(cursor, "'(' or ')'")
        if tok.lexeme == ")":
            cursor.skip()
            return SequenceNode(tuple(actions))
        if tok.lexeme != "(":
            raise FormSyntaxError(tok.position, "'(' or ')'", tok.lexeme)
        head = cursor.peek(1)
        if head is not None and head.lexeme == RESERVED_HEAD:
            raise FormSyntaxError(head.position, "an action name (sequences do not nest)", head.lexeme)
        actions.append(parse_action(cursor))


def parse_action(cursor: TokenCursor) -> ActionNode:
    """Parse ``( name PARAM* )``.  Any lowercase identifier is accepted as

    the name; whether it is a known action is the registry's business,
    not the parser's.
    """
    _expect(cursor, "(")
    name_tok = _demand(cursor, "an action name")
    if not IDENT_RE.match(name_tok.lexeme):
        raise InvalidNameError(name_tok.position, name_tok.lexeme)
    cursor.skip()
    params: list[ParamNode] = []
    while True:
        tok = _demand(cursor, "'(' or ')'")
        if tok.lexeme == ")":
            cursor.skip()
            return ActionNode(name_tok.lexeme, tuple(params))
        if tok.lexeme != "(":
            raise FormSyntaxError(tok.position, "'(' or ')'", tok.lexeme)
        params.append(parse_parameter(cursor))


def parse_parameter(cursor: TokenCursor) -> ParamNode:
    """Parse ``( name ( $i ( value+ ) ) )``.

    The value is every token up to the first close paren; at least one is
    required, and an open paren inside the value group is an error.
    """
    _expect(cursor, "(")
    name_tok = _demand(cursor, "a parameter name")
    if not IDENT_RE.match(name_tok.lexeme):
        raise InvalidNameError(name_tok.position, name_tok.lexeme)
    cursor.skip()
    _expect(cursor, "(")
    var_tok = _demand(cursor, "a '$' variable")
    match = VAR_RE.match(var_tok.lexeme)
    if match is None:
        raise BadVariableError(var_tok.position, var_tok.lexeme)
    cursor.skip()
    _expect(cursor, "(")
    values: list[str] = []
    while True:
        tok = _demand(cursor, "a value token or ')'")
        if tok.lexeme == ")":
            if not values:
                raise EmptyValueError(tok.position)
            cursor.skip()
            break
        if tok.lexeme == "(":
            raise FormSyntaxError(tok.position, "a value token or ')'", tok.lexeme)
        values.append(tok.lexeme)
        cursor.skip()
    _expect(cursor, ")")
    _expect(cursor, ")")
    return ParamNode(name_tok.lexeme, int(match.group(1)), " ".join(values))


def parse_logical_form(text: str) -> SequenceNode:
    """Tokenize and parse a complete logical form.

    The whole input must be one sequence; anything after its closing
    paren raises :class:`TrailingTokensError`.
    """
    cursor = TokenCursor(tokenize(text))
    tree = parse_sequence(cursor)
    leftover = cursor.current()
    if leftover is not None:
        raise TrailingTokensError(leftover.position, leftover.lexeme)
    return tree


def render(tree: SequenceNode) -> str:
    """Serialize a sequence to its canonical single-line spelling.

    Tokens are joined by single spaces and variables are re-numbered
    0, 1, 2, ... in order of appearance, whatever indices the tree
    carries.
    """
    tokens = ["(", RESERVED_HEAD]
    counter = 0
    for action in tree.actions:
        tokens.append("(")
        tokens.append(action.name)
        for param in action.params:
            tokens.extend(("(", param.name, "(", f"${counter}", "("))
            tokens.extend(param.value_tokens())
            tokens.extend((")", ")", ")"))
            counter += 1
        tokens.append(")")
    tokens.append(")")
    return " ".join(tokens)
