"""Independent reference implementations used to cross-check the library.

Everything here is deliberately primitive: a stack-based bracket matcher
that produces nested lists, a shape interpreter that maps those lists onto
(sequence, action, parameter) tuples, and a token-set counter.  None of it
shares code with seqlang, so agreement between the two is meaningful.
"""

from __future__ import annotations


def split_tokens(text):
    """Whitespace tokenization: space, tab, newline; runs collapse."""
    out = []
    cur = []
    for ch in text:
        if ch in (" ", "\t", "\n"):
            if cur:
                out.append("".join(cur))
                cur = []
        else:
            cur.append(ch)
    if cur:
        out.append("".join(cur))
    return out


def nest(tokens):
    """Bracket-match a token list into nested Python lists.

    Raises ValueError on unbalanced parens or trailing material.  This is
    the oracle for "does this token stream have well-formed nesting", not
    for the mission grammar itself.
    """
    stack = [[]]
    for tok in tokens:
        if tok == "(":
            child = []
            stack[-1].append(child)
            stack.append(child)
        elif tok == ")":
            if len(stack) == 1:
                raise ValueError("unbalanced close paren")
            stack.pop()
        else:
            stack[-1].append(tok)
    if len(stack) != 1:
        raise ValueError("unclosed paren")
    top = stack[0]
    if len(top) != 1 or not isinstance(top[0], list):
        raise ValueError("expected exactly one parenthesized form")
    return top[0]


def as_sequence(form):
    """Interpret a nested list as (action, ...) tuples under the grammar.

    Returns a list of (name, [(param_name, var_index, value), ...]).
    Raises ValueError where the shape does not fit.  Kept separate from
    nest() so structural and grammatical failures stay distinguishable.
    """
    if not form or form[0] != "seq":
        raise ValueError("head must be seq")
    actions = []
    for item in form[1:]:
        if not isinstance(item, list) or not item or not isinstance(item[0], str):
            raise ValueError("bad action form")
        name = item[0]
        if name == "seq":
            raise ValueError("nested seq")
        params = []
        for p in item[1:]:
            if not isinstance(p, list) or len(p) != 2:
                raise ValueError("bad parameter form")
            pname, inner = p
            if not isinstance(pname, str) or not isinstance(inner, list):
                raise ValueError("bad parameter form")
            if len(inner) != 2 or not isinstance(inner[0], str):
                raise ValueError("bad variable form")
            var, values = inner
            if not var.startswith("$") or not var[1:].isdigit():
                raise ValueError("bad variable token")
            if not isinstance(values, list) or not values:
                raise ValueError("empty value")
            if any(isinstance(v, list) for v in values):
                raise ValueError("nested value")
            params.append((pname, int(var[1:]), " ".join(values)))
        actions.append((name, params))
    return actions


def distinct_tokens(texts):
    """Size of the distinct whitespace-token set across all texts."""
    seen = set()
    for t in texts:
        seen.update(split_tokens(t))
    return len(seen)
