"""Applicative combinatory-logic terms and their normal-order evaluation.

Terms are immutable trees built from three node kinds:

* :class:`Constant` -- an opaque named value (``m``, ``cause``, ``poss``),
* :class:`Combinator` -- one of ``I T B C W S Phi`` or ``Bn`` (``B2``, ``B3``...),
* :class:`App` -- binary application, left-associative in text.

Reduction is weak: a combinator only fires once it has received its full
number of arguments (its *order*).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Optional, Union

__all__ = [
    "Constant",
    "Combinator",
    "App",
    "Term",
    "ReductionStats",
    "TermSyntaxError",
    "I", "T", "B", "C", "W", "S", "PHI", "bn",
    "app",
    "spine",
    "order",
    "is_redex",
    "has_redex",
    "contract",
    "reduce_leftmost_outermost",
    "evaluate",
    "reduction_trace",
    "combinator_free",
    "parse_term",
    "format_term",
    "DEFAULT_STEP_LIMIT",
]

DEFAULT_STEP_LIMIT = 10_000


@dataclass(frozen=True, slots=True)
class Constant:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Combinator:
    """A primitive combinator.

    ``kind`` is one of ``"I" "T" "B" "C" "W" "S" "Phi" "Bn"``; ``n`` is only
    meaningful for ``"Bn"``.  ``Bn`` with ``n == 1`` is kept distinct from
    plain ``B`` although the two behave identically.
    """

    kind: str
    n: int = 0

    def __post_init__(self) -> None:
        if self.kind not in _FIXED_ORDER and self.kind != "Bn":
            raise ValueError(f"unknown combinator kind {self.kind!r}")
        if self.kind == "Bn" and self.n < 1:
            raise ValueError("Bn needs a positive order parameter")
        if self.kind != "Bn" and self.n != 0:
            raise ValueError(f"{self.kind} takes no order parameter")

    def __str__(self) -> str:
        return f"B{self.n}" if self.kind == "Bn" else self.kind


@dataclass(frozen=True, slots=True)
class App:
    function: "Term"
    argument: "Term"

    def __str__(self) -> str:
        return format_term(self)


Term = Union[Constant, Combinator, App]

_FIXED_ORDER = {"I": 1, "T": 2, "W": 2, "B": 3, "C": 3, "S": 3, "Phi": 4}

I = Combinator("I")
T = Combinator("T")
B = Combinator("B")
C = Combinator("C")
W = Combinator("W")
S = Combinator("S")
PHI = Combinator("Phi")


def bn(n: int) -> Combinator:
    return Combinator("Bn", n)


def app(head: Term, *args: Term) -> Term:
    """Left-nested application: ``app(f, a, b)`` is ``(f a) b``."""
    for a in args:
        head = App(head, a)
    return head


def spine(t: Term) -> tuple[Term, list[Term]]:
    """Split ``h a1 ... an`` into ``(h, [a1, ..., an])``."""
    args = []
    while isinstance(t, App):
        args.append(t.argument)
        t = t.function
    args.reverse()
    return t, args


def order(c: Combinator) -> int:
    """Number of arguments ``c`` needs before it can be contracted."""
    if c.kind == "Bn":
        return c.n + 2
    return _FIXED_ORDER[c.kind]


def _rewrite(c: Combinator, a: list[Term]) -> Term:
    # a holds exactly order(c) arguments
    k = c.kind
    if k == "I":
        return a[0]
    if k == "T":
        return App(a[1], a[0])
    if k == "B":
        return App(a[0], App(a[1], a[2]))
    if k == "C":
        return app(a[0], a[2], a[1])
    if k == "W":
        return app(a[0], a[1], a[1])
    if k == "S":
        return app(a[0], a[2], App(a[1], a[2]))
    if k == "Phi":
        return app(a[0], App(a[1], a[3]), App(a[2], a[3]))
    # Bn f g a1..an -> f (g a1..an)
    return App(a[0], app(a[1], *a[2:]))


def is_redex(t: Term) -> bool:
    """True iff ``t`` is headed by a combinator holding at least its order in arguments."""
    head, args = spine(t)
    return isinstance(head, Combinator) and len(args) >= order(head)


def contract(t: Term) -> Term:
    """Contract the head redex of ``t``; surplus arguments are re-applied."""
    head, args = spine(t)
    if not isinstance(head, Combinator) or len(args) < order(head):
        raise ValueError(f"not a redex: {format_term(t)}")
    k = order(head)
    return app(_rewrite(head, args[:k]), *args[k:])


def has_redex(t: Term) -> bool:
    if is_redex(t):
        return True
    _, args = spine(t)
    return any(has_redex(a) for a in args)


def _step(t: Term, depth: int = 0) -> Optional[tuple[Term, int]]:
    # Returns (t with its leftmost-outermost redex contracted, argument depth of that redex).
    if is_redex(t):
        return contract(t), depth
    head, args = spine(t)
    for i, a in enumerate(args):
        r = _step(a, depth + 1)
        if r is not None:
            new_args = list(args)
            new_args[i] = r[0]
            return app(head, *new_args), r[1]
    return None


def reduce_leftmost_outermost(t: Term) -> Optional[Term]:
    """One normal-order step, or ``None`` when ``t`` contains no redex."""
    r = _step(t)
    return None if r is None else r[0]


def combinator_free(t: Term) -> bool:
    while isinstance(t, App):
        if not combinator_free(t.argument):
            return False
        t = t.function
    return not isinstance(t, Combinator)


@dataclass(frozen=True)
class ReductionStats:
    steps: int
    normal_form: bool
    combinator_free: bool


class _Budget:
    __slots__ = ("left", "used")

    def __init__(self, limit: int) -> None:
        self.left = limit
        self.used = 0

    def take(self) -> bool:
        if self.left <= 0:
            return False
        self.left -= 1
        self.used += 1
        return True


def _normalize(t: Term, budget: _Budget) -> Term:
    while is_redex(t):
        if not budget.take():
            return t
        t = contract(t)
    head, args = spine(t)
    if not args:
        return t
    # The head can no longer become a redex, so each argument is
    # normalized on its own, left to right.  An argument that comes
    # back unchanged is simply kept.
    out = []
    changed = False
    for a in args:
        r = _normalize(a, budget)
        changed = changed or r is not a
        out.append(r)
    return app(head, *out) if changed else t


def evaluate(t: Term, step_limit: int = DEFAULT_STEP_LIMIT) -> tuple[Term, ReductionStats]:
    """Normal-order evaluation of ``t`` bounded by ``step_limit`` contractions.

    Returns the (possibly partial) result together with its stats.  Running
    out of steps is not an error: ``stats.normal_form`` is then false and
    ``stats.steps == step_limit``.
    """
    if step_limit < 1:
        raise ValueError("step_limit must be at least 1")
    budget = _Budget(step_limit)
    result = _normalize(t, budget)
    nf = not has_redex(result)
    return result, ReductionStats(
        steps=budget.used,
        normal_form=nf,
        combinator_free=nf and combinator_free(result),
    )


def reduction_trace(
    t: Term, step_limit: int = DEFAULT_STEP_LIMIT
) -> Iterator[tuple[Term, int]]:
    """Yield ``(term, depth)`` after every normal-order step.

    ``depth`` is 0 when the contracted redex sat at the head of the whole
    term and grows by one for every argument position it was nested in.
    """
    for _ in range(step_limit):
        r = _step(t)
        if r is None:
            return
        t = r[0]
        yield r


# -- text form ---------------------------------------------------------------

class TermSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = "") -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")
_BN = re.compile(r"B([0-9]+)\Z")


def _atom(word: str, pos: int, text: str) -> Term:
    if word in _FIXED_ORDER:
        return Combinator(word)
    if word == "Φ":
        return PHI
    m = _BN.match(word)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise TermSyntaxError(f"combinator {word} needs a positive order", pos, text)
        return bn(n)
    return Constant(word)


def parse_term(text: str) -> Term:
    """Parse whitespace-juxtaposition syntax such as ``T m (T b r)``."""
    tokens = []
    pos = 0
    text_len = len(text.rstrip())
    while pos < text_len:
        m = _TOKEN.match(text, pos)
        if m is None:  # pragma: no cover - the token pattern matches any non-space
            raise TermSyntaxError("unexpected character", pos, text)
        kind = "(" if m.group(1) else ")" if m.group(2) else "word"
        tokens.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()

    stack: list[tuple[Optional[Term], int]] = []
    current: Optional[Term] = None
    for kind, word, at in tokens:
        if kind == "(":
            stack.append((current, at))
            current = None
        elif kind == ")":
            if not stack:
                raise TermSyntaxError("unbalanced ')'", at, text)
            if current is None:
                raise TermSyntaxError("empty parentheses", at, text)
            outer, _ = stack.pop()
            current = current if outer is None else App(outer, current)
        else:
            a = _atom(word, at, text)
            current = a if current is None else App(current, a)
    if stack:
        raise TermSyntaxError("unbalanced '('", stack[-1][1], text)
    if current is None:
        raise TermSyntaxError("empty term", 0, text)
    return current


def format_term(t: Term) -> str:
    """Render with minimal parentheses; application associates to the left."""
    head, args = spine(t)
    parts = [str(head)]
    for a in args:
        s = format_term(a)
        parts.append(f"({s})" if isinstance(a, App) else s)
    return " ".join(parts)

