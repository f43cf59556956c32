"""Labelled CKY chart parsing with the six CCG rules and coordination.

Every edge carries a derivation label.  Composition outputs are labelled
``FC`` (forward, crossing or not) or ``BC`` (backward); everything else is
``OT``.  A forward rule refuses an ``FC`` primary functor and a backward rule
a ``BC`` one, which leaves one derivation per reading instead of one per
bracketing.

Application additionally enforces argument licensing: a bare ``NPk`` may
only be consumed by a functor whose result mentions no term ranked above
``k``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .category import (
    Atom,
    Category,
    Functor,
    Label,
    Slash,
    arity,
    contains_genotype_below,
    format_category,
    is_bare_np,
    match,
)
from .comb import B, PHI, App, Term, app, format_term
from .lexicon import CONJ, Lexicon, analyze_token

__all__ = [
    "LowerTypeMode",
    "ParseOptions",
    "Edge",
    "Chart",
    "Derivation",
    "ParseResult",
    "ResourceExhausted",
    "UnsupportedArity",
    "combine",
    "coordinate",
    "lexical_edges",
    "parse",
    "parse_chart",
    "parse_edges",
    "derivation_semantics",
    "format_derivation",
]

FWD, BWD = Slash.FORWARD, Slash.BACKWARD


class LowerTypeMode(enum.Enum):
    ON_FAIL = "onfail"
    ALWAYS = "always"
    NEVER = "never"


@dataclass(frozen=True)
class ParseOptions:
    goal: Category = Atom("S")
    lower_type_mode: LowerTypeMode = LowerTypeMode.ON_FAIL
    max_edges: int = 200_000


class ResourceExhausted(RuntimeError):
    pass


class UnsupportedArity(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Edge:
    start: int
    end: int
    category: Category
    label: Label
    semantics: Term
    rule: str = "lex"
    children: tuple = ()
    token: Optional[str] = None

    @property
    def span(self) -> tuple[int, int]:
        return self.start, self.end

    @property
    def key(self):
        return (self.start, self.end, self.category, self.label, self.semantics)

    def walk(self) -> Iterator["Edge"]:
        """This edge and all edges below it, children before parents."""
        for c in self.children:
            yield from c.walk()
        yield self

    def __repr__(self) -> str:
        return (f"Edge({self.start}-{self.end} {self.rule} {format_category(self.category)} "
                f"-{self.label} : {format_term(self.semantics)})")


def _licensed(result: Category, argument: Category) -> bool:
    if not is_bare_np(argument):
        return True
    return not contains_genotype_below(result, argument.genotype)


def combine(left: Edge, right: Edge) -> list[Edge]:
    """Every edge derivable from two adjacent edges by one rule instance."""
    if left.end != right.start:
        raise ValueError("edges are not adjacent")
    out = []
    span = (left.start, right.end)
    lc, rc = left.category, right.category

    def edge(cat, label, sem, rule, children):
        out.append(Edge(*span, cat, label, sem, rule, children))

    # forward rules: left is the primary functor X/Y
    if isinstance(lc, Functor) and lc.slash.admits(FWD) and left.label is not Label.FC:
        x, y = lc.result, lc.argument
        if match(y, rc) is not None and _licensed(x, rc):
            edge(x, Label.OT, App(left.semantics, right.semantics), ">", (left, right))
        if isinstance(rc, Functor) and match(y, rc.result) is not None:
            for rule, d in ((">B", FWD), (">Bx", BWD)):
                if rc.slash.admits(d):
                    edge(Functor(x, d, rc.argument), Label.FC,
                         app(B, left.semantics, right.semantics), rule, (left, right))

    # backward rules: right is the primary functor X\Y
    if isinstance(rc, Functor) and rc.slash.admits(BWD) and right.label is not Label.BC:
        x, y = rc.result, rc.argument
        if match(y, lc) is not None and _licensed(x, lc):
            edge(x, Label.OT, App(right.semantics, left.semantics), "<", (left, right))
        if isinstance(lc, Functor) and match(y, lc.result) is not None:
            for rule, d in (("<B", BWD), ("<Bx", FWD)):
                if lc.slash.admits(d):
                    edge(Functor(x, d, lc.argument), Label.BC,
                         app(B, right.semantics, left.semantics), rule, (left, right))
    return out


def coordinate(left: Edge, conj: Edge, right: Edge) -> Optional[Edge]:
    """Conjoin two like-category edges around a coordinator edge.

    Atomic conjuncts give ``conj p q``; one-argument functors give
    ``Phi conj f g`` so that the shared argument is distributed to both.
    """
    if not (left.end == conj.start and conj.end == conj.start + 1 and conj.end == right.start):
        raise ValueError("coordination spans are not adjacent")
    sub = match(left.category, right.category)
    if sub is None:
        return None
    cat = sub.apply(left.category)
    n = arity(cat)
    if n == 0:
        sem = app(conj.semantics, left.semantics, right.semantics)
    elif n == 1:
        sem = app(PHI, conj.semantics, left.semantics, right.semantics)
    else:
        raise UnsupportedArity(f"cannot coordinate {format_category(cat)} (arity {n})")
    return Edge(left.start, right.end, cat, Label.OT, sem, "∧", (left, conj, right))


class Chart:
    """CKY cells of edges; structurally identical edges are merged.

    ``alternatives`` keeps every way an edge key was built, so the number of
    distinct derivation trees under an edge can still be counted.
    """

    def __init__(self, n: int, max_edges: int) -> None:
        self.n = n
        self.max_edges = max_edges
        self.cells: dict[tuple[int, int], list[Edge]] = {}
        self.alternatives: dict[tuple, list[Edge]] = {}

    def __getitem__(self, span: tuple[int, int]) -> list[Edge]:
        return self.cells.get(span, [])

    def __len__(self) -> int:
        return len(self.alternatives)

    def add(self, e: Edge) -> bool:
        alts = self.alternatives.get(e.key)
        if alts is not None:
            alts.append(e)
            return False
        if len(self.alternatives) >= self.max_edges:
            raise ResourceExhausted(f"chart exceeded {self.max_edges} edges")
        self.alternatives[e.key] = [e]
        self.cells.setdefault(e.span, []).append(e)
        return True

    def edges(self) -> Iterator[Edge]:
        for cell in self.cells.values():
            yield from cell

    def tree_count(self, e: Edge, _memo: Optional[dict] = None) -> int:
        memo = {} if _memo is None else _memo
        if e.key in memo:
            return memo[e.key]
        total = 0
        for alt in self.alternatives.get(e.key, [e]):
            n = 1
            for c in alt.children:
                n *= self.tree_count(c, memo)
            total += n
        memo[e.key] = total
        return total


@dataclass(frozen=True)
class Derivation:
    root: Edge
    tokens: tuple[str, ...] = ()

    @property
    def category(self) -> Category:
        return self.root.category

    @property
    def semantics(self) -> Term:
        return self.root.semantics

    def steps(self) -> list[Edge]:
        return list(self.root.walk())


@dataclass
class ParseResult:
    tokens: tuple[str, ...]
    chart: Chart
    derivations: list[Derivation]
    lower_types: bool = False  # whether bare NPk readings were admitted
    trees: list[int] = field(default_factory=list)


def lexical_edges(tokens: Sequence[str], lex: Lexicon) -> list[list[Edge]]:
    out = []
    for i, tok in enumerate(tokens):
        out.append([Edge(i, i + 1, r.category, r.label, r.semantics, "lex", (), tok)
                     for r in analyze_token(tok, lex)])
    return out


def _fill(tokens, lexical, opts: ParseOptions, lower: bool) -> ParseResult:
    n = len(tokens)
    chart = Chart(n, opts.max_edges)
    for cell in lexical:
        for e in cell:
            if lower or not is_bare_np(e.category):
                chart.add(e)
    for width in range(2, n + 1):
        for i in range(n - width + 1):
            j = i + width
            for m in range(i + 1, j):
                for left in chart[i, m]:
                    for right in chart[m, j]:
                        for e in combine(left, right):
                            chart.add(e)
            for m in range(i + 1, j - 1):
                for conj in chart[m, m + 1]:
                    if conj.rule != "lex" or conj.category != CONJ:
                        continue
                    for left in chart[i, m]:
                        for right in chart[m + 1, j]:
                            try:
                                e = coordinate(left, conj, right)
                            except UnsupportedArity:
                                continue
                            if e is not None:
                                chart.add(e)
    roots = [e for e in chart[0, n] if match(opts.goal, e.category) is not None]
    derivs = [Derivation(e, tuple(tokens)) for e in roots]
    memo: dict = {}
    return ParseResult(tuple(tokens), chart, derivs, lower,
                       [chart.tree_count(e, memo) for e in roots])


def parse_chart(tokens: Sequence[str], lex: Lexicon,
                opts: ParseOptions = ParseOptions()) -> ParseResult:
    """Parse and keep the chart (see :func:`parse`)."""
    tokens = list(tokens)
    if not tokens:
        raise ValueError("nothing to parse")
    return parse_edges(lexical_edges(tokens, lex), opts, tokens)


def parse_edges(lexical: Sequence[Sequence[Edge]], opts: ParseOptions = ParseOptions(),
                tokens: Optional[Sequence[str]] = None) -> ParseResult:
    """Parse from ready-made lexical edges, one list per position.

    Useful for abstract grammars whose categories no lexicon file declares.
    """
    if not lexical:
        raise ValueError("nothing to parse")
    tokens = list(tokens) if tokens is not None else [str(i) for i in range(len(lexical))]
    mode = opts.lower_type_mode
    if mode is LowerTypeMode.ALWAYS:
        return _fill(tokens, lexical, opts, True)
    first = _fill(tokens, lexical, opts, False)
    if first.derivations or mode is LowerTypeMode.NEVER:
        return first
    if not any(is_bare_np(e.category) for cell in lexical for e in cell):
        return first
    return _fill(tokens, lexical, opts, True)


def parse(tokens: Sequence[str], lex: Lexicon,
          opts: ParseOptions = ParseOptions()) -> list[Derivation]:
    """All goal derivations of ``tokens``.

    With the default ``ON_FAIL`` mode, lower-type (bare ``NPk``) readings are
    only admitted in a second pass when the first pass finds nothing.
    """
    return parse_chart(tokens, lex, opts).derivations


def derivation_semantics(d: Derivation) -> Term:
    """The combinatory form of a derivation, unevaluated."""
    return d.root.semantics


def format_derivation(d: Derivation) -> str:
    """One line per rule application, leaves first."""
    lines = []
    for e in d.root.walk():
        what = e.token if e.rule == "lex" else ""
        lines.append(f"{e.start}-{e.end}  {e.rule:<3}  {format_category(e.category)}  "
                     f"-{e.label}  : {format_term(e.semantics)}" + (f"   {what}" if what else ""))
    return "\n".join(lines)
