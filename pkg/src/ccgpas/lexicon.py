"""Lexicon construction: argument-category schema, case suffixes, causatives.

The central piece is :func:`argument_categories`, which derives every
category (and its combinatory semantics) that a case-marked argument with
genotype index ``n`` may bear, given the inventory of lexical categories
that govern such an argument.  Case suffixes are then ``C\\N`` over each of
those categories.

Lexicon files are line oriented (``#`` starts a comment)::

    atom-verb oku : S|NP1|NP2 : r
    noun kitap : b
    case ACC : 2 : ı,i,u,ü
    case GEN[3sg] : 5 : in
    suffix u : (NP[3sg]\\NP5)\\N : poss
    caus t : S|NP1|NP2
    inert du
    conj ama : but
    reflexive kendini
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, NamedTuple, Optional

from .category import (
    Agr,
    Atom,
    Category,
    CategorySyntaxError,
    Functor,
    Label,
    Slash,
    arguments,
    final_result,
    format_category,
    is_bare_np,
    match,
    np,
    parse_category,
)
from .comb import B, C, I, T, W, App, Constant, Term, TermSyntaxError, app, bn, parse_term

__all__ = [
    "N",
    "CONJ",
    "Attach",
    "LexEntry",
    "ArgType",
    "CaseDecl",
    "Lexicon",
    "Reading",
    "LexiconError",
    "LexiconWarning",
    "TokenError",
    "UnknownStem",
    "UnknownSuffix",
    "SuffixCategoryMismatch",
    "is_governor",
    "argument_categories",
    "shifted_semantics",
    "case_suffix_entries",
    "causative_entries",
    "load_lexicon",
    "load_lexicon_file",
    "demo_lexicon_path",
    "analyze_token",
]

N = Atom("N")
CONJ = Atom("CONJ")


class Attach(enum.Enum):
    WORD = "word"
    SUFFIX = "suffix"


@dataclass(frozen=True)
class LexEntry:
    surface: str
    category: Category
    semantics: Term
    attach: Attach = Attach.WORD
    tag: str = ""  # e.g. the case name an entry was generated for


@dataclass(frozen=True)
class ArgType:
    """One category a case-marked argument may take.

    ``depth`` is ``None`` for the lower (bare ``NPn``) type; otherwise it is
    the number of arguments the governing category consumes before ``NPn``.
    """

    category: Category
    semantics: Term
    depth: Optional[int]
    governor: Optional[Category] = None

    @property
    def kind(self) -> str:
        if self.depth is None:
            return "lower"
        if self.depth == 0:
            return "shifted"
        return f"shifted+composed k={self.depth}"


class LexiconError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None) -> None:
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class LexiconWarning(UserWarning):
    pass


class TokenError(LookupError):
    def __init__(self, message: str, segment: str, token: str) -> None:
        super().__init__(message)
        self.segment = segment
        self.token = token


class UnknownStem(TokenError):
    pass


class UnknownSuffix(TokenError):
    pass


class SuffixCategoryMismatch(TokenError):
    pass


# -- schema ------------------------------------------------------------------

def is_governor(c: Category) -> bool:
    """A functor whose arguments are all genotype-indexed NPs (a verb-like category)."""
    args = arguments(c)
    return bool(args) and all(is_bare_np(a) for _, a in args)


def _rebuild(result: Category, args: list[tuple[Slash, Category]]) -> Category:
    # args outermost first, as returned by arguments()
    for slash, a in reversed(args):
        result = Functor(result, slash, a)
    return result


def _with_result_agr(c: Category, agr: Agr) -> Optional[Category]:
    res = final_result(c)
    if res.head != "NP":
        return c
    merged = res.agr.unify(agr)
    if merged is None:
        return None
    return _rebuild(Atom(res.head, res.genotype, merged), arguments(c))


def shifted_semantics(depth: int) -> Term:
    """``T`` for an outermost argument, else ``B B`` wrapped ``depth`` times around it."""
    t: Term = T
    for _ in range(depth):
        t = app(B, B, t)
    return t


def argument_categories(n: int, inventory: Iterable[Category],
                        agr: Optional[Agr] = None) -> list[ArgType]:
    """All categories for an argument with genotype ``n``.

    For every inventory category whose highest genotype argument is ``NPn``,
    the argument may look for that category to its right or to its left and
    yield what remains once ``NPn`` is removed.  The lower type ``NPn`` is
    added whenever at least one governor exists.  ``agr``, when given, is
    imposed on the final ``NP`` result of noun-governing categories and
    filters out incompatible ones.
    """
    if n < 1:
        raise ValueError("genotype index must be positive")
    out: list[ArgType] = []
    seen = set()
    for governed in inventory:
        if not is_governor(governed):
            continue
        args = arguments(governed)
        if max(a.genotype for _, a in args) != n:
            continue
        if agr is not None:
            governed = _with_result_agr(governed, agr)
            if governed is None:
                continue
            args = arguments(governed)
        depth = next(i for i, (_, a) in enumerate(args) if a.genotype == n)
        remainder = _rebuild(final_result(governed), args[:depth] + args[depth + 1:])
        for slash in (Slash.FORWARD, Slash.BACKWARD):
            cat = Functor(remainder, slash, governed)
            if cat not in seen:
                seen.add(cat)
                out.append(ArgType(cat, shifted_semantics(depth), depth, governed))
    if out:
        out.insert(0, ArgType(np(n), I, None))
    return out


def case_suffix_entries(case_name: str, n: int, allomorphs: list[str],
                        inventory: Iterable[Category],
                        agr: Optional[Agr] = None) -> list[LexEntry]:
    """Suffix entries ``C\\N`` for every allomorph and every argument category."""
    if not allomorphs:
        raise ValueError("a case needs at least one allomorph")
    types = argument_categories(n, inventory, agr)
    return [
        LexEntry(form, Functor(t.category, Slash.BACKWARD, N), t.semantics,
                 Attach.SUFFIX, case_name)
        for form in allomorphs
        for t in types
    ]


def _permuter(a: int) -> Term:
    # P v x0 x1 .. x(a-1) -> v x1 .. x(a-1) x0
    if a == 1:
        return I
    if a == 2:
        return C
    return app(B, C, App(B, _permuter(a - 1)))


def causative_entries(base: Category, surface: str = "CAUS",
                      cause: str = "cause") -> LexEntry:
    """The causative suffix entry for verbs of category ``base``.

    The derived verb takes the causee as a new outermost argument
    ``NP(g+1)`` and keeps the base arguments after it.  Its meaning puts the
    causee in the base verb's subject slot: for a transitive base the entry
    is ``B3 cause C`` so that ``B3 cause C r c b m`` reduces to
    ``cause (r b c) m``.
    """
    args = arguments(base)
    if not args or final_result(base) != Atom("S"):
        raise ValueError(f"causative base must be a verb category ending in S, not {format_category(base)}")
    if not is_governor(base):
        raise ValueError(f"causative base must take only indexed NP arguments: {format_category(base)}")
    g = max(a.genotype for _, a in args)
    caused = Functor(base, Slash.NEUTRAL, np(g + 1))
    sem = app(bn(len(args) + 1), Constant(cause), _permuter(len(args)))
    return LexEntry(surface, Functor(caused, Slash.BACKWARD, base), sem, Attach.SUFFIX, "CAUS")


# -- lexicon -----------------------------------------------------------------

@dataclass(frozen=True)
class CaseDecl:
    name: str
    genotype: int
    allomorphs: tuple[str, ...]
    agr: Optional[Agr] = None


@dataclass(frozen=True)
class Lexicon:
    """Word and suffix entries keyed by surface form.

    ``inventory`` lists the governing categories the case schema is
    instantiated against: every verb, plus every governor produced by an
    explicit or causative suffix (e.g. the possessed-noun ``NP\\NP5``).
    """

    words: dict = field(default_factory=dict)
    suffixes: dict = field(default_factory=dict)
    inventory: tuple = ()
    nouns: frozenset = frozenset()
    inert: frozenset = frozenset()
    cases: tuple = ()

    def lookup(self, surface: str) -> list[LexEntry]:
        return list(self.words.get(surface, ()))

    def lookup_suffix(self, surface: str) -> list[LexEntry]:
        return list(self.suffixes.get(surface, ()))

    def __len__(self) -> int:
        return sum(map(len, self.words.values())) + sum(map(len, self.suffixes.values()))


def _parse_agr(text: str, line: int) -> Agr:
    try:
        c = parse_category(f"NP[{text}]")
    except CategorySyntaxError as e:
        raise LexiconError(f"bad agreement {text!r}", line) from e
    return c.agr


class _Builder:
    def __init__(self) -> None:
        self.words: dict[str, list[LexEntry]] = {}
        self.suffixes: dict[str, list[LexEntry]] = {}
        self.inventory: list[Category] = []
        self.nouns: set[str] = set()
        self.inert: set[str] = set()
        self.cases: list[CaseDecl] = []
        self.reflexives: list[tuple[str, int]] = []

    def add(self, table: dict, entry: LexEntry, line: Optional[int]) -> None:
        bucket = table.setdefault(entry.surface, [])
        for e in bucket:
            if e.category == entry.category and e.semantics == entry.semantics:
                where = f"line {line}: " if line is not None else ""
                warnings.warn(f"{where}duplicate entry for {entry.surface!r} "
                              f"({format_category(entry.category)})", LexiconWarning, stacklevel=4)
                return
        bucket.append(entry)

    def govern(self, c: Category) -> None:
        if is_governor(c) and c not in self.inventory:
            self.inventory.append(c)

    def build(self) -> Lexicon:
        for decl in self.cases:
            for e in case_suffix_entries(decl.name, decl.genotype, list(decl.allomorphs),
                                         self.inventory, decl.agr):
                self.add(self.suffixes, e, None)
        for surface, line in self.reflexives:
            types = [t for t in argument_categories(2, self.inventory) if t.depth is not None]
            if not types:
                raise LexiconError("reflexive needs a verb governing NP2", line)
            for t in types:
                self.add(self.words, LexEntry(surface, t.category, W, Attach.WORD, "REFL"), line)
        return Lexicon(
            words={k: tuple(v) for k, v in self.words.items()},
            suffixes={k: tuple(v) for k, v in self.suffixes.items()},
            inventory=tuple(self.inventory),
            nouns=frozenset(self.nouns),
            inert=frozenset(self.inert),
            cases=tuple(self.cases),
        )


def _fields(rest: str, count: int, directive: str, line: int, optional: int = 0) -> list[str]:
    parts = [p.strip() for p in rest.split(":")]
    if not count - optional <= len(parts) <= count:
        raise LexiconError(f"{directive} expects {count} ':'-separated fields, got {len(parts)}", line)
    if not parts[0]:
        raise LexiconError(f"{directive} needs a surface form", line)
    return parts + [""] * (count - len(parts))


def _category(text: str, line: int) -> Category:
    try:
        return parse_category(text)
    except CategorySyntaxError as e:
        raise LexiconError(f"bad category {text!r}: {e}", line) from e


def _term(text: str, line: int) -> Term:
    try:
        return parse_term(text)
    except TermSyntaxError as e:
        raise LexiconError(f"bad term {text!r}: {e}", line) from e


def load_lexicon(text: str) -> Lexicon:
    """Build a :class:`Lexicon` from lexicon-file text.

    Case declarations are expanded after the whole file has been read, so
    verbs may be declared after the cases that refer to them.
    """
    b = _Builder()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        directive, _, rest = line.partition(" ")
        rest = rest.strip()
        if directive in ("atom-verb", "verb"):
            surface, cat, sem = _fields(rest, 3, directive, lineno)
            c = _category(cat, lineno)
            if not is_governor(c):
                raise LexiconError(f"verb category must take indexed NP arguments: {cat}", lineno)
            b.add(b.words, LexEntry(surface, c, _term(sem, lineno)), lineno)
            b.govern(c)
        elif directive == "noun":
            surface, const = _fields(rest, 2, directive, lineno)
            b.add(b.words, LexEntry(surface, N, _term(const, lineno)), lineno)
            b.nouns.add(surface)
        elif directive == "case":
            name, n, forms = _fields(rest, 3, directive, lineno)
            agr = None
            if "[" in name:
                name, _, agr_text = name.partition("[")
                agr = _parse_agr(agr_text.rstrip("]"), lineno)
            try:
                genotype = int(n)
            except ValueError:
                raise LexiconError(f"genotype index must be an integer, not {n!r}", lineno) from None
            if genotype < 1:
                raise LexiconError("genotype index must be positive", lineno)
            allomorphs = tuple(f.strip() for f in forms.split(",")) if forms else ("",)
            b.cases.append(CaseDecl(name, genotype, allomorphs, agr))
        elif directive == "suffix":
            surface, cat, sem = _fields(rest, 3, directive, lineno)
            c = _category(cat, lineno)
            if not (isinstance(c, Functor) and c.slash is Slash.BACKWARD):
                raise LexiconError(f"suffix category must be backward-looking X\\Y: {cat}", lineno)
            b.add(b.suffixes, LexEntry(surface, c, _term(sem, lineno), Attach.SUFFIX), lineno)
            b.govern(c.result)
        elif directive == "caus":
            surface, base, cause = _fields(rest, 3, directive, lineno, optional=1)
            base_cat = _category(base, lineno)
            try:
                e = causative_entries(base_cat, surface, cause or "cause")
            except ValueError as err:
                raise LexiconError(str(err), lineno) from err
            b.add(b.suffixes, e, lineno)
            b.govern(e.category.result)
        elif directive == "inert":
            for form in rest.split(","):
                if form.strip():
                    b.inert.add(form.strip())
        elif directive == "conj":
            surface, const = _fields(rest, 2, directive, lineno)
            b.add(b.words, LexEntry(surface, CONJ, _term(const, lineno)), lineno)
        elif directive == "reflexive":
            if not rest:
                raise LexiconError("reflexive needs a surface form", lineno)
            b.reflexives.append((rest, lineno))
        else:
            raise LexiconError(f"unknown directive {directive!r}", lineno)
    return b.build()


def load_lexicon_file(path) -> Lexicon:
    return load_lexicon(Path(path).read_text(encoding="utf-8"))


def demo_lexicon_path() -> Path:
    return Path(__file__).with_name("data") / "turkish.lex"


# -- morphology --------------------------------------------------------------

class Reading(NamedTuple):
    category: Category
    semantics: Term
    label: Label = Label.OT


def analyze_token(token: str, lex: Lexicon) -> list[Reading]:
    """Category assignments for a hyphen-segmented token such as ``kitab-ı``.

    Each suffix is applied backward to the readings built so far; its
    semantics is applied to theirs without evaluation (``T b`` for
    ``kitab-ı``).  Inert suffixes (tense, aspect) leave readings untouched.
    A bare noun also receives its zero-suffix (nominative) readings.
    """
    stem, *suffixes = token.split("-")
    entries = lex.lookup(stem)
    if not entries:
        raise UnknownStem(f"unknown stem {stem!r} in token {token!r}", stem, token)
    readings = [(e.category, e.semantics) for e in entries]
    for seg in suffixes:
        if seg in lex.inert:
            continue
        candidates = lex.lookup_suffix(seg) if seg else []
        if not candidates:
            raise UnknownSuffix(f"unknown suffix {seg!r} in token {token!r}", seg, token)
        readings = _attach(readings, candidates)
        if not readings:
            raise SuffixCategoryMismatch(
                f"suffix {seg!r} does not attach to what precedes it in {token!r}", seg, token)
    if not suffixes and stem in lex.nouns:
        readings += _attach([r for r in readings if r[0] == N], lex.lookup_suffix(""))
    out: list[Reading] = []
    for cat, sem in readings:
        r = Reading(cat, sem, Label.OT)
        if r not in out:
            out.append(r)
    return out


def _attach(readings, suffix_entries):
    out = []
    for cat, sem in readings:
        for e in suffix_entries:
            sc = e.category
            if match(sc.argument, cat) is not None:
                out.append((sc.result, App(e.semantics, sem)))
    return out
