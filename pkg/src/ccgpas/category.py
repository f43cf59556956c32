"""CCG categories: construction, text form, unification and licensing.

Categories are immutable.  Atoms carry a head symbol (``S``, ``N``, ``NP``
or any other upper-case name), an optional genotype index (``NP`` only) and
optional person/number agreement (``NP`` only).  Functors carry a slash that
is forward ``/``, backward ``\\`` or neutral ``|``; the neutral slash is a
lexical shorthand that parsing instantiates to one of the other two.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field, replace
from typing import Iterator, Optional, Union

__all__ = [
    "Agr",
    "Slash",
    "Atom",
    "Functor",
    "Category",
    "Label",
    "Substitution",
    "CategorySyntaxError",
    "match",
    "contains_genotype_below",
    "parse_category",
    "format_category",
    "np",
    "arguments",
    "final_result",
    "arity",
    "is_bare_np",
    "has_neutral",
]


@dataclass(frozen=True, slots=True)
class Agr:
    person: Optional[int] = None
    number: Optional[str] = None

    def __post_init__(self) -> None:
        if self.person is not None and self.person not in (1, 2, 3):
            raise ValueError(f"person must be 1, 2 or 3, not {self.person!r}")
        if self.number is not None and self.number not in ("sg", "pl"):
            raise ValueError(f"number must be 'sg' or 'pl', not {self.number!r}")

    @property
    def empty(self) -> bool:
        return self.person is None and self.number is None

    def unify(self, other: "Agr") -> Optional["Agr"]:
        person, number = self.person, self.number
        if other.person is not None:
            if person is not None and person != other.person:
                return None
            person = other.person
        if other.number is not None:
            if number is not None and number != other.number:
                return None
            number = other.number
        return Agr(person, number)

    def __str__(self) -> str:
        return f"{self.person or ''}{self.number or ''}"


NO_AGR = Agr()


class Slash(enum.Enum):
    FORWARD = "/"
    BACKWARD = "\\"
    NEUTRAL = "|"

    def __str__(self) -> str:
        return self.value

    def admits(self, direction: "Slash") -> bool:
        """Can this slash be used as ``direction`` (itself or via instantiation)?"""
        return self is direction or self is Slash.NEUTRAL


class Label(enum.Enum):
    """Derivation-history tag on chart edges."""

    OT = "OT"  # lexical, type-shifted, application or coordination output
    FC = "FC"  # forward (crossing) composition output
    BC = "BC"  # backward (crossing) composition output

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class Atom:
    head: str
    genotype: Optional[int] = None
    agr: Agr = NO_AGR

    def __post_init__(self) -> None:
        if self.head != "NP" and (self.genotype is not None or not self.agr.empty):
            raise ValueError(f"only NP carries genotype or agreement, not {self.head}")
        if self.genotype is not None and self.genotype < 1:
            raise ValueError("genotype index must be positive")

    def __str__(self) -> str:
        return format_category(self)


@dataclass(frozen=True, slots=True)
class Functor:
    result: "Category"
    slash: Slash
    argument: "Category"

    def __str__(self) -> str:
        return format_category(self)


Category = Union[Atom, Functor]


def np(genotype: Optional[int] = None, person: Optional[int] = None,
       number: Optional[str] = None) -> Atom:
    return Atom("NP", genotype, Agr(person, number))


def arguments(c: Category) -> list[tuple[Slash, Category]]:
    """Arguments of ``c`` in the order they are consumed (outermost first)."""
    out = []
    while isinstance(c, Functor):
        out.append((c.slash, c.argument))
        c = c.result
    return out


def final_result(c: Category) -> Atom:
    while isinstance(c, Functor):
        c = c.result
    return c


def arity(c: Category) -> int:
    return len(arguments(c))


def is_bare_np(c: Category) -> bool:
    """An ``NP`` atom with a genotype index: a lower-type argument."""
    return isinstance(c, Atom) and c.head == "NP" and c.genotype is not None


def has_neutral(c: Category) -> bool:
    if isinstance(c, Atom):
        return False
    return c.slash is Slash.NEUTRAL or has_neutral(c.result) or has_neutral(c.argument)


def _atoms(c: Category) -> Iterator[Atom]:
    if isinstance(c, Atom):
        yield c
    else:
        yield from _atoms(c.result)
        yield from _atoms(c.argument)


def contains_genotype_below(c: Category, k: int) -> bool:
    """Does ``c`` mention a term ranked above argument ``k``?

    True iff an ``NP`` with genotype ``i < k`` occurs anywhere in ``c``.  An
    ``NP`` with no genotype could still turn out to be any index, so it
    counts as below every ``k >= 2``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    for a in _atoms(c):
        if a.head != "NP":
            continue
        if a.genotype is None:
            if k >= 2:
                return True
        elif a.genotype < k:
            return True
    return False


# -- unification -------------------------------------------------------------

Path = tuple[int, ...]  # 0 = result, 1 = argument


@dataclass(frozen=True)
class Substitution:
    """Position-indexed bindings that make two same-shaped categories equal.

    Neutral categories contain no shared variables, so bindings are keyed by
    the path of the node they refine.  Applying a substitution to a category
    of a different shape leaves the unmatched positions untouched.
    """

    slashes: dict = field(default_factory=dict)
    genotypes: dict = field(default_factory=dict)
    agrs: dict = field(default_factory=dict)

    @property
    def is_identity(self) -> bool:
        return not (self.slashes or self.genotypes or self.agrs)

    def apply(self, c: Category, path: Path = ()) -> Category:
        if isinstance(c, Atom):
            g = c.genotype if c.genotype is not None else self.genotypes.get(path)
            agr = self.agrs.get(path, c.agr)
            if g == c.genotype and agr == c.agr:
                return c
            return Atom(c.head, g, agr)
        slash = c.slash
        if slash is Slash.NEUTRAL:
            slash = self.slashes.get(path, slash)
        res = self.apply(c.result, path + (0,))
        arg = self.apply(c.argument, path + (1,))
        if slash is c.slash and res is c.result and arg is c.argument:
            return c
        return Functor(res, slash, arg)


def _unify(a: Category, b: Category, path: Path, sub: Substitution) -> bool:
    if isinstance(a, Atom) and isinstance(b, Atom):
        if a.head != b.head:
            return False
        if a.genotype is not None and b.genotype is not None:
            if a.genotype != b.genotype:
                return False
        elif a.genotype is not None or b.genotype is not None:
            sub.genotypes[path] = a.genotype if a.genotype is not None else b.genotype
        if a.agr != b.agr:
            merged = a.agr.unify(b.agr)
            if merged is None:
                return False
            sub.agrs[path] = merged
        return True
    if isinstance(a, Functor) and isinstance(b, Functor):
        if a.slash is not b.slash:
            if a.slash is Slash.NEUTRAL:
                sub.slashes[path] = b.slash
            elif b.slash is Slash.NEUTRAL:
                sub.slashes[path] = a.slash
            else:
                return False
        return (_unify(a.result, b.result, path + (0,), sub)
                and _unify(a.argument, b.argument, path + (1,), sub))
    return False


def match(expected: Category, actual: Category) -> Optional[Substitution]:
    """Unify two categories, or return ``None`` if they are incompatible.

    A neutral slash unifies with any slash and is bound to the other side's
    direction (neutral against neutral stays neutral).  An ``NP`` without a
    genotype takes the other side's index, and agreement features merge.
    """
    sub = Substitution()
    return sub if _unify(expected, actual, (), sub) else None


def unify(a: Category, b: Category) -> Optional[Category]:
    """The common instance of ``a`` and ``b``, if any."""
    sub = match(a, b)
    return None if sub is None else sub.apply(a)


def with_slash(c: Functor, slash: Slash) -> Functor:
    return c if c.slash is slash else replace(c, slash=slash)


# -- text form ---------------------------------------------------------------

class CategorySyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = "") -> None:
        super().__init__(f"{message} at position {position} in {text!r}")
        self.position = position
        self.text = text


_HEAD = re.compile(r"[A-Z][A-Za-z]*")
_DIGITS = re.compile(r"[0-9]+")
_AGR = re.compile(r"([123])?(sg|pl)?\Z")
_SLASHES = {"/": Slash.FORWARD, "\\": Slash.BACKWARD, "|": Slash.NEUTRAL}


class _CategoryParser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> CategorySyntaxError:
        return CategorySyntaxError(msg, self.pos, self.text)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def parse(self) -> Category:
        c = self.expr()
        self.skip()
        if self.pos != len(self.text):
            raise self.error(f"unexpected {self.text[self.pos]!r}")
        return c

    def expr(self) -> Category:
        c = self.primary()
        while True:
            self.skip()
            if self.pos < len(self.text) and self.text[self.pos] in _SLASHES:
                slash = _SLASHES[self.text[self.pos]]
                self.pos += 1
                c = Functor(c, slash, self.primary())
            else:
                return c

    def primary(self) -> Category:
        self.skip()
        if self.pos >= len(self.text):
            raise self.error("expected a category")
        if self.text[self.pos] == "(":
            self.pos += 1
            c = self.expr()
            self.skip()
            if self.pos >= len(self.text) or self.text[self.pos] != ")":
                raise self.error("expected ')'")
            self.pos += 1
            return c
        return self.atom()

    def atom(self) -> Atom:
        m = _HEAD.match(self.text, self.pos)
        if m is None:
            raise self.error("expected an atomic category")
        head = m.group(0)
        self.pos = m.end()
        digits = _DIGITS.match(self.text, self.pos)
        genotype = None
        if digits:
            if head != "NP":
                raise self.error(f"{head} cannot carry a genotype index")
            genotype = int(digits.group(0))
            if genotype < 1:
                raise self.error("genotype index must be positive")
            self.pos = digits.end()
        agr = NO_AGR
        if self.pos < len(self.text) and self.text[self.pos] == "[":
            if head != "NP":
                raise self.error(f"{head} cannot carry agreement")
            end = self.text.find("]", self.pos)
            if end < 0:
                raise self.error("unterminated agreement")
            m2 = _AGR.match(self.text[self.pos + 1:end])
            if m2 is None or not (m2.group(1) or m2.group(2)):
                raise self.error("bad agreement (expected e.g. 3sg, 1pl, 3, sg)")
            agr = Agr(int(m2.group(1)) if m2.group(1) else None, m2.group(2))
            self.pos = end + 1
        return Atom(head, genotype, agr)


def parse_category(text: str) -> Category:
    """Parse e.g. ``S|NP1|NP2`` or ``NP[3sg]/(NP[3sg]\\NP5)``.

    Slashes associate to the left: ``S|NP1|NP2`` is ``(S|NP1)|NP2``.
    """
    return _CategoryParser(text).parse()


def format_category(c: Category) -> str:
    if isinstance(c, Atom):
        s = c.head
        if c.genotype is not None:
            s += str(c.genotype)
        if not c.agr.empty:
            s += f"[{c.agr}]"
        return s
    res = format_category(c.result)
    # a result functor only needs brackets for readability when the slash changes
    if isinstance(c.result, Functor) and c.result.slash is not c.slash:
        res = f"({res})"
    arg = format_category(c.argument)
    if isinstance(c.argument, Functor):
        arg = f"({arg})"
    return f"{res}{c.slash.value}{arg}"
