import pytest
from hypothesis import given
from hypothesis import strategies as st

from ccgpas.category import (
    Agr, Atom, CategorySyntaxError, Functor, Slash, arguments, arity, contains_genotype_below,
    final_result, format_category, has_neutral, is_bare_np, match, np, parse_category, unify,
)

pc = parse_category


def test_match_instantiates_neutral_slash():
    sub = match(pc("S|NP1"), pc("S\\NP1"))
    assert sub is not None
    assert sub.slashes == {(): Slash.BACKWARD}
    assert sub.apply(pc("S|NP1")) == pc("S\\NP1")


def test_match_rejects_opposite_slashes():
    assert match(pc("S/NP1"), pc("S\\NP1")) is None


def test_match_identity_with_agreement():
    sub = match(pc("NP[3sg]\\NP5"), pc("NP[3sg]\\NP5"))
    assert sub is not None and sub.is_identity


def test_match_agreement_clash():
    assert match(pc("NP[3sg]\\NP5"), pc("NP[3pl]\\NP5")) is None
    assert unify(pc("NP[3]"), pc("NP[sg]")) == pc("NP[3sg]")


def test_match_genotype():
    assert match(np(1), np(2)) is None
    assert unify(np(), np(2)) == np(2)
    assert match(pc("S"), pc("NP")) is None
    assert match(pc("S"), pc("S|NP1")) is None


def test_neutral_against_neutral_stays_neutral():
    sub = match(pc("S|NP1"), pc("S|NP1"))
    assert sub.is_identity


def test_nested_paths():
    sub = match(pc("(S|NP1)/(S|NP1|NP2)"), pc("(S\\NP1)/(S|NP1/NP2)"))
    assert sub.apply(pc("(S|NP1)/(S|NP1|NP2)")) == pc("(S\\NP1)/(S|NP1/NP2)")


@pytest.mark.parametrize("cat, k, expected", [
    ("S", 2, False),
    ("S|NP1|NP3", 2, True),
    ("S", 1, False),
    ("S|NP1", 1, False),
    ("S|NP2", 2, False),
    ("S|NP", 2, True),   # unindexed NP may be anything
    ("S|NP", 1, False),
])
def test_contains_genotype_below(cat, k, expected):
    assert contains_genotype_below(pc(cat), k) is expected


def test_contains_genotype_below_rejects_bad_k():
    with pytest.raises(ValueError):
        contains_genotype_below(pc("S"), 0)


def test_parse_structure():
    assert pc("S|NP1|NP2") == Functor(Functor(Atom("S"), Slash.NEUTRAL, np(1)), Slash.NEUTRAL, np(2))
    assert pc("NP[3sg]\\NP5") == Functor(np(None, 3, "sg"), Slash.BACKWARD, np(5))


@pytest.mark.parametrize("text", [
    "S|NP1|NP2",
    "(S|NP1)/(S|NP1|NP3)",
    "NP[3sg]\\NP5",
    "NP[3sg]\\NP5\\N",
    "(S|NP1)\\(S|NP1|NP2)\\N",
    "C/C",
    "A\\C",
    "NP[pl]",
    "NP2[1]",
])
def test_round_trip(text):
    assert format_category(pc(text)) == text


def test_redundant_brackets_are_dropped():
    assert format_category(pc("(NP[3sg]\\NP5)\\N")) == "NP[3sg]\\NP5\\N"
    assert pc("(S|NP1)|NP2") == pc("S|NP1|NP2")


@pytest.mark.parametrize("text", ["", "S|", "(S", "S)", "s", "S1", "N[3sg]", "NP0", "NP[4sg]", "NP[3sg"])
def test_parse_errors(text):
    with pytest.raises(CategorySyntaxError):
        pc(text)


def test_atom_validation():
    with pytest.raises(ValueError):
        Atom("S", 1)
    with pytest.raises(ValueError):
        Agr(4)
    with pytest.raises(ValueError):
        Agr(3, "du")


def test_helpers():
    tv = pc("S|NP1|NP2")
    assert [a for _, a in arguments(tv)] == [np(2), np(1)]
    assert final_result(tv) == Atom("S")
    assert arity(tv) == 2 and arity(Atom("S")) == 0
    assert is_bare_np(np(2)) and not is_bare_np(np())
    assert has_neutral(tv) and not has_neutral(pc("S/NP1"))


def categories():
    atoms = st.one_of(
        st.sampled_from([Atom("S"), Atom("N"), Atom("A")]),
        st.builds(np, st.one_of(st.none(), st.integers(1, 5)),
                  st.one_of(st.none(), st.integers(1, 3)),
                  st.one_of(st.none(), st.sampled_from(["sg", "pl"]))),
    )
    return st.recursive(atoms, lambda kids: st.builds(Functor, kids, st.sampled_from(list(Slash)), kids),
                        max_leaves=8)


@given(categories())
def test_round_trip_property(c):
    assert pc(format_category(c)) == c


@given(categories())
def test_self_match_is_identity(c):
    assert match(c, c).is_identity
