from itertools import permutations

import pytest

from conftest import edge, lexed
from ccgpas.category import Label, contains_genotype_below, format_category, has_neutral, is_bare_np, parse_category
from ccgpas.comb import format_term
from ccgpas.parser import (
    LowerTypeMode, ParseOptions, UnsupportedArity, combine, coordinate, derivation_semantics,
    format_derivation, parse, parse_chart, parse_edges,
)
from ccgpas.pas import derive_pas, format_pas

NEVER = ParseOptions(lower_type_mode=LowerTypeMode.NEVER)
ALWAYS = ParseOptions(lower_type_mode=LowerTypeMode.ALWAYS)


def shown(edges):
    return [(e.rule, format_category(e.category), e.label, format_term(e.semantics)) for e in edges]


# -- rules --------------------------------------------------------------------

def test_forward_crossed_composition():
    out = combine(edge(0, "S/(S|NP1)", "T m"), edge(1, "(S|NP1)\\(S|NP1|NP2)", "T b"))
    assert shown(out) == [(">Bx", "S\\(S|NP1|NP2)", Label.FC, "B (T m) (T b)")]


def test_fc_functor_cannot_apply_forward():
    left = edge(0, "S/(S|NP1|NP2)", "B (T m) (T b)", Label.FC)
    assert combine(left, edge(1, "S|NP1|NP2", "r")) == []
    # the same functor labelled OT would apply
    left_ot = edge(0, "S/(S|NP1|NP2)", "B (T m) (T b)")
    assert shown(combine(left_ot, edge(1, "S|NP1|NP2", "r")))[0][:2] == (">", "S")


def test_bc_functor_cannot_apply_backward():
    right = edge(1, "S\\(S|NP1|NP2)", "x", Label.BC)
    assert combine(edge(0, "S|NP1|NP2", "r"), right) == []


def test_licensing_rejects_np2_before_ditransitive_subject():
    dv = edge(1, "S|NP1|NP3|NP2", "C v")
    assert combine(edge(0, "NP2", "I o"), dv) == []
    assert combine(edge(0, "S|NP1|NP3|NP2", "C v"), edge(1, "NP2", "I o")) == []


def test_licensing_admits_np2_when_nothing_outranks_it():
    out = combine(edge(0, "NP2", "I o"), edge(1, "S|NP2", "f"))
    assert shown(out) == [("<", "S", Label.OT, "f (I o)")]


def test_backward_application_builds_iv():
    out = combine(edge(0, "S|NP1|NP2", "r"), edge(1, "(S|NP1)\\(S|NP1|NP2)", "T b"))
    assert shown(out) == [("<", "S|NP1", Label.OT, "T b r")]


def test_backward_compositions():
    # Y/Z X\Y => X/Z and Y\Z X\Y => X\Z, both labelled BC
    assert shown(combine(edge(0, "B/C", "g"), edge(1, "A\\B", "f"))) == [
        ("<Bx", "A/C", Label.BC, "B f g")]
    assert shown(combine(edge(0, "B\\C", "g"), edge(1, "A\\B", "f"))) == [
        ("<B", "A\\C", Label.BC, "B f g")]


def test_forward_harmonic_composition():
    assert shown(combine(edge(0, "A/B", "f"), edge(1, "B/C", "g"))) == [
        (">B", "A/C", Label.FC, "B f g")]


def test_combine_requires_adjacency():
    with pytest.raises(ValueError):
        combine(edge(0, "A/B", "f"), edge(2, "B", "g"))


# -- coordination -------------------------------------------------------------

def test_coordinate_functors():
    out = coordinate(edge(0, "S/NP2", "f", Label.FC, end=2), edge(2, "CONJ", "but"),
                     edge(3, "S/NP2", "g", Label.FC, end=5))
    assert shown([out]) == [("∧", "S/NP2", Label.OT, "Phi but f g")]
    assert (out.start, out.end) == (0, 5)


def test_coordinate_clauses():
    out = coordinate(edge(0, "S", "p"), edge(1, "CONJ", "but"), edge(2, "S", "q"))
    assert shown([out]) == [("∧", "S", Label.OT, "but p q")]


def test_coordinate_mismatch():
    assert coordinate(edge(0, "S/NP2", "f"), edge(1, "CONJ", "but"), edge(2, "S", "q")) is None


def test_coordinate_arity_two_unsupported():
    with pytest.raises(UnsupportedArity):
        coordinate(edge(0, "S|NP1|NP2", "f"), edge(1, "CONJ", "but"), edge(2, "S|NP1|NP2", "g"))


# -- sentences ----------------------------------------------------------------

SVO = ["Mehmet", "kitab-ı", "oku-du"]


@pytest.mark.parametrize("order", list(permutations(SVO)))
def test_transitive_orders(lex, order):
    ds = parse(order, lex, NEVER)
    assert len(ds) == 1
    assert format_pas(derive_pas(ds[0])) == "r b m"


def test_svo_combinatory_form(lex):
    (d,) = parse(SVO, lex)
    assert format_term(derivation_semantics(d)) == "T m (T b r)"


def test_object_first_routes_through_bc(lex):
    (d,) = parse(["kitab-ı", "Mehmet", "oku-du"], lex)
    assert [e.rule for e in d.steps() if e.rule != "lex"] == ["<Bx", ">"]
    assert format_term(d.semantics) == "B (T m) (T b) r"
    assert d.root.children[0].label is Label.BC


def test_always_mode_adds_lower_type_reading(lex):
    ds = parse(SVO, lex, ALWAYS)
    assert len(ds) == 2
    assert {format_pas(derive_pas(d)) for d in ds} == {"r b m"}


def test_causative_sentence(lex):
    (d,) = parse("Adam çocuğ-a kitab-ı oku-t-tu".split(), lex)
    assert format_term(d.semantics) == "T m (B (T b) (T c) (B3 cause C r))"


def test_coordination_needs_lower_types(lex):
    words = "Adam kurmuş ama çocuk topladı masa-yı".split()
    assert parse(words, lex, NEVER) == []
    r = parse_chart(words, lex)
    assert r.lower_types
    (d,) = r.derivations
    assert format_category(d.category) == "S"
    assert d.root.rule == ">" and d.root.children[0].rule == "∧"


def test_genitive_noun_group(lex):
    (d,) = parse(["kalem-in", "uc-u"], lex, ParseOptions(goal=parse_category("NP")))
    assert format_term(d.semantics) == "T p (poss t)"


@pytest.mark.parametrize("words", [
    ["Adam", "çocuğ-a", "kitab-ı", "ver-di"],
    ["Adam", "çocuğ-a", "kitab-ı", "oku-t-tu"],
])
def test_ditransitive_orders_agree(lex, words):
    unparsed = []
    pas = set()
    for order in permutations(words):
        r = parse_chart(order, lex, NEVER)
        if not r.derivations:
            unparsed.append(order)
        assert all(t == 1 for t in r.trees)
        pas.update(format_pas(derive_pas(d)) for d in r.derivations)
    assert len(pas) == 1
    # object and dative on opposite sides of the verb with the subject
    # between the verb and one of them: no derivation with these rules
    subj, dat, acc, verb = words
    assert sorted(unparsed) == sorted([(dat, subj, verb, acc), (acc, verb, subj, dat)])


def test_causative_orders_all_parse_with_lower_types(lex):
    words = ["Adam", "çocuğ-a", "kitab-ı", "oku-t-tu"]
    for order in permutations(words):
        ds = parse(order, lex)
        assert ds and {format_pas(derive_pas(d)) for d in ds} == {"cause (r b c) m"}


def test_empty_input(lex):
    with pytest.raises(ValueError):
        parse([], lex)


def test_single_token_goal_n(lex):
    (d,) = parse(["kitap"], lex, ParseOptions(goal=parse_category("N")))
    assert format_term(d.semantics) == "b"


def test_format_derivation(lex):
    (d,) = parse(SVO, lex)
    lines = format_derivation(d).splitlines()
    assert lines[0].startswith("0-1  lex") and lines[0].endswith("Mehmet")
    assert lines[-1].startswith("0-3  >") and "T m (T b r)" in lines[-1]


# -- the direction-pattern uniqueness argument ---------------------------------

def _abc(middle):
    words = [("C/C", "f"), ("A/B", "g"), (middle, "h"), ("C", "k")]
    return parse_edges(lexed(words), ParseOptions(goal=parse_category("A")))


def test_crossed_pattern_has_one_derivation():
    r = _abc("B\\C")
    assert len(r.derivations) == 1 and r.trees == [1]
    (d,) = r.derivations
    assert [(e.rule, format_category(e.category), e.label) for e in d.steps() if e.rule != "lex"] == [
        (">Bx", "A\\C", Label.FC), ("<Bx", "A/C", Label.BC), (">", "A", Label.OT)]


def test_harmonic_pattern_fc_edge_is_dead_end():
    r = _abc("B/C")
    fc = [e for e in r.chart.edges() if e.label is Label.FC and format_category(e.category) == "A/C"]
    assert len(fc) == 1
    assert not any(e.rule == ">" and e.children[0] is fc[0] for e in r.chart.edges())
    assert r.derivations == []


# -- invariants over the demo sentences -----------------------------------------

SENTENCES = [
    SVO,
    ["kitab-ı", "Mehmet", "oku-du"],
    "Adam çocuğ-a kitab-ı oku-t-tu".split(),
    "çocuğ-a kitab-ı ver-di Adam".split(),
    "Adam kurmuş ama çocuk topladı masa-yı".split(),
]


@pytest.mark.parametrize("words", SENTENCES)
@pytest.mark.parametrize("mode", list(LowerTypeMode))
def test_chart_invariants(lex, words, mode):
    r = parse_chart(words, lex, ParseOptions(lower_type_mode=mode))
    for key, alts in r.chart.alternatives.items():
        for e in alts:
            if e.rule in (">", ">B", ">Bx"):
                assert e.children[0].label is not Label.FC
            if e.rule in ("<", "<B", "<Bx"):
                assert e.children[1].label is not Label.BC
            if e.rule in (">B", ">Bx"):
                assert e.label is Label.FC
            elif e.rule in ("<B", "<Bx"):
                assert e.label is Label.BC
            else:
                assert e.label is Label.OT
            if e.rule in (">", "<"):
                functor, arg = (e.children if e.rule == ">" else e.children[::-1])
                if is_bare_np(arg.category):
                    assert not contains_genotype_below(functor.category.result, arg.category.genotype)
            if e.rule not in ("lex", ">", "<", "∧"):
                assert e.category.slash.value in "/\\"
    for d in r.derivations:
        assert not has_neutral(d.category)
        assert derive_pas(d, 100) is not None
