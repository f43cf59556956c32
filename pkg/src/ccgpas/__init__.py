"""Case-driven CCG parsing down to predicate-argument structure.

Typical use::

    from ccgpas import load_lexicon_file, demo_lexicon_path, parse, derive_pas, format_pas

    lex = load_lexicon_file(demo_lexicon_path())
    for d in parse("kitab-ı Mehmet oku-du".split(), lex):
        print(format_pas(derive_pas(d)))   # r b m
"""

from .category import (
    Agr,
    Atom,
    Category,
    Functor,
    Label,
    Slash,
    contains_genotype_below,
    format_category,
    match,
    parse_category,
)
from .comb import (
    App,
    Combinator,
    Constant,
    ReductionStats,
    Term,
    combinator_free,
    evaluate,
    format_term,
    is_redex,
    parse_term,
    reduce_leftmost_outermost,
)
from .lexicon import (
    LexEntry,
    Lexicon,
    analyze_token,
    argument_categories,
    case_suffix_entries,
    causative_entries,
    demo_lexicon_path,
    load_lexicon,
    load_lexicon_file,
)
from .parser import (
    Derivation,
    Edge,
    LowerTypeMode,
    ParseOptions,
    combine,
    coordinate,
    derivation_semantics,
    format_derivation,
    parse,
    parse_chart,
    parse_edges,
)
from .pas import NonTerminating, ResidualCombinators, derive_pas, format_pas, pas_equal

__version__ = "0.1.0"
