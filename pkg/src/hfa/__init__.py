"""Exact-arithmetic library for typical hesitant fuzzy elements, languages,
and automata: lattice operations on finite degree sets, THFE-weighted
automata with crisp and deterministic variants, level-cut decomposition,
crispification, determinization, and an exact equivalence decider, plus a
JSON exchange format and a command-line front end."""

from .classic import Dfa, Nfa, subset_name
from .constructions import (
    EquivalenceVerdict,
    LevelDecomposition,
    compute_range,
    constant_automaton,
    crispify_nthfa,
    decompose,
    determinize_cnthfa,
    embed_cnthfa,
    equivalent,
    eval_decomposition,
    h_union_pointwise,
    hyperbolic_language_eval,
    intersect_cdthfa,
    level_automaton,
    reachable_vectors,
    recompose,
    union_nthfa,
)
from .documents import (
    Diagnostic,
    DocumentError,
    ParseResult,
    parse_document,
    serialize_automaton,
    validate_text,
)
from .errors import (
    AlphabetMismatch,
    ClosureBudgetExceeded,
    DegreeOutOfRange,
    HfaError,
    IncompleteTransition,
    InvalidDegree,
    InvalidTHFE,
    UnknownState,
    UnknownSymbol,
    WordTooLong,
)
from .hesitant import Cdthfa, Cnthfa, Nthfa
from .hfe import (
    ONE,
    ZERO,
    Thfe,
    format_degree,
    generated_closure,
    inf_combination,
    is_degenerate,
    leq,
    parse_degree,
    sup_combination,
    sup_combination_n,
)
from .oracle import (
    empirical_range,
    iter_words,
    languages_agree_up_to,
    reference_eval,
    reference_psi_hat,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetMismatch",
    "Cdthfa",
    "Cnthfa",
    "ClosureBudgetExceeded",
    "DegreeOutOfRange",
    "Dfa",
    "Diagnostic",
    "DocumentError",
    "EquivalenceVerdict",
    "HfaError",
    "IncompleteTransition",
    "InvalidDegree",
    "InvalidTHFE",
    "LevelDecomposition",
    "Nfa",
    "Nthfa",
    "ONE",
    "ParseResult",
    "Thfe",
    "UnknownState",
    "UnknownSymbol",
    "WordTooLong",
    "ZERO",
    "compute_range",
    "constant_automaton",
    "crispify_nthfa",
    "decompose",
    "determinize_cnthfa",
    "embed_cnthfa",
    "empirical_range",
    "equivalent",
    "eval_decomposition",
    "format_degree",
    "generated_closure",
    "h_union_pointwise",
    "hyperbolic_language_eval",
    "inf_combination",
    "intersect_cdthfa",
    "is_degenerate",
    "iter_words",
    "languages_agree_up_to",
    "leq",
    "level_automaton",
    "parse_degree",
    "parse_document",
    "reachable_vectors",
    "recompose",
    "reference_eval",
    "reference_psi_hat",
    "serialize_automaton",
    "subset_name",
    "sup_combination",
    "sup_combination_n",
    "union_nthfa",
    "validate_text",
]
