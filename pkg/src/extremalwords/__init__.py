"""Extremal square-free ternary words, linear and circular.

Library entry points: square detection (`find_square`, `is_square_free`),
extremality predicates (`is_extremal`, `is_extremal_circular`, `report`),
the verified seed-word catalog and its substitutions (`verify_catalog`,
`delta`, `delta_prime`), substitution certificates (`check_universal`),
constructions for every admissible length (`construct_extremal`,
`construct_extremal_circular`), and exhaustive spectra (`spectrum`).
"""

from .errors import (
    AlphabetMismatch,
    BadChoice,
    BadN,
    BudgetRefused,
    EmptyWord,
    ExtremalWordsError,
    InvalidCharacter,
    NoSuchWord,
    NotInSpectrum,
    SearchBudgetExceeded,
    TooShort,
    UnknownName,
    UnknownVertex,
)
from .squares import (
    SquareOccurrence,
    circular_extension_has_square,
    circular_rep_square_free,
    extension_has_square,
    find_square,
    is_square_free,
)
from .words import (
    Alphabet,
    CircularWord,
    PERMS,
    PERM_NAMES,
    TERNARY,
    apply_permutation,
    canonical_rotation,
    circumnavigations,
    conjugates,
    is_circular_square_free,
    parse_word,
    reverse,
    rotations_and_images,
    witness_alphabet,
    witness_symbol,
)
from .extremal import (
    ExtremalReport,
    circular_extensions,
    extensions,
    irreducible_witness,
    is_directional_extremal,
    is_extremal,
    is_extremal_circular,
    is_irreducibly_square_free,
    is_nearly_extremal,
    report,
    square_free_extensions,
)
from .substitution import (
    ConditionReport,
    Substitution,
    Violation,
    apply,
    check_condition_I,
    check_condition_II,
    check_universal,
    enumerate_image_lengths,
    format_substitution,
    image_words,
    parse_substitution,
    replay_violation,
    select_choices_for_length,
)
from .digraph import (
    Digraph,
    circular_square_free_ternary,
    digraph_D,
    digraph_hatD,
    even_walkable_circular,
    format_walk,
    h_substitution,
    is_circular_walk,
    is_walk,
    parse_walk,
    square_free_walk,
    thue_ternary,
    vertex_display,
)
from .catalog import (
    CatalogCheck,
    constant,
    delta,
    delta_prime,
    localized,
    verify_catalog,
)
from .construct import (
    ConstructionResult,
    PostagePlan,
    Spectrum,
    construct_extremal,
    construct_extremal_circular,
    in_circular_spectrum,
    in_linear_spectrum,
    postage,
    postage_even,
    search_extremal,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
