"""Exact moment/cumulant calculus on non-commutative words.

Moments are encoded as characters on a word Hopf algebra whose coproduct
extracts subwords; free, boolean, and monotone cumulants appear as three
logarithms of the same character (left half-shuffle, right half-shuffle,
and convolution).  Everything is computed twice, through that shuffle
calculus and through partition lattice sums, and compared exactly.
"""

from .coproducts import (
    coproduct,
    coproduct_left,
    coproduct_left_reduced,
    coproduct_reduced,
    coproduct_right,
    coproduct_right_reduced,
    iterated_reduced_left,
    reduced_linearised,
    split_product,
)
from .errors import (
    CumulantsError,
    IncompleteTableError,
    InvalidFormError,
    RouteDisagreementError,
    TableFormatError,
)
from .forms import (
    COUNIT,
    CharacterFromWords,
    Counit,
    Form,
    InfinitesimalFromWords,
    char_inverse,
    conv,
    exp_left,
    exp_right,
    exp_star,
    half_left,
    half_right,
    log_left,
    log_right,
    log_star,
    scale,
)
from .lincomb import LinComb
from .partitions import (
    SetPartition,
    enumerate_interval,
    enumerate_irreducible_nc,
    enumerate_monotone,
    enumerate_nc,
    is_interval,
    is_irreducible,
    is_noncrossing,
    linear_extensions,
    monotone_labelling_count,
    nesting_children,
    partition_sum,
    tree_factorial,
)
from .prelie import InfChar, bernoulli, magnus, triangle, w_map
from .tablefile import parse_table, parse_word, render_table
from .transforms import (
    CumulantTable,
    VerifyReport,
    convert,
    convert_table,
    cumulants_to_moments,
    default_max_degree,
    moments_to_cumulants,
    moments_to_cumulants_via_forms,
    random_table,
    verify_suite,
)
from .words import (
    EMPTY_WORD,
    UNIT,
    BarWord,
    Word,
    all_barwords,
    all_words,
    bar_concat,
    barword_str,
    lift,
    word_str,
)

__version__ = "0.1.0"

__all__ = [
    "BarWord",
    "COUNIT",
    "CharacterFromWords",
    "Counit",
    "CumulantTable",
    "CumulantsError",
    "EMPTY_WORD",
    "Form",
    "IncompleteTableError",
    "InfChar",
    "InfinitesimalFromWords",
    "InvalidFormError",
    "LinComb",
    "RouteDisagreementError",
    "SetPartition",
    "TableFormatError",
    "UNIT",
    "VerifyReport",
    "Word",
    "all_barwords",
    "all_words",
    "bar_concat",
    "barword_str",
    "bernoulli",
    "char_inverse",
    "conv",
    "convert",
    "convert_table",
    "coproduct",
    "coproduct_left",
    "coproduct_left_reduced",
    "coproduct_reduced",
    "coproduct_right",
    "coproduct_right_reduced",
    "cumulants_to_moments",
    "default_max_degree",
    "enumerate_interval",
    "enumerate_irreducible_nc",
    "enumerate_monotone",
    "enumerate_nc",
    "exp_left",
    "exp_right",
    "exp_star",
    "half_left",
    "half_right",
    "is_interval",
    "is_irreducible",
    "is_noncrossing",
    "iterated_reduced_left",
    "lift",
    "linear_extensions",
    "log_left",
    "log_right",
    "log_star",
    "magnus",
    "moments_to_cumulants",
    "moments_to_cumulants_via_forms",
    "monotone_labelling_count",
    "nesting_children",
    "partition_sum",
    "parse_table",
    "parse_word",
    "random_table",
    "reduced_linearised",
    "render_table",
    "scale",
    "split_product",
    "tree_factorial",
    "triangle",
    "verify_suite",
    "w_map",
    "word_str",
]
