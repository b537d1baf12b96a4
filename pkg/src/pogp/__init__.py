"""Exact enumeration of k-ary words avoiding partially ordered generalized patterns."""
from .gf import (
    KNOWN,
    descent_multipattern,
    eq1_recurrence,
    gf_eq1,
    gf_known,
    known_provider,
    mnd_closed_form,
    mnd_gf,
    multipattern,
    oracle_provider,
    prefix_decomposition,
    quasi_transform,
    resolve_provider,
    shuffle_general,
    shuffle_same,
    unit_provider,
)
from .oracle import (
    BudgetExceeded,
    avoider_series,
    count_avoiders,
    count_quasi_avoiders,
    equiv_check,
    mnd_distribution,
)
from .pattern import (
    Letter,
    PatternError,
    Pogp,
    avoids,
    chain_height,
    classify,
    complement_pattern,
    complement_word,
    expand,
    expansion_count,
    format_word,
    mnd,
    occurrences,
    parse_pattern,
    parse_word,
    quasi_avoids,
    reverse_pattern,
    reverse_word,
)
from .series import Series, YSeries

__version__ = "0.1.0"
