"""Edelman-Greene statistic of permutations, by explicit EG tableau enumeration."""

from ._backend import BACKEND
from .eg import (
    EGTableau,
    eg_coefficients,
    eg_count,
    eg_statistic,
    enumerate_eg,
    is_eg_tableau,
    is_lambda_maximal,
    reading_word,
    staircase_witness,
    syt_to_eg,
)
from .perm import (
    coxeter_length,
    enumerate_length_n,
    involutions,
    is_reduced,
    is_totally_commutative,
    make_perm,
    normalize,
    perm_from_word,
    reduced_words,
    support,
    tits_neighbors,
)
from .tableaux import (
    Kind,
    Tableau,
    descent_set,
    enumerate_syt,
    hook_count,
    partitions_of,
    standardize,
    sweep_block,
    sweep_map,
    tableau,
    validate,
)
from .verify import VerificationReport, run_suite

__version__ = "0.1.0"
