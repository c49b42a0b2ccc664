"""Exact computations for subspace representations of finite posets.

Everything is integer arithmetic: incidence matrices and their inverses,
the Euler and Tits quadratic forms, admissibility certificates, the
dimension of the variety of subspace representations (closed form and
peeling recursion), and finite-field point-counting oracles.
"""

from ._core import (
    Admissibility,
    ArithmeticOverflowError,
    BudgetError,
    DimReport,
    DimVector,
    EmptyVarietyError,
    FileSyntaxError,
    FitReport,
    InputError,
    IterationTrace,
    MaxElementChoice,
    NotAdmissibleError,
    Poset,
    PosetFile,
    PreconditionError,
    RecursionStep,
    ScanReport,
    build_poset,
    coordinate_vector,
    count_points,
    dot_export,
    enlarge,
    euler_form,
    fit_dimension,
    frobenius_factors,
    gaussian_binomial,
    generic_sum_dim,
    grassmann_dim,
    incidence_inverse,
    incidence_matrix,
    induced_subposet,
    is_admissible,
    iteration_sequence,
    lemma2_defect,
    load_poset_file,
    max_sum_dim_empirical,
    mobius_matrix,
    parse_poset_file,
    remove_element,
    render_poset_file,
    summand_scan,
    summands,
    tits_form,
    variety_dim,
    variety_dim_recursive,
)

__all__ = [
    "Admissibility",
    "ArithmeticOverflowError",
    "BudgetError",
    "DimReport",
    "DimVector",
    "EmptyVarietyError",
    "FileSyntaxError",
    "FitReport",
    "InputError",
    "IterationTrace",
    "MaxElementChoice",
    "NotAdmissibleError",
    "Poset",
    "PosetFile",
    "PreconditionError",
    "RecursionStep",
    "ScanReport",
    "build_poset",
    "coordinate_vector",
    "count_points",
    "dot_export",
    "enlarge",
    "euler_form",
    "fit_dimension",
    "frobenius_factors",
    "gaussian_binomial",
    "generic_sum_dim",
    "grassmann_dim",
    "incidence_inverse",
    "incidence_matrix",
    "induced_subposet",
    "is_admissible",
    "iteration_sequence",
    "lemma2_defect",
    "load_poset_file",
    "max_sum_dim_empirical",
    "mobius_matrix",
    "parse_poset_file",
    "remove_element",
    "render_poset_file",
    "summand_scan",
    "summands",
    "tits_form",
    "variety_dim",
    "variety_dim_recursive",
]
