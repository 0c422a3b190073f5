"""Exact search, classification and audit tools for unit-fraction
decompositions 5/P = 1/A + 1/B + 1/C over primes P."""

from .arith import (
    Factorization,
    crt_combine,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    jacobi_symbol,
    mod_inverse,
    squarefree_split,
)
from .bridge import BridgeResult, anticonvolve_ed1_to_ed2, convolve_ed2_to_ed1
from .ed1 import Ed1Witness, default_gamma_max, ed1_candidates, ed1_reconstruct, ed1_search
from .ed2 import (
    Ed2Witness,
    NormalizedEd2,
    default_delta_max,
    ed2_backtest,
    ed2_case_a,
    ed2_normalize,
    ed2_reconstruct,
    ed2_search,
    ed2_witness_row,
)
from .explicit import decompose_explicit, repair_distinct
from .lattice import (
    BoxSpec,
    SublatticeClass,
    class_count_in_box,
    delta_window_bound,
    delta_window_count,
    lattice_search_m,
    xy_inverse,
    xy_transform,
)
from .oracle import OracleEnumeration, enumerate_all_solutions, existence_check
from .sieve import (
    ProgressionClass,
    ScanReport,
    average_local_params,
    build_progression_class,
    count_local_params,
    exceptional_set,
    reconstruct_from_class,
    scan_class_primes,
)
from .solution import (
    MultiplicityClass,
    Solution,
    SolutionClass,
    classify_solution,
    make_solution,
    min_denominator_bounds,
    verify_solution,
)
from .tables import ErrataEntry, TABLES, audit_table

__version__ = "0.1.0"

__all__ = [
    "BoxSpec",
    "BridgeResult",
    "Ed1Witness",
    "Ed2Witness",
    "ErrataEntry",
    "Factorization",
    "MultiplicityClass",
    "NormalizedEd2",
    "OracleEnumeration",
    "ProgressionClass",
    "ScanReport",
    "Solution",
    "SolutionClass",
    "SublatticeClass",
    "TABLES",
    "anticonvolve_ed1_to_ed2",
    "audit_table",
    "average_local_params",
    "build_progression_class",
    "class_count_in_box",
    "classify_solution",
    "convolve_ed2_to_ed1",
    "count_local_params",
    "crt_combine",
    "decompose_explicit",
    "default_delta_max",
    "default_gamma_max",
    "delta_window_bound",
    "delta_window_count",
    "divisors",
    "ed1_candidates",
    "ed1_reconstruct",
    "ed1_search",
    "ed2_backtest",
    "ed2_case_a",
    "ed2_normalize",
    "ed2_reconstruct",
    "ed2_search",
    "ed2_witness_row",
    "enumerate_all_solutions",
    "euler_phi",
    "exceptional_set",
    "existence_check",
    "factorize",
    "is_prime",
    "jacobi_symbol",
    "lattice_search_m",
    "make_solution",
    "min_denominator_bounds",
    "mod_inverse",
    "reconstruct_from_class",
    "repair_distinct",
    "scan_class_primes",
    "squarefree_split",
    "verify_solution",
    "xy_inverse",
    "xy_transform",
]
