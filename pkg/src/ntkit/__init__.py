"""ntkit: instrumented number theory at desk scale.

Traced GCD algorithms (mutual subtraction, odd-odd halving, binary, Euclid)
with per-run operation counts, a reproducible benchmark harness with
least-squares growth fitting, trial-division primality and factoring,
factor-and-scale multiplication, base-2 pseudoprime search, fraction
reduction, a CRT solver for non-coprime moduli, and least positive
solutions of cyclic linear systems.
"""

from .bench import (
    BenchReport,
    BenchRow,
    FitResult,
    SizeStats,
    TrialSpec,
    count_operations,
    fit_growth,
    read_csv,
    run_trials,
    trial_pair,
    write_csv,
)
from .diophantine import (
    Congruence,
    CyclicSystemSolution,
    Fraction,
    crt_solve,
    reduce_fraction,
    solve_cyclic_system,
)
from .errors import DomainError
from .gcd import (
    Algorithm,
    GcdStep,
    GcdTrace,
    OperationCounts,
    StepKind,
    TwoAdicSplit,
    ancient_gcd,
    ancient_gcd_variant,
    binary_gcd,
    euclid_gcd,
    extended_gcd,
    replay_trace,
    run_algorithm,
    subtractive_gcd,
    two_adic_split,
)
from .primes import (
    Classification,
    HypothesisVerdict,
    chinese_hypothesis_classify,
    factor,
    fermat_little_check,
    find_base2_pseudoprimes,
    hui_yang_multiply,
    hui_yang_plan,
    irreducible_in_range,
    is_irreducible,
)

__version__ = "0.1.0"

__all__ = [
    "Algorithm",
    "BenchReport",
    "BenchRow",
    "Classification",
    "Congruence",
    "CyclicSystemSolution",
    "DomainError",
    "FitResult",
    "Fraction",
    "GcdStep",
    "GcdTrace",
    "HypothesisVerdict",
    "OperationCounts",
    "SizeStats",
    "StepKind",
    "TrialSpec",
    "TwoAdicSplit",
    "ancient_gcd",
    "ancient_gcd_variant",
    "binary_gcd",
    "chinese_hypothesis_classify",
    "count_operations",
    "crt_solve",
    "euclid_gcd",
    "extended_gcd",
    "factor",
    "fermat_little_check",
    "find_base2_pseudoprimes",
    "fit_growth",
    "hui_yang_multiply",
    "hui_yang_plan",
    "irreducible_in_range",
    "is_irreducible",
    "read_csv",
    "reduce_fraction",
    "replay_trace",
    "run_algorithm",
    "run_trials",
    "solve_cyclic_system",
    "subtractive_gcd",
    "trial_pair",
    "two_adic_split",
    "write_csv",
]
