from .auction import ( # noqa: F401
    auction_revenue, EtiStep, EtiFailure, EtiDecomposition, eti_decompose, eti_apply_sequence,
    revenue_table,
)
from .bankrun import ( # noqa: F401
    BankRunParams, BankRunAnalysis, PuzzleReport, feasibility_bound, bank_run_family,
    bank_run_game, bank_run_thresholds, bank_run_crossings, bank_run_analysis, bank_run_sweep,
    equilibrium_runs, intro_example_suite,
)
from .beliefs import belief_step, common_belief, CommonBelief, RationalizableSets, rationalizable_sets # noqa: F401
