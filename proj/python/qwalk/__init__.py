"""Coined quantum walks on the line with periodic coin layouts."""

from ._core import (
    CaseFamily,
    CaseSpec,
    CoinLayout,
    CoinOperator,
    CoinParams,
    CoinTable,
    DomainError,
    IoError,
    LocalizationReport,
    SlopeFit,
    StateError,
    SummarySeries,
    WalkRun,
    apply_coin,
    case_layout,
    check_unitary,
    coin_at,
    default_fit_window,
    default_localization_window,
    dense_step_matrix,
    detect_recurrence,
    fit_sigma_slope,
    hadamard,
    hadamard_baseline,
    identity_coin,
    layout_from_pattern,
    localization_score,
    make_general_coin,
    oracle_max_difference,
    parse_pattern,
    reproduce_figures,
    run_case,
    run_invariant_suite,
    sigma_at_step_vs_period,
    summarize_run,
    sweep,
)

__all__ = [name for name in dir() if not name.startswith("_")]
