"""Performance-per-resource scoring toolkit."""

from _pepr import (
    GroupComparison,
    Leaderboard,
    LeaderboardEntry,
    NormStrategy,
    NormalizationContext,
    ParetoFront,
    PeprScore,
    PerformanceCurve,
    ResourceKind,
    RunRecord,
    TradeoffPoint,
    bundled_names,
    bundled_records,
    curve_derivative,
    dominates,
    eval_curve,
    fixed_context,
    knee_point,
    make_experiment_set,
    median,
    normalize,
    paired_t_test,
    pareto_front,
    pepr,
    pepr_alpha,
    pepr_curve,
    pepr_weighted,
    peprc_star,
    score_experiment,
    score_experiment_weighted,
    welch_t_test,
)

__all__ = [
    "GroupComparison",
    "Leaderboard",
    "LeaderboardEntry",
    "NormStrategy",
    "NormalizationContext",
    "ParetoFront",
    "PeprScore",
    "PerformanceCurve",
    "ResourceKind",
    "RunRecord",
    "TradeoffPoint",
    "bundled_names",
    "bundled_records",
    "curve_derivative",
    "dominates",
    "eval_curve",
    "fixed_context",
    "knee_point",
    "make_experiment_set",
    "median",
    "normalize",
    "paired_t_test",
    "pareto_front",
    "pepr",
    "pepr_alpha",
    "pepr_curve",
    "pepr_weighted",
    "peprc_star",
    "score_experiment",
    "score_experiment_weighted",
    "welch_t_test",
]
