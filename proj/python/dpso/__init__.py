"""Standard and dissipative particle swarm optimization."""

from ._core import (
    CellSource,
    ChaosParams,
    ConfigError,
    DpsoError,
    ExperimentConfig,
    InertiaSchedule,
    InvalidInput,
    IoError,
    ObjectiveSpec,
    OutOfRange,
    SweepCell,
    SweepTable,
    TableSpec,
    TrialResult,
    TrialSummary,
    UnknownObjective,
    default_sweep_variants,
    default_w_grid,
    derive_seed,
    griewank,
    inertia_at,
    paper_domain,
    paper_g_max,
    paper_value,
    parse_config_experiment,
    rastrigin,
    run,
    run_trials,
    sf0_reference_rows,
    sweep_w,
    table_cells,
    table_from_csv,
    table_variant,
    trace,
    trace_to_csv,
)

__all__ = [name for name in dir() if not name.startswith("_")]
