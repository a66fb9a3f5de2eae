//! End-to-end pipeline, random experiments and inspection dumps.

pub mod dump;
pub mod experiment;
pub mod generator;
pub mod pipeline;

pub use dump::{expand_dump, minors_dump, ExpandDump, MinorsDump};
pub use experiment::{
    run_experiment, wilson_interval, ExperimentConfig, ExperimentStats, VerdictCounts,
};
pub use generator::{random_stable_matrix, GeneratorStyle};
pub use pipeline::{check, minor_cap_from_env, CheckConfig, DepthChoice, MINOR_CAP_ENV};
