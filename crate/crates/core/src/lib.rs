//! Classification of small graphs as prime character degree graphs of solvable
//! groups: enumeration, necessary conditions, eliminators, occurrence
//! certificates and the pipeline that combines them.

pub mod admissibility;
pub mod conditions;
pub mod constructions;
pub mod diameter3;
pub mod eliminators;
pub mod enumeration;
pub mod graph;
pub mod kb;
pub mod pipeline;
pub mod status;

pub use graph::{canonical_key, decode_graph6, encode_graph6, CanonicalKey, Graph};
pub use status::{Reason, Status};

use thiserror::Error;

/// Any error raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] graph::GraphError),
    #[error(transparent)]
    Graph6(#[from] graph::Graph6Error),
    #[error(transparent)]
    Enumeration(#[from] enumeration::EnumerationError),
    #[error(transparent)]
    Condition(#[from] conditions::ConditionError),
    #[error(transparent)]
    Diameter3(#[from] diameter3::Diameter3Error),
    #[error(transparent)]
    Gamma(#[from] eliminators::GammaError),
    #[error(transparent)]
    Construction(#[from] constructions::ConstructionError),
    #[error(transparent)]
    Recipe(#[from] constructions::RecipeParseError),
    #[error(transparent)]
    Kb(#[from] kb::KbError),
    #[error(transparent)]
    Pipeline(#[from] pipeline::PipelineError),
}
