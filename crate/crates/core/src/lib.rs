//! Exact tools for k-community structures: a verifier, structural solvers
//! for trees, forests and threshold graphs, generators for graph families
//! without structures, and an exhaustive oracle for small graphs.

use thiserror::Error;

pub mod cli;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod solve;
pub mod threshold;
pub mod tree;
pub mod verifier;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] graph::GraphError),
    #[error(transparent)]
    Parse(#[from] graph::ParseError),
    #[error(transparent)]
    Partition(#[from] verifier::PartitionError),
    #[error(transparent)]
    Verify(#[from] verifier::VerifyError),
    #[error(transparent)]
    Deduce(#[from] verifier::DeduceError),
    #[error(transparent)]
    Tuple(#[from] verifier::TupleError),
    #[error(transparent)]
    Tree(#[from] tree::TreeError),
    #[error(transparent)]
    Threshold(#[from] threshold::ThresholdError),
    #[error(transparent)]
    Oracle(#[from] oracle::OracleError),
    #[error(transparent)]
    Family(#[from] families::FamilyError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}
