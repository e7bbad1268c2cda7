//! Truncated simplicial objects and the homotopies built on them.
//!
//! The bar construction of a properad is viewed through
//! [`TruncatedSimplicialObject`]. On top of it: the simplicial identity and
//! latching checks, contractions from extra degeneracies, and cut maps
//! driven by a refinement oracle together with the homotopy connecting a
//! cut map to the identity.

mod contraction;
mod cut;
mod simplicial;
pub mod sample;
mod surface;

pub use free_properad::{assemble, decompose, Chain};
pub use contraction::{
    build_contraction, check_contraction, check_homotopy, eta_contraction, grouped_contraction, ContractionData,
    SimplicialHomotopy,
};
pub use cut::{
    check_compatibility, check_cut_simplicial, check_oracle, composite, cut_homotopy, oracle_grouping, CorollaOracle,
    CutMap, GeneratorOracle, RefinementOracle,
};
pub use simplicial::{check_simplicial_identities, degenerate_image, is_degenerate, CorruptedFace, TruncatedSimplicialObject};
pub use surface::NodeCutOracle;

use free_properad::NestError;
use graph_core::GraphError;
use properad_core::ProperadError;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BarError {
    #[error(transparent)]
    Properad(#[from] ProperadError),
    #[error("contraction data fails {identity} on {witness}")]
    Contraction { identity: String, witness: String },
    #[error("not a chain of partitions: {0}")]
    BadChain(String),
    #[error("refinement does not factor: {0}")]
    Factorization(String),
    #[error("outside the subcomplex: {0}")]
    NotInSubcomplex(String),
}

impl From<NestError> for BarError {
    fn from(e: NestError) -> Self {
        BarError::Properad(e.into())
    }
}

impl From<GraphError> for BarError {
    fn from(e: GraphError) -> Self {
        BarError::Properad(e.into())
    }
}
