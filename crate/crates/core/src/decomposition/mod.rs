//! Planarity, block-cut trees and SPQ/SPQR decompositions.

pub mod bctree;
pub mod planarity;
pub mod spq;
pub mod spqr;

pub use bctree::{biconnected_components, block_cut_tree, is_biconnected, is_triconnected, BlockCutTree};
pub use planarity::planar_embed;
pub use spq::{is_partial_2_tree, spq_decompose, SpqNode, SpqTree};
pub use spqr::{NodeKind, SkeletonEdge, SkeletonLink, SpqrNode, SpqrTree};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DecompositionError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("edge set is not biconnected")]
    NotBiconnected,
    #[error("root edge is not part of the block")]
    RootEdgeMissing,
    #[error("block is not series-parallel")]
    NotSeriesParallel,
}
