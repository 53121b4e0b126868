//! NodeTrix planarity of flat clustered graphs with bounded cluster size.

pub mod decomposition;
pub mod embedding;
pub mod generate;
pub mod hardness;
pub mod graph;
pub mod model;
pub mod wheel;
pub mod constrained;
pub mod k2;
pub mod cli;
pub mod oracle;
pub mod sp;
