pub mod bounds;
pub mod cli;
pub mod closure;
pub mod constructions;
pub mod cubic;
pub mod decomposition;
pub mod error;
pub mod flow;
pub mod generate;
pub mod graph;
pub mod group;
pub mod peripheral;

pub use error::{Error, Result};
