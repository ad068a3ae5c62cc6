//! Analysis of multi-layered social networks: measures, shortest paths,
//! community extraction, benchmarks, group evolution and sequence export.

pub mod benchmark;
pub mod cli;
pub mod community;
pub mod datasets;
pub mod error;
pub mod evaluation;
pub mod evolution;
pub mod graph;
pub mod io;
pub mod measures;
pub mod paths;
pub mod prediction;
pub mod rng;

pub use error::{Error, Result};
pub use graph::{Dsn, Msn, MsnBuilder, NodeIx, Partition};
