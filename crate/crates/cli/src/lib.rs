//! File formats, reports, parallel sweeps and the `isoseq` command line on
//! top of `isoseq-core`.

pub mod cli;
pub mod io;
pub mod parallel;
pub mod report;

pub use cli::{run, Cli, Outcome};
