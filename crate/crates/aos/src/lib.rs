//! File formats, random instance generators and the `aos` command line on
//! top of [`aos_core`].

pub mod cli;
pub mod format;
pub mod generate;
pub mod report;
pub mod schema;

pub use aos_core;
