//! File formats, JSON reports and the `fusionkit` command line on top of
//! [`fusionkit_core`].

pub mod cli;
pub mod format;
pub mod report;

pub use fusionkit_core as core;
