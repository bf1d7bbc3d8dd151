//! File formats, figures, reports and the command-line driver around
//! [`tarkit_core`].

pub mod cli;
pub mod format;
pub mod parallel;
pub mod report;
pub mod svg;

pub use tarkit_core as core;
