//! Command-line front end for `sl2swc-core`: representation expressions,
//! a character-table cache, JSON reports and verification suites.

pub mod cache;
pub mod cli;
pub mod expr;
pub mod output;
pub mod suites;

pub use cli::run;
