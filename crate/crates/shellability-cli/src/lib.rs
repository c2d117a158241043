//! Library half of the `shellability` command-line tool: input parsing,
//! verdict records, JSON/DOT rendering, and the batch verification suites.

pub mod input;
pub mod render;
pub mod suites;
pub mod verdict;
