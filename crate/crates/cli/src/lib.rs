//! Library half of the `sylow` command-line harness: verification suites
//! and output rendering, shared by the binary and the acceptance tests.

pub mod output;
pub mod report;
pub mod suites;
