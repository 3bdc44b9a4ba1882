//! Library side of the hookdist command line tool: the verification
//! suites and the formatting/IO helpers shared by the binary and its
//! integration tests.

pub mod output;
pub mod verify;
