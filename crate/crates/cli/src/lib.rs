//! Library surface of the omlogic command-line front end: file formats and
//! the subcommand implementations, kept separate from the binary so that
//! integration tests can drive them directly.

pub mod commands;
pub mod files;

/// Process exit codes: 0 success/agreement, 1 domain failure (axiom fails,
/// formula does not hold, proof rejected, claims disagree), 2 input error,
/// 3 precondition error.
pub mod exit_code {
    pub const OK: i32 = 0;
    pub const DOMAIN_FAILURE: i32 = 1;
    pub const INPUT_ERROR: i32 = 2;
    pub const PRECONDITION: i32 = 3;
}
