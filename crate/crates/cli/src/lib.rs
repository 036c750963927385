//! Library half of the command-line frontend: input formats, the
//! analysis pipeline, and the report schema. The binary adds argument
//! parsing and exit-code handling on top.

pub mod input;
pub mod pipeline;
pub mod report;

/// A command failure with its exit code class.
#[derive(Debug)]
pub enum Failure {
    Parse(String),
    Validation(String),
    Internal(String),
}

impl Failure {
    pub fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Validation(m) | Failure::Internal(m) => m,
        }
    }

    pub fn code(&self) -> u8 {
        match self {
            Failure::Internal(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Validation(_) => 3,
        }
    }
}
