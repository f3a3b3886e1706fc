use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rule {lhs} has a right-hand side word {word} that is not smaller than its left-hand side")]
    RuleNotDecreasing { lhs: String, word: String },
    #[error("rule {lhs} does not preserve parity")]
    ParityMismatch { lhs: String },
    #[error("a rule with left-hand side {lhs} already exists")]
    DuplicateRule { lhs: String },
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("rewriting exceeded its step budget of {budget}; the rule set is not terminating")]
    StepBudgetExceeded { budget: usize },
    #[error("basis element {index} is zero in the algebra")]
    DegenerateBasis { index: usize },
    #[error("invalid index pair ({0}, {1})")]
    InvalidIndex(usize, usize),
    #[error("closure fails: {0} is not in the span of ordered minor words")]
    NonClosure(String),
    #[error("localization aborted: {0} does not q-commute purely with D[1,2]")]
    NotQCommuting(String),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown atom {name} at line {line}, column {column}")]
    UnknownAtom {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("atom {atom} is not available in algebra {algebra}")]
    AtomNotInAlgebra { atom: String, algebra: String },
    #[error("unknown algebra {0}")]
    UnknownAlgebra(String),
    #[error("unknown suite {0}")]
    UnknownSuite(String),
    #[error("could not start worker threads: {0}")]
    ThreadPool(String),
    #[error("non-closure witness: {0}")]
    NotInSpan(String),
}

pub type Result<T> = std::result::Result<T, Error>;
