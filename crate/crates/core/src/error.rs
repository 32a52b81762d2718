use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A token of a Gauss code does not occur exactly twice.
    #[error("label `{label}` occurs {}", times(*.count))]
    Multiplicity { label: String, count: usize },

    #[error("not realizable on S²")]
    NotRealizable,

    #[error("rotation choice does not realize the word on the sphere")]
    NotSpherical,

    /// Raised when the chord-deletion minimum comes out odd, which cannot
    /// happen for a curve on the sphere.
    #[error("trivializing number {0} is odd; the input is not a spherical curve")]
    OddTrivializingNumber(usize),

    #[error("move validation failed: {0}")]
    MoveValidation(String),

    #[error("{n} crossings exceed the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{source_name}:{line}: {message}")]
    Corpus {
        source_name: String,
        line: usize,
        message: String,
    },
}

fn times(count: usize) -> String {
    match count {
        1 => "once".to_string(),
        2 => "twice".to_string(),
        k => format!("{k} times"),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
