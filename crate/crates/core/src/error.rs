use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "difference word is not a Fibonacci word prefix (first violation at position {position})"
    )]
    NotFibonacciWord { position: usize },

    #[error("difference word uses a single letter; (p, q) cannot be identified")]
    DegenerateAlphabet,

    #[error("letter {letter} at position {position} is outside the alphabet")]
    LetterOutsideAlphabet { letter: String, position: usize },

    #[error("morphism is not prolongable on {0}")]
    NotProlongable(String),

    #[error("malformed morphism: {0}")]
    InvalidMorphism(String),

    #[error("malformed digit string {input:?}: {reason}")]
    ParseDigits { input: String, reason: &'static str },

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("unsupported request: {0}")]
    Unsupported(String),

    #[error("value out of supported range: {0}")]
    OutOfRange(String),
}
