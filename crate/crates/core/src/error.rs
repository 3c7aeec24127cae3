use thiserror::Error;

/// Errors raised by the library. Every variant is a domain error; none are panics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet {0:?}: {1}")]
    InvalidAlphabet(String, &'static str),
    #[error("letter {letter:?} is not in alphabet {alphabet:?}")]
    UnknownLetter { letter: char, alphabet: String },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown basis tag {0:?}")]
    UnknownTag(String),
    #[error("sentences may not contain empty words")]
    EmptyWord,
    #[error("cannot combine {0} and {1} expressions; convert first")]
    TagMismatch(String, String),
    #[error("expressions over different alphabets ({0:?} vs {1:?})")]
    AlphabetMismatch(String, String),
    #[error("{tag} is not a basis of {side}")]
    WrongSide { tag: String, side: String },
    #[error("{fine} is not a refinement of {coarse}")]
    NotRefinement { fine: String, coarse: String },
    #[error("{inner} is not left-contained in {outer}")]
    NotContained { inner: String, outer: String },
    #[error("{op} does not accept {tag}-tagged input")]
    Unsupported { op: &'static str, tag: String },
    #[error("{what} ({count}) exceeds the cap of {cap}; raise the cap or lower the size")]
    CapExceeded { what: &'static str, count: u128, cap: u128 },
    #[error("descent graph is not acyclic: cycle through {0}")]
    Cycle(String),
    #[error("non-integral coefficient {coef} produced by {context}")]
    NonIntegral { coef: String, context: String },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("empty word given where a non-empty word is required")]
    EmptyOperatorWord,
}

pub type Result<T> = std::result::Result<T, Error>;
