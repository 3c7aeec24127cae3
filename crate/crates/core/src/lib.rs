//! Colored quasisymmetric functions and colored noncommutative symmetric functions.
//!
//! Sentences (sequences of non-empty words over an ordered alphabet) index every
//! basis. The QSym side carries the monomial `M`, fundamental `F`, dual immaculate
//! `DI` and row-strict dual immaculate `RSDI` bases; the NSym side carries the
//! complete homogeneous `H`, elementary `E`, ribbon `R`, immaculate `IM` and
//! row-strict immaculate `RSIM` bases. All arithmetic is exact.

pub mod descent;
pub mod error;
pub mod linear;
pub mod nsym;
pub mod qsym;
pub mod sentence;
pub mod skew;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use linear::{int, uncolor, BasisTag, Expr, LinComb, Scalar, Side, TensorExpr, Terms, UncoloredExpr, UncoloredTensor};
pub use sentence::{
    canonical_compare, containment, left_quotient, mobius, pieri_extensions, quasishuffle, right_quotient, Alphabet,
    Color, Composition, Direction, Sentence, WeakSentence, Word,
};
pub use tableau::{StandardTableau, Tableau, Variant};
pub use descent::{uncolored_coeffs, DescentGraph, InverseCache};
pub use qsym::{ColoredMonomial, QsymConverter};
pub use nsym::NsymConverter;
pub use skew::{CoverEdge, SkewTarget};
