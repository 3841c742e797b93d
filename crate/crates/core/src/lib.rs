//! Decision procedures and completion constructions for variable-length
//! codes invariant under literal (anti)morphisms.

mod automata;
pub mod completion;
pub mod error;
pub mod hull;
pub mod lang;
pub mod problem;
pub mod props;
pub mod report;
pub mod words;

pub use error::{Error, ErrorCategory};
pub use lang::RegularLang;
pub use words::{Alphabet, FiniteLang, LiteralMap, MapKind, Word};
