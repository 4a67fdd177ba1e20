//! Virtual strings as nanowords: homotopy moves, invariants, coverings,
//! composition and cabling, plus a bounded homotopy search.

pub mod enumerate;
pub mod error;
pub mod invariants;
pub mod moves;
pub mod nanoword;
pub mod ops;
pub mod search;

pub use error::{Error, Result};
pub use moves::{MoveKind, MoveSite, MoveTrace};
pub use nanoword::{Letter, LetterType, Nanoword};
