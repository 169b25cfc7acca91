//! Deciding S1S over ultimately periodic words by compiling formulas to Büchi
//! automata, with complementation through transition-profile semigroups.

pub mod buchi;
pub mod complement;
pub mod encodings;
pub mod logic;
pub mod random;
pub mod relation;
pub mod semigroup;
pub mod word;

pub use buchi::{BuchiNfa, Match};
pub use semigroup::FiniteSemigroup;
pub use word::{UpWord, Word};
