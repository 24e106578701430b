pub mod certificate;
pub mod cli;
pub mod decision;
pub mod document;
pub mod error;
pub mod group;
pub mod morphism;
pub mod pattern;
mod search;
pub mod subshift;
pub mod verdict;

pub use certificate::Certificate;
pub use error::{Error, Result};
pub use group::{GroupCtx, GroupElement, Word};
pub use pattern::{Alphabet, Pattern, PatternPresentation, Symbol};
pub use search::RefutationNode;
pub use morphism::LocalRule;
pub use subshift::Sft;
pub use verdict::{FuelVerdict, Verdict};
