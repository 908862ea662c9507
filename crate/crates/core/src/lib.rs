//! Regular graphs of prescribed girth: constructions, verification, exhaustive
//! small-case enumeration and order-spectrum search.

pub mod bounds;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod named;
pub mod recipe;
pub mod search;
pub mod spectrum;

pub use enumerate::{enumerate_regular, EnumSpec};
pub use error::{Error, Result};
pub use graph::{Edge, Girth, Graph};
pub use recipe::{Built, Recipe};
pub use search::SearchConfig;
pub use spectrum::{spectrum_search, SpectrumConfig, SpectrumReport};
