//! Order spectra of (k,g)-graphs: which orders are realized by a verified
//! witness, which are excluded, and which remain open.

mod engine;
mod io;
mod report;

use std::fmt;
use std::str::FromStr;

pub use engine::spectrum_search;
pub use io::{load_seeds, parse_citations, read_citations, read_graph6_file, Citation, Seed};
pub use report::{infer_n, OrderState, OrderStatus, SpectrumReport};

use crate::error::{Error, Result};
use crate::graph::{girth, Girth, Graph};
use crate::search::SearchConfig;

/// Why a graph fails to be a connected (k,g)-graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    Empty,
    NotRegular { min: usize, max: usize },
    Disconnected,
    WrongGirth(Girth),
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::Empty => f.write_str("graph has no vertices"),
            Rejection::NotRegular { min, max } => write!(f, "degrees range over {min}..{max}"),
            Rejection::Disconnected => f.write_str("graph is disconnected"),
            Rejection::WrongGirth(gi) => write!(f, "girth is {gi}"),
        }
    }
}

/// The verification gate: `g` must be connected, `k`-regular and of girth
/// exactly `gi`.
pub fn check_kg_graph(g: &Graph, k: usize, gi: usize) -> std::result::Result<(), Rejection> {
    let degrees = g.degree_sequence();
    let (Some(&min), Some(&max)) = (degrees.iter().min(), degrees.iter().max()) else {
        return Err(Rejection::Empty);
    };
    if min != k || max != k {
        return Err(Rejection::NotRegular { min, max });
    }
    if g.components().len() != 1 {
        return Err(Rejection::Disconnected);
    }
    match girth(g) {
        x if x.is_exactly(gi) => Ok(()),
        x => Err(Rejection::WrongGirth(x)),
    }
}

/// Search constructions the engine may apply to pooled graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Construction {
    SubdivideTwo,
    SubdivideThree,
    SubdivideMerge,
    DeleteEdgesAddVertices,
    DeleteVertices,
    RemoveBiggsTree,
    MooreTreeDouble,
    CanonicalDoubleCover,
}

impl Construction {
    pub const ALL: [Construction; 8] = [
        Construction::SubdivideTwo,
        Construction::SubdivideThree,
        Construction::SubdivideMerge,
        Construction::DeleteEdgesAddVertices,
        Construction::DeleteVertices,
        Construction::RemoveBiggsTree,
        Construction::MooreTreeDouble,
        Construction::CanonicalDoubleCover,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::SubdivideTwo => "subdivide_two",
            Construction::SubdivideThree => "subdivide_three",
            Construction::SubdivideMerge => "subdivide_merge",
            Construction::DeleteEdgesAddVertices => "delete_edges_add_vertices",
            Construction::DeleteVertices => "delete_vertices",
            Construction::RemoveBiggsTree => "remove_biggs_tree",
            Construction::MooreTreeDouble => "moore_tree_double",
            Construction::CanonicalDoubleCover => "canonical_double_cover",
        }
    }

    /// The subdivision techniques.
    pub fn subdivisions() -> Vec<Construction> {
        vec![
            Construction::SubdivideTwo,
            Construction::SubdivideThree,
            Construction::SubdivideMerge,
        ]
    }

    /// Parses a comma-separated list; `all` and `subdivisions` expand.
    pub fn parse_list(s: &str) -> Result<Vec<Construction>> {
        let mut out = Vec::new();
        for name in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match name {
                "all" => out.extend(Construction::ALL),
                "subdivisions" => out.extend(Construction::subdivisions()),
                _ => out.push(name.parse()?),
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Construction> {
        Construction::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::ParameterOutOfRange(format!("unknown construction {s:?}")))
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Families evaluated at every order up to the horizon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// Circulant with the given jumps; negative jumps count from `n`.
    Circulant(Vec<i64>),
    QuarticParity,
}

#[derive(Debug, Clone)]
pub struct SpectrumConfig {
    pub constructions: Vec<Construction>,
    pub generators: Vec<Generator>,
    pub citations: Vec<Citation>,
    /// Node budget and search order for each construction call.
    pub search: SearchConfig,
    /// Distinct graphs kept per order as material for further steps.
    pub pool_width: usize,
}

impl Default for SpectrumConfig {
    fn default() -> Self {
        SpectrumConfig {
            constructions: Construction::ALL.to_vec(),
            generators: Vec::new(),
            citations: Vec::new(),
            search: SearchConfig::default(),
            pool_width: 6,
        }
    }
}

impl SpectrumConfig {
    pub fn with_constructions(constructions: &[Construction]) -> SpectrumConfig {
        SpectrumConfig {
            constructions: constructions.to_vec(),
            ..SpectrumConfig::default()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn gate() {
        assert_eq!(check_kg_graph(&named::petersen(), 3, 5), Ok(()));
        assert_eq!(
            check_kg_graph(&named::petersen(), 3, 6),
            Err(Rejection::WrongGirth(Girth::Cycle(5)))
        );
        let two = named::petersen().disjoint_union(&named::petersen());
        assert_eq!(check_kg_graph(&two, 3, 5), Err(Rejection::Disconnected));
        assert_eq!(
            check_kg_graph(&named::path(3), 2, 3),
            Err(Rejection::NotRegular { min: 1, max: 2 })
        );
        assert_eq!(
            check_kg_graph(&Graph::empty(0), 3, 5),
            Err(Rejection::Empty)
        );
    }

    #[test]
    fn construction_names() {
        for c in Construction::ALL {
            assert_eq!(c.name().parse::<Construction>().unwrap(), c);
        }
        assert_eq!(Construction::parse_list("all").unwrap().len(), 8);
        assert_eq!(
            Construction::parse_list("subdivide_two,subdivisions").unwrap(),
            Construction::subdivisions()
        );
        assert!(Construction::parse_list("nope").is_err());
    }
}
