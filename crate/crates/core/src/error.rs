use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report. Variant names double as the
/// error names printed by the command line driver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    ZeroOrder,
    #[error("vertex {vertex} out of range for order {order}")]
    IndexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} would be a parallel edge")]
    MultiEdge(usize, usize),
    #[error("{0}-{1} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("the two edges are the same edge")]
    SameEdge,
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("order {0} is too large")]
    OrderTooLarge(usize),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("arithmetic overflow evaluating {0}")]
    Overflow(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("radius {radius} exceeds girth/4 for girth {girth}")]
    RadiusTooLarge { radius: usize, girth: usize },
    #[error("depth-{depth} breadth-first tree at vertex {root} is not a tree")]
    TreeNotInduced { root: usize, depth: usize },
    #[error("no leaf matching keeps girth >= {required}; best found {best}")]
    GirthNotPreserved { required: usize, best: usize },
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is not tetravalent")]
    NotTetravalent,
    #[error("graph is not {0}-regular")]
    NotRegular(usize),
    #[error("no completion restores regularity at the requested girth")]
    NoCompletion,
    #[error("degree imbalance: {0}")]
    DegreeImbalance(String),
    #[error("cannot delete {0} vertices (allowed 1..=4)")]
    TooManyVertices(usize),
    #[error("no perfect matching exists")]
    NoPerfectMatching,
    #[error("order {0} is odd")]
    OddOrder(usize),
    #[error("order {order} is below the minimum {min}")]
    OrderTooSmall { order: usize, min: usize },
    #[error("invalid connecting set: {0}")]
    InvalidConnectingSet(String),
    #[error("GDGP parameters violate {0}")]
    SpecViolation(String),
    #[error("girth is undefined for a forest")]
    Acyclic,
    #[error("enumeration outside the supported caps: {0}")]
    CapExceeded(String),
    #[error("search budget of {0} steps exhausted")]
    BudgetExhausted(u64),
    #[error("bad seed: {0}")]
    BadSeed(String),
    #[error("horizon {horizon} is smaller than {needed}")]
    HorizonTooSmall { horizon: usize, needed: usize },
    #[error("contradiction at order {0}: {1}")]
    Contradiction(usize, String),
    #[error("recipe error: {0}")]
    Recipe(String),
    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Short variant name, used in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ZeroOrder => "ZeroOrder",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::SelfLoop(_) => "SelfLoop",
            Error::MultiEdge(..) => "MultiEdge",
            Error::NotAnEdge(..) => "NotAnEdge",
            Error::SameEdge => "SameEdge",
            Error::MalformedGraph6(_) => "MalformedGraph6",
            Error::OrderTooLarge(_) => "OrderTooLarge",
            Error::ParameterOutOfRange(_) => "ParameterOutOfRange",
            Error::Overflow(_) => "Overflow",
            Error::DegreeMismatch(_) => "DegreeMismatch",
            Error::RadiusTooLarge { .. } => "RadiusTooLarge",
            Error::TreeNotInduced { .. } => "TreeNotInduced",
            Error::GirthNotPreserved { .. } => "GirthNotPreserved",
            Error::NotCubic => "NotCubic",
            Error::NotTetravalent => "NotTetravalent",
            Error::NotRegular(_) => "NotRegular",
            Error::NoCompletion => "NoCompletion",
            Error::DegreeImbalance(_) => "DegreeImbalance",
            Error::TooManyVertices(_) => "TooManyVertices",
            Error::NoPerfectMatching => "NoPerfectMatching",
            Error::OddOrder(_) => "OddOrder",
            Error::OrderTooSmall { .. } => "OrderTooSmall",
            Error::InvalidConnectingSet(_) => "InvalidConnectingSet",
            Error::SpecViolation(_) => "SpecViolation",
            Error::Acyclic => "Acyclic",
            Error::CapExceeded(_) => "CapExceeded",
            Error::BudgetExhausted(_) => "BudgetExhausted",
            Error::BadSeed(_) => "BadSeed",
            Error::HorizonTooSmall { .. } => "HorizonTooSmall",
            Error::Contradiction(..) => "Contradiction",
            Error::Recipe(_) => "Recipe",
            Error::Io(_) => "Io",
        }
    }
}
