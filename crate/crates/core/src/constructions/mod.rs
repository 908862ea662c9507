//! Graph-producing operations. Every public operation returns [`Built`]
//! values carrying a replayable [`Recipe`].

mod amalgamate;
mod arithmetic;
mod cover;
mod matching;
mod moore;
mod rewire;
mod subdivide;

use std::collections::{BTreeMap, HashSet};

pub use amalgamate::{amalgamate, AmalgamationMode};
pub use arithmetic::{circulant, gdgp, quartic_parity_graph, CirculantSpec, GdgpSpec};
pub use cover::canonical_double_cover;
pub use matching::remove_perfect_matching;
pub use moore::{moore_tree_double, moore_tree_double_with};
pub use rewire::{
    biggs_epsilon, delete_edges_add_vertices, delete_edges_add_vertices_each, delete_vertices,
    delete_vertices_each, remove_biggs_tree,
};
pub use subdivide::{
    subdivide_merge, subdivide_merge_each, subdivide_three, subdivide_three_each, subdivide_two,
    subdivide_two_each,
};

use crate::error::{Error, Result};
use crate::graph::{canonical_certificate, canonical_form, Certificate, Graph};
use crate::recipe::{Built, ParamValue, Recipe};

/// Input graph with its certificate and canonical labelling, used to
/// express recipe parameters in canonical terms.
pub(crate) struct Parent {
    cert: Certificate,
    perm: Vec<usize>,
}

impl Parent {
    pub(crate) fn of(g: &Graph) -> Parent {
        let (cert, perm) = canonical_form(g);
        Parent { cert, perm }
    }

    /// Canonical label of `x`; appended vertices keep their index.
    pub(crate) fn label(&self, x: usize) -> i64 {
        self.perm.get(x).copied().unwrap_or(x) as i64
    }

    pub(crate) fn labels(&self, xs: &[usize]) -> ParamValue {
        ParamValue::List(xs.iter().map(|&x| self.label(x)).collect())
    }

    pub(crate) fn edge_list(&self, es: &[(usize, usize)]) -> ParamValue {
        ParamValue::List(
            es.iter()
                .flat_map(|&(a, b)| [self.label(a), self.label(b)])
                .collect(),
        )
    }
}

/// Small builder for parameter maps.
#[derive(Default)]
pub(crate) struct Params(BTreeMap<String, ParamValue>);

impl Params {
    pub(crate) fn new() -> Params {
        Params::default()
    }

    pub(crate) fn int(mut self, key: &str, x: i64) -> Params {
        self.0.insert(key.into(), ParamValue::Int(x));
        self
    }

    pub(crate) fn value(mut self, key: &str, v: ParamValue) -> Params {
        self.0.insert(key.into(), v);
        self
    }

    pub(crate) fn list(mut self, key: &str, xs: impl IntoIterator<Item = i64>) -> Params {
        self.0
            .insert(key.into(), ParamValue::List(xs.into_iter().collect()));
        self
    }
}

pub(crate) fn built(op: &str, parents: &[&Parent], params: Params, graph: Graph) -> Built {
    let output = canonical_certificate(&graph);
    let parents = parents.iter().map(|p| p.cert.clone()).collect();
    let recipe = Recipe::new(op, parents, params.0, output).expect("registered operation");
    Built { graph, recipe }
}

/// Keeps the first graph of every isomorphism class.
pub(crate) fn dedup(items: Vec<Built>) -> Vec<Built> {
    let mut seen = HashSet::new();
    items
        .into_iter()
        .filter(|b| seen.insert(b.recipe.output.clone()))
        .collect()
}

pub(crate) fn regular_degree(g: &Graph) -> Result<usize> {
    if g.order() == 0 {
        return Err(Error::ZeroOrder);
    }
    g.regular_degree()
        .ok_or_else(|| Error::NotRegular(g.order()))
}

pub(crate) fn to_index(x: i64, what: &str) -> Result<usize> {
    usize::try_from(x).map_err(|_| Error::Recipe(format!("negative {what} {x}")))
}

pub(crate) fn pairs(xs: &[i64]) -> Result<Vec<(usize, usize)>> {
    if xs.len() % 2 == 1 {
        return Err(Error::Recipe("edge list of odd length".into()));
    }
    xs.chunks(2)
        .map(|c| Ok((to_index(c[0], "vertex")?, to_index(c[1], "vertex")?)))
        .collect()
}

pub(crate) fn indices(xs: &[i64]) -> Result<Vec<usize>> {
    xs.iter().map(|&x| to_index(x, "vertex")).collect()
}

/// Rebuilds a graph from its recipe without checking the output
/// certificate; see [`Recipe::replay`].
pub(crate) fn replay(r: &Recipe) -> Result<Graph> {
    let parents: Vec<Graph> = r.parents.iter().map(Certificate::to_graph).collect();
    let parent = |i: usize| {
        parents.get(i).ok_or_else(|| {
            Error::Recipe(format!(
                "{} needs at least {} parent(s)",
                r.operation,
                i + 1
            ))
        })
    };
    let int = |key: &str| r.int(key).and_then(|x| to_index(x, key));
    match r.operation.as_str() {
        "seed" => Ok(parent(0)?.clone()),
        "amalgamate" => {
            let e1 = pairs(r.list("e1")?)?;
            let e2 = pairs(r.list("e2")?)?;
            let (Some(&e1), Some(&e2)) = (e1.first(), e2.first()) else {
                return Err(Error::Recipe("amalgamate needs e1 and e2".into()));
            };
            let mode = AmalgamationMode::from_code(r.int("mode")?)?;
            amalgamate::apply(parent(0)?, parent(1)?, e1, e2, mode)
        }
        "moore_tree_double" => moore::apply(
            parent(0)?,
            int("root")?,
            int("radius")?,
            &pairs(r.list("matching")?)?,
        ),
        "subdivide_two" | "subdivide_three" | "subdivide_merge" => {
            let kind = subdivide::Kind::from_name(&r.operation);
            subdivide::apply(parent(0)?, kind, &pairs(r.list("edges")?)?)
        }
        "delete_edges_add_vertices" => rewire::apply_edges(
            parent(0)?,
            &pairs(r.list("deleted")?)?,
            int("new_vertices")?,
            &pairs(r.list("added")?)?,
        ),
        "delete_vertices" | "remove_biggs_tree" => {
            let key = if r.operation == "delete_vertices" {
                "deleted"
            } else {
                "tree"
            };
            rewire::apply_vertices(
                parent(0)?,
                &indices(r.list(key)?)?,
                &pairs(r.list("added")?)?,
            )
        }
        "remove_perfect_matching" => matching::apply(parent(0)?, &pairs(r.list("matching")?)?),
        "circulant" => {
            let spec = CirculantSpec::new(int("n")?, indices(r.list("set")?)?)?;
            Ok(arithmetic::circulant_graph(&spec))
        }
        "quartic_parity_graph" => Ok(quartic_parity_graph(int("n")?)?.graph),
        "gdgp" => {
            let spec = GdgpSpec::new(int("m")?, int("n")?, indices(r.list("K")?)?)?;
            arithmetic::gdgp_graph(&spec)
        }
        "canonical_double_cover" => Ok(cover::apply(parent(0)?)),
        other => Err(Error::Recipe(format!("no replay for {other}"))),
    }
}
