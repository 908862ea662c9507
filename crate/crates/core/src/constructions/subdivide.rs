use std::ops::ControlFlow;

use itertools::Itertools;

use super::{built, dedup, regular_degree, Params, Parent};
use crate::error::{Error, Result};
use crate::graph::metric::{distance_matrix, girth_adj};
use crate::graph::{EditGraph, Graph};
use crate::recipe::Built;
use crate::search::SearchConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Kind {
    /// Two subdivision vertices joined by an edge.
    Two,
    /// Three subdivision vertices joined to a new hub.
    Three,
    /// Two subdivision vertices identified.
    Merge,
}

impl Kind {
    pub(crate) fn from_name(name: &str) -> Kind {
        match name {
            "subdivide_two" => Kind::Two,
            "subdivide_three" => Kind::Three,
            _ => Kind::Merge,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Kind::Two => "subdivide_two",
            Kind::Three => "subdivide_three",
            Kind::Merge => "subdivide_merge",
        }
    }

    fn arity(self) -> usize {
        match self {
            Kind::Three => 3,
            _ => 2,
        }
    }

    /// Pairwise edge distance required between chosen edges.
    fn threshold(self, target: usize) -> usize {
        match self {
            Kind::Three => target.saturating_sub(3),
            _ => target.saturating_sub(2),
        }
    }
}

/// Subdivides each edge in `edges`; new vertices are appended from index
/// `n` in the order of `edges`, followed by the hub for [`Kind::Three`].
pub(crate) fn apply(g: &Graph, kind: Kind, edges: &[(usize, usize)]) -> Result<Graph> {
    if edges.len() != kind.arity() {
        return Err(Error::Recipe(format!(
            "{} takes {} edges, got {}",
            kind.name(),
            kind.arity(),
            edges.len()
        )));
    }
    let mut eg = EditGraph::from_graph(g);
    for &(a, b) in edges {
        if a >= g.order() || b >= g.order() || !g.has_edge(a, b) {
            return Err(Error::NotAnEdge(a.min(b), a.max(b)));
        }
        eg.remove_edge(a, b)?;
    }
    let mids: Vec<usize> = match kind {
        Kind::Merge => {
            let x = eg.add_vertex();
            vec![x, x]
        }
        _ => edges.iter().map(|_| eg.add_vertex()).collect(),
    };
    for (&(a, b), &x) in edges.iter().zip(&mids) {
        eg.add_edge(a, x)?;
        eg.add_edge(x, b)?;
    }
    match kind {
        Kind::Two => eg.add_edge(mids[0], mids[1])?,
        Kind::Three => {
            let hub = eg.add_vertex();
            for &x in &mids {
                eg.add_edge(x, hub)?;
            }
        }
        Kind::Merge => {}
    }
    Ok(eg.into_graph())
}

fn each(
    g: &Graph,
    kind: Kind,
    target: usize,
    cfg: &SearchConfig,
    visit: &mut dyn FnMut(Built) -> ControlFlow<()>,
) -> Result<()> {
    let k = regular_degree(g).ok();
    match kind {
        Kind::Merge if k != Some(4) => return Err(Error::NotTetravalent),
        Kind::Two | Kind::Three if k != Some(3) => return Err(Error::NotCubic),
        _ => {}
    }
    let parent = Parent::of(g);
    let dist = distance_matrix(g.adjacency());
    let edge_distance = |a: (usize, usize), b: (usize, usize)| {
        [
            dist[a.0][b.0],
            dist[a.0][b.1],
            dist[a.1][b.0],
            dist[a.1][b.1],
        ]
        .into_iter()
        .min()
        .map_or(usize::MAX, |d| d.saturating_add(1))
    };
    let threshold = kind.threshold(target);
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| e.endpoints()).collect();
    cfg.order(&mut edges);
    let mut budget = cfg.counter();
    for combo in (0..edges.len()).combinations(kind.arity()) {
        budget.tick()?;
        let chosen: Vec<(usize, usize)> = combo.iter().map(|&i| edges[i]).collect();
        let far = chosen
            .iter()
            .tuple_combinations()
            .all(|(&a, &b)| edge_distance(a, b) >= threshold);
        if !far {
            continue;
        }
        if kind == Kind::Merge {
            let (a, b) = (chosen[0], chosen[1]);
            if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
                continue;
            }
        }
        let out = apply(g, kind, &chosen)?;
        if !girth_adj(out.adjacency()).is_at_least(target) {
            continue;
        }
        let params = Params::new().value("edges", parent.edge_list(&chosen));
        if visit(built(kind.name(), &[&parent], params, out)).is_break() {
            break;
        }
    }
    Ok(())
}

fn collect(g: &Graph, kind: Kind, target: usize, cfg: &SearchConfig) -> Result<Vec<Built>> {
    let mut out = Vec::new();
    each(g, kind, target, cfg, &mut |b| {
        out.push(b);
        ControlFlow::Continue(())
    })?;
    Ok(dedup(out))
}

/// All cubic graphs of order n+2 obtained by subdividing two edges at edge
/// distance at least `target - 2` and joining the new vertices, one per
/// isomorphism class, in lexicographic order of the edge pairs.
pub fn subdivide_two(g: &Graph, target: usize, cfg: &SearchConfig) -> Result<Vec<Built>> {
    collect(g, Kind::Two, target, cfg)
}

/// As [`subdivide_two`] but with three edges at pairwise edge distance at
/// least `target - 3`, joined through a new hub vertex (order n+4).
pub fn subdivide_three(g: &Graph, target: usize, cfg: &SearchConfig) -> Result<Vec<Built>> {
    collect(g, Kind::Three, target, cfg)
}

/// Quartic graphs of order n+1 obtained by subdividing two disjoint edges
/// at edge distance at least `target - 2` and identifying the new
/// vertices. Candidates whose girth drops below `target` are discarded.
pub fn subdivide_merge(g: &Graph, target: usize, cfg: &SearchConfig) -> Result<Vec<Built>> {
    collect(g, Kind::Merge, target, cfg)
}

/// Streams undeduplicated [`subdivide_two`] candidates until `visit` breaks.
pub fn subdivide_two_each(
    g: &Graph,
    target: usize,
    cfg: &SearchConfig,
    visit: &mut dyn FnMut(Built) -> ControlFlow<()>,
) -> Result<()> {
    each(g, Kind::Two, target, cfg, visit)
}

pub fn subdivide_three_each(
    g: &Graph,
    target: usize,
    cfg: &SearchConfig,
    visit: &mut dyn FnMut(Built) -> ControlFlow<()>,
) -> Result<()> {
    each(g, Kind::Three, target, cfg, visit)
}

pub fn subdivide_merge_each(
    g: &Graph,
    target: usize,
    cfg: &SearchConfig,
    visit: &mut dyn FnMut(Built) -> ControlFlow<()>,
) -> Result<()> {
    each(g, Kind::Merge, target, cfg, visit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth, is_isomorphic, Girth};
    use crate::named;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn petersen_gives_one_order_twelve_graph() {
        // Petersen's automorphisms are transitive on edge pairs at edge
        // distance 3, so only one of the two order-12 graphs arises.
        let out = subdivide_two(&named::petersen(), 5, &cfg()).unwrap();
        assert_eq!(out.len(), 1);
        for b in &out {
            assert_eq!(b.graph.order(), 12);
            assert!(b.graph.is_k_regular(3));
            assert_eq!(girth(&b.graph), Girth::Cycle(5));
            b.recipe.replay().unwrap();
        }
    }

    #[test]
    fn subdivide_three_examples() {
        let out = subdivide_three(&named::complete_bipartite(3, 3), 4, &cfg()).unwrap();
        assert!(out
            .iter()
            .any(|b| b.graph.order() == 10 && girth(&b.graph).is_at_least(4)));
        let out = subdivide_three(&named::petersen(), 5, &cfg()).unwrap();
        assert!(!out.is_empty());
        assert!(out
            .iter()
            .all(|b| b.graph.order() == 14 && girth(&b.graph).is_at_least(5)));
        let out = subdivide_three(&named::complete(4), 3, &cfg()).unwrap();
        assert!(out
            .iter()
            .any(|b| b.graph.order() == 8 && b.graph.is_k_regular(3)));
    }

    #[test]
    fn merge_robertson() {
        let out = subdivide_merge(&named::robertson(), 5, &cfg()).unwrap();
        assert!(!out.is_empty());
        for b in &out {
            assert_eq!(b.graph.order(), 20);
            assert!(b.graph.is_k_regular(4));
            assert!(girth(&b.graph).is_at_least(5));
        }
        assert!(out.iter().any(|b| girth(&b.graph) == Girth::Cycle(5)));
    }

    #[test]
    fn degree_preconditions() {
        assert_eq!(
            subdivide_two(&named::robertson(), 5, &cfg()).unwrap_err(),
            Error::NotCubic
        );
        assert_eq!(
            subdivide_merge(&named::petersen(), 5, &cfg()).unwrap_err(),
            Error::NotTetravalent
        );
    }

    #[test]
    fn apply_rejects_non_edges() {
        let p = named::petersen();
        assert_eq!(
            apply(&p, Kind::Two, &[(0, 1), (0, 2)]).unwrap_err(),
            Error::NotAnEdge(0, 2)
        );
        let c = named::cycle(5);
        assert!(is_isomorphic(
            &apply(&c, Kind::Two, &[(0, 1), (2, 3)])
                .unwrap()
                .induced_subgraph(&[0, 1, 2, 3, 4, 5, 6])
                .unwrap(),
            &apply(&c, Kind::Two, &[(1, 2), (3, 4)]).unwrap()
        ));
    }
}
