//! Deletion-and-reconnection searches: remove edges or vertices, then
//! restore regularity with new edges that keep the girth floor.

use std::collections::HashSet;
use std::ops::ControlFlow;

use itertools::Itertools;

use super::{built, dedup, regular_degree, Params, Parent};
use crate::error::{Error, Result};
use crate::graph::metric::girth_adj;
use crate::graph::{girth, EditGraph, Graph};
use crate::recipe::Built;
use crate::search::{complete_regular, Budget, SearchConfig};

/// Vertices removed by [`delete_vertices`] at most.
pub const MAX_DELETED_VERTICES: usize = 4;

/// Runs the completion search on `adj` and reports each completed graph
/// with its added edges translated through `back` (current index to the
/// label used in the recipe).
fn complete(
    mut adj: Vec<Vec<usize>>,
    back: &[usize],
    k: usize,
    target: usize,
    budget: &mut Budget,
    on: &mut dyn FnMut(Graph, Vec<(usize, usize)>) -> ControlFlow<()>,
) -> Result<ControlFlow<()>> {
    complete_regular(&mut adj, k, target, budget, &mut |done, added| {
        let graph = Graph::from_adjacency(done.to_vec())?;
        let added = added.iter().map(|&(a, b)| (back[a], back[b])).collect();
        Ok(on(graph, added))
    })
}

/// Streams completions; with `first_batch` the search stops after the
/// first deletion choice that admits any completion.
#[allow(clippy::too_many_arguments)]
fn run_edges(
    g: &Graph,
    num_edges: usize,
    num_vertices: usize,
    target: usize,
    cfg: &SearchConfig,
    first_batch: bool,
    visit: &mut dyn FnMut(Built) -> ControlFlow<()>,
) -> Result<()> {
    let k = regular_degree(g)?;
    let n = g.order();
    if num_edges > g.size() {
        return Err(Error::DegreeImbalance(format!(
            "cannot delete {num_edges} of {} edges",
            g.size()
        )));
    }
    if (2 * num_edges + k * num_vertices) % 2 == 1 {
        return Err(Error::DegreeImbalance(format!(
            "total deficiency 2*{num_edges} + {k}*{num_vertices} is odd"
        )));
    }
    if num_vertices > 0 && 2 * num_edges + num_vertices - 1 < k {
        return Err(Error::DegreeImbalance(format!(
            "a new vertex needs {k} partners but at most {} are deficient",
            2 * num_edges + num_vertices - 1
        )));
    }
    if num_edges == 0 && num_vertices == 0 {
        return Err(Error::DegreeImbalance("nothing to delete or add".into()));
    }
    let parent = Parent::of(g);
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| e.endpoints()).collect();
    cfg.order(&mut edges);
    let back: Vec<usize> = (0..n + num_vertices).collect();
    let mut budget = cfg.counter();
    for combo in (0..edges.len()).combinations(num_edges) {
        budget.tick()?;
        let deleted: Vec<(usize, usize)> = combo.iter().map(|&i| edges[i]).collect();
        let mut eg = EditGraph::from_graph(g);
        for &(a, b) in &deleted {
            eg.remove_edge(a, b)?;
        }
        for _ in 0..num_vertices {
            eg.add_vertex();
        }
        let mut found = false;
        let flow = complete(
            eg.adj,
            &back,
            k,
            target,
            &mut budget,
            &mut |graph, added| {
                found = true;
                let params = Params::new()
                    .value("deleted", parent.edge_list(&deleted))
                    .int("new_vertices", num_vertices as i64)
                    .value("added", parent.edge_list(&added));
                visit(built(
                    "delete_edges_add_vertices",
                    &[&parent],
                    params,
                    graph,
                ))
            },
        )?;
        if flow.is_break() || (first_batch && found) {
            return Ok(());
        }
    }
    Ok(())
}

/// Deletes `num_edges` edges, appends `num_vertices` isolated vertices and
/// restores k-regularity with girth at least `target`. Edge combinations
/// are taken in lexicographic order; all completions of the first
/// combination that admits one are returned, one per isomorphism class.
pub fn delete_edges_add_vertices(
    g: &Graph,
    num_edges: usize,
    num_vertices: usize,
    target: usize,
    cfg: &SearchConfig,
) -> Result<Vec<Built>> {
    let mut out = Vec::new();
    run_edges(g, num_edges, num_vertices, target, cfg, true, &mut |b| {
        out.push(b);
        ControlFlow::Continue(())
    })?;
    if out.is_empty() {
        return Err(Error::NoCompletion);
    }
    Ok(dedup(out))
}

/// Streams completions over every edge combination until `visit` breaks.
pub fn delete_edges_add_vertices_each(
    g: &Graph,
    num_edges: usize,
    num_vertices: usize,
    target: usize,
    cfg: &SearchConfig,
    visit: &mut dyn FnMut(Built) -> ControlFlow<()>,
) -> Result<()> {
    run_edges(g, num_edges, num_vertices, target, cfg, false, visit)
}

fn run_vertices(
    g: &Graph,
    num_vertices: usize,
    target: usize,
    cfg: &SearchConfig,
    first_batch: bool,
    visit: &mut dyn FnMut(Built) -> ControlFlow<()>,
) -> Result<()> {
    if num_vertices > MAX_DELETED_VERTICES {
        return Err(Error::TooManyVertices(num_vertices));
    }
    let k = regular_degree(g)?;
    if num_vertices == 0 || num_vertices >= g.order() {
        return Err(Error::ParameterOutOfRange(format!(
            "cannot delete {num_vertices} of {} vertices",
            g.order()
        )));
    }
    let parent = Parent::of(g);
    let mut order: Vec<usize> = (0..g.order()).collect();
    cfg.order(&mut order);
    let mut budget = cfg.counter();
    for combo in order.iter().copied().combinations(num_vertices) {
        budget.tick()?;
        let flow = excise(g, &combo, k, target, &mut budget, &mut |graph, added| {
            let params = Params::new()
                .value("deleted", parent.labels(&combo))
                .value("added", parent.edge_list(&added));
            visit(built("delete_vertices", &[&parent], params, graph))
        })?;
        match flow {
            Excised::Stop => return Ok(()),
            Excised::Found if first_batch => return Ok(()),
            _ => {}
        }
    }
    Ok(())
}

enum Excised {
    None,
    Found,
    Stop,
}

/// Deletes `dead` and runs the completion search; added edges are reported
/// in the labels of `g`.
fn excise(
    g: &Graph,
    dead: &[usize],
    k: usize,
    target: usize,
    budget: &mut Budget,
    on: &mut dyn FnMut(Graph, Vec<(usize, usize)>) -> ControlFlow<()>,
) -> Result<Excised> {
    let mut eg = EditGraph::from_graph(g);
    let map = eg.delete_vertices(dead);
    let mut back = vec![0; eg.order()];
    for (old, new) in map.iter().enumerate() {
        if let Some(new) = new {
            back[*new] = old;
        }
    }
    let mut found = false;
    let flow = complete(eg.adj, &back, k, target, budget, &mut |graph, added| {
        found = true;
        on(graph, added)
    })?;
    Ok(match (flow.is_break(), found) {
        (true, _) => Excised::Stop,
        (false, true) => Excised::Found,
        (false, false) => Excised::None,
    })
}

/// Deletes `num_vertices` (1 to 4) vertices and restores k-regularity with
/// girth at least `target`. Vertex subsets are taken in lexicographic
/// order; all completions of the first subset that admits one are
/// returned, one per isomorphism class.
pub fn delete_vertices(
    g: &Graph,
    num_vertices: usize,
    target: usize,
    cfg: &SearchConfig,
) -> Result<Vec<Built>> {
    let mut out = Vec::new();
    run_vertices(g, num_vertices, target, cfg, true, &mut |b| {
        out.push(b);
        ControlFlow::Continue(())
    })?;
    if out.is_empty() {
        return Err(Error::NoCompletion);
    }
    Ok(dedup(out))
}

/// Streams completions over every vertex subset until `visit` breaks.
pub fn delete_vertices_each(
    g: &Graph,
    num_vertices: usize,
    target: usize,
    cfg: &SearchConfig,
    visit: &mut dyn FnMut(Built) -> ControlFlow<()>,
) -> Result<()> {
    run_vertices(g, num_vertices, target, cfg, false, visit)
}

/// Size of the excised tree for a cubic graph of girth `g`: with
/// `r = g / 4`, `2^(r+1) - 2` when `g` is 0 or 1 mod 4, else `3 * 2^r - 2`.
pub fn biggs_epsilon(g: usize) -> Result<usize> {
    let r = u32::try_from(g / 4).map_err(|_| Error::Overflow(format!("biggs_epsilon({g})")))?;
    let pow = 1usize
        .checked_shl(r + 1)
        .filter(|_| r < usize::BITS - 2)
        .ok_or_else(|| Error::Overflow(format!("biggs_epsilon({g})")))?;
    Ok(if g % 4 <= 1 {
        pow - 2
    } else {
        3 * (pow / 2) - 2
    })
}

/// Vertex sets of size `size` containing `root` that induce a tree, each
/// sorted, in lexicographic order.
fn induced_subtrees(g: &Graph, root: usize, size: usize) -> Vec<Vec<usize>> {
    fn grow(
        g: &Graph,
        size: usize,
        set: &mut Vec<usize>,
        frontier: &[usize],
        banned: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if set.len() == size {
            let mut s = set.clone();
            s.sort_unstable();
            out.push(s);
            return;
        }
        let mut newly_banned = Vec::new();
        for (i, &w) in frontier.iter().enumerate() {
            let links = g.neighbors(w).iter().filter(|x| set.contains(x)).count();
            if links == 1 {
                set.push(w);
                let mut next: Vec<usize> = frontier[i + 1..].to_vec();
                for &x in g.neighbors(w) {
                    if !banned[x] && !set.contains(&x) && !next.contains(&x) {
                        next.push(x);
                    }
                }
                grow(g, size, set, &next, banned, out);
                set.pop();
            }
            banned[w] = true;
            newly_banned.push(w);
        }
        for w in newly_banned {
            banned[w] = false;
        }
    }
    let mut banned = vec![false; g.order()];
    banned[root] = true;
    let mut out = Vec::new();
    if size == 0 {
        return out;
    }
    let frontier = g.neighbors(root).to_vec();
    grow(g, size, &mut vec![root], &frontier, &mut banned, &mut out);
    out.sort();
    out
}

/// Excises an induced subtree of size [`biggs_epsilon`] from a cubic graph
/// of girth g and reconnects the deficient vertices, returning the first
/// cubic graph of girth exactly g - 1 found. Roots are tried in ascending
/// order and subtrees lexicographically.
pub fn remove_biggs_tree(g: &Graph, cfg: &SearchConfig) -> Result<Built> {
    if regular_degree(g).ok() != Some(3) {
        return Err(Error::NotCubic);
    }
    let gi = match girth(g).cycle_len() {
        Some(c) if c >= 4 => c,
        other => {
            return Err(Error::ParameterOutOfRange(format!(
                "input girth must be at least 4, got {other:?}"
            )))
        }
    };
    let eps = biggs_epsilon(gi)?;
    if eps >= g.order() {
        return Err(Error::ParameterOutOfRange(format!(
            "tree of {eps} vertices does not fit in order {}",
            g.order()
        )));
    }
    let parent = Parent::of(g);
    let mut roots: Vec<usize> = (0..g.order()).collect();
    cfg.order(&mut roots);
    let mut budget = cfg.counter();
    let mut tried = HashSet::new();
    let mut result = None;
    for root in roots {
        for tree in induced_subtrees(g, root, eps) {
            budget.tick()?;
            if !tried.insert(tree.clone()) {
                continue;
            }
            excise(g, &tree, 3, gi - 1, &mut budget, &mut |graph, added| {
                if girth_adj(graph.adjacency()).is_exactly(gi - 1) {
                    let params = Params::new()
                        .value("tree", parent.labels(&tree))
                        .value("added", parent.edge_list(&added));
                    result = Some(built("remove_biggs_tree", &[&parent], params, graph));
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            })?;
            if let Some(b) = result.take() {
                return Ok(b);
            }
        }
    }
    Err(Error::NoCompletion)
}

pub(crate) fn apply_edges(
    g: &Graph,
    deleted: &[(usize, usize)],
    new_vertices: usize,
    added: &[(usize, usize)],
) -> Result<Graph> {
    let mut eg = EditGraph::from_graph(g);
    for &(a, b) in deleted {
        if a >= g.order() || b >= g.order() {
            return Err(Error::NotAnEdge(a.min(b), a.max(b)));
        }
        eg.remove_edge(a, b)?;
    }
    for _ in 0..new_vertices {
        eg.add_vertex();
    }
    for &(a, b) in added {
        eg.add_edge(a, b)?;
    }
    Ok(eg.into_graph())
}

/// Deletes `dead`, then adds `added`, whose endpoints use the labels of
/// `g`.
pub(crate) fn apply_vertices(g: &Graph, dead: &[usize], added: &[(usize, usize)]) -> Result<Graph> {
    for &d in dead {
        g.check_vertex(d)?;
    }
    let mut eg = EditGraph::from_graph(g);
    let map = eg.delete_vertices(dead);
    let pos = |v: usize| {
        map.get(v)
            .copied()
            .flatten()
            .ok_or_else(|| Error::Recipe(format!("added edge touches deleted vertex {v}")))
    };
    for &(a, b) in added {
        eg.add_edge(pos(a)?, pos(b)?)?;
    }
    Ok(eg.into_graph())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_isomorphic, Girth};
    use crate::named;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn epsilon_table() {
        assert_eq!(biggs_epsilon(6), Ok(4));
        assert_eq!(biggs_epsilon(10), Ok(10));
        assert_eq!(biggs_epsilon(8), Ok(6));
        assert_eq!(biggs_epsilon(5), Ok(2));
        assert_eq!(biggs_epsilon(7), Ok(4));
    }

    #[test]
    fn subtrees_of_small_graphs() {
        // In K_{1,3} plus nothing else: trees of size 3 through the centre.
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            induced_subtrees(&star, 0, 3),
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3]]
        );
        // Triangles are never trees.
        assert!(induced_subtrees(&named::complete(4), 0, 3).is_empty());
        // Paths of 3 vertices through vertex 0 of C6: 3 of them.
        assert_eq!(induced_subtrees(&named::cycle(6), 0, 3).len(), 3);
    }

    #[test]
    fn heawood_to_petersen() {
        let b = remove_biggs_tree(&named::heawood(), &cfg()).unwrap();
        assert_eq!(b.graph.order(), 10);
        assert_eq!(girth(&b.graph), Girth::Cycle(5));
        assert!(is_isomorphic(&b.graph, &named::petersen()));
        b.recipe.replay().unwrap();
    }

    #[test]
    fn algorithm_one_examples() {
        let out = delete_edges_add_vertices(&named::complete(4), 3, 2, 3, &cfg()).unwrap();
        assert!(out
            .iter()
            .all(|b| b.graph.order() == 6 && b.graph.is_k_regular(3)));
        let out = delete_edges_add_vertices(&named::heawood(), 3, 2, 6, &cfg()).unwrap();
        for b in &out {
            assert_eq!(b.graph.order(), 16);
            assert!(b.graph.is_k_regular(3));
            assert!(girth(&b.graph).is_at_least(6));
            b.recipe.replay().unwrap();
        }
    }

    #[test]
    fn algorithm_one_balance() {
        assert!(matches!(
            delete_edges_add_vertices(&named::petersen(), 1, 1, 5, &cfg()),
            Err(Error::DegreeImbalance(_))
        ));
        assert!(matches!(
            delete_edges_add_vertices(&named::robertson(), 1, 1, 5, &cfg()),
            Err(Error::DegreeImbalance(_))
        ));
    }

    #[test]
    fn algorithm_two_examples() {
        let c11 = super::super::circulant(
            &super::super::CirculantSpec::new(11, vec![1, 3, 8, 10]).unwrap(),
        )
        .graph;
        let out = delete_vertices(&c11, 1, 3, &cfg()).unwrap();
        assert!(out
            .iter()
            .all(|b| b.graph.order() == 10 && b.graph.is_k_regular(4)));
        let cage = named::projective_plane_incidence(4);
        let out = delete_vertices(&cage, 2, 5, &cfg()).unwrap();
        for b in &out {
            assert_eq!(b.graph.order(), 40);
            assert!(b.graph.is_k_regular(5));
            assert!(girth(&b.graph).is_at_least(5));
            b.recipe.replay().unwrap();
        }
    }

    #[test]
    fn algorithm_two_guards() {
        assert_eq!(
            delete_vertices(&named::petersen(), 5, 5, &cfg()).unwrap_err(),
            Error::TooManyVertices(5)
        );
        // One vertex of a cubic graph leaves an odd deficit.
        assert_eq!(
            delete_vertices(&named::petersen(), 1, 5, &cfg()).unwrap_err(),
            Error::NoCompletion
        );
    }
}
