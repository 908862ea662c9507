use super::{built, regular_degree, Params, Parent};
use crate::error::{Error, Result};
use crate::graph::{EditGraph, Graph};
use crate::recipe::Built;

/// Largest order accepted for non-bipartite inputs.
const GENERAL_CAP: usize = 64;

/// Deletes a perfect matching. Bipartite inputs use augmenting paths;
/// other inputs up to order 64 use backtracking.
pub fn remove_perfect_matching(g: &Graph) -> Result<Built> {
    let n = g.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    regular_degree(g)?;
    let matching = match g.bipartition() {
        Some(side) => bipartite_matching(g, &side),
        None if n > GENERAL_CAP => {
            return Err(Error::CapExceeded(format!(
                "general matching search limited to order {GENERAL_CAP}, got {n}"
            )))
        }
        None => general_matching(g),
    }
    .ok_or(Error::NoPerfectMatching)?;
    let graph = apply(g, &matching)?;
    let parent = Parent::of(g);
    let params = Params::new().value("matching", parent.edge_list(&matching));
    Ok(built("remove_perfect_matching", &[&parent], params, graph))
}

pub(crate) fn apply(g: &Graph, matching: &[(usize, usize)]) -> Result<Graph> {
    let mut covered = vec![false; g.order()];
    for &(a, b) in matching {
        for x in [a, b] {
            if x >= g.order() || std::mem::replace(&mut covered[x], true) {
                return Err(Error::Recipe(format!(
                    "vertex {x} not matched exactly once"
                )));
            }
        }
    }
    if covered.iter().any(|c| !c) {
        return Err(Error::Recipe("matching is not perfect".into()));
    }
    let mut eg = EditGraph::from_graph(g);
    for &(a, b) in matching {
        eg.remove_edge(a, b)?;
    }
    Ok(eg.into_graph())
}

/// Kuhn's augmenting paths from each left vertex in ascending order.
fn bipartite_matching(g: &Graph, side: &[u8]) -> Option<Vec<(usize, usize)>> {
    let n = g.order();
    let mut mate = vec![usize::MAX; n];
    for u in (0..n).filter(|&u| side[u] == 0) {
        let mut seen = vec![false; n];
        if !augment(g, u, &mut mate, &mut seen) {
            return None;
        }
    }
    let mut out: Vec<(usize, usize)> = (0..n)
        .filter(|&u| side[u] == 0)
        .map(|u| (u.min(mate[u]), u.max(mate[u])))
        .collect();
    out.sort_unstable();
    (out.len() * 2 == n).then_some(out)
}

fn augment(g: &Graph, u: usize, mate: &mut [usize], seen: &mut [bool]) -> bool {
    for &w in g.neighbors(u) {
        if std::mem::replace(&mut seen[w], true) {
            continue;
        }
        if mate[w] == usize::MAX || augment(g, mate[w], mate, seen) {
            mate[w] = u;
            mate[u] = w;
            return true;
        }
    }
    false
}

/// Matches the lowest free vertex with each free neighbour in turn.
fn general_matching(g: &Graph) -> Option<Vec<(usize, usize)>> {
    fn step(g: &Graph, free: &mut [bool], out: &mut Vec<(usize, usize)>) -> bool {
        let Some(u) = free.iter().position(|&f| f) else {
            return true;
        };
        free[u] = false;
        for &w in g.neighbors(u) {
            if free[w] {
                free[w] = false;
                out.push((u, w));
                if step(g, free, out) {
                    return true;
                }
                out.pop();
                free[w] = true;
            }
        }
        free[u] = true;
        false
    }
    let mut free = vec![true; g.order()];
    let mut out = Vec::new();
    step(g, &mut free, &mut out).then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth, Girth};
    use crate::named;

    #[test]
    fn complete_bipartite() {
        let out = remove_perfect_matching(&named::complete_bipartite(3, 3)).unwrap();
        assert!(out.graph.is_k_regular(2));
        assert_eq!(girth(&out.graph), Girth::Cycle(6));
        let out = remove_perfect_matching(&named::complete_bipartite(4, 4)).unwrap();
        assert!(out.graph.is_k_regular(3));
        assert_eq!(girth(&out.graph), Girth::Cycle(4));
        let out = remove_perfect_matching(&named::complete_bipartite(5, 5)).unwrap();
        assert!(out.graph.is_k_regular(4));
        assert_eq!(
            (out.graph.order(), girth(&out.graph)),
            (10, Girth::Cycle(4))
        );
        out.recipe.replay().unwrap();
    }

    #[test]
    fn non_bipartite() {
        let out = remove_perfect_matching(&named::petersen()).unwrap();
        assert!(out.graph.is_k_regular(2));
        assert!(girth(&out.graph).is_at_least(5));
        out.recipe.replay().unwrap();
    }

    #[test]
    fn errors() {
        assert_eq!(
            remove_perfect_matching(&named::cycle(5)).unwrap_err(),
            Error::OddOrder(5)
        );
        // Two triangles joined by nothing: 2-regular, even order, no perfect
        // matching.
        let tt = named::cycle(3).disjoint_union(&named::cycle(3));
        assert_eq!(
            remove_perfect_matching(&tt).unwrap_err(),
            Error::NoPerfectMatching
        );
        assert!(matches!(
            remove_perfect_matching(&named::cycle(67).disjoint_union(&named::cycle(3))),
            Err(Error::CapExceeded(_))
        ));
    }
}
