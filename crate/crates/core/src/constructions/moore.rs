use super::{built, regular_degree, Params, Parent};
use crate::error::{Error, Result};
use crate::graph::metric::{bfs_distances, girth_adj};
use crate::graph::{girth, EditGraph, Graph};
use crate::recipe::Built;
use crate::search::SearchConfig;

/// Breadth-first tree of depth `r + 1` around `root`, children in ascending
/// vertex order.
struct MooreTree {
    /// Vertices at depth at most `r`, in breadth-first order.
    internal: Vec<usize>,
    children: Vec<Vec<usize>>,
    /// Vertices at depth `r + 1`.
    leaves: Vec<usize>,
}

impl MooreTree {
    fn grow(g: &Graph, root: usize, r: usize) -> Result<MooreTree> {
        let n = g.order();
        let mut depth = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut children = vec![Vec::new(); n];
        let mut internal = vec![root];
        let mut leaves = Vec::new();
        depth[root] = 0;
        let mut i = 0;
        while i < internal.len() {
            let x = internal[i];
            i += 1;
            for &y in g.neighbors(x) {
                if y == parent[x] {
                    continue;
                }
                if depth[y] != usize::MAX {
                    return Err(Error::TreeNotInduced { root, depth: r + 1 });
                }
                depth[y] = depth[x] + 1;
                parent[y] = x;
                children[x].push(y);
                if depth[y] <= r {
                    internal.push(y);
                } else {
                    leaves.push(y);
                }
            }
        }
        Ok(MooreTree {
            internal,
            children,
            leaves,
        })
    }

    /// Leaf images under the rooted-tree automorphism that permutes the
    /// children of each internal vertex by `perms[i]` (indexed like
    /// `internal`).
    fn leaf_map(&self, perms: &[Vec<usize>], slot: &[usize]) -> Vec<(usize, usize)> {
        let mut image = vec![(self.internal[0], self.internal[0])];
        let mut out = Vec::with_capacity(self.leaves.len());
        while let Some((x, y)) = image.pop() {
            let (cx, cy) = (&self.children[x], &self.children[y]);
            if cx.is_empty() {
                out.push((x, y));
                continue;
            }
            let p = &perms[slot[x]];
            for (i, &c) in cx.iter().enumerate() {
                image.push((c, cy[p[i]]));
            }
        }
        out.sort_unstable();
        out
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("pivot exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// [`moore_tree_double_with`] under the default configuration.
pub fn moore_tree_double(g: &Graph, r: usize, root: usize) -> Result<Built> {
    moore_tree_double_with(g, r, root, &SearchConfig::default())
}

/// Deletes the radius-`r` Moore tree at `root` from two copies of `g` and
/// joins each leaf of the first copy to its image in the second under a
/// rooted-tree automorphism. Automorphisms are tried with the identity
/// first, then in lexicographic order of the per-vertex child
/// permutations; the first join whose girth is at least `girth(g)` is
/// returned.
pub fn moore_tree_double_with(
    g: &Graph,
    r: usize,
    root: usize,
    cfg: &SearchConfig,
) -> Result<Built> {
    g.check_vertex(root)?;
    let k = regular_degree(g)?;
    if k < 3 {
        return Err(Error::ParameterOutOfRange(format!(
            "Moore trees need degree at least 3, got {k}"
        )));
    }
    if !g.is_connected()? {
        return Err(Error::ParameterOutOfRange("input must be connected".into()));
    }
    let gi = match girth(g).cycle_len() {
        Some(c) if c >= 4 => c,
        other => {
            return Err(Error::ParameterOutOfRange(format!(
                "input girth must be at least 4, got {other:?}"
            )))
        }
    };
    if r > gi / 4 {
        return Err(Error::RadiusTooLarge {
            radius: r,
            girth: gi,
        });
    }
    let tree = MooreTree::grow(g, root, r)?;
    let mut slot = vec![usize::MAX; g.order()];
    for (i, &x) in tree.internal.iter().enumerate() {
        slot[x] = i;
    }
    let mut perms: Vec<Vec<usize>> = tree
        .internal
        .iter()
        .map(|&x| (0..tree.children[x].len()).collect())
        .collect();

    let mut half = EditGraph::from_graph(g);
    let map = half.delete_vertices(&tree.internal);
    let half = half.into_graph();
    let m = half.order();
    let mut adj = half.disjoint_union(&half).adjacency().to_vec();

    let mut budget = cfg.counter();
    loop {
        budget.tick()?;
        let matching = tree.leaf_map(&perms, &slot);
        for &(a, b) in &matching {
            let (x, y) = (
                map[a].expect("leaf survives"),
                m + map[b].expect("leaf survives"),
            );
            adj[x].push(y);
            adj[y].push(x);
        }
        let ok = girth_adj(&adj).is_at_least(gi);
        for &(a, _) in &matching {
            let x = map[a].expect("leaf survives");
            let y = adj[x].pop().expect("just pushed");
            adj[y].pop();
        }
        if ok {
            let graph = apply(g, root, r, &matching)?;
            let parent = Parent::of(g);
            let params = Params::new()
                .int("root", parent.label(root))
                .int("radius", r as i64)
                .value("matching", parent.edge_list(&matching));
            return Ok(built("moore_tree_double", &[&parent], params, graph));
        }
        // Odometer over the internal vertices, last one fastest.
        let mut advanced = false;
        for p in perms.iter_mut().rev() {
            if next_permutation(p) {
                advanced = true;
                break;
            }
            p.sort_unstable();
        }
        if !advanced {
            return Err(Error::GirthNotPreserved {
                required: gi,
                best: best_girth(g, &tree, &map, m),
            });
        }
    }
}

/// Girth of the identity join, reported when no automorphism works.
fn best_girth(g: &Graph, tree: &MooreTree, map: &[Option<usize>], m: usize) -> usize {
    let mut eg = EditGraph::from_graph(g);
    eg.delete_vertices(&tree.internal);
    let half = eg.into_graph();
    let mut adj = half.disjoint_union(&half).adjacency().to_vec();
    for &a in &tree.leaves {
        let (x, y) = (
            map[a].expect("leaf survives"),
            m + map[a].expect("leaf survives"),
        );
        adj[x].push(y);
        adj[y].push(x);
    }
    girth_adj(&adj).cycle_len().unwrap_or(0)
}

/// Two copies of `g` minus the ball of radius `radius` at `root`; leaf `a`
/// of the first copy is joined to leaf `b` of the second for each pair.
/// Survivors keep their relative order; the second copy follows the first.
pub(crate) fn apply(
    g: &Graph,
    root: usize,
    radius: usize,
    matching: &[(usize, usize)],
) -> Result<Graph> {
    g.check_vertex(root)?;
    let dist = bfs_distances(g.adjacency(), root);
    let ball: Vec<usize> = (0..g.order())
        .filter(|&v| dist[v].is_some_and(|d| d <= radius))
        .collect();
    let mut eg = EditGraph::from_graph(g);
    let map = eg.delete_vertices(&ball);
    let half = eg.into_graph();
    let m = half.order();
    let mut eg = EditGraph::from_graph(&half.disjoint_union(&half));
    for &(a, b) in matching {
        let pos = |v: usize| {
            map.get(v)
                .copied()
                .flatten()
                .ok_or_else(|| Error::Recipe(format!("vertex {v} lies inside the deleted ball")))
        };
        eg.add_edge(pos(a)?, m + pos(b)?)?;
    }
    Ok(eg.into_graph())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::moore_tree_size;
    use crate::graph::Girth;
    use crate::named;

    #[test]
    fn radius_zero_on_petersen() {
        let b = moore_tree_double(&named::petersen(), 0, 0).unwrap();
        assert_eq!(b.graph.order(), 18);
        assert!(b.graph.is_k_regular(3));
        assert!(girth(&b.graph).is_at_least(5));
        b.recipe.replay().unwrap();
    }

    #[test]
    fn heawood_radius_one() {
        let b = moore_tree_double(&named::heawood(), 1, 0).unwrap();
        let expected = 2 * (14 - moore_tree_size(3, 1).unwrap() as usize);
        assert_eq!(b.graph.order(), expected);
        assert!(b.graph.is_k_regular(3));
        assert!(girth(&b.graph).is_at_least(6));
        b.recipe.replay().unwrap();
    }

    #[test]
    fn petersen_radius_one_loses_girth() {
        // The six leaves of the radius-2 tree induce a 6-cycle, and every
        // automorphism of the tree leaves some 4-cycle through the join.
        let err = moore_tree_double(&named::petersen(), 1, 0).unwrap_err();
        assert_eq!(
            err,
            Error::GirthNotPreserved {
                required: 5,
                best: 4
            }
        );
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            moore_tree_double(&named::petersen(), 2, 0),
            Err(Error::RadiusTooLarge {
                radius: 2,
                girth: 5
            })
        ));
        assert!(matches!(
            moore_tree_double(&named::complete_bipartite(3, 3), 1, 0),
            Err(Error::TreeNotInduced { root: 0, depth: 2 })
        ));
        assert!(moore_tree_double(&named::complete(4), 0, 0).is_err());
        assert_eq!(girth(&named::heawood()), Girth::Cycle(6));
    }

    #[test]
    fn permutation_order() {
        let mut p = vec![0, 1, 2];
        let mut seen = vec![p.clone()];
        while next_permutation(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[1], vec![0, 2, 1]);
    }
}
