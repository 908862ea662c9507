use std::fmt;

use super::{Edge, Graph};
use crate::error::{Error, Result};

/// Length of a shortest cycle, or `Acyclic` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Girth {
    Cycle(usize),
    Acyclic,
}

impl Girth {
    pub fn cycle_len(self) -> Option<usize> {
        match self {
            Girth::Cycle(g) => Some(g),
            Girth::Acyclic => None,
        }
    }

    /// `true` only for a cycle of length at least `g`; a forest never passes.
    pub fn is_at_least(self, g: usize) -> bool {
        matches!(self, Girth::Cycle(c) if c >= g)
    }

    pub fn is_exactly(self, g: usize) -> bool {
        self == Girth::Cycle(g)
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Cycle(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

/// Shortest cycle length via a breadth-first search from every vertex.
pub fn girth(g: &Graph) -> Girth {
    girth_adj(g.adjacency())
}

pub(crate) fn girth_adj(adj: &[Vec<usize>]) -> Girth {
    let n = adj.len();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for s in 0..n {
        if best == 3 {
            break;
        }
        for &v in &queue {
            dist[v] = usize::MAX;
        }
        queue.clear();
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.push(s);
        let mut i = 0;
        'bfs: while i < queue.len() {
            let x = queue[i];
            i += 1;
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push(y);
                } else if y != parent[x] {
                    best = best.min(dist[x] + dist[y] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Cycle(best)
    }
}

/// Breadth-first distances from `source`; `None` marks unreachable vertices.
pub(crate) fn bfs_distances(adj: &[Vec<usize>], source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[source] = Some(0);
    let mut queue = vec![source];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        let d = dist[x].unwrap_or_default();
        for &y in &adj[x] {
            if dist[y].is_none() {
                dist[y] = Some(d + 1);
                queue.push(y);
            }
        }
    }
    dist
}

/// True when `b` lies within `limit` hops of `a`.
pub(crate) fn within_distance(adj: &[Vec<usize>], a: usize, b: usize, limit: usize) -> bool {
    if a == b {
        return true;
    }
    let mut seen = vec![false; adj.len()];
    seen[a] = true;
    let mut frontier = vec![a];
    let mut next = Vec::new();
    for _ in 0..limit {
        for &x in &frontier {
            for &y in &adj[x] {
                if y == b {
                    return true;
                }
                if !seen[y] {
                    seen[y] = true;
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        std::mem::swap(&mut frontier, &mut next);
        next.clear();
    }
    false
}

/// Hop count between two vertices; `Ok(None)` when they lie in different
/// components.
pub fn distance(g: &Graph, u: usize, v: usize) -> Result<Option<usize>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(bfs_distances(g.adjacency(), u)[v])
}

/// Minimum distance over the four endpoint pairs, plus one. Unreachable
/// pairs count as infinitely far, so edges in different components get
/// `None`.
pub fn edge_distance(g: &Graph, e1: Edge, e2: Edge) -> Result<Option<usize>> {
    for e in [e1, e2] {
        if !g.has_edge(e.u(), e.v()) {
            return Err(Error::NotAnEdge(e.u(), e.v()));
        }
    }
    if e1 == e2 {
        return Err(Error::SameEdge);
    }
    let du = bfs_distances(g.adjacency(), e1.u());
    let dv = bfs_distances(g.adjacency(), e1.v());
    Ok(edge_distance_from(&du, &dv, e2))
}

/// Edge distance given precomputed distance rows for the endpoints of the
/// first edge.
pub(crate) fn edge_distance_from(
    du: &[Option<usize>],
    dv: &[Option<usize>],
    e2: Edge,
) -> Option<usize> {
    [du[e2.u()], du[e2.v()], dv[e2.u()], dv[e2.v()]]
        .into_iter()
        .flatten()
        .min()
        .map(|d| d + 1)
}

/// All-pairs hop counts, `usize::MAX` for unreachable pairs.
pub(crate) fn distance_matrix(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    (0..adj.len())
        .map(|s| {
            bfs_distances(adj, s)
                .into_iter()
                .map(|d| d.unwrap_or(usize::MAX))
                .collect()
        })
        .collect()
}
