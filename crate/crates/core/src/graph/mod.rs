//! Simple undirected graphs on vertices `0..n`.
//!
//! [`Graph`] is immutable once built. Every constructor validates that the
//! edge set is simple, so no operation downstream ever sees a loop or a
//! parallel edge.

mod canon;
mod graph6;
pub(crate) mod metric;

pub use canon::{
    canonical_certificate, canonical_form, canonical_labeling, is_isomorphic, Certificate,
};
pub use graph6::{decode_graph6, encode_graph6};
pub use metric::{distance, edge_distance, girth, Girth};

use std::fmt;

use crate::error::{Error, Result};

/// Unordered vertex pair stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.order(), self.size())
    }
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, parallel edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::IndexOutOfRange {
                    vertex: a.max(b),
                    order: n,
                });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        Graph::from_adjacency(adj)
    }

    /// Builds a graph from neighbour lists. Lists are sorted; the input must
    /// already be symmetric and simple.
    pub fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Result<Graph> {
        let n = adj.len();
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            for w in list.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::MultiEdge(v.min(w[0]), v.max(w[0])));
                }
            }
            if let Some(&x) = list.last() {
                if x >= n {
                    return Err(Error::IndexOutOfRange {
                        vertex: x,
                        order: n,
                    });
                }
            }
            if list.binary_search(&v).is_ok() {
                return Err(Error::SelfLoop(v));
            }
        }
        for (v, list) in adj.iter().enumerate() {
            for &w in list {
                if adj[w].binary_search(&v).is_err() {
                    return Err(Error::ParameterOutOfRange(format!(
                        "adjacency not symmetric at {v}-{w}"
                    )));
                }
            }
        }
        Ok(Graph { adj })
    }

    pub(crate) fn from_adjacency_unchecked(mut adj: Vec<Vec<usize>>) -> Graph {
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order() && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Returns the edge `a-b` if present.
    pub fn edge(&self, a: usize, b: usize) -> Result<Edge> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        let e = Edge::new(a, b)?;
        if self.has_edge(a, b) {
            Ok(e)
        } else {
            Err(Error::NotAnEdge(e.u, e.v))
        }
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list.iter().filter(|&&v| v > u) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == k).then_some(k)
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|l| l.len() == k)
    }

    /// True when the graph has exactly one component. Order 0 is an error.
    pub fn is_connected(&self) -> Result<bool> {
        if self.order() == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(self.components().len() == 1)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Proper 2-colouring if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.order();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = vec![s];
            let mut i = 0;
            while i < queue.len() {
                let x = queue[i];
                i += 1;
                for &y in &self.adj[x] {
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        queue.push(y);
                    } else if side[y] == side[x] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::ParameterOutOfRange(format!(
                "permutation length {} for order {n}",
                perm.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::ParameterOutOfRange("not a permutation".into()));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (v, list) in self.adj.iter().enumerate() {
            adj[perm[v]] = list.iter().map(|&w| perm[w]).collect();
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Subgraph induced by `keep`, renumbered in the order given.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&w| w + n).collect::<Vec<_>>()),
        );
        Graph { adj }
    }
}

/// Mutable adjacency used while a construction is being assembled. Converted
/// back into a [`Graph`] once the edit is complete.
#[derive(Debug, Clone)]
pub(crate) struct EditGraph {
    pub(crate) adj: Vec<Vec<usize>>,
}

impl EditGraph {
    pub(crate) fn from_graph(g: &Graph) -> EditGraph {
        EditGraph { adj: g.adj.clone() }
    }

    pub(crate) fn order(&self) -> usize {
        self.adj.len()
    }

    pub(crate) fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    pub(crate) fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Adds `a-b`, refusing loops and parallel edges.
    pub(crate) fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let n = self.order();
        if a >= n || b >= n {
            return Err(Error::IndexOutOfRange {
                vertex: a.max(b),
                order: n,
            });
        }
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        if self.has_edge(a, b) {
            return Err(Error::MultiEdge(a.min(b), a.max(b)));
        }
        self.adj[a].push(b);
        self.adj[b].push(a);
        Ok(())
    }

    pub(crate) fn remove_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let pa = self.adj[a].iter().position(|&x| x == b);
        let pb = self.adj[b].iter().position(|&x| x == a);
        match (pa, pb) {
            (Some(i), Some(j)) => {
                self.adj[a].swap_remove(i);
                self.adj[b].swap_remove(j);
                Ok(())
            }
            _ => Err(Error::NotAnEdge(a.min(b), a.max(b))),
        }
    }

    /// Deletes the given vertices and compacts the labels, preserving the
    /// relative order of survivors. Returns the old-to-new index map.
    pub(crate) fn delete_vertices(&mut self, dead: &[usize]) -> Vec<Option<usize>> {
        let n = self.order();
        let mut gone = vec![false; n];
        for &d in dead {
            gone[d] = true;
        }
        let mut map = vec![None; n];
        let mut next = 0;
        for v in 0..n {
            if !gone[v] {
                map[v] = Some(next);
                next += 1;
            }
        }
        let adj = (0..n)
            .filter(|&v| !gone[v])
            .map(|v| self.adj[v].iter().filter_map(|&w| map[w]).collect())
            .collect();
        self.adj = adj;
        map
    }

    pub(crate) fn into_graph(self) -> Graph {
        Graph::from_adjacency_unchecked(self.adj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::MultiEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn regularity() {
        let k4 = named::complete(4);
        assert!(k4.is_k_regular(3));
        assert!(!k4.is_k_regular(2));
        assert!(named::petersen().is_k_regular(3));
    }

    #[test]
    fn connectivity() {
        assert_eq!(named::cycle(6).is_connected(), Ok(true));
        let two = named::cycle(3).disjoint_union(&named::cycle(3));
        assert_eq!(two.is_connected(), Ok(false));
        assert_eq!(Graph::empty(0).is_connected(), Err(Error::ZeroOrder));
    }

    #[test]
    fn edge_lookup() {
        let c = named::cycle(5);
        assert_eq!(c.edge(1, 0).unwrap().endpoints(), (0, 1));
        assert_eq!(c.edge(0, 2), Err(Error::NotAnEdge(0, 2)));
        assert!(c.edge(0, 9).is_err());
    }

    #[test]
    fn bipartite_detection() {
        assert!(named::cycle(6).is_bipartite());
        assert!(!named::petersen().is_bipartite());
        assert!(named::heawood().is_bipartite());
    }
}
