//! Canonical labelling by individualization and refinement.
//!
//! Colours are cell offsets in an ordered partition: a vertex of colour `c`
//! sits in the cell occupying positions `c..c + size`. Refinement splits
//! cells in place, so singleton cells never move and an individualized
//! vertex keeps the position it was given. The canonical form is the
//! lexicographically smallest relabelled edge list over all leaves of the
//! search tree; subtrees that are images of explored ones under a known
//! automorphism are skipped.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::graph6::{decode_graph6, encode_graph6};
use super::metric::{distance_matrix, girth};
use super::Graph;
use crate::error::Error;

/// Isomorphism-invariant byte string: the graph6 encoding of the canonical
/// form. Equal certificates mean isomorphic graphs and vice versa.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate(Vec<u8>);

impl Certificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("certificate is graph6 text")
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        decode_graph6(self.as_str()).expect("certificate is valid graph6")
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Certificate({})", self.as_str())
    }
}

impl FromStr for Certificate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let g = decode_graph6(s)?;
        let cert = canonical_certificate(&g);
        if cert.as_str() != s {
            return Err(Error::MalformedGraph6(format!(
                "{s} is not in canonical form"
            )));
        }
        Ok(cert)
    }
}

/// Permutation mapping each vertex to its canonical label.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search {
        adj: g.adjacency(),
        n,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let mut colors = vec![0; n];
    let mut path = Vec::new();
    search.descend(&mut colors, &mut path);
    search.best.expect("search reaches at least one leaf").perm
}

pub fn canonical_certificate(g: &Graph) -> Certificate {
    canonical_form(g).0
}

/// Certificate together with the labelling that produces it.
pub fn canonical_form(g: &Graph) -> (Certificate, Vec<usize>) {
    let perm = canonical_labeling(g);
    let canon = g
        .relabel(&perm)
        .expect("canonical labeling is a permutation");
    let cert = Certificate(
        encode_graph6(&canon)
            .expect("order within graph6 range")
            .into_bytes(),
    );
    (cert, perm)
}

/// Exact isomorphism test. Cheap invariants are compared first; the
/// decision itself compares canonical forms.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    if a.degree_sequence() != b.degree_sequence() || girth(a) != girth(b) {
        return false;
    }
    if distance_profile(a) != distance_profile(b) {
        return false;
    }
    canonical_certificate(a) == canonical_certificate(b)
}

/// Sorted multiset of per-vertex sorted distance rows.
fn distance_profile(g: &Graph) -> Vec<Vec<usize>> {
    if g.order() > 400 {
        return Vec::new();
    }
    let mut rows = distance_matrix(g.adjacency());
    for r in rows.iter_mut() {
        r.sort_unstable();
    }
    rows.sort_unstable();
    rows
}

struct Leaf {
    form: Vec<u64>,
    perm: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

/// Outcome of exploring a subtree: either finished normally, or an
/// automorphism showed that everything below depth `.0` is redundant.
enum Walk {
    Done,
    Jump(usize),
}

impl Search<'_> {
    fn descend(&mut self, colors: &mut [usize], path: &mut Vec<usize>) -> Walk {
        self.refine(colors);
        let Some(cell) = self.target_cell(colors) else {
            return self.leaf(colors, path);
        };
        let depth = path.len();
        let mut explored: Vec<usize> = Vec::new();
        let mut orbits: Option<(usize, Vec<usize>)> = None;
        for &w in &cell {
            if !explored.is_empty() {
                if orbits
                    .as_ref()
                    .is_none_or(|(seen, _)| *seen != self.autos.len())
                {
                    orbits = Some((self.autos.len(), self.stabilizer_orbits(path)));
                }
                let (_, parent) = orbits.as_ref().expect("computed above");
                let root = find(parent, w);
                if explored.iter().any(|&e| find(parent, e) == root) {
                    continue;
                }
            }
            explored.push(w);
            let mut child = colors.to_vec();
            individualize(&mut child, w);
            path.push(w);
            let walk = self.descend(&mut child, path);
            path.pop();
            if let Walk::Jump(level) = walk {
                if level < depth {
                    return walk;
                }
            }
        }
        Walk::Done
    }

    fn leaf(&mut self, colors: &[usize], path: &[usize]) -> Walk {
        let perm = colors.to_vec();
        let mut form: Vec<u64> = Vec::with_capacity(self.adj.iter().map(Vec::len).sum());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list.iter().filter(|&&v| v > u) {
                let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                form.push(((a as u64) << 32) | b as u64);
            }
        }
        form.sort_unstable();

        if let Some(first) = self.first.as_ref().filter(|f| f.form == form) {
            let level = common_prefix(&first.path, path);
            let fperm = first.perm.clone();
            self.record_automorphism(&fperm, &perm);
            return Walk::Jump(level);
        }
        let best = self.best.as_ref();
        let ord = best.map_or(Ordering::Less, |b| form.cmp(&b.form));
        match ord {
            Ordering::Equal => {
                let b = self.best.as_ref().expect("compared against best");
                let level = common_prefix(&b.path, path);
                let bperm = b.perm.clone();
                self.record_automorphism(&bperm, &perm);
                Walk::Jump(level)
            }
            Ordering::Less => {
                let leaf = Leaf {
                    form,
                    perm,
                    path: path.to_vec(),
                };
                if self.first.is_none() {
                    self.first = Some(Leaf {
                        form: leaf.form.clone(),
                        perm: leaf.perm.clone(),
                        path: leaf.path.clone(),
                    });
                }
                self.best = Some(leaf);
                Walk::Done
            }
            Ordering::Greater => Walk::Done,
        }
    }

    /// Stores `x -> y` where `earlier[x] == later[y]`.
    fn record_automorphism(&mut self, earlier: &[usize], later: &[usize]) {
        let mut inv_later = vec![0; self.n];
        for (v, &label) in later.iter().enumerate() {
            inv_later[label] = v;
        }
        let gamma: Vec<usize> = earlier.iter().map(|&label| inv_later[label]).collect();
        if gamma.iter().enumerate().any(|(i, &g)| i != g) {
            self.autos.push(gamma);
        }
    }

    /// Union-find parents for the orbits of the known automorphisms that fix
    /// every vertex on `path`.
    fn stabilizer_orbits(&self, path: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        for a in &self.autos {
            if path.iter().all(|&x| a[x] == x) {
                for (i, &j) in a.iter().enumerate() {
                    let (ri, rj) = (find(&parent, i), find(&parent, j));
                    if ri != rj {
                        parent[ri.max(rj)] = ri.min(rj);
                    }
                }
            }
        }
        parent
    }

    /// Iterated neighbour-colour refinement until the partition is stable.
    fn refine(&self, colors: &mut [usize]) {
        let n = self.n;
        let mut cells = count_cells(colors);
        let mut order: Vec<usize> = (0..n).collect();
        let mut sig: Vec<Vec<usize>> = vec![Vec::new(); n];
        loop {
            if cells == n {
                return;
            }
            for v in 0..n {
                let s = &mut sig[v];
                s.clear();
                s.push(colors[v]);
                s.extend(self.adj[v].iter().map(|&w| colors[w]));
                s[1..].sort_unstable();
            }
            order.sort_unstable_by(|&a, &b| sig[a].cmp(&sig[b]));
            let mut next = vec![0; n];
            let mut start = 0;
            for i in 0..n {
                if i > 0 && sig[order[i]] != sig[order[i - 1]] {
                    start = i;
                }
                next[order[i]] = start;
            }
            let new_cells = count_cells(&next);
            colors.copy_from_slice(&next);
            if new_cells == cells {
                return;
            }
            cells = new_cells;
        }
    }

    /// Smallest non-singleton cell, ties broken by position. Members are
    /// returned in ascending vertex order.
    fn target_cell(&self, colors: &[usize]) -> Option<Vec<usize>> {
        let mut size = vec![0usize; self.n];
        for &c in colors {
            size[c] += 1;
        }
        let target = (0..self.n)
            .filter(|&c| size[c] > 1)
            .min_by_key(|&c| (size[c], c))?;
        Some((0..self.n).filter(|&v| colors[v] == target).collect())
    }
}

fn individualize(colors: &mut [usize], v: usize) {
    let c = colors[v];
    for (w, col) in colors.iter_mut().enumerate() {
        if *col == c && w != v {
            *col = c + 1;
        }
    }
}

fn count_cells(colors: &[usize]) -> usize {
    let mut seen = vec![false; colors.len()];
    let mut count = 0;
    for &c in colors {
        if !std::mem::replace(&mut seen[c], true) {
            count += 1;
        }
    }
    count
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &[usize], mut x: usize) -> usize {
    while parent[x] != x {
        x = parent[x];
    }
    x
}
