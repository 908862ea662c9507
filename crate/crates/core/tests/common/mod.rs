//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's girth, distance or canonical labelling code except where
//! noted.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cages::graph::canonical_certificate;
use cages::Graph;

/// Shortest cycle length by exhaustive simple-path search, trying lengths
/// in increasing order. Cycles are anchored at their smallest vertex.
pub fn brute_girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    (3..=n).find(|&len| (0..n).any(|s| cycle_from(g, s, s, len, 1, &mut vec![false; n])))
}

fn cycle_from(
    g: &Graph,
    start: usize,
    at: usize,
    len: usize,
    depth: usize,
    used: &mut Vec<bool>,
) -> bool {
    used[at] = true;
    let found = g.neighbors(at).iter().any(|&w| {
        if w == start {
            depth == len
        } else {
            w > start && !used[w] && depth < len && cycle_from(g, start, w, len, depth + 1, used)
        }
    });
    used[at] = false;
    found
}

/// Isomorphism by backtracking over vertex maps with degree and adjacency
/// checks.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da = a.degree_sequence();
    let mut db = b.degree_sequence();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    extend_map(a, b, 0, &mut map, &mut taken)
}

fn extend_map(a: &Graph, b: &Graph, v: usize, map: &mut [usize], taken: &mut [bool]) -> bool {
    if v == a.order() {
        return true;
    }
    for w in 0..b.order() {
        if taken[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        if (0..v).any(|u| a.has_edge(u, v) != b.has_edge(map[u], w)) {
            continue;
        }
        map[v] = w;
        taken[w] = true;
        if extend_map(a, b, v + 1, map, taken) {
            return true;
        }
        taken[w] = false;
    }
    map[v] = usize::MAX;
    false
}

fn connected(n: usize, adj: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Every labelled cubic graph on `n` vertices: the lowest vertex with a
/// degree deficit takes its whole remaining neighbourhood among higher
/// vertices in one step, so each edge set is produced exactly once.
pub fn labelled_cubic(n: usize, visit: &mut dyn FnMut(&[Vec<usize>])) {
    let mut adj = vec![Vec::new(); n];
    fill(n, 0, &mut adj, visit);
}

fn fill(n: usize, from: usize, adj: &mut Vec<Vec<usize>>, visit: &mut dyn FnMut(&[Vec<usize>])) {
    let Some(u) = (from..n).find(|&v| adj[v].len() < 3) else {
        visit(adj);
        return;
    };
    let need = 3 - adj[u].len();
    let options: Vec<usize> = (u + 1..n).filter(|&v| adj[v].len() < 3).collect();
    choose(&options, need, 0, &mut Vec::new(), &mut |pick| {
        for &v in pick {
            adj[u].push(v);
            adj[v].push(u);
        }
        fill(n, u + 1, adj, visit);
        for &v in pick {
            adj[u].pop();
            adj[v].pop();
        }
    });
}

fn choose(xs: &[usize], k: usize, from: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for i in from..xs.len() {
        cur.push(xs[i]);
        choose(xs, k, i + 1, cur, f);
        cur.pop();
    }
}

/// Isomorphism classes of connected cubic graphs on `n` vertices, counted
/// with the labelled enumeration and brute-force isomorphism only.
pub fn brute_connected_cubic_classes(n: usize) -> usize {
    let mut reps: Vec<Graph> = Vec::new();
    labelled_cubic(n, &mut |adj| {
        if !connected(n, adj) {
            return;
        }
        let g = Graph::from_adjacency(adj.to_vec()).unwrap();
        if !reps.iter().any(|r| brute_isomorphic(r, &g)) {
            reps.push(g);
        }
    });
    reps.len()
}

/// All graphs of order `n` up to isomorphism, built by adding a vertex
/// with every possible neighbourhood to the graphs of order `n - 1`.
/// Deduplication uses the library's certificate; the class counts are
/// checked against the known sequence by the callers.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1)];
    for m in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..(1 << m) {
                let mut edges: Vec<(usize, usize)> =
                    g.edges().iter().map(|e| e.endpoints()).collect();
                edges.extend((0..m).filter(|&v| mask >> v & 1 == 1).map(|v| (v, m)));
                let h = Graph::from_edges(m + 1, edges).unwrap();
                if seen.insert(canonical_certificate(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

/// Graphs on 1..=8 vertices up to isomorphism.
pub const GRAPH_COUNTS: [usize; 8] = [1, 2, 4, 11, 34, 156, 1044, 12346];
