//! Node budgets, search configuration, and the completion search shared by
//! the deletion-rewire constructions.

use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::metric::{girth_adj, within_distance};

/// Default number of candidate steps a single search may take.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub budget: u64,
    /// `None` keeps the deterministic lexicographic order.
    pub rng_seed: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: DEFAULT_BUDGET,
            rng_seed: None,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(budget: u64) -> SearchConfig {
        SearchConfig {
            budget,
            ..SearchConfig::default()
        }
    }

    pub fn counter(&self) -> Budget {
        Budget::new(self.budget)
    }

    /// Applies the seeded shuffle, if any, to a candidate list. Combinations
    /// are then taken lexicographically over the shuffled positions.
    pub fn order<T>(&self, items: &mut [T]) {
        if let Some(seed) = self.rng_seed {
            items.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
    }
}

/// Counts search steps and fails once the limit is passed.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Budget {
        Budget { limit, used: 0 }
    }

    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExhausted(self.limit))
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn remaining(&self) -> u64 {
        self.limit.saturating_sub(self.used)
    }
}

/// Adds edges to `adj` until every vertex has degree `k`, visiting each
/// completion whose girth is at least `target`. An edge `uv` is admissible
/// when both ends are deficient, it is new, and `u`, `v` are currently at
/// distance at least `target - 1`. The lowest deficient vertex is always
/// served first and takes partners in increasing order, so every edge set
/// is produced once. `visit` receives the completed adjacency and the list
/// of added edges.
pub(crate) fn complete_regular<F>(
    adj: &mut [Vec<usize>],
    k: usize,
    target: usize,
    budget: &mut Budget,
    visit: &mut F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&[Vec<usize>], &[(usize, usize)]) -> Result<ControlFlow<()>>,
{
    if adj.iter().any(|l| l.len() > k) {
        return Ok(ControlFlow::Continue(()));
    }
    let deficit: usize = adj.iter().map(|l| k - l.len()).sum();
    if deficit % 2 == 1 {
        return Ok(ControlFlow::Continue(()));
    }
    let mut added = Vec::with_capacity(deficit / 2);
    complete_step(adj, k, target, 0, budget, &mut added, visit)
}

fn complete_step<F>(
    adj: &mut [Vec<usize>],
    k: usize,
    target: usize,
    min_partner: usize,
    budget: &mut Budget,
    added: &mut Vec<(usize, usize)>,
    visit: &mut F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&[Vec<usize>], &[(usize, usize)]) -> Result<ControlFlow<()>>,
{
    budget.tick()?;
    let Some(u) = (0..adj.len()).find(|&v| adj[v].len() < k) else {
        if girth_adj(adj).is_at_least(target) {
            return visit(adj, added);
        }
        return Ok(ControlFlow::Continue(()));
    };
    let need = k - adj[u].len();
    let reach = target.saturating_sub(2);
    let candidates: Vec<usize> = (min_partner.max(u + 1)..adj.len())
        .filter(|&v| adj[v].len() < k && !adj[u].contains(&v) && !within_distance(adj, u, v, reach))
        .collect();
    if candidates.len() < need {
        return Ok(ControlFlow::Continue(()));
    }
    for &v in &candidates {
        adj[u].push(v);
        adj[v].push(u);
        added.push((u, v));
        let next_min = if need == 1 { 0 } else { v + 1 };
        let flow = complete_step(adj, k, target, next_min, budget, added, visit);
        added.pop();
        adj[u].pop();
        adj[v].pop();
        if flow? == ControlFlow::Break(()) {
            return Ok(ControlFlow::Break(()));
        }
    }
    Ok(ControlFlow::Continue(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::named;

    fn completions(adj: Vec<Vec<usize>>, k: usize, target: usize) -> Vec<Vec<(usize, usize)>> {
        let mut adj = adj;
        let mut out = Vec::new();
        let mut budget = Budget::new(1_000_000);
        let flow = complete_regular(&mut adj, k, target, &mut budget, &mut |_, added| {
            out.push(added.to_vec());
            Ok(ControlFlow::Continue(()))
        });
        assert_eq!(flow, Ok(ControlFlow::Continue(())));
        out
    }

    #[test]
    fn empty_four_to_k4() {
        let got = completions(vec![Vec::new(); 4], 3, 3);
        assert_eq!(
            got,
            vec![vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]]
        );
    }

    #[test]
    fn forests_never_pass_the_girth_gate() {
        // Six isolated vertices have 15 perfect matchings, all acyclic.
        assert!(completions(vec![Vec::new(); 6], 1, 3).is_empty());
    }

    #[test]
    fn girth_floor_respected() {
        // Six isolated vertices completed to 2-regular with girth >= 6: only
        // the Hamiltonian cycles, of which there are 5!/2 = 60.
        assert_eq!(completions(vec![Vec::new(); 6], 2, 6).len(), 60);
        // Girth >= 4 excludes two triangles (10 ways) from all 70 2-factors.
        assert_eq!(completions(vec![Vec::new(); 6], 2, 4).len(), 60);
        assert_eq!(completions(vec![Vec::new(); 6], 2, 3).len(), 70);
    }

    #[test]
    fn petersen_minus_vertex_restores_petersen() {
        let p = named::petersen();
        let keep: Vec<usize> = (1..10).collect();
        let h = p.induced_subgraph(&keep).unwrap();
        let got = completions(h.adjacency().to_vec(), 3, 5);
        // Three deficient vertices and an odd deficit: no completion.
        assert!(got.is_empty());
        let mut adj = h.adjacency().to_vec();
        adj.push(Vec::new());
        let mut found = Vec::new();
        let mut budget = Budget::new(1_000_000);
        let flow = complete_regular(&mut adj, 3, 5, &mut budget, &mut |a, _| {
            found.push(Graph::from_adjacency(a.to_vec()).unwrap());
            Ok(ControlFlow::Continue(()))
        });
        assert_eq!(flow, Ok(ControlFlow::Continue(())));
        assert_eq!(found.len(), 1);
        assert!(crate::graph::is_isomorphic(&found[0], &p));
    }

    #[test]
    fn budget_exhaustion() {
        let mut adj = vec![Vec::new(); 12];
        let mut budget = Budget::new(10);
        let r = complete_regular(&mut adj, 3, 3, &mut budget, &mut |_, _| {
            Ok(ControlFlow::Continue(()))
        });
        assert_eq!(r, Err(Error::BudgetExhausted(10)));
    }

    #[test]
    fn seeded_order_is_reproducible() {
        let cfg = SearchConfig {
            rng_seed: Some(7),
            ..SearchConfig::default()
        };
        let mut a: Vec<usize> = (0..20).collect();
        let mut b = a.clone();
        cfg.order(&mut a);
        cfg.order(&mut b);
        assert_eq!(a, b);
        let mut c: Vec<usize> = (0..20).collect();
        SearchConfig::default().order(&mut c);
        assert_eq!(c, (0..20).collect::<Vec<_>>());
    }
}
