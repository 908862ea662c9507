use std::collections::{BTreeMap, HashSet};
use std::ops::ControlFlow;

use super::report::{infer_n, OrderState, OrderStatus, SpectrumReport};
use super::{check_kg_graph, Construction, Generator, Seed, SpectrumConfig};
use crate::bounds::{excluded_by_excess, moore_bound, moore_tree_size, parity_admissible};
use crate::constructions::{
    amalgamate, biggs_epsilon, canonical_double_cover, circulant, delete_edges_add_vertices_each,
    delete_vertices_each, moore_tree_double_with, quartic_parity_graph, remove_biggs_tree,
    subdivide_merge_each, subdivide_three_each, subdivide_two_each, AmalgamationMode,
    CirculantSpec,
};
use crate::error::{Error, Result};
use crate::graph::{girth, Certificate, Graph};
use crate::recipe::{Built, Recipe};

struct Member {
    graph: Graph,
    processed: bool,
}

struct Engine<'a> {
    k: usize,
    g: usize,
    horizon: usize,
    cfg: &'a SpectrumConfig,
    /// Exclusion state per order, `Unresolved` where nothing applies.
    base: BTreeMap<usize, OrderState>,
    citations: BTreeMap<usize, String>,
    realized: BTreeMap<usize, (Recipe, Option<String>)>,
    pool: BTreeMap<usize, Vec<Member>>,
    /// Graphs of girth above `g`, by order.
    side: BTreeMap<usize, Vec<Member>>,
    side_report: BTreeMap<usize, Vec<Built>>,
    seen: HashSet<Certificate>,
    exhausted: usize,
}

/// Builds the spectrum report for `(k, g)` up to `horizon`.
///
/// Seeds are verified first. Amalgamation closes the realized set under
/// addition after every step; the configured constructions are then
/// applied to pooled graphs in increasing order of their order. Every
/// realized witness is replayed and re-verified before the report is
/// returned.
pub fn spectrum_search(
    k: usize,
    g: usize,
    seeds: &[Seed],
    horizon: usize,
    cfg: &SpectrumConfig,
) -> Result<SpectrumReport> {
    let moore = usize::try_from(moore_bound(k as u64, g as u64)?)
        .map_err(|_| Error::Overflow(format!("moore_bound({k},{g})")))?;
    for s in seeds {
        if let Err(why) = check_kg_graph(&s.graph, k, g) {
            return Err(Error::BadSeed(format!("{}: {why}", s.name)));
        }
    }
    if let Some(needed) = seeds.iter().map(|s| s.graph.order()).max() {
        if needed > horizon {
            return Err(Error::HorizonTooSmall { horizon, needed });
        }
    }
    let citations: BTreeMap<usize, String> = cfg
        .citations
        .iter()
        .filter(|c| c.k == k && c.g == g)
        .map(|c| (c.n, c.reason.clone()))
        .collect();
    let base = (k + 1..=horizon)
        .map(|n| {
            let state = if !parity_admissible(k as u64, n as u64) {
                OrderState::ExcludedParity
            } else if n < moore {
                OrderState::ExcludedBelowMoore
            } else if citations.contains_key(&n) {
                OrderState::ExcludedCited
            } else if excluded_by_excess(k as u64, g as u64, n as u64) {
                OrderState::ExcludedExcess
            } else {
                OrderState::Unresolved
            };
            (n, state)
        })
        .collect();
    let mut e = Engine {
        k,
        g,
        horizon,
        cfg,
        base,
        citations,
        realized: BTreeMap::new(),
        pool: BTreeMap::new(),
        side: BTreeMap::new(),
        side_report: BTreeMap::new(),
        seen: HashSet::new(),
        exhausted: 0,
    };
    for s in seeds {
        let b = Built {
            recipe: Recipe::seed(&s.graph),
            graph: s.graph.clone(),
        };
        e.offer(b, Some(s.name.clone()))?;
    }
    e.generate()?;
    loop {
        e.close_under_amalgamation()?;
        let Some((graph, in_side)) = e.next_unprocessed() else {
            break;
        };
        e.expand(&graph, in_side)?;
    }
    e.finish()
}

impl Engine<'_> {
    fn in_range(&self, n: usize) -> bool {
        n > self.k && n <= self.horizon
    }

    /// An admissible order with no witness yet.
    fn open(&self, n: usize) -> bool {
        self.base.get(&n) == Some(&OrderState::Unresolved) && !self.realized.contains_key(&n)
    }

    /// Whether a step producing order `n` is worth running. Cheap steps
    /// also run to widen the pool at realized orders.
    fn wants(&self, n: usize, cheap: bool) -> bool {
        if self.base.get(&n) != Some(&OrderState::Unresolved) {
            return false;
        }
        !self.realized.contains_key(&n)
            || (cheap && self.pool.get(&n).map_or(0, Vec::len) < self.cfg.pool_width)
    }

    fn offer(&mut self, b: Built, seed: Option<String>) -> Result<()> {
        let n = b.graph.order();
        if self.seen.contains(b.certificate()) || !b.graph.is_k_regular(self.k) {
            return Ok(());
        }
        if b.graph.components().len() != 1 {
            return Ok(());
        }
        let gi = match girth(&b.graph).cycle_len() {
            Some(c) if c >= self.g => c,
            _ => return Ok(()),
        };
        self.seen.insert(b.certificate().clone());
        let width = self.cfg.pool_width.max(1);
        if gi > self.g {
            if n > self.k && n <= self.horizon + 4 {
                let slot = self.side.entry(n).or_default();
                if slot.len() < width {
                    slot.push(Member {
                        graph: b.graph.clone(),
                        processed: false,
                    });
                    self.side_report.entry(gi).or_default().push(b);
                }
            }
            return Ok(());
        }
        if !self.in_range(n) {
            return Ok(());
        }
        if let Some(state) = self.base.get(&n).filter(|s| s.is_excluded()) {
            let why = match state {
                OrderState::ExcludedCited => self.citations.get(&n).cloned().unwrap_or_default(),
                other => other.to_string(),
            };
            return Err(Error::Contradiction(
                n,
                format!("verified witness at an excluded order ({why})"),
            ));
        }
        let slot = self.pool.entry(n).or_default();
        if slot.len() < width {
            slot.push(Member {
                graph: b.graph.clone(),
                processed: false,
            });
        }
        self.realized.entry(n).or_insert((b.recipe, seed));
        Ok(())
    }

    fn generate(&mut self) -> Result<()> {
        let cfg = self.cfg;
        for gen in &cfg.generators {
            for n in self.k + 1..=self.horizon {
                if !self.open(n) {
                    continue;
                }
                let built = match gen {
                    Generator::Circulant(jumps) => {
                        let set = jumps
                            .iter()
                            .map(|&j| j.rem_euclid(n as i64) as usize)
                            .collect();
                        CirculantSpec::new(n, set).ok().map(|s| circulant(&s))
                    }
                    Generator::QuarticParity => quartic_parity_graph(n).ok(),
                };
                if let Some(b) = built {
                    self.offer(b, None)?;
                }
            }
        }
        Ok(())
    }

    fn close_under_amalgamation(&mut self) -> Result<()> {
        'restart: loop {
            let orders: Vec<usize> = self.pool.keys().copied().collect();
            for (i, &a) in orders.iter().enumerate() {
                for &b in &orders[i..] {
                    if a + b > self.horizon || !self.open(a + b) {
                        continue;
                    }
                    let (ga, gb) = (&self.pool[&a][0].graph, &self.pool[&b][0].graph);
                    if let Some(built) = self.amalgamate_exact(ga, gb)? {
                        self.offer(built, None)?;
                        continue 'restart;
                    }
                }
            }
            return Ok(());
        }
    }

    /// Tries edge pairs until the amalgam has girth exactly `g`: the first
    /// edge of each graph against every edge of the other.
    fn amalgamate_exact(&self, ga: &Graph, gb: &Graph) -> Result<Option<Built>> {
        let (ea, eb) = (ga.edges(), gb.edges());
        let tries = ea
            .iter()
            .map(|&x| (x, eb[0]))
            .chain(eb.iter().skip(1).map(|&y| (ea[0], y)));
        for (x, y) in tries {
            let built = amalgamate(ga, gb, x, y, AmalgamationMode::Cross)?;
            if girth(&built.graph).is_exactly(self.g) {
                return Ok(Some(built));
            }
        }
        Ok(None)
    }

    /// Smallest-order unprocessed graph, realized pool first on ties.
    fn next_unprocessed(&mut self) -> Option<(Graph, bool)> {
        let first = |pool: &BTreeMap<usize, Vec<Member>>| {
            pool.iter()
                .find_map(|(&n, ms)| ms.iter().position(|m| !m.processed).map(|i| (n, i)))
        };
        let (main, side) = (first(&self.pool), first(&self.side));
        let (pool, (n, i), in_side) = match (main, side) {
            (Some(m), Some(s)) if s.0 < m.0 => (&mut self.side, s, true),
            (Some(m), _) => (&mut self.pool, m, false),
            (None, Some(s)) => (&mut self.side, s, true),
            (None, None) => return None,
        };
        let member = &mut pool.get_mut(&n).expect("order present")[i];
        member.processed = true;
        Some((member.graph.clone(), in_side))
    }

    /// Runs one construction call, collecting outputs until the pool at
    /// the target order would be full.
    fn collect(
        &mut self,
        run: impl FnOnce(&mut dyn FnMut(Built) -> ControlFlow<()>) -> Result<()>,
    ) -> Result<()> {
        let (g, width) = (self.g, self.cfg.pool_width.max(1));
        let mut found = Vec::new();
        let mut exact = 0;
        let outcome = run(&mut |b: Built| {
            if girth(&b.graph).is_exactly(g) {
                exact += 1;
            }
            found.push(b);
            if exact >= width || found.len() >= 4 * width {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        self.note(outcome);
        for b in found {
            self.offer(b, None)?;
        }
        Ok(())
    }

    /// Construction failures mean "no output"; budget exhaustion is counted.
    fn note<T>(&mut self, r: Result<T>) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(Error::BudgetExhausted(_)) => {
                self.exhausted += 1;
                None
            }
            Err(_) => None,
        }
    }

    fn expand(&mut self, graph: &Graph, in_side: bool) -> Result<()> {
        let (k, g, n) = (self.k, self.g, graph.order());
        let gi = girth(graph).cycle_len().unwrap_or(0);
        let cfg = self.cfg;
        let search = cfg.search;
        for &c in &cfg.constructions {
            match c {
                Construction::SubdivideTwo if k == 3 && self.wants(n + 2, true) => {
                    self.collect(|v| subdivide_two_each(graph, g, &search, v))?;
                }
                Construction::SubdivideThree if k == 3 && self.wants(n + 4, true) => {
                    self.collect(|v| subdivide_three_each(graph, g, &search, v))?;
                }
                Construction::SubdivideMerge if k == 4 && self.wants(n + 1, true) => {
                    self.collect(|v| subdivide_merge_each(graph, g, &search, v))?;
                }
                Construction::DeleteEdgesAddVertices => {
                    let (e, v) = if k % 2 == 0 { (k / 2, 1) } else { (k, 2) };
                    if self.wants(n + v, false) {
                        self.collect(|vis| {
                            delete_edges_add_vertices_each(graph, e, v, g, &search, vis)
                        })?;
                    }
                }
                Construction::DeleteVertices => {
                    for v in 1..=4.min(n.saturating_sub(1)) {
                        if (k * (n - v)) % 2 == 0 && self.wants(n - v, true) {
                            self.collect(|vis| delete_vertices_each(graph, v, g, &search, vis))?;
                        }
                    }
                }
                Construction::RemoveBiggsTree if k == 3 && in_side && gi == g + 1 => {
                    let target = biggs_epsilon(gi).ok().and_then(|eps| n.checked_sub(eps));
                    if target.is_some_and(|t| self.wants(t, false)) {
                        if let Some(b) = self.note(remove_biggs_tree(graph, &search)) {
                            self.offer(b, None)?;
                        }
                    }
                }
                Construction::MooreTreeDouble if gi >= 4 => {
                    for r in 0..=gi / 4 {
                        let Ok(size) = moore_tree_size(k as u64, r as u64) else {
                            break;
                        };
                        let Some(target) = n.checked_sub(size as usize).map(|m| 2 * m) else {
                            break;
                        };
                        if self.wants(target, false) {
                            if let Some(b) = self.note(moore_tree_double_with(graph, r, 0, &search))
                            {
                                self.offer(b, None)?;
                            }
                        }
                    }
                }
                Construction::CanonicalDoubleCover
                    if !graph.is_bipartite() && self.wants(2 * n, false) =>
                {
                    self.offer(canonical_double_cover(graph), None)?;
                }
                _ => {}
            }
        }
        Ok(())
    }

    fn finish(self) -> Result<SpectrumReport> {
        let mut statuses = Vec::with_capacity(self.base.len());
        for (&n, &state) in &self.base {
            let mut s = OrderStatus::bare(n, state);
            if let Some((recipe, seed)) = self.realized.get(&n) {
                let replayed = recipe.replay()?;
                if replayed.order() != n {
                    return Err(Error::Contradiction(
                        n,
                        "witness replays to another order".into(),
                    ));
                }
                if let Err(why) = check_kg_graph(&replayed, self.k, self.g) {
                    return Err(Error::Contradiction(
                        n,
                        format!("witness fails verification: {why}"),
                    ));
                }
                s.state = OrderState::Realized;
                s.witness = Some(recipe.clone());
                s.seed = seed.clone();
            } else if state == OrderState::ExcludedCited {
                s.citation = self.citations.get(&n).cloned();
            }
            statuses.push(s);
        }
        let n_kg = statuses
            .iter()
            .find(|s| !s.state.is_excluded())
            .filter(|s| s.state == OrderState::Realized)
            .map(|s| s.n);
        let mut report = SpectrumReport {
            k: self.k,
            g: self.g,
            horizon: self.horizon,
            statuses,
            n_kg,
            n_candidate: None,
            run_found: false,
            side_pool: self.side_report,
            exhausted_calls: self.exhausted,
        };
        report.n_candidate = n_kg.and_then(|c| infer_n(&report, c));
        report.run_found = report.n_candidate.is_some();
        Ok(report)
    }
}
