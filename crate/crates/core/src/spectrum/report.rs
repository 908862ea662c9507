use std::collections::BTreeMap;
use std::fmt;

use crate::recipe::{Built, Recipe};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderState {
    Realized,
    ExcludedParity,
    ExcludedBelowMoore,
    ExcludedExcess,
    ExcludedCited,
    Unresolved,
}

impl OrderState {
    pub fn name(self) -> &'static str {
        match self {
            OrderState::Realized => "Realized",
            OrderState::ExcludedParity => "ExcludedParity",
            OrderState::ExcludedBelowMoore => "ExcludedBelowMoore",
            OrderState::ExcludedExcess => "ExcludedExcess",
            OrderState::ExcludedCited => "ExcludedCited",
            OrderState::Unresolved => "Unresolved",
        }
    }

    pub fn is_excluded(self) -> bool {
        !matches!(self, OrderState::Realized | OrderState::Unresolved)
    }
}

impl fmt::Display for OrderState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderStatus {
    pub n: usize,
    pub state: OrderState,
    /// Recipe whose replay yields the witness (Realized only).
    pub witness: Option<Recipe>,
    /// Seed name when the witness is a seed graph.
    pub seed: Option<String>,
    /// Reason text (ExcludedCited only).
    pub citation: Option<String>,
}

impl OrderStatus {
    pub(crate) fn bare(n: usize, state: OrderState) -> OrderStatus {
        OrderStatus {
            n,
            state,
            witness: None,
            seed: None,
            citation: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub k: usize,
    pub g: usize,
    pub horizon: usize,
    /// One entry per order `k+1..=horizon`, ascending.
    pub statuses: Vec<OrderStatus>,
    /// Smallest Realized order when every admissible order below it is
    /// excluded.
    pub n_kg: Option<usize>,
    /// Start of the first complete run (an upper bound on N(k,g)).
    pub n_candidate: Option<usize>,
    pub run_found: bool,
    /// Constructed graphs whose girth exceeds `g`, keyed by girth.
    pub side_pool: BTreeMap<usize, Vec<Built>>,
    /// Construction calls that ran out of budget.
    pub exhausted_calls: usize,
}

impl SpectrumReport {
    pub fn status(&self, n: usize) -> Option<&OrderStatus> {
        let first = self.statuses.first()?.n;
        self.statuses.get(n.checked_sub(first)?)
    }

    pub fn state(&self, n: usize) -> Option<OrderState> {
        self.status(n).map(|s| s.state)
    }

    pub fn orders(&self, state: OrderState) -> Vec<usize> {
        self.statuses
            .iter()
            .filter(|s| s.state == state)
            .map(|s| s.n)
            .collect()
    }

    /// Summary row: g, n(k,g), orders still open, bound on N(k,g).
    pub fn summary(&self) -> String {
        let n_kg = self.n_kg.map_or("?".to_string(), |n| n.to_string());
        let open = ranges(
            &self.orders(OrderState::Unresolved),
            if self.k % 2 == 1 { 2 } else { 1 },
        );
        let bound = self
            .n_candidate
            .map_or("?".to_string(), |n| format!("<= {n}"));
        let rows = [
            [
                "g".to_string(),
                "n(k,g)".into(),
                "orders to be investigated".into(),
                "N(k,g)".into(),
            ],
            [
                self.g.to_string(),
                n_kg,
                if open.is_empty() { "-".into() } else { open },
                bound,
            ],
        ];
        let widths: Vec<usize> = (0..4)
            .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
            .collect();
        rows.iter()
            .map(|r| {
                let cells: Vec<String> = r
                    .iter()
                    .zip(&widths)
                    .map(|(cell, &w)| format!("{cell:<w$}"))
                    .collect();
                cells.join(" | ").trim_end().to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Compresses an ascending list into `a..b` runs with the given step.
fn ranges(xs: &[usize], step: usize) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < xs.len() {
        let mut j = i;
        while j + 1 < xs.len() && xs[j + 1] == xs[j] + step {
            j += 1;
        }
        parts.push(if j == i {
            xs[i].to_string()
        } else {
            format!("{}..{}", xs[i], xs[j])
        });
        i = j + 1;
    }
    parts.join(", ")
}

impl fmt::Display for SpectrumReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "# spectrum k={} g={} horizon={}",
            self.k, self.g, self.horizon
        )?;
        for s in &self.statuses {
            write!(f, "{}\t{}\t", s.n, s.state)?;
            match (&s.witness, &s.citation) {
                (Some(r), _) => {
                    if let Some(name) = &s.seed {
                        write!(f, "seed={name} ")?;
                    }
                    writeln!(f, "{r}")?;
                }
                (None, Some(c)) => writeln!(f, "{c}")?,
                (None, None) => writeln!(f, "-")?,
            }
        }
        let opt = |x: Option<usize>| x.map_or("none".to_string(), |n| n.to_string());
        writeln!(f, "# n_kg={}", opt(self.n_kg))?;
        writeln!(
            f,
            "# N_candidate={} run_found={}",
            opt(self.n_candidate),
            self.run_found
        )?;
        for (gi, pool) in &self.side_pool {
            writeln!(f, "# side_pool girth={gi} graphs={}", pool.len())?;
        }
        if self.exhausted_calls > 0 {
            writeln!(f, "# budget_exhausted_calls={}", self.exhausted_calls)?;
        }
        writeln!(f)?;
        writeln!(f, "{}", self.summary())
    }
}

/// Start of the first run of Realized orders long enough to certify
/// N(k,g) by the consecutive-run theorem: `N..N+n_kg-1` for even k, and
/// the even orders `N, N+2, .., N+n_kg-2` for odd k.
pub fn infer_n(report: &SpectrumReport, n_kg: usize) -> Option<usize> {
    if n_kg == 0 {
        return None;
    }
    let step = if report.k % 2 == 1 { 2 } else { 1 };
    let len = n_kg.div_ceil(step);
    let realized = |n: usize| report.state(n) == Some(OrderState::Realized);
    let first = report.statuses.first()?.n;
    (first..=report.horizon)
        .filter(|n| step == 1 || n % 2 == 0)
        .find(|&start| {
            let last = start + (len - 1) * step;
            last <= report.horizon && (0..len).all(|i| realized(start + i * step))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(k: usize, horizon: usize, realized: &[usize]) -> SpectrumReport {
        let statuses = (k + 1..=horizon)
            .map(|n| {
                let state = if realized.contains(&n) {
                    OrderState::Realized
                } else {
                    OrderState::Unresolved
                };
                OrderStatus::bare(n, state)
            })
            .collect();
        SpectrumReport {
            k,
            g: 5,
            horizon,
            statuses,
            n_kg: None,
            n_candidate: None,
            run_found: false,
            side_pool: BTreeMap::new(),
            exhausted_calls: 0,
        }
    }

    #[test]
    fn odd_degree_runs() {
        let r = report(3, 40, &(10..=40).step_by(2).collect::<Vec<_>>());
        assert_eq!(infer_n(&r, 10), Some(10));
        let r = report(3, 40, &[10, 12, 14, 18, 20, 22, 24, 26]);
        assert_eq!(infer_n(&r, 10), Some(18));
        assert_eq!(infer_n(&r, 20), None);
    }

    #[test]
    fn even_degree_runs() {
        let mut orders = vec![8];
        orders.extend(10..=20);
        let r = report(4, 20, &orders);
        assert_eq!(infer_n(&r, 8), Some(10));
        assert_eq!(infer_n(&r, 12), None);
    }

    #[test]
    fn range_text() {
        assert_eq!(ranges(&[26, 28, 30, 34], 2), "26..30, 34");
        assert_eq!(ranges(&[9], 1), "9");
        assert_eq!(ranges(&[], 1), "");
    }
}
