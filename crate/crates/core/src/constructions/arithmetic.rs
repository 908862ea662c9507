use super::{built, Params};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recipe::Built;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Order and connecting set of a circulant graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CirculantSpec {
    n: usize,
    set: Vec<usize>,
}

impl CirculantSpec {
    /// Validates that `set` is closed under negation, avoids 0 and
    /// generates Z_n. Residues are reduced mod `n` and sorted.
    pub fn new(n: usize, set: Vec<usize>) -> Result<CirculantSpec> {
        let bad = |why: &str| Err(Error::InvalidConnectingSet(format!("n={n}: {why}")));
        if n < 3 {
            return bad("order must be at least 3");
        }
        let mut set: Vec<usize> = set.into_iter().map(|s| s % n).collect();
        set.sort_unstable();
        set.dedup();
        if set.first() == Some(&0) {
            return bad("0 in connecting set");
        }
        if let Some(s) = set.iter().find(|&&s| set.binary_search(&(n - s)).is_err()) {
            return bad(&format!("{s} present but {} missing", n - s));
        }
        if set.iter().fold(n, |acc, &s| gcd(acc, s)) != 1 {
            return bad("set does not generate Z_n");
        }
        Ok(CirculantSpec { n, set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&self) -> &[usize] {
        &self.set
    }
}

/// Vertices `0..n`, with `i ~ j` iff `(i - j) mod n` lies in the set.
pub fn circulant(spec: &CirculantSpec) -> Built {
    let params = Params::new()
        .int("n", spec.n as i64)
        .list("set", spec.set.iter().map(|&s| s as i64));
    built("circulant", &[], params, circulant_graph(spec))
}

pub(crate) fn circulant_graph(spec: &CirculantSpec) -> Graph {
    let n = spec.n;
    let adj = (0..n)
        .map(|i| spec.set.iter().map(|&s| (i + s) % n).collect())
        .collect();
    Graph::from_adjacency(adj).expect("validated connecting set gives a simple graph")
}

/// Quartic graph on `0..n`: odd `i` joins `i±1`, `i+7`, `i+11`; even `i`
/// joins `i±1`, `i-7`, `i-11`, all mod `n`.
pub fn quartic_parity_graph(n: usize) -> Result<Built> {
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if n < 26 {
        return Err(Error::OrderTooSmall { order: n, min: 26 });
    }
    // Every edge has exactly one odd endpoint, so the odd rule lists each
    // edge once.
    let edges = (1..n)
        .step_by(2)
        .flat_map(|i| [1, n - 1, 7, 11].map(|s| (i, (i + s) % n)));
    let graph = Graph::from_edges(n, edges)?;
    Ok(built(
        "quartic_parity_graph",
        &[],
        Params::new().int("n", n as i64),
        graph,
    ))
}

/// Parameters of a group divisible generalized Petersen graph
/// GDGP_m(n; k_0, ..., k_{m-1}).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GdgpSpec {
    m: usize,
    n: usize,
    a: usize,
    ks: Vec<usize>,
}

impl GdgpSpec {
    pub fn new(m: usize, n: usize, ks: Vec<usize>) -> Result<GdgpSpec> {
        let bad = |why: String| Err(Error::SpecViolation(why));
        if m < 2 {
            return bad(format!("m = {m} must be at least 2"));
        }
        if n == 0 || !n.is_multiple_of(m) {
            return bad(format!("m = {m} must divide n = {n}"));
        }
        if ks.len() != m {
            return bad(format!("expected {m} jumps, got {}", ks.len()));
        }
        let ks: Vec<usize> = ks.into_iter().map(|k| k % n).collect();
        let a = ks[0] % m;
        if a == 0 {
            return bad(format!("k_0 = {} is divisible by m = {m}", ks[0]));
        }
        if let Some(j) = (0..m).find(|&j| ks[j] % m != a) {
            return bad(format!("k_{j} = {} is not congruent to {a} mod {m}", ks[j]));
        }
        for j in 0..m {
            let back = (j + m - a) % m;
            if (ks[j] + ks[back]).is_multiple_of(n) {
                return bad(format!("k_{j} + k_{back} = 0 mod {n}"));
            }
        }
        Ok(GdgpSpec { m, n, a, ks })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn jumps(&self) -> &[usize] {
        &self.ks
    }
}

/// Outer cycle `u_i = i`, spokes `u_i v_i` with `v_i = n + i`, and inner
/// chords `v_x ~ v_{x + k_{x mod m}}`.
pub fn gdgp(spec: &GdgpSpec) -> Result<Built> {
    let graph = gdgp_graph(spec)?;
    let params = Params::new()
        .int("m", spec.m as i64)
        .int("n", spec.n as i64)
        .list("K", spec.ks.iter().map(|&k| k as i64));
    Ok(built("gdgp", &[], params, graph))
}

pub(crate) fn gdgp_graph(spec: &GdgpSpec) -> Result<Graph> {
    let n = spec.n;
    let outer = (0..n).map(|i| (i, (i + 1) % n));
    let spokes = (0..n).map(|i| (i, n + i));
    let inner = (0..n).map(|x| (n + x, n + (x + spec.ks[x % spec.m]) % n));
    Graph::from_edges(2 * n, outer.chain(spokes).chain(inner))
}
