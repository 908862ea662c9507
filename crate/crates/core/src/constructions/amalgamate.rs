use super::{built, regular_degree, Params, Parent};
use crate::error::{Error, Result};
use crate::graph::{Edge, EditGraph, Graph};
use crate::recipe::Built;

/// How the four freed endpoints are rejoined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AmalgamationMode {
    /// `u1-v2` and `u2-v1`.
    Cross,
    /// `u1-u2` and `v1-v2`.
    Parallel,
}

impl AmalgamationMode {
    pub(crate) fn code(self) -> i64 {
        match self {
            AmalgamationMode::Cross => 0,
            AmalgamationMode::Parallel => 1,
        }
    }

    pub(crate) fn from_code(c: i64) -> Result<AmalgamationMode> {
        match c {
            0 => Ok(AmalgamationMode::Cross),
            1 => Ok(AmalgamationMode::Parallel),
            _ => Err(Error::Recipe(format!("unknown amalgamation mode {c}"))),
        }
    }
}

/// Disjoint union of `g1` and `g2` with `e1`, `e2` removed and the four
/// endpoints rejoined according to `mode`. Vertices of `g2` are shifted by
/// the order of `g1`.
pub fn amalgamate(
    g1: &Graph,
    g2: &Graph,
    e1: Edge,
    e2: Edge,
    mode: AmalgamationMode,
) -> Result<Built> {
    for (g, e) in [(g1, e1), (g2, e2)] {
        if e.v() >= g.order() || !g.has_edge(e.u(), e.v()) {
            return Err(Error::NotAnEdge(e.u(), e.v()));
        }
    }
    let (k1, k2) = (regular_degree(g1), regular_degree(g2));
    match (k1, k2) {
        (Ok(a), Ok(b)) if a == b => {}
        _ => {
            return Err(Error::DegreeMismatch(format!(
                "inputs must be regular of one degree (got {:?} and {:?})",
                g1.regular_degree(),
                g2.regular_degree()
            )))
        }
    }
    let graph = apply(g1, g2, e1.endpoints(), e2.endpoints(), mode)?;
    let (p1, p2) = (Parent::of(g1), Parent::of(g2));
    let params = Params::new()
        .value("e1", p1.edge_list(&[e1.endpoints()]))
        .value("e2", p2.edge_list(&[e2.endpoints()]))
        .int("mode", mode.code());
    Ok(built("amalgamate", &[&p1, &p2], params, graph))
}

/// Endpoint order matters: `e1 = (u1, v1)` and `e2 = (u2, v2)` as given.
pub(crate) fn apply(
    g1: &Graph,
    g2: &Graph,
    (u1, v1): (usize, usize),
    (u2, v2): (usize, usize),
    mode: AmalgamationMode,
) -> Result<Graph> {
    let n1 = g1.order();
    let mut eg = EditGraph::from_graph(&g1.disjoint_union(g2));
    let (u2, v2) = (u2 + n1, v2 + n1);
    eg.remove_edge(u1, v1)?;
    eg.remove_edge(u2, v2)?;
    match mode {
        AmalgamationMode::Cross => {
            eg.add_edge(u1, v2)?;
            eg.add_edge(u2, v1)?;
        }
        AmalgamationMode::Parallel => {
            eg.add_edge(u1, u2)?;
            eg.add_edge(v1, v2)?;
        }
    }
    Ok(eg.into_graph())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth, Girth};
    use crate::named;

    #[test]
    fn petersen_pair() {
        let p = named::petersen();
        let e = p.edges()[0];
        for mode in [AmalgamationMode::Cross, AmalgamationMode::Parallel] {
            let b = amalgamate(&p, &p, e, e, mode).unwrap();
            assert_eq!(b.graph.order(), 20);
            assert!(b.graph.is_k_regular(3));
            assert_eq!(b.graph.is_connected(), Ok(true));
            assert!(girth(&b.graph).is_at_least(5));
            b.recipe.replay().unwrap();
        }
    }

    #[test]
    fn two_k4() {
        let k4 = named::complete(4);
        let e = k4.edges()[0];
        let b = amalgamate(&k4, &k4, e, e, AmalgamationMode::Cross).unwrap();
        assert_eq!(b.graph.order(), 8);
        assert_eq!(girth(&b.graph), Girth::Cycle(3));
    }

    #[test]
    fn errors() {
        let k4 = named::complete(4);
        let p = named::petersen();
        let c = named::cycle(5);
        let e = k4.edges()[0];
        assert!(matches!(
            amalgamate(&k4, &c, e, c.edges()[0], AmalgamationMode::Cross),
            Err(Error::DegreeMismatch(_))
        ));
        let missing = Edge::new(0, 7).unwrap();
        assert_eq!(
            amalgamate(&p, &p, missing, e, AmalgamationMode::Cross),
            Err(Error::NotAnEdge(0, 7))
        );
    }
}
