use super::{built, Params, Parent};
use crate::graph::Graph;
use crate::recipe::Built;

/// Vertex `(v, a)` becomes `v + a * n`; each edge `uv` lifts to
/// `(u,0)(v,1)` and `(u,1)(v,0)`.
pub fn canonical_double_cover(g: &Graph) -> Built {
    let parent = Parent::of(g);
    built(
        "canonical_double_cover",
        &[&parent],
        Params::new(),
        apply(g),
    )
}

pub(crate) fn apply(g: &Graph) -> Graph {
    let n = g.order();
    let edges = g
        .edges()
        .into_iter()
        .flat_map(|e| [(e.u(), e.v() + n), (e.u() + n, e.v())]);
    Graph::from_edges(2 * n, edges).expect("lift of a simple graph is simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth, is_isomorphic, Girth};
    use crate::named;

    #[test]
    fn k4_gives_cube() {
        let c = canonical_double_cover(&named::complete(4)).graph;
        assert!(c.is_k_regular(3));
        assert_eq!(girth(&c), Girth::Cycle(4));
        assert_eq!(c.is_connected(), Ok(true));
        // The 3-cube: 0..8 with edges between labels differing in one bit.
        let cube = Graph::from_edges(
            8,
            (0..8usize)
                .flat_map(|x| [1, 2, 4].map(move |b| (x, x ^ b)))
                .filter(|&(a, b)| a < b),
        )
        .unwrap();
        assert!(is_isomorphic(&c, &cube));
    }

    #[test]
    fn petersen_and_mcgee() {
        let c = canonical_double_cover(&named::petersen()).graph;
        assert_eq!((c.order(), girth(&c)), (20, Girth::Cycle(6)));
        assert_eq!(c.is_connected(), Ok(true));
        let c = canonical_double_cover(&named::mcgee()).graph;
        assert_eq!((c.order(), girth(&c)), (48, Girth::Cycle(8)));
        assert!(c.is_k_regular(3));
        assert_eq!(c.is_connected(), Ok(true));
    }

    #[test]
    fn bipartite_input_splits() {
        let k33 = named::complete_bipartite(3, 3);
        let b = canonical_double_cover(&k33);
        let comps = b.graph.components();
        assert_eq!(comps.len(), 2);
        for c in comps {
            assert!(is_isomorphic(&b.graph.induced_subgraph(&c).unwrap(), &k33));
        }
        b.recipe.replay().unwrap();
    }
}
