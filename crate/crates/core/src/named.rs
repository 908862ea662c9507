//! Standard graphs used as seeds and fixtures: complete and bipartite
//! families, LCF-described cubic cages, and incidence graphs of small
//! finite geometries.

use itertools::Itertools;

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).tuple_combinations()).expect("complete graph is simple")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).cartesian_product(a..a + b)).expect("simple")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("simple")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("simple")
}

/// Hamiltonian cycle `0..n` plus chords `i ~ i + pattern[i mod len]`.
pub fn lcf(n: usize, pattern: &[i64]) -> Graph {
    let n_i = n as i64;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let j = (i as i64 + pattern[i % pattern.len()]).rem_euclid(n_i) as usize;
        if i < j {
            edges.push((i, j));
        }
    }
    Graph::from_edges(n, edges).expect("LCF description yields a simple graph")
}

/// Vertices are the `k`-subsets of `0..n`, adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Graph {
    let subsets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    let edges = (0..subsets.len())
        .tuple_combinations()
        .filter(|&(a, b)| subsets[a].iter().all(|x| !subsets[b].contains(x)));
    Graph::from_edges(subsets.len(), edges).expect("simple")
}

/// The (3,5)-cage.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("simple")
}

/// The (3,6)-cage.
pub fn heawood() -> Graph {
    lcf(14, &[5, -5])
}

/// The (3,7)-cage.
pub fn mcgee() -> Graph {
    lcf(24, &[12, 7, -7])
}

/// Tutte's 8-cage, the (3,8)-cage.
pub fn tutte_coxeter() -> Graph {
    lcf(30, &[-13, -9, 7, -7, 9, 13])
}

/// The (4,5)-cage on 19 vertices: a 19-cycle plus one chord
/// `i ~ i + step[i]` per vertex.
pub fn robertson() -> Graph {
    const STEP: [usize; 19] = [8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4];
    let rim = (0..19).map(|i| (i, (i + 1) % 19));
    let chords = (0..19).map(|i| (i, (i + STEP[i]) % 19));
    Graph::from_edges(19, rim.chain(chords)).expect("simple")
}

/// Point-line incidence graph of the projective plane of order `q`
/// (q in {2, 3, 4, 5, 7}). For q = 2, 3, 4 these are the (q+1, 6)-cages.
pub fn projective_plane_incidence(q: usize) -> Graph {
    let f = Field::new(q);
    let points = projective_points(&f, 3);
    let dot = |a: &[usize], b: &[usize]| {
        a.iter()
            .zip(b)
            .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
    };
    let np = points.len();
    let mut edges = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for (j, l) in points.iter().enumerate() {
            if dot(p, l) == 0 {
                edges.push((i, np + j));
            }
        }
    }
    Graph::from_edges(2 * np, edges).expect("simple")
}

/// Incidence graph of the symplectic generalized quadrangle W(q) for prime
/// `q`; for q = 3 this is the (4,8)-cage on 80 vertices.
pub fn symplectic_quadrangle_incidence(q: usize) -> Graph {
    let f = Field::new(q);
    let points = projective_points(&f, 4);
    // Alternating form x0*y1 - x1*y0 + x2*y3 - x3*y2.
    let form = |a: &[usize], b: &[usize]| {
        let t1 = f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]));
        let t2 = f.sub(f.mul(a[2], b[3]), f.mul(a[3], b[2]));
        f.add(t1, t2)
    };
    let mut lines: Vec<Vec<usize>> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for r in points.iter().skip(i + 1) {
            if form(p, r) != 0 {
                continue;
            }
            let line: Vec<usize> = (0..points.len())
                .filter(|&t| in_span(&f, p, r, &points[t]))
                .collect();
            if !lines.contains(&line) {
                lines.push(line);
            }
        }
    }
    let np = points.len();
    let edges = lines
        .iter()
        .enumerate()
        .flat_map(|(l, pts)| pts.iter().map(move |&p| (p, np + l)));
    Graph::from_edges(np + lines.len(), edges).expect("simple")
}

fn in_span(f: &Field, p: &[usize], r: &[usize], t: &[usize]) -> bool {
    (0..f.q).any(|a| {
        (0..f.q).any(|b| {
            (a, b) != (0, 0)
                && p.iter()
                    .zip(r)
                    .zip(t)
                    .all(|((&x, &y), &z)| f.add(f.mul(a, x), f.mul(b, y)) == z)
        })
    })
}

/// Normalised representatives (first non-zero coordinate 1) of the points
/// of the projective space of the given vector dimension.
fn projective_points(f: &Field, dim: usize) -> Vec<Vec<usize>> {
    (0..dim)
        .map(|_| 0..f.q)
        .multi_cartesian_product()
        .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
        .collect()
}

/// Arithmetic tables for GF(q), q prime or 4.
struct Field {
    q: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

impl Field {
    fn new(q: usize) -> Field {
        match q {
            4 => {
                // Elements 0, 1, w, w+1 encoded as bit pairs; w^2 = w + 1.
                let add = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
                let mul = (0..4)
                    .map(|a| (0..4).map(|b| gf4_mul(a, b)).collect())
                    .collect();
                Field { q, add, mul }
            }
            2 | 3 | 5 | 7 | 11 | 13 => Field {
                q,
                add: (0..q)
                    .map(|a| (0..q).map(|b| (a + b) % q).collect())
                    .collect(),
                mul: (0..q)
                    .map(|a| (0..q).map(|b| (a * b) % q).collect())
                    .collect(),
            },
            _ => panic!("unsupported field order {q}"),
        }
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    fn sub(&self, a: usize, b: usize) -> usize {
        let neg_b = (0..self.q)
            .find(|&x| self.add(b, x) == 0)
            .expect("additive inverse");
        self.add(a, neg_b)
    }
}

fn gf4_mul(a: usize, b: usize) -> usize {
    let mut r = 0;
    let (mut a, mut b) = (a, b);
    while b > 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & 4 != 0 {
            a ^= 0b111;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth, Girth};

    fn check(g: &Graph, n: usize, k: usize, girth_value: usize) {
        assert_eq!(g.order(), n);
        assert!(g.is_k_regular(k));
        assert_eq!(girth(g), Girth::Cycle(girth_value));
        assert_eq!(g.is_connected(), Ok(true));
    }

    #[test]
    fn cages() {
        check(&complete(4), 4, 3, 3);
        check(&complete_bipartite(3, 3), 6, 3, 4);
        check(&petersen(), 10, 3, 5);
        check(&kneser(5, 2), 10, 3, 5);
        check(&heawood(), 14, 3, 6);
        check(&mcgee(), 24, 3, 7);
        check(&tutte_coxeter(), 30, 3, 8);
        check(&robertson(), 19, 4, 5);
    }

    #[test]
    fn geometries() {
        check(&projective_plane_incidence(2), 14, 3, 6);
        check(&projective_plane_incidence(3), 26, 4, 6);
        check(&projective_plane_incidence(4), 42, 5, 6);
        check(&symplectic_quadrangle_incidence(3), 80, 4, 8);
    }
}
