//! Closed-form order bounds and excess-based non-existence filters.
//!
//! All arithmetic is checked `u64`; a result that does not fit is an
//! [`Error::Overflow`] rather than a wrapped value.

use crate::error::{Error, Result};

/// Bounds for one `(k, g)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsRow {
    pub k: u64,
    pub g: u64,
    pub moore: u64,
    pub sauer: u64,
    /// Odd degree forces even order.
    pub parity_even_required: bool,
}

impl BoundsRow {
    pub fn new(k: u64, g: u64) -> Result<BoundsRow> {
        Ok(BoundsRow {
            k,
            g,
            moore: moore_bound(k, g)?,
            sauer: sauer_bound(k, g)?,
            parity_even_required: k % 2 == 1,
        })
    }

    /// Orders in `moore..=horizon` removed by the excess filters.
    pub fn excess_excluded(&self, horizon: u64) -> Vec<u64> {
        (self.moore..=horizon)
            .filter(|&n| parity_admissible(self.k, n) && excluded_by_excess(self.k, self.g, n))
            .collect()
    }
}

fn overflow(what: &str, k: u64, g: u64) -> Error {
    Error::Overflow(format!("{what}({k},{g})"))
}

fn checked_pow(base: u64, exp: u64) -> Option<u64> {
    base.checked_pow(u32::try_from(exp).ok()?)
}

/// Counting lower bound on the order of a k-regular graph of girth g.
pub fn moore_bound(k: u64, g: u64) -> Result<u64> {
    if k < 2 || g < 3 {
        return Err(Error::ParameterOutOfRange(format!(
            "moore_bound needs k >= 2, g >= 3 (got k={k}, g={g})"
        )));
    }
    let err = || overflow("moore_bound", k, g);
    if g % 2 == 1 {
        let mut total: u64 = 1;
        for i in 0..=(g - 3) / 2 {
            let term = checked_pow(k - 1, i)
                .and_then(|p| p.checked_mul(k))
                .ok_or_else(err)?;
            total = total.checked_add(term).ok_or_else(err)?;
        }
        Ok(total)
    } else {
        let mut total: u64 = 0;
        for i in 0..=(g - 2) / 2 {
            total = checked_pow(k - 1, i)
                .and_then(|p| total.checked_add(p))
                .ok_or_else(err)?;
        }
        total.checked_mul(2).ok_or_else(err)
    }
}

/// Universal upper bound on N(k, g): every admissible order from here on
/// is realised.
pub fn sauer_bound(k: u64, g: u64) -> Result<u64> {
    if k < 3 || g < 3 {
        return Err(Error::ParameterOutOfRange(format!(
            "sauer_bound needs k >= 3, g >= 3 (got k={k}, g={g})"
        )));
    }
    let err = || overflow("sauer_bound", k, g);
    if g % 2 == 1 {
        checked_pow(k - 1, g - 2)
            .and_then(|p| p.checked_mul(2))
            .ok_or_else(err)
    } else {
        checked_pow(k - 1, g - 3)
            .and_then(|p| p.checked_mul(4))
            .ok_or_else(err)
    }
}

/// Vertex count of the Moore tree of depth `r`: 1, 1+k, 1+k+k(k-1), ...
pub fn moore_tree_size(k: u64, r: u64) -> Result<u64> {
    if k < 3 {
        return Err(Error::ParameterOutOfRange(format!(
            "moore_tree_size needs k >= 3 (got {k})"
        )));
    }
    let err = || Error::Overflow(format!("moore_tree_size({k},{r})"));
    let mut total: u64 = 1;
    for i in 0..r {
        let layer = checked_pow(k - 1, i)
            .and_then(|p| p.checked_mul(k))
            .ok_or_else(err)?;
        total = total.checked_add(layer).ok_or_else(err)?;
    }
    Ok(total)
}

/// Signed excess `n - M(k, g)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExcessQuery {
    pub k: u64,
    pub g: u64,
    pub n: u64,
    pub excess: i128,
}

impl ExcessQuery {
    pub fn new(k: u64, g: u64, n: u64) -> Result<ExcessQuery> {
        let moore = moore_bound(k, g)?;
        Ok(ExcessQuery {
            k,
            g,
            n,
            excess: i128::from(n) - i128::from(moore),
        })
    }
}

/// True when an order is ruled out by the excess corollaries: for even
/// g >= 6 an odd excess at most k-2, and for even g >= 8 an excess of 2.
/// Orders below the Moore bound return false; callers treat those
/// separately.
pub fn excluded_by_excess(k: u64, g: u64, n: u64) -> bool {
    if k < 3 || g < 6 || g % 2 == 1 {
        return false;
    }
    let Ok(q) = ExcessQuery::new(k, g, n) else {
        return false;
    };
    let e = q.excess;
    if e < 0 {
        return false;
    }
    (e % 2 == 1 && e <= i128::from(k) - 2) || (g >= 8 && e == 2)
}

/// Handshake parity: an odd-degree regular graph has even order.
pub fn parity_admissible(k: u64, n: u64) -> bool {
    !(k % 2 == 1 && n % 2 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moore_values() {
        assert_eq!(moore_bound(3, 5), Ok(10));
        assert_eq!(moore_bound(3, 6), Ok(14));
        assert_eq!(moore_bound(3, 3), Ok(4));
        assert_eq!(moore_bound(3, 7), Ok(22));
        assert_eq!(moore_bound(4, 6), Ok(26));
        assert_eq!(moore_bound(4, 8), Ok(80));
        assert!(matches!(
            moore_bound(1, 5),
            Err(Error::ParameterOutOfRange(_))
        ));
        assert!(matches!(
            moore_bound(3, 2),
            Err(Error::ParameterOutOfRange(_))
        ));
    }

    #[test]
    fn moore_matches_direct_sum() {
        // Independent route: count vertices of the breadth-first tree layer
        // by layer (odd g) or from an edge (even g).
        for k in 2..9u64 {
            for g in 3..13u64 {
                let expected = if g % 2 == 1 {
                    let depth = (g - 1) / 2;
                    let mut layer = 1u64;
                    let mut total = 1u64;
                    for d in 0..depth {
                        layer *= if d == 0 { k } else { k - 1 };
                        total += layer;
                    }
                    total
                } else {
                    let depth = (g - 2) / 2;
                    let mut layer = 2u64;
                    let mut total = 2u64;
                    for _ in 0..depth {
                        layer *= k - 1;
                        total += layer;
                    }
                    total
                };
                assert_eq!(moore_bound(k, g), Ok(expected), "k={k} g={g}");
            }
        }
    }

    #[test]
    fn sauer_values() {
        assert_eq!(sauer_bound(3, 5), Ok(16));
        assert_eq!(sauer_bound(3, 6), Ok(32));
        assert_eq!(sauer_bound(4, 5), Ok(54));
        assert!(matches!(
            sauer_bound(2, 5),
            Err(Error::ParameterOutOfRange(_))
        ));
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(sauer_bound(1000, 60), Err(Error::Overflow(_))));
        assert!(matches!(moore_bound(1000, 61), Err(Error::Overflow(_))));
        assert!(matches!(moore_tree_size(1000, 40), Err(Error::Overflow(_))));
    }

    #[test]
    fn moore_tree_sizes() {
        assert_eq!(moore_tree_size(3, 0), Ok(1));
        assert_eq!(moore_tree_size(3, 1), Ok(4));
        assert_eq!(moore_tree_size(3, 2), Ok(10));
        assert!(moore_tree_size(2, 1).is_err());
    }

    #[test]
    fn moore_tree_increments() {
        for k in 3..8u64 {
            assert_eq!(
                moore_tree_size(k, 1).unwrap() - moore_tree_size(k, 0).unwrap(),
                k
            );
            for r in 1..6u64 {
                let step = moore_tree_size(k, r + 1).unwrap() - moore_tree_size(k, r).unwrap();
                assert_eq!(step, k * (k - 1).pow(r as u32));
            }
        }
    }

    #[test]
    fn moore_below_sauer_on_grid() {
        for k in 3..=8 {
            for g in 5..=12 {
                assert!(moore_bound(k, g).unwrap() < sauer_bound(k, g).unwrap());
            }
        }
    }

    #[test]
    fn excess_filter() {
        assert!(excluded_by_excess(4, 6, 27));
        assert!(excluded_by_excess(4, 8, 81));
        assert!(excluded_by_excess(4, 8, 82));
        assert!(!excluded_by_excess(3, 6, 16));
        assert!(!excluded_by_excess(4, 6, 28));
        // Excess 2 at girth 6 is not filtered.
        assert!(!excluded_by_excess(5, 6, 44));
        // Below the Moore bound the filter stays silent.
        assert!(!excluded_by_excess(4, 6, 20));
        // Odd girth never filters.
        assert!(!excluded_by_excess(4, 7, 68));
    }

    #[test]
    fn parity() {
        assert!(!parity_admissible(3, 11));
        assert!(parity_admissible(3, 12));
        assert!(parity_admissible(4, 11));
    }

    #[test]
    fn bounds_row() {
        let row = BoundsRow::new(4, 8).unwrap();
        assert_eq!(row.moore, 80);
        assert!(!row.parity_even_required);
        assert_eq!(row.excess_excluded(90), vec![81, 82]);
        let row = BoundsRow::new(3, 5).unwrap();
        assert!(row.parity_even_required);
        assert!(row.sauer >= row.moore);
    }
}
