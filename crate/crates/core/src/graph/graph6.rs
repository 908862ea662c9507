//! graph6 encoding: order header followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per byte with an
//! offset of 63.

use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by the encoder.
pub const MAX_ORDER: usize = 1 << 18;

const HEADER: &str = ">>graph6<<";

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut out = Vec::with_capacity(8 + n * n / 12);
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        push_sextets(&mut out, n as u64, 3);
    } else {
        out.extend([126, 126]);
        push_sextets(&mut out, n as u64, 6);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

fn push_sextets(out: &mut Vec<u8>, value: u64, count: u32) {
    for i in (0..count).rev() {
        out.push(((value >> (6 * i)) & 63) as u8 + 63);
    }
}

/// Decodes one graph6 line. A trailing newline and the optional
/// `>>graph6<<` header are tolerated; anything else malformed is rejected,
/// including non-zero padding bits.
pub fn decode_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty line".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!("byte {b} outside 63..=126")));
    }
    let sextet = |i: usize| -> Result<u64> {
        bytes
            .get(i)
            .map(|&b| u64::from(b - 63))
            .ok_or_else(|| Error::MalformedGraph6("truncated order header".into()))
    };
    let (n, start) = if bytes[0] != 126 {
        (u64::from(bytes[0] - 63), 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0;
        for i in 1..4 {
            n = (n << 6) | sextet(i)?;
        }
        (n, 4)
    } else {
        let mut n = 0;
        for i in 2..8 {
            n = (n << 6) | sextet(i)?;
        }
        (n, 8)
    };
    if n > MAX_ORDER as u64 {
        return Err(Error::OrderTooLarge(n as usize));
    }
    let n = n as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let body = &bytes[start..];
    if body.len() != nbits.div_ceil(6) {
        return Err(Error::MalformedGraph6(format!(
            "expected {} data bytes for order {n}, found {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in nbits..body.len() * 6 {
        if bit(k) {
            return Err(Error::MalformedGraph6("non-zero padding".into()));
        }
    }
    let mut adj = vec![Vec::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i].push(j);
                adj[j].push(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn k4_packs_to_c_tilde() {
        assert_eq!(encode_graph6(&named::complete(4)).unwrap(), "C~");
    }

    #[test]
    fn small_reference_string() {
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g).unwrap(), "DQc");
        assert_eq!(decode_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn petersen_round_trip() {
        let p = named::petersen();
        let s = encode_graph6(&p).unwrap();
        assert_eq!(decode_graph6(&s).unwrap(), p);
        assert_eq!(decode_graph6(&format!("{s}\n")).unwrap(), p);
        assert_eq!(decode_graph6(&format!(">>graph6<<{s}")).unwrap(), p);
    }

    #[test]
    fn long_header_round_trip() {
        let c = named::cycle(100);
        let s = encode_graph6(&c).unwrap();
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(decode_graph6(&s).unwrap(), c);
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["", "\n", "C", "C~~", "C~ ", "Ab"] {
            assert!(
                matches!(decode_graph6(bad), Err(Error::MalformedGraph6(_))),
                "{bad:?}"
            );
        }
        assert_eq!(decode_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn order_cap() {
        assert!(matches!(
            decode_graph6("~~?@????"),
            Err(Error::OrderTooLarge(_))
        ));
    }
}
