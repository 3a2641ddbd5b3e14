//! McKay's graph6 format.
//!
//! A record is `N(n) R(x)`: the order `n` (one byte for `n <= 62`, `~` plus
//! three bytes up to 258047, `~~` plus six bytes beyond), then the upper
//! triangle of the adjacency matrix in column order `(0,1), (0,2), (1,2),
//! (0,3), ...`, packed big-endian six bits per byte, each byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};
use crate::gf2::MAX_DIM;

pub const GRAPH6_HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;
const LONG: u8 = 126;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

fn push_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(LONG);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([LONG, LONG]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(8 + bits.div_ceil(6));
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adj.get(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 record. A leading `>>graph6<<` header and a trailing
/// line terminator are tolerated; error offsets count from the start of
/// `text`.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (start, body) = match trimmed.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    if let Some(pos) = body.iter().position(|b| !(BIAS..=LONG).contains(b)) {
        return Err(err(
            start + pos,
            format!("byte 0x{:02x} outside the graph6 range 63..=126", body[pos]),
        ));
    }
    if body.is_empty() {
        return Err(err(start, "empty record"));
    }

    let digits = |from: usize, count: usize| -> Result<usize> {
        let slice = body
            .get(from..from + count)
            .ok_or_else(|| err(start + body.len(), "truncated vertex count"))?;
        Ok(slice
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize))
    };
    let (n, header_len) = if body[0] != LONG {
        ((body[0] - BIAS) as usize, 1)
    } else if body.get(1) == Some(&LONG) {
        (digits(2, 6)?, 8)
    } else {
        (digits(1, 3)?, 4)
    };
    if n > MAX_DIM {
        return Err(Error::TooLarge {
            what: "graph order",
            n,
            cap: MAX_DIM,
        });
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() < expected {
        return Err(err(
            start + body.len(),
            format!(
                "truncated: expected {expected} data bytes for n = {n}, found {}",
                data.len()
            ),
        ));
    }
    if data.len() > expected {
        return Err(err(
            start + header_len + expected,
            "trailing bytes after record",
        ));
    }
    let pad = expected * 6 - bits;
    if let Some(&last) = data.last() {
        if pad > 0 && (last - BIAS) & ((1 << pad) - 1) != 0 {
            return Err(err(start + body.len() - 1, "nonzero padding bits"));
        }
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{all_graphs, random_graph};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    // Decodings below were produced by networkx's graph6 reader.
    #[test]
    fn reference_records() {
        assert_eq!(
            parse_graph6("A_").unwrap(),
            Graph::from_edges(2, [(0, 1)]).unwrap()
        );
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2));
        assert_eq!(
            parse_graph6("Bw").unwrap(),
            Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
        );
        assert_eq!(
            parse_graph6("Bg").unwrap(),
            Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
        );
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::from_edges(2, [(0, 1)]).unwrap()), "A_");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn header_and_newline_tolerated() {
        let g = parse_graph6(">>graph6<<Bw\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(parse_graph6("Bw\r\n").unwrap(), g);
    }

    #[test]
    fn malformed_records() {
        assert!(matches!(
            parse_graph6(""),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        assert!(matches!(
            parse_graph6("B"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("Bww"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(
            parse_graph6("B\x01"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6(">>graph6<<B "),
            Err(Error::Graph6 { offset: 11, .. })
        ));
        // n = 2 uses 1 bit, so the low five bits must be zero.
        assert!(matches!(
            parse_graph6("A`"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(parse_graph6("~?").is_err());
    }

    #[test]
    fn long_form_matches_reference() {
        let g6 = include_str!("../../tests/data/gnp70.g6");
        let edges = include_str!("../../tests/data/gnp70.edges");
        let g = parse_graph6(g6).unwrap();
        assert_eq!(g, Graph::parse_edge_list(edges).unwrap());
        assert_eq!(g.order(), 70);
        assert_eq!(to_graph6(&g), g6.trim_end());
    }

    #[test]
    fn long_form_boundaries() {
        for n in [62, 63, 64, 200] {
            let g = Graph::from_edges(n, [(0, n - 1)]).unwrap();
            let text = to_graph6(&g);
            assert_eq!(text.as_bytes()[0] == LONG, n > 62);
            assert_eq!(parse_graph6(&text).unwrap(), g);
        }
    }

    #[test]
    fn round_trip_all_small_graphs() {
        for n in 0..=6 {
            for g in all_graphs(n) {
                assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
            }
        }
    }

    #[test]
    fn round_trip_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..1000 {
            let n = rng.random_range(0..=40);
            let p = rng.random::<f64>();
            let g = random_graph(&mut rng, n, p);
            assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}
